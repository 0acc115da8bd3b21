use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use tfp_core::freyd::Budget;
use tfp_core::json::parse_ring;
use tfp_core::{Error, Ring};

mod commands;

use commands::{Item, ItemError};

#[derive(Parser, Debug)]
#[command(name = "tfp", version, about = "Finitely presented modules and functors over Z, Z/n and GF(p)")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Default ring for items without a "ring" field: Z, Zmod:N or GFp:P.
    #[arg(long, default_value = "Z", global = true)]
    ring: String,
    /// Largest coefficient tried when searching for isomorphisms.
    #[arg(long, default_value_t = 2, global = true)]
    pub budget: u32,
    /// Seed for random instances.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// JSON list of modules to use as the test bed instead of the default.
    #[arg(long, global = true)]
    pub testbed: Option<PathBuf>,
}

impl Opts {
    pub fn budget(&self) -> Budget {
        Budget {
            coefficient_bound: self.budget,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Module analysis.
    Module {
        #[arg(value_enum)]
        op: ModuleOp,
        /// JSON file, or `-` for stdin.
        input: String,
    },
    /// Extⁿ(M, N) for items {"M": module, "N": module}.
    Ext {
        #[arg(long, default_value_t = 1)]
        n: usize,
        input: String,
    },
    /// Torₙ(M, N) for items {"M": module, "N": module}.
    Tor {
        #[arg(long, default_value_t = 1)]
        n: usize,
        input: String,
    },
    /// Operations on functors, items {"functor": ..., "at": module}.
    Functor {
        #[arg(value_enum)]
        op: FunctorOp,
        /// Satellite index: positive for Sᵏ, negative for S₋ₖ.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i32,
        input: String,
    },
    /// Linkage of R/(d) for every divisor d of n.
    LinkageTable,
    /// Runs the property suites.
    Selftest {
        /// Random instances per randomized suite.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleOp {
    Info,
    Tr,
    Syzygy,
    Linked,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctorOp {
    Eval,
    Dual,
    Satellite,
    Defect,
    Linked,
}

fn read_input(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))
    }
}

fn parse_items(text: &str) -> Result<Vec<Value>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    Ok(match v {
        Value::Array(items) => items,
        other => vec![other],
    })
}

fn emit(format: Format, outputs: &[Result<Item, ItemError>]) {
    match format {
        Format::Json => {
            let arr: Vec<Value> = outputs
                .iter()
                .map(|o| match o {
                    Ok(item) => item.json.clone(),
                    Err(e) => json!({"input": e.input, "error": e.kind, "message": e.message}),
                })
                .collect();
            let doc = if arr.len() == 1 { arr[0].clone() } else { Value::Array(arr) };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            for o in outputs {
                match o {
                    Ok(item) => println!("{}", item.text),
                    Err(e) => println!("{}: {}", e.kind, e.message),
                }
            }
        }
    }
}

fn exit_for(outputs: &[Result<Item, ItemError>]) -> ExitCode {
    let mut code = 0;
    for o in outputs {
        match o {
            Ok(item) if !item.ok => code = code.max(1),
            Err(e) if e.kind == "schema" => code = 2,
            Err(e) if e.kind == "error" => code = code.max(1),
            _ => {}
        }
    }
    ExitCode::from(code)
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("tfp: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ring = match parse_ring(&cli.opts.ring) {
        Ok(r) => r,
        Err(e) => return fail(2, &e.to_string()),
    };
    let testbed = match &cli.opts.testbed {
        None => None,
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|t| serde_json::from_str::<Value>(&t).map_err(|e| format!("malformed testbed: {e}")))
        {
            Ok(v) => Some(v),
            Err(e) => return fail(2, &e),
        },
    };
    let ctx = commands::Ctx {
        default_ring: ring,
        opts: cli.opts.clone(),
        testbed,
    };

    let single = |out: Result<Item, ItemError>| {
        let outs = vec![out];
        emit(cli.opts.format, &outs);
        exit_for(&outs)
    };
    match &cli.command {
        Command::LinkageTable => return single(commands::linkage_table(&ctx)),
        Command::Selftest { samples } => return single(commands::selftest(&ctx, *samples)),
        _ => {}
    }

    let input = match &cli.command {
        Command::Module { input, .. } | Command::Ext { input, .. } | Command::Tor { input, .. } | Command::Functor { input, .. } => input,
        _ => unreachable!("handled above"),
    };
    let items = match read_input(input).and_then(|t| parse_items(&t)) {
        Ok(items) => items,
        Err(e) => return fail(2, &e),
    };
    let outputs: Vec<Result<Item, ItemError>> = items
        .par_iter()
        .map(|item| match &cli.command {
            Command::Module { op, .. } => commands::module(&ctx, *op, item),
            Command::Ext { n, .. } => commands::ext_tor(&ctx, true, *n, item),
            Command::Tor { n, .. } => commands::ext_tor(&ctx, false, *n, item),
            Command::Functor { op, k, .. } => commands::functor(&ctx, *op, *k, item),
            _ => unreachable!("handled above"),
        })
        .collect();
    emit(cli.opts.format, &outputs);
    exit_for(&outputs)
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Schema(_) => "schema",
        Error::Unsupported(_) => "unsupported",
        _ => "error",
    }
}

pub fn ring_of(item: &Value, default: Ring) -> Result<Ring, Error> {
    match item.get("ring") {
        Some(r) => tfp_core::json::ring_from_json(r),
        None => Ok(default),
    }
}
