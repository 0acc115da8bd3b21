use serde_json::{json, Value};
use tfp_core::agj::{defect, dual, satellite};
use tfp_core::fpmod::{ext_value, is_projective, syzygy, tor_value, transpose, FpModule};
use tfp_core::freyd::{evaluate, FpFunctor, IsoDecision, NonIsoCertificate};
use tfp_core::json::{functor_from_json, functor_to_json, invariant_factors_to_json, module_from_json, module_to_json, ring_to_json};
use tfp_core::linkage::{linked_functor, linked_module, LinkageTrace};
use tfp_core::testkit::Testbed;
use tfp_core::{Error, Ring};

use crate::{error_kind, ring_of, FunctorOp, ModuleOp, Opts};

pub struct Ctx {
    pub default_ring: Ring,
    pub opts: Opts,
    pub testbed: Option<Value>,
}

impl Ctx {
    fn testbed(&self, ring: Ring) -> Result<Testbed, Error> {
        match &self.testbed {
            None => Ok(Testbed::standard(ring, self.opts.seed)),
            Some(Value::Array(mods)) => {
                let mods = mods.iter().map(|m| module_from_json(ring, m)).collect::<Result<_, _>>()?;
                Testbed::new(ring, mods)
            }
            Some(_) => Err(Error::Schema("testbed must be a list of modules".into())),
        }
    }
}

pub struct Item {
    pub json: Value,
    pub text: String,
    /// False when the item ran but reports a failed check.
    pub ok: bool,
}

pub struct ItemError {
    pub input: Value,
    pub kind: &'static str,
    pub message: String,
}

fn wrap(input: &Value, r: Result<Item, Error>) -> Result<Item, ItemError> {
    r.map_err(|e| ItemError {
        input: input.clone(),
        kind: error_kind(&e),
        message: e.to_string(),
    })
}

fn summary(m: &FpModule) -> Value {
    let f = m.invariant_factors();
    json!({
        "presentation": module_to_json(m),
        "invariant_factors": invariant_factors_to_json(&f),
        "chain": f.chain(),
    })
}

fn required<'a>(item: &'a Value, key: &str) -> Result<&'a Value, Error> {
    item.get(key).ok_or_else(|| Error::Schema(format!("item needs a `{key}` field")))
}

/// The module of an item: its `module` field, or the item itself.
fn item_module(ring: Ring, item: &Value) -> Result<FpModule, Error> {
    match item.get("module") {
        Some(m) => module_from_json(ring, m),
        None if item.get("gens").is_some() => module_from_json(ring, item),
        None => Err(Error::Schema("item needs a `module` field".into())),
    }
}

fn trace_json(trace: &LinkageTrace) -> Value {
    Value::Array(trace.chain.iter().map(summary).collect())
}

fn trace_text(trace: &LinkageTrace) -> String {
    trace.chain.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" → ")
}

pub fn module(ctx: &Ctx, op: ModuleOp, item: &Value) -> Result<Item, ItemError> {
    wrap(item, (|| {
        let ring = ring_of(item, ctx.default_ring)?;
        let m = item_module(ring, item)?;
        let (result, text) = match op {
            ModuleOp::Info => {
                let f = m.invariant_factors();
                let mut s = summary(&m);
                s["free_rank"] = json!(f.free_rank());
                s["projective"] = json!(is_projective(&m));
                s["minimal"] = module_to_json(&m.minimize().module);
                let text = format!(
                    "{m} over {ring}: free rank {}, projective {}",
                    f.free_rank(),
                    is_projective(&m)
                );
                (s, text)
            }
            ModuleOp::Tr => {
                let t = transpose(&m);
                (json!({"transpose": summary(&t)}), format!("Tr({m}) = {t}"))
            }
            ModuleOp::Syzygy => {
                let o = syzygy(&m);
                (json!({"syzygy": summary(&o)}), format!("Ω({m}) = {o}"))
            }
            ModuleOp::Linked => {
                let (linked, trace) = linked_module(&m)?;
                let r = json!({
                    "linked": linked,
                    "stably_zero": trace.stably_zero(),
                    "trace": trace_json(&trace),
                });
                (r, format!("{m} linked: {linked} ({})", trace_text(&trace)))
            }
        };
        Ok(Item {
            json: json!({"input": item, "ring": ring_to_json(ring), "module": summary(&m), "result": result}),
            text,
            ok: true,
        })
    })())
}

pub fn ext_tor(ctx: &Ctx, ext: bool, n: usize, item: &Value) -> Result<Item, ItemError> {
    wrap(item, (|| {
        let ring = ring_of(item, ctx.default_ring)?;
        let m = module_from_json(ring, required(item, "M")?)?;
        let x = module_from_json(ring, required(item, "N")?)?;
        let (name, value) = if ext {
            ("Ext", ext_value(n, &m, &x)?)
        } else {
            ("Tor", tor_value(n, &m, &x)?)
        };
        Ok(Item {
            json: json!({"input": item, "ring": ring_to_json(ring), "n": n, "value": summary(&value)}),
            text: format!("{name}^{n}({m}, {x}) = {value}"),
            ok: true,
        })
    })())
}

fn values_on(f: &FpFunctor, bed: &Testbed) -> Result<Value, Error> {
    let vals = bed
        .modules()
        .iter()
        .map(|a| {
            let v = evaluate(f, a)?;
            Ok(json!({"at": summary(a), "value": invariant_factors_to_json(&v.invariant_factors())}))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Value::Array(vals))
}

fn values_text(f: &FpFunctor, bed: &Testbed) -> Result<String, Error> {
    let parts = bed
        .modules()
        .iter()
        .map(|a| Ok(format!("{a} ↦ {}", evaluate(f, a)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(parts.join(", "))
}

fn side_name(f: &FpFunctor) -> String {
    format!("{:?}", f.side()).to_lowercase()
}

fn certificate_json(c: &NonIsoCertificate) -> Value {
    match c {
        NonIsoCertificate::Evaluation { module, lhs, rhs } => json!({
            "kind": "evaluation",
            "at": summary(module),
            "lhs": invariant_factors_to_json(lhs),
            "rhs": invariant_factors_to_json(rhs),
        }),
        NonIsoCertificate::NatGroups { nat_fg, nat_ff } => json!({
            "kind": "nat_groups",
            "nat_fg": invariant_factors_to_json(nat_fg),
            "nat_ff": invariant_factors_to_json(nat_ff),
        }),
    }
}

pub fn functor(ctx: &Ctx, op: FunctorOp, k: i32, item: &Value) -> Result<Item, ItemError> {
    wrap(item, (|| {
        let ring = ring_of(item, ctx.default_ring)?;
        let f = functor_from_json(ring, required(item, "functor")?)?;
        let derived = |g: FpFunctor, label: String| -> Result<(Value, String), Error> {
            let bed = ctx.testbed(ring)?;
            let r = json!({
                "functor": functor_to_json(&g),
                "side": side_name(&g),
                "values": values_on(&g, &bed)?,
            });
            Ok((r, format!("{label}: {}", values_text(&g, &bed)?)))
        };
        let (result, text) = match op {
            FunctorOp::Eval => {
                let a = module_from_json(ring, required(item, "at")?)?;
                let v = evaluate(&f, &a)?;
                (json!({"at": summary(&a), "value": summary(&v)}), format!("F({a}) = {v}"))
            }
            FunctorOp::Dual => derived(dual(&f)?, "DF".into())?,
            FunctorOp::Satellite => derived(satellite(&f, k)?, format!("S[{k}]F"))?,
            FunctorOp::Defect => {
                let w = defect(&f);
                (json!({"defect": summary(&w)}), format!("w(F) = {w}"))
            }
            FunctorOp::Linked => {
                let bed = ctx.testbed(ring)?;
                let l = linked_functor(&f, ctx.opts.budget(), bed.modules())?;
                let mut r = json!({"verdict": l.verdict, "route": l.route});
                let mut text = format!("linked: {:?} via {:?}", l.verdict, l.route).to_lowercase();
                if let Some((m, trace)) = &l.module {
                    r["module"] = summary(m);
                    r["trace"] = trace_json(trace);
                    text.push_str(&format!(" (Ext¹({m}, −); {})", trace_text(trace)));
                }
                match &l.comparison {
                    Some(IsoDecision::No(c)) => r["certificate"] = certificate_json(c),
                    Some(IsoDecision::Unknown { candidates_tried }) => r["candidates_tried"] = json!(candidates_tried),
                    _ => {}
                }
                (r, text)
            }
        };
        Ok(Item {
            json: json!({"input": item, "ring": ring_to_json(ring), "functor": functor_to_json(&f), "result": result}),
            text,
            ok: true,
        })
    })())
}

pub fn linkage_table(ctx: &Ctx) -> Result<Item, ItemError> {
    let input = json!({"ring": ring_to_json(ctx.default_ring)});
    wrap(&input, (|| {
        let rows = tfp_core::linkage::linkage_table(ctx.default_ring)?;
        let text = rows
            .iter()
            .map(|r| {
                format!(
                    "d={:<4} M={:<6} ΩTr M={:<6} linked={:<5} stably_zero={}",
                    r.d, r.module, r.omega_tr, r.linked, r.stably_zero
                )
            })
            .collect::<Vec<_>>()
            .join("\n");
        Ok(Item {
            json: json!({"ring": ring_to_json(ctx.default_ring), "rows": rows}),
            text,
            ok: true,
        })
    })())
}

pub fn selftest(ctx: &Ctx, samples: usize) -> Result<Item, ItemError> {
    let ring = ctx.default_ring;
    let input = json!({"ring": ring_to_json(ring), "seed": ctx.opts.seed, "samples": samples});
    wrap(&input, (|| {
        let bed = match ctx.testbed {
            Some(_) => Some(ctx.testbed(ring)?),
            None => None,
        };
        let report = tfp_core::selftest::selftest(ring, ctx.opts.seed, ctx.opts.budget(), samples, bed)?;
        let text = report
            .suites
            .iter()
            .map(|s| {
                let tag = if s.failed == 0 { "PASS" } else { "FAIL" };
                let mut line = format!(
                    "[{tag}] {}: {} passed, {} failed, {} skipped",
                    s.name, s.passed, s.failed, s.skipped
                );
                for f in &s.failures {
                    line.push_str(&format!("\n    {f}"));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n");
        Ok(Item {
            ok: report.ok(),
            json: serde_json::to_value(&report).expect("serializable"),
            text,
        })
    })())
}
