//! Property suites run by `tfp selftest`.
//!
//! Every check is a sound statement about the library: a failure is a bug.
//! Isomorphism searches that come back `Unknown` are counted as skipped.

use rayon::prelude::*;
use serde::Serialize;

use crate::agj::{defect, dual, g_dim_zero, left_satellite_direct, satellite};
use crate::error::Result;
use crate::fpmod::{is_projective, iso_modules, syzygy, FpModule};
use crate::freyd::{
    evaluate, ext1_functor, iso_functors, nat_hom, rep_functor, tensor_functor, tor1_functor, Budget, FpFunctor,
    IsoDecision,
};
use crate::linkage::{linked_functor, linked_module, Verdict};
use crate::ring::Ring;
use crate::testkit::{check_objectwise, four_term_exact_at, random_functor, random_nat, Testbed};

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(what());
        }
    }

    fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub ring: String,
    pub seed: u64,
    pub suites: Vec<SuiteOutcome>,
}

impl SelftestReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::ok)
    }
}

struct Ctx {
    ring: Ring,
    seed: u64,
    budget: Budget,
    bed: Testbed,
    samples: usize,
}

impl Ctx {
    fn functors(&self) -> Vec<FpFunctor> {
        (0..self.samples as u64)
            .map(|i| random_functor(self.ring, self.seed.wrapping_mul(1000).wrapping_add(i)))
            .collect()
    }

    fn agree(&self, f: &FpFunctor, g: &FpFunctor) -> Result<bool> {
        Ok(check_objectwise(f, g, &self.bed)?.all_agree())
    }
}

type Suite = fn(&Ctx) -> Result<SuiteOutcome>;

const SUITES: [Suite; 9] = [
    exactness,
    involution,
    bridges,
    satellites,
    anticommutation,
    defects,
    yoneda,
    linkage,
    g_dimension,
];

/// Runs every suite. `samples` random instances are drawn per randomized
/// suite.
pub fn selftest(ring: Ring, seed: u64, budget: Budget, samples: usize, testbed: Option<Testbed>) -> Result<SelftestReport> {
    let ctx = Ctx {
        ring,
        seed,
        budget,
        bed: testbed.unwrap_or_else(|| Testbed::standard(ring, seed)),
        samples,
    };
    let suites = SUITES.par_iter().map(|s| s(&ctx)).collect::<Result<_>>()?;
    Ok(SelftestReport {
        ring: ring.to_string(),
        seed,
        suites,
    })
}

fn exactness(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("exactness");
    for i in 0..ctx.samples as u64 {
        let alpha = random_nat(ctx.ring, ctx.seed.wrapping_mul(1000).wrapping_add(i));
        for a in ctx.bed.modules() {
            let spot = four_term_exact_at(&alpha, a)?;
            out.record(spot.is_none(), || format!("sample {i} at {a}: {}", spot.unwrap_or_default()));
        }
    }
    Ok(out)
}

fn constructor_functors(ctx: &Ctx) -> Vec<(String, FpFunctor)> {
    ctx.bed
        .modules()
        .iter()
        .flat_map(|m| {
            [
                (format!("rep({m})"), rep_functor(m)),
                (format!("tensor({m})"), tensor_functor(m)),
                (format!("ext1({m})"), ext1_functor(m)),
            ]
        })
        .collect()
}

fn involution(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("involution");
    let mut cases = constructor_functors(ctx);
    cases.extend(ctx.functors().into_iter().enumerate().map(|(i, f)| (format!("random #{i}"), f)));
    for (name, f) in cases {
        let dd = dual(&dual(&f)?)?;
        out.record(ctx.agree(&dd, &f)?, || format!("DD{name} differs objectwise"));
        match iso_functors(&dd, &f, ctx.budget, ctx.bed.modules())? {
            IsoDecision::Yes(_) => out.passed += 1,
            IsoDecision::No(c) => out.record(false, || format!("DD{name}: refuted by {c:?}")),
            IsoDecision::Unknown { .. } => out.skipped += 1,
        }
    }
    Ok(out)
}

fn bridges(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("agj-bridges");
    for m in ctx.bed.modules() {
        let pairs = [
            ("D rep ≍ tensor", dual(&rep_functor(m))?, tensor_functor(m)),
            ("D tensor ≍ rep", dual(&tensor_functor(m))?, rep_functor(m)),
            ("D ext1 ≍ tor1", dual(&ext1_functor(m))?, tor1_functor(m)),
            ("D tor1 ≍ ext1", dual(&tor1_functor(m))?, ext1_functor(m)),
        ];
        for (what, f, g) in pairs {
            out.record(ctx.agree(&f, &g)?, || format!("{what} fails for M = {m}"));
        }
    }
    Ok(out)
}

fn satellites(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("satellites");
    for m in ctx.bed.modules() {
        let s_rep = satellite(&rep_functor(m), 1)?;
        out.record(ctx.agree(&s_rep, &ext1_functor(m))?, || format!("S¹ rep({m}) ≭ ext1"));
        let s_tensor = satellite(&tensor_functor(m), -1)?;
        out.record(ctx.agree(&s_tensor, &tor1_functor(m))?, || format!("S₋₁ tensor({m}) ≭ tor1"));
        let direct = left_satellite_direct(&tensor_functor(m))?;
        out.record(ctx.agree(&direct, &s_tensor)?, || format!("direct S₁ tensor({m}) disagrees"));
        let s_ext = satellite(&ext1_functor(m), 1)?;
        out.record(ctx.agree(&s_ext, &ext1_functor(&syzygy(m)))?, || format!("S¹ ext1({m}) ≭ ext1(Ω)"));
    }
    Ok(out)
}

fn anticommutation(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("anticommutation");
    for (i, f) in ctx.functors().iter().enumerate() {
        let d = dual(f)?;
        let l = dual(&satellite(f, 1)?)?;
        let r = satellite(&d, -1)?;
        out.record(ctx.agree(&l, &r)?, || format!("random #{i}: D S¹ ≭ S₋₁ D"));
        let l = dual(&satellite(f, -1)?)?;
        let r = satellite(&d, 1)?;
        out.record(ctx.agree(&l, &r)?, || format!("random #{i}: D S₋₁ ≭ S¹ D"));
    }
    Ok(out)
}

fn defects(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("defect");
    let r = FpModule::free(ctx.ring, 1);
    for (i, f) in ctx.functors().iter().enumerate() {
        let d = dual(f)?;
        out.record(iso_modules(&defect(f), &evaluate(&d, &r)?)?, || format!("random #{i}: w(F) ≇ DF(R)"));
        out.record(iso_modules(&defect(&d), &evaluate(f, &r)?)?, || format!("random #{i}: w(DF) ≇ F(R)"));
    }
    Ok(out)
}

fn yoneda(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("yoneda");
    let gs = ctx.functors();
    for x in ctx.bed.modules() {
        for (i, g) in gs.iter().enumerate().take(4) {
            let n = nat_hom(&rep_functor(x), g)?;
            out.record(iso_modules(n.module(), &evaluate(g, x)?)?, || format!("Nat(rep({x}), #{i}) ≇ G({x})"));
        }
    }
    Ok(out)
}

fn linkage(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("linkage");
    for m in ctx.bed.modules() {
        let (linked, _) = linked_module(m)?;
        if ctx.ring == Ring::Integers {
            out.record(linked == is_projective(m), || format!("{m}: linked = {linked} over a hereditary ring"));
        }
        let l = linked_functor(&ext1_functor(m), ctx.budget, ctx.bed.modules())?;
        match l.verdict {
            Verdict::Unknown => out.skipped += 1,
            v => out.record((v == Verdict::Yes) == linked, || format!("{m}: module and functor linkage disagree")),
        }
    }
    Ok(out)
}

fn g_dimension(ctx: &Ctx) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("g-dimension");
    if ctx.ring.modulus().is_none() {
        out.skipped += 1;
        return Ok(out);
    }
    let mut cases: Vec<FpFunctor> = ctx.bed.modules().iter().map(ext1_functor).collect();
    cases.extend(ctx.functors());
    for (i, f) in cases.iter().enumerate() {
        if g_dim_zero(f, 3)?.holds() {
            let l = linked_functor(f, ctx.budget, ctx.bed.modules())?;
            out.record(l.verdict != Verdict::No, || format!("case #{i}: G-dimension zero but not linked"));
        } else {
            out.skipped += 1;
        }
    }
    Ok(out)
}
