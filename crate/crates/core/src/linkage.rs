//! Horizontal linkage of modules and functors.

use rayon::prelude::*;
use serde::Serialize;

use crate::agj::satellite;
use crate::error::Result;
use crate::fpmod::{cokernel_mor, stable_iso, stable_part, syzygy, transpose, FpModule, InvariantFactors};
use crate::freyd::{ext1_functor, iso_functors, Budget, FpFunctor, IsoDecision};
use crate::ring::{divisors, Ring};

/// `ΩTr M`.
pub fn omega_tr(m: &FpModule) -> FpModule {
    syzygy(&transpose(m))
}

#[derive(Clone, Debug)]
pub struct LinkageTrace {
    /// `M, Tr M, ΩTr M, TrΩTr M, ΩTrΩTr M`.
    pub chain: Vec<FpModule>,
    pub linked: bool,
}

impl LinkageTrace {
    pub fn invariant_factors(&self) -> Vec<InvariantFactors> {
        self.chain.iter().map(FpModule::invariant_factors).collect()
    }

    /// Both ends are stably zero (projective).
    pub fn stably_zero(&self) -> bool {
        stable_part(&self.chain[0]).is_empty() && stable_part(&self.chain[4]).is_empty()
    }
}

/// `M` is horizontally linked iff `M ≅ ΩTrΩTr M` in the stable category.
pub fn linked_module(m: &FpModule) -> Result<(bool, LinkageTrace)> {
    let tr = transpose(m);
    let otr = syzygy(&tr);
    let tr2 = transpose(&otr);
    let otr2 = syzygy(&tr2);
    let linked = stable_iso(m, &otr2)?;
    let chain = [m.clone(), tr, otr, tr2, otr2]
        .into_iter()
        .map(|x| x.minimize().module)
        .collect();
    Ok((linked, LinkageTrace { chain, linked }))
}

/// `coker` of the representing arrow; for `Ext¹(M, −)` in its canonical
/// presentation this is `M`.
pub fn candidate_module(f: &FpFunctor) -> FpModule {
    cokernel_mor(f.arrow()).0.minimize().module
}

/// `Some(M)` when `F ≅ Ext¹(M, −)` is confirmed for `M = candidate_module(F)`.
pub fn extension_recognize(f: &FpFunctor, budget: Budget, testbed: &[FpModule]) -> Result<Option<FpModule>> {
    let m = candidate_module(f);
    let e = ext1_functor(&m).with_side(f.side());
    Ok(iso_functors(f, &e, budget, testbed)?.is_yes().then_some(m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkageRoute {
    /// Recognized as `Ext¹(M, −)` and decided on `M`.
    Module,
    /// Compared with `S²S₋₂F` directly.
    Satellites,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl From<&IsoDecision> for Verdict {
    fn from(d: &IsoDecision) -> Self {
        match d {
            IsoDecision::Yes(_) => Verdict::Yes,
            IsoDecision::No(_) => Verdict::No,
            IsoDecision::Unknown { .. } => Verdict::Unknown,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FunctorLinkage {
    pub verdict: Verdict,
    pub route: LinkageRoute,
    /// The recognized `M` with its module-level trace (module route).
    pub module: Option<(FpModule, LinkageTrace)>,
    /// The comparison with `S²S₋₂F` (satellite route).
    pub comparison: Option<IsoDecision>,
}

/// Decides whether `F ≅ S²S₋₂F`. Extension functors `Ext¹(M, −)` are
/// linked exactly when `M` is, so recognized ones are decided on `M`.
pub fn linked_functor(f: &FpFunctor, budget: Budget, testbed: &[FpModule]) -> Result<FunctorLinkage> {
    if let Some(m) = extension_recognize(f, budget, testbed)? {
        let (linked, trace) = linked_module(&m)?;
        return Ok(FunctorLinkage {
            verdict: if linked { Verdict::Yes } else { Verdict::No },
            route: LinkageRoute::Module,
            module: Some((m, trace)),
            comparison: None,
        });
    }
    let back = satellite(&satellite(f, -2)?, 2)?;
    let decision = iso_functors(f, &back, budget, testbed)?;
    Ok(FunctorLinkage {
        verdict: Verdict::from(&decision),
        route: LinkageRoute::Satellites,
        module: None,
        comparison: Some(decision),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkageRow {
    pub d: u64,
    pub module: String,
    pub omega_tr: String,
    pub linked: bool,
    pub stably_zero: bool,
}

/// `linked_module(R/(d))` for every divisor `d` of `n`.
pub fn linkage_table(ring: Ring) -> Result<Vec<LinkageRow>> {
    let n = ring
        .modulus()
        .ok_or_else(|| crate::Error::Unsupported("linkage tables need a finite quotient Z/n".into()))?;
    divisors(n)
        .into_par_iter()
        .map(|d| {
            let m = FpModule::cyclic(ring, d as i64);
            let (linked, trace) = linked_module(&m)?;
            Ok(LinkageRow {
                d,
                module: m.to_string(),
                omega_tr: omega_tr(&m).to_string(),
                linked,
                stably_zero: trace.stably_zero(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::iso_modules;
    use crate::freyd::{rep_functor, tensor_functor};

    fn iso(a: &FpModule, b: &FpModule) -> bool {
        iso_modules(a, b).unwrap()
    }

    #[test]
    fn omega_tr_examples() {
        let z = Ring::Integers;
        assert!(iso(&omega_tr(&FpModule::cyclic(z, 4)), &FpModule::free(z, 1)));
        assert!(omega_tr(&FpModule::free(z, 2)).is_zero());
        let r8 = Ring::IntegersMod(8);
        assert!(iso(&omega_tr(&FpModule::cyclic(r8, 2)), &FpModule::cyclic(r8, 4)));
    }

    #[test]
    fn module_linkage_examples() {
        let r8 = Ring::IntegersMod(8);
        let (linked, trace) = linked_module(&FpModule::cyclic(r8, 2)).unwrap();
        assert!(linked);
        let expect = [2, 2, 4, 4, 2];
        for (m, d) in trace.chain.iter().zip(expect) {
            assert!(iso(m, &FpModule::cyclic(r8, d)), "{m} vs {d}");
        }
        let z = Ring::Integers;
        let (linked, trace) = linked_module(&FpModule::cyclic(z, 4)).unwrap();
        assert!(!linked);
        assert!(stable_part(&trace.chain[4]).is_empty());
        let (linked, trace) = linked_module(&FpModule::free(z, 1)).unwrap();
        assert!(linked && trace.stably_zero());
    }

    #[test]
    fn recognition_examples() {
        let z = Ring::Integers;
        let budget = Budget::default();
        let bed: Vec<FpModule> = [2, 4, 6].iter().map(|&d| FpModule::cyclic(z, d)).collect();
        let c4 = FpModule::cyclic(z, 4);
        assert!(iso(&candidate_module(&ext1_functor(&c4)), &c4));
        assert!(candidate_module(&rep_functor(&c4)).is_zero());
        let r8 = Ring::IntegersMod(8);
        assert!(iso(&candidate_module(&ext1_functor(&FpModule::cyclic(r8, 2))), &FpModule::cyclic(r8, 2)));

        let m = extension_recognize(&ext1_functor(&c4), budget, &bed).unwrap().unwrap();
        assert!(iso(&m, &c4));
        assert!(extension_recognize(&FpFunctor::zero(z), budget, &bed).unwrap().unwrap().is_zero());
        // −⊗ℤ/4 and Ext¹(ℤ/4, −) share the arrow (·4): ℤ → ℤ over ℤ.
        let m = extension_recognize(&tensor_functor(&c4), budget, &bed).unwrap();
        assert!(iso(&m.unwrap(), &c4));
    }

    #[test]
    fn functor_linkage_examples() {
        let budget = Budget::default();
        let r8 = Ring::IntegersMod(8);
        let bed8: Vec<FpModule> = [2, 4].iter().map(|&d| FpModule::cyclic(r8, d)).collect();
        let l = linked_functor(&ext1_functor(&FpModule::cyclic(r8, 2)), budget, &bed8).unwrap();
        assert_eq!(l.route, LinkageRoute::Module);
        assert_eq!(l.verdict, Verdict::Yes);

        let z = Ring::Integers;
        let bed: Vec<FpModule> = [2, 4, 6].iter().map(|&d| FpModule::cyclic(z, d)).collect();
        let l = linked_functor(&ext1_functor(&FpModule::cyclic(z, 4)), budget, &bed).unwrap();
        assert_eq!(l.verdict, Verdict::No);
        let l = linked_functor(&FpFunctor::zero(z), budget, &bed).unwrap();
        assert_eq!(l.verdict, Verdict::Yes);
    }

    #[test]
    fn table_over_z8() {
        let rows = linkage_table(Ring::IntegersMod(8)).unwrap();
        let ds: Vec<u64> = rows.iter().map(|r| r.d).collect();
        assert_eq!(ds, vec![1, 2, 4, 8]);
        assert!(rows.iter().all(|r| r.linked));
        assert!(rows[0].stably_zero && rows[3].stably_zero);
        assert!(!rows[1].stably_zero && !rows[2].stably_zero);
    }
}
