//! Seeded random instances and the objectwise comparison of functors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{ensure_same_ring, Error, Result};
use crate::fpmod::{cokernel_mor, direct_sum, hom_module, homology, iso_modules, kernel_mor, validate_morphism, FpModule, InvariantFactors, ModMorphism};
use crate::freyd::{cokernel_nat, evaluate, evaluate_nat, is_zero_functor, kernel_nat, FpFunctor, NatMor};
use crate::ring::{divisors, Mat, Ring};

/// A finite list of test modules; always contains `R` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Testbed {
    ring: Ring,
    modules: Vec<FpModule>,
}

impl Testbed {
    pub fn new(ring: Ring, modules: Vec<FpModule>) -> Result<Self> {
        for m in &modules {
            ensure_same_ring(ring, m.ring())?;
        }
        let free = FpModule::free(ring, 1);
        let mut all = vec![free.clone()];
        all.extend(modules.into_iter().filter(|m| m != &free));
        Ok(Testbed { ring, modules: all })
    }

    /// The standard testbed: small cyclic modules, a mixed sum and two
    /// seeded random `2×3` presentations.
    pub fn standard(ring: Ring, seed: u64) -> Self {
        let mut modules = match ring {
            Ring::Integers => {
                let mut v: Vec<FpModule> = [2, 3, 4, 6, 8, 9].iter().map(|&d| FpModule::cyclic(ring, d)).collect();
                v.push(FpModule::diagonal(ring, &[2, 3]));
                v
            }
            _ => {
                let n = ring.modulus().expect("quotient ring");
                divisors(n)
                    .into_iter()
                    .filter(|&d| d != 1 && d != n)
                    .map(|d| FpModule::cyclic(ring, d as i64))
                    .collect()
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = entry_bound(ring);
        // Over Z/n, entries are multiples of the smallest prime of n so that
        // the random modules do not collapse to zero.
        let scale: i64 = match ring.modulus() {
            Some(n) => (2..=n as i64).find(|p| n as i64 % p == 0).unwrap_or(1),
            None => 1,
        };
        for _ in 0..2 {
            let rel = Mat::from_fn(ring, 2, 3, |_, _| (scale * rng.gen_range(-bound..=bound)).into());
            modules.push(FpModule::from_rel(rel));
        }
        Testbed::new(ring, modules).expect("same ring")
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn modules(&self) -> &[FpModule] {
        &self.modules
    }
}

fn entry_bound(ring: Ring) -> i64 {
    match ring.modulus() {
        Some(n) => (n as i64 - 1).min(4),
        None => 4,
    }
}

fn module_from_rng(rng: &mut ChaCha8Rng, ring: Ring, max_g: usize, max_r: usize, bound: i64) -> FpModule {
    let g = rng.gen_range(0..=max_g);
    let r = rng.gen_range(0..=max_r);
    FpModule::from_rel(Mat::from_fn(ring, g, r, |_, _| rng.gen_range(-bound..=bound).into()))
}

/// A module on at most `max_g` generators and `max_r` relations with
/// entries in `[−bound, bound]` (reduced for quotient rings).
pub fn random_module(ring: Ring, seed: u64, max_g: usize, max_r: usize, bound: u64) -> FpModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    module_from_rng(&mut rng, ring, max_g, max_r, bound as i64)
}

/// A random map `src → tgt`: raw matrices are tried first, then a random
/// combination of generators of `Hom(src, tgt)`.
fn map_from_rng(rng: &mut ChaCha8Rng, src: &FpModule, tgt: &FpModule, bound: i64) -> ModMorphism {
    let ring = src.ring();
    for _ in 0..4 {
        let phi = Mat::from_fn(ring, tgt.gens(), src.gens(), |_, _| rng.gen_range(-bound..=bound).into());
        if let Ok(Some(m)) = validate_morphism(src, tgt, &phi) {
            return m;
        }
    }
    let hom = hom_module(src, tgt).expect("same ring");
    let coeffs = Mat::from_fn(ring, hom.num_generators(), 1, |_, _| rng.gen_range(-bound..=bound).into());
    hom.materialize(&coeffs).expect("combinations of Hom generators are maps")
}

fn functor_from_rng(rng: &mut ChaCha8Rng, ring: Ring) -> FpFunctor {
    let bound = entry_bound(ring);
    let mut attempt = || {
        let g = rng.gen_range(1..=2);
        let r = rng.gen_range(1..=2);
        let x = FpModule::from_rel(Mat::from_fn(ring, g, r, |_, _| rng.gen_range(-bound..=bound).into()));
        let y = module_from_rng(rng, ring, 2, 2, bound);
        FpFunctor::from_arrow(map_from_rng(rng, &x, &y, bound))
    };
    // Split monomorphisms give the zero functor; keep a few retries so that
    // most samples are interesting.
    let mut f = attempt();
    for _ in 0..3 {
        if !is_zero_functor(&f).expect("same ring") {
            break;
        }
        f = attempt();
    }
    f
}

/// A functor whose arrow joins two small random modules.
pub fn random_functor(ring: Ring, seed: u64) -> FpFunctor {
    functor_from_rng(&mut ChaCha8Rng::seed_from_u64(seed), ring)
}

/// A random `α: F → G`. `G` has arrow `(f∘u; h): X' → Y ⊕ Z`, so
/// `(u, projection)` is natural by construction.
pub fn random_nat(ring: Ring, seed: u64) -> NatMor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = entry_bound(ring);
    let f = functor_from_rng(&mut rng, ring);
    let x2 = module_from_rng(&mut rng, ring, 2, 2, bound);
    let z = module_from_rng(&mut rng, ring, 1, 1, bound);
    let u = map_from_rng(&mut rng, &x2, f.x(), bound);
    let h = map_from_rng(&mut rng, &x2, &z, bound);
    let fu = f.arrow().after(&u).expect("composable");
    let yz = direct_sum(f.y(), &z).expect("same ring");
    let g = ModMorphism::new(x2, yz.clone(), fu.phi().vstack(h.phi())).expect("stacked maps");
    let g = FpFunctor::from_arrow(g);
    let ny = f.y().gens();
    let pr = Mat::identity(ring, ny).hstack(&Mat::zeros(ring, ny, z.gens()));
    let v = ModMorphism::new(yz, f.y().clone(), pr).expect("projection");
    NatMor::new(f, g, u, v).expect("natural by construction")
}

#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub module: FpModule,
    pub lhs: InvariantFactors,
    pub rhs: InvariantFactors,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn all_agree(&self) -> bool {
        self.entries.iter().all(|e| e.agree)
    }

    pub fn first_disagreement(&self) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| !e.agree)
    }
}

/// Compares `F(A)` and `G(A)` for every `A` in the testbed.
pub fn check_objectwise(f: &FpFunctor, g: &FpFunctor, testbed: &Testbed) -> Result<Report> {
    ensure_same_ring(f.ring(), g.ring())?;
    if f.ring() != testbed.ring() {
        return Err(Error::RingMismatch(f.ring(), testbed.ring()));
    }
    let entries = testbed
        .modules()
        .par_iter()
        .map(|a| {
            let (l, r) = (evaluate(f, a)?, evaluate(g, a)?);
            Ok(ReportEntry {
                module: a.clone(),
                agree: iso_modules(&l, &r)?,
                lhs: l.invariant_factors(),
                rhs: r.invariant_factors(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Report { entries })
}

/// Checks that `0 → K(A) → F(A) → G(A) → C(A) → 0` built from
/// [`kernel_nat`] and [`cokernel_nat`] of `α` is exact. Returns the first
/// failing spot, if any.
pub fn four_term_exact_at(alpha: &NatMor, a: &FpModule) -> Result<Option<&'static str>> {
    let (_, incl) = kernel_nat(alpha)?;
    let (_, proj) = cokernel_nat(alpha)?;
    let k = evaluate_nat(&incl, a)?;
    let m = evaluate_nat(alpha, a)?;
    let p = evaluate_nat(&proj, a)?;
    if !kernel_mor(&k).0.is_zero() {
        return Ok(Some("K(A) → F(A) is not injective"));
    }
    if !m.after(&k)?.is_zero() || !p.after(&m)?.is_zero() {
        return Ok(Some("composite is nonzero"));
    }
    if !homology(&k, &m)?.is_zero() {
        return Ok(Some("not exact at F(A)"));
    }
    if !homology(&m, &p)?.is_zero() {
        return Ok(Some("not exact at G(A)"));
    }
    if !cokernel_mor(&p).0.is_zero() {
        return Ok(Some("G(A) → C(A) is not surjective"));
    }
    Ok(None)
}
