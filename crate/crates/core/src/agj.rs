//! Auslander–Gruson–Jensen duality and the satellite calculus built on it.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fpmod::{cokernel_mor, kernel_mor, lift_syzygy, FpModule};
use crate::freyd::{
    cokernel_nat, evaluate, induced_nat, kernel_nat, tor1_with_inclusion, FpFunctor, InducedKind, Provenance,
};
use crate::ring::{factorize, Ring};

/// `DF = ker(− ⊗ X → − ⊗ Y)` for `F` of arrow `f: X → Y`, on the opposite
/// side.
pub fn dual(f: &FpFunctor) -> Result<FpFunctor> {
    let alpha = induced_nat(InducedKind::Tensor, f.arrow())?;
    let (k, _) = kernel_nat(&alpha)?;
    Ok(k.with_spec(f.spec().opposite()))
}

/// `S¹F = coker(Ext¹(Y, −) → Ext¹(X, −))`.
fn right_satellite(f: &FpFunctor) -> Result<FpFunctor> {
    let alpha = induced_nat(InducedKind::Ext1, f.arrow())?;
    let (c, _) = cokernel_nat(&alpha)?;
    Ok(keep_tags(c, f))
}

fn keep_tags(g: FpFunctor, like: &FpFunctor) -> FpFunctor {
    let g = g.with_spec(like.spec());
    if like.is_half_exact() {
        g.tagged(Provenance::Derived, true)
    } else {
        g
    }
}

/// `Sᵏ` for `k > 0`, `S₋ₖ = D Sᵏ D` for `k < 0`, identity for `k = 0`.
pub fn satellite(f: &FpFunctor, k: i32) -> Result<FpFunctor> {
    if k < 0 {
        let up = satellite(&dual(f)?, -k)?;
        return Ok(keep_tags(dual(&up)?, f));
    }
    let mut g = f.clone();
    for _ in 0..k {
        g = right_satellite(&g)?;
    }
    Ok(g)
}

/// `S₁F` computed directly from an injective copresentation
/// `0 → F → −⊗X → −⊗Y` as `ker(Tor₁(−, X) → − ⊗ ΩY)`.
pub fn left_satellite_direct(f: &FpFunctor) -> Result<FpFunctor> {
    let d = dual(f)?;
    let h = d.arrow();
    let (_, incl) = tor1_with_inclusion(h.src());
    let omega = lift_syzygy(h).omega;
    let push = induced_nat(InducedKind::Tensor, &omega)?;
    let composite = push.after(&incl)?;
    let (k, _) = kernel_nat(&composite)?;
    Ok(keep_tags(k, f))
}

/// The defect `w(F) = ker f`.
pub fn defect(f: &FpFunctor) -> FpModule {
    kernel_mor(f.arrow()).0
}

/// Modules `X, Y, Z` with `0 → F → −⊗X → −⊗Y → −⊗Z → 0` exact.
#[derive(Clone, Debug)]
pub struct InjectiveResolution {
    pub x: FpModule,
    pub y: FpModule,
    pub z: FpModule,
    /// The arrow of `DF`; `− ⊗ x → − ⊗ y` is induced by it.
    pub map: crate::fpmod::ModMorphism,
}

pub fn injective_resolution(f: &FpFunctor) -> Result<InjectiveResolution> {
    let d = dual(f)?;
    let z = cokernel_mor(d.arrow()).0.minimize().module;
    Ok(InjectiveResolution {
        x: d.x().clone(),
        y: d.y().clone(),
        z,
        map: d.arrow().clone(),
    })
}

/// `F` vanishes on projectives iff it vanishes at `R`.
pub fn is_projectively_stable(f: &FpFunctor) -> Result<bool> {
    Ok(evaluate(f, &FpModule::free(f.ring(), 1))?.is_zero())
}

/// The indecomposable injectives of a self-injective quotient `Z/n`: the
/// blocks `Z/p^e` with `p^e` exactly dividing `n`.
pub fn injective_blocks(ring: Ring) -> Result<Vec<FpModule>> {
    let Some(n) = ring.modulus() else {
        return Err(Error::Unsupported(format!(
            "{ring} has no nonzero finitely presented injectives"
        )));
    };
    Ok(factorize(&BigInt::from(n))
        .into_iter()
        .map(|(p, e)| {
            let q: BigInt = num_traits::pow(p, e as usize);
            FpModule::cyclic(ring, i64::try_from(q).expect("prime power divides a u64 modulus"))
        })
        .collect())
}

/// `F` vanishes on injectives. Over `Z` this is not decidable from
/// finitely presented test objects and reports `Unsupported`.
pub fn is_injectively_stable(f: &FpFunctor) -> Result<bool> {
    let blocks = injective_blocks(f.ring())?;
    let zero: Vec<bool> = blocks
        .par_iter()
        .map(|i| evaluate(f, i).map(|v| v.is_zero()))
        .collect::<Result<_>>()?;
    Ok(zero.into_iter().all(|z| z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GDimVerdict {
    /// All satellites up to the given depth are stable on both sides.
    UpToDepth(usize),
    /// The satellite of this index fails.
    Fails {
        index: i32,
        projectively_stable: bool,
        injectively_stable: bool,
    },
}

impl GDimVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, GDimVerdict::UpToDepth(_))
    }
}

/// Checks `S^{±k}F` for `0 ≤ k ≤ depth`, in the order `0, 1, −1, 2, −2, …`.
pub fn g_dim_zero(f: &FpFunctor, depth: usize) -> Result<GDimVerdict> {
    if f.ring().modulus().is_none() {
        return Err(Error::Unsupported(format!("{} is not self-injective", f.ring())));
    }
    let d = dual(f)?;
    let mut up = f.clone();
    let mut down_dual = d;
    for k in 0..=depth as i32 {
        if k > 0 {
            up = right_satellite(&up)?;
            down_dual = right_satellite(&down_dual)?;
        }
        let mut checks = vec![(k, up.clone())];
        if k > 0 {
            checks.push((-k, keep_tags(dual(&down_dual)?, f)));
        }
        for (index, g) in checks {
            let p = is_projectively_stable(&g)?;
            let i = is_injectively_stable(&g)?;
            if !(p && i) {
                return Ok(GDimVerdict::Fails {
                    index,
                    projectively_stable: p,
                    injectively_stable: i,
                });
            }
        }
    }
    Ok(GDimVerdict::UpToDepth(depth))
}
