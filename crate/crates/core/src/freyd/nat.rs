use std::fmt;

use num_bigint::BigInt;

use super::{ext1_functor, rep_functor, tensor_functor, FpFunctor};
use crate::error::{Error, Result};
use crate::fpmod::{lift_syzygy, FpModule, ModMorphism};

/// A natural transformation `F → G` between functors of arrows
/// `f: X → Y` and `g: X' → Y'`, given by `u: X' → X`, `v: Y' → Y` with
/// `f∘u = v∘g`. At `A` it sends `[x] ↦ [x∘u]`.
#[derive(Clone)]
pub struct NatMor {
    src: FpFunctor,
    tgt: FpFunctor,
    u: ModMorphism,
    v: ModMorphism,
}

impl NatMor {
    pub fn new(src: FpFunctor, tgt: FpFunctor, u: ModMorphism, v: ModMorphism) -> Result<Self> {
        if u.src() != tgt.x() || u.tgt() != src.x() || v.src() != tgt.y() || v.tgt() != src.y() {
            return Err(Error::Dimension("natural transformation components have wrong ends".into()));
        }
        let lhs = src.arrow().after(&u)?;
        let rhs = v.after(tgt.arrow())?;
        if !lhs.equals(&rhs)? {
            return Err(Error::IllDefined("pair does not satisfy f∘u = v∘g".into()));
        }
        Ok(NatMor { src, tgt, u, v })
    }

    pub fn identity(f: &FpFunctor) -> Self {
        NatMor {
            src: f.clone(),
            tgt: f.clone(),
            u: ModMorphism::identity(f.x()),
            v: ModMorphism::identity(f.y()),
        }
    }

    pub fn zero(src: &FpFunctor, tgt: &FpFunctor) -> Self {
        NatMor {
            src: src.clone(),
            tgt: tgt.clone(),
            u: ModMorphism::zero(tgt.x(), src.x()),
            v: ModMorphism::zero(tgt.y(), src.y()),
        }
    }

    pub fn src(&self) -> &FpFunctor {
        &self.src
    }

    pub fn tgt(&self) -> &FpFunctor {
        &self.tgt
    }

    pub fn u(&self) -> &ModMorphism {
        &self.u
    }

    pub fn v(&self) -> &ModMorphism {
        &self.v
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &NatMor) -> Result<NatMor> {
        if !first.tgt.same_arrow(&self.src) {
            return Err(Error::Dimension("composition of non-composable transformations".into()));
        }
        Ok(NatMor {
            src: first.src.clone(),
            tgt: self.tgt.clone(),
            u: first.u.after(&self.u)?,
            v: first.v.after(&self.v)?,
        })
    }

    pub fn add(&self, other: &NatMor) -> Result<NatMor> {
        Ok(NatMor {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            u: self.u.add(&other.u)?,
            v: self.v.add(&other.v)?,
        })
    }

    pub fn sub(&self, other: &NatMor) -> Result<NatMor> {
        Ok(NatMor {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            u: self.u.sub(&other.u)?,
            v: self.v.sub(&other.v)?,
        })
    }

    pub fn scale(&self, c: &BigInt) -> NatMor {
        NatMor {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            u: self.u.scale(c),
            v: self.v.scale(c),
        }
    }

    pub(crate) fn with_ends(mut self, src: FpFunctor, tgt: FpFunctor) -> NatMor {
        debug_assert!(src.same_arrow(&self.src) && tgt.same_arrow(&self.tgt));
        self.src = src;
        self.tgt = tgt;
        self
    }
}

impl fmt::Debug for NatMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatMor(u={:?}, v={:?})", self.u.phi(), self.v.phi())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedKind {
    Representable,
    Tensor,
    Ext1,
}

/// The transformation induced by a module map `φ: M → N`:
/// `(N,−) → (M,−)`, `−⊗M → −⊗N`, or `Ext¹(N,−) → Ext¹(M,−)`.
pub fn induced_nat(kind: InducedKind, phi: &ModMorphism) -> Result<NatMor> {
    let (m, n) = (phi.src(), phi.tgt());
    let ring = m.ring();
    match kind {
        InducedKind::Representable => {
            let zero = FpModule::zero(ring);
            NatMor::new(rep_functor(n), rep_functor(m), phi.clone(), ModMorphism::identity(&zero))
        }
        InducedKind::Tensor => {
            let (f, g) = (tensor_functor(m), tensor_functor(n));
            let u = ModMorphism::new(g.x().clone(), f.x().clone(), phi.phi().transpose())?;
            let v = ModMorphism::new(g.y().clone(), f.y().clone(), phi.cert().transpose())?;
            NatMor::new(f, g, u, v)
        }
        InducedKind::Ext1 => {
            let lift = lift_syzygy(phi);
            let (f, g) = (ext1_functor(n), ext1_functor(m));
            let v = ModMorphism::new(g.y().clone(), f.y().clone(), lift.cover_map)?;
            NatMor::new(f, g, lift.omega, v)
        }
    }
}
