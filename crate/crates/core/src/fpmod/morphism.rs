use std::fmt;

use num_bigint::BigInt;

use super::FpModule;
use crate::error::{ensure_same_ring, Error, Result};
use crate::ring::{kernel_matrix, solve_linear, Mat};

/// A module map given on generators, with the certificate `Λ` proving
/// `phi · src.rel = tgt.rel · Λ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModMorphism {
    src: FpModule,
    tgt: FpModule,
    phi: Mat,
    cert: Mat,
}

/// `Some` iff `phi` sends relations of `src` into relations of `tgt`.
pub fn validate_morphism(src: &FpModule, tgt: &FpModule, phi: &Mat) -> Result<Option<ModMorphism>> {
    ensure_same_ring(src.ring(), tgt.ring())?;
    ensure_same_ring(src.ring(), phi.ring())?;
    if phi.shape() != (tgt.gens(), src.gens()) {
        return Err(Error::Dimension(format!(
            "map matrix is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            tgt.gens(),
            src.gens()
        )));
    }
    let image = phi * src.rel();
    Ok(solve_linear(tgt.rel(), &image)?.map(|cert| ModMorphism {
        src: src.clone(),
        tgt: tgt.clone(),
        phi: phi.clone(),
        cert,
    }))
}

impl ModMorphism {
    /// Like [`validate_morphism`] but an ill-defined map is an error.
    pub fn new(src: FpModule, tgt: FpModule, phi: Mat) -> Result<Self> {
        validate_morphism(&src, &tgt, &phi)?.ok_or_else(|| {
            Error::IllDefined(format!("{phi:?} does not respect the relations of the source"))
        })
    }

    pub(crate) fn from_parts(src: FpModule, tgt: FpModule, phi: Mat, cert: Mat) -> Self {
        debug_assert_eq!(&phi * src.rel(), tgt.rel() * &cert);
        ModMorphism { src, tgt, phi, cert }
    }

    pub fn identity(m: &FpModule) -> Self {
        let ring = m.ring();
        ModMorphism {
            src: m.clone(),
            tgt: m.clone(),
            phi: Mat::identity(ring, m.gens()),
            cert: Mat::identity(ring, m.num_relations()),
        }
    }

    pub fn zero(src: &FpModule, tgt: &FpModule) -> Self {
        let ring = src.ring();
        ModMorphism {
            src: src.clone(),
            tgt: tgt.clone(),
            phi: Mat::zeros(ring, tgt.gens(), src.gens()),
            cert: Mat::zeros(ring, tgt.num_relations(), src.num_relations()),
        }
    }

    pub fn src(&self) -> &FpModule {
        &self.src
    }

    pub fn tgt(&self) -> &FpModule {
        &self.tgt
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn cert(&self) -> &Mat {
        &self.cert
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModMorphism) -> Result<ModMorphism> {
        if first.tgt != self.src {
            return Err(Error::Dimension("composition of non-composable maps".into()));
        }
        Ok(ModMorphism {
            src: first.src.clone(),
            tgt: self.tgt.clone(),
            phi: &self.phi * &first.phi,
            cert: &self.cert * &first.cert,
        })
    }

    fn check_parallel(&self, other: &ModMorphism) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::Dimension("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModMorphism) -> Result<ModMorphism> {
        self.check_parallel(other)?;
        Ok(ModMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            phi: &self.phi + &other.phi,
            cert: &self.cert + &other.cert,
        })
    }

    pub fn sub(&self, other: &ModMorphism) -> Result<ModMorphism> {
        self.check_parallel(other)?;
        Ok(ModMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            phi: &self.phi - &other.phi,
            cert: &self.cert - &other.cert,
        })
    }

    pub fn scale(&self, c: &BigInt) -> ModMorphism {
        ModMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            phi: self.phi.scale(c),
            cert: self.cert.scale(c),
        }
    }

    /// Zero as a map of modules: every generator lands in the relations.
    pub fn is_zero(&self) -> bool {
        solve_linear(self.tgt.rel(), &self.phi)
            .expect("shapes agree by construction")
            .is_some()
    }

    pub fn equals(&self, other: &ModMorphism) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }
}

impl fmt::Debug for ModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModMorphism({} -> {}, phi={:?})", self.src, self.tgt, self.phi)
    }
}

/// Submodule of `amb` generated by the columns of `gens`, presented on those
/// generators, together with its inclusion.
pub(crate) fn submodule(amb: &FpModule, gens: &Mat) -> (FpModule, ModMorphism) {
    let k = gens.cols();
    let stacked = gens.hstack(amb.rel());
    let syz = kernel_matrix(&stacked);
    let rel = syz.row_range(0, k);
    let cert = -&syz.row_range(k, syz.rows());
    let sub = FpModule::from_rel(rel);
    debug_assert_eq!(sub.gens(), k);
    let incl = ModMorphism::from_parts(sub.clone(), amb.clone(), gens.clone(), cert);
    (sub, incl)
}

/// Kernel of `f` with its (monic) inclusion into `f.src`, in invariant-factor
/// presentation.
pub fn kernel_mor(f: &ModMorphism) -> (FpModule, ModMorphism) {
    let g = f.src.gens();
    let stacked = f.phi.hstack(f.tgt.rel());
    let syz = kernel_matrix(&stacked);
    let gens = syz.row_range(0, g).nonzero_cols();
    let (k, incl) = submodule(&f.src, &gens);
    let min = k.minimize();
    let incl = incl.after(&min.from).expect("composable");
    (min.module, incl)
}

/// Cokernel `tgt / im f` on the generators of `tgt`, with the projection.
pub fn cokernel_mor(f: &ModMorphism) -> (FpModule, ModMorphism) {
    let ring = f.tgt.ring();
    let rel = f.tgt.rel().hstack(&f.phi);
    let c = FpModule::from_rel(rel);
    let s = f.tgt.num_relations();
    let cert = Mat::identity(ring, s).vstack(&Mat::zeros(ring, f.src.gens(), s));
    let proj = ModMorphism::from_parts(
        f.tgt.clone(),
        c.clone(),
        Mat::identity(ring, f.tgt.gens()),
        cert,
    );
    (c, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::iso_modules;
    use crate::ring::Ring;

    fn z() -> Ring {
        Ring::Integers
    }

    #[test]
    fn validation_examples() {
        let m4 = FpModule::cyclic(z(), 4);
        let m2 = FpModule::cyclic(z(), 2);
        let one = Mat::from_rows(z(), &[vec![1]]);
        assert!(validate_morphism(&m4, &m4, &one).unwrap().is_some());
        let surj = validate_morphism(&m4, &m2, &one).unwrap().unwrap();
        assert_eq!(surj.cert(), &Mat::from_rows(z(), &[vec![2]]));
        assert!(validate_morphism(&m2, &m4, &one).unwrap().is_none());
    }

    #[test]
    fn validation_errors() {
        let m4 = FpModule::cyclic(z(), 4);
        let bad = Mat::zeros(z(), 2, 1);
        assert!(matches!(validate_morphism(&m4, &m4, &bad), Err(Error::Dimension(_))));
        let other = FpModule::cyclic(Ring::IntegersMod(4), 2);
        assert!(validate_morphism(&m4, &other, &Mat::from_rows(z(), &[vec![1]])).is_err());
    }

    #[test]
    fn kernel_examples() {
        let m4 = FpModule::cyclic(z(), 4);
        let two = ModMorphism::new(m4.clone(), m4.clone(), Mat::from_rows(z(), &[vec![2]])).unwrap();
        let (k, incl) = kernel_mor(&two);
        assert!(iso_modules(&k, &FpModule::cyclic(z(), 2)).unwrap());
        assert!(two.after(&incl).unwrap().is_zero());
        let (k, _) = kernel_mor(&ModMorphism::identity(&m4));
        assert!(k.is_zero());
        let free = FpModule::free(z(), 1);
        let dbl = ModMorphism::new(free.clone(), free, Mat::from_rows(z(), &[vec![2]])).unwrap();
        assert!(kernel_mor(&dbl).0.is_zero());
    }

    #[test]
    fn cokernel_examples() {
        let free = FpModule::free(z(), 1);
        let four = ModMorphism::new(free.clone(), free.clone(), Mat::from_rows(z(), &[vec![4]])).unwrap();
        let (c, _) = cokernel_mor(&four);
        assert_eq!(c, FpModule::cyclic(z(), 4));
        assert!(cokernel_mor(&ModMorphism::identity(&free)).0.is_zero());
        let r8 = Ring::IntegersMod(8);
        let f8 = FpModule::free(r8, 1);
        let two = ModMorphism::new(f8.clone(), f8, Mat::from_rows(r8, &[vec![2]])).unwrap();
        assert!(iso_modules(&cokernel_mor(&two).0, &FpModule::cyclic(r8, 2)).unwrap());
    }
}
