use super::{FpFunctor, NatMor};
use crate::error::{ensure_same_ring, Error, Result};
use crate::fpmod::{factor_through, hom_module, kernel_mor, FpModule, HomSpace, ModMorphism};
use crate::ring::Mat;

/// `Nat(F, G)` for `F` of arrow `f: X → Y` and `G` of arrow `g: X' → Y'`.
///
/// By Yoneda, `Nat(F, G) = ker(G(f): G(X) → G(Y))` and an element is read
/// off as the class of `u ∈ Hom(X', X)`.
#[derive(Clone, Debug)]
pub struct NatHom {
    src: FpFunctor,
    tgt: FpFunctor,
    module: FpModule,
    /// Columns: generators of `module` as coordinates in `hom_u`.
    elems: Mat,
    hom_u: HomSpace,
}

pub fn nat_hom(f: &FpFunctor, g: &FpFunctor) -> Result<NatHom> {
    ensure_same_ring(f.ring(), g.ring())?;
    let hom_u = hom_module(g.x(), f.x())?;
    let hom_yx = hom_module(g.y(), f.x())?;
    let hom_xy = hom_module(g.x(), f.y())?;
    let hom_yy = hom_module(g.y(), f.y())?;
    let gphi = g.arrow().phi();
    let rel_gx: Vec<_> = (0..hom_yx.num_generators())
        .map(|j| &hom_yx.generator_matrix(j) * gphi)
        .collect();
    let gx = FpModule::from_rel(hom_u.module().rel().hstack(&hom_u.coords_of_matrices(&rel_gx)));
    let rel_gy: Vec<_> = (0..hom_yy.num_generators())
        .map(|j| &hom_yy.generator_matrix(j) * gphi)
        .collect();
    let gy = FpModule::from_rel(hom_xy.module().rel().hstack(&hom_xy.coords_of_matrices(&rel_gy)));
    let push: Vec<_> = (0..hom_u.num_generators())
        .map(|j| f.arrow().phi() * &hom_u.generator_matrix(j))
        .collect();
    let gf = ModMorphism::new(gx, gy, hom_xy.coords_of_matrices(&push))?;
    let (module, incl) = kernel_mor(&gf);
    Ok(NatHom {
        src: f.clone(),
        tgt: g.clone(),
        module,
        elems: incl.phi().clone(),
        hom_u,
    })
}

impl NatHom {
    pub fn module(&self) -> &FpModule {
        &self.module
    }

    pub fn num_generators(&self) -> usize {
        self.module.gens()
    }

    /// The transformation with the given coordinates (a column with one
    /// entry per generator of [`NatHom::module`]).
    pub fn materialize(&self, coeffs: &Mat) -> Result<NatMor> {
        if coeffs.shape() != (self.num_generators(), 1) {
            return Err(Error::Dimension("coefficient vector length".into()));
        }
        let u = self.hom_u.materialize(&(&self.elems * coeffs))?;
        let fu = self.src.arrow().after(&u)?;
        let v = factor_through(&fu, self.tgt.arrow())?
            .ok_or_else(|| Error::IllDefined("element of Nat(F, G) does not lift".into()))?;
        NatMor::new(self.src.clone(), self.tgt.clone(), u, v)
    }

    pub fn generator(&self, j: usize) -> NatMor {
        let mut e = Mat::zeros(self.src.ring(), self.num_generators(), 1);
        e.set(j, 0, 1.into());
        self.materialize(&e).expect("generators lift")
    }
}
