use super::{FpFunctor, NatMor};
use crate::error::{ensure_same_ring, Error, Result};
use crate::fpmod::{hom_module, FpModule, HomSpace, ModMorphism};

/// `F(A)` presented on the generators of `Hom(X, A)`, plus that Hom space.
pub(crate) struct Value {
    pub module: FpModule,
    pub hom_x: HomSpace,
}

pub(crate) fn value(f: &FpFunctor, a: &FpModule) -> Result<Value> {
    ensure_same_ring(f.ring(), a.ring())?;
    let hom_x = hom_module(f.x(), a)?;
    let hom_y = hom_module(f.y(), a)?;
    let images: Vec<_> = (0..hom_y.num_generators())
        .map(|j| &hom_y.generator_matrix(j) * f.arrow().phi())
        .collect();
    let img = hom_x.coords_of_matrices(&images);
    let module = FpModule::from_rel(hom_x.module().rel().hstack(&img));
    Ok(Value { module, hom_x })
}

/// `F(A) = coker(Hom(Y, A) → Hom(X, A))`.
pub fn evaluate(f: &FpFunctor, a: &FpModule) -> Result<FpModule> {
    Ok(value(f, a)?.module)
}

/// `α_A: F(A) → G(A)`, `[x] ↦ [x∘u]`, between the presentations returned
/// by [`evaluate`].
pub fn evaluate_nat(alpha: &NatMor, a: &FpModule) -> Result<ModMorphism> {
    let fa = value(alpha.src(), a)?;
    let ga = value(alpha.tgt(), a)?;
    let images: Vec<_> = (0..fa.hom_x.num_generators())
        .map(|j| &fa.hom_x.generator_matrix(j) * alpha.u().phi())
        .collect();
    let phi = ga.hom_x.coords_of_matrices(&images);
    ModMorphism::new(fa.module, ga.module, phi)
}

/// `F(h): F(A) → F(B)`, `[x] ↦ [h∘x]`.
pub fn evaluate_on_map(f: &FpFunctor, h: &ModMorphism) -> Result<ModMorphism> {
    let fa = value(f, h.src())?;
    let fb = value(f, h.tgt())?;
    if fa.module.ring() != f.ring() {
        return Err(Error::RingMismatch(fa.module.ring(), f.ring()));
    }
    let images: Vec<_> = (0..fa.hom_x.num_generators())
        .map(|j| h.phi() * &fa.hom_x.generator_matrix(j))
        .collect();
    let phi = fb.hom_x.coords_of_matrices(&images);
    ModMorphism::new(fa.module, fb.module, phi)
}
