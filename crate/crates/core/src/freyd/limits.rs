use super::{FpFunctor, NatMor, Provenance};
use crate::error::Result;
use crate::fpmod::{cokernel_mor, direct_sum, factor_through, ModMorphism};
use crate::ring::Mat;

/// A functor re-presented on invariant-factor modules, with the
/// isomorphisms back and forth.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub functor: FpFunctor,
    pub to: NatMor,
    pub from: NatMor,
}

impl FpFunctor {
    pub fn reduce(&self) -> Reduction {
        let mx = self.x().minimize();
        let my = self.y().minimize();
        let arrow = my
            .to
            .after(self.arrow())
            .and_then(|a| a.after(&mx.from))
            .expect("composable");
        let reduced = FpFunctor {
            spec: self.spec,
            arrow,
            provenance: self.provenance.clone(),
            half_exact: self.half_exact,
        };
        let to = NatMor::new(self.clone(), reduced.clone(), mx.from.clone(), my.from.clone())
            .expect("minimization isomorphisms are natural");
        let from = NatMor::new(reduced.clone(), self.clone(), mx.to, my.to)
            .expect("minimization isomorphisms are natural");
        Reduction { functor: reduced, to, from }
    }
}

fn derived(f: FpFunctor, like: &FpFunctor) -> FpFunctor {
    FpFunctor {
        spec: like.spec,
        provenance: Some(Provenance::Derived),
        half_exact: false,
        ..f
    }
}

/// `α` is zero iff `u: X' → X` factors through `g: X' → Y'`.
pub fn nat_is_zero(alpha: &NatMor) -> Result<bool> {
    Ok(factor_through(alpha.u(), alpha.tgt().arrow())?.is_some())
}

/// `F = 0` iff `id_X` factors through `f`.
pub fn is_zero_functor(f: &FpFunctor) -> Result<bool> {
    Ok(factor_through(&ModMorphism::identity(f.x()), f.arrow())?.is_some())
}

/// Cokernel of `α: F → G` with the projection `G → C`.
///
/// `C` has arrow `(u; g): X' → X ⊕ Y'`.
pub fn cokernel_nat(alpha: &NatMor) -> Result<(FpFunctor, NatMor)> {
    let (f, g) = (alpha.src(), alpha.tgt());
    let ring = f.ring();
    let t = direct_sum(f.x(), g.y())?;
    let arrow = ModMorphism::new(g.x().clone(), t.clone(), alpha.u().phi().vstack(g.arrow().phi()))?;
    let c = derived(FpFunctor::from_arrow(arrow), g);
    let pr = ModMorphism::new(
        t,
        g.y().clone(),
        Mat::zeros(ring, g.y().gens(), f.x().gens()).hstack(&Mat::identity(ring, g.y().gens())),
    )?;
    let proj = NatMor::new(g.clone(), c.clone(), ModMorphism::identity(g.x()), pr)?;
    let red = c.reduce();
    Ok((red.functor, red.to.after(&proj)?))
}

/// Kernel of `α: F → G` with the inclusion `K → F`.
///
/// With `C = coker((u; −g): X' → X ⊕ Y')` and `j: X → C`, the kernel is
/// represented by `X → C → coker((j; −f): X → C ⊕ Y)`.
pub fn kernel_nat(alpha: &NatMor) -> Result<(FpFunctor, NatMor)> {
    let (f, g) = (alpha.src(), alpha.tgt());
    let (nx, ny) = (f.x().gens(), f.y().gens());
    let first = ModMorphism::new(
        g.x().clone(),
        direct_sum(f.x(), g.y())?,
        alpha.u().phi().vstack(&-g.arrow().phi()),
    )?;
    let (c, q) = cokernel_mor(&first);
    let j = ModMorphism::new(f.x().clone(), c.clone(), q.phi().col_range(0, nx))?;
    let cm = c.minimize();
    let j = cm.to.after(&j)?;
    let second = ModMorphism::new(
        f.x().clone(),
        direct_sum(&cm.module, f.y())?,
        j.phi().vstack(&-f.arrow().phi()),
    )?;
    let (c2, q2) = cokernel_mor(&second);
    let nc = cm.module.gens();
    let pi = ModMorphism::new(cm.module.clone(), c2.clone(), q2.phi().col_range(0, nc))?;
    let iota = ModMorphism::new(f.y().clone(), c2, q2.phi().col_range(nc, nc + ny))?;
    let k = derived(FpFunctor::from_arrow(pi), f);
    let incl = NatMor::new(k.clone(), f.clone(), j, iota)?;
    let red = k.reduce();
    Ok((red.functor, incl.after(&red.from)?))
}
