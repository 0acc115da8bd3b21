//! Totally finitely presented functors `F = coker((Y,−) → (X,−))`, stored as
//! the representing arrow `f: X → Y`, so that `F(A) = Hom(X,A) / (−∘f)`.

mod eval;
mod iso;
mod limits;
mod nat;
mod nathom;

use std::fmt;

use crate::error::{ensure_same_ring, Result};
use crate::fpmod::{syzygy_inclusion, FpModule, ModMorphism};
use crate::ring::{Mat, Ring, RingSpec, Side};

pub use eval::{evaluate, evaluate_nat, evaluate_on_map};
pub use iso::{iso_functors, Budget, IsoDecision, IsoWitness, NonIsoCertificate};
pub use limits::{cokernel_nat, is_zero_functor, kernel_nat, nat_is_zero, Reduction};
pub use nat::{induced_nat, InducedKind, NatMor};
pub use nathom::{nat_hom, NatHom};

/// Where a functor came from. Only informational, except that it carries
/// the half-exactness flag through constructors known to preserve it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Representable(FpModule),
    Tensor(FpModule),
    Ext1(FpModule),
    Tor1(FpModule),
    Derived,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FpFunctor {
    spec: RingSpec,
    arrow: ModMorphism,
    provenance: Option<Provenance>,
    half_exact: bool,
}

impl FpFunctor {
    pub fn from_arrow(arrow: ModMorphism) -> Self {
        FpFunctor {
            spec: RingSpec::new(arrow.src().ring()),
            arrow,
            provenance: None,
            half_exact: false,
        }
    }

    pub fn from_matrix(x: &FpModule, y: &FpModule, phi: &Mat) -> Result<Self> {
        ensure_same_ring(x.ring(), y.ring())?;
        Ok(FpFunctor::from_arrow(ModMorphism::new(x.clone(), y.clone(), phi.clone())?))
    }

    pub fn zero(ring: Ring) -> Self {
        let z = FpModule::zero(ring);
        FpFunctor::from_arrow(ModMorphism::identity(&z))
    }

    pub fn ring(&self) -> Ring {
        self.spec.ring
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn side(&self) -> Side {
        self.spec.side
    }

    pub fn arrow(&self) -> &ModMorphism {
        &self.arrow
    }

    /// Source `X` of the representing arrow.
    pub fn x(&self) -> &FpModule {
        self.arrow.src()
    }

    /// Target `Y` of the representing arrow.
    pub fn y(&self) -> &FpModule {
        self.arrow.tgt()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn is_half_exact(&self) -> bool {
        self.half_exact
    }

    /// Re-labels the side marker. Sound because all supported rings are
    /// commutative.
    pub fn with_side(mut self, side: Side) -> Self {
        self.spec.side = side;
        self
    }

    pub(crate) fn tagged(mut self, provenance: Provenance, half_exact: bool) -> Self {
        self.provenance = Some(provenance);
        self.half_exact = half_exact;
        self
    }

    pub(crate) fn with_spec(mut self, spec: RingSpec) -> Self {
        self.spec = spec;
        self
    }

    /// Same presentation data (modules and arrow matrix).
    pub fn same_arrow(&self, other: &FpFunctor) -> bool {
        self.x() == other.x() && self.y() == other.y() && self.arrow.phi() == other.arrow.phi()
    }
}

impl fmt::Debug for FpFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpFunctor<{}, {:?}>({:?} -> {:?}, phi={:?})",
            self.spec.ring,
            self.spec.side,
            self.x(),
            self.y(),
            self.arrow.phi()
        )
    }
}

/// `Hom(X, −)`: arrow `X → 0`.
pub fn rep_functor(x: &FpModule) -> FpFunctor {
    let arrow = ModMorphism::zero(x, &FpModule::zero(x.ring()));
    FpFunctor::from_arrow(arrow).tagged(Provenance::Representable(x.clone()), true)
}

/// `− ⊗ X`: arrow `relᵀ: R^g → R^r` between free modules.
pub fn tensor_functor(x: &FpModule) -> FpFunctor {
    let ring = x.ring();
    let src = FpModule::free(ring, x.gens());
    let tgt = FpModule::free(ring, x.num_relations());
    let arrow = ModMorphism::new(src, tgt, x.rel().transpose()).expect("maps of free modules are well defined");
    FpFunctor::from_arrow(arrow).tagged(Provenance::Tensor(x.clone()), true)
}

/// `Ext¹(M, −)`: arrow `ΩM → R^g` given by the relation matrix.
pub fn ext1_functor(m: &FpModule) -> FpFunctor {
    FpFunctor::from_arrow(syzygy_inclusion(m)).tagged(Provenance::Ext1(m.clone()), true)
}

/// `Extⁿ(M, −) = Ext¹(Ωⁿ⁻¹M, −)` for `n ≥ 1`.
pub fn ext_functor(n: usize, m: &FpModule) -> FpFunctor {
    assert!(n >= 1, "ext_functor needs n >= 1");
    let mut base = m.clone();
    for _ in 1..n {
        base = crate::fpmod::syzygy(&base);
    }
    ext1_functor(&base)
}

/// `Tor₁(−, M) = ker(− ⊗ ΩM → − ⊗ R^g)`.
pub fn tor1_functor(m: &FpModule) -> FpFunctor {
    tor1_with_inclusion(m).0
}

/// `Tor₁(−, M)` together with its inclusion into `− ⊗ ΩM`.
pub fn tor1_with_inclusion(m: &FpModule) -> (FpFunctor, NatMor) {
    let incl = syzygy_inclusion(m);
    let alpha = induced_nat(InducedKind::Tensor, &incl).expect("syzygy inclusion is a valid map");
    let (k, i) = kernel_nat(&alpha).expect("kernel of a tensor map");
    let k = k.tagged(Provenance::Tor1(m.clone()), true);
    let tgt = i.tgt().clone();
    (k.clone(), i.with_ends(k, tgt))
}

/// `Torₙ(−, M) = Tor₁(−, Ωⁿ⁻¹M)` for `n ≥ 1`.
pub fn tor_functor(n: usize, m: &FpModule) -> FpFunctor {
    assert!(n >= 1, "tor_functor needs n >= 1");
    let mut base = m.clone();
    for _ in 1..n {
        base = crate::fpmod::syzygy(&base);
    }
    tor1_functor(&base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::iso_modules;

    fn z() -> Ring {
        Ring::Integers
    }

    fn iso(a: &FpModule, b: &FpModule) -> bool {
        iso_modules(a, b).unwrap()
    }

    #[test]
    fn representable_examples() {
        let f = rep_functor(&FpModule::cyclic(z(), 4));
        assert!(iso(&evaluate(&f, &FpModule::cyclic(z(), 6)).unwrap(), &FpModule::cyclic(z(), 2)));
        assert!(is_zero_functor(&rep_functor(&FpModule::zero(z()))).unwrap());
        let a = FpModule::diagonal(z(), &[3, 0]);
        let f = rep_functor(&FpModule::free(z(), 1));
        assert!(iso(&evaluate(&f, &a).unwrap(), &a));
    }

    #[test]
    fn tensor_examples() {
        let f = tensor_functor(&FpModule::cyclic(z(), 4));
        assert!(iso(&evaluate(&f, &FpModule::cyclic(z(), 6)).unwrap(), &FpModule::cyclic(z(), 2)));
        let a = FpModule::diagonal(z(), &[3, 0]);
        let f = tensor_functor(&FpModule::free(z(), 1));
        assert!(iso(&evaluate(&f, &a).unwrap(), &a));
        assert!(is_zero_functor(&tensor_functor(&FpModule::zero(z()))).unwrap());
    }

    #[test]
    fn ext1_examples() {
        let f = ext1_functor(&FpModule::cyclic(z(), 4));
        assert!(iso(&evaluate(&f, &FpModule::cyclic(z(), 6)).unwrap(), &FpModule::cyclic(z(), 2)));
        assert!(iso(&evaluate(&f, &FpModule::cyclic(z(), 2)).unwrap(), &FpModule::cyclic(z(), 2)));
        assert!(is_zero_functor(&ext1_functor(&FpModule::free(z(), 1))).unwrap());
        let r8 = Ring::IntegersMod(8);
        let f = ext1_functor(&FpModule::cyclic(r8, 2));
        assert!(evaluate(&f, &FpModule::free(r8, 1)).unwrap().is_zero());
    }

    #[test]
    fn tor1_matches_module_tor() {
        let m = FpModule::cyclic(z(), 4);
        let t = tor1_functor(&m);
        for a in [6, 2, 9] {
            let a = FpModule::cyclic(z(), a);
            let expect = crate::fpmod::tor_value(1, &a, &m).unwrap();
            assert!(iso(&evaluate(&t, &a).unwrap(), &expect));
        }
    }

    fn int(n: i64) -> Mat {
        Mat::from_rows(z(), &[vec![n]])
    }

    fn mult(n: i64) -> ModMorphism {
        let free = FpModule::free(z(), 1);
        ModMorphism::new(free.clone(), free, int(n)).unwrap()
    }

    #[test]
    fn induced_maps() {
        let twice = induced_nat(InducedKind::Representable, &mult(2)).unwrap();
        let at = evaluate_nat(&twice, &FpModule::cyclic(z(), 4)).unwrap();
        let (img, _) = crate::fpmod::cokernel_mor(&at);
        assert!(iso(&img, &FpModule::cyclic(z(), 2)));

        let surj = ModMorphism::new(FpModule::cyclic(z(), 4), FpModule::cyclic(z(), 2), int(1)).unwrap();
        let e = induced_nat(InducedKind::Ext1, &surj).unwrap();
        assert!(!evaluate_nat(&e, &FpModule::cyclic(z(), 8)).unwrap().is_zero());
        let t = induced_nat(InducedKind::Tensor, &surj).unwrap();
        assert!(!evaluate_nat(&t, &FpModule::free(z(), 1)).unwrap().is_zero());
    }

    #[test]
    fn nat_groups() {
        let n = nat_hom(&rep_functor(&FpModule::cyclic(z(), 4)), &tensor_functor(&FpModule::cyclic(z(), 6))).unwrap();
        assert!(iso(n.module(), &FpModule::cyclic(z(), 2)));
        let n = nat_hom(&ext1_functor(&FpModule::cyclic(z(), 2)), &FpFunctor::zero(z())).unwrap();
        assert!(n.module().is_zero());
        let n = nat_hom(&ext1_functor(&FpModule::cyclic(z(), 2)), &ext1_functor(&FpModule::cyclic(z(), 4))).unwrap();
        assert!(iso(n.module(), &FpModule::cyclic(z(), 2)));
        for j in 0..n.num_generators() {
            let a = n.generator(j);
            assert!(!nat_is_zero(&a).unwrap());
        }
    }

    #[test]
    fn zero_tests() {
        let f = ext1_functor(&FpModule::cyclic(z(), 4));
        assert!(!nat_is_zero(&NatMor::identity(&f)).unwrap());
        assert!(nat_is_zero(&NatMor::zero(&f, &f)).unwrap());
        // u = ·4 on rep(ℤ) against the functor of (·2): ℤ → ℤ factors as 2·2.
        let g = FpFunctor::from_arrow(mult(2));
        let alpha = NatMor::new(rep_functor(&FpModule::free(z(), 1)), g.clone(), mult(4), ModMorphism::zero(g.y(), &FpModule::zero(z()))).unwrap();
        assert!(nat_is_zero(&alpha).unwrap());
        assert!(is_zero_functor(&FpFunctor::from_arrow(mult(1))).unwrap());
        assert!(!is_zero_functor(&rep_functor(&FpModule::cyclic(z(), 4))).unwrap());
    }

    #[test]
    fn kernels_and_cokernels() {
        let twice = induced_nat(InducedKind::Representable, &mult(2)).unwrap();
        let a = FpModule::cyclic(z(), 4);
        let (c, _) = cokernel_nat(&twice).unwrap();
        assert!(iso(&evaluate(&c, &a).unwrap(), &FpModule::cyclic(z(), 2)));
        let (k, _) = kernel_nat(&twice).unwrap();
        assert!(iso(&evaluate(&k, &a).unwrap(), &FpModule::cyclic(z(), 2)));

        let f = ext1_functor(&FpModule::diagonal(z(), &[2, 4]));
        let id = NatMor::identity(&f);
        assert!(is_zero_functor(&cokernel_nat(&id).unwrap().0).unwrap());
        assert!(is_zero_functor(&kernel_nat(&id).unwrap().0).unwrap());
        let zero = NatMor::zero(&f, &f);
        let (k, _) = kernel_nat(&zero).unwrap();
        let (c, _) = cokernel_nat(&zero).unwrap();
        for d in [2, 4, 6, 8] {
            let a = FpModule::cyclic(z(), d);
            let fa = evaluate(&f, &a).unwrap();
            assert!(iso(&evaluate(&k, &a).unwrap(), &fa));
            assert!(iso(&evaluate(&c, &a).unwrap(), &fa));
        }
    }

    #[test]
    fn iso_decisions() {
        let budget = Budget::default();
        let bed: Vec<FpModule> = [2, 4, 6].iter().map(|&d| FpModule::cyclic(z(), d)).collect();
        let f = ext1_functor(&FpModule::cyclic(z(), 4));
        assert!(iso_functors(&f, &f, budget, &bed).unwrap().is_yes());
        match iso_functors(&rep_functor(&FpModule::cyclic(z(), 4)), &rep_functor(&FpModule::cyclic(z(), 2)), budget, &bed).unwrap() {
            IsoDecision::No(NonIsoCertificate::Evaluation { lhs, rhs, .. }) => assert_ne!(lhs, rhs),
            other => panic!("expected a refutation, got {other:?}"),
        }
        // ℤ/4 re-presented on two generators gives a different arrow.
        let m = FpModule::from_cols(z(), 2, &[vec![4, 0], vec![0, 1]]);
        let d = iso_functors(&tensor_functor(&FpModule::cyclic(z(), 4)), &tensor_functor(&m), budget, &bed).unwrap();
        let IsoDecision::Yes(w) = d else { panic!("expected a witness, got {d:?}") };
        let round = w.backward.after(&w.forward).unwrap();
        assert!(nat_is_zero(&round.sub(&NatMor::identity(w.forward.src())).unwrap()).unwrap());
        // Ext¹(ℤ/4, −) and Ext¹ of ℤ/4 presented redundantly.
        let d = iso_functors(&f, &ext1_functor(&m), budget, &bed).unwrap();
        assert!(d.is_yes(), "{d:?}");
    }
}
