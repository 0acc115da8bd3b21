//! Finitely presented modules `M = R^g / colspan(rel)` and their maps.

mod hom;
mod homological;
mod morphism;
mod stable;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{smith_normal_form, Mat, Ring};

pub use hom::{factor_through, hom_module, tensor_module, HomSpace};
pub use homological::{
    ext_value, free_resolution, homology, lift_syzygy, syzygy, syzygy_inclusion, tor_value, transpose,
    SyzygyLift,
};
pub use morphism::{cokernel_mor, kernel_mor, validate_morphism, ModMorphism};
pub use stable::{elementary_divisors, is_projective, iso_modules, stable_iso, stable_part};

/// A module presented by generators and relation columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpModule {
    ring: Ring,
    gens: usize,
    rel: Mat,
}

impl FpModule {
    pub fn new(gens: usize, rel: Mat) -> Result<Self> {
        if rel.rows() != gens {
            return Err(Error::Dimension(format!(
                "relation matrix has {} rows for {} generators",
                rel.rows(),
                gens
            )));
        }
        Ok(FpModule {
            ring: rel.ring(),
            gens,
            rel,
        })
    }

    pub(crate) fn from_rel(rel: Mat) -> Self {
        FpModule {
            ring: rel.ring(),
            gens: rel.rows(),
            rel,
        }
    }

    pub fn free(ring: Ring, gens: usize) -> Self {
        FpModule::from_rel(Mat::zeros(ring, gens, 0))
    }

    pub fn zero(ring: Ring) -> Self {
        FpModule::free(ring, 0)
    }

    /// `R/(d)`.
    pub fn cyclic(ring: Ring, d: i64) -> Self {
        FpModule::from_rel(Mat::from_rows(ring, &[vec![d]]))
    }

    /// `R^k / diag(d)`.
    pub fn diagonal(ring: Ring, d: &[i64]) -> Self {
        FpModule::from_rel(Mat::diagonal(ring, d))
    }

    /// Presentation from relation columns, each of length `gens`.
    pub fn from_cols(ring: Ring, gens: usize, cols: &[Vec<i64>]) -> Self {
        FpModule::from_rel(Mat::from_cols(ring, gens, cols))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rel(&self) -> &Mat {
        &self.rel
    }

    pub fn num_relations(&self) -> usize {
        self.rel.cols()
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        let smith = smith_normal_form(&self.rel);
        let k = self.gens.min(self.rel.cols());
        let mut factors: Vec<BigInt> = smith
            .diagonal()
            .into_iter()
            .filter(|d| !self.ring.is_unit(d))
            .collect();
        factors.extend(std::iter::repeat_n(BigInt::zero(), self.gens - k));
        // zeros sort last; the non-zero part is already a divisor chain
        factors.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            (false, false) => a.cmp(b),
        });
        InvariantFactors {
            ring: self.ring,
            factors,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.invariant_factors().factors.is_empty()
    }

    /// Presentation by invariant factors with explicit isomorphisms.
    pub fn minimize(&self) -> Minimized {
        let ring = self.ring;
        let smith = smith_normal_form(&self.rel);
        let k = self.gens.min(self.rel.cols());
        let diag = smith.diagonal();
        let keep: Vec<usize> = (0..self.gens).filter(|&i| i >= k || !ring.is_unit(&diag[i])).collect();
        let rel_cols: Vec<Vec<BigInt>> = keep
            .iter()
            .enumerate()
            .filter(|&(_, &i)| i < k && !diag[i].is_zero())
            .map(|(pos, &i)| {
                let mut c = vec![BigInt::zero(); keep.len()];
                c[pos] = diag[i].clone();
                c
            })
            .collect();
        let module = FpModule::from_rel(Mat::from_big_cols(ring, keep.len(), &rel_cols));
        let to = ModMorphism::new(self.clone(), module.clone(), smith.u.select_rows(&keep))
            .expect("Smith row transform is well defined");
        let from = ModMorphism::new(module.clone(), self.clone(), smith.u_inv.select_cols(&keep))
            .expect("inverse Smith transform is well defined");
        Minimized { module, to, from }
    }
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpModule<{}>(gens={}, rel={:?})", self.ring, self.gens, self.rel)
    }
}

impl fmt::Display for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariant_factors())
    }
}

/// A module in invariant-factor form together with the isomorphisms to and
/// from the original presentation.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub module: FpModule,
    pub to: ModMorphism,
    pub from: ModMorphism,
}

/// Non-unit invariant factors `d₁ | d₂ | …`, with `0` for each free cyclic
/// summand (listed last). Over `Z/n` each factor is a divisor of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    pub ring: Ring,
    pub factors: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    /// The factors as generators of the ideals in `R/(d₁) ⊕ R/(d₂) ⊕ …`:
    /// free summands are `0` over `Z` and `n` over `Z/n`.
    pub fn ideal_generators(&self) -> Vec<BigInt> {
        let free = BigInt::from(self.ring.modulus().unwrap_or(0));
        self.factors
            .iter()
            .map(|d| if d.is_zero() { free.clone() } else { d.clone() })
            .collect()
    }

    /// Rendering as a divisor chain; the zero module is the empty chain `1`.
    pub fn chain(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self.ideal_generators().iter().map(BigInt::to_string).collect();
        parts.join("|")
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.chain())
    }
}

/// `M ⊕ N` with block-diagonal relations.
pub fn direct_sum(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    crate::error::ensure_same_ring(m.ring, n.ring)?;
    Ok(FpModule::from_rel(m.rel.block_diag(&n.rel)))
}

/// Direct sum of a list of modules (the zero module for an empty list).
pub fn direct_sum_all(ring: Ring, parts: &[&FpModule]) -> Result<FpModule> {
    parts
        .iter()
        .try_fold(FpModule::zero(ring), |acc, m| direct_sum(&acc, m))
}

/// `N^k`.
pub fn power(n: &FpModule, k: usize) -> FpModule {
    FpModule::from_rel(Mat::identity(n.ring, k).kron(&n.rel))
}
