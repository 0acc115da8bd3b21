use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use super::FpModule;
use crate::error::{ensure_same_ring, Result};
use crate::ring::factorize;

/// Prime-power elementary divisors of the torsion part, ascending, and the
/// number of free cyclic summands.
pub fn elementary_divisors(m: &FpModule) -> (Vec<BigInt>, usize) {
    let inv = m.invariant_factors();
    let mut out = Vec::new();
    for d in inv.factors.iter().filter(|d| !d.is_zero()) {
        for (p, e) in factorize(d) {
            out.push(Pow::pow(&p, e));
        }
    }
    out.sort();
    (out, inv.free_rank())
}

/// Elementary divisors that are not projective cyclic modules, ascending.
///
/// Over `Z` that is all torsion; over `Z/n` a summand `Z/p^a` is projective
/// exactly when `p^a` is the full `p`-part of `n`.
pub fn stable_part(m: &FpModule) -> Vec<BigInt> {
    let (eds, _) = elementary_divisors(m);
    match m.ring().modulus() {
        None => eds,
        Some(n) => {
            let n_parts: Vec<BigInt> = factorize(&BigInt::from(n))
                .into_iter()
                .map(|(p, e)| Pow::pow(&p, e))
                .collect();
            eds.into_iter().filter(|q| !n_parts.contains(q)).collect()
        }
    }
}

pub fn iso_modules(m: &FpModule, n: &FpModule) -> Result<bool> {
    ensure_same_ring(m.ring(), n.ring())?;
    Ok(m.invariant_factors() == n.invariant_factors())
}

/// Isomorphism after discarding projective summands.
pub fn stable_iso(m: &FpModule, n: &FpModule) -> Result<bool> {
    ensure_same_ring(m.ring(), n.ring())?;
    Ok(stable_part(m) == stable_part(n))
}

pub fn is_projective(m: &FpModule) -> bool {
    stable_part(m).is_empty()
}
