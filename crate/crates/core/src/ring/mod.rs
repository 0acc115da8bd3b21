//! Base rings and exact linear algebra over them.
//!
//! Every supported ring is a quotient of the integers, so matrices store
//! integer representatives and all normal forms are computed over `Z` and
//! then reduced.

mod linalg;
mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use linalg::{kernel_matrix, solve_detailed, solve_linear, SolveOutcome};
pub(crate) use linalg::solve_with;
pub use matrix::Mat;
pub use snf::{smith_normal_form, Smith};

pub type Scalar = BigInt;

/// A computable commutative principal ideal ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
    PrimeField(u64),
}

impl Ring {
    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} needs n >= 2")));
        }
        Ok(Ring::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    /// The characteristic for the quotient rings, `None` for `Z`.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Ring::Integers => None,
            Ring::IntegersMod(n) | Ring::PrimeField(n) => Some(n),
        }
    }

    pub fn is_field(&self) -> bool {
        match *self {
            Ring::Integers => false,
            Ring::PrimeField(_) => true,
            Ring::IntegersMod(n) => is_prime(n),
        }
    }

    /// Quotients of `Z` are quasi-Frobenius; `Z` itself is not.
    pub fn is_self_injective(&self) -> bool {
        self.modulus().is_some()
    }

    /// Least non-negative representative for quotient rings, identity on `Z`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self.modulus() {
            None => x.clone(),
            Some(n) => x.mod_floor(&BigInt::from(n)),
        }
    }

    pub fn from_i64(&self, x: i64) -> BigInt {
        self.reduce(&BigInt::from(x))
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self.modulus() {
            None => x.abs().is_one(),
            Some(n) => x.gcd(&BigInt::from(n)).is_one(),
        }
    }

    /// Canonical generator of the ideal `(x)`: `|x|` over `Z`, `gcd(x, n)`
    /// (with `n` written as 0) over `Z/n`.
    pub fn associate(&self, x: &BigInt) -> BigInt {
        match self.modulus() {
            None => x.abs(),
            Some(n) => {
                let n = BigInt::from(n);
                let g = x.gcd(&n);
                if g == n {
                    BigInt::zero()
                } else {
                    g
                }
            }
        }
    }

    /// Solves `d * y = c` for `y` where `d` is a canonical ideal generator.
    pub(crate) fn divide(&self, c: &BigInt, d: &BigInt) -> Option<BigInt> {
        let c = self.reduce(c);
        if d.is_zero() {
            return c.is_zero().then(BigInt::zero);
        }
        let (q, r) = c.div_rem(d);
        r.is_zero().then(|| self.reduce(&q))
    }

    /// Generator of the annihilator of a canonical ideal generator `d`,
    /// or `None` when the annihilator is zero.
    pub(crate) fn annihilator(&self, d: &BigInt) -> Option<BigInt> {
        if d.is_zero() {
            return Some(BigInt::one());
        }
        match self.modulus() {
            None => None,
            Some(n) => {
                let a = BigInt::from(n) / d;
                let a = self.reduce(&a);
                (!a.is_zero()).then_some(a)
            }
        }
    }

    /// Inverse of a unit.
    pub(crate) fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        match self.modulus() {
            None => x.abs().is_one().then(|| x.clone()),
            Some(n) => {
                let n = BigInt::from(n);
                let e = x.extended_gcd(&n);
                e.gcd.is_one().then(|| e.x.mod_floor(&n))
            }
        }
    }

    /// Unit `w` with `g * w = x`, where `g = associate(x)`.
    pub(crate) fn associate_unit(&self, x: &BigInt) -> BigInt {
        let g = self.associate(x);
        match self.modulus() {
            None => {
                if x.is_negative() {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            }
            Some(n) => {
                if g.is_zero() {
                    return BigInt::one();
                }
                let n = BigInt::from(n);
                let x = self.reduce(x);
                let step = &n / &g;
                let mut w = (&x / &g).mod_floor(&step);
                while !w.gcd(&n).is_one() {
                    w += &step;
                }
                w
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersMod(n) => write!(f, "Z/{n}"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Which side modules live on. The supported rings are commutative, so this
/// is bookkeeping for `R` versus `R^op`; only the duality flips it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub ring: Ring,
    pub side: Side,
}

impl RingSpec {
    pub fn new(ring: Ring) -> Self {
        RingSpec {
            ring,
            side: Side::Left,
        }
    }

    pub fn opposite(self) -> Self {
        RingSpec {
            ring: self.ring,
            side: self.side.opposite(),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(x: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = x.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}
