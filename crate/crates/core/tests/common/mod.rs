//! Brute-force oracles over small finite abelian groups.
//!
//! Nothing here calls into the library's linear algebra: groups are
//! enumerated element by element and compared through their element-order
//! statistics, which determine a finite abelian group up to isomorphism.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use tfp_core::fpmod::InvariantFactors;

pub type OrderStats = BTreeMap<u64, usize>;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Element orders of `Z/d₁ × … × Z/d_k`, by enumeration.
pub fn product_stats(ds: &[u64]) -> OrderStats {
    let mut stats = OrderStats::new();
    let total: u64 = ds.iter().product();
    for mut idx in 0..total {
        let mut ord = 1;
        for &d in ds {
            let x = idx % d;
            idx /= d;
            let o = d / gcd(x, d);
            ord = ord / gcd(ord, o) * o;
        }
        *stats.entry(ord).or_default() += 1;
    }
    stats
}

/// Order statistics of the group the library claims, from its invariant
/// factors. Panics on a free summand over `Z`.
pub fn stats_of(f: &InvariantFactors) -> OrderStats {
    let ds: Vec<u64> = f
        .ideal_generators()
        .iter()
        .map(|d| {
            let d = d.to_u64().expect("small factor");
            assert!(d != 0, "expected a finite group, got {f:?}");
            d
        })
        .collect();
    product_stats(&ds)
}

/// `ker(x ↦ a·x)` on `Z/b`.
pub fn kernel_of_multiplication(a: u64, b: u64) -> OrderStats {
    let mut stats = OrderStats::new();
    for x in 0..b {
        if (a * x).is_multiple_of(b) {
            *stats.entry(b / gcd(x, b)).or_default() += 1;
        }
    }
    stats
}

/// Order statistics of `(Z/m) / S` for a subgroup `S` given as a set.
pub fn quotient_stats(m: u64, sub: &BTreeSet<u64>) -> OrderStats {
    let mut seen = BTreeSet::new();
    let mut stats = OrderStats::new();
    for x in 0..m {
        let coset: BTreeSet<u64> = sub.iter().map(|s| (x + s) % m).collect();
        let rep = *coset.iter().next().expect("nonempty");
        if !seen.insert(rep) {
            continue;
        }
        let ord = (1..=m).find(|k| sub.contains(&((k * x) % m))).expect("finite order");
        *stats.entry(ord).or_default() += 1;
    }
    stats
}

/// `coker(x ↦ a·x)` on `Z/b`.
pub fn cokernel_of_multiplication(a: u64, b: u64) -> OrderStats {
    let image: BTreeSet<u64> = (0..b).map(|x| (a * x) % b).collect();
    quotient_stats(b, &image)
}

/// `Hom(Z/n, Z/m)` over `Z/r` (`r = 0` for `Z`) modulo maps factoring
/// through the free cover `R → Z/m`.
///
/// Maps `Z/n → Z/m` are the `x` with `n·x = 0`. Over `Z` nothing nonzero
/// factors through a free module (`Hom(Z/n, Z) = 0`). Over `Z/r` a map
/// `Z/n → R` is `1 ↦ y` with `n·y = 0` in `Z/r`, and composes to `y mod m`.
pub fn stable_hom_cyclic(n: u64, m: u64, r: u64) -> OrderStats {
    let homs: BTreeSet<u64> = (0..m).filter(|x| (n * x).is_multiple_of(m)).collect();
    let through_free: BTreeSet<u64> = if r == 0 {
        [0].into()
    } else {
        (0..r).filter(|y| (n * y).is_multiple_of(r)).map(|y| y % m).collect()
    };
    let mut stats = OrderStats::new();
    let mut seen = BTreeSet::new();
    for &x in &homs {
        let coset: BTreeSet<u64> = through_free.iter().map(|s| (x + s) % m).collect();
        if !seen.insert(*coset.iter().next().expect("nonempty")) {
            continue;
        }
        let ord = (1..=m)
            .find(|k| through_free.contains(&((k * x) % m)))
            .expect("finite order");
        *stats.entry(ord).or_default() += 1;
    }
    stats
}

/// `(Z/n)^g / L`, with `L` enumerated in full.
pub struct FiniteModule {
    pub n: u64,
    pub gens: usize,
    sub: BTreeSet<Vec<u64>>,
}

fn add(n: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % n).collect()
}

fn scale(n: u64, k: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|x| (k * x) % n).collect()
}

/// Subgroup of `(Z/n)^len` generated by `gens`, by closure.
pub fn span(n: u64, len: usize, gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let mut set: BTreeSet<Vec<u64>> = [vec![0; len]].into();
    let mut frontier: Vec<Vec<u64>> = set.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = add(n, &v, g);
            if set.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    set
}

fn all_vectors(n: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn entry(m: &tfp_core::Mat, i: usize, j: usize) -> u64 {
    m.get(i, j).to_u64().expect("canonical residues")
}

impl FiniteModule {
    pub fn of(m: &tfp_core::fpmod::FpModule) -> Self {
        let n = m.ring().modulus().expect("finite ring");
        let rel = m.rel();
        let cols: Vec<Vec<u64>> = (0..rel.cols()).map(|j| (0..rel.rows()).map(|i| entry(rel, i, j)).collect()).collect();
        FiniteModule {
            n,
            gens: m.gens(),
            sub: span(n, m.gens(), &cols),
        }
    }

    pub fn contains_zero_class(&self, v: &[u64]) -> bool {
        self.sub.contains(v)
    }

    /// Representatives of all elements (one per coset).
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for v in all_vectors(self.n, self.gens) {
            let canon = self.sub.iter().map(|s| add(self.n, &v, s)).min().expect("nonempty");
            if seen.insert(canon.clone()) {
                reps.push(canon);
            }
        }
        reps
    }
}

/// A map is the tuple of images of the source generators, flattened.
pub type Tuple = Vec<u64>;

/// All well-defined maps `x → a` as tuples of images in `(Z/n)^{a.gens}`,
/// one representative per image class.
pub fn homs(x: &tfp_core::fpmod::FpModule, a: &FiniteModule) -> Vec<Tuple> {
    let n = a.n;
    let elems = a.elements();
    let rel = x.rel();
    let mut out = vec![Vec::new()];
    for _ in 0..x.gens() {
        out = out
            .into_iter()
            .flat_map(|p: Tuple| {
                elems.iter().map(move |e| {
                    let mut q = p.clone();
                    q.extend(e);
                    q
                })
            })
            .collect();
    }
    out.retain(|t| {
        (0..rel.cols()).all(|j| {
            let mut acc = vec![0; a.gens];
            for i in 0..x.gens() {
                acc = add(n, &acc, &scale(n, entry(rel, i, j), &t[i * a.gens..(i + 1) * a.gens]));
            }
            a.contains_zero_class(&acc)
        })
    });
    out
}

/// `ψ ∘ φ` for `ψ` given as a tuple on `φ`'s target generators and `φ` as
/// a matrix (target gens × source gens).
pub fn precompose(a: &FiniteModule, psi: &Tuple, phi: &tfp_core::Mat) -> Tuple {
    let n = a.n;
    let g = a.gens;
    let mut out = Vec::with_capacity(phi.cols() * g);
    for j in 0..phi.cols() {
        let mut acc = vec![0; g];
        for k in 0..phi.rows() {
            acc = add(n, &acc, &scale(n, entry(phi, k, j), &psi[k * g..(k + 1) * g]));
        }
        out.extend(acc);
    }
    out
}

/// Tuples are equal as maps when they agree modulo the target relations.
pub fn tuple_is_zero(a: &FiniteModule, t: &Tuple) -> bool {
    t.chunks(a.gens.max(1)).all(|c| a.gens == 0 || a.contains_zero_class(c))
}

/// Order statistics of `{t ∈ group : keep(t)} / {t : zero(t)}` where
/// `group` lists one tuple per map, `zero` decides membership in the
/// subgroup being divided out, and `keep` selects a subgroup.
pub fn quotient_of_maps(
    n: u64,
    group: &[Tuple],
    keep: impl Fn(&Tuple) -> bool,
    zero: impl Fn(&Tuple) -> bool,
) -> OrderStats {
    let kept: Vec<&Tuple> = group.iter().filter(|t| keep(t)).collect();
    let sub = kept.iter().filter(|t| zero(t)).count();
    let mut raw = OrderStats::new();
    for t in &kept {
        let ord = (1..=n).find(|&k| zero(&scale(n, k, t))).expect("n kills everything");
        *raw.entry(ord).or_default() += 1;
    }
    raw.into_iter().map(|(o, c)| (o, c / sub)).collect()
}
