use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::eval::evaluate;
use super::limits::{is_zero_functor, nat_is_zero};
use super::nathom::{nat_hom, NatHom};
use super::{FpFunctor, NatMor};
use crate::error::{ensure_same_ring, Error, Result};
use crate::fpmod::{iso_modules, FpModule, InvariantFactors};
use crate::ring::{solve_linear, Mat};

/// Limits on the witness search in [`iso_functors`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest absolute value tried for a coordinate of a candidate.
    pub coefficient_bound: u32,
    /// Candidates examined before giving up.
    pub max_candidates: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            coefficient_bound: 2,
            max_candidates: 2048,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub forward: NatMor,
    pub backward: NatMor,
}

#[derive(Clone, Debug)]
pub enum NonIsoCertificate {
    /// The two functors take non-isomorphic values at `module`.
    Evaluation {
        module: FpModule,
        lhs: InvariantFactors,
        rhs: InvariantFactors,
    },
    /// `Nat(F, G)` and `Nat(F, F)` differ, which cannot happen if `F ≅ G`.
    NatGroups {
        nat_fg: InvariantFactors,
        nat_ff: InvariantFactors,
    },
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum IsoDecision {
    Yes(IsoWitness),
    No(NonIsoCertificate),
    Unknown { candidates_tried: usize },
}

impl IsoDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoDecision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoDecision::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoDecision::Yes(_) => "yes",
            IsoDecision::No(_) => "no",
            IsoDecision::Unknown { .. } => "unknown",
        }
    }
}

/// Decides `F ≅ G` where it can.
///
/// Refutation compares values on `testbed` and on the modules in both
/// presentations. Confirmation searches `Nat(F, G)` for an `a` admitting a
/// two-sided inverse; for each candidate the left inverse is a linear
/// problem, so only `a` is enumerated.
pub fn iso_functors(f: &FpFunctor, g: &FpFunctor, budget: Budget, testbed: &[FpModule]) -> Result<IsoDecision> {
    ensure_same_ring(f.ring(), g.ring())?;
    if f.side() != g.side() {
        return Err(Error::Unsupported("functors live on different sides".into()));
    }
    let ring = f.ring();
    let mut probes: Vec<FpModule> = testbed.to_vec();
    probes.extend([f.x(), f.y(), g.x(), g.y()].into_iter().cloned());
    probes.push(FpModule::free(ring, 1));
    let verdicts: Vec<Option<NonIsoCertificate>> = probes
        .par_iter()
        .map(|a| -> Result<Option<NonIsoCertificate>> {
            let (l, r) = (evaluate(f, a)?, evaluate(g, a)?);
            Ok((!iso_modules(&l, &r)?).then(|| NonIsoCertificate::Evaluation {
                module: a.clone(),
                lhs: l.invariant_factors(),
                rhs: r.invariant_factors(),
            }))
        })
        .collect::<Result<_>>()?;
    if let Some(cert) = verdicts.into_iter().flatten().next() {
        return Ok(IsoDecision::No(cert));
    }

    if f.same_arrow(g) {
        let id = NatMor::identity(f);
        return Ok(IsoDecision::Yes(IsoWitness {
            forward: id.clone().with_ends(f.clone(), g.clone()),
            backward: id.with_ends(g.clone(), f.clone()),
        }));
    }
    if is_zero_functor(f)? && is_zero_functor(g)? {
        return Ok(IsoDecision::Yes(IsoWitness {
            forward: NatMor::zero(f, g),
            backward: NatMor::zero(g, f),
        }));
    }

    let fg = nat_hom(f, g)?;
    let ff = nat_hom(f, f)?;
    if !iso_modules(fg.module(), ff.module())? {
        return Ok(IsoDecision::No(NonIsoCertificate::NatGroups {
            nat_fg: fg.module().invariant_factors(),
            nat_ff: ff.module().invariant_factors(),
        }));
    }
    let gf = nat_hom(g, f)?;
    let back_u: Vec<Mat> = (0..gf.num_generators()).map(|i| gf.generator(i).u().phi().clone()).collect();

    let mut tried = 0;
    for coeffs in candidates(&fg, budget) {
        tried += 1;
        let a = fg.materialize(&coeffs)?;
        if let Some(b) = left_inverse(f, &a, &gf, &back_u)? {
            let round = a.after(&b)?.sub(&NatMor::identity(g).with_ends(g.clone(), g.clone()))?;
            if nat_is_zero(&round)? {
                return Ok(IsoDecision::Yes(IsoWitness { forward: a, backward: b }));
            }
        }
    }
    Ok(IsoDecision::Unknown { candidates_tried: tried })
}

/// Finds `b: G → F` with `b∘a = id_F`, if one exists.
///
/// With `b = Σ cᵢ bᵢ` over generators of `Nat(G, F)`, `b∘a − id` has
/// `u = u_a·Σ cᵢ U_i − I`, which must factor through `f` as `W·f` with `W`
/// well defined on `Y`. Everything is linear in `(c, W)` modulo relations.
fn left_inverse(f: &FpFunctor, a: &NatMor, gf: &NatHom, back_u: &[Mat]) -> Result<Option<NatMor>> {
    let ring = f.ring();
    let x = f.x().gens();
    let rx = f.x().rel();
    let ry = f.y().rel();
    let (sx, sy) = (rx.cols(), ry.cols());
    let k = back_u.len();
    let ua = a.u().phi();
    let ix = Mat::identity(ring, x);

    let cvecs: Vec<Mat> = back_u.iter().map(|ui| (ua * ui).vectorize()).collect();
    let crefs: Vec<&Mat> = cvecs.iter().collect();
    let cblock = Mat::hstack_all(ring, x * x, &crefs);
    let fw = -&f.arrow().phi().transpose().kron(&ix);
    let l1 = -&ix.kron(rx);
    let top = Mat::hstack_all(ring, x * x, &[&cblock, &fw, &l1, &Mat::zeros(ring, x * x, sy * sx)]);
    let bottom = Mat::hstack_all(
        ring,
        x * sy,
        &[
            &Mat::zeros(ring, x * sy, k),
            &ry.transpose().kron(&ix),
            &Mat::zeros(ring, x * sy, x * sx),
            &-&Mat::identity(ring, sy).kron(rx),
        ],
    );
    let system = top.vstack(&bottom);
    let rhs = ix.vectorize().vstack(&Mat::zeros(ring, x * sy, 1));
    let Some(sol) = solve_linear(&system, &rhs)? else {
        return Ok(None);
    };
    gf.materialize(&sol.row_range(0, k)).map(Some)
}

/// Coefficient vectors for `Nat(F, G)` in order of increasing max-norm,
/// skipping zero and repeats modulo generator orders.
fn candidates(nat: &NatHom, budget: Budget) -> impl Iterator<Item = Mat> + '_ {
    let m = nat.module();
    let ring = m.ring();
    let k = m.gens();
    let orders: Vec<Option<BigInt>> = (0..k)
        .map(|i| {
            m.rel()
                .columns()
                .into_iter()
                .find_map(|c| (!c[i].is_zero()).then(|| c[i].abs()))
                .or_else(|| ring.modulus().map(BigInt::from))
        })
        .collect();
    let bound = budget.coefficient_bound as i64;
    let domains: Vec<Vec<i64>> = orders
        .iter()
        .map(|ord| {
            let mut vals = vec![0i64];
            for s in 1..=bound {
                for v in [s, -s] {
                    let fresh = match ord {
                        Some(d) => !vals.iter().any(|w| ((BigInt::from(v - w)) % d).is_zero()),
                        None => true,
                    };
                    if fresh {
                        vals.push(v);
                    }
                }
            }
            vals
        })
        .collect();
    (1..=bound)
        .flat_map(move |shell| shell_vectors(&domains, shell))
        .take(budget.max_candidates)
        .map(move |v| Mat::from_cols(ring, k, &[v]))
}

/// All vectors over the given per-coordinate domains whose max-norm is
/// exactly `shell`.
fn shell_vectors(domains: &[Vec<i64>], shell: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for d in domains {
        let opts: Vec<i64> = d.iter().copied().filter(|v| v.abs() <= shell).collect();
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                opts.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|x| x.abs() == shell));
    out
}
