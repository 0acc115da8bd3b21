use super::{cokernel_mor, kernel_mor, power, FpModule, ModMorphism};
use crate::error::{ensure_same_ring, Error, Result};
use crate::ring::{kernel_matrix, solve_linear, Mat};

/// `Tr(M) = coker(relᵀ)`. Depends on the presentation; only its stable
/// class is an invariant of `M`.
pub fn transpose(m: &FpModule) -> FpModule {
    FpModule::from_rel(m.rel().transpose())
}

/// `ΩM = ker(R^g → M)`, presented on the relation columns of `M`.
pub fn syzygy(m: &FpModule) -> FpModule {
    FpModule::from_rel(kernel_matrix(m.rel()))
}

/// The inclusion `ΩM → R^g` of [`syzygy`] into the free cover of `M`.
pub fn syzygy_inclusion(m: &FpModule) -> ModMorphism {
    let omega = syzygy(m);
    let cover = FpModule::free(m.ring(), m.gens());
    let cert = Mat::zeros(m.ring(), 0, omega.num_relations());
    ModMorphism::from_parts(omega, cover, m.rel().clone(), cert)
}

/// Differentials `d₁, …, d_len` of the free resolution obtained by iterated
/// syzygies: `d₁ = rel`, `d_{i+1} = ker dᵢ`.
pub fn free_resolution(m: &FpModule, len: usize) -> Vec<Mat> {
    let mut out: Vec<Mat> = Vec::with_capacity(len);
    for i in 0..len {
        let d = if i == 0 {
            m.rel().clone()
        } else {
            kernel_matrix(&out[i - 1])
        };
        out.push(d);
    }
    out
}

/// `ker α / im β` for `P →β Q →α T` with `α∘β = 0`.
pub fn homology(beta: &ModMorphism, alpha: &ModMorphism) -> Result<FpModule> {
    if beta.tgt() != alpha.src() {
        return Err(Error::Dimension("homology: maps are not composable".into()));
    }
    let q = alpha.src();
    let (k, incl) = kernel_mor(alpha);
    let stacked = incl.phi().hstack(q.rel());
    let lift = solve_linear(&stacked, beta.phi())?.ok_or_else(|| {
        Error::IllDefined("homology: image is not contained in the kernel".into())
    })?;
    let z = lift.row_range(0, k.gens());
    let into_k = ModMorphism::new(beta.src().clone(), k, z)?;
    Ok(cokernel_mor(&into_k).0.minimize().module)
}

fn rank_sequence(m: &FpModule, res: &[Mat]) -> Vec<usize> {
    std::iter::once(m.gens()).chain(res.iter().map(Mat::cols)).collect()
}

/// `Extⁿ(M, N)` from the iterated-syzygy resolution of `M`.
pub fn ext_value(n: usize, m: &FpModule, target: &FpModule) -> Result<FpModule> {
    ensure_same_ring(m.ring(), target.ring())?;
    let ring = m.ring();
    let h = target.gens();
    let res = free_resolution(m, n + 1);
    let ranks = rank_sequence(m, &res);
    let cochain = |i: usize| power(target, ranks[i]);
    // δⁱ: Hom(F_{i-1}, N) → Hom(F_i, N), Y ↦ Y·dᵢ
    let delta = |i: usize| -> Result<ModMorphism> {
        let d = &res[i - 1];
        ModMorphism::new(cochain(i - 1), cochain(i), d.transpose().kron(&Mat::identity(ring, h)))
    };
    let incoming = if n == 0 {
        ModMorphism::zero(&FpModule::zero(ring), &cochain(0))
    } else {
        delta(n)?
    };
    homology(&incoming, &delta(n + 1)?)
}

/// `Torₙ(M, N)` from the iterated-syzygy resolution of `M`.
pub fn tor_value(n: usize, m: &FpModule, target: &FpModule) -> Result<FpModule> {
    ensure_same_ring(m.ring(), target.ring())?;
    let ring = m.ring();
    let h = target.gens();
    let res = free_resolution(m, n + 1);
    let ranks = rank_sequence(m, &res);
    let chain = |i: usize| power(target, ranks[i]);
    // ∂ᵢ: F_i ⊗ N → F_{i-1} ⊗ N, Y ↦ Y·dᵢᵀ
    let boundary = |i: usize| -> Result<ModMorphism> {
        ModMorphism::new(chain(i), chain(i - 1), res[i - 1].kron(&Mat::identity(ring, h)))
    };
    let outgoing = if n == 0 {
        ModMorphism::zero(&chain(0), &FpModule::zero(ring))
    } else {
        boundary(n)?
    };
    homology(&boundary(n + 1)?, &outgoing)
}

/// A lift of `f: M → N` to free covers and its restriction to syzygies.
#[derive(Clone, Debug)]
pub struct SyzygyLift {
    /// `f_P: R^{g_M} → R^{g_N}`, commuting with the covers.
    pub cover_map: Mat,
    /// `Ωf: ΩM → ΩN`.
    pub omega: ModMorphism,
}

/// The matrix of `f` already lifts it to the covers; the certificate is the
/// induced map on relation columns, i.e. on syzygy generators.
pub fn lift_syzygy(f: &ModMorphism) -> SyzygyLift {
    let omega = ModMorphism::new(syzygy(f.src()), syzygy(f.tgt()), f.cert().clone())
        .expect("certificate restricts to syzygies");
    SyzygyLift {
        cover_map: f.phi().clone(),
        omega,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::iso_modules;
    use crate::ring::Ring;

    fn iso(a: &FpModule, b: &FpModule) -> bool {
        iso_modules(a, b).unwrap()
    }

    #[test]
    fn transpose_examples() {
        let z = Ring::Integers;
        assert_eq!(transpose(&FpModule::cyclic(z, 4)), FpModule::cyclic(z, 4));
        assert!(transpose(&FpModule::free(z, 3)).is_zero());
        let d = FpModule::diagonal(z, &[2, 3]);
        assert!(iso(&transpose(&d), &d));
    }

    #[test]
    fn syzygy_examples() {
        let z = Ring::Integers;
        assert!(iso(&syzygy(&FpModule::cyclic(z, 4)), &FpModule::free(z, 1)));
        assert!(syzygy(&FpModule::free(z, 2)).is_zero());
        let r8 = Ring::IntegersMod(8);
        assert!(iso(&syzygy(&FpModule::cyclic(r8, 2)), &FpModule::cyclic(r8, 4)));
    }

    #[test]
    fn ext_examples() {
        let z = Ring::Integers;
        let e = ext_value(1, &FpModule::cyclic(z, 4), &FpModule::cyclic(z, 6)).unwrap();
        assert!(iso(&e, &FpModule::cyclic(z, 2)));
        let e = ext_value(1, &FpModule::free(z, 1), &FpModule::cyclic(z, 6)).unwrap();
        assert!(e.is_zero());
        let r8 = Ring::IntegersMod(8);
        let e = ext_value(1, &FpModule::cyclic(r8, 2), &FpModule::cyclic(r8, 2)).unwrap();
        assert!(iso(&e, &FpModule::cyclic(r8, 2)));
    }

    #[test]
    fn ext_zero_is_hom() {
        let z = Ring::Integers;
        let m = FpModule::diagonal(z, &[4, 0]);
        let n = FpModule::diagonal(z, &[6, 9]);
        let e0 = ext_value(0, &m, &n).unwrap();
        let h = crate::fpmod::hom_module(&m, &n).unwrap();
        assert!(iso(&e0, h.module()));
    }

    #[test]
    fn tor_examples() {
        let z = Ring::Integers;
        let t = tor_value(1, &FpModule::cyclic(z, 4), &FpModule::cyclic(z, 6)).unwrap();
        assert!(iso(&t, &FpModule::cyclic(z, 2)));
        assert!(tor_value(1, &FpModule::free(z, 1), &FpModule::cyclic(z, 6)).unwrap().is_zero());
        let r8 = Ring::IntegersMod(8);
        let t = tor_value(1, &FpModule::cyclic(r8, 2), &FpModule::cyclic(r8, 2)).unwrap();
        assert!(iso(&t, &FpModule::cyclic(r8, 2)));
        let t0 = tor_value(0, &FpModule::cyclic(z, 4), &FpModule::cyclic(z, 6)).unwrap();
        assert!(iso(&t0, &FpModule::cyclic(z, 2)));
    }

    #[test]
    fn syzygy_lift_examples() {
        let z = Ring::Integers;
        let m4 = FpModule::cyclic(z, 4);
        let id = lift_syzygy(&ModMorphism::identity(&m4));
        assert!(id.cover_map.is_identity());
        assert!(id.omega.equals(&ModMorphism::identity(&syzygy(&m4))).unwrap());
        let surj = ModMorphism::new(m4, FpModule::cyclic(z, 2), Mat::from_rows(z, &[vec![1]])).unwrap();
        let lift = lift_syzygy(&surj);
        assert_eq!(lift.omega.phi(), &Mat::from_rows(z, &[vec![2]]));
        let zero = ModMorphism::zero(&FpModule::cyclic(z, 4), &FpModule::cyclic(z, 2));
        assert!(lift_syzygy(&zero).omega.is_zero());
    }
}
