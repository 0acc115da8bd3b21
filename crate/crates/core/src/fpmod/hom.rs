use super::{morphism::submodule, FpModule, ModMorphism};
use crate::error::{ensure_same_ring, Error, Result};
use crate::ring::{kernel_matrix, smith_normal_form, solve_linear, solve_with, Mat, Smith, SolveOutcome};

/// `Hom(M, N)` as a finitely presented module.
///
/// Maps `M → N` are `h×g` matrices; they are handled through their
/// column-major vectorization. `gens` holds the generators of the module of
/// well-defined maps, `zero_sub` spans the maps that are zero (columns in
/// the relations of `N`).
#[derive(Clone, Debug)]
pub struct HomSpace {
    src: FpModule,
    tgt: FpModule,
    gens: Mat,
    module: FpModule,
    coord_smith: Smith,
}

pub fn hom_module(m: &FpModule, n: &FpModule) -> Result<HomSpace> {
    ensure_same_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let (g, h) = (m.gens(), n.gens());
    let (a, b) = (m.rel(), n.rel());
    let r = a.cols();
    // Φ·A = B·Λ  ⇔  (Aᵀ⊗I_h) vec Φ − (I_r⊗B) vec Λ = 0
    let system = a
        .transpose()
        .kron(&Mat::identity(ring, h))
        .hstack(&-&Mat::identity(ring, r).kron(b));
    let syz = kernel_matrix(&system);
    let wd = syz.row_range(0, h * g).nonzero_cols();
    let zero_sub = Mat::identity(ring, g).kron(b);
    let amb = FpModule::from_rel(zero_sub.clone());
    let (raw, incl) = submodule(&amb, &wd);
    let min = raw.minimize();
    let gens = &incl.phi().clone() * min.from.phi();
    let coord_smith = smith_normal_form(&gens.hstack(&zero_sub));
    Ok(HomSpace {
        src: m.clone(),
        tgt: n.clone(),
        gens,
        module: min.module,
        coord_smith,
    })
}

impl HomSpace {
    pub fn module(&self) -> &FpModule {
        &self.module
    }

    pub fn src(&self) -> &FpModule {
        &self.src
    }

    pub fn tgt(&self) -> &FpModule {
        &self.tgt
    }

    pub fn num_generators(&self) -> usize {
        self.gens.cols()
    }

    pub fn generator_matrix(&self, j: usize) -> Mat {
        Mat::unvectorize(&self.gens, j, self.tgt.gens(), self.src.gens())
    }

    pub fn generator(&self, j: usize) -> ModMorphism {
        ModMorphism::new(self.src.clone(), self.tgt.clone(), self.generator_matrix(j))
            .expect("Hom generators are well defined")
    }

    /// Turns a coefficient column (one entry per generator) into a map.
    pub fn materialize(&self, coeffs: &Mat) -> Result<ModMorphism> {
        if coeffs.shape() != (self.gens.cols(), 1) {
            return Err(Error::Dimension("coefficient vector length".into()));
        }
        let v = &self.gens * coeffs;
        let phi = Mat::unvectorize(&v, 0, self.tgt.gens(), self.src.gens());
        ModMorphism::new(self.src.clone(), self.tgt.clone(), phi)
    }

    /// Coordinates of a well-defined map matrix, one column per matrix.
    pub fn coords_of_matrices(&self, phis: &[Mat]) -> Mat {
        let ring = self.gens.ring();
        let rows = self.gens.rows();
        let cols: Vec<Mat> = phis.iter().map(Mat::vectorize).collect();
        let refs: Vec<&Mat> = cols.iter().collect();
        let rhs = Mat::hstack_all(ring, rows, &refs);
        match solve_with(&self.coord_smith, &rhs) {
            SolveOutcome::Solved(x) => x.row_range(0, self.gens.cols()),
            SolveOutcome::Obstructed { column, .. } => {
                panic!("matrix {:?} is not a well-defined map", phis[column])
            }
        }
    }

    pub fn coords(&self, f: &ModMorphism) -> Result<Mat> {
        if f.src() != &self.src || f.tgt() != &self.tgt {
            return Err(Error::Dimension("map does not belong to this Hom".into()));
        }
        Ok(self.coords_of_matrices(std::slice::from_ref(f.phi())))
    }
}

/// `M ⊗ N` presented on the generators `eᵢ ⊗ fⱼ` (index `i·h + j`).
pub fn tensor_module(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    ensure_same_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let left = m.rel().kron(&Mat::identity(ring, n.gens()));
    let right = Mat::identity(ring, m.gens()).kron(n.rel());
    Ok(FpModule::from_rel(left.hstack(&right)))
}

/// Finds `w: B → C` with `w ∘ k = h` for `k: A → B`, `h: A → C`.
pub fn factor_through(h: &ModMorphism, k: &ModMorphism) -> Result<Option<ModMorphism>> {
    if h.src() != k.src() {
        return Err(Error::Dimension("factor_through: maps have different sources".into()));
    }
    let ring = h.src().ring();
    let b = k.tgt();
    let c = h.tgt();
    let (nb, nc) = (b.gens(), c.gens());
    let sb = b.num_relations();
    let e = b.rel().hstack(k.phi());
    let t = Mat::zeros(ring, nc, sb).hstack(h.phi());
    let system = e
        .transpose()
        .kron(&Mat::identity(ring, nc))
        .hstack(&-&Mat::identity(ring, e.cols()).kron(c.rel()));
    let Some(sol) = solve_linear(&system, &t.vectorize())? else {
        return Ok(None);
    };
    let w = Mat::unvectorize(&sol.row_range(0, nc * nb), 0, nc, nb);
    Ok(Some(ModMorphism::new(b.clone(), c.clone(), w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::iso_modules;
    use crate::ring::Ring;

    #[test]
    fn hom_examples() {
        let z = Ring::Integers;
        let h = hom_module(&FpModule::cyclic(z, 4), &FpModule::cyclic(z, 6)).unwrap();
        assert!(iso_modules(h.module(), &FpModule::cyclic(z, 2)).unwrap());
        let n = FpModule::from_cols(z, 2, &[vec![2, 4], vec![0, 6]]);
        let h = hom_module(&FpModule::free(z, 1), &n).unwrap();
        assert!(iso_modules(h.module(), &n).unwrap());
        let h = hom_module(&FpModule::cyclic(z, 2), &FpModule::free(z, 1)).unwrap();
        assert!(h.module().is_zero());
    }

    #[test]
    fn materialize_and_coords_agree() {
        let z = Ring::Integers;
        let m = FpModule::diagonal(z, &[4, 0]);
        let n = FpModule::diagonal(z, &[6, 2]);
        let h = hom_module(&m, &n).unwrap();
        for j in 0..h.num_generators() {
            let g = h.generator(j);
            let c = h.coords(&g).unwrap();
            let back = h.materialize(&c).unwrap();
            assert!(back.equals(&g).unwrap());
        }
    }

    #[test]
    fn tensor_examples() {
        let z = Ring::Integers;
        let t = tensor_module(&FpModule::cyclic(z, 4), &FpModule::cyclic(z, 6)).unwrap();
        assert!(iso_modules(&t, &FpModule::cyclic(z, 2)).unwrap());
        let m = FpModule::from_cols(z, 2, &[vec![3, 6]]);
        let t = tensor_module(&m, &FpModule::free(z, 1)).unwrap();
        assert!(iso_modules(&t, &m).unwrap());
        let t = tensor_module(&FpModule::cyclic(z, 2), &FpModule::cyclic(z, 3)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn factoring_through_a_map() {
        let z = Ring::Integers;
        let free = FpModule::free(z, 1);
        let four = ModMorphism::new(free.clone(), free.clone(), Mat::from_rows(z, &[vec![4]])).unwrap();
        let two = ModMorphism::new(free.clone(), free.clone(), Mat::from_rows(z, &[vec![2]])).unwrap();
        let w = factor_through(&four, &two).unwrap().unwrap();
        assert!(w.after(&two).unwrap().equals(&four).unwrap());
        let three = ModMorphism::new(free.clone(), free, Mat::from_rows(z, &[vec![3]])).unwrap();
        assert!(factor_through(&three, &two).unwrap().is_none());
    }
}
