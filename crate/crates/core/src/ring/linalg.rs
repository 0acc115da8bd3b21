use num_bigint::BigInt;
use num_traits::Zero;

use super::{smith_normal_form, Mat, Smith};
use crate::error::{ensure_same_ring, Error, Result};

/// Outcome of a linear solve, keeping the obstruction when there is none.
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Solved(Mat),
    /// In Smith coordinates, row `row` of right-hand column `column` reads
    /// `divisor * y = residue` and has no solution.
    Obstructed {
        column: usize,
        row: usize,
        residue: BigInt,
        divisor: BigInt,
    },
}

/// Finds `X` with `A·X = B`, or `None` when the system is inconsistent.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Option<Mat>> {
    Ok(match solve_detailed(a, b)? {
        SolveOutcome::Solved(x) => Some(x),
        SolveOutcome::Obstructed { .. } => None,
    })
}

pub fn solve_detailed(a: &Mat, b: &Mat) -> Result<SolveOutcome> {
    ensure_same_ring(a.ring(), b.ring())?;
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "solve: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let smith = smith_normal_form(a);
    Ok(solve_with(&smith, b))
}

pub(crate) fn solve_with(smith: &Smith, b: &Mat) -> SolveOutcome {
    let ring = b.ring();
    let (m, n) = smith.s.shape();
    let k = m.min(n);
    let c = &smith.u * b;
    let mut y = Mat::zeros(ring, n, b.cols());
    for q in 0..b.cols() {
        for i in 0..m {
            let ci = c.get(i, q);
            let d = if i < k { smith.s.get(i, i).clone() } else { BigInt::zero() };
            match ring.divide(ci, &d) {
                Some(yi) => {
                    if i < k {
                        y.set(i, q, yi);
                    }
                }
                None => {
                    return SolveOutcome::Obstructed {
                        column: q,
                        row: i,
                        residue: ci.clone(),
                        divisor: d,
                    }
                }
            }
        }
    }
    SolveOutcome::Solved(&smith.v * &y)
}

/// Columns generating `{x : A·x = 0}`. Zero columns are dropped, so an
/// injective map yields a matrix with no columns.
pub fn kernel_matrix(a: &Mat) -> Mat {
    let smith = smith_normal_form(a);
    kernel_with(&smith, a)
}

fn kernel_with(smith: &Smith, a: &Mat) -> Mat {
    let ring = a.ring();
    let (m, n) = a.shape();
    let k = m.min(n);
    let mut cols = Vec::new();
    for i in 0..n {
        let scale = if i < k {
            ring.annihilator(smith.s.get(i, i))
        } else {
            Some(BigInt::from(1))
        };
        if let Some(s) = scale {
            cols.push(smith.v.col_vec(i).into_iter().map(|x| x * &s).collect::<Vec<_>>());
        }
    }
    Mat::from_big_cols(ring, n, &cols).nonzero_cols()
}
