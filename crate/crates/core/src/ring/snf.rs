use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Mat, Ring};

/// Smith normal form `U·A·V = S` with `U⁻¹` kept alongside.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: Mat,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub rank: usize,
}

impl Smith {
    /// The `min(rows, cols)` diagonal entries, each a canonical ideal generator.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Computes the Smith normal form.
///
/// Over `Z/n` the matrix is lifted to `Z`, reduced there, and the transforms
/// are read back modulo `n`; the diagonal is then rescaled by units so that
/// each entry is a divisor of `n` (with `n` itself written as 0).
pub fn smith_normal_form(a: &Mat) -> Smith {
    let ring = a.ring();
    let mut w = Work::new(a);
    w.run();
    let (m, n) = (w.m, w.n);
    let s = Mat::from_raw(ring, m, n, w.a);
    let u = Mat::from_raw(ring, m, m, w.u);
    let u_inv = Mat::from_raw(ring, m, m, w.uinv);
    let mut v = Mat::from_raw(ring, n, n, w.v);
    if ring == Ring::Integers {
        return Smith {
            s,
            u,
            u_inv,
            v,
            rank: w.rank,
        };
    }
    let mut s = s;
    let k = m.min(n);
    let mut rank = 0;
    for i in 0..k {
        let d = s.get(i, i).clone();
        let g = ring.associate(&d);
        if !g.is_zero() {
            rank += 1;
        }
        if g != d {
            let unit = ring.associate_unit(&d);
            let inv = ring.inverse(&unit).expect("associate_unit returns a unit");
            for r in 0..n {
                let x = v.get(r, i) * &inv;
                v.set(r, i, x);
            }
            s.set(i, i, g);
        }
    }
    Smith { s, u, u_inv, v, rank }
}

struct Work {
    m: usize,
    n: usize,
    a: Vec<BigInt>,
    u: Vec<BigInt>,
    uinv: Vec<BigInt>,
    v: Vec<BigInt>,
    rank: usize,
}

fn eye(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n * n];
    for i in 0..n {
        e[i * n + i] = BigInt::from(1);
    }
    e
}

impl Work {
    fn new(a: &Mat) -> Self {
        let (m, n) = a.shape();
        Work {
            m,
            n,
            a: a.raw().to_vec(),
            u: eye(m),
            uinv: eye(m),
            v: eye(n),
            rank: 0,
        }
    }

    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    // row_i += c * row_j
    fn row_addmul(&mut self, i: usize, j: usize, c: &BigInt) {
        let (m, n) = (self.m, self.n);
        for k in 0..n {
            let t = &self.a[j * n + k] * c;
            self.a[i * n + k] += t;
        }
        for k in 0..m {
            let t = &self.u[j * m + k] * c;
            self.u[i * m + k] += t;
        }
        for k in 0..m {
            let t = &self.uinv[k * m + i] * c;
            self.uinv[k * m + j] -= t;
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (m, n) = (self.m, self.n);
        for k in 0..n {
            self.a.swap(i * n + k, j * n + k);
        }
        for k in 0..m {
            self.u.swap(i * m + k, j * m + k);
            self.uinv.swap(k * m + i, k * m + j);
        }
    }

    fn row_neg(&mut self, i: usize) {
        let (m, n) = (self.m, self.n);
        for k in 0..n {
            self.a[i * n + k] = -&self.a[i * n + k];
        }
        for k in 0..m {
            self.u[i * m + k] = -&self.u[i * m + k];
            self.uinv[k * m + i] = -&self.uinv[k * m + i];
        }
    }

    // col_i += c * col_j
    fn col_addmul(&mut self, i: usize, j: usize, c: &BigInt) {
        let (m, n) = (self.m, self.n);
        for k in 0..m {
            let t = &self.a[k * n + j] * c;
            self.a[k * n + i] += t;
        }
        for k in 0..n {
            let t = &self.v[k * n + j] * c;
            self.v[k * n + i] += t;
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (m, n) = (self.m, self.n);
        for k in 0..m {
            self.a.swap(k * n + i, k * n + j);
        }
        for k in 0..n {
            self.v.swap(k * n + i, k * n + j);
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = self.at(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let k = self.m.min(self.n);
        let mut t = 0;
        while t < k {
            let Some((pi, pj)) = self.min_nonzero(t) else {
                break;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.m {
                    if !self.at(i, t).is_zero() {
                        let q = self.at(i, t).div_floor(self.at(t, t));
                        self.row_addmul(i, t, &-q);
                        if !self.at(i, t).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.n {
                    if !self.at(t, j).is_zero() {
                        let q = self.at(t, j).div_floor(self.at(t, t));
                        self.col_addmul(j, t, &-q);
                        if !self.at(t, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    let mut best = (t, t, self.at(t, t).abs());
                    for i in t + 1..self.m {
                        let x = self.at(i, t);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (i, t, x.abs());
                        }
                    }
                    for j in t + 1..self.n {
                        let x = self.at(t, j);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (t, j, x.abs());
                        }
                    }
                    self.row_swap(t, best.0);
                    self.col_swap(t, best.1);
                    continue;
                }
                let p = self.at(t, t).clone();
                let bad_row = (t + 1..self.m)
                    .find(|&i| (t + 1..self.n).any(|j| !self.at(i, j).is_multiple_of(&p)));
                match bad_row {
                    Some(i) => self.row_addmul(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.at(t, t).is_negative() {
                self.row_neg(t);
            }
            t += 1;
        }
        self.rank = t;
    }
}
