//! Smith and Hermite normal forms over a Euclidean integer type.

use crate::matrix::Matrix;
use crate::scalar::Int;

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal.
///
/// The nonzero diagonal entries of `s` are positive and each divides the next.
/// The inverses of both transforms are tracked alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: Int> Snf<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

struct SnfCalc<T> {
    s: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: Int> SnfCalc<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &T) {
        self.s.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k.clone());
    }

    /// col[dst] += k col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &T) {
        self.s.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k.clone());
    }

    fn negate_row(&mut self, i: usize) {
        let m1 = -T::one();
        self.s.scale_row(i, &m1);
        self.u.scale_row(i, &m1);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero entry (by absolute value) of the trailing block.
    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = &self.s[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (rows, cols) = (self.s.rows(), self.s.cols());
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.smallest_from(t) else {
                return;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if !self.s[(i, t)].is_zero() {
                        let q = self.s[(i, t)].div_floor(&self.s[(t, t)]);
                        self.add_row(i, t, &-q);
                        clean &= self.s[(i, t)].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.s[(t, j)].is_zero() {
                        let q = self.s[(t, j)].div_floor(&self.s[(t, t)]);
                        self.add_col(j, t, &-q);
                        clean &= self.s[(t, j)].is_zero();
                    }
                }
                if !clean {
                    // a remainder is now smaller than the pivot
                    let mut best = (t, t);
                    for i in t + 1..rows {
                        let x = &self.s[(i, t)];
                        if !x.is_zero() && x.abs() < self.s[best].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..cols {
                        let x = &self.s[(t, j)];
                        if !x.is_zero() && x.abs() < self.s[best].abs() {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let pivot = self.s[(t, t)].clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.s[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.add_row(t, i, &T::one()),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

pub fn snf<T: Int>(m: &Matrix<T>) -> Snf<T> {
    let mut calc = SnfCalc {
        s: m.clone(),
        u: Matrix::identity(m.rows()),
        u_inv: Matrix::identity(m.rows()),
        v: Matrix::identity(m.cols()),
        v_inv: Matrix::identity(m.cols()),
    };
    calc.run();
    Snf {
        u: calc.u,
        u_inv: calc.u_inv,
        s: calc.s,
        v: calc.v,
        v_inv: calc.v_inv,
    }
}

/// Row-style Hermite normal form: the unique representative of the orbit of
/// `m` under left multiplication by unimodular matrices.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and zero
/// rows sit at the bottom. The shape of `m` is preserved.
pub fn hnf_row<T: Int>(m: &Matrix<T>) -> Matrix<T> {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        loop {
            let pivot = (r..a.rows())
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].abs().cmp(&a[(y, c)].abs()));
            let Some(p) = pivot else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..a.rows() {
                if !a[(i, c)].is_zero() {
                    let q = a[(i, c)].div_floor(&a[(r, c)]);
                    a.add_row_multiple(i, r, &-q);
                    done &= a[(i, c)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.scale_row(r, &-T::one());
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    a
}

/// Column-style Hermite form, the right-orbit analogue of [`hnf_row`].
pub fn hnf_col<T: Int>(m: &Matrix<T>) -> Matrix<T> {
    hnf_row(&m.transpose()).transpose()
}

pub fn rank<T: Int>(m: &Matrix<T>) -> usize {
    hnf_row(m).without_zero_rows().rows()
}

/// Columns forming a basis of the integer kernel, in column Hermite form.
pub fn kernel<T: Int>(m: &Matrix<T>) -> Matrix<T> {
    let d = snf(m);
    let r = d.rank();
    let k = d.v.submatrix(0..m.cols(), r..m.cols());
    hnf_col(&k)
}

/// Integer solution of `a x = b`, if one exists.
pub fn solve<T: Int>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let d = snf(a);
    let r = d.rank();
    let ub = d.u.mul(b);
    let mut y = Matrix::zeros(a.cols(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let x = &ub[(i, j)];
            if i < r {
                let di = &d.s[(i, i)];
                if !x.is_multiple_of(di) {
                    return None;
                }
                y[(i, j)] = x.div_floor(di);
            } else if !x.is_zero() {
                return None;
            }
        }
    }
    Some(d.v.mul(&y))
}
