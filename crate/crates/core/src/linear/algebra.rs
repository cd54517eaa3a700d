//! Gaussian elimination over a field.

use crate::matrix::Matrix;
use crate::scalar::Field;

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F> {
    /// Same shape as the input; zero rows are at the bottom.
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].inverse().expect("pivot is nonzero");
        a.scale_row(r, &inv);
        for i in 0..a.rows() {
            if i != r && !a[(i, c)].is_zero() {
                let k = -a[(i, c)].clone();
                a.add_row_multiple(i, r, &k);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { reduced: a, pivots }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).rank()
}

/// Canonical basis of the row space: the nonzero rows of the RREF.
pub fn row_space<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let r = rref(m);
    r.reduced.submatrix(0..r.rank(), 0..m.cols())
}

/// Canonical basis of the column space, as columns.
pub fn column_space<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    row_space(&m.transpose()).transpose()
}

/// Columns spanning `ker m`, in canonical form (the transpose is in RREF).
pub fn kernel<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let r = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !r.pivots.contains(c)).collect();
    let basis = Matrix::from_fn(free.len(), m.cols(), |k, j| {
        let f = free[k];
        if j == f {
            F::one()
        } else if let Some(i) = r.pivots.iter().position(|&p| p == j) {
            -r.reduced[(i, f)].clone()
        } else {
            F::zero()
        }
    });
    row_space(&basis).transpose()
}

/// Rows spanning the left null space `{ y | y m = 0 }`, in RREF.
pub fn cokernel<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    kernel(&m.transpose()).transpose()
}

/// Solves `a x = b`, returning one solution if any exists.
pub fn solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let aug = rref(&a.hstack(b));
    if aug.pivots.iter().any(|&p| p >= a.cols()) {
        return None;
    }
    let mut x = Matrix::zeros(a.cols(), b.cols());
    for (i, &p) in aug.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(p, j)] = aug.reduced[(i, a.cols() + j)].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_rational::BigRational;

    type Q = Matrix<BigRational>;

    fn q(s: &str) -> BigRational {
        <BigRational as Field>::parse(s).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let r = rref(&Q::identity(3));
        assert_eq!(r.reduced, Q::identity(3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_scales_single_row() {
        assert_eq!(
            rref(&Q::from_ints(1, 2, &[2, 4])).reduced,
            Q::from_ints(1, 2, &[1, 2])
        );
    }

    #[test]
    fn rref_of_repeated_row_has_rank_one() {
        let r = rref(&Q::from_ints(2, 2, &[1, 1, 1, 1]));
        assert_eq!(r.reduced, Q::from_ints(2, 2, &[1, 1, 0, 0]));
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn kernel_of_difference_is_diagonal() {
        let k = kernel(&Q::from_ints(1, 2, &[1, -1]));
        assert_eq!(k, Q::from_ints(2, 1, &[1, 1]));
    }

    #[test]
    fn kernel_of_two_three() {
        let m = Q::from_ints(1, 2, &[2, 3]);
        let k = kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // (3, -2) scaled so the first entry is 1
        assert_eq!(
            k,
            Matrix::from_rows(vec![vec![q("1")], vec![q("-2/3")]], 1).unwrap()
        );
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel(&Q::identity(2)).cols(), 0);
    }

    #[test]
    fn cokernel_annihilates() {
        let m = Q::from_ints(3, 1, &[1, 2, 3]);
        let c = cokernel(&m);
        assert_eq!(c.rows(), 2);
        assert!(c.mul(&m).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Q::from_ints(2, 2, &[1, 1, 0, 2]);
        let b = Q::from_ints(2, 1, &[3, 4]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = Q::from_ints(2, 1, &[1, 1]);
        assert!(solve(&singular, &Q::from_ints(2, 1, &[1, 2])).is_none());
    }

    #[test]
    fn gf2_elimination() {
        let m = Matrix::<Fp<2>>::from_ints(2, 2, &[1, 1, 1, 1]);
        assert_eq!(rank(&m), 1);
        assert_eq!(kernel(&m), Matrix::from_ints(2, 1, &[1, 1]));
    }
}
