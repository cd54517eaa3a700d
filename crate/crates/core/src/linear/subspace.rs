use serde::Serialize;

use super::algebra::{cokernel, kernel, row_space};
use super::engine::LinearEngine;
use crate::diagram::{Corelation, Cospan, Diagrams, Relation, Span};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, FiniteField};

/// A subspace of `k^dom × k^cod`, held as the RREF of a basis (rows), with
/// no zero rows. Unique per subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace<F> {
    dom: usize,
    cod: usize,
    #[serde(skip)]
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// The span of the given rows.
    pub fn spanned_by(dom: usize, cod: usize, rows: &Matrix<F>) -> Result<Self> {
        Error::check_boundary(rows.cols(), dom + cod)?;
        Ok(Subspace {
            dom,
            cod,
            basis: row_space(rows),
        })
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        Subspace {
            dom,
            cod,
            basis: Matrix::zeros(0, dom + cod),
        }
    }

    /// Graph `{(x, f x)}` of a linear map.
    pub fn graph(f: &Matrix<F>) -> Self {
        let rows = Matrix::identity(f.cols()).hstack(&f.transpose());
        Subspace::spanned_by(f.cols(), f.rows(), &rows).expect("shape")
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn ambient(&self) -> usize {
        self.dom + self.cod
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Relational composite `{(v, w) | ∃ u. (v, u) ∈ self, (u, w) ∈ other}`,
    /// computed by eliminating the shared coordinates.
    pub fn compose_direct(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        Error::check_boundary(self.cod, other.dom)?;
        let (n, z, m) = (self.dom, self.cod, other.cod);
        let (a, b) = (self.dim(), other.dim());
        // coefficient vectors (α, β) with α·V_z = β·W_z
        let v_mid = self.basis.submatrix(0..a, n..n + z);
        let w_mid = other.basis.submatrix(0..b, 0..z);
        let coeffs = cokernel(&v_mid.vstack(&w_mid.neg()));
        let alpha = coeffs.submatrix(0..coeffs.rows(), 0..a);
        let beta = coeffs.submatrix(0..coeffs.rows(), a..a + b);
        let left = alpha.mul(&self.basis.submatrix(0..a, 0..n));
        let right = beta.mul(&other.basis.submatrix(0..b, z..z + m));
        Subspace::spanned_by(n, m, &left.hstack(&right))
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let row = Matrix::from_rows(vec![v.to_vec()], self.ambient()).expect("length");
        row_space(&self.basis.vstack(&row)).rows() == self.dim()
    }
}

/// Every subspace of `k^dom × k^cod`, generated directly as reduced echelon
/// bases: a choice of pivot columns plus free entries to their right.
pub fn all_subspaces<F: FiniteField>(dom: usize, cod: usize) -> Vec<Subspace<F>> {
    let d = dom + cod;
    let elements = F::elements();
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let pivots: Vec<usize> = (0..d).filter(|j| mask & (1 << j) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| {
                (p + 1..d)
                    .filter(|j| mask & (1 << j) == 0)
                    .map(move |j| (i, j))
            })
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut basis = Matrix::zeros(pivots.len(), d);
            for (i, &p) in pivots.iter().enumerate() {
                basis[(i, p)] = F::one();
            }
            for (&(i, j), &k) in free.iter().zip(&digits) {
                basis[(i, j)] = elements[k].clone();
            }
            out.push(Subspace { dom, cod, basis });
            // odometer over the free entries
            let Some(pos) = digits.iter().rposition(|&k| k + 1 < elements.len()) else {
                break;
            };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|k| *k = 0);
        }
    }
    out
}

/// The corelation whose copairing has the subspace as its row space.
pub fn subspace_to_corel<F: Field>(
    engine: &LinearEngine<F>,
    v: &Subspace<F>,
) -> Corelation<Matrix<F>> {
    let b = &v.basis;
    let cospan = Cospan {
        left: b.submatrix(0..b.rows(), 0..v.dom),
        right: b.submatrix(0..b.rows(), v.dom..v.ambient()),
    };
    engine.gamma(&cospan)
}

/// Row space of the copairing of a corelation.
pub fn corel_to_subspace<F: Field>(c: &Corelation<Matrix<F>>) -> Subspace<F> {
    Subspace::spanned_by(c.dom(), c.cod(), &corel_matrix(c)).expect("shape")
}

/// Column space of the pairing of a span, as a subspace.
pub fn subspace_of_span<F: Field>(s: &Span<Matrix<F>>) -> Subspace<F> {
    let stacked = s.left.vstack(&s.right);
    Subspace::spanned_by(s.left.rows(), s.right.rows(), &stacked.transpose()).expect("shape")
}

pub fn rel_to_subspace<F: Field>(r: &Relation<Matrix<F>>) -> Subspace<F> {
    subspace_of_span(r.span())
}

pub fn subspace_to_rel<F: Field>(engine: &LinearEngine<F>, v: &Subspace<F>) -> Relation<Matrix<F>> {
    let cols = v.basis.transpose();
    let left = cols.submatrix(0..v.dom, 0..cols.cols());
    let right = cols.submatrix(v.dom..v.ambient(), 0..cols.cols());
    engine.rho(&Span { left, right })
}

/// The canonical matrix of a corelation: the RREF of the copairing with zero
/// rows dropped.
pub fn corel_matrix<F: Field>(c: &Corelation<Matrix<F>>) -> Matrix<F> {
    c.cospan().left.hstack(&c.cospan().right)
}

pub fn corel_canonical_lin<F: Field>(engine: &LinearEngine<F>, c: &Cospan<Matrix<F>>) -> Matrix<F> {
    corel_matrix(&engine.gamma(c))
}

/// Corelation to relation: the jointly mono part of the pullback span, i.e.
/// `{(x, y) | f x = g y}`.
pub fn corel_to_rel<F: Field>(
    engine: &LinearEngine<F>,
    c: &Corelation<Matrix<F>>,
) -> Relation<Matrix<F>> {
    let k = kernel(&c.cospan().left.hstack(&c.cospan().right.neg()));
    let n = c.dom();
    let span = Span {
        left: k.submatrix(0..n, 0..k.cols()),
        right: k.submatrix(n..k.rows(), 0..k.cols()),
    };
    engine.rho(&span)
}

/// Relation to corelation: the jointly epi part of the pushout cospan.
pub fn rel_to_corel<F: Field>(
    engine: &LinearEngine<F>,
    r: &Relation<Matrix<F>>,
) -> Corelation<Matrix<F>> {
    engine.pi(r.span()).expect("every linear map lies in A")
}

/// Whether the cospan `1 -r-> 1 <-r- 1` is the identity corelation.
pub fn scalar_corel_is_identity<F: Field>(engine: &LinearEngine<F>, r: F) -> bool {
    let m = Matrix::scalar(r);
    engine.gamma(&Cospan {
        left: m.clone(),
        right: m,
    }) == engine.identity_corel(1)
}
