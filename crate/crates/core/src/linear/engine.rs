use std::marker::PhantomData;

use super::algebra::{cokernel, kernel, rank, rref, solve};
use crate::diagram::{Arrow, Cospan, Engine, Span};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// The abelian prop `Vect(k)`: an `m x n` matrix is a linear map `k^n -> k^m`.
///
/// Factorization is (epi, mono) and `A` is the whole category.
#[derive(Debug)]
pub struct LinearEngine<F> {
    _field: PhantomData<F>,
}

impl<F> Clone for LinearEngine<F> {
    fn clone(&self) -> Self {
        LinearEngine {
            _field: PhantomData,
        }
    }
}

impl<F: Field> LinearEngine<F> {
    /// Fails for `GF(p)` with composite `p`.
    pub fn new() -> Result<Self> {
        F::validate()?;
        Ok(LinearEngine {
            _field: PhantomData,
        })
    }
}

fn split_cols<F: Field>(h: &Matrix<F>, n: usize) -> (Matrix<F>, Matrix<F>) {
    (
        h.submatrix(0..h.rows(), 0..n),
        h.submatrix(0..h.rows(), n..h.cols()),
    )
}

fn split_rows<F: Field>(h: &Matrix<F>, n: usize) -> (Matrix<F>, Matrix<F>) {
    (
        h.submatrix(0..n, 0..h.cols()),
        h.submatrix(n..h.rows(), 0..h.cols()),
    )
}

fn field_name<F: Field>() -> String {
    let tag = F::tag();
    match tag.get("p") {
        Some(p) => format!("GF({p})"),
        None => "Q".into(),
    }
}

impl<F: Field> Engine for LinearEngine<F> {
    type Arrow = Matrix<F>;

    fn name(&self) -> String {
        format!("linear[{}]", field_name::<F>())
    }

    fn identity(&self, n: usize) -> Matrix<F> {
        Matrix::identity(n)
    }

    fn compose_unchecked(&self, f: &Matrix<F>, g: &Matrix<F>) -> Matrix<F> {
        g.mul(f)
    }

    fn tensor(&self, f: &Matrix<F>, g: &Matrix<F>) -> Matrix<F> {
        f.block_diag(g)
    }

    fn injections(&self, n: usize, m: usize) -> (Matrix<F>, Matrix<F>) {
        let id = Matrix::identity(n + m);
        (
            id.submatrix(0..n + m, 0..n),
            id.submatrix(0..n + m, n..n + m),
        )
    }

    fn copair(&self, f: &Matrix<F>, g: &Matrix<F>) -> Result<Matrix<F>> {
        Error::check_boundary(f.cod(), g.cod())?;
        Ok(f.hstack(g))
    }

    fn projections(&self, n: usize, m: usize) -> (Matrix<F>, Matrix<F>) {
        let id = Matrix::identity(n + m);
        (
            id.submatrix(0..n, 0..n + m),
            id.submatrix(n..n + m, 0..n + m),
        )
    }

    fn pair(&self, f: &Matrix<F>, g: &Matrix<F>) -> Result<Matrix<F>> {
        Error::check_boundary(f.dom(), g.dom())?;
        Ok(f.vstack(g))
    }

    fn is_in_e(&self, f: &Matrix<F>) -> bool {
        rank(f) == f.rows()
    }

    fn is_in_m(&self, f: &Matrix<F>) -> bool {
        rank(f) == f.cols()
    }

    fn is_in_a(&self, _f: &Matrix<F>) -> bool {
        true
    }

    fn is_iso(&self, f: &Matrix<F>) -> bool {
        f.rows() == f.cols() && rank(f) == f.rows()
    }

    /// `m` is the canonical basis of the column space (its transpose is in
    /// RREF) and `e` holds the coordinates of `f` in that basis.
    fn factor(&self, f: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
        let r = rref(&f.transpose());
        let m = r.reduced.submatrix(0..r.rank(), 0..f.rows()).transpose();
        // rows of `m` at the pivot positions form an identity block
        let e = f.select_rows(&r.pivots);
        (e, m)
    }

    /// Kernel of the joint map `[f | -g]`.
    fn pullback(&self, f: &Matrix<F>, g: &Matrix<F>) -> Result<Span<Matrix<F>>> {
        Error::check_boundary(f.cod(), g.cod())?;
        let k = kernel(&f.hstack(&g.neg()));
        let (left, right) = split_rows(&k, f.dom());
        Ok(Span { left, right })
    }

    /// Cokernel of the stacked map `[p ; -q]`.
    fn pushout(&self, p: &Matrix<F>, q: &Matrix<F>) -> Result<Cospan<Matrix<F>>> {
        Error::check_boundary(p.dom(), q.dom())?;
        let c = cokernel(&p.vstack(&q.neg()));
        let (left, right) = split_cols(&c, p.cod());
        Ok(Cospan { left, right })
    }

    fn pushout_mediator(
        &self,
        po: &Cospan<Matrix<F>>,
        cocone: &Cospan<Matrix<F>>,
    ) -> Result<Matrix<F>> {
        Error::check_boundary(po.dom(), cocone.dom())?;
        Error::check_boundary(po.cod(), cocone.cod())?;
        let p = po.left.hstack(&po.right);
        let b = cocone.left.hstack(&cocone.right);
        let ut = solve(&p.transpose(), &b.transpose())
            .ok_or_else(|| Error::NoMediator("not a cocone".into()))?;
        let u = ut.transpose();
        if u.mul(&p) != b {
            return Err(Error::NoMediator("not a cocone".into()));
        }
        Ok(u)
    }

    fn pullback_mediator(&self, pb: &Span<Matrix<F>>, cone: &Span<Matrix<F>>) -> Result<Matrix<F>> {
        Error::check_boundary(pb.dom(), cone.dom())?;
        Error::check_boundary(pb.cod(), cone.cod())?;
        let k = pb.left.vstack(&pb.right);
        let s = cone.left.vstack(&cone.right);
        solve(&k, &s).ok_or_else(|| Error::NoMediator("not a cone".into()))
    }

    /// RREF of the copairing, zero rows kept so the apex is unchanged.
    fn canonical_cospan(&self, c: &Cospan<Matrix<F>>) -> Cospan<Matrix<F>> {
        let h = rref(&c.left.hstack(&c.right)).reduced;
        let (left, right) = split_cols(&h, c.dom());
        Cospan { left, right }
    }

    /// Column-style RREF of the pairing.
    fn canonical_span(&self, s: &Span<Matrix<F>>) -> Span<Matrix<F>> {
        let h = rref(&s.left.vstack(&s.right).transpose())
            .reduced
            .transpose();
        let (left, right) = split_rows(&h, s.dom());
        Span { left, right }
    }
}
