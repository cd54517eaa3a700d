use std::marker::PhantomData;

use super::normal_form::{hnf_col, hnf_row, kernel, rank, snf, solve};
use crate::diagram::{Arrow, Corelation, Cospan, Diagrams, Engine, Span};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Int;

/// Integer matrices as a prop, factored as (full row rank, split mono).
///
/// `A` is the split monos. The factorization comes from the Smith form
/// `f = U⁻¹ S V⁻¹`: the image part keeps the first `r` columns of `U⁻¹`.
#[derive(Debug)]
pub struct PidEngine<T> {
    _ring: PhantomData<T>,
}

impl<T> Clone for PidEngine<T> {
    fn clone(&self) -> Self {
        PidEngine { _ring: PhantomData }
    }
}

impl<T> Default for PidEngine<T> {
    fn default() -> Self {
        PidEngine { _ring: PhantomData }
    }
}

impl<T: Int> PidEngine<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Full row rank.
pub fn is_epi_z<T: Int>(f: &Matrix<T>) -> bool {
    rank(f) == f.rows()
}

/// Has a left inverse: full column rank with all invariant factors 1.
pub fn is_split_mono_z<T: Int>(f: &Matrix<T>) -> bool {
    let d = snf(f);
    let inv = d.invariant_factors();
    inv.len() == f.cols() && inv.iter().all(|x| x.is_one())
}

pub fn factor_z<T: Int>(f: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let d = snf(f);
    let r = d.rank();
    let m = d.u_inv.submatrix(0..f.rows(), 0..r);
    let mut e = d.v_inv.submatrix(0..r, 0..f.cols());
    for i in 0..r {
        e.scale_row(i, &d.s[(i, i)]);
    }
    (e, m)
}

fn split_cols<T: Int>(h: &Matrix<T>, n: usize) -> (Matrix<T>, Matrix<T>) {
    (
        h.submatrix(0..h.rows(), 0..n),
        h.submatrix(0..h.rows(), n..h.cols()),
    )
}

fn split_rows<T: Int>(h: &Matrix<T>, n: usize) -> (Matrix<T>, Matrix<T>) {
    (
        h.submatrix(0..n, 0..h.cols()),
        h.submatrix(n..h.rows(), 0..h.cols()),
    )
}

pub fn pullback_z<T: Int>(f: &Matrix<T>, g: &Matrix<T>) -> Result<Span<Matrix<T>>> {
    Error::check_boundary(f.rows(), g.rows())?;
    let k = kernel(&f.hstack(&g.neg()));
    let (left, right) = split_rows(&k, f.cols());
    Ok(Span { left, right })
}

/// Pushout among free modules: transpose of the pullback of the transposes.
pub fn pushout_z<T: Int>(p: &Matrix<T>, q: &Matrix<T>) -> Result<Cospan<Matrix<T>>> {
    let pb = pullback_z(&p.transpose(), &q.transpose())?;
    Ok(Cospan {
        left: pb.left.transpose(),
        right: pb.right.transpose(),
    })
}

impl<T: Int> Engine for PidEngine<T> {
    type Arrow = Matrix<T>;

    fn name(&self) -> String {
        "z".into()
    }

    fn identity(&self, n: usize) -> Matrix<T> {
        Matrix::identity(n)
    }

    fn compose_unchecked(&self, f: &Matrix<T>, g: &Matrix<T>) -> Matrix<T> {
        g.mul(f)
    }

    fn tensor(&self, f: &Matrix<T>, g: &Matrix<T>) -> Matrix<T> {
        f.block_diag(g)
    }

    fn injections(&self, n: usize, m: usize) -> (Matrix<T>, Matrix<T>) {
        let id = Matrix::identity(n + m);
        (
            id.submatrix(0..n + m, 0..n),
            id.submatrix(0..n + m, n..n + m),
        )
    }

    fn copair(&self, f: &Matrix<T>, g: &Matrix<T>) -> Result<Matrix<T>> {
        Error::check_boundary(f.cod(), g.cod())?;
        Ok(f.hstack(g))
    }

    fn projections(&self, n: usize, m: usize) -> (Matrix<T>, Matrix<T>) {
        let id = Matrix::identity(n + m);
        (
            id.submatrix(0..n, 0..n + m),
            id.submatrix(n..n + m, 0..n + m),
        )
    }

    fn pair(&self, f: &Matrix<T>, g: &Matrix<T>) -> Result<Matrix<T>> {
        Error::check_boundary(f.dom(), g.dom())?;
        Ok(f.vstack(g))
    }

    fn is_in_e(&self, f: &Matrix<T>) -> bool {
        is_epi_z(f)
    }

    fn is_in_m(&self, f: &Matrix<T>) -> bool {
        is_split_mono_z(f)
    }

    fn is_in_a(&self, f: &Matrix<T>) -> bool {
        is_split_mono_z(f)
    }

    fn is_iso(&self, f: &Matrix<T>) -> bool {
        f.rows() == f.cols() && is_split_mono_z(f)
    }

    fn factor(&self, f: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
        factor_z(f)
    }

    fn pullback(&self, f: &Matrix<T>, g: &Matrix<T>) -> Result<Span<Matrix<T>>> {
        pullback_z(f, g)
    }

    fn pushout(&self, p: &Matrix<T>, q: &Matrix<T>) -> Result<Cospan<Matrix<T>>> {
        pushout_z(p, q)
    }

    fn pushout_mediator(
        &self,
        po: &Cospan<Matrix<T>>,
        cocone: &Cospan<Matrix<T>>,
    ) -> Result<Matrix<T>> {
        Error::check_boundary(po.dom(), cocone.dom())?;
        Error::check_boundary(po.cod(), cocone.cod())?;
        let p = po.left.hstack(&po.right);
        let b = cocone.left.hstack(&cocone.right);
        let ut = solve(&p.transpose(), &b.transpose())
            .ok_or_else(|| Error::NoMediator("not a cocone".into()))?;
        Ok(ut.transpose())
    }

    fn pullback_mediator(&self, pb: &Span<Matrix<T>>, cone: &Span<Matrix<T>>) -> Result<Matrix<T>> {
        Error::check_boundary(pb.dom(), cone.dom())?;
        Error::check_boundary(pb.cod(), cone.cod())?;
        let k = pb.left.vstack(&pb.right);
        let s = cone.left.vstack(&cone.right);
        solve(&k, &s).ok_or_else(|| Error::NoMediator("not a cone".into()))
    }

    fn canonical_cospan(&self, c: &Cospan<Matrix<T>>) -> Cospan<Matrix<T>> {
        let (left, right) = split_cols(&hnf_row(&c.left.hstack(&c.right)), c.dom());
        Cospan { left, right }
    }

    fn canonical_span(&self, s: &Span<Matrix<T>>) -> Span<Matrix<T>> {
        let (left, right) = split_rows(&hnf_col(&s.left.vstack(&s.right)), s.dom());
        Span { left, right }
    }
}

/// The Hermite form of the copairing of a corelation.
pub fn corel_canonical_z<T: Int>(c: &Corelation<Matrix<T>>) -> Matrix<T> {
    c.cospan().left.hstack(&c.cospan().right)
}

/// Whether the cospan `1 -r-> 1 <-r- 1` is the identity corelation over `Z`.
pub fn scalar_corel_is_identity_z<T: Int>(engine: &PidEngine<T>, r: T) -> bool {
    let m = Matrix::scalar(r);
    engine.gamma(&Cospan {
        left: m.clone(),
        right: m,
    }) == engine.identity_corel(1)
}
