use super::{Cospan, Engine, Span};
use crate::error::Result;

/// Reinterprets an engine with the trivial factorization system
/// `(all morphisms, isomorphisms)` and `A` the isomorphisms.
///
/// Corelations for this system are exactly iso classes of cospans.
#[derive(Clone, Debug)]
pub struct IsoFactorized<E>(pub E);

impl<E: Engine> Engine for IsoFactorized<E> {
    type Arrow = E::Arrow;

    fn name(&self) -> String {
        format!("{}/iso", self.0.name())
    }

    fn identity(&self, n: usize) -> Self::Arrow {
        self.0.identity(n)
    }

    fn compose_unchecked(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow {
        self.0.compose_unchecked(f, g)
    }

    fn tensor(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow {
        self.0.tensor(f, g)
    }

    fn injections(&self, n: usize, m: usize) -> (Self::Arrow, Self::Arrow) {
        self.0.injections(n, m)
    }

    fn copair(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Self::Arrow> {
        self.0.copair(f, g)
    }

    fn projections(&self, n: usize, m: usize) -> (Self::Arrow, Self::Arrow) {
        self.0.projections(n, m)
    }

    fn pair(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Self::Arrow> {
        self.0.pair(f, g)
    }

    fn is_in_e(&self, _f: &Self::Arrow) -> bool {
        true
    }

    fn is_in_m(&self, f: &Self::Arrow) -> bool {
        self.0.is_iso(f)
    }

    fn is_in_a(&self, f: &Self::Arrow) -> bool {
        self.0.is_iso(f)
    }

    fn is_iso(&self, f: &Self::Arrow) -> bool {
        self.0.is_iso(f)
    }

    fn factor(&self, f: &Self::Arrow) -> (Self::Arrow, Self::Arrow) {
        use super::Arrow;
        (f.clone(), self.0.identity(f.cod()))
    }

    fn pullback(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Span<Self::Arrow>> {
        self.0.pullback(f, g)
    }

    fn pushout(&self, p: &Self::Arrow, q: &Self::Arrow) -> Result<Cospan<Self::Arrow>> {
        self.0.pushout(p, q)
    }

    fn pushout_mediator(
        &self,
        po: &Cospan<Self::Arrow>,
        cocone: &Cospan<Self::Arrow>,
    ) -> Result<Self::Arrow> {
        self.0.pushout_mediator(po, cocone)
    }

    fn pullback_mediator(
        &self,
        pb: &Span<Self::Arrow>,
        cone: &Span<Self::Arrow>,
    ) -> Result<Self::Arrow> {
        self.0.pullback_mediator(pb, cone)
    }

    fn canonical_cospan(&self, c: &Cospan<Self::Arrow>) -> Cospan<Self::Arrow> {
        self.0.canonical_cospan(c)
    }

    fn canonical_span(&self, s: &Span<Self::Arrow>) -> Span<Self::Arrow> {
        self.0.canonical_span(s)
    }
}
