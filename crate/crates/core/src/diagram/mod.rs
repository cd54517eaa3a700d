//! Engine-generic spans, cospans, relations and corelations.
//!
//! An [`Engine`] is a prop (objects are natural numbers, tensor is addition)
//! together with pullbacks, pushouts, a factorization system `(E, M)` and a
//! chosen subcategory `A`. Everything else in this module is written once
//! against that trait:
//!
//! * composition of spans (by pullback) and cospans (by pushout);
//! * `gamma`, the quotient of cospans onto corelations;
//! * `pi`, pushout-then-project from spans with legs in `A` to corelations;
//! * `rho`, the jointly-in-`M` part of a span.
//!
//! Iso classes of spans and cospans are compared through the engine's
//! canonical forms, so equality of diagrams is structural equality.

mod iso;
mod zigzag;

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

pub use iso::IsoFactorized;
pub use zigzag::{Direction, Step, Zigzag};

/// A morphism of a prop: something with a domain and a codomain.
pub trait Arrow: Clone + Debug + Eq + Hash + Send + Sync {
    fn dom(&self) -> usize;
    fn cod(&self) -> usize;
}

pub trait Engine: Sync {
    type Arrow: Arrow;

    fn name(&self) -> String;

    fn identity(&self, n: usize) -> Self::Arrow;

    /// Diagrammatic composite `f ; g`. Boundaries are already checked.
    fn compose_unchecked(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow;

    /// `f ⊗ g` on `dom f + dom g`.
    fn tensor(&self, f: &Self::Arrow, g: &Self::Arrow) -> Self::Arrow;

    /// Coproduct injections `n -> n + m <- m`.
    fn injections(&self, n: usize, m: usize) -> (Self::Arrow, Self::Arrow);

    /// `[f, g] : n + m -> a` for `f : n -> a`, `g : m -> a`.
    fn copair(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Self::Arrow>;

    /// Product projections `n <- n × m -> m`.
    fn projections(&self, n: usize, m: usize) -> (Self::Arrow, Self::Arrow);

    /// `<f, g> : a -> n × m` for `f : a -> n`, `g : a -> m`.
    fn pair(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Self::Arrow>;

    fn is_in_e(&self, f: &Self::Arrow) -> bool;
    fn is_in_m(&self, f: &Self::Arrow) -> bool;
    fn is_in_a(&self, f: &Self::Arrow) -> bool;
    fn is_iso(&self, f: &Self::Arrow) -> bool;

    /// `f = e ; m` with `e` in `E` and `m` in `M`.
    fn factor(&self, f: &Self::Arrow) -> (Self::Arrow, Self::Arrow);

    /// Pullback of the cospan `f : n -> z <- m : g`.
    fn pullback(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Span<Self::Arrow>>;

    /// Pushout of the span `p : z -> n`, `q : z -> m`.
    fn pushout(&self, p: &Self::Arrow, q: &Self::Arrow) -> Result<Cospan<Self::Arrow>>;

    /// The unique `u` out of the pushout apex with `po.left ; u = cocone.left`
    /// and `po.right ; u = cocone.right`.
    fn pushout_mediator(
        &self,
        po: &Cospan<Self::Arrow>,
        cocone: &Cospan<Self::Arrow>,
    ) -> Result<Self::Arrow>;

    /// The unique `u` into the pullback apex with `u ; pb.left = cone.left`
    /// and `u ; pb.right = cone.right`.
    fn pullback_mediator(
        &self,
        pb: &Span<Self::Arrow>,
        cone: &Span<Self::Arrow>,
    ) -> Result<Self::Arrow>;

    /// Normal form of the iso class of a cospan.
    fn canonical_cospan(&self, c: &Cospan<Self::Arrow>) -> Cospan<Self::Arrow>;

    /// Normal form of the iso class of a span.
    fn canonical_span(&self, s: &Span<Self::Arrow>) -> Span<Self::Arrow>;

    fn compose(&self, f: &Self::Arrow, g: &Self::Arrow) -> Result<Self::Arrow> {
        Error::check_boundary(f.cod(), g.dom())?;
        Ok(self.compose_unchecked(f, g))
    }

    fn is_identity(&self, f: &Self::Arrow) -> bool {
        f.dom() == f.cod() && *f == self.identity(f.dom())
    }
}

/// `dom <-left- apex -right-> cod`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Span<A> {
    pub left: A,
    pub right: A,
}

/// `dom -left-> apex <-right- cod`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cospan<A> {
    pub left: A,
    pub right: A,
}

impl<A: Arrow> Span<A> {
    pub fn new(left: A, right: A) -> Result<Self> {
        Error::check_boundary(left.dom(), right.dom())?;
        Ok(Span { left, right })
    }

    pub fn apex(&self) -> usize {
        self.left.dom()
    }

    pub fn dom(&self) -> usize {
        self.left.cod()
    }

    pub fn cod(&self) -> usize {
        self.right.cod()
    }

    pub fn dagger(&self) -> Self {
        Span {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

impl<A: Arrow> Cospan<A> {
    pub fn new(left: A, right: A) -> Result<Self> {
        Error::check_boundary(left.cod(), right.cod())?;
        Ok(Cospan { left, right })
    }

    pub fn apex(&self) -> usize {
        self.left.cod()
    }

    pub fn dom(&self) -> usize {
        self.left.dom()
    }

    pub fn cod(&self) -> usize {
        self.right.dom()
    }

    pub fn dagger(&self) -> Self {
        Cospan {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

/// A corelation, stored as its canonical jointly-in-`E` cospan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Corelation<A> {
    cospan: Cospan<A>,
}

impl<A: Arrow> Corelation<A> {
    pub fn cospan(&self) -> &Cospan<A> {
        &self.cospan
    }

    pub fn dom(&self) -> usize {
        self.cospan.dom()
    }

    pub fn cod(&self) -> usize {
        self.cospan.cod()
    }
}

/// A relation, stored as its canonical jointly-in-`M` span.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Relation<A> {
    span: Span<A>,
}

impl<A: Arrow> Relation<A> {
    pub fn span(&self) -> &Span<A> {
        &self.span
    }

    pub fn dom(&self) -> usize {
        self.span.dom()
    }

    pub fn cod(&self) -> usize {
        self.span.cod()
    }
}

/// Operations derived from the [`Engine`] primitives; implemented for every engine.
pub trait Diagrams: Engine {
    fn identity_cospan(&self, n: usize) -> Cospan<Self::Arrow> {
        Cospan {
            left: self.identity(n),
            right: self.identity(n),
        }
    }

    fn identity_span(&self, n: usize) -> Span<Self::Arrow> {
        Span {
            left: self.identity(n),
            right: self.identity(n),
        }
    }

    /// The cospan `f ; id`, image of `f` under `C -> Cospan(C)`.
    fn forward_cospan(&self, f: &Self::Arrow) -> Cospan<Self::Arrow> {
        Cospan {
            left: f.clone(),
            right: self.identity(f.cod()),
        }
    }

    /// The cospan `id ; g^op`, image of `g` under `C^op -> Cospan(C)`.
    fn backward_cospan(&self, g: &Self::Arrow) -> Cospan<Self::Arrow> {
        Cospan {
            left: self.identity(g.cod()),
            right: g.clone(),
        }
    }

    /// The span `id ; f`, image of `f` under `C -> Span(C)`.
    fn forward_span(&self, f: &Self::Arrow) -> Span<Self::Arrow> {
        Span {
            left: self.identity(f.dom()),
            right: f.clone(),
        }
    }

    /// The span `g^op ; id`, image of `g` under `C^op -> Span(C)`.
    fn backward_span(&self, g: &Self::Arrow) -> Span<Self::Arrow> {
        Span {
            left: g.clone(),
            right: self.identity(g.dom()),
        }
    }

    fn compose_cospan(
        &self,
        c1: &Cospan<Self::Arrow>,
        c2: &Cospan<Self::Arrow>,
    ) -> Result<Cospan<Self::Arrow>> {
        Error::check_boundary(c1.cod(), c2.dom())?;
        let po = self.pushout(&c1.right, &c2.left)?;
        let composite = Cospan {
            left: self.compose_unchecked(&c1.left, &po.left),
            right: self.compose_unchecked(&c2.right, &po.right),
        };
        Ok(self.canonical_cospan(&composite))
    }

    fn compose_span(
        &self,
        s1: &Span<Self::Arrow>,
        s2: &Span<Self::Arrow>,
    ) -> Result<Span<Self::Arrow>> {
        Error::check_boundary(s1.cod(), s2.dom())?;
        let pb = self.pullback(&s1.right, &s2.left)?;
        let composite = Span {
            left: self.compose_unchecked(&pb.left, &s1.left),
            right: self.compose_unchecked(&pb.right, &s2.right),
        };
        Ok(self.canonical_span(&composite))
    }

    fn tensor_cospan(
        &self,
        a: &Cospan<Self::Arrow>,
        b: &Cospan<Self::Arrow>,
    ) -> Cospan<Self::Arrow> {
        self.canonical_cospan(&Cospan {
            left: self.tensor(&a.left, &b.left),
            right: self.tensor(&a.right, &b.right),
        })
    }

    fn tensor_span(&self, a: &Span<Self::Arrow>, b: &Span<Self::Arrow>) -> Span<Self::Arrow> {
        self.canonical_span(&Span {
            left: self.tensor(&a.left, &b.left),
            right: self.tensor(&a.right, &b.right),
        })
    }

    /// The corelation represented by a cospan: factor the copairing and keep
    /// the `E` part.
    fn gamma(&self, c: &Cospan<Self::Arrow>) -> Corelation<Self::Arrow> {
        let copairing = self
            .copair(&c.left, &c.right)
            .expect("cospan legs share an apex");
        let (e, _) = self.factor(&copairing);
        let (i1, i2) = self.injections(c.dom(), c.cod());
        let jointly_epi = Cospan {
            left: self.compose_unchecked(&i1, &e),
            right: self.compose_unchecked(&i2, &e),
        };
        Corelation {
            cospan: self.canonical_cospan(&jointly_epi),
        }
    }

    /// Pushout followed by `gamma`. Only defined on spans with legs in `A`.
    fn pi(&self, s: &Span<Self::Arrow>) -> Result<Corelation<Self::Arrow>> {
        for leg in [&s.left, &s.right] {
            if !self.is_in_a(leg) {
                return Err(Error::NotInA(format!("{leg:?}")));
            }
        }
        let po = self.pushout(&s.left, &s.right)?;
        Ok(self.gamma(&po))
    }

    /// The relation represented by a span: factor the pairing and keep the
    /// `M` part.
    fn rho(&self, s: &Span<Self::Arrow>) -> Relation<Self::Arrow> {
        let pairing = self
            .pair(&s.left, &s.right)
            .expect("span legs share an apex");
        let (_, m) = self.factor(&pairing);
        let (p1, p2) = self.projections(s.dom(), s.cod());
        let jointly_mono = Span {
            left: self.compose_unchecked(&m, &p1),
            right: self.compose_unchecked(&m, &p2),
        };
        Relation {
            span: self.canonical_span(&jointly_mono),
        }
    }

    fn identity_corel(&self, n: usize) -> Corelation<Self::Arrow> {
        self.gamma(&self.identity_cospan(n))
    }

    fn identity_rel(&self, n: usize) -> Relation<Self::Arrow> {
        self.rho(&self.identity_span(n))
    }

    fn compose_corel(
        &self,
        a: &Corelation<Self::Arrow>,
        b: &Corelation<Self::Arrow>,
    ) -> Result<Corelation<Self::Arrow>> {
        Ok(self.gamma(&self.compose_cospan(&a.cospan, &b.cospan)?))
    }

    fn compose_rel(
        &self,
        a: &Relation<Self::Arrow>,
        b: &Relation<Self::Arrow>,
    ) -> Result<Relation<Self::Arrow>> {
        Ok(self.rho(&self.compose_span(&a.span, &b.span)?))
    }

    fn tensor_corel(
        &self,
        a: &Corelation<Self::Arrow>,
        b: &Corelation<Self::Arrow>,
    ) -> Corelation<Self::Arrow> {
        self.gamma(&self.tensor_cospan(&a.cospan, &b.cospan))
    }

    fn tensor_rel(
        &self,
        a: &Relation<Self::Arrow>,
        b: &Relation<Self::Arrow>,
    ) -> Relation<Self::Arrow> {
        self.rho(&self.tensor_span(&a.span, &b.span))
    }

    fn dagger_corel(&self, a: &Corelation<Self::Arrow>) -> Corelation<Self::Arrow> {
        self.gamma(&a.cospan.dagger())
    }

    fn dagger_rel(&self, a: &Relation<Self::Arrow>) -> Relation<Self::Arrow> {
        self.rho(&a.span.dagger())
    }

    /// Whether the copairing of the cospan lies in `E`.
    fn is_jointly_in_e(&self, c: &Cospan<Self::Arrow>) -> bool {
        self.copair(&c.left, &c.right)
            .map(|h| self.is_in_e(&h))
            .unwrap_or(false)
    }

    /// Whether the pairing of the span lies in `M`.
    fn is_jointly_in_m(&self, s: &Span<Self::Arrow>) -> bool {
        self.pair(&s.left, &s.right)
            .map(|h| self.is_in_m(&h))
            .unwrap_or(false)
    }

    /// Mediator from the pushout of the pullback of `c` back to `c`'s apex.
    fn pushout_of_pullback_mediator(
        &self,
        c: &Cospan<Self::Arrow>,
    ) -> Result<(Span<Self::Arrow>, Self::Arrow)> {
        let pb = self.pullback(&c.left, &c.right)?;
        let po = self.pushout(&pb.left, &pb.right)?;
        let u = self.pushout_mediator(&po, c)?;
        Ok((pb, u))
    }

    /// Mediator from `s`'s apex into the pullback of the pushout of `s`.
    fn pullback_of_pushout_mediator(
        &self,
        s: &Span<Self::Arrow>,
    ) -> Result<(Cospan<Self::Arrow>, Self::Arrow)> {
        let po = self.pushout(&s.left, &s.right)?;
        let pb = self.pullback(&po.left, &po.right)?;
        let u = self.pullback_mediator(&pb, s)?;
        Ok((po, u))
    }
}

impl<E: Engine + ?Sized> Diagrams for E {}

impl<A: Arrow> Corelation<A> {
    /// Wraps a cospan already known to be the canonical jointly-in-`E` form.
    pub(crate) fn from_canonical(cospan: Cospan<A>) -> Self {
        Corelation { cospan }
    }
}

impl<A: Arrow> Relation<A> {
    pub(crate) fn from_canonical(span: Span<A>) -> Self {
        Relation { span }
    }
}
