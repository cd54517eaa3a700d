use serde::Serialize;

use super::{Arrow, Cospan, Diagrams, Engine, Span};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Fwd,
    Bwd,
}

/// One leg of a zigzag. A forward step from `x` to `y` carries an arrow
/// `x -> y`; a backward step from `x` to `y` carries an arrow `y -> x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Step<A> {
    pub dir: Direction,
    pub arrow: A,
}

impl<A: Arrow> Step<A> {
    fn source(&self) -> usize {
        match self.dir {
            Direction::Fwd => self.arrow.dom(),
            Direction::Bwd => self.arrow.cod(),
        }
    }

    fn target(&self) -> usize {
        match self.dir {
            Direction::Fwd => self.arrow.cod(),
            Direction::Bwd => self.arrow.dom(),
        }
    }
}

/// An arrow of `A +_{|A|} A^op`: alternating directions, no identity steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Zigzag<A> {
    dom: usize,
    steps: Vec<Step<A>>,
}

impl<A: Arrow> Zigzag<A> {
    pub fn empty(n: usize) -> Self {
        Zigzag {
            dom: n,
            steps: Vec::new(),
        }
    }

    /// Chains the steps, composing neighbours that point the same way and
    /// dropping identities.
    pub fn new<E: Engine<Arrow = A> + ?Sized>(
        engine: &E,
        dom: usize,
        steps: Vec<Step<A>>,
    ) -> Result<Self> {
        let mut at = dom;
        let mut out: Vec<Step<A>> = Vec::with_capacity(steps.len());
        for step in steps {
            Error::check_boundary(at, step.source())?;
            at = step.target();
            if engine.is_identity(&step.arrow) {
                continue;
            }
            match out.last() {
                Some(top) if top.dir == step.dir => {
                    let top = out.pop().expect("nonempty");
                    let arrow = match step.dir {
                        Direction::Fwd => engine.compose_unchecked(&top.arrow, &step.arrow),
                        Direction::Bwd => engine.compose_unchecked(&step.arrow, &top.arrow),
                    };
                    if !engine.is_identity(&arrow) {
                        out.push(Step {
                            dir: step.dir,
                            arrow,
                        });
                    }
                }
                _ => out.push(step),
            }
        }
        Ok(Zigzag { dom, steps: out })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.steps.last().map_or(self.dom, Step::target)
    }

    pub fn steps(&self) -> &[Step<A>] {
        &self.steps
    }

    pub fn concat<E: Engine<Arrow = A> + ?Sized>(&self, engine: &E, other: &Self) -> Result<Self> {
        let steps = self
            .steps
            .iter()
            .chain(other.steps.iter())
            .cloned()
            .collect();
        Zigzag::new(engine, self.dom, steps)
    }

    pub fn dagger(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| Step {
                dir: match s.dir {
                    Direction::Fwd => Direction::Bwd,
                    Direction::Bwd => Direction::Fwd,
                },
                arrow: s.arrow.clone(),
            })
            .collect();
        Zigzag {
            dom: self.cod(),
            steps,
        }
    }

    fn check_in_a<E: Engine<Arrow = A> + ?Sized>(&self, engine: &E) -> Result<()> {
        match self.steps.iter().find(|s| !engine.is_in_a(&s.arrow)) {
            Some(s) => Err(Error::NotInA(format!("{:?}", s.arrow))),
            None => Ok(()),
        }
    }

    /// Colimit of the zigzag, as a composite of cospans.
    pub fn to_cospan<E: Engine<Arrow = A> + ?Sized>(&self, engine: &E) -> Result<Cospan<A>> {
        self.check_in_a(engine)?;
        let mut acc = engine.identity_cospan(self.dom);
        for s in &self.steps {
            let next = match s.dir {
                Direction::Fwd => engine.forward_cospan(&s.arrow),
                Direction::Bwd => engine.backward_cospan(&s.arrow),
            };
            acc = engine.compose_cospan(&acc, &next)?;
        }
        Ok(engine.canonical_cospan(&acc))
    }

    /// Limit of the zigzag, as a composite of spans.
    pub fn to_span<E: Engine<Arrow = A> + ?Sized>(&self, engine: &E) -> Result<Span<A>> {
        self.check_in_a(engine)?;
        let mut acc = engine.identity_span(self.dom);
        for s in &self.steps {
            let next = match s.dir {
                Direction::Fwd => engine.forward_span(&s.arrow),
                Direction::Bwd => engine.backward_span(&s.arrow),
            };
            acc = engine.compose_span(&acc, &next)?;
        }
        Ok(engine.canonical_span(&acc))
    }
}
