//! Diagram expressions: the input language of `corel compose`.
//!
//! A document is either a bare expression or `{"engine", "subcat", "expr"}`.
//! Expressions are externally tagged JSON:
//!
//! ```json
//! {"seq": [{"cospan": {"left": L, "right": R}}, {"dagger": {"span": {...}}}]}
//! ```
//!
//! Leaves (`cospan`, `span`, `zigzag`) carry arrows in the engine's JSON
//! encoding. `seq` and `tensor` combine diagrams of one kind (a zigzag is
//! converted to match its neighbour); `gamma`, `pi` and `rho` change kind.

use serde::Deserialize;
use serde_json::Value;

use super::present::Present;
use super::spec::EngineSpec;
use crate::codec::Encode;
use crate::diagram::{Corelation, Cospan, Diagrams, Direction, Relation, Span, Step, Zigzag};
use crate::error::{Error, Result};
use crate::with_engine;

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum DiagramExpr {
    Cospan { left: Value, right: Value },
    Span { left: Value, right: Value },
    Zigzag { dom: usize, steps: Vec<StepExpr> },
    Seq(Vec<DiagramExpr>),
    Tensor(Vec<DiagramExpr>),
    Dagger(Box<DiagramExpr>),
    Gamma(Box<DiagramExpr>),
    Pi(Box<DiagramExpr>),
    Rho(Box<DiagramExpr>),
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepExpr {
    Fwd(Value),
    Bwd(Value),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    engine: Option<String>,
    subcat: Option<String>,
    expr: DiagramExpr,
}

/// An evaluated diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram<A> {
    Cospan(Cospan<A>),
    Span(Span<A>),
    Zigzag(Zigzag<A>),
    Corel(Corelation<A>),
    Rel(Relation<A>),
}

impl<A> Diagram<A> {
    pub fn kind(&self) -> &'static str {
        match self {
            Diagram::Cospan(_) => "cospan",
            Diagram::Span(_) => "span",
            Diagram::Zigzag(_) => "zigzag",
            Diagram::Corel(_) => "corelation",
            Diagram::Rel(_) => "relation",
        }
    }
}

fn mismatch<A, T>(expected: &str, got: &Diagram<A>) -> Result<T> {
    Err(Error::KindMismatch {
        expected: expected.into(),
        got: got.kind().into(),
    })
}

fn as_cospan<E: Diagrams>(e: &E, d: Diagram<E::Arrow>) -> Result<Cospan<E::Arrow>> {
    match d {
        Diagram::Cospan(c) => Ok(c),
        Diagram::Zigzag(z) => z.to_cospan(e),
        other => mismatch("cospan", &other),
    }
}

fn as_span<E: Diagrams>(e: &E, d: Diagram<E::Arrow>) -> Result<Span<E::Arrow>> {
    match d {
        Diagram::Span(s) => Ok(s),
        Diagram::Zigzag(z) => z.to_span(e),
        other => mismatch("span", &other),
    }
}

/// Combines two diagrams of the same kind; zigzags adopt the other kind.
fn combine<E: Diagrams>(
    e: &E,
    a: Diagram<E::Arrow>,
    b: Diagram<E::Arrow>,
    tensor: bool,
) -> Result<Diagram<E::Arrow>> {
    use Diagram as D;
    Ok(match (a, b) {
        (D::Zigzag(x), D::Zigzag(y)) if !tensor => D::Zigzag(x.concat(e, &y)?),
        (D::Zigzag(x), D::Zigzag(y)) => {
            D::Cospan(e.tensor_cospan(&x.to_cospan(e)?, &y.to_cospan(e)?))
        }
        (D::Zigzag(x), D::Cospan(y)) => {
            combine(e, D::Cospan(x.to_cospan(e)?), D::Cospan(y), tensor)?
        }
        (D::Cospan(x), D::Zigzag(y)) => {
            combine(e, D::Cospan(x), D::Cospan(y.to_cospan(e)?), tensor)?
        }
        (D::Zigzag(x), D::Span(y)) => combine(e, D::Span(x.to_span(e)?), D::Span(y), tensor)?,
        (D::Span(x), D::Zigzag(y)) => combine(e, D::Span(x), D::Span(y.to_span(e)?), tensor)?,
        (D::Cospan(x), D::Cospan(y)) if tensor => D::Cospan(e.tensor_cospan(&x, &y)),
        (D::Cospan(x), D::Cospan(y)) => D::Cospan(e.compose_cospan(&x, &y)?),
        (D::Span(x), D::Span(y)) if tensor => D::Span(e.tensor_span(&x, &y)),
        (D::Span(x), D::Span(y)) => D::Span(e.compose_span(&x, &y)?),
        (D::Corel(x), D::Corel(y)) if tensor => D::Corel(e.tensor_corel(&x, &y)),
        (D::Corel(x), D::Corel(y)) => D::Corel(e.compose_corel(&x, &y)?),
        (D::Rel(x), D::Rel(y)) if tensor => D::Rel(e.tensor_rel(&x, &y)),
        (D::Rel(x), D::Rel(y)) => D::Rel(e.compose_rel(&x, &y)?),
        (x, y) => return mismatch(x.kind(), &y),
    })
}

fn leg_pair<A: Encode>(left: &Value, right: &Value) -> Result<(A, A)> {
    Ok((A::decode(left)?, A::decode(right)?))
}

pub fn eval<E: Diagrams<Arrow: Encode>>(e: &E, expr: &DiagramExpr) -> Result<Diagram<E::Arrow>> {
    use DiagramExpr as X;
    Ok(match expr {
        X::Cospan { left, right } => {
            let (l, r) = leg_pair(left, right)?;
            Diagram::Cospan(Cospan::new(l, r)?)
        }
        X::Span { left, right } => {
            let (l, r) = leg_pair(left, right)?;
            Diagram::Span(Span::new(l, r)?)
        }
        X::Zigzag { dom, steps } => {
            let steps = steps
                .iter()
                .map(|s| {
                    Ok(match s {
                        StepExpr::Fwd(v) => Step {
                            dir: Direction::Fwd,
                            arrow: Encode::decode(v)?,
                        },
                        StepExpr::Bwd(v) => Step {
                            dir: Direction::Bwd,
                            arrow: Encode::decode(v)?,
                        },
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Diagram::Zigzag(Zigzag::new(e, *dom, steps)?)
        }
        X::Seq(parts) | X::Tensor(parts) => {
            let tensor = matches!(expr, X::Tensor(_));
            let mut parts = parts.iter();
            let first = parts
                .next()
                .ok_or_else(|| Error::Parse("empty seq/tensor".into()))?;
            let mut acc = eval(e, first)?;
            for p in parts {
                acc = combine(e, acc, eval(e, p)?, tensor)?;
            }
            acc
        }
        X::Dagger(inner) => match eval(e, inner)? {
            Diagram::Cospan(c) => Diagram::Cospan(c.dagger()),
            Diagram::Span(s) => Diagram::Span(s.dagger()),
            Diagram::Zigzag(z) => Diagram::Zigzag(z.dagger()),
            Diagram::Corel(c) => Diagram::Corel(e.dagger_corel(&c)),
            Diagram::Rel(r) => Diagram::Rel(e.dagger_rel(&r)),
        },
        X::Gamma(inner) => match eval(e, inner)? {
            Diagram::Corel(c) => Diagram::Corel(c),
            other => Diagram::Corel(e.gamma(&as_cospan(e, other)?)),
        },
        X::Pi(inner) => match eval(e, inner)? {
            Diagram::Corel(c) => Diagram::Corel(c),
            other => Diagram::Corel(e.pi(&as_span(e, other)?)?),
        },
        X::Rho(inner) => match eval(e, inner)? {
            Diagram::Rel(r) => Diagram::Rel(r),
            other => Diagram::Rel(e.rho(&as_span(e, other)?)),
        },
    })
}

/// The canonical corelation or relation denoted by a diagram. Cospans and
/// zigzags are read as corelations, spans as relations.
pub fn canonical<E: Present>(e: &E, d: Diagram<E::Arrow>) -> Result<serde_json::Value> {
    Ok(match d {
        Diagram::Corel(c) => e.show_corel(&c),
        Diagram::Rel(r) => e.show_rel(&r),
        Diagram::Span(s) => e.show_rel(&e.rho(&s)),
        other => e.show_corel(&e.gamma(&as_cospan(e, other)?)),
    })
}

/// Parses a document, evaluates it and returns the canonical form.
///
/// `engine` overrides the document's own engine field.
pub fn compose_doc(text: &str, engine: Option<EngineSpec>) -> Result<serde_json::Value> {
    let raw: Value = serde_json::from_str(text)?;
    let doc: Document = if raw.get("expr").is_some() {
        serde_json::from_value(raw)?
    } else {
        Document {
            engine: None,
            subcat: None,
            expr: serde_json::from_value(raw)?,
        }
    };
    let mut spec = match (engine, &doc.engine) {
        (Some(spec), _) => spec,
        (None, Some(name)) => name.parse()?,
        (None, None) => {
            return Err(Error::Parse(
                "no engine given in the file or on the command line".into(),
            ))
        }
    };
    if let Some(sub) = &doc.subcat {
        spec = spec.with_subcat(sub)?;
    }
    with_engine!(spec, e => {
        let d = eval(e, &doc.expr)?;
        canonical(e, d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn frobenius_generators_compose_to_the_empty_partition() {
        // unit 0 -> 1 followed by counit 1 -> 0
        let doc = json!({
            "engine": "finset",
            "expr": {"seq": [
                {"cospan": {"left": {"dom": 0, "cod": 1, "table": []}, "right": {"dom": 1, "cod": 1, "table": [0]}}},
                {"cospan": {"left": {"dom": 1, "cod": 1, "table": [0]}, "right": {"dom": 0, "cod": 1, "table": []}}}
            ]}
        });
        let out = compose_doc(&doc.to_string(), None).unwrap();
        assert_eq!(out["partition"], json!({"n": 0, "m": 0, "blocks": []}));
    }

    #[test]
    fn engine_flag_overrides() {
        let expr = json!({"cospan": {
            "left": {"dom": 1, "cod": 1, "matrix": [["2"]]},
            "right": {"dom": 1, "cod": 1, "matrix": [["2"]]}
        }});
        let z = compose_doc(&expr.to_string(), Some(EngineSpec::Z)).unwrap();
        assert_eq!(z["matrix"], json!([["2", "2"]]));
        let q = compose_doc(&expr.to_string(), Some(EngineSpec::LinQ)).unwrap();
        assert_eq!(q["matrix"], json!([["1", "1"]]));
        let zigzag = json!({"zigzag": {"dom": 1, "steps": [{"fwd": {"dom": 1, "cod": 1, "matrix": [["2"]]}}]}});
        assert!(matches!(
            compose_doc(&zigzag.to_string(), Some(EngineSpec::Z)),
            Err(Error::NotInA(_))
        ));
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            compose_doc("{", Some(EngineSpec::Pf)),
            Err(Error::Parse(_))
        ));
        let bad_kinds = json!({"seq": [
            {"cospan": {"left": {"dom": 0, "cod": 0, "table": []}, "right": {"dom": 0, "cod": 0, "table": []}}},
            {"span": {"left": {"dom": 0, "cod": 0, "table": []}, "right": {"dom": 0, "cod": 0, "table": []}}}
        ]});
        let err = compose_doc(
            &bad_kinds.to_string(),
            Some(EngineSpec::FinSet(crate::finset::FinSubcat::Inj)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::KindMismatch { .. }));
        assert_eq!(err.exit_code(), 3);
        let mismatch = json!({"cospan": {"left": {"dom": 1, "cod": 1, "table": [0]}, "right": {"dom": 1, "cod": 2, "table": [0]}}});
        let err = compose_doc(
            &mismatch.to_string(),
            Some(EngineSpec::FinSet(crate::finset::FinSubcat::Inj)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::BoundaryMismatch { .. }));
        assert!(compose_doc(&mismatch.to_string(), None).is_err());
    }
}
