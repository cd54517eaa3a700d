//! Engine selection, the diagram expression language, hom-set enumeration
//! and suite dispatch: everything the command line needs, kept free of I/O.

mod expr;
mod present;
mod spec;

pub use expr::{canonical, compose_doc, eval, Diagram, DiagramExpr, StepExpr};
pub use present::{Kind, Present, ENUMERATION_LIMIT};
pub use spec::{EngineSpec, SUPPORTED_PRIMES};

use serde_json::{json, Value};

use crate::error::Result;

/// Canonical forms of every (co)relation `n -> m` on the given engine.
pub fn enumerate(spec: EngineSpec, kind: Kind, n: usize, m: usize) -> Result<Value> {
    crate::with_engine!(spec, e => {
        let items = e.enumerate(kind, n, m)?;
        Ok(json!({
            "engine": spec.to_string(),
            "kind": match kind { Kind::Corel => "corel", Kind::Rel => "rel" },
            "dom": n,
            "cod": m,
            "count": items.len(),
            "items": items,
        }))
    })
}
