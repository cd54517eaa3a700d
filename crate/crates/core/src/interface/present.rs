//! Printable canonical forms and hom-set enumeration per engine.

use serde_json::{json, Value};

use crate::codec::{encode_corel, encode_rel, Encode, Scalar};
use crate::diagram::{Corelation, Diagrams, Relation, Span};
use crate::error::{Error, Result};
use crate::finset::{
    bell, corel_to_partial_partition, corel_to_partition, partial_partition_to_corel,
    partition_to_corel, rel_to_table, table_to_rel, FinSet, PartialFinSet, PartialFn,
    PartialPartition, Partition, RelationTable,
};
use crate::linear::{
    all_subspaces, corel_to_subspace, rel_to_subspace, subspace_to_corel, subspace_to_rel,
    LinearEngine,
};
use crate::matrix::Matrix;
use crate::pid::PidEngine;
use crate::scalar::{Field, Fp, Int};
use crate::verify::special::subspace_count;

/// Hom-sets larger than this are refused by [`Present::enumerate`].
pub const ENUMERATION_LIMIT: u128 = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Corel,
    Rel,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corel" => Ok(Kind::Corel),
            "rel" => Ok(Kind::Rel),
            _ => Err(Error::Parse(format!(
                "unknown kind `{s}`, expected corel or rel"
            ))),
        }
    }
}

/// Engine-specific presentation of (co)relations.
pub trait Present: Diagrams<Arrow: Encode> {
    fn show_corel(&self, c: &Corelation<Self::Arrow>) -> Value {
        json!({ "kind": "corelation", "cospan": encode_corel(c) })
    }

    fn show_rel(&self, r: &Relation<Self::Arrow>) -> Value {
        json!({ "kind": "relation", "span": encode_rel(r) })
    }

    /// Size of the hom-set `n -> m`, or `None` if infinite.
    fn hom_size(&self, kind: Kind, n: usize, m: usize) -> Option<u128>;

    /// Canonical forms of every (co)relation `n -> m`.
    fn enumerate_unchecked(&self, kind: Kind, n: usize, m: usize) -> Vec<Value>;

    fn enumerate(&self, kind: Kind, n: usize, m: usize) -> Result<Vec<Value>> {
        let size = self
            .hom_size(kind, n, m)
            .ok_or_else(|| Error::Unsupported(format!("{} has infinite hom-sets", self.name())))?;
        if size > ENUMERATION_LIMIT {
            return Err(Error::Oversize(format!(
                "{size} elements exceed the limit of {ENUMERATION_LIMIT}"
            )));
        }
        Ok(self.enumerate_unchecked(kind, n, m))
    }
}

fn pow2(bits: usize) -> Option<u128> {
    1u128
        .checked_shl(u32::try_from(bits).ok()?)
        .filter(|_| bits < 128)
}

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (0u64..(1 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, x)| x.clone())
            .collect()
    })
}

impl Present for FinSet {
    fn show_corel(&self, c: &Corelation<crate::finset::FinFn>) -> Value {
        json!({ "kind": "corelation", "partition": corel_to_partition(c), "cospan": encode_corel(c) })
    }

    fn show_rel(&self, r: &Relation<crate::finset::FinFn>) -> Value {
        json!({ "kind": "relation", "table": rel_to_table(r), "span": encode_rel(r) })
    }

    fn hom_size(&self, kind: Kind, n: usize, m: usize) -> Option<u128> {
        match kind {
            Kind::Corel if n + m <= 25 => Some(u128::from(bell(n + m))),
            Kind::Corel => Some(u128::MAX),
            Kind::Rel => Some(pow2(n * m).unwrap_or(u128::MAX)),
        }
    }

    fn enumerate_unchecked(&self, kind: Kind, n: usize, m: usize) -> Vec<Value> {
        match kind {
            Kind::Corel => Partition::all(n, m)
                .iter()
                .map(|p| self.show_corel(&partition_to_corel(p)))
                .collect(),
            Kind::Rel => {
                let cells: Vec<_> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
                subsets(&cells)
                    .map(|pairs| {
                        let t = RelationTable::new(n, m, pairs).expect("in range");
                        self.show_rel(&table_to_rel(&t))
                    })
                    .collect()
            }
        }
    }
}

impl Present for PartialFinSet {
    fn show_corel(&self, c: &Corelation<PartialFn>) -> Value {
        json!({ "kind": "corelation", "partition": corel_to_partial_partition(c), "cospan": encode_corel(c) })
    }

    fn hom_size(&self, kind: Kind, n: usize, m: usize) -> Option<u128> {
        match kind {
            Kind::Corel if n + m < 25 => Some(u128::from(bell(n + m + 1))),
            Kind::Corel => Some(u128::MAX),
            Kind::Rel => Some(pow2((n + 1) * (m + 1) - 1).unwrap_or(u128::MAX)),
        }
    }

    /// Relations of `PF` are subsets of the pointed product minus its base
    /// point.
    fn enumerate_unchecked(&self, kind: Kind, n: usize, m: usize) -> Vec<Value> {
        match kind {
            Kind::Corel => PartialPartition::all(n, m)
                .iter()
                .map(|p| self.show_corel(&partial_partition_to_corel(p)))
                .collect(),
            Kind::Rel => {
                let points: Vec<(Option<usize>, Option<usize>)> = (0..=n)
                    .flat_map(|i| {
                        (0..=m)
                            .map(move |j| (Some(i).filter(|&i| i < n), Some(j).filter(|&j| j < m)))
                    })
                    .filter(|p| *p != (None, None))
                    .collect();
                subsets(&points)
                    .map(|chosen| {
                        let span = Span {
                            left: PartialFn::new(n, chosen.iter().map(|p| p.0).collect())
                                .expect("in range"),
                            right: PartialFn::new(m, chosen.iter().map(|p| p.1).collect())
                                .expect("in range"),
                        };
                        self.show_rel(&self.rho(&span))
                    })
                    .collect()
            }
        }
    }
}

fn matrix_rows<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::to_text).collect())
        .collect()
}

fn show_linear_corel<F: Field + Scalar>(c: &Corelation<Matrix<F>>) -> Value {
    let v = corel_to_subspace(c);
    json!({
        "kind": "corelation",
        "tag": F::tag(),
        "dom": c.dom(),
        "cod": c.cod(),
        "matrix": matrix_rows(v.basis()),
    })
}

fn show_linear_rel<F: Field + Scalar>(r: &Relation<Matrix<F>>) -> Value {
    let v = rel_to_subspace(r);
    json!({
        "kind": "relation",
        "tag": F::tag(),
        "dom": r.dom(),
        "cod": r.cod(),
        "subspace": matrix_rows(v.basis()),
    })
}

impl Present for LinearEngine<num_rational::BigRational> {
    fn show_corel(&self, c: &Corelation<Matrix<num_rational::BigRational>>) -> Value {
        show_linear_corel(c)
    }

    fn show_rel(&self, r: &Relation<Matrix<num_rational::BigRational>>) -> Value {
        show_linear_rel(r)
    }

    fn hom_size(&self, _kind: Kind, _n: usize, _m: usize) -> Option<u128> {
        None
    }

    fn enumerate_unchecked(&self, _kind: Kind, _n: usize, _m: usize) -> Vec<Value> {
        Vec::new()
    }
}

impl<const P: u64> Present for LinearEngine<Fp<P>> {
    fn show_corel(&self, c: &Corelation<Matrix<Fp<P>>>) -> Value {
        show_linear_corel(c)
    }

    fn show_rel(&self, r: &Relation<Matrix<Fp<P>>>) -> Value {
        show_linear_rel(r)
    }

    /// Both kinds are the subspaces of `GF(p)^(n+m)`.
    fn hom_size(&self, _kind: Kind, n: usize, m: usize) -> Option<u128> {
        let d = n + m;
        // the largest Gaussian binomial exceeds p^(d²/4)
        if (d * d / 4) as f64 * (P as f64).log2() > 60.0 {
            return Some(u128::MAX);
        }
        Some(subspace_count(P as usize, d) as u128)
    }

    fn enumerate_unchecked(&self, kind: Kind, n: usize, m: usize) -> Vec<Value> {
        all_subspaces::<Fp<P>>(n, m)
            .iter()
            .map(|v| match kind {
                Kind::Corel => self.show_corel(&subspace_to_corel(self, v)),
                Kind::Rel => self.show_rel(&subspace_to_rel(self, v)),
            })
            .collect()
    }
}

impl<T: Int + Scalar> Present for PidEngine<T> {
    fn show_corel(&self, c: &Corelation<Matrix<T>>) -> Value {
        let h = crate::pid::corel_canonical_z(c);
        json!({ "kind": "corelation", "ring": "Z", "dom": c.dom(), "cod": c.cod(), "matrix": matrix_rows(&h) })
    }

    fn hom_size(&self, _kind: Kind, _n: usize, _m: usize) -> Option<u128> {
        None
    }

    fn enumerate_unchecked(&self, _kind: Kind, _n: usize, _m: usize) -> Vec<Value> {
        Vec::new()
    }
}
