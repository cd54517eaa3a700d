//! Finite lattices (and coproducts of lattices) viewed as thin categories.
//!
//! Pushouts are joins and pullbacks are meets. With the factorization
//! `(identities, everything)` a corelation `a -> b` is a cospan through
//! `a ∨ b`, so each hom-set of corelations has at most one element.

use serde::Deserialize;
use serde_json::json;

use super::report::{Collector, Failure, SuiteReport};
use crate::error::{Error, Result};
use crate::finset::UnionFind;

/// A finite poset in which any two elements with a common bound have both a
/// join and a meet. Elements are `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<Option<usize>>>,
    meet: Vec<Vec<Option<usize>>>,
}

/// File format: either an explicit `leq` matrix or generating `order` pairs
/// `[a, b]` meaning `a ≤ b`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLattice {
    size: Option<usize>,
    leq: Option<Vec<Vec<bool>>>,
    order: Option<Vec<(usize, usize)>>,
}

fn extremum(
    size: usize,
    candidates: impl Fn(usize) -> bool,
    below: impl Fn(usize, usize) -> bool,
) -> Option<usize> {
    let cs: Vec<usize> = (0..size).filter(|&c| candidates(c)).collect();
    cs.iter()
        .copied()
        .find(|&c| cs.iter().all(|&d| below(c, d)))
}

impl FiniteLattice {
    pub fn from_leq(leq: Vec<Vec<bool>>) -> Result<Self> {
        let size = leq.len();
        if leq.iter().any(|row| row.len() != size) {
            return Err(Error::Parse("leq must be a square matrix".into()));
        }
        for a in 0..size {
            if !leq[a][a] {
                return Err(Error::InvalidMorphism(format!("not reflexive at {a}")));
            }
            for b in 0..size {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::InvalidMorphism(format!(
                        "not antisymmetric at {a}, {b}"
                    )));
                }
                for c in 0..size {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::InvalidMorphism(format!(
                            "not transitive at {a}, {b}, {c}"
                        )));
                    }
                }
            }
        }
        let mut join = vec![vec![None; size]; size];
        let mut meet = vec![vec![None; size]; size];
        for a in 0..size {
            for b in 0..size {
                let upper = |c: usize| leq[a][c] && leq[b][c];
                let lower = |c: usize| leq[c][a] && leq[c][b];
                join[a][b] = extremum(size, upper, |c, d| leq[c][d]);
                meet[a][b] = extremum(size, lower, |c, d| leq[d][c]);
                let bounded = (0..size).any(|c| upper(c) || lower(c));
                if bounded && (join[a][b].is_none() || meet[a][b].is_none()) {
                    return Err(Error::InvalidMorphism(format!(
                        "{a} and {b} lack a join or meet"
                    )));
                }
            }
        }
        Ok(FiniteLattice {
            size,
            leq,
            join,
            meet,
        })
    }

    /// The reflexive-transitive closure of the given pairs.
    pub fn from_order(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::InvalidMorphism(format!(
                    "pair ({a}, {b}) out of range"
                )));
            }
            leq[a][b] = true;
        }
        for k in 0..size {
            for a in 0..size {
                for b in 0..size {
                    if leq[a][k] && leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        Self::from_leq(leq)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawLattice = serde_json::from_str(text)?;
        match (raw.leq, raw.order) {
            (Some(leq), None) => Self::from_leq(leq),
            (None, Some(order)) => {
                let size = raw
                    .size
                    .ok_or_else(|| Error::Parse("`order` needs `size`".into()))?;
                Self::from_order(size, &order)
            }
            _ => Err(Error::Parse("give exactly one of `leq` and `order`".into())),
        }
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_order(n, &pairs).expect("chains are lattices")
    }

    /// `0 < a, b < 1`.
    pub fn diamond() -> Self {
        Self::from_order(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond is a lattice")
    }

    /// Disjoint union; elements of `other` are shifted by `self.size()`.
    pub fn coproduct(&self, other: &Self) -> Self {
        let n = self.size + other.size;
        let leq = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| match (a < self.size, b < self.size) {
                        (true, true) => self.leq[a][b],
                        (false, false) => other.leq[a - self.size][b - self.size],
                        _ => false,
                    })
                    .collect()
            })
            .collect();
        Self::from_leq(leq).expect("coproducts of lattices are valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet[a][b]
    }

    /// Connected components under comparability.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.size);
        for a in 0..self.size {
            for b in 0..self.size {
                if self.leq[a][b] {
                    uf.union(a, b);
                }
            }
        }
        uf.labels()
    }

    /// Apexes of cospans `a -> c <- b`.
    pub fn cospan_hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&c| self.leq[a][c] && self.leq[b][c])
            .collect()
    }

    /// Apexes of spans `a <- c -> b`.
    pub fn span_hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&c| self.leq[c][a] && self.leq[c][b])
            .collect()
    }

    /// The corelation of the cospan `a -> c <- b`: the copairing `a ∨ b -> c`
    /// factors as an identity followed by itself, leaving apex `a ∨ b`.
    pub fn gamma(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        (self.leq[a][c] && self.leq[b][c])
            .then(|| self.join[a][b].expect("bounded pairs have joins"))
    }
}

/// Cospan hom-sets are upper sets of joins, span hom-sets lower sets of
/// meets, cospan composition is join, and the corelation hom-sets collapse to
/// one element within a summand and none across.
pub fn suite_lattice(name: &str, l: &FiniteLattice) -> SuiteReport {
    let mut c = Collector::new("lattice", format!("lattice[{name}]"));
    let (component, _) = l.components();
    let n = l.size();
    for a in 0..n {
        for b in 0..n {
            c.instance();
            let cospans = l.cospan_hom(a, b);
            let upper: Vec<usize> = match l.join(a, b) {
                Some(j) => (0..n).filter(|&x| l.leq(j, x)).collect(),
                None => Vec::new(),
            };
            c.check(cospans == upper, || Failure {
                input: json!({ "cospan_hom": [a, b] }),
                expected: json!(upper),
                got: json!(cospans),
            });
            let spans = l.span_hom(a, b);
            let lower: Vec<usize> = match l.meet(a, b) {
                Some(m) => (0..n).filter(|&x| l.leq(x, m)).collect(),
                None => Vec::new(),
            };
            c.check(spans == lower, || Failure {
                input: json!({ "span_hom": [a, b] }),
                expected: json!(lower),
                got: json!(spans),
            });
            let mut corels: Vec<usize> = cospans.iter().filter_map(|&x| l.gamma(a, b, x)).collect();
            corels.dedup();
            let expected = usize::from(component[a] == component[b]);
            c.check(corels.len() == expected, || Failure {
                input: json!({ "corel_hom": [a, b] }),
                expected: json!(expected),
                got: json!(corels.len()),
            });
            for e in 0..n {
                for &x in &cospans {
                    for y in l.cospan_hom(b, e) {
                        let composite = l.join(x, y);
                        let ok = composite.is_some_and(|z| l.leq(a, z) && l.leq(e, z));
                        c.check(ok, || Failure {
                            input: json!({ "compose": [[a, x, b], [b, y, e]] }),
                            expected: json!("join in the upper set"),
                            got: json!(composite),
                        });
                    }
                }
            }
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_homs_are_singletons() {
        let l = FiniteLattice::chain(2);
        assert_eq!(l.cospan_hom(0, 0), vec![0, 1]);
        assert_eq!(l.join(0, 1), Some(1));
        assert_eq!(l.meet(0, 1), Some(0));
        assert!(suite_lattice("chain2", &l).pass);
    }

    #[test]
    fn diamond_joins() {
        let l = FiniteLattice::diamond();
        assert_eq!(l.join(1, 2), Some(3));
        assert_eq!(l.meet(1, 2), Some(0));
        assert!(suite_lattice("diamond", &l).pass);
    }

    #[test]
    fn coproduct_cross_homs_are_empty() {
        let point = FiniteLattice::chain(1);
        let l = point.coproduct(&point);
        assert_eq!(l.join(0, 1), None);
        assert!(l.cospan_hom(0, 1).is_empty());
        assert_eq!(l.components().1, 2);
        assert!(suite_lattice("coproduct", &l).pass);
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable upper bounds of two incomparable elements
        let bowtie = FiniteLattice::from_order(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(bowtie.is_err());
        assert!(FiniteLattice::from_leq(vec![vec![true, true], vec![true, true]]).is_err());
    }

    #[test]
    fn json_forms() {
        let a =
            FiniteLattice::from_json(r#"{"size": 4, "order": [[0,1],[0,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(a, FiniteLattice::diamond());
        let b = FiniteLattice::from_json(r#"{"leq": [[true, true], [false, true]]}"#).unwrap();
        assert_eq!(b, FiniteLattice::chain(2));
        assert!(FiniteLattice::from_json(r#"{"size": 2}"#).is_err());
    }
}
