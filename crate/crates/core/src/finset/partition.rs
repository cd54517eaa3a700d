//! Equivalence relations and partial equivalence relations on `ord(n) ⊎ ord(m)`.

use serde::{Deserialize, Serialize};

use super::union_find::UnionFind;
use crate::error::{Error, Result};

/// A set partition of `ord(n) ⊎ ord(m)`. Block ids are numbered in order of
/// first occurrence, which makes the representation unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition<usize>")]
pub struct Partition {
    n: usize,
    m: usize,
    blocks: Vec<usize>,
}

/// A partition of a subset of `ord(n) ⊎ ord(m)`; `None` marks points outside
/// the domain of the PER.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition<Option<usize>>")]
pub struct PartialPartition {
    n: usize,
    m: usize,
    blocks: Vec<Option<usize>>,
}

#[derive(Deserialize)]
struct RawPartition<T> {
    n: usize,
    m: usize,
    blocks: Vec<T>,
}

impl TryFrom<RawPartition<usize>> for Partition {
    type Error = Error;
    fn try_from(raw: RawPartition<usize>) -> Result<Self> {
        Partition::new(raw.n, raw.m, &raw.blocks)
    }
}

impl TryFrom<RawPartition<Option<usize>>> for PartialPartition {
    type Error = Error;
    fn try_from(raw: RawPartition<Option<usize>>) -> Result<Self> {
        PartialPartition::new(raw.n, raw.m, &raw.blocks)
    }
}

fn normalize<I: IntoIterator<Item = Option<usize>>>(labels: I) -> Vec<Option<usize>> {
    let mut seen: Vec<(usize, usize)> = Vec::new();
    labels
        .into_iter()
        .map(|l| {
            l.map(|l| match seen.iter().find(|(old, _)| *old == l) {
                Some(&(_, new)) => new,
                None => {
                    let new = seen.len();
                    seen.push((l, new));
                    new
                }
            })
        })
        .collect()
}

impl Partition {
    /// Accepts arbitrary block labels and renumbers them.
    pub fn new(n: usize, m: usize, labels: &[usize]) -> Result<Self> {
        if labels.len() != n + m {
            return Err(Error::InvalidMorphism(format!(
                "partition of {} points, expected {}",
                labels.len(),
                n + m
            )));
        }
        let blocks = normalize(labels.iter().map(|&l| Some(l)))
            .into_iter()
            .map(|b| b.expect("total"))
            .collect();
        Ok(Partition { n, m, blocks })
    }

    pub fn identity(n: usize) -> Self {
        let labels: Vec<usize> = (0..n).chain(0..n).collect();
        Partition::new(n, n, &labels).expect("well formed")
    }

    pub fn dom(&self) -> usize {
        self.n
    }

    pub fn cod(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |b| b + 1)
    }

    /// Every partition of `ord(n) ⊎ ord(m)`, as restricted growth strings in
    /// lexicographic order.
    pub fn all(n: usize, m: usize) -> Vec<Partition> {
        restricted_growth(n + m)
            .into_iter()
            .map(|blocks| Partition { n, m, blocks })
            .collect()
    }

    /// Index-shifted disjoint union.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let k = self.block_count();
        let labels: Vec<usize> = self.blocks[..self.n]
            .iter()
            .copied()
            .chain(other.blocks[..other.n].iter().map(|b| b + k))
            .chain(self.blocks[self.n..].iter().copied())
            .chain(other.blocks[other.n..].iter().map(|b| b + k))
            .collect();
        Partition::new(self.n + other.n, self.m + other.m, &labels).expect("well formed")
    }

    /// Glues the classes of `self : n -> z` and `other : z -> m` along the
    /// shared middle points, then forgets the middle.
    pub fn compose_direct(&self, other: &Partition) -> Result<Partition> {
        Error::check_boundary(self.m, other.n)?;
        let (n, z, m) = (self.n, self.m, other.m);
        let mut uf = UnionFind::new(n + z + m);
        union_blocks(&mut uf, self.blocks.iter().map(|&b| Some(b)), 0);
        union_blocks(&mut uf, other.blocks.iter().map(|&b| Some(b)), n);
        let labels: Vec<usize> = (0..n).chain(n + z..n + z + m).map(|x| uf.find(x)).collect();
        Partition::new(n, m, &labels)
    }
}

/// Unions the points `offset + i` that share a block label.
fn union_blocks(uf: &mut UnionFind, blocks: impl Iterator<Item = Option<usize>>, offset: usize) {
    let mut first: Vec<Option<usize>> = Vec::new();
    for (i, b) in blocks.enumerate() {
        let Some(b) = b else { continue };
        if first.len() <= b {
            first.resize(b + 1, None);
        }
        match first[b] {
            Some(rep) => {
                uf.union(rep, offset + i);
            }
            None => first[b] = Some(offset + i),
        }
    }
}

fn restricted_growth(len: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max {
            prefix.push(b);
            go(prefix, max.max(b + 1), len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, len, &mut out);
    out
}

impl PartialPartition {
    pub fn new(n: usize, m: usize, labels: &[Option<usize>]) -> Result<Self> {
        if labels.len() != n + m {
            return Err(Error::InvalidMorphism(format!(
                "partition of {} points, expected {}",
                labels.len(),
                n + m
            )));
        }
        Ok(PartialPartition {
            n,
            m,
            blocks: normalize(labels.iter().copied()),
        })
    }

    pub fn dom(&self) -> usize {
        self.n
    }

    pub fn cod(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Option<usize>] {
        &self.blocks
    }

    /// Every PER on `ord(n) ⊎ ord(m)`.
    pub fn all(n: usize, m: usize) -> Vec<PartialPartition> {
        let len = n + m;
        let mut out = Vec::new();
        for mask in 0..(1usize << len) {
            let domain: Vec<usize> = (0..len).filter(|i| mask >> i & 1 == 1).collect();
            for rg in restricted_growth(domain.len()) {
                let mut labels = vec![None; len];
                for (k, &i) in domain.iter().enumerate() {
                    labels[i] = Some(rg[k]);
                }
                out.push(PartialPartition::new(n, m, &labels).expect("well formed"));
            }
        }
        out
    }

    /// Composition of PERs. Points outside either PER's domain are glued to
    /// an absorbing point; every class that reaches it leaves the domain.
    pub fn compose_direct(&self, other: &PartialPartition) -> Result<PartialPartition> {
        Error::check_boundary(self.m, other.n)?;
        let (n, z, m) = (self.n, self.m, other.m);
        let sink = n + z + m;
        let mut uf = UnionFind::new(n + z + m + 1);
        union_blocks(&mut uf, self.blocks.iter().copied(), 0);
        union_blocks(&mut uf, other.blocks.iter().copied(), n);
        for (i, b) in self.blocks.iter().enumerate() {
            if b.is_none() {
                uf.union(i, sink);
            }
        }
        for (i, b) in other.blocks.iter().enumerate() {
            if b.is_none() {
                uf.union(n + i, sink);
            }
        }
        let sink_root = uf.find(sink);
        let labels: Vec<Option<usize>> = (0..n)
            .chain(n + z..n + z + m)
            .map(|x| {
                let r = uf.find(x);
                (r != sink_root).then_some(r)
            })
            .collect();
        PartialPartition::new(n, m, &labels)
    }
}

impl From<&Partition> for PartialPartition {
    fn from(p: &Partition) -> Self {
        PartialPartition {
            n: p.n,
            m: p.m,
            blocks: p.blocks.iter().map(|&b| Some(b)).collect(),
        }
    }
}

/// Bell numbers by the Bell triangle; an oracle independent of partition
/// enumeration.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for &x in &row {
            let last = *next.last().expect("nonempty");
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_triangle() {
        let got: Vec<u64> = (0..7).map(bell).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn enumeration_matches_bell() {
        for k in 0..=6 {
            assert_eq!(Partition::all(k, 0).len() as u64, bell(k));
        }
        // PERs on k points number Bell(k + 1)
        for k in 0..=4 {
            assert_eq!(PartialPartition::all(k, 0).len() as u64, bell(k + 1));
        }
    }

    #[test]
    fn normal_form_is_first_occurrence() {
        let p = Partition::new(2, 1, &[7, 3, 7]).unwrap();
        assert_eq!(p.blocks(), &[0, 1, 0]);
    }

    #[test]
    fn identity_is_a_unit() {
        for e in Partition::all(1, 2) {
            assert_eq!(Partition::identity(1).compose_direct(&e).unwrap(), e);
            assert_eq!(e.compose_direct(&Partition::identity(2)).unwrap(), e);
        }
    }

    #[test]
    fn singletons_compose_to_singletons() {
        let s = Partition::new(2, 2, &[0, 1, 2, 3]).unwrap();
        assert_eq!(s.compose_direct(&s).unwrap(), s);
    }

    #[test]
    fn chase_through_witness() {
        // {{x0, w0}} ; {{w0, y0}} = {{x0, y0}}
        let e = Partition::identity(1);
        assert_eq!(
            e.compose_direct(&e).unwrap(),
            Partition::new(1, 1, &[0, 0]).unwrap()
        );
        // identity then the disconnected corelation
        let apart = Partition::new(1, 1, &[0, 1]).unwrap();
        assert_eq!(e.compose_direct(&apart).unwrap(), apart);
    }

    #[test]
    fn tensor_shifts_blocks() {
        let id1 = Partition::identity(1);
        assert_eq!(id1.tensor(&id1), Partition::identity(2));
        let unit = Partition::new(0, 0, &[]).unwrap();
        let p = Partition::new(2, 1, &[0, 1, 1]).unwrap();
        assert_eq!(p.tensor(&unit), p);
        assert_eq!(unit.tensor(&p), p);
    }

    #[test]
    fn per_outside_domain_propagates() {
        // x0 ~ w0, but w0 is outside the second PER's domain
        let e1 = PartialPartition::new(1, 1, &[Some(0), Some(0)]).unwrap();
        let e2 = PartialPartition::new(1, 1, &[None, Some(0)]).unwrap();
        let c = e1.compose_direct(&e2).unwrap();
        assert_eq!(c.blocks(), &[None, Some(0)]);
    }

    #[test]
    fn json_shape() {
        let p = Partition::new(1, 1, &[0, 0]).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"n":1,"m":1,"blocks":[0,0]}"#
        );
        let back: Partition = serde_json::from_str(r#"{"n":1,"m":1,"blocks":[5,5]}"#).unwrap();
        assert_eq!(back, p);
    }
}
