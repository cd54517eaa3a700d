use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::func::FinFn;
use super::partition::Partition;
use super::relation::RelationTable;
use super::union_find::UnionFind;
use crate::diagram::{Arrow, Corelation, Cospan, Engine, Relation, Span};
use crate::error::{Error, Result};

/// Choice of the subcategory `A` for the prop of finite functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FinSubcat {
    /// Injections. Satisfies the pushout-of-pullback condition.
    Inj,
    /// All functions. Fails it; kept to reproduce the collapse.
    All,
}

/// The prop `F` of functions between finite ordinals with the
/// (surjection, injection) factorization system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinSet {
    pub subcat: FinSubcat,
}

impl Default for FinSet {
    fn default() -> Self {
        FinSet {
            subcat: FinSubcat::Inj,
        }
    }
}

impl FinSet {
    pub fn new(subcat: FinSubcat) -> Self {
        FinSet { subcat }
    }
}

/// Renumbers the apex of a cospan by first occurrence along the legs;
/// unreached apex points keep their relative order after the reached ones.
pub(crate) fn first_occurrence_order(
    apex: usize,
    images: impl Iterator<Item = usize>,
) -> Vec<usize> {
    let mut new_of = vec![usize::MAX; apex];
    let mut next = 0;
    for v in images {
        if new_of[v] == usize::MAX {
            new_of[v] = next;
            next += 1;
        }
    }
    for slot in new_of.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    new_of
}

impl Engine for FinSet {
    type Arrow = FinFn;

    fn name(&self) -> String {
        match self.subcat {
            FinSubcat::Inj => "finset[A=Inj]".into(),
            FinSubcat::All => "finset[A=F]".into(),
        }
    }

    fn identity(&self, n: usize) -> FinFn {
        FinFn::identity(n)
    }

    fn compose_unchecked(&self, f: &FinFn, g: &FinFn) -> FinFn {
        f.then(g)
    }

    fn tensor(&self, f: &FinFn, g: &FinFn) -> FinFn {
        f.tensor(g)
    }

    fn injections(&self, n: usize, m: usize) -> (FinFn, FinFn) {
        (
            FinFn::new_unchecked(n + m, (0..n).collect()),
            FinFn::new_unchecked(n + m, (n..n + m).collect()),
        )
    }

    fn copair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        Error::check_boundary(f.cod(), g.cod())?;
        let table = f.table().iter().chain(g.table()).copied().collect();
        Ok(FinFn::new_unchecked(f.cod(), table))
    }

    fn projections(&self, n: usize, m: usize) -> (FinFn, FinFn) {
        let size = n * m;
        (
            FinFn::new_unchecked(n, (0..size).map(|k| k / m).collect()),
            FinFn::new_unchecked(m, (0..size).map(|k| k % m).collect()),
        )
    }

    fn pair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        Error::check_boundary(f.dom(), g.dom())?;
        let m = g.cod();
        let table = f
            .table()
            .iter()
            .zip(g.table())
            .map(|(&i, &j)| i * m + j)
            .collect();
        Ok(FinFn::new_unchecked(f.cod() * m, table))
    }

    fn is_in_e(&self, f: &FinFn) -> bool {
        f.is_surjective()
    }

    fn is_in_m(&self, f: &FinFn) -> bool {
        f.is_injective()
    }

    fn is_in_a(&self, f: &FinFn) -> bool {
        match self.subcat {
            FinSubcat::Inj => f.is_injective(),
            FinSubcat::All => true,
        }
    }

    fn is_iso(&self, f: &FinFn) -> bool {
        let c = f.classify();
        c.injective && c.surjective
    }

    fn factor(&self, f: &FinFn) -> (FinFn, FinFn) {
        f.factor_epi_mono()
    }

    /// Apex points are the pairs `(i, j)` with `f(i) = g(j)`, in
    /// lexicographic order.
    fn pullback(&self, f: &FinFn, g: &FinFn) -> Result<Span<FinFn>> {
        Error::check_boundary(f.cod(), g.cod())?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..f.dom() {
            for j in 0..g.dom() {
                if f.apply(i) == g.apply(j) {
                    left.push(i);
                    right.push(j);
                }
            }
        }
        Ok(Span {
            left: FinFn::new_unchecked(f.dom(), left),
            right: FinFn::new_unchecked(g.dom(), right),
        })
    }

    /// Union-find on `n ⊎ m` seeded with `p(k) ~ q(k)`; blocks are numbered
    /// by their least element.
    fn pushout(&self, p: &FinFn, q: &FinFn) -> Result<Cospan<FinFn>> {
        Error::check_boundary(p.dom(), q.dom())?;
        let (n, m) = (p.cod(), q.cod());
        let mut uf = UnionFind::new(n + m);
        for k in 0..p.dom() {
            uf.union(p.apply(k), n + q.apply(k));
        }
        let (labels, count) = uf.labels();
        Ok(Cospan {
            left: FinFn::new_unchecked(count, labels[..n].to_vec()),
            right: FinFn::new_unchecked(count, labels[n..].to_vec()),
        })
    }

    fn pushout_mediator(&self, po: &Cospan<FinFn>, cocone: &Cospan<FinFn>) -> Result<FinFn> {
        Error::check_boundary(po.dom(), cocone.dom())?;
        Error::check_boundary(po.cod(), cocone.cod())?;
        let mut u: Vec<Option<usize>> = vec![None; po.apex()];
        let legs = [(&po.left, &cocone.left), (&po.right, &cocone.right)];
        for (leg, target) in legs {
            for x in 0..leg.dom() {
                let b = leg.apply(x);
                let want = target.apply(x);
                match u[b] {
                    Some(have) if have != want => {
                        return Err(Error::NoMediator(format!(
                            "block {b} sent to both {have} and {want}"
                        )))
                    }
                    _ => u[b] = Some(want),
                }
            }
        }
        let table: Option<Vec<usize>> = u.into_iter().collect();
        let table =
            table.ok_or_else(|| Error::NoMediator("pushout apex not jointly covered".into()))?;
        Ok(FinFn::new_unchecked(cocone.apex(), table))
    }

    fn pullback_mediator(&self, pb: &Span<FinFn>, cone: &Span<FinFn>) -> Result<FinFn> {
        Error::check_boundary(pb.dom(), cone.dom())?;
        Error::check_boundary(pb.cod(), cone.cod())?;
        let index: HashMap<(usize, usize), usize> = (0..pb.apex())
            .map(|k| ((pb.left.apply(k), pb.right.apply(k)), k))
            .collect();
        let table = (0..cone.apex())
            .map(|a| {
                let key = (cone.left.apply(a), cone.right.apply(a));
                index
                    .get(&key)
                    .copied()
                    .ok_or_else(|| Error::NoMediator(format!("pair {key:?} not in the pullback")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinFn::new_unchecked(pb.apex(), table))
    }

    fn canonical_cospan(&self, c: &Cospan<FinFn>) -> Cospan<FinFn> {
        let apex = c.apex();
        let new_of =
            first_occurrence_order(apex, c.left.table().iter().chain(c.right.table()).copied());
        let relabel =
            |f: &FinFn| FinFn::new_unchecked(apex, f.table().iter().map(|&v| new_of[v]).collect());
        Cospan {
            left: relabel(&c.left),
            right: relabel(&c.right),
        }
    }

    fn canonical_span(&self, s: &Span<FinFn>) -> Span<FinFn> {
        let mut pts: Vec<(usize, usize)> = (0..s.apex())
            .map(|k| (s.left.apply(k), s.right.apply(k)))
            .collect();
        pts.sort_unstable();
        Span {
            left: FinFn::new_unchecked(s.dom(), pts.iter().map(|p| p.0).collect()),
            right: FinFn::new_unchecked(s.cod(), pts.iter().map(|p| p.1).collect()),
        }
    }
}

/// Reads a `FinSet` corelation as a partition of `ord(n) ⊎ ord(m)`.
pub fn corel_to_partition(c: &Corelation<FinFn>) -> Partition {
    let labels: Vec<usize> = c
        .cospan()
        .left
        .table()
        .iter()
        .chain(c.cospan().right.table())
        .copied()
        .collect();
    Partition::new(c.dom(), c.cod(), &labels).expect("legs cover n + m points")
}

pub fn partition_to_corel(p: &Partition) -> Corelation<FinFn> {
    let k = p.block_count();
    let (n, _) = (p.dom(), p.cod());
    let left = FinFn::new_unchecked(k, p.blocks()[..n].to_vec());
    let right = FinFn::new_unchecked(k, p.blocks()[n..].to_vec());
    Corelation::from_canonical(Cospan { left, right })
}

/// The partition induced by a cospan of functions: two boundary points share
/// a block iff their apex images coincide.
pub fn corel_canonical(c: &Cospan<FinFn>) -> Partition {
    use crate::diagram::Diagrams;
    corel_to_partition(&FinSet::default().gamma(c))
}

pub fn rel_to_table(r: &Relation<FinFn>) -> RelationTable {
    let s = r.span();
    let pairs = (0..s.apex())
        .map(|k| (s.left.apply(k), s.right.apply(k)))
        .collect();
    RelationTable::new(s.dom(), s.cod(), pairs).expect("legs land in range")
}

pub fn rel_canonical(s: &Span<FinFn>) -> RelationTable {
    use crate::diagram::Diagrams;
    rel_to_table(&FinSet::default().rho(s))
}

pub fn table_to_rel(t: &RelationTable) -> Relation<FinFn> {
    let left = FinFn::new_unchecked(t.dom(), t.pairs().iter().map(|p| p.0).collect());
    let right = FinFn::new_unchecked(t.cod(), t.pairs().iter().map(|p| p.1).collect());
    Relation::from_canonical(Span { left, right })
}
