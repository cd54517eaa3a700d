use std::collections::HashMap;

use super::engine::first_occurrence_order;
use super::func::PartialFn;
use super::partition::PartialPartition;
use super::union_find::UnionFind;
use crate::diagram::{Arrow, Corelation, Cospan, Engine, Span};
use crate::error::{Error, Result};

/// The prop `PF` of partial functions, factored as partial surjections
/// followed by injections, with `A` the injections.
///
/// Limits and colimits are those of pointed finite sets: the object `n` is
/// `ord(n)` plus a base point standing for "undefined".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartialFinSet;

impl Engine for PartialFinSet {
    type Arrow = PartialFn;

    fn name(&self) -> String {
        "pf[A=Inj]".into()
    }

    fn identity(&self, n: usize) -> PartialFn {
        PartialFn::identity(n)
    }

    fn compose_unchecked(&self, f: &PartialFn, g: &PartialFn) -> PartialFn {
        f.then(g)
    }

    fn tensor(&self, f: &PartialFn, g: &PartialFn) -> PartialFn {
        f.tensor(g)
    }

    fn injections(&self, n: usize, m: usize) -> (PartialFn, PartialFn) {
        (
            PartialFn::new_unchecked(n + m, (0..n).map(Some).collect()),
            PartialFn::new_unchecked(n + m, (n..n + m).map(Some).collect()),
        )
    }

    fn copair(&self, f: &PartialFn, g: &PartialFn) -> Result<PartialFn> {
        Error::check_boundary(f.cod(), g.cod())?;
        Ok(PartialFn::new_unchecked(
            f.cod(),
            f.table().iter().chain(g.table()).copied().collect(),
        ))
    }

    /// The pointed product has `(n + 1)(m + 1) - 1` points; `(i, j)` sits at
    /// `i (m + 1) + j` with `n` and `m` standing for the base points.
    fn projections(&self, n: usize, m: usize) -> (PartialFn, PartialFn) {
        let size = (n + 1) * (m + 1) - 1;
        let p1 = (0..size)
            .map(|k| Some(k / (m + 1)).filter(|&i| i < n))
            .collect();
        let p2 = (0..size)
            .map(|k| Some(k % (m + 1)).filter(|&j| j < m))
            .collect();
        (
            PartialFn::new_unchecked(n, p1),
            PartialFn::new_unchecked(m, p2),
        )
    }

    fn pair(&self, f: &PartialFn, g: &PartialFn) -> Result<PartialFn> {
        Error::check_boundary(f.dom(), g.dom())?;
        let (n, m) = (f.cod(), g.cod());
        let table = f
            .table()
            .iter()
            .zip(g.table())
            .map(|(a, b)| match (a, b) {
                (None, None) => None,
                _ => Some(a.unwrap_or(n) * (m + 1) + b.unwrap_or(m)),
            })
            .collect();
        Ok(PartialFn::new_unchecked((n + 1) * (m + 1) - 1, table))
    }

    fn is_in_e(&self, f: &PartialFn) -> bool {
        f.is_partial_surjection()
    }

    fn is_in_m(&self, f: &PartialFn) -> bool {
        f.is_injection()
    }

    fn is_in_a(&self, f: &PartialFn) -> bool {
        f.is_injection()
    }

    fn is_iso(&self, f: &PartialFn) -> bool {
        f.is_injection() && f.is_partial_surjection()
    }

    fn factor(&self, f: &PartialFn) -> (PartialFn, PartialFn) {
        f.factor()
    }

    /// Pairs `(x, y)` of points or base points with `f(x) = g(y)`, except the
    /// pair of base points. Base points sort last.
    fn pullback(&self, f: &PartialFn, g: &PartialFn) -> Result<Span<PartialFn>> {
        Error::check_boundary(f.cod(), g.cod())?;
        let (n, m) = (f.dom(), g.dom());
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..=n {
            for j in 0..=m {
                if i == n && j == m {
                    continue;
                }
                let fi = if i < n { f.apply(i) } else { None };
                let gj = if j < m { g.apply(j) } else { None };
                if fi == gj {
                    left.push((i < n).then_some(i));
                    right.push((j < m).then_some(j));
                }
            }
        }
        Ok(Span {
            left: PartialFn::new_unchecked(n, left),
            right: PartialFn::new_unchecked(m, right),
        })
    }

    /// Union-find on `n ⊎ m ⊎ {*}`; the block of `*` becomes undefined.
    fn pushout(&self, p: &PartialFn, q: &PartialFn) -> Result<Cospan<PartialFn>> {
        Error::check_boundary(p.dom(), q.dom())?;
        let (n, m) = (p.cod(), q.cod());
        let sink = n + m;
        let mut uf = UnionFind::new(n + m + 1);
        for k in 0..p.dom() {
            let a = p.apply(k).unwrap_or(sink);
            let b = q.apply(k).map_or(sink, |j| n + j);
            uf.union(a, b);
        }
        let sink_root = uf.find(sink);
        let mut label_of_root: HashMap<usize, usize> = HashMap::new();
        let labels: Vec<Option<usize>> = (0..n + m)
            .map(|x| {
                let r = uf.find(x);
                if r == sink_root {
                    return None;
                }
                let next = label_of_root.len();
                Some(*label_of_root.entry(r).or_insert(next))
            })
            .collect();
        let count = label_of_root.len();
        Ok(Cospan {
            left: PartialFn::new_unchecked(count, labels[..n].to_vec()),
            right: PartialFn::new_unchecked(count, labels[n..].to_vec()),
        })
    }

    fn pushout_mediator(
        &self,
        po: &Cospan<PartialFn>,
        cocone: &Cospan<PartialFn>,
    ) -> Result<PartialFn> {
        Error::check_boundary(po.dom(), cocone.dom())?;
        Error::check_boundary(po.cod(), cocone.cod())?;
        let mut u: Vec<Option<Option<usize>>> = vec![None; po.apex()];
        for (leg, target) in [(&po.left, &cocone.left), (&po.right, &cocone.right)] {
            for x in 0..leg.dom() {
                let want = target.apply(x);
                match leg.apply(x) {
                    None if want.is_some() => {
                        return Err(Error::NoMediator(format!(
                            "point {x} is undefined in the pushout only"
                        )))
                    }
                    None => {}
                    Some(b) => match u[b] {
                        Some(have) if have != want => {
                            return Err(Error::NoMediator(format!(
                                "block {b} sent to both {have:?} and {want:?}"
                            )))
                        }
                        _ => u[b] = Some(want),
                    },
                }
            }
        }
        let table: Option<Vec<Option<usize>>> = u.into_iter().collect();
        let table =
            table.ok_or_else(|| Error::NoMediator("pushout apex not jointly covered".into()))?;
        Ok(PartialFn::new_unchecked(cocone.apex(), table))
    }

    fn pullback_mediator(&self, pb: &Span<PartialFn>, cone: &Span<PartialFn>) -> Result<PartialFn> {
        Error::check_boundary(pb.dom(), cone.dom())?;
        Error::check_boundary(pb.cod(), cone.cod())?;
        let index: HashMap<(Option<usize>, Option<usize>), usize> = (0..pb.apex())
            .map(|k| ((pb.left.apply(k), pb.right.apply(k)), k))
            .collect();
        let table = (0..cone.apex())
            .map(|a| match (cone.left.apply(a), cone.right.apply(a)) {
                (None, None) => Ok(None),
                key => index
                    .get(&key)
                    .map(|&k| Some(k))
                    .ok_or_else(|| Error::NoMediator(format!("pair {key:?} not in the pullback"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartialFn::new_unchecked(pb.apex(), table))
    }

    fn canonical_cospan(&self, c: &Cospan<PartialFn>) -> Cospan<PartialFn> {
        let apex = c.apex();
        let new_of = first_occurrence_order(
            apex,
            c.left
                .table()
                .iter()
                .chain(c.right.table())
                .flatten()
                .copied(),
        );
        let relabel = |f: &PartialFn| {
            PartialFn::new_unchecked(
                apex,
                f.table().iter().map(|v| v.map(|x| new_of[x])).collect(),
            )
        };
        Cospan {
            left: relabel(&c.left),
            right: relabel(&c.right),
        }
    }

    fn canonical_span(&self, s: &Span<PartialFn>) -> Span<PartialFn> {
        let mut pts: Vec<(Option<usize>, Option<usize>)> = (0..s.apex())
            .map(|k| (s.left.apply(k), s.right.apply(k)))
            .collect();
        pts.sort_unstable();
        Span {
            left: PartialFn::new_unchecked(s.dom(), pts.iter().map(|p| p.0).collect()),
            right: PartialFn::new_unchecked(s.cod(), pts.iter().map(|p| p.1).collect()),
        }
    }
}

pub fn corel_to_partial_partition(c: &Corelation<PartialFn>) -> PartialPartition {
    let labels: Vec<Option<usize>> = c
        .cospan()
        .left
        .table()
        .iter()
        .chain(c.cospan().right.table())
        .copied()
        .collect();
    PartialPartition::new(c.dom(), c.cod(), &labels).expect("legs cover n + m points")
}

pub fn partial_partition_to_corel(p: &PartialPartition) -> Corelation<PartialFn> {
    let k = p.blocks().iter().flatten().max().map_or(0, |b| b + 1);
    let n = p.dom();
    let left = PartialFn::new_unchecked(k, p.blocks()[..n].to_vec());
    let right = PartialFn::new_unchecked(k, p.blocks()[n..].to_vec());
    Corelation::from_canonical(Cospan { left, right })
}
