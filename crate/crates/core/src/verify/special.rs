//! Suites tied to a particular engine.

use std::collections::HashSet;

use indexmap::IndexSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::instances::{
    cospan_pairs, cospans, random_cospan_triples, Instances, Legs, Plan, Sample,
};
use super::report::{Collector, Failure, SuiteReport};
use super::suites::collector;
use crate::codec::{encode_corel, encode_cospan, encode_rel, Encode};
use crate::diagram::{Corelation, Cospan, Diagrams, Span};
use crate::finset::{
    bell, corel_to_partial_partition, corel_to_partition, partial_partition_to_corel,
    partition_to_corel, rel_to_table, FinFn, FinSet, PartialFinSet, PartialPartition, Partition,
};
use crate::linear::{
    all_subspaces, corel_to_rel, rel_to_corel, rel_to_subspace, scalar_corel_is_identity,
    subspace_to_corel, subspace_to_rel, LinearEngine,
};
use crate::matrix::Matrix;
use crate::pid::{factor_z, is_epi_z, is_split_mono_z, scalar_corel_is_identity_z, PidEngine};
use crate::scalar::{Field, FiniteField};

/// Largest `n + m` for which corelation counts are checked against Bell numbers.
pub const BELL_LIMIT: usize = 6;

/// PER enumeration grows as Bell(n + m + 1); its bound is capped here.
pub const PER_BOUND: usize = 2;

/// Distinct `Γ`-images of every cospan `n -> z <- m` with `z ≤ n + m`.
fn corel_image_count<E: Instances>(e: &E, n: usize, m: usize) -> usize {
    let mut seen = HashSet::new();
    for z in 0..=n + m {
        let lefts = e.all_arrows(n, z).expect("finite");
        let rights = e.all_arrows(m, z).expect("finite");
        for l in &lefts {
            for r in &rights {
                seen.insert(e.gamma(&Cospan {
                    left: l.clone(),
                    right: r.clone(),
                }));
            }
        }
    }
    seen.len()
}

/// Corelations of `F` are equivalence relations and those of `PF` are partial
/// equivalence relations: composition through cospans agrees with direct
/// gluing of blocks, and the hom-sets have Bell-number sizes.
pub fn er_per_iso(plan: &Plan) -> SuiteReport {
    let e = FinSet::default();
    let mut c = Collector::new("er_per_iso", "finset+pf");
    let b = plan.bound;
    for n in 0..=b {
        for z in 0..=b {
            let left = Partition::all(n, z);
            for m in 0..=b {
                for p1 in &left {
                    for p2 in &Partition::all(z, m) {
                        c.instance();
                        let direct = p1.compose_direct(p2).expect("composable");
                        let via = e
                            .compose_corel(&partition_to_corel(p1), &partition_to_corel(p2))
                            .map(|k| corel_to_partition(&k));
                        c.check(via.as_ref() == Ok(&direct), || Failure {
                            input: json!([p1, p2]),
                            expected: json!(direct),
                            got: json!(via.ok()),
                        });
                    }
                }
            }
        }
    }
    for n in 0..=b {
        for m in 0..=b {
            if n + m > BELL_LIMIT {
                continue;
            }
            c.instance();
            let count = corel_image_count(&e, n, m);
            let expected = bell(n + m) as usize;
            c.check(count == expected, || Failure {
                input: json!({ "corel_count": [n, m] }),
                expected: json!(expected),
                got: json!(count),
            });
        }
    }
    let pb = b.min(PER_BOUND);
    for n in 0..=pb {
        for z in 0..=pb {
            let left = PartialPartition::all(n, z);
            for m in 0..=pb {
                for p1 in &left {
                    for p2 in &PartialPartition::all(z, m) {
                        c.instance();
                        let direct = p1.compose_direct(p2).expect("composable");
                        let via = PartialFinSet
                            .compose_corel(
                                &partial_partition_to_corel(p1),
                                &partial_partition_to_corel(p2),
                            )
                            .map(|k| corel_to_partial_partition(&k));
                        c.check(via.as_ref() == Ok(&direct), || Failure {
                            input: json!([p1, p2]),
                            expected: json!(direct),
                            got: json!(via.ok()),
                        });
                    }
                }
            }
        }
    }
    c.finish()
}

/// Hom-set sizes: `2^(nm)` relations in `F`, `Bell(n+m+1)` corelations in
/// `PF`, and the subspace counts of `GF(2)`.
pub fn counts(plan: &Plan) -> SuiteReport {
    let mut c = Collector::new("counts", "finset+pf+linear[GF(2)]");
    let e = FinSet::default();
    let b = plan.bound;
    for n in 0..=b {
        for m in 0..=b {
            if n * m > 9 {
                continue;
            }
            c.instance();
            let cells: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
            let mut seen = HashSet::new();
            for mask in 0u32..(1 << cells.len()) {
                let chosen: Vec<(usize, usize)> = cells
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                // every pair listed twice, so `ρ` has to collapse the apex
                let twice = || chosen.iter().chain(&chosen);
                let span = Span {
                    left: FinFn::new(n, twice().map(|p| p.0).collect()).expect("in range"),
                    right: FinFn::new(m, twice().map(|p| p.1).collect()).expect("in range"),
                };
                let table = rel_to_table(&e.rho(&span));
                c.check(table.pairs() == chosen.as_slice(), || Failure {
                    input: json!(chosen),
                    expected: json!(chosen),
                    got: json!(table),
                });
                seen.insert(table);
            }
            let expected = 1usize << (n * m);
            c.check(seen.len() == expected, || Failure {
                input: json!({ "relation_count": [n, m] }),
                expected: json!(expected),
                got: json!(seen.len()),
            });
        }
    }
    for n in 0..=b.min(PER_BOUND) {
        for m in 0..=b.min(PER_BOUND) {
            c.instance();
            let count = corel_image_count(&PartialFinSet, n, m);
            let expected = bell(n + m + 1) as usize;
            c.check(count == expected, || Failure {
                input: json!({ "partial_corel_count": [n, m] }),
                expected: json!(expected),
                got: json!(count),
            });
        }
    }
    let lin = LinearEngine::<crate::Gf2>::new().expect("2 is prime");
    for (n, m) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
        c.instance();
        let mut seen = HashSet::new();
        for z in 0..=n + m {
            let lefts = lin.all_arrows(z, n).expect("finite");
            let rights = lin.all_arrows(z, m).expect("finite");
            for l in &lefts {
                for r in &rights {
                    seen.insert(lin.rho(&Span {
                        left: l.clone(),
                        right: r.clone(),
                    }));
                }
            }
        }
        let expected = subspace_count(2, n + m);
        c.check(seen.len() == expected, || Failure {
            input: json!({ "gf2_relation_count": [n, m] }),
            expected: json!(expected),
            got: json!(seen.len()),
        });
    }
    c.finish()
}

/// Number of subspaces of `GF(q)^d`, a sum of Gaussian binomials.
pub fn subspace_count(q: usize, d: usize) -> usize {
    let gauss = |k: usize| {
        let (mut num, mut den) = (1usize, 1usize);
        for i in 0..k {
            num *= q.pow((d - i) as u32) - 1;
            den *= q.pow((i + 1) as u32) - 1;
        }
        num / den
    };
    (0..=d).map(gauss).sum()
}

type LinCorel<F> = Corelation<Matrix<F>>;

/// Relations and corelations of `Vect(k)` coincide: the two translations are
/// mutually inverse and preserve composition, and composing relations through
/// spans agrees with eliminating the shared coordinates directly.
///
/// Over a finite field every (co)relation with boundaries within the bound is
/// visited.
pub fn abelian_iso_exhaustive<F: FiniteField + Sample>(
    e: &LinearEngine<F>,
    plan: &Plan,
) -> SuiteReport {
    let b = plan.bound;
    let mut subspaces = Vec::new();
    for n in 0..=b {
        for m in 0..=b {
            subspaces.extend(all_subspaces::<F>(n, m));
        }
    }
    let corels: Vec<_> = subspaces.iter().map(|v| subspace_to_corel(e, v)).collect();
    let rels: Vec<_> = subspaces.iter().map(|v| subspace_to_rel(e, v)).collect();
    let mut pairs = Vec::new();
    for x in &corels {
        for y in corels.iter().filter(|y| y.dom() == x.cod()) {
            pairs.push((x.clone(), y.clone()));
        }
    }
    abelian_checks(collector("abelian_iso", e, plan), e, &corels, &rels, &pairs)
}

/// The sampled variant, for infinite fields: identities, zero corelations and
/// seeded random cospans.
pub fn abelian_iso_sampled<F: Field + Sample>(e: &LinearEngine<F>, plan: &Plan) -> SuiteReport {
    let b = plan.bound;
    let mut corels: Vec<_> = (0..=b).map(|n| e.identity_corel(n)).collect();
    for n in 0..=b {
        for m in 0..=b {
            corels.push(e.gamma(&Cospan {
                left: Matrix::zeros(0, n),
                right: Matrix::zeros(0, m),
            }));
        }
    }
    corels.extend(cospans(e, plan, Legs::Any).iter().map(|k| e.gamma(k)));
    let rels: Vec<_> = corels.iter().map(|k| corel_to_rel(e, k)).collect();
    let pairs: Vec<_> = cospan_pairs(e, plan, Legs::Any)
        .into_iter()
        .map(|(x, y)| (e.gamma(&x), e.gamma(&y)))
        .collect();
    abelian_checks(collector("abelian_iso", e, plan), e, &corels, &rels, &pairs)
}

fn abelian_checks<F: Field + Sample>(
    mut c: Collector,
    e: &LinearEngine<F>,
    corels: &[LinCorel<F>],
    rels: &[crate::diagram::Relation<Matrix<F>>],
    pairs: &[(LinCorel<F>, LinCorel<F>)],
) -> SuiteReport {
    let mut images = IndexSet::new();
    for k in corels {
        c.instance();
        let r = corel_to_rel(e, k);
        let back = rel_to_corel(e, &r);
        c.check(back == *k, || Failure {
            input: encode_corel(k),
            expected: encode_corel(k),
            got: encode_corel(&back),
        });
        images.insert(r);
    }
    let distinct: IndexSet<_> = corels.iter().collect();
    c.check(images.len() == distinct.len(), || Failure {
        input: json!("corelation to relation is injective"),
        expected: json!(distinct.len()),
        got: json!(images.len()),
    });
    for r in rels {
        c.instance();
        let back = corel_to_rel(e, &rel_to_corel(e, r));
        c.check(back == *r, || Failure {
            input: encode_rel(r),
            expected: encode_rel(r),
            got: encode_rel(&back),
        });
    }
    for (x, y) in pairs {
        c.instance();
        let whole = corel_to_rel(e, &e.compose_corel(x, y).expect("composable"));
        let (rx, ry) = (corel_to_rel(e, x), corel_to_rel(e, y));
        let parts = e.compose_rel(&rx, &ry).expect("composable");
        c.check(whole == parts, || Failure {
            input: json!([encode_corel(x), encode_corel(y)]),
            expected: encode_rel(&parts),
            got: encode_rel(&whole),
        });
        let direct = rel_to_subspace(&rx)
            .compose_direct(&rel_to_subspace(&ry))
            .expect("composable");
        let via_spans = rel_to_subspace(&parts);
        c.check(direct == via_spans, || Failure {
            input: json!([encode_rel(&rx), encode_rel(&ry)]),
            expected: json!({ "dim": direct.dim() }),
            got: json!({ "dim": via_spans.dim() }),
        });
    }
    c.finish()
}

/// `factor_z` recomposes exactly and lands in (epi, split mono).
pub fn pid_factor(plan: &Plan) -> SuiteReport {
    let e = PidEngine::<BigInt>::new();
    let mut c = collector("pid_factor", &e, plan);
    let mut rng = plan.rng();
    let check = |c: &mut Collector, f: Matrix<BigInt>| {
        c.instance();
        let (ep, m) = factor_z(&f);
        let ok = m.mul(&ep) == f && is_epi_z(&ep) && is_split_mono_z(&m);
        c.check(ok, || Failure {
            input: f.encode(),
            expected: json!("f = m e with e epi and m split mono"),
            got: json!({ "e": ep.encode(), "m": m.encode() }),
        });
    };
    use rand::Rng;
    for _ in 0..1000 {
        let f = Matrix::from_fn(3, 3, |_, _| BigInt::from(rng.gen_range(-2i64..=2)));
        check(&mut c, f);
    }
    for _ in 0..plan.samples {
        let (r, k) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let f = Matrix::from_fn(r, k, |_, _| BigInt::from(rng.gen_range(-3i64..=3)));
        check(&mut c, f);
    }
    c.finish()
}

/// Composition of integer corelations is associative.
pub fn pid_associativity(plan: &Plan) -> SuiteReport {
    let e = PidEngine::<BigInt>::new();
    let mut c = collector("pid_associativity", &e, plan);
    for (k1, k2, k3) in random_cospan_triples(&e, plan, 500) {
        c.instance();
        let (a, b, d) = (e.gamma(&k1), e.gamma(&k2), e.gamma(&k3));
        let left = e
            .compose_corel(&e.compose_corel(&a, &b).expect("composable"), &d)
            .expect("composable");
        let right = e
            .compose_corel(&a, &e.compose_corel(&b, &d).expect("composable"))
            .expect("composable");
        c.check(left == right, || Failure {
            input: json!([encode_cospan(&k1), encode_cospan(&k2), encode_cospan(&k3)]),
            expected: encode_corel(&left),
            got: encode_corel(&right),
        });
    }
    c.finish()
}

/// `1 -r-> 1 <-r- 1` is the identity corelation over `Q` for every nonzero
/// `r`, but over `Z` only for the units.
pub fn scalar_dichotomy() -> SuiteReport {
    let z = PidEngine::<BigInt>::new();
    let q = LinearEngine::<BigRational>::new().expect("Q is a field");
    let mut c = Collector::new("scalar_dichotomy", "z+linear[Q]");
    for r in (-5i64..=5).filter(|&r| r != 0) {
        c.instance();
        let over_z = scalar_corel_is_identity_z(&z, BigInt::from(r));
        c.check(over_z == (r.abs() == 1), || Failure {
            input: json!({ "r": r, "ring": "Z" }),
            expected: json!(r.abs() == 1),
            got: json!(over_z),
        });
        let over_q = scalar_corel_is_identity(&q, BigRational::from_integer(BigInt::from(r)));
        c.check(over_q, || Failure {
            input: json!({ "r": r, "field": "Q" }),
            expected: json!(true),
            got: json!(false),
        });
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_subspace_counts() {
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(2, 4), 67);
        assert_eq!(subspace_count(3, 2), 6);
        assert_eq!(all_subspaces::<crate::Gf2>(1, 1).len(), 5);
        assert_eq!(all_subspaces::<crate::Gf2>(2, 2).len(), 67);
    }

    #[test]
    fn small_special_suites_pass() {
        assert!(er_per_iso(&Plan::new(2)).pass);
        assert!(scalar_dichotomy().pass);
        let r = counts(&Plan::new(2));
        assert!(r.pass, "{r:?}");
    }
}
