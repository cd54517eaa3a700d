use std::collections::HashSet;

use corel::linear::algebra::{kernel, rank, rref};
use corel::linear::{
    all_subspaces, corel_canonical_lin, corel_matrix, corel_to_rel, rel_to_corel, rel_to_subspace,
    scalar_corel_is_identity, subspace_of_span, subspace_to_rel, Subspace,
};
use corel::scalar::Field;
use corel::{Cospan, Diagrams, Engine, Fp, Gf2, LinGf2, LinQ, Matrix, QMatrix, Span, Q};
use num_traits::{One, Zero};

fn q(entries: &[i64], rows: usize, cols: usize) -> QMatrix {
    Matrix::from_ints(rows, cols, entries)
}

fn qv(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn gf2(entries: &[i64], rows: usize, cols: usize) -> Matrix<Gf2> {
    Matrix::from_ints(rows, cols, entries)
}

#[test]
fn rref_examples() {
    let r = rref(&QMatrix::identity(3));
    assert_eq!(r.reduced, QMatrix::identity(3));
    assert_eq!(rref(&q(&[2, 4], 1, 2)).reduced, q(&[1, 2], 1, 2));
    let r = rref(&q(&[1, 1, 1, 1], 2, 2));
    assert_eq!(r.reduced, q(&[1, 1, 0, 0], 2, 2));
    assert_eq!(r.rank(), 1);
}

#[test]
fn kernel_examples() {
    let k = kernel(&q(&[1, -1], 1, 2));
    assert_eq!(k.cols(), 1);
    assert_eq!(k[(0, 0)], k[(1, 0)]);
    let m = q(&[2, 3], 1, 2);
    let k = kernel(&m);
    assert_eq!(k.cols(), 2 - rank(&m));
    assert!(m.mul(&k).is_zero());
    assert_eq!(k[(0, 0)].clone() * qv(-2, 1), k[(1, 0)].clone() * qv(3, 1));
    assert_eq!(kernel(&QMatrix::identity(2)).cols(), 0);
}

#[test]
fn pullback_and_pushout_of_scalars() {
    let e = LinQ::new().unwrap();
    let id = q(&[1], 1, 1);
    let pb = e.pullback(&id, &id).unwrap();
    assert_eq!(e.canonical_span(&pb), e.identity_span(1));
    let pb = e.pullback(&q(&[2], 1, 1), &q(&[3], 1, 1)).unwrap();
    assert_eq!(pb.apex(), 1);
    assert_eq!(
        e.canonical_span(&pb),
        e.canonical_span(&Span {
            left: q(&[3], 1, 1),
            right: q(&[2], 1, 1)
        })
    );
    let pb = e.pullback(&q(&[1, 1], 1, 2), &q(&[], 1, 0)).unwrap();
    assert_eq!(pb.apex(), 1);
    assert!(q(&[1, 1], 1, 2).mul(&pb.left).is_zero());
    assert_eq!(pb.right.rows(), 0);

    let po = e.pushout(&q(&[], 2, 0), &q(&[], 1, 0)).unwrap();
    assert_eq!(
        e.canonical_cospan(&po),
        e.canonical_cospan(&Cospan {
            left: q(&[1, 0, 0, 1, 0, 0], 3, 2),
            right: q(&[0, 0, 1], 3, 1)
        })
    );
    let po = e.pushout(&id, &id).unwrap();
    assert_eq!(e.canonical_cospan(&po), e.identity_cospan(1));
    let po = e.pushout(&q(&[2], 1, 1), &q(&[3], 1, 1)).unwrap();
    assert_eq!(po.apex(), 1);
    assert_eq!(
        e.canonical_cospan(&po),
        e.canonical_cospan(&Cospan {
            left: q(&[3], 1, 1),
            right: q(&[2], 1, 1)
        })
    );
}

#[test]
fn factorisation_examples() {
    let e = LinQ::new().unwrap();
    let zero = QMatrix::zeros(3, 2);
    let (ep, m) = e.factor(&zero);
    assert_eq!((ep.rows(), ep.cols(), m.rows(), m.cols()), (0, 2, 3, 0));
    let col = q(&[1, 1], 2, 1);
    assert_eq!(e.factor(&col), (q(&[1], 1, 1), col.clone()));
    let full = q(&[1, 2, 3, 4], 2, 2);
    let (ep, m) = e.factor(&full);
    assert!(e.is_iso(&ep) && e.is_in_m(&m));
    assert_eq!(m.mul(&ep), full);
}

#[test]
fn composition_examples() {
    let e = LinQ::new().unwrap();
    let s1 = Span {
        left: q(&[2], 1, 1),
        right: q(&[1], 1, 1),
    };
    let s2 = Span {
        left: q(&[1], 1, 1),
        right: q(&[3], 1, 1),
    };
    let s = e.compose_span(&s1, &s2).unwrap();
    assert_eq!(
        e.canonical_span(&s),
        e.canonical_span(&Span {
            left: q(&[2], 1, 1),
            right: q(&[3], 1, 1)
        })
    );

    let g2 = Subspace::graph(&q(&[2], 1, 1));
    let g3 = Subspace::graph(&q(&[3], 1, 1));
    assert_eq!(
        g2.compose_direct(&g3).unwrap(),
        Subspace::graph(&q(&[6], 1, 1))
    );
    let id = Subspace::graph(&QMatrix::identity(2));
    assert_eq!(id.compose_direct(&id).unwrap(), id);
    let projected = g2.compose_direct(&Subspace::zero(1, 1)).unwrap();
    assert_eq!(projected, Subspace::zero(1, 1));
    let axis = Subspace::spanned_by(1, 1, &q(&[1, 0], 1, 2)).unwrap();
    assert_eq!(axis.compose_direct(&Subspace::zero(1, 1)).unwrap(), axis);
}

#[test]
fn rho_of_a_two_dimensional_span_is_everything() {
    let e = LinQ::new().unwrap();
    let s = Span {
        left: q(&[1, 0], 1, 2),
        right: q(&[1, 1], 1, 2),
    };
    let v = subspace_of_span(&s);
    assert_eq!(v.dim(), 2);
    assert_eq!(rel_to_subspace(&e.rho(&s)), v);
    assert_eq!(v.basis(), &QMatrix::identity(2));
    let empty = Span {
        left: QMatrix::zeros(1, 0),
        right: QMatrix::zeros(1, 0),
    };
    assert_eq!(subspace_of_span(&empty).dim(), 0);
    assert_eq!(
        subspace_of_span(&e.identity_span(1)).basis(),
        &q(&[1, 1], 1, 2)
    );
}

#[test]
fn canonical_corelation_matrices() {
    let e = LinQ::new().unwrap();
    assert_eq!(
        corel_canonical_lin(&e, &e.identity_cospan(1)),
        q(&[1, 1], 1, 2)
    );
    let two = q(&[2], 1, 1);
    assert_eq!(
        corel_canonical_lin(
            &e,
            &Cospan {
                left: two.clone(),
                right: two
            }
        ),
        q(&[1, 1], 1, 2)
    );
    let zero = Cospan {
        left: q(&[0], 1, 1),
        right: q(&[0], 1, 1),
    };
    let m = corel_canonical_lin(&e, &zero);
    assert_eq!((m.rows(), m.cols()), (0, 2));
}

#[test]
fn abelian_iso_examples() {
    let e = LinGf2::new().unwrap();
    assert_eq!(corel_to_rel(&e, &e.identity_corel(2)), e.identity_rel(2));
    assert_eq!(rel_to_corel(&e, &e.identity_rel(2)), e.identity_corel(2));
    let ones = e.gamma(&Cospan {
        left: gf2(&[1], 1, 1),
        right: gf2(&[1], 1, 1),
    });
    assert_eq!(corel_matrix(&ones), gf2(&[1, 1], 1, 2));
    let r = corel_to_rel(&e, &ones);
    assert_eq!(rel_to_subspace(&r).basis(), &gf2(&[1, 1], 1, 2));
    let zero = e.gamma(&Cospan {
        left: gf2(&[], 0, 1),
        right: gf2(&[], 0, 2),
    });
    assert_eq!(rel_to_subspace(&corel_to_rel(&e, &zero)).dim(), 3);
}

/// Subsets of `GF(2)^d` containing zero and closed under addition.
fn closed_subsets(d: usize) -> usize {
    let points = 1usize << d;
    (0u64..1 << points)
        .filter(|set| {
            let has = |v: usize| set >> v & 1 == 1;
            has(0) && (0..points).all(|a| (0..points).all(|b| !(has(a) && has(b)) || has(a ^ b)))
        })
        .count()
}

#[test]
fn gf2_relation_and_subspace_counts() {
    assert_eq!(closed_subsets(2), 5);
    assert_eq!(all_subspaces::<Gf2>(1, 1).len(), closed_subsets(2));
    assert_eq!(all_subspaces::<Gf2>(1, 2).len(), closed_subsets(3));
    let e = LinGf2::new().unwrap();
    let mut rels = HashSet::new();
    for apex in 0..=2 {
        let words: Vec<Vec<i64>> = (0..1 << apex)
            .map(|w| (0..apex).map(|i| (w >> i) & 1).collect())
            .collect();
        for l in &words {
            for r in &words {
                rels.insert(e.rho(&Span {
                    left: gf2(l, 1, apex),
                    right: gf2(r, 1, apex),
                }));
            }
        }
    }
    assert_eq!(rels.len(), 5);
}

#[test]
fn span_composition_matches_direct_elimination_over_gf2() {
    let e = LinGf2::new().unwrap();
    for n in 0..=2 {
        for z in 0..=2 {
            for m in 0..=2 {
                for v in all_subspaces::<Gf2>(n, z) {
                    for w in all_subspaces::<Gf2>(z, m) {
                        let via_spans = e
                            .compose_rel(&subspace_to_rel(&e, &v), &subspace_to_rel(&e, &w))
                            .unwrap();
                        assert_eq!(rel_to_subspace(&via_spans), v.compose_direct(&w).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn invertible_scalars_cancel_in_relations() {
    let e = LinQ::new().unwrap();
    let mut scalars: Vec<Q> = (-5..=5).filter(|r| *r != 0).map(|r| qv(r, 1)).collect();
    scalars.extend([qv(1, 2), qv(-7, 3)]);
    for r in scalars {
        let g = Matrix::scalar(r.clone());
        let graph = e.rho(&Span {
            left: QMatrix::identity(1),
            right: g.clone(),
        });
        let op = e.dagger_rel(&graph);
        assert_eq!(e.compose_rel(&graph, &op).unwrap(), e.identity_rel(1));
        assert!(scalar_corel_is_identity(&e, r));
    }
    assert!(!scalar_corel_is_identity(&e, Q::zero()));
}

#[test]
fn prime_fields() {
    assert!(LinearEngineCheck::<4>::fails());
    let e = corel::LinearEngine::<Fp<5>>::new().unwrap();
    let two = Fp::<5>::new(2);
    assert_eq!(two.inverse().unwrap() * two, Fp::<5>::one());
    assert!(scalar_corel_is_identity(&e, two));
    assert_eq!(e.name(), "linear[GF(5)]");
}

struct LinearEngineCheck<const P: u64>;

impl<const P: u64> LinearEngineCheck<P> {
    fn fails() -> bool {
        corel::LinearEngine::<Fp<P>>::new().is_err()
    }
}
