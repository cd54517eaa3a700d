use corel::linear::scalar_corel_is_identity;
use corel::pid::normal_form::{hnf_row, snf};
use corel::pid::{
    corel_canonical_z, factor_z, is_epi_z, is_split_mono_z, pushout_z, scalar_corel_is_identity_z,
};
use corel::verify::instances::{cospan_pairs, Legs};
use corel::verify::Plan;
use corel::{Cospan, Diagrams, Engine, LinQ, Span, ZEngine, ZMatrix, Q, Z};
use num_traits::Signed;

fn z(entries: &[i64], rows: usize, cols: usize) -> ZMatrix {
    ZMatrix::from_ints(rows, cols, entries)
}

fn det2(m: &ZMatrix) -> Z {
    m[(0, 0)].clone() * m[(1, 1)].clone() - m[(0, 1)].clone() * m[(1, 0)].clone()
}

#[test]
fn smith_normal_form_examples() {
    let m = z(&[2, 0, 0, 3], 2, 2);
    let d = snf(&m);
    assert_eq!(d.s, z(&[1, 0, 0, 6], 2, 2));
    assert_eq!(d.u.mul(&m).mul(&d.v), d.s);
    assert_eq!(det2(&d.u).abs(), Z::from(1));
    assert_eq!(det2(&d.v).abs(), Z::from(1));
    assert_eq!(det2(&d.s), det2(&m).abs());
    let d = snf(&z(&[2], 1, 1));
    assert_eq!(
        (d.u, d.s, d.v),
        (z(&[1], 1, 1), z(&[2], 1, 1), z(&[1], 1, 1))
    );
    assert!(snf(&ZMatrix::zeros(2, 3)).s.is_zero());
}

#[test]
fn hermite_normal_form_examples() {
    assert_eq!(hnf_row(&ZMatrix::identity(3)), ZMatrix::identity(3));
    assert_eq!(hnf_row(&z(&[2, 2], 1, 2)), z(&[2, 2], 1, 2));
    assert_eq!(hnf_row(&z(&[0, 1, 1, 0], 2, 2)), ZMatrix::identity(2));
}

#[test]
fn epi_and_split_mono_examples() {
    assert!(is_epi_z(&z(&[2], 1, 1)));
    assert!(!is_epi_z(&z(&[0], 1, 1)));
    assert!(is_epi_z(&z(&[1, 0], 1, 2)));
    assert!(is_split_mono_z(&z(&[1, 0], 2, 1)));
    assert!(!is_split_mono_z(&z(&[2], 1, 1)));
    assert!(is_split_mono_z(&ZMatrix::identity(3)));
}

#[test]
fn factorisation_examples() {
    assert_eq!(factor_z(&z(&[2], 1, 1)), (z(&[2], 1, 1), z(&[1], 1, 1)));
    assert_eq!(
        factor_z(&ZMatrix::identity(2)),
        (ZMatrix::identity(2), ZMatrix::identity(2))
    );
    let f = z(&[2, 4], 2, 1);
    let (e, m) = factor_z(&f);
    assert_eq!(m.mul(&e), f);
    assert!(is_epi_z(&e) && is_split_mono_z(&m));
    // unique up to the unit -1 of Z
    assert!(
        e == z(&[2], 1, 1) && m == z(&[1, 2], 2, 1)
            || e == z(&[-2], 1, 1) && m == z(&[-1, -2], 2, 1)
    );
}

#[test]
fn pushout_examples() {
    let e = ZEngine::new();
    let po = pushout_z(&z(&[], 2, 0), &z(&[], 1, 0)).unwrap();
    assert_eq!(po.apex(), 3);
    assert!(is_split_mono_z(&po.left.hstack(&po.right)));
    let one = z(&[1], 1, 1);
    assert_eq!(
        e.canonical_cospan(&pushout_z(&one, &one).unwrap()),
        e.identity_cospan(1)
    );
    let po = pushout_z(&z(&[2], 1, 1), &z(&[3], 1, 1)).unwrap();
    assert_eq!(po.apex(), 1);
    assert_eq!(
        e.canonical_cospan(&po),
        e.canonical_cospan(&Cospan {
            left: z(&[3], 1, 1),
            right: z(&[2], 1, 1)
        })
    );
}

#[test]
fn canonical_corelations() {
    let e = ZEngine::new();
    assert_eq!(corel_canonical_z(&e.identity_corel(1)), z(&[1, 1], 1, 2));
    let two = z(&[2], 1, 1);
    assert_eq!(
        corel_canonical_z(&e.gamma(&Cospan {
            left: two.clone(),
            right: two
        })),
        z(&[2, 2], 1, 2)
    );
    let zero = e.gamma(&Cospan {
        left: z(&[], 0, 1),
        right: z(&[], 0, 1),
    });
    assert_eq!(corel_canonical_z(&zero).rows(), 0);
}

#[test]
fn scalar_dichotomy() {
    let zq = LinQ::new().unwrap();
    let ze = ZEngine::new();
    for r in (-5i64..=5).filter(|r| *r != 0) {
        assert_eq!(
            scalar_corel_is_identity_z(&ze, Z::from(r)),
            r.abs() == 1,
            "r = {r}"
        );
        assert!(scalar_corel_is_identity(&zq, Q::from_integer(r.into())));
    }
}

#[test]
fn gamma_is_functorial_on_sampled_cospans() {
    let e = ZEngine::new();
    for (a, b) in cospan_pairs(&e, &Plan::new(2), Legs::Any) {
        let whole = e.gamma(&e.compose_cospan(&a, &b).unwrap());
        let parts = e.compose_corel(&e.gamma(&a), &e.gamma(&b)).unwrap();
        assert_eq!(whole, parts);
    }
}

/// Two split monos `1 -> 2` whose images meet only in zero but together span
/// an index-2 sublattice: the mediator out of the pushout of their pullback
/// is `[f | g]`, injective but not split.
#[test]
fn split_monos_violate_the_pushout_of_pullback_condition() {
    let e = ZEngine::new();
    let (f, g) = (z(&[2, 3], 2, 1), z(&[0, -1], 2, 1));
    assert!(e.is_in_a(&f) && e.is_in_a(&g));
    let (pb, u) = e
        .pushout_of_pullback_mediator(&Cospan {
            left: f.clone(),
            right: g.clone(),
        })
        .unwrap();
    assert_eq!(pb.apex(), 0);
    assert_eq!(u, f.hstack(&g));
    assert_eq!(det2(&u), Z::from(-2));
    assert!(!e.is_in_m(&u));
}

/// The same failure seen through `Π`: composing two spans of split monos
/// leaves an empty apex, but composing their images does not.
#[test]
fn pi_is_not_functorial_on_split_mono_spans() {
    let e = ZEngine::new();
    let (f, g) = (z(&[2, 3], 2, 1), z(&[0, 1], 2, 1));
    let s1 = Span {
        left: ZMatrix::identity(1),
        right: f.clone(),
    };
    let s2 = Span {
        left: g.clone(),
        right: ZMatrix::identity(1),
    };
    let whole = e.pi(&e.compose_span(&s1, &s2).unwrap()).unwrap();
    let parts = e
        .compose_corel(&e.pi(&s1).unwrap(), &e.pi(&s2).unwrap())
        .unwrap();
    assert_eq!(corel_canonical_z(&whole), ZMatrix::identity(2));
    assert_eq!(parts, e.gamma(&Cospan { left: f, right: g }));
    assert_eq!(det2(&corel_canonical_z(&parts)).abs(), Z::from(2));
    assert_ne!(whole, parts);
}
