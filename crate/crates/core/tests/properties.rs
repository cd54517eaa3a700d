use corel::codec::Encode;
use corel::finset::{FinFn, FinSet};
use corel::pid::{factor_z, is_epi_z, is_split_mono_z};
use corel::{Cospan, Diagrams, Engine, LinQ, QMatrix, ZMatrix};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (0usize..=3, 0usize..=3)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c)))
}

fn finfn(dom: usize, cod: usize) -> impl Strategy<Value = FinFn> {
    prop::collection::vec(0..cod.max(1), dom).prop_map(move |t| FinFn::new(cod, t).unwrap())
}

fn cospan(n: usize, apex: usize, m: usize) -> impl Strategy<Value = Cospan<FinFn>> {
    (finfn(n, apex), finfn(m, apex)).prop_map(|(left, right)| Cospan { left, right })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_factorisation_recomposes((r, c, v) in small_matrix()) {
        let e = LinQ::new().unwrap();
        let f = QMatrix::from_ints(r, c, &v);
        let (ep, m) = e.factor(&f);
        prop_assert!(e.is_in_e(&ep) && e.is_in_m(&m));
        prop_assert_eq!(m.mul(&ep), f);
    }

    #[test]
    fn integer_factorisation_recomposes((r, c, v) in small_matrix()) {
        let f = ZMatrix::from_ints(r, c, &v);
        let (ep, m) = factor_z(&f);
        prop_assert!(is_epi_z(&ep) && is_split_mono_z(&m));
        prop_assert_eq!(m.mul(&ep), f);
    }

    #[test]
    fn matrices_survive_json((r, c, v) in small_matrix()) {
        let f = QMatrix::from_ints(r, c, &v);
        prop_assert_eq!(QMatrix::decode(&f.encode()).unwrap(), f);
    }

    #[test]
    fn gamma_respects_composition(a in cospan(2, 3, 2), b in cospan(2, 2, 3)) {
        let e = FinSet::default();
        let whole = e.gamma(&e.compose_cospan(&a, &b).unwrap());
        let parts = e.compose_corel(&e.gamma(&a), &e.gamma(&b)).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn corelation_composition_is_associative(a in cospan(1, 2, 2), b in cospan(2, 3, 2), c in cospan(2, 2, 1)) {
        let e = FinSet::default();
        let (a, b, c) = (e.gamma(&a), e.gamma(&b), e.gamma(&c));
        let left = e.compose_corel(&e.compose_corel(&a, &b).unwrap(), &c).unwrap();
        let right = e.compose_corel(&a, &e.compose_corel(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
