//! Instance generation: exhaustive enumeration for finite engines, seeded
//! sampling otherwise.
//!
//! Exhaustive lists are ordered by apex, then domain, then codomain, then the
//! legs in their natural (lexicographic) order, so the first failure found is
//! the minimal witness.

use indexmap::IndexSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{Encode, Scalar};
use crate::diagram::{Cospan, Diagrams, Engine, IsoFactorized, Span};
use crate::finset::{FinFn, FinSet, PartialFinSet, PartialFn};
use crate::linear::LinearEngine;
use crate::matrix::Matrix;
use crate::pid::PidEngine;
use crate::scalar::{Field, FiniteField, Fp, Int};

pub const DEFAULT_SEED: u64 = 0x00C0_2E15;

/// Bounds and sampling parameters for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Plan {
    /// Upper bound on every boundary and apex size.
    pub bound: usize,
    pub seed: u64,
    /// Number of random instances drawn by sampled suites.
    pub samples: usize,
}

impl Plan {
    pub fn new(bound: usize) -> Self {
        Plan {
            bound,
            seed: DEFAULT_SEED,
            samples: 200,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub type Pair<T> = (T, T);
pub type Triple<T> = (T, T, T);

/// Which legs an enumeration may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legs {
    Any,
    InA,
}

/// Scalars that can be listed (finite rings) or drawn at random.
pub trait Sample: Scalar {
    fn universe() -> Option<Vec<Self>>;
    fn random(rng: &mut ChaCha8Rng) -> Self;
}

impl Sample for BigRational {
    fn universe() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut ChaCha8Rng) -> Self {
        let num = BigInt::from(rng.gen_range(-2i64..=2));
        let den = BigInt::from([1i64, 1, 1, 2, 3][rng.gen_range(0..5)]);
        BigRational::new(num, den)
    }
}

impl<const P: u64> Sample for Fp<P> {
    fn universe() -> Option<Vec<Self>> {
        Some(<Fp<P> as FiniteField>::elements())
    }

    fn random(rng: &mut ChaCha8Rng) -> Self {
        Fp::new(rng.gen_range(0..P as i64))
    }
}

impl Sample for BigInt {
    fn universe() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut ChaCha8Rng) -> Self {
        BigInt::from(rng.gen_range(-2i64..=2))
    }
}

/// An engine that can produce test instances.
pub trait Instances: Diagrams<Arrow: Encode> {
    /// Every arrow `n -> m` in lexicographic order, or `None` when hom-sets
    /// are infinite.
    fn all_arrows(&self, n: usize, m: usize) -> Option<Vec<Self::Arrow>>;

    /// A random arrow `n -> m`, if the hom-set is nonempty.
    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Self::Arrow>;

    fn random_arrow_in_a(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Self::Arrow> {
        (0..64)
            .filter_map(|_| self.random_arrow(n, m, rng))
            .find(|f| self.is_in_a(f))
    }

    fn is_exhaustive(&self) -> bool {
        self.all_arrows(0, 0).is_some()
    }
}

/// All words of length `len` over `alphabet`, lexicographically.
pub fn words<T: Clone>(len: usize, alphabet: &[T]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut w = w.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
    }
    out
}

impl Instances for FinSet {
    fn all_arrows(&self, n: usize, m: usize) -> Option<Vec<FinFn>> {
        let values: Vec<usize> = (0..m).collect();
        Some(
            words(n, &values)
                .into_iter()
                .map(|t| FinFn::new_unchecked(m, t))
                .collect(),
        )
    }

    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<FinFn> {
        if m == 0 && n > 0 {
            return None;
        }
        Some(FinFn::new_unchecked(
            m,
            (0..n).map(|_| rng.gen_range(0..m)).collect(),
        ))
    }
}

impl Instances for PartialFinSet {
    fn all_arrows(&self, n: usize, m: usize) -> Option<Vec<PartialFn>> {
        let values: Vec<Option<usize>> = std::iter::once(None).chain((0..m).map(Some)).collect();
        Some(
            words(n, &values)
                .into_iter()
                .map(|t| PartialFn::new(m, t).expect("in range"))
                .collect(),
        )
    }

    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<PartialFn> {
        let table = (0..n)
            .map(|_| rng.gen_range(0..=m).checked_sub(1))
            .collect();
        Some(PartialFn::new(m, table).expect("in range"))
    }
}

fn all_matrices<T: Sample>(rows: usize, cols: usize) -> Option<Vec<Matrix<T>>> {
    let universe = T::universe()?;
    Some(
        words(rows * cols, &universe)
            .into_iter()
            .map(|w| Matrix::from_fn(rows, cols, |i, j| w[i * cols + j].clone()))
            .collect(),
    )
}

fn random_matrix<T: Sample>(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| T::random(rng))
}

impl<F: Field + Sample> Instances for LinearEngine<F> {
    fn all_arrows(&self, n: usize, m: usize) -> Option<Vec<Matrix<F>>> {
        all_matrices(m, n)
    }

    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Matrix<F>> {
        Some(random_matrix(m, n, rng))
    }

    fn random_arrow_in_a(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Matrix<F>> {
        self.random_arrow(n, m, rng)
    }
}

/// A random unimodular matrix, built from elementary row operations.
pub fn random_unimodular<T: Int + Sample>(n: usize, rng: &mut ChaCha8Rng) -> Matrix<T> {
    let mut u = Matrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 => u.swap_rows(a, b),
            1 if a != b => u.add_row_multiple(a, b, &T::random(rng)),
            _ => u.scale_row(a, &-T::one()),
        }
    }
    u
}

impl<T: Int + Sample> Instances for PidEngine<T> {
    fn all_arrows(&self, _n: usize, _m: usize) -> Option<Vec<Matrix<T>>> {
        None
    }

    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Matrix<T>> {
        Some(random_matrix(m, n, rng))
    }

    /// Split monos are the first columns of unimodular matrices.
    fn random_arrow_in_a(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<Matrix<T>> {
        (n <= m).then(|| random_unimodular::<T>(m, rng).submatrix(0..m, 0..n))
    }
}

impl<E: Instances + Clone> Instances for IsoFactorized<E> {
    fn all_arrows(&self, n: usize, m: usize) -> Option<Vec<E::Arrow>> {
        self.0.all_arrows(n, m)
    }

    fn random_arrow(&self, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Option<E::Arrow> {
        self.0.random_arrow(n, m, rng)
    }
}

fn legs_between<E: Instances>(e: &E, n: usize, m: usize, legs: Legs) -> Vec<E::Arrow> {
    let all = e.all_arrows(n, m).expect("exhaustive engine");
    match legs {
        Legs::Any => all,
        Legs::InA => all.into_iter().filter(|f| e.is_in_a(f)).collect(),
    }
}

fn random_leg<E: Instances>(
    e: &E,
    n: usize,
    m: usize,
    legs: Legs,
    rng: &mut ChaCha8Rng,
) -> Option<E::Arrow> {
    match legs {
        Legs::Any => e.random_arrow(n, m, rng),
        Legs::InA => e.random_arrow_in_a(n, m, rng),
    }
}

const MAX_DRAWS: usize = 10_000;

/// Arrows with domain and codomain at most the bound.
pub fn arrows<E: Instances>(e: &E, plan: &Plan, legs: Legs) -> Vec<E::Arrow> {
    let b = plan.bound;
    if e.is_exhaustive() {
        let mut out = Vec::new();
        for n in 0..=b {
            for m in 0..=b {
                out.extend(legs_between(e, n, m, legs));
            }
        }
        return out;
    }
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == plan.samples {
            break;
        }
        let (n, m) = (rng.gen_range(0..=b), rng.gen_range(0..=b));
        out.extend(random_leg(e, n, m, legs, &mut rng));
    }
    out
}

/// Cospans `dom -> apex <- cod` with all three sizes at most the bound.
pub fn cospans<E: Instances>(e: &E, plan: &Plan, legs: Legs) -> Vec<Cospan<E::Arrow>> {
    let b = plan.bound;
    if e.is_exhaustive() {
        let mut out = Vec::new();
        for apex in 0..=b {
            for dom in 0..=b {
                let lefts = legs_between(e, dom, apex, legs);
                for cod in 0..=b {
                    let rights = legs_between(e, cod, apex, legs);
                    for l in &lefts {
                        for r in &rights {
                            out.push(Cospan {
                                left: l.clone(),
                                right: r.clone(),
                            });
                        }
                    }
                }
            }
        }
        return out;
    }
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == plan.samples {
            break;
        }
        out.extend(random_cospan(e, b, legs, &mut rng));
    }
    out
}

fn random_cospan<E: Instances>(
    e: &E,
    b: usize,
    legs: Legs,
    rng: &mut ChaCha8Rng,
) -> Option<Cospan<E::Arrow>> {
    let (apex, dom, cod) = (
        rng.gen_range(0..=b),
        rng.gen_range(0..=b),
        rng.gen_range(0..=b),
    );
    random_cospan_from(e, dom, apex, cod, legs, rng)
}

fn random_cospan_from<E: Instances>(
    e: &E,
    dom: usize,
    apex: usize,
    cod: usize,
    legs: Legs,
    rng: &mut ChaCha8Rng,
) -> Option<Cospan<E::Arrow>> {
    let left = random_leg(e, dom, apex, legs, rng)?;
    let right = random_leg(e, cod, apex, legs, rng)?;
    Some(Cospan { left, right })
}

/// Spans `dom <- apex -> cod` with all three sizes at most the bound.
pub fn spans<E: Instances>(e: &E, plan: &Plan, legs: Legs) -> Vec<Span<E::Arrow>> {
    let b = plan.bound;
    if e.is_exhaustive() {
        let mut out = Vec::new();
        for apex in 0..=b {
            for dom in 0..=b {
                let lefts = legs_between(e, apex, dom, legs);
                for cod in 0..=b {
                    let rights = legs_between(e, apex, cod, legs);
                    for l in &lefts {
                        for r in &rights {
                            out.push(Span {
                                left: l.clone(),
                                right: r.clone(),
                            });
                        }
                    }
                }
            }
        }
        return out;
    }
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == plan.samples {
            break;
        }
        out.extend(random_span(e, b, legs, &mut rng));
    }
    out
}

fn random_span<E: Instances>(
    e: &E,
    b: usize,
    legs: Legs,
    rng: &mut ChaCha8Rng,
) -> Option<Span<E::Arrow>> {
    let (apex, dom, cod) = (
        rng.gen_range(0..=b),
        rng.gen_range(0..=b),
        rng.gen_range(0..=b),
    );
    random_span_from(e, dom, apex, cod, legs, rng)
}

fn random_span_from<E: Instances>(
    e: &E,
    dom: usize,
    apex: usize,
    cod: usize,
    legs: Legs,
    rng: &mut ChaCha8Rng,
) -> Option<Span<E::Arrow>> {
    let left = random_leg(e, apex, dom, legs, rng)?;
    let right = random_leg(e, apex, cod, legs, rng)?;
    Some(Span { left, right })
}

/// One representative per isomorphism class, in first-seen order.
pub fn distinct_cospans<E: Engine>(e: &E, all: Vec<Cospan<E::Arrow>>) -> Vec<Cospan<E::Arrow>> {
    let set: IndexSet<_> = all.iter().map(|c| e.canonical_cospan(c)).collect();
    set.into_iter().collect()
}

pub fn distinct_spans<E: Engine>(e: &E, all: Vec<Span<E::Arrow>>) -> Vec<Span<E::Arrow>> {
    let set: IndexSet<_> = all.iter().map(|s| e.canonical_span(s)).collect();
    set.into_iter().collect()
}

fn pairs_by_boundary<T: Clone>(
    items: &[T],
    dom: impl Fn(&T) -> usize,
    cod: impl Fn(&T) -> usize,
) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for a in items {
        for b in items.iter().filter(|b| dom(b) == cod(a)) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Composable pairs of cospans: all iso classes within the bound when
/// exhaustive, seeded draws otherwise.
pub fn cospan_pairs<E: Instances>(e: &E, plan: &Plan, legs: Legs) -> Vec<Pair<Cospan<E::Arrow>>> {
    if e.is_exhaustive() {
        let all = distinct_cospans(e, cospans(e, plan, legs));
        return pairs_by_boundary(&all, |c| c.dom(), |c| c.cod());
    }
    let b = plan.bound;
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == plan.samples {
            break;
        }
        let Some(first) = random_cospan(e, b, legs, &mut rng) else {
            continue;
        };
        let (apex, cod) = (rng.gen_range(0..=b), rng.gen_range(0..=b));
        if let Some(second) = random_cospan_from(e, first.cod(), apex, cod, legs, &mut rng) {
            out.push((first, second));
        }
    }
    out
}

pub fn span_pairs<E: Instances>(e: &E, plan: &Plan, legs: Legs) -> Vec<Pair<Span<E::Arrow>>> {
    if e.is_exhaustive() {
        let all = distinct_spans(e, spans(e, plan, legs));
        return pairs_by_boundary(&all, |s| s.dom(), |s| s.cod());
    }
    let b = plan.bound;
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == plan.samples {
            break;
        }
        let Some(first) = random_span(e, b, legs, &mut rng) else {
            continue;
        };
        let (apex, cod) = (rng.gen_range(0..=b), rng.gen_range(0..=b));
        if let Some(second) = random_span_from(e, first.cod(), apex, cod, legs, &mut rng) {
            out.push((first, second));
        }
    }
    out
}

/// Composable triples of random cospans.
pub fn random_cospan_triples<E: Instances>(
    e: &E,
    plan: &Plan,
    count: usize,
) -> Vec<Triple<Cospan<E::Arrow>>> {
    let b = plan.bound;
    let mut rng = plan.rng();
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == count {
            break;
        }
        let Some(c1) = random_cospan(e, b, Legs::Any, &mut rng) else {
            continue;
        };
        let (z2, m2, z3, m3) = (
            rng.gen_range(0..=b),
            rng.gen_range(0..=b),
            rng.gen_range(0..=b),
            rng.gen_range(0..=b),
        );
        let Some(c2) = random_cospan_from(e, c1.cod(), z2, m2, Legs::Any, &mut rng) else {
            continue;
        };
        let Some(c3) = random_cospan_from(e, m2, z3, m3, Legs::Any, &mut rng) else {
            continue;
        };
        out.push((c1, c2, c3));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::FinSubcat;

    #[test]
    fn words_are_lexicographic() {
        assert_eq!(
            words(2, &[0, 1]),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(words(0, &[0, 1]), vec![Vec::<i32>::new()]);
        assert!(words(1, &Vec::<i32>::new()).is_empty());
    }

    #[test]
    fn finset_hom_sizes() {
        let e = FinSet::default();
        for n in 0..4 {
            for m in 0..4 {
                assert_eq!(e.all_arrows(n, m).unwrap().len(), m.pow(n as u32));
            }
        }
        assert_eq!(PartialFinSet.all_arrows(2, 2).unwrap().len(), 9);
    }

    #[test]
    fn injective_cospans_within_bound() {
        // injections n -> z number z!/(z-n)!
        let e = FinSet::new(FinSubcat::Inj);
        let inj = |n: usize, z: usize| {
            if n > z {
                0
            } else {
                (z - n + 1..=z).product::<usize>()
            }
        };
        let expected: usize = (0..=2)
            .map(|z| (0..=2).map(|n| inj(n, z)).sum::<usize>().pow(2))
            .sum();
        assert_eq!(cospans(&e, &Plan::new(2), Legs::InA).len(), expected);
    }

    #[test]
    fn sampling_is_reproducible() {
        let e = PidEngine::<BigInt>::new();
        let plan = Plan::new(3).with_samples(20);
        assert_eq!(cospans(&e, &plan, Legs::InA), cospans(&e, &plan, Legs::InA));
        assert_eq!(cospans(&e, &plan, Legs::InA).len(), 20);
        assert!(cospans(&e, &plan, Legs::InA)
            .iter()
            .all(|c| e.is_in_a(&c.left) && e.is_in_a(&c.right)));
    }

    #[test]
    fn unimodular_samples_are_invertible() {
        let mut rng = Plan::new(0).rng();
        for _ in 0..50 {
            let u = random_unimodular::<BigInt>(3, &mut rng);
            assert!(crate::pid::is_split_mono_z(&u));
        }
    }
}
