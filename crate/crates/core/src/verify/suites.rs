//! Law suites that apply to every engine.

use indexmap::IndexMap;
use serde_json::{json, Value};

use super::instances::{
    arrows, cospan_pairs, cospans, distinct_cospans, distinct_spans, span_pairs, spans, Instances,
    Legs, Plan,
};
use super::report::{Collector, Expect, Failure, SuiteReport};
use crate::codec::{encode_corel, encode_cospan, encode_span, Encode};
use crate::diagram::{Corelation, Diagrams, IsoFactorized};
use crate::error::Result;

pub(crate) fn collector<E: Instances>(suite: &str, e: &E, plan: &Plan) -> Collector {
    Collector::new(suite, e.name()).seeded((!e.is_exhaustive()).then_some(plan.seed))
}

fn corel_or_error<A: Encode>(c: &Result<Corelation<A>>) -> Value {
    match c {
        Ok(c) => encode_corel(c),
        Err(err) => json!({ "error": err.to_string() }),
    }
}

fn same<A: PartialEq>(a: &Result<Corelation<A>>, b: &Corelation<A>) -> bool {
    matches!(a, Ok(a) if a == b)
}

/// `Π` and `Γ` agree on the images of `A`: `Π(id, f) = Γ(f, id)` and
/// `Π(f, id) = Γ(id, f)`.
pub fn square_commutes<E: Instances>(e: &E, plan: &Plan) -> SuiteReport {
    let mut c = collector("square_commutes", e, plan);
    for f in arrows(e, plan, Legs::InA) {
        c.instance();
        let fwd = e.pi(&e.forward_span(&f));
        let fwd_expected = e.gamma(&e.forward_cospan(&f));
        c.check(same(&fwd, &fwd_expected), || Failure {
            input: json!({ "forward": f.encode() }),
            expected: encode_corel(&fwd_expected),
            got: corel_or_error(&fwd),
        });
        let bwd = e.pi(&e.backward_span(&f));
        let bwd_expected = e.gamma(&e.backward_cospan(&f));
        c.check(same(&bwd, &bwd_expected), || Failure {
            input: json!({ "backward": f.encode() }),
            expected: encode_corel(&bwd_expected),
            got: corel_or_error(&bwd),
        });
    }
    c.finish()
}

/// `Γ` and `Π` preserve identities and composition.
pub fn functoriality<E: Instances>(e: &E, plan: &Plan) -> SuiteReport {
    let mut c = collector("functoriality", e, plan);
    for n in 0..=plan.bound {
        c.instance();
        let id = e.identity_corel(n);
        let g = e.gamma(&e.identity_cospan(n));
        c.check(g == id, || Failure {
            input: json!({ "gamma_identity": n }),
            expected: encode_corel(&id),
            got: encode_corel(&g),
        });
        let p = e.pi(&e.identity_span(n));
        c.check(same(&p, &id), || Failure {
            input: json!({ "pi_identity": n }),
            expected: encode_corel(&id),
            got: corel_or_error(&p),
        });
    }
    for (c1, c2) in cospan_pairs(e, plan, Legs::Any) {
        c.instance();
        let whole = e.compose_cospan(&c1, &c2).map(|k| e.gamma(&k));
        let parts = e
            .compose_corel(&e.gamma(&c1), &e.gamma(&c2))
            .expect("composable");
        c.check(same(&whole, &parts), || Failure {
            input: json!({ "gamma": [encode_cospan(&c1), encode_cospan(&c2)] }),
            expected: encode_corel(&parts),
            got: corel_or_error(&whole),
        });
    }
    for (s1, s2) in span_pairs(e, plan, Legs::InA) {
        c.instance();
        let whole = e.compose_span(&s1, &s2).and_then(|s| e.pi(&s));
        let parts = e.pi(&s1).and_then(|a| e.compose_corel(&a, &e.pi(&s2)?));
        let ok = matches!((&whole, &parts), (Ok(w), Ok(p)) if w == p);
        c.check(ok, || Failure {
            input: json!({ "pi": [encode_span(&s1), encode_span(&s2)] }),
            expected: corel_or_error(&parts),
            got: corel_or_error(&whole),
        });
    }
    c.finish()
}

/// The corelation-side hypotheses: `M ⊆ A`, `A` stable under pullback, and
/// the mediator from the pushout of the pullback of an `A`-cospan lies in `M`.
pub fn assumption<E: Instances>(e: &E, plan: &Plan, expect: Expect) -> SuiteReport {
    let mut c = collector("assumption", e, plan).expecting(expect);
    for f in arrows(e, plan, Legs::Any)
        .into_iter()
        .filter(|f| e.is_in_m(f))
    {
        c.instance();
        c.check(e.is_in_a(&f), || Failure {
            input: f.encode(),
            expected: json!("M-arrow in A"),
            got: json!("not in A"),
        });
    }
    for k in cospans(e, plan, Legs::InA) {
        c.instance();
        match e.pushout_of_pullback_mediator(&k) {
            Ok((pb, u)) => {
                let stable = e.is_in_a(&pb.left) && e.is_in_a(&pb.right);
                c.check(stable, || Failure {
                    input: encode_cospan(&k),
                    expected: json!("pullback legs in A"),
                    got: encode_span(&pb),
                });
                c.check(e.is_in_m(&u), || Failure {
                    input: encode_cospan(&k),
                    expected: json!("mediator in M"),
                    got: u.encode(),
                });
            }
            Err(err) => c.check(false, || Failure {
                input: encode_cospan(&k),
                expected: json!("mediator exists"),
                got: json!(err.to_string()),
            }),
        }
    }
    c.finish()
}

/// The relation-side hypotheses: `E ⊆ A`, `A` stable under pushout, and the
/// mediator into the pullback of the pushout of an `A`-span lies in `E`.
pub fn assumption_dual<E: Instances>(e: &E, plan: &Plan, expect: Expect) -> SuiteReport {
    let mut c = collector("assumption_dual", e, plan).expecting(expect);
    for f in arrows(e, plan, Legs::Any)
        .into_iter()
        .filter(|f| e.is_in_e(f))
    {
        c.instance();
        c.check(e.is_in_a(&f), || Failure {
            input: f.encode(),
            expected: json!("E-arrow in A"),
            got: json!("not in A"),
        });
    }
    for s in spans(e, plan, Legs::InA) {
        c.instance();
        match e.pullback_of_pushout_mediator(&s) {
            Ok((po, u)) => {
                let stable = e.is_in_a(&po.left) && e.is_in_a(&po.right);
                c.check(stable, || Failure {
                    input: encode_span(&s),
                    expected: json!("pushout legs in A"),
                    got: encode_cospan(&po),
                });
                c.check(e.is_in_e(&u), || Failure {
                    input: encode_span(&s),
                    expected: json!("mediator in E"),
                    got: u.encode(),
                });
            }
            Err(err) => c.check(false, || Failure {
                input: encode_span(&s),
                expected: json!("mediator exists"),
                got: json!(err.to_string()),
            }),
        }
    }
    c.finish()
}

/// The quotienting equations: an `A`-cospan equals its pullback span, and a
/// span composed as a zigzag equals its pushout cospan.
pub fn presentation<E: Instances>(e: &E, plan: &Plan) -> SuiteReport {
    let mut c = collector("presentation", e, plan);
    for k in cospans(e, plan, Legs::InA) {
        c.instance();
        let lhs = e.gamma(&k);
        let rhs = e.pullback(&k.left, &k.right).and_then(|pb| e.pi(&pb));
        c.check(same(&rhs, &lhs), || Failure {
            input: json!({ "pulls_back": encode_cospan(&k) }),
            expected: encode_corel(&lhs),
            got: corel_or_error(&rhs),
        });
    }
    for s in spans(e, plan, Legs::Any) {
        c.instance();
        let zigzag = e
            .compose_cospan(&e.backward_cospan(&s.left), &e.forward_cospan(&s.right))
            .map(|k| e.gamma(&k));
        let po = e.gamma(
            &e.pushout(&s.left, &s.right)
                .expect("span legs share an apex"),
        );
        c.check(same(&zigzag, &po), || Failure {
            input: json!({ "pushes_out": encode_span(&s) }),
            expected: encode_corel(&po),
            got: corel_or_error(&zigzag),
        });
    }
    c.finish()
}

/// Strictness of the monoidal structure: `Γ` and `Π` preserve `⊗`, the unit
/// is neutral, and `E`, `M`, `A` are closed under `⊗`.
pub fn monoidal<E: Instances>(e: &E, plan: &Plan) -> SuiteReport {
    let mut c = collector("monoidal", e, plan);
    let all = distinct_cospans(e, cospans(e, plan, Legs::Any));
    let unit = e.identity_cospan(0);
    for a in &all {
        c.instance();
        let with_unit = e.gamma(&e.tensor_cospan(a, &unit));
        let alone = e.gamma(a);
        c.check(with_unit == alone, || Failure {
            input: json!({ "unit": encode_cospan(a) }),
            expected: encode_corel(&alone),
            got: encode_corel(&with_unit),
        });
        for b in &all {
            c.instance();
            let whole = e.gamma(&e.tensor_cospan(a, b));
            let parts = e.tensor_corel(&e.gamma(a), &e.gamma(b));
            c.check(whole == parts, || Failure {
                input: json!({ "gamma": [encode_cospan(a), encode_cospan(b)] }),
                expected: encode_corel(&parts),
                got: encode_corel(&whole),
            });
        }
    }
    let a_spans = distinct_spans(e, spans(e, plan, Legs::InA));
    for s in &a_spans {
        for t in &a_spans {
            c.instance();
            let whole = e.pi(&e.tensor_span(s, t));
            let parts = e.pi(s).and_then(|x| Ok(e.tensor_corel(&x, &e.pi(t)?)));
            let ok = matches!((&whole, &parts), (Ok(w), Ok(p)) if w == p);
            c.check(ok, || Failure {
                input: json!({ "pi": [encode_span(s), encode_span(t)] }),
                expected: corel_or_error(&parts),
                got: corel_or_error(&whole),
            });
        }
    }
    let fs = arrows(e, plan, Legs::Any);
    for f in &fs {
        for g in &fs {
            c.instance();
            let fg = e.tensor(f, g);
            let closed = [
                (e.is_in_e(f) && e.is_in_e(g), e.is_in_e(&fg), "E"),
                (e.is_in_m(f) && e.is_in_m(g), e.is_in_m(&fg), "M"),
                (e.is_in_a(f) && e.is_in_a(g), e.is_in_a(&fg), "A"),
            ];
            for (premise, conclusion, class) in closed {
                c.check(!premise || conclusion, || Failure {
                    input: json!([f.encode(), g.encode()]),
                    expected: json!(format!("tensor in {class}")),
                    got: fg.encode(),
                });
            }
        }
    }
    c.finish()
}

/// With the `(all, isos)` factorization, corelations are cospans: `Γ` is the
/// identity on isomorphism classes and therefore injective.
pub fn iso_factorisation<E: Instances + Clone>(e: &E, plan: &Plan) -> SuiteReport {
    let iso = IsoFactorized(e.clone());
    let mut c = collector("iso_factorisation", &iso, plan);
    let mut seen: IndexMap<Corelation<E::Arrow>, _> = IndexMap::new();
    for k in cospans(e, plan, Legs::Any) {
        c.instance();
        let canonical = e.canonical_cospan(&k);
        let g = iso.gamma(&k);
        c.check(*g.cospan() == canonical, || Failure {
            input: encode_cospan(&k),
            expected: encode_cospan(&canonical),
            got: encode_corel(&g),
        });
        let first = seen.entry(g).or_insert_with(|| canonical.clone());
        c.check(*first == canonical, || Failure {
            input: encode_cospan(&k),
            expected: json!("distinct classes stay distinct"),
            got: encode_cospan(first),
        });
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{FinSet, FinSubcat};
    use crate::linear::LinearEngine;
    use crate::scalar::Fp;

    #[test]
    fn bound_zero_has_one_instance() {
        let r = square_commutes(&FinSet::default(), &Plan::new(0));
        assert!(r.pass);
        assert_eq!(r.instances, 1);
    }

    #[test]
    fn small_finset_suites_pass() {
        let e = FinSet::new(FinSubcat::Inj);
        let plan = Plan::new(2);
        for r in [
            square_commutes(&e, &plan),
            functoriality(&e, &plan),
            assumption(&e, &plan, Expect::Pass),
            presentation(&e, &plan),
            monoidal(&e, &plan),
            iso_factorisation(&e, &plan),
        ] {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn gf2_suites_pass_at_bound_one() {
        let e = LinearEngine::<Fp<2>>::new().unwrap();
        let plan = Plan::new(1);
        for r in [
            square_commutes(&e, &plan),
            functoriality(&e, &plan),
            assumption(&e, &plan, Expect::Pass),
            assumption_dual(&e, &plan, Expect::Pass),
            presentation(&e, &plan),
            monoidal(&e, &plan),
        ] {
            assert!(r.pass, "{r:?}");
        }
    }
}
