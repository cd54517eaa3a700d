//! End-to-end acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p corel --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use corel::diagram::Arrow;
use corel::finset::{
    corel_to_partial_partition, partial_partition_to_corel, FinFn, FinSet, FinSubcat,
    PartialFinSet, PartialPartition,
};
use corel::linear::{
    all_subspaces, corel_to_rel, rel_to_corel, subspace_to_corel, subspace_to_rel,
};
use corel::verify::{special, suite_lattice, suites, Expect, FiniteLattice, Plan, SuiteReport};
use corel::{Cospan, Diagrams, Gf2, LinGf2, LinQ, Span};
use serde_json::json;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let ok = reports.iter().all(SuiteReport::as_expected);
    let detail = reports
        .iter()
        .map(|r| {
            format!(
                "{} {} {} ({} instances)",
                r.status(),
                r.suite,
                r.engine,
                r.instances
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome { ok, detail }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let spent = start.elapsed();
    out.ok &= spent < limit;
    out.detail = format!(
        "{}; {:.1}s of {}s",
        out.detail,
        spent.as_secs_f64(),
        limit.as_secs()
    );
    out
}

fn er_isomorphism() -> Outcome {
    let r = special::er_per_iso(&Plan::new(3));
    from_reports(&[r])
}

fn per_analogue() -> Outcome {
    let e = PartialFinSet;
    let mut checked = 0;
    let mut ok = true;
    for n in 0..=2 {
        for z in 0..=2 {
            for m in 0..=2 {
                for a in PartialPartition::all(n, z) {
                    for b in PartialPartition::all(z, m) {
                        let via_cospans = e
                            .compose_corel(
                                &partial_partition_to_corel(&a),
                                &partial_partition_to_corel(&b),
                            )
                            .map(|c| corel_to_partial_partition(&c));
                        ok &= via_cospans.ok() == a.compose_direct(&b).ok();
                        checked += 1;
                    }
                }
            }
        }
    }
    Outcome {
        ok,
        detail: format!("{checked} composable PER pairs"),
    }
}

fn assumption_witnesses() -> Outcome {
    let inj = suites::assumption(&FinSet::new(FinSubcat::Inj), &Plan::new(4), Expect::Pass);
    let all = FinSet::new(FinSubcat::All);
    let corel_side = suites::assumption(&all, &Plan::new(3), Expect::Fail);
    let dual_side = suites::assumption_dual(&all, &Plan::new(3), Expect::Fail);
    let shape = |v: &serde_json::Value, leg: &str| (v[leg]["dom"].clone(), v[leg]["cod"].clone());
    let corel_witness = corel_side
        .witness()
        .map(|w| w.input.clone())
        .unwrap_or_default();
    let corel_shape = shape(&corel_witness, "left") == (json!(0), json!(1))
        && shape(&corel_witness, "right") == (json!(2), json!(1));
    let dual_witness = dual_side.witness().cloned();
    let dual_shape = dual_witness.as_ref().is_some_and(|w| {
        let mediator: Option<FinFn> = serde_json::from_value(w.got.clone()).ok();
        shape(&w.input, "left") == (json!(3), json!(2))
            && shape(&w.input, "right") == (json!(3), json!(2))
            && mediator.is_some_and(|u| u.dom() == 3 && u.cod() == 4 && !u.is_surjective())
    });
    let mut out = from_reports(&[inj, corel_side, dual_side]);
    out.ok &= corel_shape && dual_shape;
    out.detail = format!(
        "{}; witnesses {corel_witness} and {}",
        out.detail,
        dual_witness.map(|w| w.input).unwrap_or_default()
    );
    out
}

fn generator_equation() -> Outcome {
    let e = FinSet::default();
    let empty = || FinFn::new(1, vec![]).unwrap();
    let gamma = e.gamma(&Cospan {
        left: empty(),
        right: empty(),
    });
    let pi = e.pi(&Span {
        left: FinFn::identity(0),
        right: FinFn::identity(0),
    });
    let ok = pi.as_ref().is_ok_and(|p| *p == gamma);
    Outcome {
        ok,
        detail: "Γ(0→1←0) against Π(0←0→0)".into(),
    }
}

fn abelian_isomorphism() -> Outcome {
    let gf2 = special::abelian_iso_exhaustive(&LinGf2::new().unwrap(), &Plan::new(2));
    let q = special::abelian_iso_sampled(&LinQ::new().unwrap(), &Plan::new(2).with_samples(200));
    let e = LinGf2::new().unwrap();
    let mut bijective = true;
    for n in 0..=2 {
        for m in 0..=2 {
            for v in all_subspaces::<Gf2>(n, m) {
                let c = subspace_to_corel(&e, &v);
                let r = subspace_to_rel(&e, &v);
                bijective &= rel_to_corel(&e, &corel_to_rel(&e, &c)) == c
                    && corel_to_rel(&e, &rel_to_corel(&e, &r)) == r;
            }
        }
    }
    let mut out = from_reports(&[gf2, q]);
    out.ok &= bijective;
    out
}

fn relation_counts() -> Outcome {
    from_reports(&[special::counts(&Plan::new(9))])
}

fn scalar_dichotomy() -> Outcome {
    from_reports(&[special::scalar_dichotomy()])
}

fn square_functoriality_monoidal() -> Outcome {
    let finset = FinSet::new(FinSubcat::Inj);
    let gf2 = LinGf2::new().unwrap();
    let (p3, p2) = (Plan::new(3), Plan::new(2));
    from_reports(&[
        suites::square_commutes(&finset, &p3),
        suites::functoriality(&finset, &p3),
        suites::monoidal(&finset, &p3),
        suites::square_commutes(&gf2, &p2),
        suites::functoriality(&gf2, &p2),
        suites::monoidal(&gf2, &p2),
    ])
}

fn lattice_collapse() -> Outcome {
    let chain = FiniteLattice::chain(2);
    let diamond = FiniteLattice::diamond();
    let sum = chain.coproduct(&diamond);
    let mut out = from_reports(&[
        suite_lattice("chain2", &chain),
        suite_lattice("diamond", &diamond),
        suite_lattice("coproduct", &sum),
    ]);
    let (component, summands) = sum.components();
    out.ok &= summands == 2 && component[0] != component[2];
    out
}

fn pid_round_trips() -> Outcome {
    from_reports(&[
        special::pid_factor(&Plan::new(3)),
        special::pid_associativity(&Plan::new(2)),
    ])
}

fn main() -> ExitCode {
    let start = Instant::now();
    type Criterion = Box<dyn FnOnce() -> Outcome>;
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "ER isomorphism and Bell counts",
            Box::new(|| timed(Duration::from_secs(10), er_isomorphism)),
        ),
        ("PER analogue for partial functions", Box::new(per_analogue)),
        (
            "assumption suite and non-example witnesses",
            Box::new(assumption_witnesses),
        ),
        ("generator equation", Box::new(generator_equation)),
        ("abelian isomorphism", Box::new(abelian_isomorphism)),
        ("relation counts", Box::new(relation_counts)),
        ("scalar dichotomy", Box::new(scalar_dichotomy)),
        (
            "square, functoriality and monoidal suites",
            Box::new(square_functoriality_monoidal),
        ),
        ("lattice collapse", Box::new(lattice_collapse)),
        ("PID round trips", Box::new(pid_round_trips)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let out = run();
        failed += usize::from(!out.ok);
        println!(
            "{} {:>2}. {name}: {}",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail
        );
    }
    let total = start.elapsed();
    let in_budget = total < Duration::from_secs(60);
    failed += usize::from(!in_budget);
    println!(
        "{} full run: {:.1}s of 60s",
        if in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
