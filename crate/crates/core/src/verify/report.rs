use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Stated in every report: universality of the pushout square quantifies
/// over all cocones and cannot be enumerated.
pub const COVERAGE_NOTE: &str = "universality of the pushout square is not enumerable; \
coverage is through the presentation equations and commutativity of the square";

/// How many failures are kept verbatim; the rest are only counted.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub input: Value,
    pub expected: Value,
    pub got: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub engine: String,
    pub instances: usize,
    /// Failures in enumeration order; the first is the minimal witness.
    pub failures: Vec<Failure>,
    pub failure_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub expect: Expect,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    /// Pass when expected to pass, or fail when a failure is expected.
    pub fn as_expected(&self) -> bool {
        self.pass == (self.expect == Expect::Pass)
    }

    pub fn status(&self) -> &'static str {
        match (self.pass, self.expect) {
            (true, Expect::Pass) => "PASS",
            (false, Expect::Pass) => "FAIL",
            (false, Expect::Fail) => "XFAIL",
            (true, Expect::Fail) => "XPASS",
        }
    }

    pub fn witness(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// Accumulates checks for one suite.
pub struct Collector {
    report: SuiteReport,
}

impl Collector {
    pub fn new(suite: &str, engine: impl Into<String>) -> Self {
        Collector {
            report: SuiteReport {
                suite: suite.into(),
                engine: engine.into(),
                instances: 0,
                failures: Vec::new(),
                failure_count: 0,
                seed: None,
                expect: Expect::Pass,
                pass: true,
                elapsed_ms: None,
            },
        }
    }

    pub fn seeded(mut self, seed: Option<u64>) -> Self {
        self.report.seed = seed;
        self
    }

    pub fn expecting(mut self, expect: Expect) -> Self {
        self.report.expect = expect;
        self
    }

    /// Counts one instance.
    pub fn instance(&mut self) {
        self.report.instances += 1;
    }

    /// Records a check; the witness is built only on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Failure) {
        if !ok {
            self.report.failure_count += 1;
            if self.report.failures.len() < MAX_WITNESSES {
                self.report.failures.push(witness());
            }
        }
    }

    pub fn finish(mut self) -> SuiteReport {
        self.report.pass = self.report.failure_count == 0;
        self.report
    }
}

/// A full run: the reports in plan order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub note: &'static str,
    pub suites: Vec<SuiteReport>,
    pub ok: bool,
}

impl RunReport {
    pub fn new(suites: Vec<SuiteReport>) -> Self {
        let ok = suites.iter().all(SuiteReport::as_expected);
        RunReport {
            note: COVERAGE_NOTE,
            suites,
            ok,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.note);
        for r in &self.suites {
            let _ = write!(
                out,
                "{:<6} {:<18} {:<16} instances={}",
                r.status(),
                r.suite,
                r.engine,
                r.instances
            );
            if r.failure_count > 0 {
                let _ = write!(out, " failures={}", r.failure_count);
            }
            if let Some(seed) = r.seed {
                let _ = write!(out, " seed={seed}");
            }
            if let Some(ms) = r.elapsed_ms {
                let _ = write!(out, " elapsed_ms={ms}");
            }
            out.push('\n');
            if let Some(w) = r.witness() {
                let _ = writeln!(out, "       witness: {}", w.input);
                let _ = writeln!(out, "       expected: {}  got: {}", w.expected, w.got);
            }
        }
        let _ = writeln!(out, "{}", if self.ok { "ok" } else { "FAILED" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn failing(expect: Expect) -> SuiteReport {
        let mut c = Collector::new("s", "e").expecting(expect);
        for i in 0..10 {
            c.instance();
            c.check(i % 2 == 0, || Failure {
                input: json!(i),
                expected: json!(true),
                got: json!(false),
            });
        }
        c.finish()
    }

    #[test]
    fn witnesses_are_capped_and_ordered() {
        let r = failing(Expect::Pass);
        assert!(!r.pass);
        assert_eq!(r.failure_count, 5);
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert_eq!(r.witness().unwrap().input, json!(1));
    }

    #[test]
    fn expected_failures_invert() {
        assert!(!failing(Expect::Pass).as_expected());
        assert!(failing(Expect::Fail).as_expected());
        assert_eq!(failing(Expect::Fail).status(), "XFAIL");
        let clean = Collector::new("s", "e").expecting(Expect::Fail).finish();
        assert_eq!(clean.status(), "XPASS");
        assert!(!RunReport::new(vec![clean]).ok);
    }

    #[test]
    fn text_is_stable() {
        let run = RunReport::new(vec![failing(Expect::Fail)]);
        assert_eq!(run.to_text(), run.clone().to_text());
        assert!(run.to_text().ends_with("ok\n"));
    }
}
