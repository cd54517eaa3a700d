use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finset::FinSubcat;
use crate::scalar::is_prime;

/// Primes available to `linfp:<p>`; each is a separate monomorphization.
pub const SUPPORTED_PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// A selectable engine, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineSpec {
    FinSet(FinSubcat),
    Pf,
    LinQ,
    LinFp(u64),
    Z,
}

impl FromStr for EngineSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "finset" => Ok(EngineSpec::FinSet(FinSubcat::Inj)),
            "pf" => Ok(EngineSpec::Pf),
            "linq" => Ok(EngineSpec::LinQ),
            "z" => Ok(EngineSpec::Z),
            _ => {
                let p = s
                    .strip_prefix("linfp:")
                    .ok_or_else(|| Error::Parse(format!("unknown engine `{s}`")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime in `{s}`")))?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if !SUPPORTED_PRIMES.contains(&p) {
                    return Err(Error::Unsupported(format!(
                        "GF({p}) is not compiled in; supported primes are {SUPPORTED_PRIMES:?}"
                    )));
                }
                Ok(EngineSpec::LinFp(p))
            }
        }
    }
}

impl fmt::Display for EngineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineSpec::FinSet(_) => write!(f, "finset"),
            EngineSpec::Pf => write!(f, "pf"),
            EngineSpec::LinQ => write!(f, "linq"),
            EngineSpec::LinFp(p) => write!(f, "linfp:{p}"),
            EngineSpec::Z => write!(f, "z"),
        }
    }
}

impl EngineSpec {
    /// Applies a `--subcat` choice; only `finset` has a choice of `A`.
    pub fn with_subcat(self, subcat: &str) -> Result<Self> {
        match (self, subcat) {
            (EngineSpec::FinSet(_), "Inj" | "inj") => Ok(EngineSpec::FinSet(FinSubcat::Inj)),
            (EngineSpec::FinSet(_), "F" | "f" | "all") => Ok(EngineSpec::FinSet(FinSubcat::All)),
            (EngineSpec::FinSet(_), other) => {
                Err(Error::Parse(format!("unknown subcategory `{other}`")))
            }
            (spec, other) => Err(Error::Unsupported(format!(
                "engine {spec} has a fixed A; got --subcat {other}"
            ))),
        }
    }

    /// Default bound for exhaustive or sampled runs on this engine.
    pub fn default_bound(&self) -> usize {
        match self {
            EngineSpec::FinSet(_) => 3,
            EngineSpec::LinFp(p) if *p > 2 => 1,
            _ => 2,
        }
    }
}

/// Runs `$body` with `$e` bound to a reference to the selected engine.
#[macro_export]
macro_rules! with_engine {
    ($spec:expr, $e:ident => $body:expr) => {{
        use $crate::interface::EngineSpec as __S;
        match $spec {
            __S::FinSet(sub) => {
                let $e = &$crate::finset::FinSet::new(sub);
                $body
            }
            __S::Pf => {
                let $e = &$crate::finset::PartialFinSet;
                $body
            }
            __S::LinQ => {
                let $e = &$crate::LinQ::new().expect("Q is a field");
                $body
            }
            __S::Z => {
                let $e = &$crate::ZEngine::new();
                $body
            }
            __S::LinFp(p) => $crate::with_prime!(p, F => {
                let $e = &$crate::linear::LinearEngine::<$crate::scalar::Fp<F>>::new()?;
                $body
            }),
        }
    }};
}

/// Runs `$body` with the const `$F` set to the prime `p`.
#[macro_export]
macro_rules! with_prime {
    ($p:expr, $F:ident => $body:expr) => {{
        match $p {
            2 => {
                const $F: u64 = 2;
                $body
            }
            3 => {
                const $F: u64 = 3;
                $body
            }
            5 => {
                const $F: u64 = 5;
                $body
            }
            7 => {
                const $F: u64 = 7;
                $body
            }
            11 => {
                const $F: u64 = 11;
                $body
            }
            13 => {
                const $F: u64 = 13;
                $body
            }
            17 => {
                const $F: u64 = 17;
                $body
            }
            19 => {
                const $F: u64 = 19;
                $body
            }
            p if $crate::scalar::is_prime(p) => Err($crate::error::Error::Unsupported(format!(
                "GF({p}) is not compiled in"
            ))),
            p => Err($crate::error::Error::NotPrime(p)),
        }
    }};
}
