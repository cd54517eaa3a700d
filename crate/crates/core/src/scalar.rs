//! Scalar domains for the matrix-backed engines.
//!
//! Everything is built on `num-traits`: a [`Ring`] is any exact commutative
//! ring element type, a [`Field`] adds inverses, and [`Int`] is a Euclidean
//! integer type. Concrete choices are [`BigRational`], [`Fp`] and [`BigInt`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub trait Ring:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every integer embeds in the ring")
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Hash
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// A field with exact arithmetic.
pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Checks the field parameters (e.g. primality of the modulus).
    fn validate() -> Result<()> {
        Ok(())
    }

    /// JSON tag identifying the field, e.g. `{"field":"Q"}`.
    fn tag() -> Value;

    fn parse(s: &str) -> Result<Self>;
}

/// A field with finitely many elements, listed in a fixed order.
pub trait FiniteField: Field {
    fn elements() -> Vec<Self>;
}

/// Euclidean integers used by the Smith/Hermite routines.
pub trait Int: Ring + Integer + Signed + Ord {}

impl<T> Int for T where T: Ring + Integer + Signed + Ord {}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn tag() -> Value {
        json!({ "field": "Q" })
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n =
                    BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
                let d =
                    BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("{s}: zero denominator")));
                }
                Ok(BigRational::new(n, d))
            }
            None => BigInt::from_str(s)
                .map(BigRational::from_integer)
                .map_err(|e| Error::Parse(format!("{s}: {e}"))),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo the prime `P`, always stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in GF(p)")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::new(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp(n % P))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat
            Some(self.pow(P - 2))
        }
    }

    fn validate() -> Result<()> {
        if is_prime(P) {
            Ok(())
        } else {
            Err(Error::NotPrime(P))
        }
    }

    fn tag() -> Value {
        json!({ "field": "Fp", "p": P })
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Fp::new(v));
        }
        BigInt::from_str(s)
            .map(|v| {
                let r = v.mod_floor(&BigInt::from(P));
                Fp(u64::try_from(r).expect("residue fits"))
            })
            .map_err(|e| Error::Parse(format!("{s}: {e}")))
    }
}

impl<const P: u64> FiniteField for Fp<P> {
    fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;

    #[test]
    fn residues_stay_reduced() {
        assert_eq!(F5::new(-1).value(), 4);
        assert_eq!((F5::new(3) + F5::new(4)).value(), 2);
        assert_eq!((F5::new(1) - F5::new(3)).value(), 3);
        assert_eq!((-F5::new(0)).value(), 0);
    }

    #[test]
    fn inverses_in_gf5() {
        for x in F5::elements().into_iter().skip(1) {
            assert_eq!(x * x.inverse().unwrap(), F5::one());
        }
        assert!(F5::zero().inverse().is_none());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert_eq!(Fp::<4>::validate(), Err(Error::NotPrime(4)));
        assert!(Fp::<7>::validate().is_ok());
    }

    #[test]
    fn rationals_parse_reduced() {
        let q = BigRational::parse("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(BigRational::parse("2").unwrap().to_string(), "2");
        assert!(BigRational::parse("1/0").is_err());
    }
}
