//! JSON encodings of arrows and diagrams.
//!
//! Functions are `{"dom","cod","table"}` (with `null` for undefined points).
//! Matrices are `{"dom","cod","matrix"}` where `matrix` is a list of rows of
//! strings such as `"3/4"`; plain JSON integers are also accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::diagram::{Arrow, Corelation, Cospan, Relation, Span};
use crate::error::{Error, Result};
use crate::finset::{FinFn, PartialFn};
use crate::matrix::Matrix;
use crate::scalar::{Field, Fp, Ring};

/// Scalars with a textual form.
pub trait Scalar: Ring {
    fn from_text(s: &str) -> Result<Self>;

    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Scalar for BigRational {
    fn from_text(s: &str) -> Result<Self> {
        <BigRational as Field>::parse(s)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_text(s: &str) -> Result<Self> {
        <Fp<P> as Field>::parse(s)
    }
}

impl Scalar for BigInt {
    fn from_text(s: &str) -> Result<Self> {
        BigInt::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))
    }
}

/// Arrows that round-trip through JSON.
pub trait Encode: Arrow + Sized {
    fn encode(&self) -> Value;
    fn decode(v: &Value) -> Result<Self>;
}

impl Encode for FinFn {
    fn encode(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }

    fn decode(v: &Value) -> Result<Self> {
        Ok(serde_json::from_value(v.clone())?)
    }
}

impl Encode for PartialFn {
    fn encode(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }

    fn decode(v: &Value) -> Result<Self> {
        Ok(serde_json::from_value(v.clone())?)
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn natural(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Parse(format!("`{key}` must be a natural number")))
}

fn scalar<T: Scalar>(v: &Value) -> Result<T> {
    match v {
        Value::String(s) => T::from_text(s),
        Value::Number(n) => T::from_text(&n.to_string()),
        other => Err(Error::Parse(format!("bad matrix entry {other}"))),
    }
}

impl<T: Scalar> Encode for Matrix<T> {
    fn encode(&self) -> Value {
        let rows: Vec<Vec<String>> = (0..self.rows())
            .map(|i| self.row(i).iter().map(Scalar::to_text).collect())
            .collect();
        json!({ "dom": self.cols(), "cod": self.rows(), "matrix": rows })
    }

    fn decode(v: &Value) -> Result<Self> {
        let dom = natural(v, "dom")?;
        let cod = natural(v, "cod")?;
        let rows = field(v, "matrix")?
            .as_array()
            .ok_or_else(|| Error::Parse("`matrix` must be an array".into()))?;
        if rows.len() != cod {
            return Err(Error::InvalidMorphism(format!(
                "matrix has {} rows, cod is {cod}",
                rows.len()
            )));
        }
        let mut out = Vec::with_capacity(cod);
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?;
            if row.len() != dom {
                return Err(Error::InvalidMorphism(format!(
                    "matrix row has {} entries, dom is {dom}",
                    row.len()
                )));
            }
            out.push(row.iter().map(scalar).collect::<Result<Vec<T>>>()?);
        }
        Ok(Matrix::from_rows(out, dom).expect("checked shape"))
    }
}

fn encode_legs<A: Encode>(left: &A, right: &A) -> Value {
    json!({ "left": left.encode(), "right": right.encode() })
}

pub fn encode_cospan<A: Encode>(c: &Cospan<A>) -> Value {
    encode_legs(&c.left, &c.right)
}

pub fn encode_span<A: Encode>(s: &Span<A>) -> Value {
    encode_legs(&s.left, &s.right)
}

pub fn encode_corel<A: Encode>(c: &Corelation<A>) -> Value {
    encode_cospan(c.cospan())
}

pub fn encode_rel<A: Encode>(r: &Relation<A>) -> Value {
    encode_span(r.span())
}

pub fn decode_legs<A: Encode>(v: &Value) -> Result<(A, A)> {
    Ok((
        A::decode(field(v, "left")?)?,
        A::decode(field(v, "right")?)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn finfn_json_shape() {
        let f = FinFn::new(3, vec![2, 0]).unwrap();
        assert_eq!(f.encode(), json!({"dom": 2, "cod": 3, "table": [2, 0]}));
        assert_eq!(FinFn::decode(&f.encode()).unwrap(), f);
        assert!(FinFn::decode(&json!({"dom": 1, "cod": 1, "table": [1]})).is_err());
        assert!(FinFn::decode(&json!({"dom": 2, "cod": 1, "table": [0]})).is_err());
    }

    #[test]
    fn partial_fn_uses_null() {
        let f = PartialFn::new(1, vec![Some(0), None]).unwrap();
        assert_eq!(f.encode(), json!({"dom": 2, "cod": 1, "table": [0, null]}));
        assert_eq!(PartialFn::decode(&f.encode()).unwrap(), f);
    }

    #[test]
    fn rational_matrix_round_trip() {
        let m = Matrix::from_rows(
            vec![vec![
                BigRational::parse("3/4").unwrap(),
                BigRational::from_int(-2),
            ]],
            2,
        )
        .unwrap();
        let v = m.encode();
        assert_eq!(v, json!({"dom": 2, "cod": 1, "matrix": [["3/4", "-2"]]}));
        assert_eq!(Matrix::<BigRational>::decode(&v).unwrap(), m);
    }

    #[test]
    fn empty_matrices_keep_their_shape() {
        let m = Matrix::<BigInt>::zeros(0, 3);
        assert_eq!(Matrix::<BigInt>::decode(&m.encode()).unwrap(), m);
    }

    #[test]
    fn integer_entries_accepted() {
        let v = json!({"dom": 1, "cod": 1, "matrix": [[7]]});
        assert_eq!(
            Matrix::<Fp<5>>::decode(&v).unwrap(),
            Matrix::scalar(Fp::new(2))
        );
    }
}
