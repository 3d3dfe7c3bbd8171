//! Rationals on the wire as `"p/q"` strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub fn to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"` and `"p"`.
pub fn parse(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_string(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(serde::de::Error::custom)
}

/// Matrices as arrays of rows of `"p/q"` strings.
pub mod matrix {
    use super::*;
    use crate::oracle::Mat;

    pub fn to_json(m: &Mat) -> serde_json::Value {
        serde_json::Value::Array(
            (0..m.rows())
                .map(|i| serde_json::Value::Array(m.row(i).iter().map(|x| to_string(x).into()).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Mat> {
        let bad = || Error::Parse("a matrix is an array of equal-length arrays of rational strings".into());
        let rows = v.as_array().ok_or_else(bad)?;
        let parsed: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| match x {
                        serde_json::Value::String(s) => parse(s),
                        serde_json::Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
                        _ => Err(bad()),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if parsed.iter().any(|r| r.len() != parsed[0].len()) {
            return Err(bad());
        }
        Ok(Mat::from_rows(parsed))
    }
}
