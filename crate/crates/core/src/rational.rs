//! Exact rational scalars and their string encoding.
//!
//! Rationals are `num_rational::BigRational`, always reduced with a positive
//! denominator. On the wire they are strings of the form `p/q`, or `p` when
//! the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("invalid rational `{s}`"),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn factorial(k: u32) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `prod_i alpha_i!`
pub fn multi_factorial(exps: &[u32]) -> BigInt {
    exps.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Serde adapters that encode rationals as `p/q` strings.
pub mod serde_rational {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(values.iter().map(|v| v.to_string()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|t| parse_rational(t).map_err(de::Error::custom))
                .collect()
        }
    }

    pub mod matrix {
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(
                rows.iter()
                    .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
            )
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let raw = Vec::<Vec<String>>::deserialize(d)?;
            raw.iter()
                .map(|row| {
                    row.iter()
                        .map(|t| parse_rational(t).map_err(de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }

    pub mod option {
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.serialize_some(&v.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| parse_rational(&t).map_err(de::Error::custom))
                .transpose()
        }
    }

    pub mod option_vec {
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(value: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.serialize_some(&v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Vec<Rational>>, D::Error> {
            Option::<Vec<String>>::deserialize(d)?
                .map(|v| {
                    v.iter()
                        .map(|t| parse_rational(t).map_err(de::Error::custom))
                        .collect()
                })
                .transpose()
        }
    }
}
