//! Exact integer scalars: binomial coefficients and the closed-form Catalan
//! numbers used as an oracle by the determinant routes.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer; every scalar in the crate is one.
///
/// On the wire it is always a decimal string with an optional leading `-`.
pub type ExactInt = BigInt;

/// Binomial coefficient `C(n, k)` with the zero-fill convention: the result
/// is 0 whenever `k < 0` or `k > n`.
///
/// A negative upper index is rejected.
pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "binomial upper index must be nonnegative, got {n}"
        )));
    }
    Ok(choose(n as u64, k))
}

/// Infallible form of [`binomial`] for an upper index known to be nonnegative.
pub fn choose(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc = C(n - k + i, i) after step i, so each division is exact
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan_closed(n: u64) -> ExactInt {
    choose(2 * n, n as i64) / (n + 1)
}

/// Parses a decimal string (optional leading `-`) into an [`ExactInt`].
pub fn parse_exact(text: &str) -> Result<ExactInt> {
    let trimmed = text.trim();
    let digits = trimmed.strip_prefix('-').unwrap_or(trimmed);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal integer: {text:?}")));
    }
    trimmed
        .parse()
        .map_err(|e| Error::Parse(format!("not a decimal integer: {text:?} ({e})")))
}

/// Serde adapters that write [`ExactInt`] values as decimal strings.
pub mod decimal {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_exact, ExactInt};

    pub fn serialize<S: Serializer>(value: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactInt, D::Error> {
        let text = String::deserialize(d)?;
        parse_exact(&text).map_err(de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{de, Deserialize, Deserializer, Serializer};

        use super::super::{parse_exact, ExactInt};

        pub fn serialize<S: Serializer>(values: &[ExactInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<ExactInt>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|t| parse_exact(t).map_err(de::Error::custom))
                .collect()
        }
    }
}
