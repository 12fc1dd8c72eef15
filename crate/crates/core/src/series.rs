//! Truncated integer power series and the identities linking the reciprocal
//! of `(1 + z)^n` to the principal minors of the binomial Toeplitz-Hessenberg
//! matrix `J_{n,m}`.
//!
//! The reciprocal has three independent descriptions here: the convolution
//! recurrence of [`reciprocal`], the signed leading minors of `J` in
//! [`reciprocal_via_minors`], and the closed form `(-1)^k C(n + k - 1, k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::builders::build_toeplitz_hessenberg;
use crate::combinat::{choose, decimal, ExactInt};
use crate::error::{Error, Result};
use crate::hessmat::principal_minors;

/// Coefficients `c_0 ..= c_m` of a power series modulo `z^(m+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesDoc", into = "SeriesDoc")]
pub struct TruncatedSeries {
    coeffs: Vec<ExactInt>,
}

/// File layout: `{"coeffs": ["..", ...], "order": m}`.
#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    #[serde(with = "decimal::vec")]
    coeffs: Vec<ExactInt>,
    order: usize,
}

impl TryFrom<SeriesDoc> for TruncatedSeries {
    type Error = Error;

    fn try_from(doc: SeriesDoc) -> Result<Self> {
        if doc.coeffs.len() != doc.order + 1 {
            return Err(Error::Validation(format!(
                "series of order {} needs {} coefficients, got {}",
                doc.order,
                doc.order + 1,
                doc.coeffs.len()
            )));
        }
        TruncatedSeries::new(doc.coeffs)
    }
}

impl From<TruncatedSeries> for SeriesDoc {
    fn from(s: TruncatedSeries) -> Self {
        let order = s.order();
        SeriesDoc {
            coeffs: s.coeffs,
            order,
        }
    }
}

impl TruncatedSeries {
    /// Needs at least the constant coefficient.
    pub fn new(coeffs: Vec<ExactInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Validation(
                "series needs at least one coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + 0 z + ... + 0 z^order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    /// Truncation degree, inclusive.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the stored order.
    pub fn coeff(&self, k: usize) -> ExactInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Product of `self` and `other`, truncated to `order`.
    pub fn mul_truncated(&self, other: &TruncatedSeries, order: usize) -> TruncatedSeries {
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `(1 + z)^n` truncated to `order`.
pub fn binomial_power(n: u64, order: usize) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: (0..=order).map(|k| choose(n, k as i64)).collect(),
    }
}

/// Multiplicative inverse of `f` modulo `z^(order+1)`:
/// `g_0 = 1`, `g_k = -sum_{i=1}^{k} f_i g_{k-i}`.
///
/// `f` must have constant term exactly 1 so the result stays integral.
pub fn reciprocal(f: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if !f.coeffs[0].is_one() {
        return Err(Error::Domain(format!(
            "reciprocal needs constant term 1, got {}",
            f.coeffs[0]
        )));
    }
    let mut g: Vec<ExactInt> = Vec::with_capacity(order + 1);
    g.push(BigInt::one());
    for k in 1..=order {
        let mut acc = BigInt::zero();
        for i in 1..=k.min(f.order()) {
            if !f.coeffs[i].is_zero() {
                acc += &f.coeffs[i] * &g[k - i];
            }
        }
        g.push(-acc);
    }
    Ok(TruncatedSeries { coeffs: g })
}

/// Reciprocal of `(1 + z)^n` read off the leading principal minors of
/// `J_{n,order}`: `g_k = (-1)^k M_{n,k}`.
pub fn reciprocal_via_minors(n: u64, order: usize) -> Result<TruncatedSeries> {
    if n < 1 {
        return Err(Error::Range("reciprocal_via_minors needs n >= 1".into()));
    }
    let minors = toeplitz_minors(n, order)?;
    let coeffs = minors
        .into_iter()
        .enumerate()
        .map(|(k, m)| if k % 2 == 1 { -m } else { m })
        .collect();
    Ok(TruncatedSeries { coeffs })
}

/// `M_{n,0} ..= M_{n,k_max}`, the leading principal minors of `J_{n,k_max}`.
pub fn toeplitz_minors(n: u64, k_max: usize) -> Result<Vec<ExactInt>> {
    if k_max == 0 {
        if n < 1 {
            return Err(Error::Range("Toeplitz minors need n >= 1".into()));
        }
        return Ok(vec![BigInt::one()]);
    }
    let j = build_toeplitz_hessenberg(n, k_max)?;
    principal_minors(&j, k_max)
}

/// Raw value of `sum_{i=0}^{k} (-1)^i C(n+i-1, i) C(n, k-i)`.
///
/// This is the `z^k` coefficient of `(1+z)^n` times its reciprocal, so it is
/// 0 for every `k >= 1` and 1 at `k = 0`; the sum is returned unadjusted.
pub fn verify_convolution_identity(n: u64, k: usize) -> Result<ExactInt> {
    if n < 1 {
        return Err(Error::Range("convolution identity needs n >= 1".into()));
    }
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let term = choose(n + i as u64 - 1, i as i64) * choose(n, (k - i) as i64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The four evaluations of `J_{n,m}` compared by [`verify_recurrence_identity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCheck {
    /// `sum_{h=1}^{min(n,m)} (-1)^(h+1) C(n,h) J_{n,m-h}` with `J_{n,0} = 1`.
    #[serde(with = "decimal")]
    pub lhs_recurrence: ExactInt,
    /// The same sum with `J_{n,m-h}` replaced by `C(n+m-h-1, m-h)`.
    #[serde(with = "decimal")]
    pub lhs_closed: ExactInt,
    /// `C(n+m-1, m)`.
    #[serde(with = "decimal")]
    pub rhs_closed: ExactInt,
    /// `det J_{n,m}`, 1 for `m = 0`.
    #[serde(with = "decimal")]
    pub det_value: ExactInt,
}

impl RecurrenceCheck {
    pub fn agrees(&self) -> bool {
        self.lhs_recurrence == self.rhs_closed
            && self.lhs_closed == self.rhs_closed
            && self.det_value == self.rhs_closed
    }
}

/// Evaluates the order-`n` recurrence for `J_{n,m}` against the closed form
/// and the determinant. For `m = 0` the empty sum is replaced by the base
/// value `J_{n,0} = 1`.
pub fn verify_recurrence_identity(n: u64, m: usize) -> Result<RecurrenceCheck> {
    if n < 1 {
        return Err(Error::Range("recurrence identity needs n >= 1".into()));
    }
    let minors = toeplitz_minors(n, m)?;
    let det_value = minors[m].clone();
    let (lhs_recurrence, lhs_closed) = if m == 0 {
        (BigInt::one(), BigInt::one())
    } else {
        let mut rec = BigInt::zero();
        let mut closed = BigInt::zero();
        for h in 1..=(n as usize).min(m) {
            let weight = choose(n, h as i64);
            let r = &weight * &minors[m - h];
            let c = weight * choose(n + (m - h) as u64 - 1, (m - h) as i64);
            if h % 2 == 1 {
                rec += r;
                closed += c;
            } else {
                rec -= r;
                closed -= c;
            }
        }
        (rec, closed)
    };
    Ok(RecurrenceCheck {
        lhs_recurrence,
        lhs_closed,
        rhs_closed: choose(n + m as u64 - 1, m as i64),
        det_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c).unwrap()
    }

    fn big(v: i64) -> ExactInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_power_examples() {
        assert_eq!(binomial_power(2, 3), series(&[1, 2, 1, 0]));
        assert_eq!(binomial_power(8, 2), series(&[1, 8, 28]));
        assert_eq!(binomial_power(0, 2), series(&[1, 0, 0]));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            reciprocal(&series(&[1, 2, 1]), 3).unwrap(),
            series(&[1, -2, 3, -4])
        );
        assert_eq!(
            reciprocal(&series(&[1]), 4).unwrap(),
            series(&[1, 0, 0, 0, 0])
        );
        assert_eq!(
            reciprocal(&binomial_power(8, 2), 2).unwrap(),
            series(&[1, -8, 36])
        );
    }

    #[test]
    fn reciprocal_rejects_non_unit_constant() {
        assert!(matches!(
            reciprocal(&series(&[2, 1]), 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            reciprocal(&series(&[-1, 1]), 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reciprocal_of_geometric_series() {
        // 1/(1 - z) = 1 + z + z^2 + ...
        assert_eq!(
            reciprocal(&series(&[1, -1]), 4).unwrap(),
            series(&[1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn minors_route_examples() {
        assert_eq!(
            reciprocal_via_minors(2, 4).unwrap(),
            series(&[1, -2, 3, -4, 5])
        );
        assert_eq!(reciprocal_via_minors(8, 2).unwrap(), series(&[1, -8, 36]));
        assert_eq!(reciprocal_via_minors(5, 0).unwrap(), series(&[1]));
        assert!(reciprocal_via_minors(0, 3).is_err());
    }

    #[test]
    fn convolution_identity_examples() {
        assert_eq!(verify_convolution_identity(2, 1).unwrap(), big(0));
        assert_eq!(verify_convolution_identity(2, 2).unwrap(), big(0));
        assert_eq!(verify_convolution_identity(5, 0).unwrap(), big(1));
    }

    #[test]
    fn recurrence_identity_examples() {
        let r = verify_recurrence_identity(2, 2).unwrap();
        assert_eq!(
            (
                r.lhs_recurrence.clone(),
                r.rhs_closed.clone(),
                r.det_value.clone()
            ),
            (big(3), big(3), big(3))
        );
        let r = verify_recurrence_identity(1, 5).unwrap();
        assert!(r.agrees());
        assert_eq!(r.rhs_closed, big(1));
        let r = verify_recurrence_identity(8, 2).unwrap();
        assert!(r.agrees());
        assert_eq!(r.det_value, big(36));
        let r = verify_recurrence_identity(4, 0).unwrap();
        assert!(r.agrees());
    }

    #[test]
    fn product_truncates() {
        let f = series(&[1, 1]);
        assert_eq!(f.mul_truncated(&f, 1), series(&[1, 2]));
        assert_eq!(f.mul_truncated(&f, 3), series(&[1, 2, 1, 0]));
    }

    #[test]
    fn json_document() {
        let s = series(&[1, -2, 3]);
        assert_eq!(s.to_json(), r#"{"coeffs":["1","-2","3"],"order":2}"#);
        assert_eq!(TruncatedSeries::from_json(&s.to_json()).unwrap(), s);
        assert!(TruncatedSeries::from_json(r#"{"coeffs":["1","2"],"order":2}"#).is_err());
        assert!(TruncatedSeries::from_json(r#"{"coeffs":[],"order":0}"#).is_err());
    }
}
