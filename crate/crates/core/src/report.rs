//! Identity sweeps and the reports they produce.
//!
//! Each sweep walks a parameter grid (or a seeded random corpus), compares
//! two or more independent evaluations at every point, and records the
//! points where they differ. Grid points are evaluated in parallel; the
//! report lists them in grid order regardless.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::builders::pascal_table;
use crate::catalan::{catalan_det_prefix, catalan_mingantu_prefix};
use crate::combinat::{catalan_closed, choose, ExactInt};
use crate::error::{Error, Result};
use crate::hessmat::{det_bareiss, det_hessenberg_recurrence};
use crate::lattice::{count_dyck, count_paths_det, count_paths_dp};
use crate::sampling::{
    self, random_boundary_pair, random_hessenberg, random_unit_series, DEFAULT_SEED,
};
use crate::series::{
    binomial_power, reciprocal, reciprocal_via_minors, toeplitz_minors,
    verify_convolution_identity, verify_recurrence_identity, TruncatedSeries,
};

/// Largest boundary height drawn by the `thm3` sweep.
pub const PATH_SWEEP_MAX_HEIGHT: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// Determinant of the deformed Pascal matrix is `C_n`.
    Thm1,
    /// Ming Antu recurrence reproduces `C_n`.
    Thm2,
    /// Binomial path-count determinant equals the DP count.
    Thm3,
    /// Leading minors of `J_{n,m}` are `C(n+k-1, k)`.
    PropA,
    /// Those minors are a column of the square Pascal table.
    PropB,
    /// Alternating convolution of the two binomial rows vanishes.
    PropC,
    /// Order-`n` recurrence for `J_{n,m}`.
    PropD,
    /// Reciprocal engine against convolution and the minors route.
    Recip,
    /// Hessenberg recurrence against Bareiss elimination.
    Hessdet,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Thm3,
        IdentityId::PropA,
        IdentityId::PropB,
        IdentityId::PropC,
        IdentityId::PropD,
        IdentityId::Recip,
        IdentityId::Hessdet,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm3 => "thm3",
            IdentityId::PropA => "prop_a",
            IdentityId::PropB => "prop_b",
            IdentityId::PropC => "prop_c",
            IdentityId::PropD => "prop_d",
            IdentityId::Recip => "recip",
            IdentityId::Hessdet => "hessdet",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(
        params: &[(&str, String)],
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Failure {
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Outcome of one identity sweep. Passes iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub swept_ranges: BTreeMap<String, String>,
    #[serde(serialize_with = "as_decimal")]
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

fn as_decimal<S: serde::Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl VerificationReport {
    fn new(
        identity: IdentityId,
        ranges: &[(&str, String)],
        checked: u64,
        failures: Vec<Failure>,
    ) -> Self {
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            identity,
            swept_ranges: ranges
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            checked,
            failures,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Sweep bounds; `None` picks the identity's default.
#[derive(Clone, Debug, Default)]
pub struct SweepParams {
    pub n_max: Option<u64>,
    pub k_max: Option<u64>,
    pub m_max: Option<u64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub dyck_max: Option<u64>,
}

/// Runs the sweep for `identity` on the current rayon pool.
pub fn run_sweep(identity: IdentityId, p: &SweepParams) -> Result<VerificationReport> {
    let seed = p.seed.unwrap_or(DEFAULT_SEED);
    let report = match identity {
        IdentityId::Thm1 => sweep_catalan_det(p.n_max.unwrap_or(30)),
        IdentityId::Thm2 => sweep_mingantu(p.n_max.unwrap_or(500))?,
        IdentityId::Thm3 => sweep_paths(
            p.trials.unwrap_or(200),
            p.n_max.unwrap_or(8),
            p.dyck_max.unwrap_or(25),
            seed,
        )?,
        IdentityId::PropA => sweep_prop_a(p.n_max.unwrap_or(20), p.k_max.unwrap_or(40))?,
        IdentityId::PropB => sweep_prop_b(p.n_max.unwrap_or(20), p.k_max.unwrap_or(40))?,
        IdentityId::PropC => sweep_prop_c(p.n_max.unwrap_or(20), p.k_max.unwrap_or(40))?,
        IdentityId::PropD => sweep_prop_d(p.n_max.unwrap_or(15), p.m_max.unwrap_or(40))?,
        IdentityId::Recip => sweep_recip(
            p.trials.unwrap_or(100),
            p.m_max.unwrap_or(30),
            p.n_max.unwrap_or(12),
            p.k_max.unwrap_or(50),
            seed,
        )?,
        IdentityId::Hessdet => sweep_hessdet(p.trials.unwrap_or(100), p.n_max.unwrap_or(12), seed)?,
    };
    Ok(report)
}

fn range(lo: u64, hi: u64) -> String {
    format!("{lo}..={hi}")
}

fn sweep_catalan_det(n_max: u64) -> VerificationReport {
    let dets = catalan_det_prefix(n_max as usize);
    let failures = (1..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let want = catalan_closed(n);
            let got = &dets[n as usize];
            (got != &want).then(|| Failure::new(&[("n", n.to_string())], &want, got))
        })
        .collect();
    VerificationReport::new(IdentityId::Thm1, &[("n", range(1, n_max))], n_max, failures)
}

fn sweep_mingantu(n_max: u64) -> Result<VerificationReport> {
    if n_max == 0 {
        return Ok(VerificationReport::new(
            IdentityId::Thm2,
            &[("n", "empty".into())],
            0,
            vec![],
        ));
    }
    let rec = catalan_mingantu_prefix(n_max as usize)?;
    let failures = (1..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let want = catalan_closed(n);
            let got = &rec[n as usize];
            (got != &want).then(|| Failure::new(&[("n", n.to_string())], &want, got))
        })
        .collect();
    Ok(VerificationReport::new(
        IdentityId::Thm2,
        &[("n", range(1, n_max))],
        n_max,
        failures,
    ))
}

fn sweep_paths(trials: u64, n_max: u64, dyck_max: u64, seed: u64) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::Range("thm3 needs --n-max >= 1".into()));
    }
    let mut rng = sampling::seeded(seed);
    let corpus: Vec<_> = (0..trials)
        .map(|_| random_boundary_pair(&mut rng, n_max as usize, PATH_SWEEP_MAX_HEIGHT))
        .collect();
    let mut failures: Vec<Failure> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(t, bounds)| {
            let dp = count_paths_dp(bounds);
            let det = count_paths_det(bounds);
            (dp != det).then(|| {
                Failure::new(
                    &[("trial", t.to_string()), ("bounds", bounds.to_json())],
                    &dp,
                    &det,
                )
            })
        })
        .collect();
    let dyck: Vec<Failure> = (1..=dyck_max)
        .into_par_iter()
        .filter_map(|n| {
            let want = catalan_closed(n);
            let got = count_dyck(n as usize).expect("n >= 1");
            (got != want).then(|| Failure::new(&[("dyck_n", n.to_string())], &want, &got))
        })
        .collect();
    failures.extend(dyck);
    Ok(VerificationReport::new(
        IdentityId::Thm3,
        &[
            ("trials", trials.to_string()),
            ("n", range(1, n_max)),
            ("height", range(0, PATH_SWEEP_MAX_HEIGHT as u64)),
            ("dyck_n", range(1, dyck_max)),
            ("seed", seed.to_string()),
        ],
        trials + dyck_max,
        failures,
    ))
}

/// Runs `check(n)` for `n = 1..=n_max` in parallel and concatenates the
/// per-`n` failures in order.
fn per_n<F>(n_max: u64, check: F) -> Result<Vec<Failure>>
where
    F: Fn(u64) -> Result<Vec<Failure>> + Sync + Send,
{
    let chunks: Result<Vec<Vec<Failure>>> = (1..=n_max).into_par_iter().map(check).collect();
    Ok(chunks?.into_iter().flatten().collect())
}

fn sweep_prop_a(n_max: u64, k_max: u64) -> Result<VerificationReport> {
    let failures = per_n(n_max, |n| {
        let minors = toeplitz_minors(n, k_max as usize)?;
        Ok(minors
            .iter()
            .enumerate()
            .filter_map(|(k, got)| {
                let want = choose(n + k as u64 - 1, k as i64);
                (got != &want).then(|| {
                    Failure::new(&[("n", n.to_string()), ("k", k.to_string())], &want, got)
                })
            })
            .collect())
    })?;
    Ok(VerificationReport::new(
        IdentityId::PropA,
        &[("n", range(1, n_max)), ("k", range(0, k_max))],
        n_max * (k_max + 1),
        failures,
    ))
}

fn sweep_prop_b(n_max: u64, k_max: u64) -> Result<VerificationReport> {
    let failures = per_n(n_max, |n| {
        let minors = toeplitz_minors(n, k_max as usize)?;
        let column = pascal_table(k_max as usize + 1, n as usize - 1)?.highlighted_column();
        Ok(minors
            .iter()
            .zip(&column)
            .enumerate()
            .filter(|(_, (got, want))| got != want)
            .map(|(k, (got, want))| {
                Failure::new(&[("n", n.to_string()), ("k", k.to_string())], want, got)
            })
            .collect())
    })?;
    Ok(VerificationReport::new(
        IdentityId::PropB,
        &[("n", range(1, n_max)), ("k", range(0, k_max))],
        n_max * (k_max + 1),
        failures,
    ))
}

fn sweep_prop_c(n_max: u64, k_max: u64) -> Result<VerificationReport> {
    let failures = per_n(n_max, |n| {
        let mut out = Vec::new();
        for k in 0..=k_max {
            let got = verify_convolution_identity(n, k as usize)?;
            let want = BigInt::from(u8::from(k == 0));
            if got != want {
                out.push(Failure::new(
                    &[("n", n.to_string()), ("k", k.to_string())],
                    &want,
                    &got,
                ));
            }
        }
        Ok(out)
    })?;
    Ok(VerificationReport::new(
        IdentityId::PropC,
        &[("n", range(1, n_max)), ("k", range(0, k_max))],
        n_max * (k_max + 1),
        failures,
    ))
}

fn sweep_prop_d(n_max: u64, m_max: u64) -> Result<VerificationReport> {
    let failures = per_n(n_max, |n| {
        let mut out = Vec::new();
        for m in 0..=m_max {
            let r = verify_recurrence_identity(n, m as usize)?;
            if !r.agrees() {
                let actual = format!(
                    "recurrence={} closed_sum={} det={}",
                    r.lhs_recurrence, r.lhs_closed, r.det_value
                );
                out.push(Failure::new(
                    &[("n", n.to_string()), ("m", m.to_string())],
                    &r.rhs_closed,
                    actual,
                ));
            }
        }
        Ok(out)
    })?;
    Ok(VerificationReport::new(
        IdentityId::PropD,
        &[("n", range(1, n_max)), ("m", range(0, m_max))],
        n_max * (m_max + 1),
        failures,
    ))
}

fn series_text(s: &TruncatedSeries) -> String {
    let parts: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn sweep_recip(
    trials: u64,
    max_order: u64,
    n_max: u64,
    k_max: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let mut rng = sampling::seeded(seed);
    let corpus: Vec<_> = (0..trials)
        .map(|_| random_unit_series(&mut rng, max_order as usize, -9, 9))
        .collect();
    let random: Result<Vec<Option<Failure>>> = corpus
        .par_iter()
        .enumerate()
        .map(|(t, f)| {
            let order = f.order();
            let g = reciprocal(f, order)?;
            let product = f.mul_truncated(&g, order);
            let one = TruncatedSeries::one(order);
            Ok((product != one).then(|| {
                Failure::new(
                    &[("trial", t.to_string()), ("f", series_text(f))],
                    series_text(&one),
                    series_text(&product),
                )
            }))
        })
        .collect();
    let mut failures: Vec<Failure> = random?.into_iter().flatten().collect();
    failures.extend(per_n(n_max, |n| {
        let order = k_max as usize;
        let direct = reciprocal(&binomial_power(n, order), order)?;
        let minors = reciprocal_via_minors(n, order)?;
        Ok((0..=order)
            .filter_map(|k| {
                let mag = choose(n + k as u64 - 1, k as i64);
                let closed: ExactInt = if k % 2 == 1 { -mag } else { mag };
                let (d, m) = (&direct.coeffs()[k], &minors.coeffs()[k]);
                (d != &closed || m != &closed).then(|| {
                    Failure::new(
                        &[("n", n.to_string()), ("k", k.to_string())],
                        &closed,
                        format!("direct={d} minors={m}"),
                    )
                })
            })
            .collect())
    })?);
    Ok(VerificationReport::new(
        IdentityId::Recip,
        &[
            ("trials", trials.to_string()),
            ("order", range(0, max_order)),
            ("n", range(1, n_max)),
            ("k", range(0, k_max)),
            ("seed", seed.to_string()),
        ],
        trials + n_max * (k_max + 1),
        failures,
    ))
}

fn sweep_hessdet(trials: u64, n_max: u64, seed: u64) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::Range("hessdet needs --n-max >= 1".into()));
    }
    let mut rng = sampling::seeded(seed);
    let corpus: Vec<_> = (0..trials)
        .map(|_| random_hessenberg(&mut rng, n_max as usize, -9, 9))
        .collect();
    let failures = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(t, h)| {
            let want = det_bareiss(h.as_dense()).expect("square");
            let got = det_hessenberg_recurrence(h);
            (got != want).then(|| {
                Failure::new(
                    &[("trial", t.to_string()), ("dim", h.dim().to_string())],
                    &want,
                    &got,
                )
            })
        })
        .collect();
    Ok(VerificationReport::new(
        IdentityId::Hessdet,
        &[
            ("trials", trials.to_string()),
            ("n", range(1, n_max)),
            ("entries", "-9..=9".into()),
            ("seed", seed.to_string()),
        ],
        trials,
        failures,
    ))
}
