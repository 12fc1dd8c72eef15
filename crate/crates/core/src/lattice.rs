//! Lattice paths between two nondecreasing height boundaries.
//!
//! A path from `(0, b_1)` to `(n, a_n)` with unit north and east steps is
//! identified with the heights `h_1 <= ... <= h_n` of its east steps; it is
//! admissible when `b_i <= h_i <= a_i` for every `i`. The determinant route
//! and the dynamic-programming route both count these sequences.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::builders::build_path_matrix;
use crate::combinat::ExactInt;
use crate::error::{Error, Result};
use crate::hessmat::det_hessenberg_recurrence;

/// Largest number of height sequences [`enumerate_paths`] will materialize
/// unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Upper heights `a` and lower heights `b`, both nondecreasing, with
/// `a_i >= b_i` and equal nonzero length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoundsDoc", into = "BoundsDoc")]
pub struct BoundaryPair {
    a: Vec<i64>,
    b: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct BoundsDoc {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl TryFrom<BoundsDoc> for BoundaryPair {
    type Error = Error;

    fn try_from(doc: BoundsDoc) -> Result<Self> {
        BoundaryPair::new(doc.a, doc.b)
    }
}

impl From<BoundaryPair> for BoundsDoc {
    fn from(p: BoundaryPair) -> Self {
        BoundsDoc { a: p.a, b: p.b }
    }
}

impl BoundaryPair {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::Validation(format!(
                "boundaries need equal nonzero length, got |a| = {}, |b| = {}",
                a.len(),
                b.len()
            )));
        }
        if let Some(i) = (1..a.len()).find(|&i| a[i - 1] > a[i]) {
            return Err(Error::Validation(format!("a decreases at index {i}")));
        }
        if let Some(i) = (1..b.len()).find(|&i| b[i - 1] > b[i]) {
            return Err(Error::Validation(format!("b decreases at index {i}")));
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i] < b[i]) {
            return Err(Error::Validation(format!(
                "a[{i}] = {} is below b[{i}] = {}",
                a[i], b[i]
            )));
        }
        Ok(BoundaryPair { a, b })
    }

    /// Bounds whose admissible paths are the Dyck paths of length `2n`:
    /// `a_i = i - 1`, `b_i = 0`.
    pub fn dyck(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Range("Dyck bounds need n >= 1".into()));
        }
        Self::new((0..n as i64).collect(), vec![0; n])
    }

    /// Number of east steps.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn upper(&self) -> &[i64] {
        &self.a
    }

    pub fn lower(&self) -> &[i64] {
        &self.b
    }

    pub fn admits(&self, heights: &[i64]) -> bool {
        heights.len() == self.len()
            && heights.windows(2).all(|w| w[0] <= w[1])
            && heights
                .iter()
                .zip(self.a.iter().zip(&self.b))
                .all(|(h, (hi, lo))| lo <= h && h <= hi)
    }

    /// `N`/`E` rendering of the path with the given east-step heights, from
    /// `(0, b_1)` to `(n, a_n)`.
    pub fn step_string(&self, heights: &[i64]) -> String {
        let mut out = String::new();
        let mut y = self.b[0];
        for &h in heights {
            for _ in y..h {
                out.push('N');
            }
            y = y.max(h);
            out.push('E');
        }
        for _ in y..self.a[self.len() - 1] {
            out.push('N');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bounds serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Path count as `det( C(a_i - b_j + 1, j - i + 1) )`.
pub fn count_paths_det(bounds: &BoundaryPair) -> ExactInt {
    det_hessenberg_recurrence(&build_path_matrix(bounds))
}

/// Path count by tabulating, step by step, how many admissible prefixes end
/// at each height.
pub fn count_paths_dp(bounds: &BoundaryPair) -> ExactInt {
    let (a, b) = (bounds.upper(), bounds.lower());
    let base = b[0];
    let width = (a[a.len() - 1] - base + 1) as usize;
    // ways[y - base]: admissible prefixes whose last height is y
    let mut ways = vec![BigInt::zero(); width];
    for slot in &mut ways[0..=(a[0] - base) as usize] {
        *slot = BigInt::from(1);
    }
    for i in 1..a.len() {
        let lo = (b[i] - base) as usize;
        let hi = (a[i] - base) as usize;
        let mut next = vec![BigInt::zero(); width];
        let mut running = BigInt::zero();
        for y in 0..=hi {
            running += &ways[y];
            if y >= lo {
                next[y] = running.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// Every admissible height sequence, in lexicographic order.
///
/// Fails with [`Error::Capacity`] before allocating anything if there are
/// more than `cap` of them.
pub fn enumerate_paths(bounds: &BoundaryPair, cap: usize) -> Result<Vec<Vec<i64>>> {
    let count = count_paths_dp(bounds);
    match count.to_usize() {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::Capacity {
                count: count.to_string(),
                cap,
            })
        }
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut current = Vec::with_capacity(bounds.len());
    extend_paths(bounds, &mut current, &mut out);
    Ok(out)
}

fn extend_paths(bounds: &BoundaryPair, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let i = current.len();
    if i == bounds.len() {
        out.push(current.clone());
        return;
    }
    let floor = current.last().map_or(bounds.b[i], |&h| h.max(bounds.b[i]));
    for h in floor..=bounds.a[i] {
        current.push(h);
        extend_paths(bounds, current, out);
        current.pop();
    }
}

/// Number of Dyck paths with `n` east steps, through the determinant route.
pub fn count_dyck(n: usize) -> Result<ExactInt> {
    Ok(count_paths_det(&BoundaryPair::dyck(n)?))
}
