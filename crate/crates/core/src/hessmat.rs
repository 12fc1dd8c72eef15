//! Integer matrices and two independent exact determinant engines.
//!
//! [`det_hessenberg_recurrence`] expands an upper Hessenberg matrix along its
//! last column, reusing every leading principal minor it has already
//! computed. [`det_bareiss`] is plain fraction-free elimination on a dense
//! matrix and serves as the oracle for the recurrence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{decimal, ExactInt};
use crate::error::{Error, Result};

/// Row-major dense matrix of exact integers. The 0x0 matrix is legal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixDoc", into = "MatrixDoc")]
pub struct DenseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactInt>,
}

/// File layout: `{"rows": R, "cols": C, "entries": ["..", ...]}`, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    #[serde(with = "decimal::vec")]
    entries: Vec<ExactInt>,
}

impl TryFrom<MatrixDoc> for DenseIntMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        DenseIntMatrix::new(doc.rows, doc.cols, doc.entries)
    }
}

impl From<DenseIntMatrix> for MatrixDoc {
    fn from(m: DenseIntMatrix) -> Self {
        MatrixDoc {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries,
        }
    }
}

impl DenseIntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactInt>) -> Result<Self> {
        if rows.checked_mul(cols) != Some(entries.len()) {
            return Err(Error::Validation(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows.saturating_mul(cols),
                entries.len()
            )));
        }
        Ok(DenseIntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExactInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseIntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from nested rows of small integers; all rows must
    /// have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Validation(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        Ok(DenseIntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| BigInt::from(u8::from(i == j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[ExactInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.rows && k <= self.cols);
        Self::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("matrix serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Display for DenseIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Which side of the diagonal carries the band.
///
/// `Upper` means `entry(i, j) = 0` whenever `i > j + 1`; `Lower` is the
/// transpose condition, `entry(i, j) = 0` whenever `j > i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Upper,
    Lower,
}

/// A validated square Hessenberg matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix {
    matrix: DenseIntMatrix,
    orientation: Orientation,
}

impl HessenbergMatrix {
    /// Validates `matrix` as upper Hessenberg.
    pub fn new(matrix: DenseIntMatrix) -> Result<Self> {
        Self::with_orientation(matrix, Orientation::Upper)
    }

    pub fn with_orientation(matrix: DenseIntMatrix, orientation: Orientation) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Validation(format!(
                "Hessenberg matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in 0..n {
                let outside = match orientation {
                    Orientation::Upper => i > j + 1,
                    Orientation::Lower => j > i + 1,
                };
                if outside && !matrix.get(i, j).is_zero() {
                    return Err(Error::Validation(format!(
                        "entry ({i},{j}) = {} lies outside the {orientation:?} Hessenberg band",
                        matrix.get(i, j)
                    )));
                }
            }
        }
        Ok(HessenbergMatrix {
            matrix,
            orientation,
        })
    }

    /// Accepts either orientation, preferring upper when both hold.
    pub fn detect(matrix: DenseIntMatrix) -> Result<Self> {
        match Self::new(matrix.clone()) {
            Ok(h) => Ok(h),
            Err(upper_err) => {
                Self::with_orientation(matrix, Orientation::Lower).map_err(|_| upper_err)
            }
        }
    }

    /// The 0x0 matrix, whose determinant is 1.
    pub fn empty() -> Self {
        HessenbergMatrix {
            matrix: DenseIntMatrix::identity(0),
            orientation: Orientation::Upper,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInt {
        self.matrix.get(i, j)
    }

    pub fn as_dense(&self) -> &DenseIntMatrix {
        &self.matrix
    }

    pub fn into_dense(self) -> DenseIntMatrix {
        self.matrix
    }

    /// True when every entry just off the diagonal on the short side of the
    /// band equals 1.
    pub fn is_normalized(&self) -> bool {
        (1..self.dim()).all(|i| self.upper_view(i, i - 1).is_one())
    }

    /// Entry of the upper Hessenberg form: the matrix itself, or its
    /// transpose for a lower matrix. Both share every leading principal minor.
    fn upper_view(&self, i: usize, j: usize) -> &ExactInt {
        match self.orientation {
            Orientation::Upper => self.matrix.get(i, j),
            Orientation::Lower => self.matrix.get(j, i),
        }
    }
}

/// Determinant by last-column cofactor expansion:
///
/// `det H_k = sum_{r=0}^{k-1} (-1)^(k-1-r) h[r][k-1] * (prod_{t=r}^{k-2} h[t+1][t]) * det H_r`
///
/// with `det H_0 = 1`. Costs O(n^2) big-integer multiplications.
pub fn det_hessenberg_recurrence(h: &HessenbergMatrix) -> ExactInt {
    let mut minors = leading_minors(h, h.dim());
    minors.pop().expect("at least det H_0")
}

/// Leading principal minors `det H_0 .. det H_{k_max}`, produced by one pass
/// of the same recurrence as [`det_hessenberg_recurrence`].
pub fn principal_minors(h: &HessenbergMatrix, k_max: usize) -> Result<Vec<ExactInt>> {
    if k_max > h.dim() {
        return Err(Error::Range(format!(
            "k_max = {k_max} exceeds matrix dimension {}",
            h.dim()
        )));
    }
    Ok(leading_minors(h, k_max))
}

fn leading_minors(h: &HessenbergMatrix, k_max: usize) -> Vec<ExactInt> {
    let mut minors: Vec<ExactInt> = Vec::with_capacity(k_max + 1);
    minors.push(BigInt::one());
    for k in 1..=k_max {
        let col = k - 1;
        let mut acc = BigInt::zero();
        // running product of subdiagonal entries h[t+1][t] for t = r..k-2
        let mut chain = BigInt::one();
        let mut negative = false;
        for r in (0..k).rev() {
            if r < col {
                let sub = h.upper_view(r + 1, r);
                if sub.is_zero() {
                    break;
                }
                chain *= sub;
            }
            let entry = h.upper_view(r, col);
            if !entry.is_zero() && !minors[r].is_zero() {
                let term = &chain * entry * &minors[r];
                if negative {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            negative = !negative;
        }
        minors.push(acc);
    }
    minors
}

/// Determinant by fraction-free (Bareiss) elimination with row swaps on
/// zero pivots. Every division is exact.
pub fn det_bareiss(m: &DenseIntMatrix) -> Result<ExactInt> {
    if !m.is_square() {
        return Err(Error::Validation(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<ExactInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = (&row[j] * &pivot_row[k] - &row[k] * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
