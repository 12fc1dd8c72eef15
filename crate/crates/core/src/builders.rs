//! Constructors for the binomial matrices: the deformed Pascal matrix whose
//! minors are Catalan numbers, the Toeplitz-Hessenberg matrix of `(1+z)^n`,
//! the lattice-path matrix, and the square Pascal table.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{choose, decimal, ExactInt};
use crate::error::{Error, Result};
use crate::hessmat::{DenseIntMatrix, HessenbergMatrix, Orientation};
use crate::lattice::BoundaryPair;

/// `n x n` matrix with `entry(i, j) = C(i + 1, j - i + 1)` (0-indexed).
///
/// Row `i` is row `i + 1` of Pascal's triangle shifted so that `C(i+1, 1)`
/// sits on the diagonal. The 0x0 case is [`HessenbergMatrix::empty`].
pub fn build_deformed_pascal(n: usize) -> Result<HessenbergMatrix> {
    if n < 1 {
        return Err(Error::Range(
            "deformed Pascal matrix needs n >= 1 (use HessenbergMatrix::empty for n = 0)".into(),
        ));
    }
    let m = DenseIntMatrix::from_fn(n, n, |i, j| choose(i as u64 + 1, j as i64 - i as i64 + 1));
    HessenbergMatrix::new(m)
}

/// `m x m` Toeplitz matrix `J` with `entry(i, j) = C(n, i - j + 1)`.
///
/// The superdiagonal is all ones, the diagonal is `n`, and `C(n, 2..=n)`
/// runs down the first column, so the band lies below the diagonal and the
/// result carries [`Orientation::Lower`]. Any `m >= 1` is accepted.
pub fn build_toeplitz_hessenberg(n: u64, m: usize) -> Result<HessenbergMatrix> {
    if n < 1 || m < 1 {
        return Err(Error::Range(format!(
            "Toeplitz-Hessenberg matrix needs n >= 1 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    // a diagonal offset d = i - j + 1 only takes values in -m+2 ..= m
    let band: Vec<ExactInt> = (0..=m as i64).map(|d| choose(n, d)).collect();
    let dense = DenseIntMatrix::from_fn(m, m, |i, j| {
        let d = i as i64 - j as i64 + 1;
        if d < 0 {
            BigInt::from(0)
        } else {
            band[d as usize].clone()
        }
    });
    HessenbergMatrix::with_orientation(dense, Orientation::Lower)
}

/// `n x n` matrix with `entry(i, j) = C(a_i - b_j + 1, j - i + 1)`.
///
/// An upper index below zero means no admissible strictly increasing run of
/// heights fits, so the entry is 0.
pub fn build_path_matrix(bounds: &BoundaryPair) -> HessenbergMatrix {
    let (a, b) = (bounds.upper(), bounds.lower());
    let n = a.len();
    let dense = DenseIntMatrix::from_fn(n, n, |i, j| {
        let top = a[i] - b[j] + 1;
        if top < 0 {
            BigInt::from(0)
        } else {
            choose(top as u64, j as i64 - i as i64 + 1)
        }
    });
    HessenbergMatrix::new(dense).expect("path matrix is upper Hessenberg by the zero convention")
}

/// Square arrangement of Pascal's triangle, `entry(r, c) = C(r + c, c)`,
/// with one highlighted column.
///
/// The arrangement is symmetric, so column `c` and row `c` carry the same
/// values; only the column is marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalTable {
    rows: usize,
    cols: usize,
    highlight: usize,
    entries: Vec<Vec<ExactInt>>,
}

/// Builds the table with `rows` rows and `max(rows, highlight_col + 1)`
/// columns.
pub fn pascal_table(rows: usize, highlight_col: usize) -> Result<PascalTable> {
    if rows < 1 {
        return Err(Error::Range("Pascal table needs at least one row".into()));
    }
    let cols = rows.max(highlight_col + 1);
    let entries = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| choose((r + c) as u64, c as i64))
                .collect()
        })
        .collect();
    Ok(PascalTable {
        rows,
        cols,
        highlight: highlight_col,
        entries,
    })
}

#[derive(Serialize)]
struct TableDoc<'a> {
    rows: String,
    cols: String,
    highlight: String,
    #[serde(with = "decimal::vec")]
    highlighted: &'a [ExactInt],
    entries: Vec<Vec<String>>,
}

impl PascalTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn highlight(&self) -> usize {
        self.highlight
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactInt {
        &self.entries[r][c]
    }

    /// Values of the highlighted column, top to bottom.
    pub fn highlighted_column(&self) -> Vec<ExactInt> {
        self.entries
            .iter()
            .map(|row| row[self.highlight].clone())
            .collect()
    }

    /// CSV with header `row,highlight,c0,...`; the `highlight` field repeats
    /// the highlighted column's value for that row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,highlight");
        for c in 0..self.cols {
            write!(out, ",c{c}").unwrap();
        }
        out.push('\n');
        for (r, row) in self.entries.iter().enumerate() {
            write!(out, "{r},{}", row[self.highlight]).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Right-aligned plain text; highlighted cells are wrapped in `*`.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(c, v)| {
                        if c == self.highlight {
                            format!("*{v}*")
                        } else {
                            v.to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let highlighted = self.highlighted_column();
        let doc = TableDoc {
            rows: self.rows.to_string(),
            cols: self.cols.to_string(),
            highlight: self.highlight.to_string(),
            highlighted: &highlighted,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> DenseIntMatrix {
        DenseIntMatrix::from_rows(rows).unwrap()
    }

    fn bigs(vals: &[i64]) -> Vec<ExactInt> {
        vals.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn deformed_pascal_small() {
        assert_eq!(
            build_deformed_pascal(1).unwrap().as_dense(),
            &dense(&[&[1]])
        );
        assert_eq!(
            build_deformed_pascal(2).unwrap().as_dense(),
            &dense(&[&[1, 0], &[1, 2]])
        );
        assert_eq!(
            build_deformed_pascal(3).unwrap().as_dense(),
            &dense(&[&[1, 0, 0], &[1, 2, 1], &[0, 1, 3]])
        );
        assert!(matches!(build_deformed_pascal(0), Err(Error::Range(_))));
    }

    #[test]
    fn deformed_pascal_rows_are_shifted_pascal_rows() {
        let a = build_deformed_pascal(6).unwrap();
        assert!(a.is_normalized());
        // row 4 (0-indexed) holds C(5,0), C(5,1), C(5,2) starting at column 3
        assert_eq!(a.get(4, 3), &BigInt::from(1));
        assert_eq!(a.get(4, 4), &BigInt::from(5));
        assert_eq!(a.get(4, 5), &BigInt::from(10));
    }

    #[test]
    fn toeplitz_examples() {
        assert_eq!(
            build_toeplitz_hessenberg(2, 3).unwrap().as_dense(),
            &dense(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])
        );
        assert_eq!(
            build_toeplitz_hessenberg(8, 2).unwrap().as_dense(),
            &dense(&[&[8, 1], &[28, 8]])
        );
        assert_eq!(
            build_toeplitz_hessenberg(1, 2).unwrap().as_dense(),
            &dense(&[&[1, 1], &[0, 1]])
        );
        assert!(build_toeplitz_hessenberg(0, 2).is_err());
        assert!(build_toeplitz_hessenberg(3, 0).is_err());
    }

    #[test]
    fn toeplitz_first_column_is_binomial_row() {
        let j = build_toeplitz_hessenberg(5, 8).unwrap();
        let col: Vec<ExactInt> = (0..8).map(|i| j.get(i, 0).clone()).collect();
        assert_eq!(col, bigs(&[5, 10, 10, 5, 1, 0, 0, 0]));
        assert_eq!(j.orientation(), Orientation::Lower);
    }

    #[test]
    fn toeplitz_is_constant_along_diagonals() {
        for n in 1..=9 {
            for m in 1..=12 {
                let j = build_toeplitz_hessenberg(n, m).unwrap();
                for i in 0..m - 1 {
                    for k in 0..m - 1 {
                        assert_eq!(j.get(i, k), j.get(i + 1, k + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn path_matrix_examples() {
        let p = build_path_matrix(&BoundaryPair::new(vec![1, 2, 2], vec![0, 0, 1]).unwrap());
        assert_eq!(p.as_dense(), &dense(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]));
        let p = build_path_matrix(&BoundaryPair::new(vec![0], vec![0]).unwrap());
        assert_eq!(p.as_dense(), &dense(&[&[1]]));
    }

    #[test]
    fn path_matrix_specializes_to_deformed_pascal() {
        for n in 1..=20usize {
            let bounds = BoundaryPair::new((0..n as i64).collect(), vec![0; n]).unwrap();
            assert_eq!(
                build_path_matrix(&bounds),
                build_deformed_pascal(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn path_matrix_negative_upper_index_is_zero() {
        let p = build_path_matrix(&BoundaryPair::new(vec![0, 5], vec![0, 5]).unwrap());
        assert_eq!(p.get(0, 1), &BigInt::from(0));
    }

    #[test]
    fn table_highlighted_columns() {
        let t = pascal_table(9, 7).unwrap();
        assert_eq!(
            t.highlighted_column(),
            bigs(&[1, 8, 36, 120, 330, 792, 1716, 3432, 6435])
        );
        let t = pascal_table(5, 2).unwrap();
        assert_eq!(t.highlighted_column(), bigs(&[1, 3, 6, 10, 15]));
        let t = pascal_table(1, 0).unwrap();
        assert_eq!(t.cols(), 1);
        assert_eq!(t.highlighted_column(), bigs(&[1]));
        assert!(pascal_table(0, 0).is_err());
    }

    #[test]
    fn table_is_symmetric_and_widens_for_far_highlight() {
        let t = pascal_table(6, 6).unwrap();
        assert_eq!((t.rows(), t.cols()), (6, 7));
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(t.get(r, c), t.get(c, r));
            }
        }
    }

    #[test]
    fn table_renderings() {
        let t = pascal_table(2, 1).unwrap();
        assert_eq!(t.to_csv(), "row,highlight,c0,c1\n0,1,1,1\n1,2,1,2\n");
        assert_eq!(t.to_text(), "1 *1*\n1 *2*\n");
        assert_eq!(
            t.to_json(),
            r#"{"rows":"2","cols":"2","highlight":"1","highlighted":["1","2"],"entries":[["1","1"],["1","2"]]}"#
        );
    }
}
