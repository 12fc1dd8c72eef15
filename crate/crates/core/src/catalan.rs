//! Catalan numbers by the deformed-Pascal determinant and by the Ming Antu
//! recurrence. [`crate::combinat::catalan_closed`] is the oracle for both.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::builders::build_deformed_pascal;
use crate::combinat::ExactInt;
use crate::error::{Error, Result};
use crate::hessmat::{det_hessenberg_recurrence, principal_minors, HessenbergMatrix};

/// `C_n` as the determinant of the `n x n` deformed Pascal matrix; `C_0 = 1`
/// is the empty determinant.
pub fn catalan_det(n: usize) -> ExactInt {
    if n == 0 {
        return det_hessenberg_recurrence(&HessenbergMatrix::empty());
    }
    let a = build_deformed_pascal(n).expect("n >= 1");
    det_hessenberg_recurrence(&a)
}

/// `C_0 ..= C_n` as the leading principal minors of one deformed Pascal
/// matrix.
pub fn catalan_det_prefix(n: usize) -> Vec<ExactInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let a = build_deformed_pascal(n).expect("n >= 1");
    principal_minors(&a, n).expect("k_max = n")
}

/// `C_n` by the Ming Antu recurrence
/// `C_n = sum_{j >= 1} (-1)^(j-1) C_{n-j} C(n-j+1, j)`.
pub fn catalan_mingantu(n: usize) -> Result<ExactInt> {
    let mut prefix = catalan_mingantu_prefix(n)?;
    Ok(prefix.pop().expect("prefix holds C_0..=C_n"))
}

/// `C_0 ..= C_n` by the Ming Antu recurrence, each term reusing the earlier
/// ones. O(n^2) big-integer operations in total.
pub fn catalan_mingantu_prefix(n: usize) -> Result<Vec<ExactInt>> {
    if n < 1 {
        return Err(Error::Range(format!(
            "Ming Antu recurrence starts at C_1, got n = {n}"
        )));
    }
    let mut c: Vec<ExactInt> = Vec::with_capacity(n + 1);
    c.push(BigInt::one());
    c.push(BigInt::one());
    for k in 2..=n {
        c.push(mingantu_step(&c, k));
    }
    Ok(c)
}

fn mingantu_step(prev: &[ExactInt], k: usize) -> ExactInt {
    let mut acc = BigInt::zero();
    // binom = C(k - j + 1, j), walked forward in j:
    // C(N - 1, j + 1) = C(N, j) (N - j)(N - j - 1) / ((j + 1) N)
    let mut binom = BigInt::from(k);
    let mut j = 1;
    while k + 1 >= 2 * j {
        let term = &prev[k - j] * &binom;
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
        let top = k - j + 1;
        if top < j + 2 {
            break;
        }
        binom *= (top - j) * (top - j - 1);
        binom /= (j + 1) * top;
        j += 1;
    }
    acc
}
