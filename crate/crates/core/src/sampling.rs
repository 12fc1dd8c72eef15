//! Seeded generators for the randomized cross-checks. ChaCha8 keeps the
//! streams identical across platforms and releases.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hessmat::{DenseIntMatrix, HessenbergMatrix};
use crate::lattice::BoundaryPair;
use crate::series::TruncatedSeries;

pub const DEFAULT_SEED: u64 = 2024;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A valid boundary pair of length `1..=max_n` with heights in `0..=max_height`.
///
/// `b` is drawn nondecreasing in `0..=min(5, max_height)`, `a` is `b` plus
/// independent increments, clamped, re-sorted, and lifted back above `b`.
pub fn random_boundary_pair<R: Rng>(rng: &mut R, max_n: usize, max_height: i64) -> BoundaryPair {
    assert!(max_n >= 1 && max_height >= 0);
    let b_top = max_height.min(5);
    loop {
        let n = rng.gen_range(1..=max_n);
        let mut b: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=b_top)).collect();
        b.sort_unstable();
        let mut a: Vec<i64> = b
            .iter()
            .map(|&lo| (lo + rng.gen_range(0..=max_height)).min(max_height))
            .collect();
        a.sort_unstable();
        for (hi, &lo) in a.iter_mut().zip(&b) {
            *hi = (*hi).max(lo);
        }
        if let Ok(pair) = BoundaryPair::new(a, b) {
            return pair;
        }
    }
}

/// Upper Hessenberg matrix of size `1..=max_n` with band entries uniform in
/// `lo..=hi`.
pub fn random_hessenberg<R: Rng>(rng: &mut R, max_n: usize, lo: i64, hi: i64) -> HessenbergMatrix {
    let n = rng.gen_range(1..=max_n);
    let dense = DenseIntMatrix::from_fn(n, n, |i, j| {
        if i > j + 1 {
            BigInt::from(0)
        } else {
            BigInt::from(rng.gen_range(lo..=hi))
        }
    });
    HessenbergMatrix::new(dense).expect("band respected")
}

/// Series of order `0..=max_order` with constant term 1 and the remaining
/// coefficients uniform in `lo..=hi`.
pub fn random_unit_series<R: Rng>(
    rng: &mut R,
    max_order: usize,
    lo: i64,
    hi: i64,
) -> TruncatedSeries {
    let order = rng.gen_range(0..=max_order);
    let coeffs = std::iter::once(BigInt::from(1))
        .chain((0..order).map(|_| BigInt::from(rng.gen_range(lo..=hi))))
        .collect();
    TruncatedSeries::new(coeffs).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_pairs_stay_in_range() {
        let mut rng = seeded(7);
        for _ in 0..500 {
            let p = random_boundary_pair(&mut rng, 8, 10);
            assert!((1..=8).contains(&p.len()));
            assert!(p.upper().iter().all(|&h| (0..=10).contains(&h)));
            assert!(p.lower().iter().all(|&h| (0..=5).contains(&h)));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<_> = (0..20)
            .map(|_| random_boundary_pair(&mut seeded(3), 8, 10))
            .collect();
        let b: Vec<_> = (0..20)
            .map(|_| random_boundary_pair(&mut seeded(3), 8, 10))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_series_have_unit_constant() {
        let mut rng = seeded(11);
        for _ in 0..100 {
            let s = random_unit_series(&mut rng, 30, -9, 9);
            assert_eq!(s.coeffs()[0], BigInt::from(1));
            assert!(s.order() <= 30);
        }
    }
}
