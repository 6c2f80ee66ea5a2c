//! Kostant partition function of affine `sl2`.
//!
//! Counts multisets of positive roots of the horizontal affine subalgebra
//! (each root space one-dimensional) with a prescribed sum. This never
//! touches the PBW engine and serves as its independent dimension check.

use crate::error::{Error, Result};
use crate::roots::RootVector;

/// Positive affine roots with both simple-root coordinates bounded by
/// `(max0, max1)`, as `(a0, a1)` pairs.
fn positive_roots_within(max0: i64, max1: i64) -> Vec<(i64, i64)> {
    let mut roots = Vec::new();
    for k in 0..=max0.max(max1) {
        // α + kδ, −α + kδ (k ≥ 1), kδ (k ≥ 1)
        roots.push((k, k + 1));
        if k >= 1 {
            roots.push((k, k - 1));
            roots.push((k, k));
        }
    }
    roots.retain(|&(a0, a1)| a0 <= max0 && a1 <= max1);
    roots
}

/// Number of ways to write `a0·α_0 + a1·α_1` as an unordered sum of
/// positive affine roots.
pub fn partition_count(a0: i64, a1: i64) -> u128 {
    if a0 < 0 || a1 < 0 {
        return 0;
    }
    let (w0, w1) = (a0 as usize + 1, a1 as usize + 1);
    let mut table = vec![0u128; w0 * w1];
    table[0] = 1;
    // unbounded knapsack, one root at a time
    for (r0, r1) in positive_roots_within(a0, a1) {
        let (r0, r1) = (r0 as usize, r1 as usize);
        for i in r0..w0 {
            for j in r1..w1 {
                table[i * w1 + j] += table[(i - r0) * w1 + (j - r1)];
            }
        }
    }
    table[w0 * w1 - 1]
}

/// Dimension of the `λ − η` weight space of the Verma module for
/// `η ∈ Q1+`.
pub fn dim_oracle(eta: &RootVector) -> Result<u128> {
    let (a0, a1) = eta
        .affine_coords()
        .ok_or_else(|| Error::NotInAffineLattice(eta.to_string()))?;
    Ok(partition_count(a0, a1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(dim_oracle(&RootVector::ZERO).unwrap(), 1);
        assert_eq!(dim_oracle(&RootVector::ALPHA).unwrap(), 1);
        // α+δ1 = 2α + α_0: {α+δ1}, {α, δ1}, {α, α, −α+δ1}
        assert_eq!(dim_oracle(&RootVector::new(1, 1, 0)).unwrap(), 3);
        // 2δ: {2δ}, {δ,δ}, {δ,α0,α1}, {α+δ,α0}, {−α+2δ,α1}, {α0,α0,α1,α1}
        assert_eq!(dim_oracle(&RootVector::new(0, 2, 0)).unwrap(), 6);
        assert_eq!(partition_count(1, 0), 1);
        assert_eq!(partition_count(2, 0), 1);
        assert_eq!(partition_count(0, 3), 1);
    }

    #[test]
    fn rejects_outside_lattice() {
        assert!(dim_oracle(&RootVector::new(-1, 0, 0)).is_err());
        assert!(dim_oracle(&RootVector::new(0, 1, -1)).is_err());
    }

    /// Brute force over explicit multisets for a few small weights.
    #[test]
    fn agrees_with_brute_force() {
        fn brute(target: (i64, i64), roots: &[(i64, i64)], start: usize) -> u128 {
            if target == (0, 0) {
                return 1;
            }
            let mut total = 0;
            for i in start..roots.len() {
                let (r0, r1) = roots[i];
                if r0 <= target.0 && r1 <= target.1 {
                    total += brute((target.0 - r0, target.1 - r1), roots, i);
                }
            }
            total
        }
        for a0 in 0..=4 {
            for a1 in 0..=4 {
                let roots = positive_roots_within(a0, a1);
                assert_eq!(
                    partition_count(a0, a1),
                    brute((a0, a1), &roots, 0),
                    "{a0},{a1}"
                );
            }
        }
    }
}
