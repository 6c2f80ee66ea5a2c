//! Reducibility of `M(λ)` through the Kac–Kazhdan condition over the
//! horizontal affine subalgebra.
//!
//! For a positive real affine root `β = ±α + kδ1` the coroot is
//! `±α∨ + k·c1`, and with `ρ = (1, 2, 2, 0, 0)`
//!
//! ```text
//! (λ+ρ)(β∨) = ±(n1 + 1) + k·(k1 + 2).
//! ```
//!
//! Imaginary roots `kδ1` only resonate at the critical level `k1 = −2`,
//! which the standing assumption `k1 ≥ 0` excludes.
//!
//! # Deciding existence exactly
//!
//! Write `a = n1 + 1` and `s = k1 + 2 > 0`. The two families `a + k·s`
//! (`k ≥ 0`) and `−a + k·s` (`k ≥ 1`) are arithmetic progressions with
//! positive step. Both are positive once `k ≥ K := max(1, ⌈(|n1| + 2)/s⌉)`,
//! because `|a| ≤ |n1| + 1 < K·s`. The fractional part of `k·s` repeats with
//! period equal to the denominator of `s`, which divides
//! `q := lcm(den(a), den(s))`. A value in `[K, K + q)` therefore hits every
//! residue that any later `k` can hit, and any integer value in `[0, K)`
//! is checked directly. Scanning `k ≤ K + q` decides existence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::rational::{int, is_positive_integer, Rational};
use crate::roots::{coroot, rho, RootVector, Weight};
use crate::verma::HighestWeight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonancePair {
    pub beta: RootVector,
    pub l: u64,
    pub quotient_weight: Weight,
}

impl ResonancePair {
    /// `l·β` as an element of `Q1+`.
    pub fn eta(&self) -> RootVector {
        (self.l as i64) * self.beta
    }

    pub fn depth(&self) -> i64 {
        self.eta()
            .depth()
            .expect("positive affine roots lie in Q1+")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let (a0, a1) = self.beta.affine_coords().unwrap_or_default();
        serde_json::json!({
            "beta": self.beta.to_string(),
            "beta_coords": [a0, a1],
            "l": self.l,
            "quotient_weight": self.quotient_weight.to_json_value(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub verdict: bool,
    #[serde(serialize_with = "ser_pairs")]
    pub witnesses: Vec<ResonancePair>,
    pub scan_bound: u64,
}

fn ser_pairs<S: serde::Serializer>(
    pairs: &[ResonancePair],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<_> = pairs.iter().map(ResonancePair::to_json_value).collect();
    v.serialize(s)
}

impl ReducibilityReport {
    /// Witness whose `l·β` has the smallest depth (ties broken by
    /// enumeration order).
    pub fn smallest_witness(&self) -> Option<&ResonancePair> {
        self.witnesses.iter().min_by_key(|p| p.depth())
    }
}

fn pairing(hw: &HighestWeight, beta: &RootVector) -> Rational {
    let shifted = &hw.weight() + &rho();
    shifted.eval(&coroot(beta).expect("affine real roots have coroots"))
}

fn pair_if_resonant(hw: &HighestWeight, beta: RootVector, l: Rational) -> Option<ResonancePair> {
    if !is_positive_integer(&l) {
        return None;
    }
    debug_assert_eq!(l, pairing(hw, &beta));
    let l_int = l.to_integer().to_u64()?;
    let quotient_weight = &hw.weight() - &beta.to_weight().scale(&l);
    Some(ResonancePair {
        beta,
        l: l_int,
        quotient_weight,
    })
}

/// Resonant real roots `α + kδ1` (`0 ≤ k ≤ kmax`) and `−α + kδ1`
/// (`1 ≤ k ≤ kmax`), in order of `k`.
pub fn kk_pairs(hw: &HighestWeight, kmax: u64) -> Vec<ResonancePair> {
    let a = hw.n1() + int(1);
    let s = hw.k1() + int(2);
    let mut out = Vec::new();
    let mut ks = Rational::zero();
    for k in 0..=kmax as i64 {
        out.extend(pair_if_resonant(hw, RootVector::new(1, k, 0), &ks + &a));
        if k >= 1 {
            out.extend(pair_if_resonant(hw, RootVector::new(-1, k, 0), &ks - &a));
        }
        ks += &s;
    }
    out
}

/// `K + q` from the module docs.
pub fn decision_bound(hw: &HighestWeight) -> u64 {
    let step = hw.k1() + int(2);
    let shift = hw.n1() + int(1);
    let reach = (hw.n1().abs() + int(2)) / &step;
    let k0 = reach.ceil().to_integer().max(BigInt::from(1));
    let q = shift.denom().lcm(step.denom());
    (k0 + q).to_u64().expect("bound fits in u64")
}

pub fn is_reducible(hw: &HighestWeight) -> ReducibilityReport {
    report_with_bound(hw, decision_bound(hw))
}

/// Witness list up to an explicit `kmax`; the verdict is always decided
/// with the exact bound.
pub fn is_reducible_with_kmax(hw: &HighestWeight, kmax: Option<u64>) -> ReducibilityReport {
    match kmax {
        None => is_reducible(hw),
        Some(k) => {
            let verdict = is_reducible(hw).verdict;
            ReducibilityReport {
                verdict,
                witnesses: kk_pairs(hw, k),
                scan_bound: k,
            }
        }
    }
}

fn report_with_bound(hw: &HighestWeight, bound: u64) -> ReducibilityReport {
    let witnesses = kk_pairs(hw, bound);
    debug_assert!(
        witnesses.is_empty() || witnesses.iter().all(|p| p.l > 0),
        "resonance values are positive integers"
    );
    ReducibilityReport {
        verdict: !witnesses.is_empty(),
        witnesses,
        scan_bound: bound,
    }
}

/// Highest weights `λ − lβ` of the Verma submodules whose sum is the
/// maximal submodule.
pub fn maximal_submodule_generators(hw: &HighestWeight) -> Vec<Weight> {
    is_reducible(hw)
        .witnesses
        .into_iter()
        .map(|p| p.quotient_weight)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn hw(n1: Rational, k1: Rational) -> HighestWeight {
        HighestWeight::new(n1, k1).unwrap()
    }

    fn has(pairs: &[ResonancePair], beta: RootVector, l: u64) -> bool {
        pairs.iter().any(|p| p.beta == beta && p.l == l)
    }

    #[test]
    fn pairs_examples() {
        let p = kk_pairs(&hw(int(0), int(0)), 3);
        assert!(has(&p, RootVector::ALPHA, 1));
        let p = kk_pairs(&hw(int(1), int(1)), 3);
        assert!(has(&p, RootVector::ALPHA, 2));
        assert!(has(&p, RootVector::alpha0(), 1));
        assert!(kk_pairs(&hw(frac(1, 2), frac(1, 3)), 20).is_empty());
    }

    #[test]
    fn modular_scan_for_generic_weight() {
        // 6l = 9 ± 14k must be divisible by 6; 9 ± 14k is odd
        for k in 0..200i64 {
            assert_ne!((9 + 14 * k).rem_euclid(6), 0);
            assert_ne!((14 * k - 9).rem_euclid(6), 0);
        }
        assert!(!is_reducible(&hw(frac(1, 2), frac(1, 3))).verdict);
    }

    #[test]
    fn dominant_integral_always_reducible() {
        for (n0, n1) in [(0, 0), (1, 0), (0, 3), (2, 5)] {
            let h = HighestWeight::dominant(n0, n1);
            let r = is_reducible(&h);
            assert!(r.verdict);
            assert!(has(&r.witnesses, RootVector::ALPHA, u64::from(n1) + 1));
            assert!(has(&r.witnesses, RootVector::alpha0(), u64::from(n0) + 1));
        }
    }

    #[test]
    fn negative_half_integer_is_irreducible() {
        let r = is_reducible(&hw(frac(-3, 2), int(0)));
        assert!(!r.verdict);
        assert!(r.witnesses.is_empty());
        assert!(maximal_submodule_generators(&hw(frac(-3, 2), int(0))).is_empty());
    }

    #[test]
    fn generators_examples() {
        let h = hw(int(0), int(0));
        let gens = maximal_submodule_generators(&h);
        assert_eq!(gens[0], &h.weight() - &RootVector::ALPHA.to_weight());
        let h = hw(int(1), int(1));
        let gens = maximal_submodule_generators(&h);
        assert!(gens.contains(&(&h.weight() - &RootVector::ALPHA.to_weight().scale(&int(2)))));
        assert!(gens.contains(&(&h.weight() - &RootVector::alpha0().to_weight())));
    }

    #[test]
    fn resonance_only_late_in_progression() {
        // n1 = -5/3, k1 = 1/3: a = -2/3, s = 7/3; a + ks integer when k ≡ 2 (mod 3)
        let h = hw(frac(-5, 3), frac(1, 3));
        let r = is_reducible(&h);
        assert!(r.verdict);
        assert!(has(&r.witnesses, RootVector::new(1, 2, 0), 4));
        assert!(r.scan_bound >= 3);
    }

    #[test]
    fn closed_form_matches_coroot_pairing() {
        let h = hw(frac(-7, 3), frac(5, 2));
        for k in 0..6i64 {
            let s = int(k) * (h.k1() + int(2));
            assert_eq!(
                pairing(&h, &RootVector::new(1, k, 0)),
                &s + (h.n1() + int(1))
            );
            assert_eq!(
                pairing(&h, &RootVector::new(-1, k, 0)),
                &s - (h.n1() + int(1))
            );
        }
    }

    /// The exact bound agrees with a long brute-force scan.
    #[test]
    fn bound_agrees_with_long_scan() {
        for p in -12..=12i64 {
            for q in 1..=4i64 {
                for kp in 0..=8i64 {
                    for kq in 1..=3i64 {
                        let h = hw(frac(p, q), frac(kp, kq));
                        let exact = is_reducible(&h).verdict;
                        let long = !kk_pairs(&h, 200).is_empty();
                        assert_eq!(exact, long, "{h}");
                    }
                }
            }
        }
    }
}
