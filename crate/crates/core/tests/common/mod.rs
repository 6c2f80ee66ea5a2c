#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toroidal::algebra::{AlgebraElement, BasisElement, Part};
use toroidal::rational::frac;
use toroidal::{HighestWeight, Rational};

const DEFAULT_SEED: u64 = 0x5eed_2024;

/// `TV_SEED` if set, a fixed default otherwise.
pub fn seed() -> u64 {
    std::env::var("TV_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

pub fn loop_element(rng: &mut impl Rng, bound: i64) -> BasisElement {
    let m = rng.gen_range(-bound..=bound);
    let n = rng.gen_range(-bound..=bound);
    match rng.gen_range(0..3) {
        0 => BasisElement::e(m, n),
        1 => BasisElement::f(m, n),
        _ => BasisElement::h(m, n),
    }
}

/// Loop elements most of the time, central and derivation elements
/// occasionally.
pub fn basis_element(rng: &mut impl Rng, bound: i64) -> BasisElement {
    match rng.gen_range(0..12) {
        0 => BasisElement::C1,
        1 => BasisElement::C2,
        2 => BasisElement::D1,
        3 => BasisElement::D2,
        _ => loop_element(rng, bound),
    }
}

pub fn negative_element(rng: &mut impl Rng, bound: i64) -> BasisElement {
    loop {
        let b = loop_element(rng, bound);
        if b.part() == Part::Negative {
            return b;
        }
    }
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

pub fn element(rng: &mut impl Rng, bound: i64, terms: usize) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for _ in 0..terms {
        x.add_term(basis_element(rng, bound), small_rational(rng));
    }
    x
}

/// Rational `n1` with denominator up to 3 and `k1 >= 0` with denominator
/// up to 2, plus random derivation values.
pub fn highest_weight(rng: &mut impl Rng) -> HighestWeight {
    let n1 = frac(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    let k1 = frac(rng.gen_range(0..=6), rng.gen_range(1..=2));
    HighestWeight::new(n1, k1)
        .unwrap()
        .with_derivations(small_rational(rng), small_rational(rng))
}
