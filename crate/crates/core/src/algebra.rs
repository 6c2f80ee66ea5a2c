//! Elements of the double affine algebra `sl2 ⊗ C[t1^±, t2^±] ⊕ Cc1 ⊕ Cc2 ⊕ Cd1 ⊕ Cd2`
//! and its Lie bracket.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, int, write_term, Rational};
use crate::roots::{is_positive, RootVector};

/// The three `sl2` generators `e`, `f`, `h = α∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2 {
    E,
    F,
    H,
}

impl Sl2 {
    fn rank(self) -> u8 {
        match self {
            Sl2::F => 0,
            Sl2::H => 1,
            Sl2::E => 2,
        }
    }

    /// Structure constants of `sl2`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn bracket(self, other: Sl2) -> Option<(i64, Sl2)> {
        use Sl2::*;
        match (self, other) {
            (H, E) => Some((2, E)),
            (E, H) => Some((-2, E)),
            (H, F) => Some((-2, F)),
            (F, H) => Some((2, F)),
            (E, F) => Some((1, H)),
            (F, E) => Some((-1, H)),
            _ => None,
        }
    }

    /// Trace form with `(e|f) = 1`, `(h|h) = 2`.
    pub fn form(self, other: Sl2) -> i64 {
        use Sl2::*;
        match (self, other) {
            (E, F) | (F, E) => 1,
            (H, H) => 2,
            _ => 0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sl2::E => 'e',
            Sl2::F => 'f',
            Sl2::H => 'h',
        }
    }
}

/// One basis vector: `x(m,n) = x ⊗ t1^m t2^n`, or one of `c1, c2, d1, d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisElement {
    Loop { x: Sl2, m: i64, n: i64 },
    C1,
    C2,
    D1,
    D2,
}

/// Whether a generator raises, lowers, or preserves weights with respect to
/// the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Positive,
    Cartan,
    Negative,
}

impl BasisElement {
    pub const fn e(m: i64, n: i64) -> Self {
        BasisElement::Loop { x: Sl2::E, m, n }
    }
    pub const fn f(m: i64, n: i64) -> Self {
        BasisElement::Loop { x: Sl2::F, m, n }
    }
    pub const fn h(m: i64, n: i64) -> Self {
        BasisElement::Loop { x: Sl2::H, m, n }
    }

    /// Root of the one-dimensional weight space spanned by this element
    /// (zero for `h(0,0)` and the central/derivation elements).
    pub fn weight(&self) -> RootVector {
        match *self {
            BasisElement::Loop { x, m, n } => {
                let a = match x {
                    Sl2::E => 1,
                    Sl2::F => -1,
                    Sl2::H => 0,
                };
                RootVector::new(a, m, n)
            }
            _ => RootVector::ZERO,
        }
    }

    pub fn part(&self) -> Part {
        let w = self.weight();
        if w.is_zero() {
            Part::Cartan
        } else if is_positive(&w).expect("nonzero weight of a basis element is a root") {
            Part::Positive
        } else {
            Part::Negative
        }
    }

    /// Sort key: `(-n, -m, F < H < E)` for loop elements, then `c1, c2, d1, d2`.
    fn key(&self) -> (u8, i64, i64, u8) {
        match *self {
            BasisElement::Loop { x, m, n } => (0, -n, -m, x.rank()),
            BasisElement::C1 => (1, 0, 0, 0),
            BasisElement::C2 => (1, 0, 0, 1),
            BasisElement::D1 => (1, 0, 0, 2),
            BasisElement::D2 => (1, 0, 0, 3),
        }
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisElement::Loop { x, m, n } => write!(f, "{}({},{})", x.symbol(), m, n),
            BasisElement::C1 => f.write_str("c1"),
            BasisElement::C2 => f.write_str("c2"),
            BasisElement::D1 => f.write_str("d1"),
            BasisElement::D2 => f.write_str("d2"),
        }
    }
}

pub fn weight_of(b: &BasisElement) -> RootVector {
    b.weight()
}

/// Finite rational combination of basis elements; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisElement, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: BasisElement, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: BasisElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &BasisElement) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(
                |(b, c)| serde_json::json!({"element": b.to_string(), "coeff": format_rational(c)}),
            )
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl From<BasisElement> for AlgebraElement {
    fn from(b: BasisElement) -> Self {
        AlgebraElement::basis(b)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        self + &(-o)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&int(-1))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, b)?;
        }
        Ok(())
    }
}

/// Bracket of two basis elements.
pub fn bracket_basis(a: &BasisElement, b: &BasisElement) -> AlgebraElement {
    use BasisElement::*;
    let mut out = AlgebraElement::zero();
    match (*a, *b) {
        (Loop { x, m: m1, n: n1 }, Loop { x: y, m: m2, n: n2 }) => {
            if let Some((c, z)) = x.bracket(y) {
                out.add_term(
                    Loop {
                        x: z,
                        m: m1 + m2,
                        n: n1 + n2,
                    },
                    int(c),
                );
            }
            // central term only when the loop degrees cancel exactly
            if m1 + m2 == 0 && n1 + n2 == 0 {
                let form = x.form(y);
                if form != 0 {
                    out.add_term(C1, int(form * m1));
                    out.add_term(C2, int(form * n1));
                }
            }
        }
        (D1, Loop { m, .. }) => out.add_term(*b, int(m)),
        (D2, Loop { n, .. }) => out.add_term(*b, int(n)),
        (Loop { m, .. }, D1) => out.add_term(*a, int(-m)),
        (Loop { n, .. }, D2) => out.add_term(*a, int(-n)),
        _ => {}
    }
    out
}

/// Bilinear extension of [`bracket_basis`].
pub fn bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let coeff = cx * cy;
            for (z, cz) in bracket_basis(x, y).terms() {
                out.add_term(*z, &coeff * cz);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use BasisElement as B;

    fn el(terms: &[(BasisElement, i64)]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, c) in terms {
            out.add_term(*b, int(*c));
        }
        out
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            bracket_basis(&B::e(1, 0), &B::f(-1, 0)),
            el(&[(B::h(0, 0), 1), (B::C1, 1)])
        );
        assert!(bracket_basis(&B::e(2, 3), &B::e(-2, -3)).is_zero());
        assert_eq!(bracket_basis(&B::D1, &B::e(3, -2)), el(&[(B::e(3, -2), 3)]));
        assert_eq!(
            bracket_basis(&B::h(1, 2), &B::h(-1, -2)),
            el(&[(B::C1, 2), (B::C2, 4)])
        );
    }

    #[test]
    fn central_and_derivation_rules() {
        for x in [B::e(1, 2), B::f(-3, 0), B::h(0, 0), B::C2, B::D1] {
            assert!(bracket_basis(&B::C1, &x).is_zero());
            assert!(bracket_basis(&x, &B::C2).is_zero());
        }
        assert!(bracket_basis(&B::D1, &B::C1).is_zero());
        assert!(bracket_basis(&B::D2, &B::D1).is_zero());
        assert_eq!(bracket_basis(&B::f(4, -1), &B::D2), el(&[(B::f(4, -1), 1)]));
        // no central term unless r + s = 0
        assert_eq!(
            bracket_basis(&B::e(1, 0), &B::f(-1, 1)),
            el(&[(B::h(0, 1), 1)])
        );
    }

    #[test]
    fn bilinear() {
        let a = &AlgebraElement::term(B::e(0, 1), frac(1, 2)) + &AlgebraElement::basis(B::h(1, 0));
        let b = AlgebraElement::term(B::f(0, -1), int(3));
        // (1/2)·3·(h(0,0) + c2) + 3·(-2)·f(1,-1)
        let mut expect = AlgebraElement::zero();
        expect.add_term(B::h(0, 0), frac(3, 2));
        expect.add_term(B::C2, frac(3, 2));
        expect.add_term(B::f(1, -1), int(-6));
        assert_eq!(bracket(&a, &b), expect);
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(&B::f(2, -1)), RootVector::new(-1, 2, -1));
        assert_eq!(weight_of(&B::C1), RootVector::ZERO);
        assert_eq!(weight_of(&B::h(0, 3)), RootVector::new(0, 0, 3));
        assert_eq!(B::f(0, 0).part(), Part::Negative);
        assert_eq!(B::f(1, 0).part(), Part::Positive);
        assert_eq!(B::e(-1, 0).part(), Part::Negative);
        assert_eq!(B::h(0, 0).part(), Part::Cartan);
        assert_eq!(B::e(5, -1).part(), Part::Negative);
        assert_eq!(B::h(-4, 1).part(), Part::Positive);
    }

    #[test]
    fn order_groups_by_delta2_level() {
        assert!(B::h(-1, 0) > B::f(0, 0));
        assert!(B::e(-1, 0) > B::h(-1, 0));
        assert!(B::f(5, -1) > B::e(-9, 0));
        assert!(B::C1 > B::e(-100, -100));
    }

    #[test]
    fn display() {
        let x = el(&[(B::h(0, 0), 1), (B::C1, 1)]);
        assert_eq!(x.to_string(), "h(0,0) + c1");
        let y = AlgebraElement::term(B::e(-1, 2), frac(-1, 2));
        assert_eq!(y.to_string(), "-1/2*e(-1,2)");
    }
}
