//! Root system, the triangular partition of the roots, invariant forms,
//! coroots, reflections and the shifted (dot) action of the horizontal
//! affine Weyl group.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, Rational};

/// Element `a·α + n1·δ1 + n2·δ2` of the root lattice.
///
/// Roots have `a ∈ {-1, 0, 1}`; other values arise as sums of roots.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub a: i64,
    pub n1: i64,
    pub n2: i64,
}

impl RootVector {
    pub const ZERO: RootVector = RootVector { a: 0, n1: 0, n2: 0 };
    pub const ALPHA: RootVector = RootVector { a: 1, n1: 0, n2: 0 };
    pub const DELTA1: RootVector = RootVector { a: 0, n1: 1, n2: 0 };
    pub const DELTA2: RootVector = RootVector { a: 0, n1: 0, n2: 1 };

    pub const fn new(a: i64, n1: i64, n2: i64) -> Self {
        RootVector { a, n1, n2 }
    }

    /// `α_1 = α`.
    pub const fn alpha1() -> Self {
        Self::ALPHA
    }

    /// `α_0 = δ1 − α`.
    pub const fn alpha0() -> Self {
        RootVector::new(-1, 1, 0)
    }

    /// `α_{-1} = δ2 − α`.
    pub const fn alpha_minus1() -> Self {
        RootVector::new(-1, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Builds `a0·α_0 + a1·α_1`.
    pub fn from_affine_coords(a0: i64, a1: i64) -> Self {
        RootVector::new(a1 - a0, a0, 0)
    }

    /// Coordinates `(a0, a1)` in the simple roots of the horizontal affine
    /// subalgebra, when `self` lies in their nonnegative span.
    pub fn affine_coords(&self) -> Option<(i64, i64)> {
        if self.n2 != 0 {
            return None;
        }
        let (a0, a1) = (self.n1, self.a + self.n1);
        (a0 >= 0 && a1 >= 0).then_some((a0, a1))
    }

    /// `a0 + a1` for elements of the positive affine root lattice.
    pub fn depth(&self) -> Option<i64> {
        self.affine_coords().map(|(a0, a1)| a0 + a1)
    }

    pub fn in_affine_positive_lattice(&self) -> bool {
        self.affine_coords().is_some()
    }

    /// Membership in the nonnegative integer span of the positive roots.
    ///
    /// Everything with positive `δ2`-coefficient is reachable (one root at
    /// level one absorbs any `α` and `δ1` offset), level zero reduces to the
    /// affine lattice, and negative levels are never reached.
    pub fn in_positive_lattice(&self) -> bool {
        match self.n2 {
            n if n > 0 => true,
            0 => self.in_affine_positive_lattice(),
            _ => false,
        }
    }

    /// Embedding into `h*`.
    pub fn to_weight(&self) -> Weight {
        Weight {
            h: int(2 * self.a),
            c1: Rational::zero(),
            c2: Rational::zero(),
            d1: int(self.n1),
            d2: int(self.n2),
        }
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, o: RootVector) -> RootVector {
        RootVector::new(self.a + o.a, self.n1 + o.n1, self.n2 + o.n2)
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, o: RootVector) -> RootVector {
        self + (-o)
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector::new(-self.a, -self.n1, -self.n2)
    }
}

impl Mul<RootVector> for i64 {
    type Output = RootVector;
    fn mul(self, r: RootVector) -> RootVector {
        RootVector::new(self * r.a, self * r.n1, self * r.n2)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, sym) in [(self.a, "a"), (self.n1, "d1"), (self.n2, "d2")] {
            match c {
                0 => {}
                1 => parts.push(sym.to_string()),
                -1 => parts.push(format!("-{sym}")),
                c => parts.push(format!("{c}{sym}")),
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join("+").replace("+-", "-"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Real,
    Imaginary,
    NotRoot,
}

pub fn classify(r: &RootVector) -> RootKind {
    match r.a {
        1 | -1 => RootKind::Real,
        0 if !r.is_zero() => RootKind::Imaginary,
        _ => RootKind::NotRoot,
    }
}

/// Whether `r` lies in the positive half of the partition that treats the
/// algebra as an affinization of the `t1`-loop affine subalgebra.
pub fn is_positive(r: &RootVector) -> Result<bool> {
    if classify(r) == RootKind::NotRoot {
        return Err(Error::NotARoot(r.to_string()));
    }
    let RootVector { a, n1, n2 } = *r;
    let positive =
        // α + Z+δ1 + Z+δ2
        (a == 1 && n1 >= 0 && n2 >= 0)
        // −α + Nδ1 + Z+δ2
        || (a == -1 && n1 >= 1 && n2 >= 0)
        // Nδ1 + Z+δ2
        || (a == 0 && n1 >= 1 && n2 >= 0)
        // −α − Z+δ1 + Nδ2
        || (a == -1 && n1 <= 0 && n2 >= 1)
        // α − Nδ1 + Nδ2
        || (a == 1 && n1 <= -1 && n2 >= 1)
        // −Nδ1 + Nδ2
        || (a == 0 && n1 <= -1 && n2 >= 1)
        // Nδ2
        || (a == 0 && n1 == 0 && n2 >= 1);
    Ok(positive)
}

/// Positive roots of the horizontal affine subalgebra (`δ2`-degree zero).
pub fn is_affine_positive(r: &RootVector) -> bool {
    r.n2 == 0 && classify(r) != RootKind::NotRoot && is_positive(r).unwrap_or(false)
}

/// A linear functional on `h`, stored by its values on the ordered basis
/// `(α∨, c1, c2, d1, d2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Weight {
    pub h: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub d1: Rational,
    pub d2: Rational,
}

/// An element of `h` in coordinates on `(α∨, c1, c2, d1, d2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CartanElement {
    pub h: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub d1: Rational,
    pub d2: Rational,
}

impl CartanElement {
    pub fn new(h: Rational, c1: Rational, c2: Rational, d1: Rational, d2: Rational) -> Self {
        CartanElement { h, c1, c2, d1, d2 }
    }
}

impl Weight {
    pub fn new(h: Rational, c1: Rational, c2: Rational, d1: Rational, d2: Rational) -> Self {
        Weight { h, c1, c2, d1, d2 }
    }

    pub fn zero() -> Self {
        Weight::default()
    }

    /// The fundamental functional dual to `c_i` (`i` is 1 or 2).
    pub fn omega(i: u8) -> Self {
        let mut w = Weight::zero();
        match i {
            1 => w.c1 = int(1),
            2 => w.c2 = int(1),
            _ => panic!("omega index must be 1 or 2"),
        }
        w
    }

    /// `λ(x)`.
    pub fn eval(&self, x: &CartanElement) -> Rational {
        &self.h * &x.h + &self.c1 * &x.c1 + &self.c2 * &x.c2 + &self.d1 * &x.d1 + &self.d2 * &x.d2
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight {
            h: &self.h * s,
            c1: &self.c1 * s,
            c2: &self.c2 * s,
            d1: &self.d1 * s,
            d2: &self.d2 * s,
        }
    }

    /// Inverse of [`RootVector::to_weight`] on its image.
    pub fn as_root_vector(&self) -> Option<RootVector> {
        if !self.c1.is_zero() || !self.c2.is_zero() {
            return None;
        }
        let two_a = crate::rational::to_i64(&self.h)?;
        if two_a % 2 != 0 {
            return None;
        }
        Some(RootVector::new(
            two_a / 2,
            crate::rational::to_i64(&self.d1)?,
            crate::rational::to_i64(&self.d2)?,
        ))
    }

    /// Parses `{"h": "p/q", "c1": ..., "c2": ..., "d1": ..., "d2": ...}`.
    /// Every field is required; errors name the offending field.
    pub fn from_json(text: &str) -> Result<Weight> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidField {
                field: "weight".into(),
                msg: e.to_string(),
            })?;
        Weight::from_json_value(&value)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Weight> {
        const FIELDS: [&str; 5] = ["h", "c1", "c2", "d1", "d2"];
        let obj = value.as_object().ok_or_else(|| Error::InvalidField {
            field: "weight".into(),
            msg: "expected a JSON object".into(),
        })?;
        if let Some(extra) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
            return Err(Error::InvalidField {
                field: extra.clone(),
                msg: "unknown field".into(),
            });
        }
        let get = |name: &str| -> Result<Rational> {
            let field_err = |msg: String| Error::InvalidField {
                field: name.to_string(),
                msg,
            };
            match obj.get(name) {
                None => Err(field_err("missing".into())),
                Some(serde_json::Value::String(s)) => {
                    parse_rational(s).map_err(|e| field_err(e.to_string()))
                }
                Some(serde_json::Value::Number(n)) if n.is_i64() => Ok(int(n.as_i64().unwrap())),
                Some(other) => Err(field_err(format!("expected a \"p/q\" string, got {other}"))),
            }
        };
        Ok(Weight {
            h: get("h")?,
            c1: get("c1")?,
            c2: get("c2")?,
            d1: get("d1")?,
            d2: get("d2")?,
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "h": format_rational(&self.h),
            "c1": format_rational(&self.c1),
            "c2": format_rational(&self.c2),
            "d1": format_rational(&self.d1),
            "d2": format_rational(&self.d2),
        })
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Weight::from_json_value(&v).map_err(serde::de::Error::custom)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight {
            h: &self.h + &o.h,
            c1: &self.c1 + &o.c1,
            c2: &self.c2 + &o.c2,
            d1: &self.d1 + &o.d1,
            d2: &self.d2 + &o.d2,
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight {
            h: &self.h - &o.h,
            c1: &self.c1 - &o.c1,
            c2: &self.c2 - &o.c2,
            d1: &self.d1 - &o.d1,
            d2: &self.d2 - &o.d2,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(h={}, c1={}, c2={}, d1={}, d2={})",
            self.h, self.c1, self.c2, self.d1, self.d2
        )
    }
}

/// `β∨ = ±α∨ + n1·c1 + n2·c2` for a real root `β = ±α + n1·δ1 + n2·δ2`.
pub fn coroot(r: &RootVector) -> Result<CartanElement> {
    if classify(r) != RootKind::Real {
        return Err(Error::NotReal(r.to_string()));
    }
    Ok(CartanElement::new(
        int(r.a),
        int(r.n1),
        int(r.n2),
        Rational::zero(),
        Rational::zero(),
    ))
}

/// `r_β(λ) = λ − λ(β∨)·β`.
pub fn reflect(beta: &RootVector, lam: &Weight) -> Result<Weight> {
    let pairing = lam.eval(&coroot(beta)?);
    Ok(lam - &beta.to_weight().scale(&pairing))
}

/// Invariant form on `h*`.
///
/// A weight with coordinates `(h, c1, c2, d1, d2)` expands as
/// `(h/2)·α + c1·ω1 + c2·ω2 + d1·δ1 + d2·δ2`; with `(α|α) = 2`,
/// `(δi|ωj) = δij` and all other basis pairings zero this gives
/// `h·h'/2 + Σ (ci·di' + di·ci')`.
pub fn form_hstar(x: &Weight, y: &Weight) -> Rational {
    &x.h * &y.h / int(2) + &x.c1 * &y.d1 + &x.d1 * &y.c1 + &x.c2 * &y.d2 + &x.d2 * &y.c2
}

/// The shift `ρ` with `ρ(α∨) = 1`, `ρ(c1) = ρ(c2) = 2`, `ρ(d_i) = 0`.
///
/// Only `ρ(α_0∨) = ρ(α_1∨) = 1` is forced. The extra choice `ρ(c2) = 2` makes
/// `ρ(α_{-1}∨) = 1` as well. The `d_i` values never matter: they cancel in
/// `w·λ = w(λ+ρ) − ρ` and do not enter `(λ+ρ)(β∨)`.
pub fn rho() -> Weight {
    Weight::new(int(1), int(2), int(2), int(0), int(0))
}

/// Generators of the Weyl group of the horizontal affine subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SimpleReflection {
    /// Reflection in `α_0 = δ1 − α`.
    R0,
    /// Reflection in `α_1 = α`.
    R1,
}

impl SimpleReflection {
    pub fn root(self) -> RootVector {
        match self {
            SimpleReflection::R0 => RootVector::alpha0(),
            SimpleReflection::R1 => RootVector::alpha1(),
        }
    }

    pub fn other(self) -> Self {
        match self {
            SimpleReflection::R0 => SimpleReflection::R1,
            SimpleReflection::R1 => SimpleReflection::R0,
        }
    }
}

/// `w·λ = w(λ+ρ) − ρ` for the group element `w = s_1 s_2 ⋯ s_k` given as
/// the word `[s_1, …, s_k]`; the rightmost letter acts first.
pub fn dot_action(word: &[SimpleReflection], lam: &Weight) -> Weight {
    let rho = rho();
    let mut shifted = lam + &rho;
    for s in word.iter().rev() {
        shifted = reflect(&s.root(), &shifted).expect("simple roots are real");
    }
    &shifted - &rho
}

/// All reduced words of the infinite dihedral group `⟨r0, r1⟩` of length at
/// most `max_len`, identity first, then by length (`r0…` before `r1…`).
pub fn affine_weyl_words(max_len: usize) -> Vec<Vec<SimpleReflection>> {
    let mut out = vec![Vec::new()];
    for len in 1..=max_len {
        for start in [SimpleReflection::R0, SimpleReflection::R1] {
            let mut word = Vec::with_capacity(len);
            let mut s = start;
            for _ in 0..len {
                word.push(s);
                s = s.other();
            }
            out.push(word);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn w(h: i64, c1: i64, c2: i64, d1: i64, d2: i64) -> Weight {
        Weight::new(int(h), int(c1), int(c2), int(d1), int(d2))
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&RootVector::new(1, -3, 1)), RootKind::Real);
        assert_eq!(classify(&RootVector::new(0, -1, 5)), RootKind::Imaginary);
        assert_eq!(classify(&RootVector::ZERO), RootKind::NotRoot);
        assert_eq!(classify(&RootVector::new(2, 0, 0)), RootKind::NotRoot);
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive(&RootVector::new(1, -2, 1)).unwrap());
        assert!(!is_positive(&RootVector::new(0, 0, -1)).unwrap());
        assert!(is_positive(&RootVector::new(0, 3, 0)).unwrap());
        assert!(!is_positive(&RootVector::new(-1, 0, 0)).unwrap());
        assert!(is_positive(&RootVector::alpha0()).unwrap());
        assert!(is_positive(&RootVector::alpha_minus1()).unwrap());
        assert!(is_positive(&RootVector::ZERO).is_err());
    }

    #[test]
    fn coroot_examples() {
        let c = coroot(&RootVector::alpha0()).unwrap();
        assert_eq!(
            c,
            CartanElement::new(int(-1), int(1), int(0), int(0), int(0))
        );
        let c = coroot(&RootVector::alpha_minus1()).unwrap();
        assert_eq!(
            c,
            CartanElement::new(int(-1), int(0), int(1), int(0), int(0))
        );
        let c = coroot(&RootVector::ALPHA).unwrap();
        assert_eq!(
            c,
            CartanElement::new(int(1), int(0), int(0), int(0), int(0))
        );
        assert!(coroot(&RootVector::DELTA1).is_err());
        assert!(coroot(&RootVector::ZERO).is_err());
    }

    #[test]
    fn reflect_examples() {
        let lam = w(3, 5, 0, 7, 1);
        assert_eq!(
            reflect(&RootVector::ALPHA, &lam).unwrap(),
            w(-3, 5, 0, 7, 1)
        );
        assert_eq!(
            reflect(&RootVector::alpha0(), &w(1, 2, 0, 0, 0)).unwrap(),
            w(3, 2, 0, -1, 0)
        );
        let beta = RootVector::new(-1, 2, -3);
        let lam = Weight::new(frac(1, 3), int(2), frac(-5, 7), int(1), int(4));
        let twice = reflect(&beta, &reflect(&beta, &lam).unwrap()).unwrap();
        assert_eq!(twice, lam);
        assert!(reflect(&RootVector::DELTA2, &lam).is_err());
    }

    #[test]
    fn dot_action_examples() {
        let lam = w(4, 6, 0, 0, 0);
        assert_eq!(dot_action(&[], &lam), lam);
        let r1 = dot_action(&[SimpleReflection::R1], &lam);
        assert_eq!(r1, &lam - &RootVector::ALPHA.to_weight().scale(&int(5)));
        assert_eq!(dot_action(&[SimpleReflection::R1], &r1), lam);
        // w·(w'·λ) = (ww')·λ
        let a = [SimpleReflection::R0, SimpleReflection::R1];
        let b = [
            SimpleReflection::R1,
            SimpleReflection::R0,
            SimpleReflection::R1,
        ];
        let ab: Vec<_> = a.iter().chain(b.iter()).copied().collect();
        assert_eq!(dot_action(&a, &dot_action(&b, &lam)), dot_action(&ab, &lam));
    }

    #[test]
    fn form_examples() {
        let alpha = RootVector::ALPHA.to_weight();
        let d1 = RootVector::DELTA1.to_weight();
        let d2 = RootVector::DELTA2.to_weight();
        assert_eq!(form_hstar(&alpha, &alpha), int(2));
        assert_eq!(form_hstar(&d1, &d2), int(0));
        assert_eq!(form_hstar(&d1, &d1), int(0));
        assert_eq!(form_hstar(&d1, &Weight::omega(1)), int(1));
        assert_eq!(form_hstar(&d1, &Weight::omega(2)), int(0));
        assert_eq!(form_hstar(&Weight::omega(1), &Weight::omega(2)), int(0));
        assert_eq!(form_hstar(&alpha, &Weight::omega(1)), int(0));
    }

    #[test]
    fn rho_pairs_to_one_on_simple_coroots() {
        let rho = rho();
        for r in [
            RootVector::alpha0(),
            RootVector::alpha1(),
            RootVector::alpha_minus1(),
        ] {
            assert_eq!(rho.eval(&coroot(&r).unwrap()), int(1));
        }
    }

    #[test]
    fn affine_coordinates() {
        let eta = RootVector::from_affine_coords(2, 3);
        assert_eq!(eta, RootVector::new(1, 2, 0));
        assert_eq!(eta.affine_coords(), Some((2, 3)));
        assert_eq!(RootVector::new(-1, 0, 0).affine_coords(), None);
        assert_eq!(RootVector::new(0, 1, -1).affine_coords(), None);
        assert!(RootVector::new(5, -7, 1).in_positive_lattice());
        assert!(!RootVector::new(0, 0, -1).in_positive_lattice());
    }

    #[test]
    fn weight_json() {
        let lam =
            Weight::from_json(r#"{"h":"1/2","c1":"1/3","c2":"0","d1":"0","d2":"-4"}"#).unwrap();
        assert_eq!(
            lam,
            Weight::new(frac(1, 2), frac(1, 3), int(0), int(0), int(-4))
        );
        let back = Weight::from_json(&lam.to_json_value().to_string()).unwrap();
        assert_eq!(back, lam);
        match Weight::from_json(r#"{"h":"1/0","c1":"0","c2":"0","d1":"0","d2":"0"}"#) {
            Err(Error::InvalidField { field, .. }) => assert_eq!(field, "h"),
            other => panic!("{other:?}"),
        }
        match Weight::from_json(r#"{"h":"1","c2":"0","d1":"0","d2":"0"}"#) {
            Err(Error::InvalidField { field, .. }) => assert_eq!(field, "c1"),
            other => panic!("{other:?}"),
        }
        match Weight::from_json(r#"{"h":"1","c1":"0","c2":"0","d1":"0","d2":"0","x":"1"}"#) {
            Err(Error::InvalidField { field, .. }) => assert_eq!(field, "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn weyl_words() {
        let words = affine_weyl_words(2);
        assert_eq!(words.len(), 5);
        assert!(words[0].is_empty());
        assert_eq!(words[4], vec![SimpleReflection::R1, SimpleReflection::R0]);
    }
}
