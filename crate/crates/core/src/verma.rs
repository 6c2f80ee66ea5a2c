//! Verma modules `M(λ) = U(T) ⊗_{U(T+ ⊕ h)} C·1_λ` for the triangular
//! decomposition in which the algebra is an affinization of its `t1`-loop
//! affine subalgebra.
//!
//! Vectors are finite combinations of ordered PBW monomials in negative
//! generators applied to `v_λ`. Acting by a generator `x` on `y·m·v_λ`
//! (with `y` the leading factor) uses `x y = y x + [x, y]` and recurses:
//!
//! * a negative `x` that already sorts ahead of `y` is simply prepended;
//! * at `v_λ`, positive generators give zero and Cartan elements act by `λ`;
//! * Cartan elements act on any monomial by the scalar `(λ + wt)(x)`.
//!
//! Termination: measure a word by (number of factors, number of adjacent
//! out-of-order pairs), ordered lexicographically. Each rewrite either moves
//! `x` one place to the right (same length, one fewer inversion) or replaces
//! `x y` by the single generator `[x, y]` (one factor fewer). Positive
//! factors disappear when they reach `v_λ`. The debug build asserts a
//! recursion-depth bound derived from this measure.

use std::cell::{Cell, RefCell};
use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::algebra::{bracket_basis, AlgebraElement, BasisElement, Part, Sl2};
use crate::error::{Error, Result};
use crate::rational::{format_rational, int, is_nonneg_integer, to_i64, write_term, Rational};
use crate::roots::{RootVector, Weight};

pub use crate::kostant::dim_oracle;

/// Highest weight `λ` with `λ(c1) = k1 ≥ 0` and `λ(c2) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    n1: Rational,
    k1: Rational,
    d1: Rational,
    d2: Rational,
}

impl HighestWeight {
    /// `n1 = λ(α∨)`, `k1 = λ(c1)`; `λ(d1) = λ(d2) = 0`.
    pub fn new(n1: Rational, k1: Rational) -> Result<Self> {
        if k1 == int(-2) {
            return Err(Error::CriticalLevel);
        }
        if k1 < Rational::zero() {
            return Err(Error::NegativeLevel(format_rational(&k1)));
        }
        Ok(HighestWeight {
            n1,
            k1,
            d1: Rational::zero(),
            d2: Rational::zero(),
        })
    }

    pub fn with_derivations(mut self, d1: Rational, d2: Rational) -> Self {
        self.d1 = d1;
        self.d2 = d2;
        self
    }

    /// Dominant integral weight with `λ(α_0∨) = n0`, `λ(α_1∨) = n1`.
    pub fn dominant(n0: u32, n1: u32) -> Self {
        HighestWeight::new(int(n1.into()), int(i64::from(n0) + i64::from(n1)))
            .expect("level is nonnegative")
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        if !w.c2.is_zero() {
            return Err(Error::InvalidField {
                field: "c2".into(),
                msg: "the second central element must act trivially (c2 = 0)".into(),
            });
        }
        match HighestWeight::new(w.h.clone(), w.c1.clone()) {
            Ok(hw) => Ok(hw.with_derivations(w.d1.clone(), w.d2.clone())),
            Err(e) => Err(Error::InvalidField {
                field: "c1".into(),
                msg: e.to_string(),
            }),
        }
    }

    pub fn n1(&self) -> &Rational {
        &self.n1
    }

    pub fn k1(&self) -> &Rational {
        &self.k1
    }

    /// `λ(α_0∨) = k1 − n1`.
    pub fn n0(&self) -> Rational {
        &self.k1 - &self.n1
    }

    pub fn weight(&self) -> Weight {
        Weight::new(
            self.n1.clone(),
            self.k1.clone(),
            Rational::zero(),
            self.d1.clone(),
            self.d2.clone(),
        )
    }

    /// `(n0, n1)` when both are nonnegative integers.
    pub fn dominant_integral(&self) -> Option<(u32, u32)> {
        let n0 = self.n0();
        if !is_nonneg_integer(&n0) || !is_nonneg_integer(&self.n1) {
            return None;
        }
        Some((
            u32::try_from(to_i64(&n0)?).ok()?,
            u32::try_from(to_i64(&self.n1)?).ok()?,
        ))
    }

    /// `(λ + μ)(x)` for a Cartan generator `x`, where `μ` is given as a
    /// root-lattice element.
    fn cartan_value(&self, x: &BasisElement, shift: &RootVector) -> Rational {
        match *x {
            BasisElement::Loop {
                x: Sl2::H,
                m: 0,
                n: 0,
            } => &self.n1 + int(2 * shift.a),
            BasisElement::C1 => self.k1.clone(),
            BasisElement::C2 => Rational::zero(),
            BasisElement::D1 => &self.d1 + int(shift.n1),
            BasisElement::D2 => &self.d2 + int(shift.n2),
            _ => unreachable!("{x} is not in the Cartan subalgebra"),
        }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n1={}, k1={}", self.n1, self.k1)
    }
}

/// Total order on generators used to sort PBW monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorOrder {
    /// `(-n, -m, F < H < E)`: groups factors by `δ2`-level, then `δ1`-level.
    #[default]
    Standard,
    /// `(n, m, E < H < F)`, an unrelated order used for cross-checks.
    Alternate,
}

impl GeneratorOrder {
    fn key(self, b: &BasisElement) -> (u8, i64, i64, u8) {
        match (self, *b) {
            (GeneratorOrder::Standard, _) => {
                // BasisElement's own Ord is the standard one
                match *b {
                    BasisElement::Loop { x, m, n } => (0, -n, -m, sl2_rank(x)),
                    other => (1, 0, 0, central_rank(&other)),
                }
            }
            (GeneratorOrder::Alternate, BasisElement::Loop { x, m, n }) => {
                (0, n, m, 2 - sl2_rank(x))
            }
            (GeneratorOrder::Alternate, other) => (1, 0, 0, central_rank(&other)),
        }
    }

    /// Whether `a` belongs to the left of `b` in a canonical monomial.
    pub fn goes_before(self, a: &BasisElement, b: &BasisElement) -> bool {
        self.key(a) > self.key(b)
    }
}

fn sl2_rank(x: Sl2) -> u8 {
    match x {
        Sl2::F => 0,
        Sl2::H => 1,
        Sl2::E => 2,
    }
}

fn central_rank(b: &BasisElement) -> u8 {
    match b {
        BasisElement::C1 => 0,
        BasisElement::C2 => 1,
        BasisElement::D1 => 2,
        _ => 3,
    }
}

/// Ordered product `y_1^{a_1} ⋯ y_k^{a_k}` of negative generators, strictly
/// decreasing in the engine's generator order; the empty product is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(BasisElement, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from factors already in canonical order.
    pub fn from_factors(factors: Vec<(BasisElement, u32)>) -> Self {
        debug_assert!(factors
            .iter()
            .all(|(b, e)| *e > 0 && b.part() == Part::Negative));
        Monomial(factors)
    }

    pub fn factors(&self) -> &[(BasisElement, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Sum of the factor weights (`λ`-relative weight of `m·v_λ`).
    pub fn weight(&self) -> RootVector {
        self.0.iter().fold(RootVector::ZERO, |acc, (b, e)| {
            acc + (*e as i64) * b.weight()
        })
    }

    fn first(&self) -> Option<&BasisElement> {
        self.0.first().map(|(b, _)| b)
    }

    /// The monomial with one power of the leading factor removed.
    fn pop_first(&self) -> Monomial {
        let mut f = self.0.clone();
        if f[0].1 == 1 {
            f.remove(0);
        } else {
            f[0].1 -= 1;
        }
        Monomial(f)
    }

    fn push_front(&self, b: BasisElement) -> Monomial {
        let mut f = self.0.clone();
        match f.first_mut() {
            Some((lead, e)) if *lead == b => *e += 1,
            _ => f.insert(0, (b, 1)),
        }
        Monomial(f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, e) in &self.0 {
            if *e == 1 {
                write!(f, "{b}*")?;
            } else {
                write!(f, "{b}^{e}*")?;
            }
        }
        f.write_str("v")
    }
}

/// Finite rational combination of PBW monomials applied to `v_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    terms: BTreeMap<Monomial, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The highest weight vector `v_λ`.
    pub fn highest() -> Self {
        Self::monomial(Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// `self ← self + c·other`.
    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> ModuleVector {
        let mut out = ModuleVector::zero();
        out.add_scaled(self, c);
        out
    }

    /// Common weight of all terms, if the vector is a nonzero weight vector.
    pub fn weight(&self) -> Option<RootVector> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({"monomial": m.to_string(), "coeff": format_rational(c)})
                })
                .collect(),
        )
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, m)?;
        }
        Ok(())
    }
}

type ActCache = HashMap<(BasisElement, Monomial), Rc<ModuleVector>>;

/// `M(λ)` for one highest weight, with a memo table for generator actions.
///
/// Not `Sync`: build one per thread for parallel work.
pub struct VermaModule {
    hw: HighestWeight,
    order: GeneratorOrder,
    cache: RefCell<ActCache>,
    depth: Cell<usize>,
}

impl VermaModule {
    pub fn new(hw: HighestWeight) -> Self {
        Self::with_order(hw, GeneratorOrder::Standard)
    }

    pub fn with_order(hw: HighestWeight, order: GeneratorOrder) -> Self {
        VermaModule {
            hw,
            order,
            cache: RefCell::new(HashMap::new()),
            depth: Cell::new(0),
        }
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn order(&self) -> GeneratorOrder {
        self.order
    }

    /// `x · (m v_λ)` for a single generator.
    pub fn act_basis(&self, x: &BasisElement, m: &Monomial) -> Rc<ModuleVector> {
        let key = (*x, m.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let depth = self.depth.get() + 1;
        self.depth.set(depth);
        // each level consumes one factor of the word or one inversion
        debug_assert!(
            depth <= 64 * (m.degree() as usize + 2).pow(2) + 4096,
            "straightening failed to terminate"
        );
        let result = Rc::new(self.straighten(x, m));
        self.depth.set(depth - 1);
        self.cache.borrow_mut().insert(key, Rc::clone(&result));
        result
    }

    fn straighten(&self, x: &BasisElement, m: &Monomial) -> ModuleVector {
        let shift = m.weight();
        match x.part() {
            Part::Cartan => {
                return ModuleVector::term(m.clone(), self.hw.cartan_value(x, &shift));
            }
            Part::Positive => {
                // the target weight must still lie below λ
                if !(-(shift + x.weight())).in_positive_lattice() {
                    return ModuleVector::zero();
                }
            }
            Part::Negative => {}
        }
        let Some(lead) = m.first().copied() else {
            return match x.part() {
                Part::Negative => ModuleVector::monomial(Monomial(vec![(*x, 1)])),
                _ => ModuleVector::zero(),
            };
        };
        if x.part() == Part::Negative && !self.order.goes_before(&lead, x) {
            return ModuleVector::monomial(m.push_front(*x));
        }
        // x·y·m' = y·(x·m') + [x, y]·m'
        let rest = m.pop_first();
        let inner = self.act_basis(x, &rest);
        let mut out = self.act_vector(&lead, &inner);
        for (z, c) in bracket_basis(x, &lead).terms() {
            out.add_scaled(&self.act_basis(z, &rest), c);
        }
        out
    }

    /// `x · v` for a single generator and arbitrary vector.
    pub fn act_vector(&self, x: &BasisElement, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (m, c) in v.terms() {
            out.add_scaled(&self.act_basis(x, m), c);
        }
        out
    }

    /// `x · v` for an algebra element.
    pub fn act(&self, x: &AlgebraElement, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (b, c) in x.terms() {
            out.add_scaled(&self.act_vector(b, v), c);
        }
        out
    }

    /// `x_1 x_2 ⋯ x_k · v` (the rightmost generator acts first).
    pub fn apply_word(&self, word: &[BasisElement], v: &ModuleVector) -> ModuleVector {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, x| self.act_vector(x, &acc))
    }

    /// `y^k · v`.
    pub fn apply_power(&self, y: &BasisElement, k: u32, v: &ModuleVector) -> ModuleVector {
        (0..k).fold(v.clone(), |acc, _| self.act_vector(y, &acc))
    }

    /// The vector `m · w` for a canonical monomial `m` and arbitrary `w`.
    pub fn apply_monomial(&self, m: &Monomial, w: &ModuleVector) -> ModuleVector {
        let mut out = w.clone();
        for (b, e) in m.factors().iter().rev() {
            out = self.apply_power(b, *e, &out);
        }
        out
    }

    /// Negative generators of `δ2`-degree zero whose root is bounded by
    /// `eta` coordinatewise, sorted in canonical order.
    fn level0_generators(&self, a0: i64, a1: i64) -> Vec<(BasisElement, (i64, i64))> {
        let mut gens = Vec::new();
        for k in 0..=a0 {
            // −(α + kδ1): f(−k, 0) with coordinates (k, k+1)
            gens.push((BasisElement::f(-k, 0), (k, k + 1)));
            if k >= 1 {
                // −(−α + kδ1): e(−k, 0)
                gens.push((BasisElement::e(-k, 0), (k, k - 1)));
                // −kδ1: h(−k, 0)
                gens.push((BasisElement::h(-k, 0), (k, k)));
            }
        }
        gens.retain(|(_, (r0, r1))| *r0 <= a0 && *r1 <= a1);
        let order = self.order;
        gens.sort_by_key(|(x, _)| Reverse(order.key(x)));
        gens
    }

    /// Canonical PBW monomials spanning the `λ − η` weight space, `η ∈ Q1+`.
    ///
    /// Factors are restricted to the affine subalgebra: every negative root
    /// has `δ2`-degree at most zero, so a factor of nonzero `δ2`-degree could
    /// never be compensated within `Q1+`.
    pub fn weight_space_basis(&self, eta: &RootVector) -> Result<Vec<Monomial>> {
        let (a0, a1) = eta
            .affine_coords()
            .ok_or_else(|| Error::NotInAffineLattice(eta.to_string()))?;
        let gens = self.level0_generators(a0, a1);
        let mut out = Vec::new();
        let mut current = Vec::new();
        enumerate_partitions(&gens, 0, (a0, a1), &mut current, &mut out);
        Ok(out)
    }

    /// Monomials of weight `−γ` at negative `δ2`-level, restricted to factors
    /// with `|δ1-degree| ≤ window`.
    ///
    /// These weight spaces are infinite-dimensional; the result is only the
    /// part visible through the window.
    pub fn truncated_weight_space_basis(
        &self,
        gamma: &RootVector,
        window: i64,
    ) -> Result<TruncatedBasis> {
        if gamma.n2 <= 0 {
            return Err(Error::InvalidArgument(format!(
                "truncated enumeration needs a negative δ2-level, got {gamma}"
            )));
        }
        // generators strictly below level zero
        let mut lower = Vec::new();
        for n in -gamma.n2..=-1 {
            for m in -window..=window {
                for b in [
                    BasisElement::e(m, n),
                    BasisElement::f(m, n),
                    BasisElement::h(m, n),
                ] {
                    lower.push(b);
                }
            }
        }
        let mut out = Vec::new();
        let mut chosen: Vec<(BasisElement, u32)> = Vec::new();
        self.enumerate_lower(&lower, 0, *gamma, window, &mut chosen, &mut out)?;
        for m in out.iter_mut() {
            m.0.sort_by_key(|(x, _)| Reverse(self.order.key(x)));
        }
        out.sort();
        Ok(TruncatedBasis {
            window,
            monomials: out,
        })
    }

    fn enumerate_lower(
        &self,
        lower: &[BasisElement],
        start: usize,
        remaining: RootVector,
        window: i64,
        chosen: &mut Vec<(BasisElement, u32)>,
        out: &mut Vec<Monomial>,
    ) -> Result<()> {
        if remaining.n2 == 0 {
            if remaining.in_affine_positive_lattice() {
                for tail in self.weight_space_basis(&remaining)? {
                    if tail.factors().iter().all(|(b, _)| match b {
                        BasisElement::Loop { m, .. } => m.abs() <= window,
                        _ => true,
                    }) {
                        let mut f = chosen.clone();
                        f.extend_from_slice(tail.factors());
                        out.push(Monomial(f));
                    }
                }
            }
            return Ok(());
        }
        for i in start..lower.len() {
            let b = lower[i];
            let w = -b.weight();
            if w.n2 > remaining.n2 {
                continue;
            }
            let mut e = 1u32;
            let mut rem = remaining - w;
            while rem.n2 >= 0 {
                chosen.push((b, e));
                self.enumerate_lower(lower, i + 1, rem, window, chosen, out)?;
                chosen.pop();
                e += 1;
                rem = rem - w;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    pub window: i64,
    pub monomials: Vec<Monomial>,
}

fn enumerate_partitions(
    gens: &[(BasisElement, (i64, i64))],
    start: usize,
    remaining: (i64, i64),
    current: &mut Vec<(BasisElement, u32)>,
    out: &mut Vec<Monomial>,
) {
    if remaining == (0, 0) {
        out.push(Monomial(current.clone()));
        return;
    }
    for i in start..gens.len() {
        let (b, (r0, r1)) = gens[i];
        let mut rem = (remaining.0 - r0, remaining.1 - r1);
        let mut e = 1u32;
        while rem.0 >= 0 && rem.1 >= 0 {
            current.push((b, e));
            enumerate_partitions(gens, i + 1, rem, current, out);
            current.pop();
            e += 1;
            rem = (rem.0 - r0, rem.1 - r1);
        }
    }
}

/// `x · v` in `M(λ)` (one-shot; builds a fresh memo table).
pub fn act(x: &AlgebraElement, v: &ModuleVector, hw: &HighestWeight) -> ModuleVector {
    VermaModule::new(hw.clone()).act(x, v)
}

/// Canonical PBW basis of `M(λ)_{λ−η}`.
pub fn weight_space_basis(hw: &HighestWeight, eta: &RootVector) -> Result<Vec<Monomial>> {
    VermaModule::new(hw.clone()).weight_space_basis(eta)
}
