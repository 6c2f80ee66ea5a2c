//! The quotient `W(λ) = M(λ) / Σ_i U(T−)·y_i^{n_i+1} v_λ` for dominant
//! integral `λ`, with `y_1 = f(0,0)` and `y_0 = e(−1,0)`.
//!
//! Only `δ2`-level zero is computed. There the submodule is spanned by
//! level-zero monomials applied to the two generators: a factor of negative
//! `δ2`-degree moves a vector to a negative level, and since no negative
//! root has positive `δ2`-degree nothing can bring it back.
//!
//! Also here: the two level-crossing computations showing that `W(λ)` is not
//! integrable and has infinite-dimensional weight spaces when `k1 > 0`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::BasisElement;
use crate::error::{Error, Result};
use crate::kostant::partition_count;
use crate::linalg::{SparseMatrix, SparseVec, Subspace};
use crate::rational::{format_rational, int, Rational};
use crate::roots::{affine_weyl_words, dot_action, RootVector};
use crate::singular::raising_generators;
use crate::verma::{dim_oracle, HighestWeight, ModuleVector, Monomial, VermaModule};

/// `y_1 = f(0,0)`.
pub const Y1: BasisElement = BasisElement::f(0, 0);
/// `y_0 = e ⊗ t1^{-1}`.
pub const Y0: BasisElement = BasisElement::e(-1, 0);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSpace {
    pub eta: (i64, i64),
    pub ambient_dim: usize,
    pub submodule_dim: usize,
    pub quotient_dim: usize,
}

fn require_dominant(hw: &HighestWeight) -> Result<(u32, u32)> {
    hw.dominant_integral()
        .ok_or_else(|| Error::NotDominantIntegral(hw.to_string()))
}

fn require_lattice(eta: &RootVector) -> Result<(i64, i64)> {
    eta.affine_coords()
        .ok_or_else(|| Error::NotInAffineLattice(eta.to_string()))
}

/// The generating singular vectors `y_1^{n1+1} v_λ` and `y_0^{n0+1} v_λ`
/// with their `η`.
pub fn submodule_generators(module: &VermaModule) -> Result<Vec<(RootVector, ModuleVector)>> {
    let (n0, n1) = require_dominant(module.highest_weight())?;
    let top = ModuleVector::highest();
    Ok(vec![
        (
            (i64::from(n1) + 1) * RootVector::alpha1(),
            module.apply_power(&Y1, n1 + 1, &top),
        ),
        (
            (i64::from(n0) + 1) * RootVector::alpha0(),
            module.apply_power(&Y0, n0 + 1, &top),
        ),
    ])
}

/// Coordinates of a level-zero vector in the canonical basis of its weight
/// space.
struct Coordinates {
    index: BTreeMap<Monomial, usize>,
}

impl Coordinates {
    fn new(basis: &[Monomial]) -> Self {
        Coordinates {
            index: basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect(),
        }
    }

    fn of(&self, v: &ModuleVector) -> SparseVec {
        v.terms()
            .map(|(m, c)| {
                let i = *self
                    .index
                    .get(m)
                    .unwrap_or_else(|| panic!("{m} is not in this weight space"));
                (i, c.clone())
            })
            .collect()
    }
}

/// The submodule's part of `M(λ)_{λ−η}`, in basis coordinates.
fn submodule_at(module: &VermaModule, eta: &RootVector, coords: &Coordinates) -> Result<Subspace> {
    let mut span = Subspace::new();
    for (gen_eta, gen) in submodule_generators(module)? {
        let rest = *eta - gen_eta;
        if !rest.in_affine_positive_lattice() {
            continue;
        }
        for mon in module.weight_space_basis(&rest)? {
            span.insert(coords.of(&module.apply_monomial(&mon, &gen)));
        }
    }
    Ok(span)
}

/// Dimension of the submodule inside `M(λ)_{λ−η}`.
pub fn submodule_dim_at(module: &VermaModule, eta: &RootVector) -> Result<usize> {
    require_dominant(module.highest_weight())?;
    require_lattice(eta)?;
    let basis = module.weight_space_basis(eta)?;
    Ok(submodule_at(module, eta, &Coordinates::new(&basis))?.dim())
}

pub fn w_multiplicity(module: &VermaModule, eta: &RootVector) -> Result<QuotientSpace> {
    let coords = require_lattice(eta)?;
    let ambient = dim_oracle(eta)? as usize;
    let sub = submodule_dim_at(module, eta)?;
    debug_assert!(sub <= ambient);
    Ok(QuotientSpace {
        eta: coords,
        ambient_dim: ambient,
        submodule_dim: sub,
        quotient_dim: ambient - sub,
    })
}

/// `dim L(λ)_{λ−η}` from the Weyl–Kac character formula,
/// `Σ_w (−1)^{ℓ(w)} K(η − (λ − w·λ))`, with `K` the Kostant partition
/// function. Words are taken by length until both words of a given length
/// leave the range of `η`; for dominant `λ` depth grows with length.
pub fn lchar_oracle(hw: &HighestWeight, eta: &RootVector) -> Result<i128> {
    require_dominant(hw)?;
    let (a0, a1) = require_lattice(eta)?;
    let lam = hw.weight();
    let mut total: i128 = 0;
    let mut len = 0usize;
    loop {
        let mut any_within = false;
        for word in affine_weyl_words(len)
            .into_iter()
            .filter(|w| w.len() == len)
        {
            let shift = (&lam - &dot_action(&word, &lam))
                .as_root_vector()
                .and_then(|r| r.affine_coords())
                .expect("dominant λ: dot orbit lies in λ − Q1+");
            if shift.0 + shift.1 > a0 + a1 {
                continue;
            }
            any_within = true;
            let count = partition_count(a0 - shift.0, a1 - shift.1) as i128;
            if len.is_multiple_of(2) {
                total += count;
            } else {
                total -= count;
            }
        }
        if !any_within {
            break;
        }
        len += 1;
    }
    Ok(total)
}

/// Dimension of the raising-invariant part of `W(λ)_{λ−η}`: vectors whose
/// images under `e(0,0)` and `f(1,0)` land in the submodule, modulo the
/// submodule itself.
pub fn quotient_singular_dim(module: &VermaModule, eta: &RootVector) -> Result<usize> {
    require_dominant(module.highest_weight())?;
    let basis = module.weight_space_basis(eta)?;
    let coords = Coordinates::new(&basis);
    let sub = submodule_at(module, eta, &coords)?;

    // one block of rows per raising generator, reduced modulo the submodule
    let [e_gen, f_gen] = raising_generators();
    let mut blocks = Vec::new();
    for (x, step) in [(e_gen, RootVector::alpha1()), (f_gen, RootVector::alpha0())] {
        let target = *eta - step;
        if !target.in_affine_positive_lattice() {
            blocks.push(None);
            continue;
        }
        let tbasis = module.weight_space_basis(&target)?;
        let tcoords = Coordinates::new(&tbasis);
        let tsub = submodule_at(module, &target, &tcoords)?;
        blocks.push(Some((x, tbasis.len(), tcoords, tsub)));
    }
    let offset: Vec<usize> = {
        let mut acc = 0;
        blocks
            .iter()
            .map(|b| {
                let here = acc;
                acc += b.as_ref().map_or(0, |(_, n, _, _)| *n);
                here
            })
            .collect()
    };
    let nrows: usize = blocks
        .iter()
        .map(|b| b.as_ref().map_or(0, |(_, n, _, _)| *n))
        .sum();
    let mut columns = Vec::with_capacity(basis.len());
    for mon in &basis {
        let v = ModuleVector::monomial(mon.clone());
        let mut col = SparseVec::new();
        for (b, off) in blocks.iter().zip(&offset) {
            if let Some((x, _, tcoords, tsub)) = b {
                let image = tsub.reduce(&tcoords.of(&module.act_vector(x, &v)));
                col.extend(image.into_iter().map(|(i, c)| (i + off, c)));
            }
        }
        columns.push(col);
    }
    let matrix = SparseMatrix::from_columns(nrows, &columns);
    let invariant = basis.len() - matrix.rank();
    Ok(invariant - sub.dim())
}

/// One verified identity.
#[derive(Clone, Debug, Serialize)]
pub struct TranscriptLine {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub lines: Vec<TranscriptLine>,
    pub conclusion: String,
}

impl Transcript {
    pub fn all_hold(&self) -> bool {
        self.lines.iter().all(|l| l.holds)
    }
}

fn line(claim: String, lhs: &ModuleVector, rhs: &ModuleVector) -> TranscriptLine {
    TranscriptLine {
        claim,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds: lhs == rhs,
    }
}

fn require_positive_level(hw: &HighestWeight) -> Result<()> {
    if hw.k1().is_zero() {
        return Err(Error::NonPositiveLevel(format_rational(hw.k1())));
    }
    Ok(())
}

/// Checks `f(0,1)·e(0,−1)^N v = −N(N−1+n1)·e(0,−1)^{N−1} v` for
/// `N = 1..=nmax` and, when `n1 = 0`, the follow-up identities
/// `f(1,0)·e(0,−1) v = −h(1,−1) v` and `h(−1,1)·h(1,−1) v = −2k1 v`.
pub fn demo_nonintegrability(hw: &HighestWeight, nmax: u32) -> Result<Transcript> {
    require_positive_level(hw)?;
    let module = VermaModule::new(hw.clone());
    let top = ModuleVector::highest();
    let e = BasisElement::e(0, -1);
    let n1 = hw.n1().clone();
    let mut lines = Vec::new();
    for n in 1..=nmax {
        let lhs = module.act_vector(&BasisElement::f(0, 1), &module.apply_power(&e, n, &top));
        let coeff = -int(n.into()) * (int(i64::from(n) - 1) + &n1);
        let rhs = module.apply_power(&e, n - 1, &top).scale(&coeff);
        lines.push(line(
            format!(
                "f(0,1)*e(0,-1)^{n}*v = {}*e(0,-1)^{}*v",
                format_rational(&coeff),
                n - 1
            ),
            &lhs,
            &rhs,
        ));
    }
    let conclusion = if n1.is_zero() {
        let step = module.act_vector(&BasisElement::f(1, 0), &module.act_vector(&e, &top));
        let h_down = module.act_vector(&BasisElement::h(1, -1), &top);
        lines.push(line(
            "f(1,0)*e(0,-1)*v = -h(1,-1)*v".into(),
            &step,
            &h_down.scale(&int(-1)),
        ));
        let pairing = module.act_vector(&BasisElement::h(-1, 1), &h_down);
        let two_k1 = int(2) * hw.k1();
        lines.push(line(
            format!(
                "h(-1,1)*h(1,-1)*v = {}*v",
                format_rational(&-two_k1.clone())
            ),
            &pairing,
            &top.scale(&-two_k1.clone()),
        ));
        let composite = module.act_vector(&BasisElement::h(-1, 1), &step);
        lines.push(line(
            format!("h(-1,1)*f(1,0)*e(0,-1)*v = {}*v", format_rational(&two_k1)),
            &composite,
            &top.scale(&two_k1),
        ));
        format!(
            "the only vanishing coefficient is at N = 1; there e(0,-1)*v = 0 would force \
             h(-1,1)*h(1,-1)*v = {}*v = 0, impossible for k1 = {} > 0, so e(0,-1) is not \
             locally nilpotent",
            format_rational(&-two_k1.clone()),
            format_rational(hw.k1())
        )
    } else {
        "the coefficients -N(N-1+n1) never vanish for n1 > 0 or non-integral n1, so \
         e(0,-1)^N*v = 0 has no minimal N and e(0,-1) is not locally nilpotent"
            .into()
    };
    Ok(Transcript { lines, conclusion })
}

#[derive(Clone, Debug, Serialize)]
pub struct InfiniteDimReport {
    pub size: u32,
    /// Entry `(s, m)`: the scalar `c` with
    /// `h(s,1)·h(−m,−1)h(m,−1) v = c·h(m,−1) v`.
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Vec<Vec<Rational>>,
    /// Whether every result was a multiple of `h(m,−1) v`.
    pub pattern_ok: bool,
    pub rank: usize,
}

fn ser_matrix<S: serde::Serializer>(
    m: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    v.serialize(s)
}

impl InfiniteDimReport {
    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.matrix.len())
            .map(|i| self.matrix[i][i].clone())
            .collect()
    }
}

/// Pairs `h(s,1)` against the vectors `h(−m,−1)h(m,−1) v` for
/// `s, m = 1..=size`; full rank shows the vectors are independent.
pub fn demo_infinite_dim(hw: &HighestWeight, size: u32) -> Result<InfiniteDimReport> {
    require_positive_level(hw)?;
    if size == 0 {
        return Err(Error::InvalidArgument("size must be at least 1".into()));
    }
    let module = VermaModule::new(hw.clone());
    let top = ModuleVector::highest();
    let mut matrix = Vec::new();
    let mut pattern_ok = true;
    for s in 1..=i64::from(size) {
        let mut row = Vec::new();
        for m in 1..=i64::from(size) {
            let v = module.apply_word(&[BasisElement::h(-m, -1), BasisElement::h(m, -1)], &top);
            let out = module.act_vector(&BasisElement::h(s, 1), &v);
            let target = Monomial::from_factors(vec![(BasisElement::h(m, -1), 1)]);
            let c = out.coeff(&target);
            if out != ModuleVector::term(target, c.clone()) {
                pattern_ok = false;
            }
            row.push(c);
        }
        matrix.push(row);
    }
    let mut sm = SparseMatrix::new(size as usize);
    for row in &matrix {
        sm.push_row(
            row.iter()
                .cloned()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        );
    }
    let rank = sm.rank();
    Ok(InfiniteDimReport {
        size,
        matrix,
        pattern_ok,
        rank,
    })
}
