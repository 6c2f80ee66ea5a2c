//! Singular vectors at `δ2`-level zero.
//!
//! Every singular vector of `M(λ)` has weight `λ − η` with `η ∈ Q1+` (the
//! space of `T+`-invariants sits inside the level-zero affine Verma module),
//! so a level-zero scan finds all of them. On that level, generators of
//! positive `δ2`-degree act by zero for weight reasons, and invariance under
//! the positive part of the affine subalgebra is generated by its two
//! Chevalley raising elements `e(0,0)` and `f(1,0)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BasisElement;
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::roots::{affine_weyl_words, dot_action, RootVector, SimpleReflection, Weight};
use crate::verma::{HighestWeight, ModuleVector, Monomial, VermaModule};

/// `e_{α1} = e(0,0)` and `e_{α0} = f(1,0)`.
pub fn raising_generators() -> [BasisElement; 2] {
    [BasisElement::e(0, 0), BasisElement::f(1, 0)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaisingCheck {
    pub generator: String,
    pub vector: usize,
    pub annihilated: bool,
}

#[derive(Clone, Debug)]
pub struct SingularCertificate {
    pub eta: RootVector,
    pub weight: Weight,
    pub kernel: Vec<ModuleVector>,
    pub raising_checks: Vec<RaisingCheck>,
}

impl SingularCertificate {
    pub fn is_empty(&self) -> bool {
        self.kernel.is_empty()
    }

    pub fn verified(&self) -> bool {
        self.raising_checks.iter().all(|c| c.annihilated)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let (a0, a1) = self.eta.affine_coords().unwrap_or_default();
        serde_json::json!({
            "eta": [a0, a1],
            "weight": self.weight.to_json_value(),
            "kernel_dim": self.kernel.len(),
            "kernel": self.kernel.iter().map(ModuleVector::to_json_value).collect::<Vec<_>>(),
            "raising_checks": self.raising_checks,
        })
    }
}

/// Column matrix of the raising operators on a weight space, with rows
/// indexed by `(generator, target monomial)`.
fn raising_matrix(module: &VermaModule, basis: &[Monomial]) -> SparseMatrix {
    let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<SparseVec> = Vec::with_capacity(basis.len());
    for mon in basis {
        let mut col = SparseVec::new();
        for (g, x) in raising_generators().iter().enumerate() {
            for (target, c) in module.act_basis(x, mon).terms() {
                let next = row_index.len();
                let i = *row_index.entry((g, target.clone())).or_insert(next);
                col.insert(i, c.clone());
            }
        }
        columns.push(col);
    }
    SparseMatrix::from_columns(row_index.len(), &columns)
}

fn to_vector(basis: &[Monomial], coords: &SparseVec) -> ModuleVector {
    let mut v = ModuleVector::zero();
    for (&j, c) in coords {
        v.add_term(basis[j].clone(), c.clone());
    }
    v
}

/// Joint kernel of the raising generators on `M(λ)_{λ−η}`.
pub fn find_singular(module: &VermaModule, eta: &RootVector) -> Result<SingularCertificate> {
    let basis = module.weight_space_basis(eta)?;
    let kernel: Vec<ModuleVector> = raising_matrix(module, &basis)
        .kernel()
        .iter()
        .map(|k| to_vector(&basis, k))
        .collect();
    let mut raising_checks = Vec::new();
    for (i, v) in kernel.iter().enumerate() {
        for x in raising_generators() {
            raising_checks.push(RaisingCheck {
                generator: x.to_string(),
                vector: i,
                annihilated: module.act_vector(&x, v).is_zero(),
            });
        }
    }
    let weight = &module.highest_weight().weight() - &eta.to_weight();
    Ok(SingularCertificate {
        eta: *eta,
        weight,
        kernel,
        raising_checks,
    })
}

/// Dimension of the joint kernel at `λ − η`.
pub fn singular_dim(module: &VermaModule, eta: &RootVector) -> Result<usize> {
    let basis = module.weight_space_basis(eta)?;
    Ok(basis.len() - raising_matrix(module, &basis).rank())
}

/// All `η = a0·α0 + a1·α1` with `0 < a0 + a1 ≤ depth`, ordered by depth
/// and then by `a0`.
pub fn etas_up_to_depth(depth: u32) -> Vec<RootVector> {
    let depth = i64::from(depth);
    let mut out = Vec::new();
    for d in 1..=depth {
        for a0 in 0..=d {
            out.push(RootVector::from_affine_coords(a0, d - a0));
        }
    }
    out
}

/// `(η, kernel dimension)` for every `η` of depth `1..=depth` with a
/// nonzero kernel. Work is spread over the current rayon pool; the result
/// order does not depend on scheduling.
pub fn scan_singular(hw: &HighestWeight, depth: u32) -> Vec<(RootVector, usize)> {
    let etas = etas_up_to_depth(depth);
    let mut found: Vec<(RootVector, usize)> = etas
        .par_iter()
        .map_init(
            || VermaModule::new(hw.clone()),
            |module, eta| (*eta, singular_dim(module, eta).expect("eta lies in Q1+")),
        )
        .filter(|(_, d)| *d > 0)
        .collect();
    found.sort_by_key(|(eta, _)| sort_key(eta));
    found
}

fn sort_key(eta: &RootVector) -> (i64, i64) {
    let (a0, a1) = eta.affine_coords().unwrap_or((i64::MAX, i64::MAX));
    (a0 + a1, a0)
}

#[derive(Clone, Debug)]
pub struct PredictedWeight {
    pub word: Vec<SimpleReflection>,
    pub weight: Weight,
    pub eta: RootVector,
}

/// Dot-orbit weights `w·λ` with `λ − w·λ` of depth at most `depth`
/// (identity excluded). Requires `λ` dominant integral, so that depths grow
/// strictly with word length.
pub fn dot_orbit_within(hw: &HighestWeight, depth: u32) -> Result<Vec<PredictedWeight>> {
    if hw.dominant_integral().is_none() {
        return Err(Error::NotDominantIntegral(hw.to_string()));
    }
    let lam = hw.weight();
    let mut out = Vec::new();
    let mut len = 1;
    loop {
        let mut any_within = false;
        for word in affine_weyl_words(len)
            .into_iter()
            .filter(|w| w.len() == len)
        {
            let weight = dot_action(&word, &lam);
            let eta = (&lam - &weight)
                .as_root_vector()
                .expect("dot orbit stays in λ + root lattice");
            let d = eta.depth().expect("dominant λ: orbit lies below λ");
            if d <= i64::from(depth) {
                any_within = true;
                out.push(PredictedWeight { word, weight, eta });
            }
        }
        if !any_within {
            break;
        }
        len += 1;
    }
    out.sort_by_key(|p| sort_key(&p.eta));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OrbitScanReport {
    pub depth: u32,
    pub found: Vec<(RootVector, usize)>,
    pub predicted: Vec<PredictedWeight>,
}

impl OrbitScanReport {
    /// Every predicted weight carries a singular vector.
    pub fn predicted_found(&self) -> bool {
        self.predicted
            .iter()
            .all(|p| self.found.iter().any(|(eta, _)| *eta == p.eta))
    }

    /// Found and predicted weight sets coincide.
    pub fn exact_match(&self) -> bool {
        self.predicted_found()
            && self
                .found
                .iter()
                .all(|(eta, _)| self.predicted.iter().any(|p| p.eta == *eta))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let coords = |eta: &RootVector| {
            let (a0, a1) = eta.affine_coords().unwrap_or_default();
            [a0, a1]
        };
        serde_json::json!({
            "depth": self.depth,
            "found": self.found.iter().map(|(eta, d)| serde_json::json!({
                "eta": coords(eta), "kernel_dim": d
            })).collect::<Vec<_>>(),
            "predicted": self.predicted.iter().map(|p| serde_json::json!({
                "word": p.word.iter().map(|s| format!("{s:?}").to_lowercase()).collect::<Vec<_>>(),
                "eta": coords(&p.eta),
                "weight": p.weight.to_json_value(),
            })).collect::<Vec<_>>(),
            "predicted_found": self.predicted_found(),
            "exact_match": self.exact_match(),
        })
    }
}

/// Level-zero singular scan compared against the dot orbit of `λ`.
pub fn scan_vs_dot_orbit(hw: &HighestWeight, depth: u32) -> Result<OrbitScanReport> {
    let predicted = dot_orbit_within(hw, depth)?;
    let found = scan_singular(hw, depth);
    Ok(OrbitScanReport {
        depth,
        found,
        predicted,
    })
}
