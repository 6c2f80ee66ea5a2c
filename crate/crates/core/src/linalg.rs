//! Exact sparse linear algebra over the rationals.
//!
//! Rows are cleared of denominators and reduced fraction-free over the
//! integers (each updated row is divided by its content). The pivot at every
//! step is the entry of smallest bit size among all remaining rows and
//! unused columns.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Sparse vector: column index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Rational>;

type IntRow = BTreeMap<usize, BigInt>;

#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        self.rows
            .push(row.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, columns: &[SparseVec]) -> Self {
        let mut rows = vec![SparseVec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (&i, v) in col {
                if !v.is_zero() {
                    rows[i].insert(j, v.clone());
                }
            }
        }
        SparseMatrix {
            ncols: columns.len(),
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduce().pivots.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column with that
    /// coordinate set to 1, scaled to primitive integer entries.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let reduced = self.reduce();
        let pivot_cols: BTreeMap<usize, usize> =
            reduced.pivots.iter().map(|&(r, c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivot_cols.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(free, Rational::one());
            for (&pc, &r) in &pivot_cols {
                let row = &reduced.rows[r];
                if let Some(a) = row.get(&free) {
                    let p = &row[&pc];
                    v.insert(pc, -Rational::new(a.clone(), p.clone()));
                }
            }
            basis.push(primitive(v));
        }
        basis
    }

    /// `A x` for a sparse `x`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            for (j, v) in row {
                if let Some(xj) = x.get(j) {
                    acc += v * xj;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    /// Gauss–Jordan reduction: every pivot column is zero outside its pivot row.
    fn reduce(&self) -> Reduced {
        let mut rows: Vec<IntRow> = self.rows.iter().map(integer_row).collect();
        let mut pivots = Vec::new();
        let mut active: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
        while !active.is_empty() {
            let (ai, pc) = match choose_pivot(&rows, &active) {
                Some(p) => p,
                None => break,
            };
            let pr = active.swap_remove(ai);
            let pivot_row = std::mem::take(&mut rows[pr]);
            let p = pivot_row[&pc].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == pr {
                    continue;
                }
                if let Some(c) = row.get(&pc).cloned() {
                    eliminate(row, &p, &c, &pivot_row);
                }
            }
            rows[pr] = pivot_row;
            pivots.push((pr, pc));
            active.retain(|&i| !rows[i].is_empty());
        }
        Reduced { rows, pivots }
    }
}

struct Reduced {
    rows: Vec<IntRow>,
    pivots: Vec<(usize, usize)>,
}

fn integer_row(row: &SparseVec) -> IntRow {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut out: IntRow = row
        .iter()
        .map(|(&c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    remove_content(&mut out);
    out
}

fn remove_content(row: &mut IntRow) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

fn choose_pivot(rows: &[IntRow], active: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (ai, &r) in active.iter().enumerate() {
        for (&c, v) in &rows[r] {
            let size = v.bits();
            if best.as_ref().is_none_or(|(b, _, _)| size < *b) {
                best = Some((size, ai, c));
            }
        }
    }
    best.map(|(_, ai, c)| (ai, c))
}

/// `row ← p·row − c·pivot_row`, then divide by the content.
fn eliminate(row: &mut IntRow, p: &BigInt, c: &BigInt, pivot_row: &IntRow) {
    let g = p.gcd(c);
    let (p, c) = (p / &g, c / &g);
    for v in row.values_mut() {
        *v *= &p;
    }
    for (&j, a) in pivot_row {
        let entry = row.entry(j).or_insert_with(BigInt::zero);
        *entry -= &c * a;
        if entry.is_zero() {
            row.remove(&j);
        }
    }
    remove_content(row);
}

/// Rescales a rational vector to coprime integers with a positive leading entry.
fn primitive(v: SparseVec) -> SparseVec {
    let lcm = v.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: BTreeMap<usize, BigInt> = v
        .iter()
        .map(|(&c, x)| (c, x.numer() * (&lcm / x.denom())))
        .collect();
    let mut g = ints.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if let Some(first) = ints.values().next() {
        if first.is_negative() {
            g = -g;
        }
    }
    if g.is_zero() {
        return SparseVec::new();
    }
    ints.into_iter()
        .map(|(c, x)| (c, Rational::from_integer(x / &g)))
        .collect()
}

/// A subspace kept in reduced row echelon form (pivot entries equal to 1).
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    basis: Vec<(usize, SparseVec)>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(vectors: I) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (pc, b) in &self.basis {
            if let Some(c) = v.get(pc).cloned() {
                axpy(&mut v, &-c, b);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((&pc, _)) = r.iter().min_by_key(|(_, x)| crate::rational::bit_size(x)) else {
            return false;
        };
        let inv = Rational::one() / &r[&pc];
        let r: SparseVec = r.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for (_, b) in self.basis.iter_mut() {
            if let Some(c) = b.get(&pc).cloned() {
                axpy(b, &-c, &r);
            }
        }
        self.basis.push((pc, r));
        true
    }
}

/// `y ← y + a·x`.
pub fn axpy(y: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (&j, xj) in x {
        let entry = y.entry(j).or_insert_with(Rational::zero);
        *entry += a * xj;
        if entry.is_zero() {
            y.remove(&j);
        }
    }
}
