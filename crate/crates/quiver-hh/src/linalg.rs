//! Exact sparse linear algebra over the ground field.
//!
//! Everything downstream (homology ranks, syzygy kernels, membership tests)
//! reduces to the routines here. Reduction is deterministic: columns are
//! processed left to right and the pivot for a column is the lowest-index row
//! that still has a nonzero entry there, with pivots normalized to 1. Two runs
//! on the same matrix produce identical echelon forms.

use std::collections::{BTreeMap, BTreeSet};

use crate::field::{FieldDescriptor, Scalar};

/// Sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Sparse matrix in coordinate form with sorted, zero-free entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    entries: BTreeMap<(usize, usize), Scalar>,
}

/// Result of row reduction: pivot columns in ascending order and the reduced
/// rows, where `rows[i]` has a leading 1 in column `pivot_cols[i]` and zeros
/// in every other pivot column.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = SparseMatrix::zero(field, n, n);
        for i in 0..n {
            m.entries.insert((i, i), field.one());
        }
        m
    }

    /// Builds a matrix whose `i`-th row is `rows_vecs[i]`.
    pub fn from_rows(field: FieldDescriptor, cols: usize, rows_vecs: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::zero(field, rows_vecs.len(), cols);
        for (r, row) in rows_vecs.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `cols_vecs[j]`.
    pub fn from_columns(field: FieldDescriptor, rows: usize, cols_vecs: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::zero(field, rows, cols_vecs.len());
        for (c, col) in cols_vecs.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if self.field.is_zero(&v) {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c);
        let new = self.field.add(&cur, v);
        self.set(r, c, new);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn row(&self, r: usize) -> SparseVec {
        self.entries
            .range((r, 0)..(r + 1, 0))
            .map(|(&(_, c), v)| (c, v.clone()))
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zero(self.field, self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.field, self.rows, self.cols);
        if self.field.is_zero(s) {
            return out;
        }
        for (&(r, c), v) in &self.entries {
            out.entries.insert((r, c), self.field.mul(s, v));
        }
        out
    }

    pub fn matmul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        assert_eq!(self.field, other.field);
        let mut other_rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            other_rows[r].push((c, v.clone()));
        }
        let mut out = SparseMatrix::zero(self.field, self.rows, other.cols);
        for (&(i, j), a) in &self.entries {
            for (k, b) in &other_rows[j] {
                let delta = self.field.mul(a, b);
                out.add_to(i, *k, &delta);
            }
        }
        out
    }

    /// Applies the matrix to a column vector of length `cols`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut out: SparseVec = BTreeMap::new();
        for (&(r, c), a) in &self.entries {
            if let Some(x) = v.get(&c) {
                let delta = f.mul(a, x);
                let cur = out.get(&r).cloned().unwrap_or_else(|| f.zero());
                let new = f.add(&cur, &delta);
                if f.is_zero(&new) {
                    out.remove(&r);
                } else {
                    out.insert(r, new);
                }
            }
        }
        out
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    ///
    /// Columns are scanned left to right; the pivot for a column is the
    /// lowest-index row not yet used as a pivot that is nonzero there. Pivots
    /// are normalized to 1 and eliminated from all other rows immediately, so
    /// the returned rows are fully reduced.
    pub fn rref(&self) -> EchelonForm {
        let f = self.field;
        let mut work: Vec<SparseVec> = vec![BTreeMap::new(); self.rows];
        let mut occupancy: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (&(r, c), v) in &self.entries {
            work[r].insert(c, v.clone());
            occupancy[c].insert(r);
        }
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; self.rows];
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for c in 0..self.cols {
            let Some(&r) = occupancy[c].iter().find(|&&r| pivot_of_row[r].is_none()) else {
                continue;
            };
            let lead = work[r].get(&c).expect("occupancy out of sync").clone();
            if lead != f.one() {
                let inv = f.inv(&lead);
                let scaled: SparseVec = work[r]
                    .iter()
                    .map(|(&col, v)| (col, f.mul(&inv, v)))
                    .collect();
                work[r] = scaled;
            }
            let victims: Vec<usize> = occupancy[c].iter().copied().filter(|&r2| r2 != r).collect();
            let pivot_row = work[r].clone();
            for r2 in victims {
                let factor = work[r2]
                    .get(&c)
                    .expect("occupancy out of sync")
                    .clone();
                for (&col, v) in &pivot_row {
                    let delta = f.mul(&factor, v);
                    let cur = work[r2].get(&col).cloned().unwrap_or_else(|| f.zero());
                    let new = f.sub(&cur, &delta);
                    if f.is_zero(&new) {
                        if work[r2].remove(&col).is_some() {
                            occupancy[col].remove(&r2);
                        }
                    } else if work[r2].insert(col, new).is_none() {
                        occupancy[col].insert(r2);
                    }
                }
            }
            pivot_of_row[r] = Some(c);
            pivots.push((c, r));
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(c, _)| c).collect();
        let rows: Vec<SparseVec> = pivots
            .iter()
            .map(|&(_, r)| std::mem::take(&mut work[r]))
            .collect();
        EchelonForm {
            rank: pivot_cols.len(),
            pivot_cols,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space {v : Mv = 0}, one vector per free
    /// column, ordered by that column's index.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let f = self.field;
        let ech = self.rref();
        let pivot_set: BTreeSet<usize> = ech.pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v: SparseVec = BTreeMap::new();
            v.insert(free, f.one());
            for (i, &p) in ech.pivot_cols.iter().enumerate() {
                if let Some(coef) = ech.rows[i].get(&free) {
                    v.insert(p, f.neg(coef));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves Mx = b exactly, returning a particular solution with free
    /// variables set to zero, or `None` when b is outside the column space.
    pub fn solve_in_image(&self, b: &SparseVec) -> Option<SparseVec> {
        debug_assert!(b.keys().all(|&r| r < self.rows));
        let mut aug = SparseMatrix::zero(self.field, self.rows, self.cols + 1);
        aug.entries = self.entries.clone();
        for (&r, v) in b {
            if !self.field.is_zero(v) {
                aug.entries.insert((r, self.cols), v.clone());
            }
        }
        let ech = aug.rref();
        if ech.pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x: SparseVec = BTreeMap::new();
        for (i, &p) in ech.pivot_cols.iter().enumerate() {
            if let Some(v) = ech.rows[i].get(&self.cols) {
                x.insert(p, v.clone());
            }
        }
        Some(x)
    }
}

/// Incremental row-space builder kept in fully reduced echelon form.
///
/// Inserting vectors one at a time yields the same canonical reduced basis
/// regardless of insertion order, which makes span comparisons exact.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: FieldDescriptor,
    dim: usize,
    leads: Vec<usize>,
    rows: Vec<SparseVec>,
}

impl SpanBuilder {
    pub fn new(field: FieldDescriptor, dim: usize) -> Self {
        SpanBuilder {
            field,
            dim,
            leads: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn leads(&self) -> &[usize] {
        &self.leads
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Fully reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut res = v.clone();
        for (i, &lead) in self.leads.iter().enumerate() {
            let Some(c) = res.get(&lead).cloned() else {
                continue;
            };
            for (&col, w) in &self.rows[i] {
                let delta = f.mul(&c, w);
                let cur = res.get(&col).cloned().unwrap_or_else(|| f.zero());
                let new = f.sub(&cur, &delta);
                if f.is_zero(&new) {
                    res.remove(&col);
                } else {
                    res.insert(col, new);
                }
            }
        }
        res
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let f = self.field;
        let mut res = self.reduce(v);
        let Some((&lead, _)) = res.iter().next() else {
            return false;
        };
        debug_assert!(lead < self.dim, "vector index out of range");
        let inv = f.inv(&res[&lead]);
        res = res.iter().map(|(&c, w)| (c, f.mul(&inv, w))).collect();
        for i in 0..self.rows.len() {
            let Some(c) = self.rows[i].get(&lead).cloned() else {
                continue;
            };
            for (&col, w) in res.clone().iter() {
                let delta = f.mul(&c, w);
                let cur = self.rows[i].get(&col).cloned().unwrap_or_else(|| f.zero());
                let new = f.sub(&cur, &delta);
                if f.is_zero(&new) {
                    self.rows[i].remove(&col);
                } else {
                    self.rows[i].insert(col, new);
                }
            }
        }
        let pos = self.leads.partition_point(|&l| l < lead);
        self.leads.insert(pos, lead);
        self.rows.insert(pos, res);
        true
    }
}
