//! Brute-force reference implementation used only by the acceptance suite.
//!
//! Everything here is computed from raw quiver data with dense rational
//! arithmetic: its own basis enumeration, its own multiplication rule, its
//! own chain-tuple listing, and Gaussian elimination over `BigRational`.
//! It shares no code with the library's sparse machinery, so agreement is
//! meaningful evidence.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::traits::{One, Zero};

/// A basis word of a monomial algebra: start vertex plus arrow indices.
/// Trivial paths carry an empty arrow list.
pub type Word = (usize, Vec<usize>);

pub struct Oracle {
    arrows: Vec<(usize, usize)>,
    forbidden: Vec<Vec<usize>>,
    basis: Vec<Word>,
    position: BTreeMap<Word, usize>,
}

fn contains_forbidden(word: &[usize], forbidden: &[Vec<usize>]) -> bool {
    forbidden
        .iter()
        .any(|f| word.windows(f.len()).any(|w| w == f.as_slice()))
}

impl Oracle {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>, forbidden: Vec<Vec<usize>>) -> Self {
        let mut basis: Vec<Word> = (1..=vertices).map(|v| (v, Vec::new())).collect();
        let mut level: Vec<Word> = Vec::new();
        for (a, &(source, _)) in arrows.iter().enumerate() {
            let word = (source, vec![a]);
            if !contains_forbidden(&word.1, &forbidden) {
                level.push(word);
            }
        }
        while !level.is_empty() {
            basis.extend(level.iter().cloned());
            assert!(basis.len() < 1_000_000, "oracle basis exploded");
            let mut next = Vec::new();
            for word in &level {
                let end = arrows[*word.1.last().unwrap()].1;
                for (a, &(source, _)) in arrows.iter().enumerate() {
                    if source != end {
                        continue;
                    }
                    let mut extended = word.1.clone();
                    extended.push(a);
                    if !contains_forbidden(&extended, &forbidden) {
                        next.push((word.0, extended));
                    }
                }
            }
            level = next;
        }
        let position = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Oracle {
            arrows,
            forbidden,
            basis,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn source(&self, w: &Word) -> usize {
        w.0
    }

    fn target(&self, w: &Word) -> usize {
        match w.1.last() {
            Some(&a) => self.arrows[a].1,
            None => w.0,
        }
    }

    fn is_trivial(&self, w: &Word) -> bool {
        w.1.is_empty()
    }

    /// Product of two basis words; `None` encodes zero in the algebra.
    fn mul(&self, x: &Word, y: &Word) -> Option<Word> {
        if self.target(x) != self.source(y) {
            return None;
        }
        let mut arrows = x.1.clone();
        arrows.extend(y.1.iter().copied());
        if contains_forbidden(&arrows, &self.forbidden) {
            return None;
        }
        let product = (x.0, arrows);
        assert!(self.position.contains_key(&product), "closure under products");
        Some(product)
    }

    /// All normalized chain tuples in degree q: a head word followed by q
    /// nontrivial words, endpoints matching cyclically.
    pub fn tuples(&self, q: usize) -> Vec<Vec<Word>> {
        let mut out = Vec::new();
        for head in &self.basis {
            if q == 0 {
                if self.source(head) == self.target(head) {
                    out.push(vec![head.clone()]);
                }
                continue;
            }
            let mut partial = vec![head.clone()];
            self.extend_tuple(q, &mut partial, &mut out);
        }
        out
    }

    fn extend_tuple(&self, q: usize, partial: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if partial.len() == q + 1 {
            if self.target(partial.last().unwrap()) == self.source(&partial[0]) {
                out.push(partial.clone());
            }
            return;
        }
        let need = self.target(partial.last().unwrap());
        for word in &self.basis {
            if self.is_trivial(word) || self.source(word) != need {
                continue;
            }
            partial.push(word.clone());
            self.extend_tuple(q, partial, out);
            partial.pop();
        }
    }

    /// Dense boundary matrix from degree q to degree q-1, rows indexed by the
    /// codomain tuples, columns by the domain tuples.
    pub fn boundary(&self, q: usize) -> Vec<Vec<BigRational>> {
        assert!(q >= 1);
        let domain = self.tuples(q);
        let codomain = self.tuples(q - 1);
        let codomain_index: BTreeMap<&[Word], usize> = codomain
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_slice(), i))
            .collect();
        let mut matrix = vec![vec![BigRational::zero(); domain.len()]; codomain.len()];
        for (col, tuple) in domain.iter().enumerate() {
            for (image, sign) in self.boundary_terms(tuple) {
                let row = codomain_index[image.as_slice()];
                let delta = if sign > 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                matrix[row][col] += delta;
            }
        }
        matrix
    }

    fn boundary_terms(&self, tuple: &[Word]) -> Vec<(Vec<Word>, i32)> {
        let q = tuple.len() - 1;
        let mut terms = Vec::new();
        for i in 0..q {
            if let Some(merged) = self.mul(&tuple[i], &tuple[i + 1]) {
                let mut image: Vec<Word> = Vec::new();
                image.extend(tuple[..i].iter().cloned());
                image.push(merged);
                image.extend(tuple[i + 2..].iter().cloned());
                terms.push((image, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        if let Some(wrapped) = self.mul(&tuple[q], &tuple[0]) {
            let mut image = vec![wrapped];
            image.extend(tuple[1..q].iter().cloned());
            terms.push((image, if q.is_multiple_of(2) { 1 } else { -1 }));
        }
        terms
    }

    pub fn hh_dimensions(&self, q_max: usize) -> Vec<usize> {
        let sizes: Vec<usize> = (0..=q_max + 1).map(|q| self.tuples(q).len()).collect();
        let ranks: Vec<usize> = (1..=q_max + 1).map(|q| rank(self.boundary(q))).collect();
        (0..=q_max)
            .map(|q| {
                let below = if q == 0 { 0 } else { ranks[q - 1] };
                sizes[q] - below - ranks[q]
            })
            .collect()
    }
}

/// Rank by plain Gaussian elimination over the rationals.
pub fn rank(mut matrix: Vec<Vec<BigRational>>) -> usize {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !matrix[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        matrix.swap(rank, pivot);
        let pivot_row = matrix[rank].clone();
        for (r, row) in matrix.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (entry, pivot_entry) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = &factor * pivot_entry;
                *entry = &*entry - &sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Self-check that two consecutive oracle boundaries compose to zero.
pub fn boundary_squares_to_zero(oracle: &Oracle, q: usize) -> bool {
    assert!(q >= 2);
    let upper = oracle.boundary(q);
    let lower = oracle.boundary(q - 1);
    let cols = upper.first().map_or(0, Vec::len);
    for lower_row in &lower {
        let mut product = vec![BigRational::zero(); cols];
        for (coef, upper_row) in lower_row.iter().zip(&upper) {
            if coef.is_zero() {
                continue;
            }
            for (acc, entry) in product.iter_mut().zip(upper_row) {
                *acc += coef * entry;
            }
        }
        if product.iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    true
}
