//! The finite-dimensional quotient A = KQ/I: basis, normal forms, products.
//!
//! Monomial presentations get the combinatorial treatment: the basis is the
//! set of paths avoiding every minimal relation word as a contiguous subword,
//! and finite-dimensionality is decided by a pumping bound on the length of
//! avoiding paths. General presentations are handled inside the length
//! truncation KQ/(I + R^N) for the declared nil bound N, with a stability
//! check at N+1 guarding against an undersized bound.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::linalg::{SparseMatrix, SparseVec, SpanBuilder};
use crate::presentation::{AlgebraPresentation, FreeElement};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// An element of A as a sparse coefficient vector over the algebra basis.
pub type AlgebraElement = SparseVec;

/// Ordered basis of A: trivial paths first (by vertex), then nontrivial
/// basis paths in length-lex order.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    paths: Vec<Path>,
    index: BTreeMap<Path, usize>,
    by_source_target: BTreeMap<(VertexId, VertexId), Vec<usize>>,
    nontrivial_by_source: BTreeMap<VertexId, Vec<usize>>,
}

impl AlgebraBasis {
    fn new(paths: Vec<Path>) -> Self {
        let mut index = BTreeMap::new();
        let mut by_source_target: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        let mut nontrivial_by_source: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, p) in paths.iter().enumerate() {
            index.insert(p.clone(), i);
            by_source_target
                .entry((p.source(), p.target()))
                .or_default()
                .push(i);
            if !p.is_trivial() {
                nontrivial_by_source.entry(p.source()).or_default().push(i);
            }
        }
        AlgebraBasis {
            paths,
            index,
            by_source_target,
            nontrivial_by_source,
        }
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the trivial path e_v; trivial paths occupy slots 0..n.
    pub fn trivial_index(&self, v: VertexId) -> usize {
        v - 1
    }

    /// Basis paths with the given source and target, in basis order.
    pub fn with_endpoints(&self, source: VertexId, target: VertexId) -> &[usize] {
        self.by_source_target
            .get(&(source, target))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Nontrivial basis paths (the J-basis) starting at `source`.
    pub fn nontrivial_from(&self, source: VertexId) -> &[usize] {
        self.nontrivial_by_source
            .get(&source)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Largest length among basis paths.
    pub fn max_len(&self) -> usize {
        self.paths.iter().map(|p| p.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
enum QuotientData {
    /// Minimal forbidden words; a path is zero iff it contains one.
    Monomial { forbidden: Vec<Vec<ArrowId>> },
    /// Length-truncation data: paths of length >= bound are zero, and each
    /// non-basis path below the bound rewrites to a basis combination.
    General {
        bound: usize,
        rewrite: BTreeMap<Path, Vec<(usize, Scalar)>>,
    },
}

/// Structural summary reported by presentation validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dim: usize,
    pub nilpotency: usize,
    pub monomial: bool,
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
}

/// A bounded quiver algebra with its basis and multiplication table.
#[derive(Clone, Debug)]
pub struct Algebra {
    presentation: AlgebraPresentation,
    basis: AlgebraBasis,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    quotient: QuotientData,
    nilpotency: usize,
}

fn contains_word(haystack: &[ArrowId], needle: &[ArrowId]) -> bool {
    haystack.len() >= needle.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

fn ends_with_word(haystack: &[ArrowId], needle: &[ArrowId]) -> bool {
    haystack.len() >= needle.len() && haystack[haystack.len() - needle.len()..] == *needle
}

/// Drops every word that contains another word of the set as a contiguous
/// subword, leaving the canonical minimal forbidden set.
fn minimal_words(words: BTreeSet<Vec<ArrowId>>) -> Vec<Vec<ArrowId>> {
    words
        .iter()
        .filter(|w| {
            !words
                .iter()
                .any(|other| other.len() < w.len() && contains_word(w, other))
        })
        .cloned()
        .collect()
}

/// Enumerates all paths avoiding the forbidden words, shortest first.
///
/// A path of length n + sum(|w| - 1) would revisit a state of the
/// subword-matching automaton and could be pumped forever, so hitting that
/// length proves the algebra infinite dimensional.
/// Matcher state after one more arrow: the longest suffix of the extended
/// word that is a proper prefix of some forbidden word, or None when a
/// forbidden word just completed. Tracking only this suffix is exact, since
/// any completion at the next step must extend such a prefix.
fn matcher_step(
    state: &[ArrowId],
    a: ArrowId,
    forbidden: &[Vec<ArrowId>],
    longest: usize,
) -> Option<Vec<ArrowId>> {
    let mut candidate = state.to_vec();
    candidate.push(a);
    if forbidden.iter().any(|f| ends_with_word(&candidate, f)) {
        return None;
    }
    let keep = candidate.len().min(longest.saturating_sub(1));
    for len in (1..=keep).rev() {
        let suffix = &candidate[candidate.len() - len..];
        if forbidden.iter().any(|f| f.len() > len && f[..len] == *suffix) {
            return Some(suffix.to_vec());
        }
    }
    Some(Vec::new())
}

/// A vertex through which arbitrarily long forbidden-word-avoiding paths
/// run, if any: a cycle in the (vertex, matcher state) automaton.
fn live_cycle_vertex(quiver: &Quiver, forbidden: &[Vec<ArrowId>]) -> Option<VertexId> {
    let longest = forbidden.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut index: BTreeMap<(VertexId, Vec<ArrowId>), usize> = BTreeMap::new();
    let mut nodes: Vec<(VertexId, Vec<ArrowId>)> = Vec::new();
    for v in quiver.vertices() {
        index.insert((v, Vec::new()), nodes.len());
        nodes.push((v, Vec::new()));
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let (v, state) = nodes[i].clone();
        let mut adj = Vec::new();
        for &a in quiver.arrows_from(v) {
            if let Some(next_state) = matcher_step(&state, a, forbidden, longest) {
                let key = (quiver.arrow(a).target, next_state);
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = nodes.len();
                        index.insert(key.clone(), id);
                        nodes.push(key);
                        id
                    }
                };
                adj.push(id);
            }
        }
        edges.push(adj);
        i += 1;
    }

    let mut color = vec![0u8; nodes.len()];
    for start in 0..nodes.len() {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        color[start] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < edges[node].len() {
                let w = edges[node][*next];
                *next += 1;
                match color[w] {
                    0 => {
                        color[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Some(nodes[w].0),
                    _ => {}
                }
            } else {
                color[node] = 2;
                stack.pop();
            }
        }
    }
    None
}

const MONOMIAL_PATH_CAP: usize = 1_000_000;

fn monomial_basis_paths(
    quiver: &Quiver,
    forbidden: &[Vec<ArrowId>],
) -> Result<Vec<Path>> {
    if let Some(vertex) = live_cycle_vertex(quiver, forbidden) {
        return Err(Error::InfiniteDimensional {
            message: format!(
                "arbitrarily long paths through vertex {vertex} avoid every relation word"
            ),
        });
    }
    let mut paths: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
    let mut level: Vec<Path> = Vec::new();
    for v in quiver.vertices() {
        for &a in quiver.arrows_from(v) {
            level.push(Path::from_arrows(quiver, vec![a]).expect("single arrow"));
        }
    }
    level.sort();
    while !level.is_empty() {
        if paths.len() + level.len() > MONOMIAL_PATH_CAP {
            return Err(Error::ResourceLimit {
                what: "monomial basis paths".to_string(),
                size: paths.len() + level.len(),
                cap: MONOMIAL_PATH_CAP,
            });
        }
        paths.extend(level.iter().cloned());
        let mut next = Vec::new();
        for p in &level {
            for &a in quiver.arrows_from(p.target()) {
                let mut arrows = p.arrows().to_vec();
                arrows.push(a);
                if forbidden.iter().any(|w| ends_with_word(&arrows, w)) {
                    continue;
                }
                next.push(Path::from_arrows(quiver, arrows).expect("extension is composable"));
            }
        }
        next.sort();
        level = next;
    }
    Ok(paths)
}

/// All paths of length < bound, in length-lex order. Capped to keep a typo'd
/// nil bound from exhausting memory.
fn paths_below(quiver: &Quiver, bound: usize, cap: usize) -> Result<Vec<Path>> {
    let mut paths: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
    let mut level: Vec<Path> = Vec::new();
    for v in quiver.vertices() {
        for &a in quiver.arrows_from(v) {
            level.push(Path::from_arrows(quiver, vec![a]).expect("single arrow"));
        }
    }
    level.sort();
    let mut len = 1;
    while !level.is_empty() && len < bound {
        paths.extend(level.iter().cloned());
        if paths.len() > cap {
            return Err(Error::ResourceLimit {
                what: "truncated path enumeration".into(),
                size: paths.len(),
                cap,
            });
        }
        let mut next = Vec::new();
        for p in &level {
            for &a in quiver.arrows_from(p.target()) {
                let mut arrows = p.arrows().to_vec();
                arrows.push(a);
                next.push(Path::from_arrows(quiver, arrows).expect("extension is composable"));
            }
        }
        next.sort();
        level = next;
        len += 1;
    }
    Ok(paths)
}

const GENERAL_PATH_CAP: usize = 200_000;

/// Rewrite rule per pivot path: the normal form as basis-index coordinates.
type RewriteRules = BTreeMap<Path, Vec<(usize, Scalar)>>;

/// Row-reduces the relation span inside paths of length < bound, returning
/// the surviving basis paths and the rewrite rule for each pivot path.
fn general_basis(pres: &AlgebraPresentation, bound: usize) -> Result<(Vec<Path>, RewriteRules)> {
    let quiver = &pres.quiver;
    let field = pres.field;
    let all_paths = paths_below(quiver, bound, GENERAL_PATH_CAP)?;
    let col_of: BTreeMap<&Path, usize> =
        all_paths.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut rows: Vec<SparseVec> = Vec::new();
    for rel in &pres.relations {
        let (rel_source, rel_target) = rel.endpoints().expect("relations are parallel");
        let min_len = rel.min_term_len().expect("relations are nonzero");
        for p in &all_paths {
            if p.target() != rel_source || p.len() + min_len > bound - 1 {
                continue;
            }
            for q in &all_paths {
                if q.source() != rel_target || p.len() + min_len + q.len() > bound - 1 {
                    continue;
                }
                let mut row: SparseVec = BTreeMap::new();
                for (term, coeff) in rel.terms() {
                    let full = p
                        .compose(term)
                        .and_then(|pt| pt.compose(q))
                        .expect("endpoints match by construction");
                    if full.len() >= bound {
                        continue;
                    }
                    let col = col_of[&full];
                    let cur = row.get(&col).cloned().unwrap_or_else(|| field.zero());
                    let new = field.add(&cur, coeff);
                    if field.is_zero(&new) {
                        row.remove(&col);
                    } else {
                        row.insert(col, new);
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }

    let matrix = SparseMatrix::from_rows(field, all_paths.len(), &rows);
    let ech = matrix.rref();
    let pivot_set: BTreeSet<usize> = ech.pivot_cols.iter().copied().collect();

    let mut basis_paths = Vec::new();
    let mut basis_pos = BTreeMap::new();
    for (col, path) in all_paths.iter().enumerate() {
        if !pivot_set.contains(&col) {
            basis_pos.insert(col, basis_paths.len());
            basis_paths.push(path.clone());
        }
    }

    let mut rewrite = BTreeMap::new();
    for (i, &pivot) in ech.pivot_cols.iter().enumerate() {
        let combo: Vec<(usize, Scalar)> = ech.rows[i]
            .iter()
            .filter(|(&col, _)| col != pivot)
            .map(|(&col, coeff)| (basis_pos[&col], field.neg(coeff)))
            .collect();
        rewrite.insert(all_paths[pivot].clone(), combo);
    }
    Ok((basis_paths, rewrite))
}

fn normal_form_path(
    path: &Path,
    field: &FieldDescriptor,
    basis: &AlgebraBasis,
    quotient: &QuotientData,
) -> Vec<(usize, Scalar)> {
    match quotient {
        QuotientData::Monomial { forbidden } => {
            if forbidden.iter().any(|w| contains_word(path.arrows(), w)) {
                Vec::new()
            } else {
                let idx = basis
                    .index_of(path)
                    .expect("avoiding paths are basis paths");
                vec![(idx, field.one())]
            }
        }
        QuotientData::General { bound, rewrite } => {
            if path.len() >= *bound {
                Vec::new()
            } else if let Some(idx) = basis.index_of(path) {
                vec![(idx, field.one())]
            } else {
                rewrite
                    .get(path)
                    .expect("every sub-bound path is basis or pivot")
                    .clone()
            }
        }
    }
}

impl Algebra {
    /// Computes the basis, multiplication table, and nilpotency index for a
    /// presentation. This is the entry point for every downstream module.
    pub fn new(presentation: AlgebraPresentation) -> Result<Self> {
        let field = presentation.field;
        let (basis_paths, quotient) = if presentation.monomial {
            let words: BTreeSet<Vec<ArrowId>> = presentation
                .relations
                .iter()
                .map(|r| {
                    let (path, _) = r.terms().next().expect("relations are nonzero");
                    path.arrows().to_vec()
                })
                .collect();
            let forbidden = minimal_words(words);
            let paths = monomial_basis_paths(&presentation.quiver, &forbidden)?;
            (paths, QuotientData::Monomial { forbidden })
        } else {
            let bound = presentation.nil_bound.ok_or(Error::MissingNilbound)?;
            let (paths, rewrite) = general_basis(&presentation, bound)?;
            let (above, _) = general_basis(&presentation, bound + 1)?;
            if above.len() != paths.len() {
                return Err(Error::NilboundViolated {
                    bound,
                    dim_at_bound: paths.len(),
                    dim_above: above.len(),
                });
            }
            (paths, QuotientData::General { bound, rewrite })
        };

        let basis = AlgebraBasis::new(basis_paths);
        let dim = basis.dim();
        let mut table: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![Vec::new(); dim]; dim];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let Some(pq) = basis.path(i).compose(basis.path(j)) else {
                    continue;
                };
                *cell = normal_form_path(&pq, &field, &basis, &quotient);
            }
        }

        let nilpotency = match &quotient {
            QuotientData::Monomial { .. } => basis.max_len() + 1,
            QuotientData::General { .. } => nilpotency_via_chain(field, &basis, &table),
        };

        Ok(Algebra {
            presentation,
            basis,
            table,
            quotient,
            nilpotency,
        })
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn field(&self) -> FieldDescriptor {
        self.presentation.field
    }

    pub fn basis(&self) -> &AlgebraBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_monomial(&self) -> bool {
        self.presentation.monomial
    }

    /// Smallest k with J^k = 0.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// Minimal forbidden words of a monomial algebra, None otherwise.
    pub fn forbidden_words(&self) -> Option<&[Vec<ArrowId>]> {
        match &self.quotient {
            QuotientData::Monomial { forbidden } => Some(forbidden),
            QuotientData::General { .. } => None,
        }
    }

    pub fn validation_report(&self) -> ValidationReport {
        ValidationReport {
            dim: self.dim(),
            nilpotency: self.nilpotency,
            monomial: self.presentation.monomial,
            vertices: self.quiver().vertex_count(),
            arrows: self.quiver().arrows().len(),
            relations: self.presentation.relations.len(),
        }
    }

    /// Product of two basis elements as (index, coefficient) pairs.
    pub fn multiply_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    /// Whether the product of basis paths i and j is a nonzero single basis
    /// path, returning its index. Always the case for monomial algebras.
    pub fn monomial_product(&self, i: usize, j: usize) -> Option<usize> {
        match self.table[i][j].as_slice() {
            [(k, c)] if *c == self.field().one() => Some(*k),
            _ => None,
        }
    }

    pub fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let f = self.field();
        let mut out: AlgebraElement = BTreeMap::new();
        for (&i, a) in u {
            for (&j, b) in v {
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i][j] {
                    let delta = f.mul(&ab, c);
                    let cur = out.get(k).cloned().unwrap_or_else(|| f.zero());
                    let new = f.add(&cur, &delta);
                    if f.is_zero(&new) {
                        out.remove(k);
                    } else {
                        out.insert(*k, new);
                    }
                }
            }
        }
        out
    }

    /// Image of a free path-algebra element in A.
    pub fn normal_form(&self, x: &FreeElement) -> AlgebraElement {
        let f = self.field();
        let mut out: AlgebraElement = BTreeMap::new();
        for (path, coeff) in x.terms() {
            for (k, c) in self.normal_form_of_path(path) {
                let delta = f.mul(coeff, &c);
                let cur = out.get(&k).cloned().unwrap_or_else(|| f.zero());
                let new = f.add(&cur, &delta);
                if f.is_zero(&new) {
                    out.remove(&k);
                } else {
                    out.insert(k, new);
                }
            }
        }
        out
    }

    /// Image of a single path in A as (index, coefficient) pairs.
    pub fn normal_form_of_path(&self, path: &Path) -> Vec<(usize, Scalar)> {
        normal_form_path(path, &self.field(), &self.basis, &self.quotient)
    }

    /// True when the product of the given basis-path sequence is zero in A.
    pub fn word_vanishes(&self, indices: &[usize]) -> bool {
        let f = self.field();
        let mut acc: AlgebraElement = match indices.first() {
            Some(&i) => [(i, f.one())].into_iter().collect(),
            None => return false,
        };
        for &j in &indices[1..] {
            let v: AlgebraElement = [(j, f.one())].into_iter().collect();
            acc = self.multiply(&acc, &v);
            if acc.is_empty() {
                return true;
            }
        }
        acc.is_empty()
    }
}

/// Nilpotency index by the descending chain J ⊇ J² ⊇ …, each power realized
/// as a span of basis-coefficient vectors.
fn nilpotency_via_chain(
    field: FieldDescriptor,
    basis: &AlgebraBasis,
    table: &[Vec<Vec<(usize, Scalar)>>],
) -> usize {
    let dim = basis.dim();
    let radical: Vec<usize> = (0..dim).filter(|&i| !basis.path(i).is_trivial()).collect();
    let mut power = SpanBuilder::new(field, dim);
    for &i in &radical {
        power.insert(&[(i, field.one())].into_iter().collect());
    }
    let mut k = 1;
    while power.rank() > 0 {
        let mut next = SpanBuilder::new(field, dim);
        for row in power.rows() {
            for &i in &radical {
                let mut prod: SparseVec = BTreeMap::new();
                for (&j, b) in row {
                    for (t, c) in &table[i][j] {
                        let delta = field.mul(b, c);
                        let cur = prod.get(t).cloned().unwrap_or_else(|| field.zero());
                        let new = field.add(&cur, &delta);
                        if field.is_zero(&new) {
                            prod.remove(t);
                        } else {
                            prod.insert(*t, new);
                        }
                    }
                }
                if !prod.is_empty() {
                    next.insert(&prod);
                }
            }
        }
        power = next;
        k += 1;
    }
    k
}

/// Builds the algebra and summarizes its structural checks: parallel and
/// admissible relations hold by parse, and basis construction certifies
/// finite-dimensionality or nil-bound stability.
pub fn validate_presentation(presentation: AlgebraPresentation) -> Result<ValidationReport> {
    Ok(Algebra::new(presentation)?.validation_report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    pub(crate) fn algebra_from(text: &str) -> Algebra {
        Algebra::new(parse_presentation(text).unwrap()).unwrap()
    }

    const DUAL: &str = "field: Q\nvertices: 1\narrow a: 1 -> 1\nrelation a*a\n";
    const REMARK7: &str = "\
field: Q
vertices: 1 2
arrow a1: 1 -> 2
arrow a2: 2 -> 1
relation a1*a2*a1
";
    const COMMUTING_LOOPS: &str = "\
field: Q
vertices: 1
arrow x: 1 -> 1
arrow y: 1 -> 1
relation x*x
relation y*y
relation x*y - y*x
nilbound: 3
";

    fn shown_basis(a: &Algebra) -> Vec<String> {
        a.basis()
            .paths()
            .iter()
            .map(|p| p.display(a.quiver()))
            .collect()
    }

    #[test]
    fn dual_numbers_have_dim_two_and_square_zero() {
        let a = algebra_from(DUAL);
        assert_eq!(shown_basis(&a), vec!["e_1", "a"]);
        assert_eq!(a.nilpotency(), 2);
        assert!(a.is_monomial());
        assert!(a.multiply_basis(1, 1).is_empty());
        assert_eq!(a.monomial_product(0, 1), Some(1));
    }

    #[test]
    fn remark7_basis_matches_subword_avoidance() {
        let a = algebra_from(REMARK7);
        assert_eq!(
            shown_basis(&a),
            vec!["e_1", "e_2", "a1", "a2", "a1*a2", "a2*a1", "a2*a1*a2"]
        );
        assert_eq!(a.dim(), 7);
        assert_eq!(a.nilpotency(), 4);

        let q = a.quiver();
        let a1a2a1 = Path::from_arrows(q, vec![0, 1, 0]).unwrap();
        assert!(a.normal_form_of_path(&a1a2a1).is_empty());
        let a2a1a2 = Path::from_arrows(q, vec![1, 0, 1]).unwrap();
        assert_eq!(a.normal_form_of_path(&a2a1a2), vec![(6, a.field().one())]);

        // e_2 * a1 vanishes on the endpoint mismatch; a1 * a2 is a basis path.
        assert!(a.multiply_basis(1, 2).is_empty());
        assert_eq!(a.monomial_product(2, 3), Some(4));
    }

    #[test]
    fn two_cycle_with_both_relations_has_dim_four() {
        let text = "\
field: Q
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a*b
relation b*a
";
        let a = algebra_from(text);
        assert_eq!(shown_basis(&a), vec!["e_1", "e_2", "a", "b"]);
        assert_eq!(a.nilpotency(), 2);
    }

    #[test]
    fn free_loop_is_infinite_dimensional() {
        let text = "field: Q\nvertices: 1\narrow a: 1 -> 1\n";
        let pres = parse_presentation(text).unwrap();
        assert!(matches!(
            Algebra::new(pres),
            Err(Error::InfiniteDimensional { .. })
        ));
    }

    #[test]
    fn hereditary_a2_is_finite_without_relations() {
        let text = "field: Q\nvertices: 1 2\narrow a: 1 -> 2\n";
        let a = algebra_from(text);
        assert_eq!(shown_basis(&a), vec!["e_1", "e_2", "a"]);
        assert_eq!(a.nilpotency(), 2);
    }

    #[test]
    fn trivial_paths_are_orthogonal_idempotents() {
        let a = algebra_from(REMARK7);
        let f = a.field();
        for i in 0..2 {
            for j in 0..2 {
                let product = a.multiply_basis(i, j);
                if i == j {
                    assert_eq!(product, &[(i, f.one())]);
                } else {
                    assert!(product.is_empty());
                }
            }
        }
    }

    #[test]
    fn redundant_relation_words_are_dropped() {
        let text = "\
field: Q
vertices: 1
arrow a: 1 -> 1
relation a*a
relation a*a*a
";
        let a = algebra_from(text);
        assert_eq!(a.forbidden_words().unwrap(), &[vec![0, 0]]);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn commuting_loops_reduce_through_the_rewrite_map() {
        let a = algebra_from(COMMUTING_LOOPS);
        assert_eq!(shown_basis(&a), vec!["e_1", "x", "y", "y*x"]);
        assert_eq!(a.nilpotency(), 3);
        assert!(!a.is_monomial());

        // x*y is a pivot path and rewrites to y*x.
        let f = a.field();
        assert_eq!(a.multiply_basis(1, 2), &[(3, f.one())]);
        assert_eq!(a.multiply_basis(2, 1), &[(3, f.one())]);
        assert!(a.multiply_basis(1, 1).is_empty());
        assert!(a.multiply_basis(3, 1).is_empty());
    }

    #[test]
    fn undersized_nilbound_is_detected() {
        let text = "\
field: Q
vertices: 1
arrow x: 1 -> 1
arrow y: 1 -> 1
relation x*y - y*x
nilbound: 3
";
        let pres = parse_presentation(text).unwrap();
        match Algebra::new(pres) {
            Err(Error::NilboundViolated {
                bound,
                dim_at_bound,
                dim_above,
            }) => {
                assert_eq!(bound, 3);
                assert_eq!(dim_at_bound, 6);
                assert_eq!(dim_above, 10);
            }
            other => panic!("expected NilboundViolated, got {other:?}"),
        }
    }

    #[test]
    fn missing_nilbound_on_multi_term_relations_errors() {
        let text = "\
field: Q
vertices: 1
arrow x: 1 -> 1
arrow y: 1 -> 1
relation x*y - y*x
";
        let pres = parse_presentation(text).unwrap();
        assert!(matches!(Algebra::new(pres), Err(Error::MissingNilbound)));
    }

    #[test]
    fn general_pipeline_agrees_with_monomial_pipeline() {
        let pres = parse_presentation(REMARK7).unwrap();
        let monomial = Algebra::new(pres.clone()).unwrap();
        let (paths, _) = general_basis(&pres, monomial.nilpotency()).unwrap();
        assert_eq!(paths.len(), monomial.dim());
        assert_eq!(paths, monomial.basis().paths());
    }

    #[test]
    fn nilpotency_chain_matches_monomial_shortcut() {
        for text in [DUAL, REMARK7] {
            let a = algebra_from(text);
            let chain = nilpotency_via_chain(a.field(), a.basis(), &a.table);
            assert_eq!(chain, a.nilpotency());
        }
    }

    #[test]
    fn multiplication_is_associative_on_all_basis_triples() {
        for text in [REMARK7, COMMUTING_LOOPS] {
            let a = algebra_from(text);
            let f = a.field();
            let unit = |i: usize| -> AlgebraElement { [(i, f.one())].into_iter().collect() };
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    for k in 0..a.dim() {
                        let left = a.multiply(&a.multiply(&unit(i), &unit(j)), &unit(k));
                        let right = a.multiply(&unit(i), &a.multiply(&unit(j), &unit(k)));
                        assert_eq!(left, right, "associativity failed at ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn products_only_lengthen_support() {
        let a = algebra_from(COMMUTING_LOOPS);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let floor = a.basis().path(i).len() + a.basis().path(j).len();
                for (k, _) in a.multiply_basis(i, j) {
                    assert!(a.basis().path(*k).len() >= floor);
                }
            }
        }
    }

    #[test]
    fn word_vanishes_tracks_partial_products() {
        let a = algebra_from(REMARK7);
        // a1 a2 a1 dies, a2 a1 a2 survives.
        assert!(a.word_vanishes(&[2, 3, 2]));
        assert!(!a.word_vanishes(&[3, 2, 3]));
    }

    #[test]
    fn validation_report_summarizes_structure() {
        let report = validate_presentation(parse_presentation(REMARK7).unwrap()).unwrap();
        assert_eq!(
            report,
            ValidationReport {
                dim: 7,
                nilpotency: 4,
                monomial: true,
                vertices: 2,
                arrows: 2,
                relations: 1,
            }
        );
    }
}
