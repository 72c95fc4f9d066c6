//! The S-normalized Hochschild complex, homology dimensions, and the ξ
//! certificate of non-vanishing.
//!
//! With A = S ⊕ J split over the semisimple vertex part, the complex in
//! degree q is A ⊗_{S^e} J^{⊗_S q}. Its basis consists of tuples
//! (x₀; x₁, …, x_q) of basis paths with x₁..x_q nontrivial and endpoints
//! matched cyclically, t(x_i) = s(x_{i+1}) and t(x_q) = s(x₀). The boundary
//! is
//!
//! b(x₀, …, x_q) = Σ_{i=0}^{q-1} (-1)^i (x₀, …, x_i·x_{i+1}, …, x_q)
//!                 + (-1)^q (x_q·x₀, x₁, …, x_{q-1})
//!
//! with b₀ = 0. Homology dimensions come from exact ranks, and the ξ
//! certificate exhibits a non-bounding cycle built from a 2-truncated
//! oriented cycle.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::algebra::Algebra;
use crate::cycles::{is_m_truncated, OrientedCycle, TruncationWitness};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::linalg::{SparseMatrix, SparseVec, SpanBuilder};
use crate::presentation::{AlgebraPresentation, FreeElement};
use crate::quiver::{Arrow, Path, Quiver};

/// Caps on the exact-linear-algebra workload.
#[derive(Clone, Debug)]
pub struct ResourceCaps {
    /// Largest chain-space dimension (tuple count) a computation may touch.
    pub max_chain_tuples: usize,
    /// Wall-clock budget per operation; `None` means unlimited.
    pub time_budget: Option<Duration>,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        ResourceCaps {
            max_chain_tuples: 200_000,
            time_budget: None,
        }
    }
}

impl ResourceCaps {
    /// Errors once the operation that started at `started` has used up the
    /// time budget; checked between elimination stages, not inside them.
    pub fn check_deadline(&self, started: Instant) -> Result<()> {
        match self.time_budget {
            Some(budget) if started.elapsed() >= budget => Err(Error::TimeBudget {
                elapsed_ms: started.elapsed().as_millis() as u64,
            }),
            _ => Ok(()),
        }
    }
}

/// Basis element of the degree-q chain space: head x₀ and q nontrivial
/// tail slots, all stored as algebra basis indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainTuple {
    pub head: usize,
    pub tail: Vec<usize>,
}

impl ChainTuple {
    pub fn degree(&self) -> usize {
        self.tail.len()
    }

    pub fn display(&self, algebra: &Algebra) -> String {
        let q = algebra.quiver();
        let head = algebra.basis().path(self.head).display(q);
        if self.tail.is_empty() {
            format!("({head})")
        } else {
            let tail: Vec<String> = self
                .tail
                .iter()
                .map(|&i| algebra.basis().path(i).display(q))
                .collect();
            format!("({head}; {})", tail.join(", "))
        }
    }
}

/// A chain as a sparse combination of tuples of one degree.
pub type ChainVector = BTreeMap<ChainTuple, Scalar>;

/// Enumerated basis of the degree-q chain space, in lexicographic tuple
/// order under the algebra basis order.
#[derive(Clone, Debug)]
pub struct ChainBasis {
    pub q: usize,
    tuples: Vec<ChainTuple>,
    index: BTreeMap<ChainTuple, usize>,
}

impl ChainBasis {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, i: usize) -> &ChainTuple {
        &self.tuples[i]
    }

    pub fn tuples(&self) -> &[ChainTuple] {
        &self.tuples
    }

    pub fn index_of(&self, t: &ChainTuple) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// Per-(steps, start, end) existence of a nontrivial basis-path chain, used
/// to prune dead branches during tuple enumeration.
fn chain_reachability(algebra: &Algebra, steps: usize) -> Vec<Vec<Vec<bool>>> {
    let n = algebra.quiver().vertex_count();
    let basis = algebra.basis();
    let mut reach = vec![vec![vec![false; n]; n]; steps + 1];
    for v in 1..=n {
        reach[0][v - 1][v - 1] = true;
    }
    for r in 1..=steps {
        for v in 1..=n {
            for &i in basis.nontrivial_from(v) {
                let mid = basis.path(i).target();
                for s in 1..=n {
                    if reach[r - 1][mid - 1][s - 1] {
                        reach[r][v - 1][s - 1] = true;
                    }
                }
            }
        }
    }
    reach
}

/// Enumerates the degree-q chain basis, failing once the tuple count
/// exceeds `cap`.
pub fn chain_basis_capped(
    algebra: &Algebra,
    q: usize,
    cap: Option<usize>,
) -> Result<ChainBasis> {
    let basis = algebra.basis();
    let mut tuples: Vec<ChainTuple> = Vec::new();
    let over = |n: usize| cap.is_some_and(|c| n > c);

    if q == 0 {
        for (i, p) in basis.paths().iter().enumerate() {
            if p.source() == p.target() {
                tuples.push(ChainTuple {
                    head: i,
                    tail: Vec::new(),
                });
            }
        }
    } else {
        let reach = chain_reachability(algebra, q);
        let mut tail: Vec<usize> = Vec::with_capacity(q);
        for head in 0..basis.dim() {
            let close_at = basis.path(head).source();
            let mut at = basis.path(head).target();
            extend_tails(
                algebra,
                &reach,
                q,
                close_at,
                &mut at,
                head,
                &mut tail,
                &mut tuples,
            );
            if over(tuples.len()) {
                return Err(Error::ResourceLimit {
                    what: format!("chain basis in degree {q}"),
                    size: tuples.len(),
                    cap: cap.unwrap(),
                });
            }
        }
    }

    if over(tuples.len()) {
        return Err(Error::ResourceLimit {
            what: format!("chain basis in degree {q}"),
            size: tuples.len(),
            cap: cap.unwrap(),
        });
    }
    let index = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    Ok(ChainBasis { q, tuples, index })
}

#[allow(clippy::too_many_arguments)]
fn extend_tails(
    algebra: &Algebra,
    reach: &[Vec<Vec<bool>>],
    q: usize,
    close_at: usize,
    at: &mut usize,
    head: usize,
    tail: &mut Vec<usize>,
    out: &mut Vec<ChainTuple>,
) {
    let remaining = q - tail.len();
    if remaining == 0 {
        if *at == close_at {
            out.push(ChainTuple {
                head,
                tail: tail.clone(),
            });
        }
        return;
    }
    if !reach[remaining][*at - 1][close_at - 1] {
        return;
    }
    let here = *at;
    for &i in algebra.basis().nontrivial_from(here) {
        let next = algebra.basis().path(i).target();
        tail.push(i);
        *at = next;
        extend_tails(algebra, reach, q, close_at, at, head, tail, out);
        tail.pop();
        *at = here;
    }
}

/// Enumerates the degree-q chain basis with no cap.
pub fn chain_basis(algebra: &Algebra, q: usize) -> ChainBasis {
    chain_basis_capped(algebra, q, None).expect("uncapped enumeration cannot fail")
}

fn accumulate(field: &FieldDescriptor, into: &mut ChainVector, tuple: ChainTuple, coeff: Scalar) {
    let cur = into.get(&tuple).cloned().unwrap_or_else(|| field.zero());
    let new = field.add(&cur, &coeff);
    if field.is_zero(&new) {
        into.remove(&tuple);
    } else {
        into.insert(tuple, new);
    }
}

/// Expands b on a single tuple. Degree 0 maps to zero. Products that vanish
/// drop out; products spreading over several basis paths fan out linearly.
pub fn apply_boundary(algebra: &Algebra, tuple: &ChainTuple) -> ChainVector {
    let field = algebra.field();
    let q = tuple.degree();
    let mut out = ChainVector::new();
    if q == 0 {
        return out;
    }
    for i in 0..q {
        let sign = field.from_i64(if i % 2 == 0 { 1 } else { -1 });
        let (left, right) = if i == 0 {
            (tuple.head, tuple.tail[0])
        } else {
            (tuple.tail[i - 1], tuple.tail[i])
        };
        for (k, c) in algebra.multiply_basis(left, right) {
            let merged = if i == 0 {
                ChainTuple {
                    head: *k,
                    tail: tuple.tail[1..].to_vec(),
                }
            } else {
                debug_assert!(
                    !algebra.basis().path(*k).is_trivial(),
                    "tail products stay in J"
                );
                let mut tail = Vec::with_capacity(q - 1);
                tail.extend_from_slice(&tuple.tail[..i - 1]);
                tail.push(*k);
                tail.extend_from_slice(&tuple.tail[i + 1..]);
                ChainTuple {
                    head: tuple.head,
                    tail,
                }
            };
            accumulate(&field, &mut out, merged, field.mul(&sign, c));
        }
    }
    let sign = field.from_i64(if q.is_multiple_of(2) { 1 } else { -1 });
    for (k, c) in algebra.multiply_basis(tuple.tail[q - 1], tuple.head) {
        let merged = ChainTuple {
            head: *k,
            tail: tuple.tail[..q - 1].to_vec(),
        };
        accumulate(&field, &mut out, merged, field.mul(&sign, c));
    }
    out
}

/// Linear extension of the boundary to chains.
pub fn apply_boundary_vector(algebra: &Algebra, chain: &ChainVector) -> ChainVector {
    let field = algebra.field();
    let mut out = ChainVector::new();
    for (tuple, coeff) in chain {
        for (t, c) in apply_boundary(algebra, tuple) {
            accumulate(&field, &mut out, t, field.mul(coeff, &c));
        }
    }
    out
}

/// Matrix of b from `domain` (degree q) to `codomain` (degree q-1), one
/// column per domain tuple.
pub fn boundary_matrix(
    algebra: &Algebra,
    domain: &ChainBasis,
    codomain: &ChainBasis,
) -> SparseMatrix {
    debug_assert_eq!(domain.q, codomain.q + 1);
    let mut m = SparseMatrix::zero(algebra.field(), codomain.len(), domain.len());
    for (col, tuple) in domain.tuples().iter().enumerate() {
        for (t, c) in apply_boundary(algebra, tuple) {
            let row = codomain
                .index_of(&t)
                .expect("boundary lands on endpoint-matched tuples");
            m.set(row, col, c);
        }
    }
    m
}

/// Dimensions [dim HH₀, …, dim HH_Q], computed as
/// dim C_q − rank b_q − rank b_{q+1} (with rank b₀ = 0).
pub fn hh_dimensions(algebra: &Algebra, q_max: usize, caps: &ResourceCaps) -> Result<Vec<usize>> {
    let started = Instant::now();
    let mut bases = Vec::with_capacity(q_max + 2);
    for q in 0..=q_max + 1 {
        caps.check_deadline(started)?;
        bases.push(chain_basis_capped(algebra, q, Some(caps.max_chain_tuples))?);
    }
    let mut ranks = vec![0usize; q_max + 2];
    for q in 1..=q_max + 1 {
        caps.check_deadline(started)?;
        ranks[q] = boundary_matrix(algebra, &bases[q], &bases[q - 1]).rank();
    }
    let mut dims = Vec::with_capacity(q_max + 1);
    dims.push(bases[0].len() - ranks[1]);
    for q in 1..=q_max {
        dims.push(bases[q].len() - ranks[q] - ranks[q + 1]);
    }
    Ok(dims)
}

/// Independent degree-0 oracle: dim A/[A,A], the span of all commutators
/// uv − vu over basis pairs.
pub fn hh0_direct(algebra: &Algebra) -> usize {
    let field = algebra.field();
    let dim = algebra.dim();
    let mut commutators = SpanBuilder::new(field, dim);
    for i in 0..dim {
        for j in 0..i {
            let mut v: SparseVec = BTreeMap::new();
            for (k, c) in algebra.multiply_basis(i, j) {
                let cur = v.get(k).cloned().unwrap_or_else(|| field.zero());
                v.insert(*k, field.add(&cur, c));
            }
            for (k, c) in algebra.multiply_basis(j, i) {
                let cur = v.get(k).cloned().unwrap_or_else(|| field.zero());
                let new = field.sub(&cur, c);
                if field.is_zero(&new) {
                    v.remove(k);
                } else {
                    v.insert(*k, new);
                }
            }
            if !v.is_empty() {
                commutators.insert(&v);
            }
        }
    }
    dim - commutators.rank()
}

/// The distinguished certificate chain: the cycle's arrows repeated m times
/// as one tuple of degree l·m − 1, with x₀ the first arrow of the canonical
/// rotation.
pub fn xi_chain(algebra: &Algebra, cycle: &OrientedCycle, m: usize) -> ChainVector {
    assert!(m >= 1, "at least one repetition");
    let basis = algebra.basis();
    let slots: Vec<usize> = cycle
        .repeat(m)
        .into_iter()
        .map(|a| {
            let path = Path::from_arrows(algebra.quiver(), vec![a]).expect("single arrow");
            basis
                .index_of(&path)
                .expect("arrows are nonzero basis paths in an admissible quotient")
        })
        .collect();
    let tuple = ChainTuple {
        head: slots[0],
        tail: slots[1..].to_vec(),
    };
    [(tuple, algebra.field().one())].into_iter().collect()
}

/// Outcome of the exact membership test against im b_{q+1}.
#[derive(Clone, Debug)]
pub enum BoundaryStatus {
    NotInImage,
    /// A preimage chain η with b(η) = ξ.
    InImage { preimage: ChainVector },
}

/// Machine-checkable evidence that a homology class is nonzero.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub cycle: OrientedCycle,
    pub repetitions: usize,
    pub degree: usize,
    pub xi: ChainVector,
    pub is_cycle: bool,
    pub boundary_status: BoundaryStatus,
    /// is_cycle ∧ not-in-image; certifies dim HH_degree(A) ≥ 1.
    pub hh_lower_bound: bool,
}

/// Builds and checks the ξ certificate for a 2-truncated oriented cycle:
/// b(ξ) by direct expansion, then exact membership in im b_{lm}.
pub fn certify_nonvanishing(
    algebra: &Algebra,
    cycle: &OrientedCycle,
    m: usize,
    caps: &ResourceCaps,
) -> Result<Certificate> {
    assert!(m >= 1, "at least one repetition");
    let check = is_m_truncated(algebra, cycle, 2);
    if !check.passes() {
        let (window, why) = check.first_failure().expect("failing check has a failure");
        let names: Vec<&str> = window
            .iter()
            .map(|&a| algebra.quiver().arrow(a).name.as_str())
            .collect();
        return Err(Error::NotTwoTruncated {
            cycle: cycle.display(algebra.quiver()),
            message: format!("window {} {why}", names.join("*")),
        });
    }

    let started = Instant::now();
    let degree = cycle.len() * m - 1;
    let xi = xi_chain(algebra, cycle, m);
    let is_cycle = apply_boundary_vector(algebra, &xi).is_empty();

    let basis_deg = chain_basis_capped(algebra, degree, Some(caps.max_chain_tuples))?;
    let basis_up = chain_basis_capped(algebra, degree + 1, Some(caps.max_chain_tuples))?;
    caps.check_deadline(started)?;
    let b_up = boundary_matrix(algebra, &basis_up, &basis_deg);
    let mut target: SparseVec = BTreeMap::new();
    for (tuple, coeff) in &xi {
        let row = basis_deg
            .index_of(tuple)
            .expect("xi tuples are endpoint-matched");
        target.insert(row, coeff.clone());
    }
    let boundary_status = match b_up.solve_in_image(&target) {
        None => BoundaryStatus::NotInImage,
        Some(sol) => BoundaryStatus::InImage {
            preimage: sol
                .into_iter()
                .map(|(col, c)| (basis_up.tuple(col).clone(), c))
                .collect(),
        },
    };
    let hh_lower_bound = is_cycle && matches!(boundary_status, BoundaryStatus::NotInImage);
    Ok(Certificate {
        cycle: cycle.clone(),
        repetitions: m,
        degree,
        xi,
        is_cycle,
        boundary_status,
        hh_lower_bound,
    })
}

/// The cyclic quiver algebra Λ(l, trunc): l vertices in a single oriented
/// cycle x₁…x_l, with every path of length `trunc` set to zero.
pub fn truncated_cycle_algebra(
    l: usize,
    trunc: usize,
    field: FieldDescriptor,
) -> AlgebraPresentation {
    assert!(l >= 1, "at least one vertex");
    assert!(trunc >= 2, "truncation length must be admissible");
    let arrows: Vec<Arrow> = (0..l)
        .map(|i| Arrow {
            name: format!("x{}", i + 1),
            source: i + 1,
            target: (i + 1) % l + 1,
        })
        .collect();
    let quiver = Quiver::new(l, arrows);
    let words: std::collections::BTreeSet<Vec<usize>> = (0..l)
        .map(|start| (0..trunc).map(|k| (start + k) % l).collect())
        .collect();
    let relations: Vec<FreeElement> = words
        .into_iter()
        .map(|w| {
            let path = Path::from_arrows(&quiver, w).expect("cyclic words chain");
            FreeElement::from_path(path, &field)
        })
        .collect();
    AlgebraPresentation::new(quiver, field, relations, None)
}

/// Degree-wise comparison of HH(A) against HH(Λ(l, m)) for a verified
/// witness with parameters (l, m).
#[derive(Clone, Debug)]
pub struct SummandReport {
    pub l: usize,
    pub m: usize,
    pub dims_algebra: Vec<usize>,
    pub dims_cycle_algebra: Vec<usize>,
    /// dim HH_i(A) ≥ dim HH_i(Λ(l, m)) for all 1 ≤ i ≤ Q.
    pub dominated: bool,
}

/// Builds Λ(l, m) from the witness parameters and compares homology
/// dimensions degree by degree up to Q.
pub fn hh_compare_summand(
    algebra: &Algebra,
    witness: &TruncationWitness,
    q_max: usize,
    caps: &ResourceCaps,
) -> Result<SummandReport> {
    if !algebra.is_monomial() {
        return Err(Error::NotMonomial);
    }
    if !is_m_truncated(algebra, &witness.cycle, witness.m).passes() {
        return Err(Error::InvalidWitness {
            message: format!(
                "cycle {} is not {}-truncated here",
                witness.cycle.display(algebra.quiver()),
                witness.m
            ),
        });
    }
    let l = witness.cycle.len();
    let m = witness.m;
    let sub = Algebra::new(truncated_cycle_algebra(l, m, algebra.field()))?;
    let dims_algebra = hh_dimensions(algebra, q_max, caps)?;
    let dims_cycle_algebra = hh_dimensions(&sub, q_max, caps)?;
    let dominated = (1..=q_max).all(|i| dims_algebra[i] >= dims_cycle_algebra[i]);
    Ok(SummandReport {
        l,
        m,
        dims_algebra,
        dims_cycle_algebra,
        dominated,
    })
}
