//! Truncated oriented cycles, located through the window graph.
//!
//! A cyclic arrow word (a₁, …, a_l) is m-truncated when every cyclic window
//! of m consecutive arrows multiplies to zero in A while every window of m−1
//! consecutive arrows stays nonzero (indices wrap mod l). The window graph
//! makes these searchable: its nodes are the nonzero length-(m−1) arrow
//! words, its edges the zero length-m extensions, and closed walks of length
//! l correspond exactly to m-truncated oriented cycles of length l.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Path, Quiver};

/// A cyclic arrow word stored in its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrientedCycle {
    arrows: Vec<ArrowId>,
    aperiodic: bool,
}

fn least_rotation(word: &[ArrowId]) -> usize {
    let n = word.len();
    let mut best = 0;
    for i in 1..n {
        for k in 0..n {
            let a = word[(i + k) % n];
            let b = word[(best + k) % n];
            if a < b {
                best = i;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    best
}

fn smallest_period(word: &[ArrowId]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| word[i] == word[(i + p) % n]))
        .unwrap_or(n)
}

impl OrientedCycle {
    /// Builds a cycle from an arrow word, checking that consecutive arrows
    /// chain and that the word closes up (t(a_l) = s(a₁)).
    pub fn new(quiver: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::EndpointMismatch {
                message: "empty arrow word".into(),
            });
        }
        let l = arrows.len();
        for i in 0..l {
            let here = quiver.arrow(arrows[i]);
            let next = quiver.arrow(arrows[(i + 1) % l]);
            if here.target != next.source {
                return Err(Error::EndpointMismatch {
                    message: format!(
                        "t({}) = {} but s({}) = {}",
                        here.name, here.target, next.name, next.source
                    ),
                });
            }
        }
        let start = least_rotation(&arrows);
        let canonical: Vec<ArrowId> = (0..l).map(|k| arrows[(start + k) % l]).collect();
        let aperiodic = smallest_period(&canonical) == l;
        Ok(OrientedCycle {
            arrows: canonical,
            aperiodic,
        })
    }

    /// Arrow word in canonical (least) rotation.
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_aperiodic(&self) -> bool {
        self.aperiodic
    }

    /// Cyclic window of `size` arrows starting at position `i`.
    pub fn window(&self, i: usize, size: usize) -> Vec<ArrowId> {
        (0..size)
            .map(|k| self.arrows[(i + k) % self.arrows.len()])
            .collect()
    }

    /// The cycle repeated `times` over, as a flat arrow word.
    pub fn repeat(&self, times: usize) -> Vec<ArrowId> {
        let mut out = Vec::with_capacity(self.arrows.len() * times);
        for _ in 0..times {
            out.extend_from_slice(&self.arrows);
        }
        out
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| quiver.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Per-window outcome of an m-truncation check.
#[derive(Clone, Debug)]
pub struct WindowCheck {
    pub m: usize,
    /// Cyclic length-m windows paired with "is zero in A".
    pub zero_windows: Vec<(Vec<ArrowId>, bool)>,
    /// Cyclic length-(m-1) windows paired with "is nonzero in A".
    pub nonzero_windows: Vec<(Vec<ArrowId>, bool)>,
}

impl WindowCheck {
    pub fn passes(&self) -> bool {
        self.zero_windows.iter().all(|(_, ok)| *ok)
            && self.nonzero_windows.iter().all(|(_, ok)| *ok)
    }

    /// First failing window, for error messages.
    pub fn first_failure(&self) -> Option<(&[ArrowId], &'static str)> {
        for (w, ok) in &self.zero_windows {
            if !ok {
                return Some((w, "expected zero"));
            }
        }
        for (w, ok) in &self.nonzero_windows {
            if !ok {
                return Some((w, "expected nonzero"));
            }
        }
        None
    }
}

/// A verified m-truncated oriented cycle with its window evidence.
#[derive(Clone, Debug)]
pub struct TruncationWitness {
    pub cycle: OrientedCycle,
    pub m: usize,
    /// The l cyclic length-m windows, all zero in A.
    pub zero_windows: Vec<Vec<ArrowId>>,
    /// The l cyclic length-(m-1) windows, all nonzero in A.
    pub nonzero_windows: Vec<Vec<ArrowId>>,
}

fn word_is_zero(algebra: &Algebra, word: &[ArrowId]) -> bool {
    let path = Path::from_arrows(algebra.quiver(), word.to_vec())
        .expect("cyclic windows are composable");
    algebra.normal_form_of_path(&path).is_empty()
}

/// Checks the m-truncation windows of a cycle, returning every window's
/// verdict so callers can report the exact failure.
pub fn is_m_truncated(algebra: &Algebra, cycle: &OrientedCycle, m: usize) -> WindowCheck {
    assert!(m >= 2, "truncation degree must be at least 2");
    let l = cycle.len();
    let zero_windows = (0..l)
        .map(|i| {
            let w = cycle.window(i, m);
            let ok = word_is_zero(algebra, &w);
            (w, ok)
        })
        .collect();
    let nonzero_windows = (0..l)
        .map(|i| {
            let w = cycle.window(i, m - 1);
            let ok = !word_is_zero(algebra, &w);
            (w, ok)
        })
        .collect();
    WindowCheck {
        m,
        zero_windows,
        nonzero_windows,
    }
}

/// The m-truncation search graph on nonzero length-(m-1) arrow words.
#[derive(Clone, Debug)]
pub struct WindowGraph {
    pub m: usize,
    /// Nonzero arrow words of length m-1, sorted; for m = 2, single arrows.
    pub nodes: Vec<Vec<ArrowId>>,
    /// Adjacency by node index, targets sorted.
    pub edges: Vec<Vec<usize>>,
}

impl WindowGraph {
    /// Search depth covering every elementary cycle, with slack for
    /// explicitly requested small powers.
    pub fn default_max_len(&self) -> usize {
        2 * self.nodes.len()
    }
}

/// Builds the window graph of A at truncation degree m.
pub fn build_window_graph(algebra: &Algebra, m: usize) -> WindowGraph {
    assert!(m >= 2, "truncation degree must be at least 2");
    let quiver = algebra.quiver();

    // Nonzero composable words of length m-1; zero prefixes cannot recover.
    let mut words: Vec<Vec<ArrowId>> = (0..quiver.arrows().len()).map(|a| vec![a]).collect();
    for _ in 1..m - 1 {
        let mut longer = Vec::new();
        for w in &words {
            let end = quiver.arrow(*w.last().unwrap()).target;
            for &c in quiver.arrows_from(end) {
                let mut next = w.clone();
                next.push(c);
                if !word_is_zero(algebra, &next) {
                    longer.push(next);
                }
            }
        }
        words = longer;
    }
    words.sort();

    let node_index: std::collections::BTreeMap<&Vec<ArrowId>, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for (i, w) in words.iter().enumerate() {
        let end = quiver.arrow(*w.last().unwrap()).target;
        for &c in quiver.arrows_from(end) {
            let mut extended = w.clone();
            extended.push(c);
            if !word_is_zero(algebra, &extended) {
                continue;
            }
            let shifted: Vec<ArrowId> = extended[1..].to_vec();
            if let Some(&j) = node_index.get(&shifted) {
                edges[i].push(j);
            }
        }
        edges[i].sort_unstable();
    }
    WindowGraph {
        m,
        nodes: words,
        edges,
    }
}

/// Enumerates elementary cycles of length <= max_len as node-index walks.
/// Each cycle is found once, rooted at its least node; order is DFS order.
fn elementary_cycles(edges: &[Vec<usize>], max_len: usize) -> Vec<Vec<usize>> {
    fn dfs(
        v: usize,
        start: usize,
        edges: &[Vec<usize>],
        max_len: usize,
        on_path: &mut [bool],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        stack.push(v);
        on_path[v] = true;
        for &w in &edges[v] {
            if w == start {
                out.push(stack.clone());
            } else if w > start && !on_path[w] && stack.len() < max_len {
                dfs(w, start, edges, max_len, on_path, stack, out);
            }
        }
        stack.pop();
        on_path[v] = false;
    }

    let n = edges.len();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if max_len >= 1 {
            dfs(start, start, edges, max_len, &mut on_path, &mut stack, &mut out);
        }
    }
    out
}

fn witness_from_cycle(
    algebra: &Algebra,
    cycle: OrientedCycle,
    m: usize,
) -> TruncationWitness {
    let check = is_m_truncated(algebra, &cycle, m);
    assert!(
        check.passes(),
        "window-graph cycle failed re-verification: {:?}",
        check.first_failure()
    );
    TruncationWitness {
        cycle,
        m,
        zero_windows: check.zero_windows.into_iter().map(|(w, _)| w).collect(),
        nonzero_windows: check.nonzero_windows.into_iter().map(|(w, _)| w).collect(),
    }
}

/// All m-truncated oriented cycles of length <= max_len arising from
/// elementary window-graph cycles, deduplicated by rotation and sorted by
/// (length, canonical word). Every witness is re-verified window by window.
pub fn find_truncated_cycles(
    algebra: &Algebra,
    m: usize,
    max_len: usize,
) -> Vec<TruncationWitness> {
    let graph = build_window_graph(algebra, m);
    let walks = elementary_cycles(&graph.edges, max_len);
    let mut seen: BTreeSet<Vec<ArrowId>> = BTreeSet::new();
    let mut cycles: Vec<OrientedCycle> = Vec::new();
    for walk in walks {
        let arrows: Vec<ArrowId> = walk.iter().map(|&i| graph.nodes[i][0]).collect();
        let cycle = OrientedCycle::new(algebra.quiver(), arrows)
            .expect("window-graph walks chain cyclically");
        if seen.insert(cycle.arrows().to_vec()) {
            cycles.push(cycle);
        }
    }
    cycles.sort_by(|a, b| (a.len(), a.arrows()).cmp(&(b.len(), b.arrows())));
    cycles
        .into_iter()
        .map(|c| witness_from_cycle(algebra, c, m))
        .collect()
}

/// A shortest 2-truncated oriented cycle of A (ties broken by canonical
/// rotation order), or None when the m=2 window graph is acyclic. Shortest
/// cycles pass through distinct arrows, so the result is aperiodic.
pub fn minimal_two_truncated(algebra: &Algebra) -> Option<OrientedCycle> {
    let graph = build_window_graph(algebra, 2);
    let witnesses = find_truncated_cycles(algebra, 2, graph.nodes.len());
    witnesses.into_iter().next().map(|w| w.cycle)
}
