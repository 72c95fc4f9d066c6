//! Quivers and paths.
//!
//! Vertices are the integers 1..n. Arrows carry a declaration-order id that
//! doubles as the lexicographic rank wherever paths are compared. Path
//! composition is left-to-right throughout the crate: `pq` means "p then q",
//! so consecutive arrows satisfy t(a_i) = s(a_{i+1}).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// 1-based vertex label as it appears in presentation files.
pub type VertexId = usize;

/// 0-based index into [`Quiver::arrows`], in declaration order.
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with vertex set {1, …, n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    by_name: BTreeMap<String, ArrowId>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
}

impl Quiver {
    /// Assembles a quiver from validated parts. Callers are responsible for
    /// endpoint range and name uniqueness; violations are programming errors.
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Self {
        let mut by_name = BTreeMap::new();
        let mut out_arrows = vec![Vec::new(); vertex_count];
        let mut in_arrows = vec![Vec::new(); vertex_count];
        for (id, arrow) in arrows.iter().enumerate() {
            assert!(
                (1..=vertex_count).contains(&arrow.source)
                    && (1..=vertex_count).contains(&arrow.target),
                "arrow endpoint outside 1..=n"
            );
            let clash = by_name.insert(arrow.name.clone(), id);
            assert!(clash.is_none(), "duplicate arrow name {}", arrow.name);
            out_arrows[arrow.source - 1].push(id);
            in_arrows[arrow.target - 1].push(id);
        }
        Quiver {
            vertex_count,
            arrows,
            by_name,
            out_arrows,
            in_arrows,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.by_name.get(name).copied()
    }

    /// Arrows with source `v`, in declaration order.
    pub fn arrows_from(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v - 1]
    }

    /// Arrows with target `v`, in declaration order.
    pub fn arrows_into(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v - 1]
    }
}

/// A path in the quiver: a composable arrow sequence, or a trivial path e_v.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// Builds a path from a nonempty arrow sequence, checking composability.
    /// Returns the failing position when consecutive endpoints do not chain.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<ArrowId>) -> std::result::Result<Self, usize> {
        assert!(!arrows.is_empty(), "use Path::trivial for empty paths");
        for i in 0..arrows.len() - 1 {
            if quiver.arrow(arrows[i]).target != quiver.arrow(arrows[i + 1]).source {
                return Err(i);
            }
        }
        Ok(Path {
            source: quiver.arrow(arrows[0]).source,
            target: quiver.arrow(*arrows.last().unwrap()).target,
            arrows,
        })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Left-to-right composition: `self` then `other`. `None` when the
    /// endpoints do not meet; trivial paths act as identities.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// Renders in the same syntax the presentation format reads: arrow names
    /// joined by `*`, or `e_v` for a trivial path.
    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", self.source)
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// Length-lex order: shorter paths first, then by arrow ids in declaration
/// order; trivial paths tie-break by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.arrows.len(), &self.arrows, self.source).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.source,
        ))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> Quiver {
        Quiver::new(
            2,
            vec![
                Arrow {
                    name: "a1".into(),
                    source: 1,
                    target: 2,
                },
                Arrow {
                    name: "a2".into(),
                    source: 2,
                    target: 1,
                },
            ],
        )
    }

    #[test]
    fn trivial_paths_are_identities_under_composition() {
        let q = two_cycle();
        let a1 = Path::from_arrows(&q, vec![0]).unwrap();
        let e1 = Path::trivial(1);
        let e2 = Path::trivial(2);
        assert_eq!(e1.compose(&a1), Some(a1.clone()));
        assert_eq!(a1.compose(&e2), Some(a1.clone()));
        assert_eq!(a1.compose(&e1), None);
        assert_eq!(e2.compose(&a1), None);
    }

    #[test]
    fn composition_is_left_to_right() {
        let q = two_cycle();
        let a1 = Path::from_arrows(&q, vec![0]).unwrap();
        let a2 = Path::from_arrows(&q, vec![1]).unwrap();
        let a1a2 = a1.compose(&a2).unwrap();
        assert_eq!(a1a2.arrows(), &[0, 1]);
        assert_eq!((a1a2.source(), a1a2.target()), (1, 1));
        assert_eq!(a1.compose(&a1), None);
    }

    #[test]
    fn from_arrows_reports_first_break() {
        let q = two_cycle();
        assert!(Path::from_arrows(&q, vec![0, 1, 0]).is_ok());
        assert_eq!(Path::from_arrows(&q, vec![0, 0]), Err(0));
        assert_eq!(Path::from_arrows(&q, vec![0, 1, 1]), Err(1));
    }

    #[test]
    fn length_lex_order_puts_trivials_first() {
        let q = two_cycle();
        let mut paths = [
            Path::from_arrows(&q, vec![0, 1]).unwrap(),
            Path::from_arrows(&q, vec![1]).unwrap(),
            Path::trivial(2),
            Path::from_arrows(&q, vec![0]).unwrap(),
            Path::trivial(1),
        ];
        paths.sort();
        let shown: Vec<String> = paths.iter().map(|p| p.display(&q)).collect();
        assert_eq!(shown, vec!["e_1", "e_2", "a1", "a2", "a1*a2"]);
    }

    #[test]
    fn incidence_lists_follow_declaration_order() {
        let q = two_cycle();
        assert_eq!(q.arrows_from(1), &[0]);
        assert_eq!(q.arrows_into(1), &[1]);
        assert_eq!(q.arrow_by_name("a2"), Some(1));
        assert_eq!(q.arrow_by_name("missing"), None);
    }
}
