//! Presentation files and the elements of the free path algebra KQ.
//!
//! The text format is line-oriented with `#` comments:
//!
//! ```text
//! field: Q            # or: field: Fp 5
//! vertices: 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! relation a*b - 2/3 a*b
//! nilbound: 6         # required when any relation has two or more terms
//! ```
//!
//! Paths are `*`-separated arrow names read left to right; coefficients are
//! integers or fractions and default to 1.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::quiver::{Arrow, Path, Quiver, VertexId};

/// A K-linear combination of paths in the free path algebra KQ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Path, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(path: Path, field: &FieldDescriptor) -> Self {
        let mut e = FreeElement::zero();
        e.add_term(field, path, field.one());
        e
    }

    pub fn add_term(&mut self, field: &FieldDescriptor, path: Path, coeff: Scalar) {
        let cur = self.terms.get(&path).cloned().unwrap_or_else(|| field.zero());
        let new = field.add(&cur, &coeff);
        if field.is_zero(&new) {
            self.terms.remove(&path);
        } else {
            self.terms.insert(path, new);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Common (source, target) of all terms, when the element is nonzero and
    /// its terms are parallel; `None` otherwise.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let pair = (first.source(), first.target());
        iter.all(|p| (p.source(), p.target()) == pair).then_some(pair)
    }

    pub fn min_term_len(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.len()).min()
    }

    pub fn display(&self, quiver: &Quiver, field: &FieldDescriptor) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (path, coeff)) in self.terms.iter().enumerate() {
            let is_one = coeff == &field.one();
            let neg = field.neg(coeff);
            let is_neg_one = neg == field.one();
            if i == 0 {
                if is_neg_one {
                    out.push_str("- ");
                } else if !is_one {
                    out.push_str(&field.format_scalar(coeff));
                    out.push(' ');
                }
            } else if field.is_negative(coeff) || is_neg_one {
                out.push_str(" - ");
                if !is_neg_one {
                    out.push_str(&field.format_scalar(&neg));
                    out.push(' ');
                }
            } else {
                out.push_str(" + ");
                if !is_one {
                    out.push_str(&field.format_scalar(coeff));
                    out.push(' ');
                }
            }
            out.push_str(&path.display(quiver));
        }
        out
    }
}

/// A bounded quiver algebra presentation A = KQ/I, prior to basis computation.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub field: FieldDescriptor,
    pub relations: Vec<FreeElement>,
    pub nil_bound: Option<usize>,
    pub monomial: bool,
}

impl AlgebraPresentation {
    pub fn new(
        quiver: Quiver,
        field: FieldDescriptor,
        relations: Vec<FreeElement>,
        nil_bound: Option<usize>,
    ) -> Self {
        let relations: Vec<FreeElement> =
            relations.into_iter().filter(|r| !r.is_zero()).collect();
        let monomial = relations.iter().all(|r| r.term_count() == 1);
        AlgebraPresentation {
            quiver,
            field,
            relations,
            nil_bound,
            monomial,
        }
    }

    /// Serializes back to the presentation text format; parsing the output
    /// reproduces the presentation.
    pub fn to_quiver_text(&self) -> String {
        let mut out = String::new();
        match self.field {
            FieldDescriptor::Rationals => out.push_str("field: Q\n"),
            FieldDescriptor::Prime(p) => out.push_str(&format!("field: Fp {p}\n")),
        }
        out.push_str("vertices:");
        for v in self.quiver.vertices() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
        for arrow in self.quiver.arrows() {
            out.push_str(&format!("arrow {arrow}\n"));
        }
        for rel in &self.relations {
            out.push_str(&format!(
                "relation {}\n",
                rel.display(&self.quiver, &self.field)
            ));
        }
        if let Some(n) = self.nil_bound {
            out.push_str(&format!("nilbound: {n}\n"));
        }
        out
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_field_line(rest: &str, line: usize) -> Result<FieldDescriptor> {
    let rest = rest.trim();
    if rest == "Q" {
        return Ok(FieldDescriptor::Rationals);
    }
    if let Some(p_text) = rest.strip_prefix("Fp") {
        let p: u64 = p_text
            .trim()
            .parse()
            .map_err(|_| parse_err(line, "expected a prime after `Fp`"))?;
        return FieldDescriptor::prime(p)
            .map_err(|_| parse_err(line, format!("{p} is not prime")));
    }
    Err(parse_err(line, "field must be `Q` or `Fp <prime>`"))
}

fn parse_word(word: &str, quiver: &Quiver, line: usize) -> Result<Path> {
    let mut arrows = Vec::new();
    for name in word.split('*') {
        if name.is_empty() {
            return Err(parse_err(line, format!("empty arrow name in `{word}`")));
        }
        match quiver.arrow_by_name(name) {
            Some(id) => arrows.push(id),
            None => {
                return Err(Error::UnknownArrow {
                    name: name.to_string(),
                    line,
                })
            }
        }
    }
    Path::from_arrows(quiver, arrows).map_err(|i| {
        let left = quiver.arrow(quiver.arrow_by_name(word.split('*').nth(i).unwrap()).unwrap());
        let right =
            quiver.arrow(quiver.arrow_by_name(word.split('*').nth(i + 1).unwrap()).unwrap());
        Error::NonComposablePath {
            line,
            message: format!(
                "`{word}`: t({}) = {} but s({}) = {}",
                left.name, left.target, right.name, right.source
            ),
        }
    })
}

fn parse_relation_expr(
    expr: &str,
    quiver: &Quiver,
    field: &FieldDescriptor,
    line: usize,
) -> Result<FreeElement> {
    let padded = expr.replace('+', " + ").replace('-', " - ");
    let tokens: Vec<&str> = padded.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(parse_err(line, "empty relation"));
    }
    let mut elem = FreeElement::zero();
    let mut i = 0;
    let mut first = true;
    while i < tokens.len() {
        let mut negative = false;
        let mut signs = 0;
        while i < tokens.len() && (tokens[i] == "+" || tokens[i] == "-") {
            if tokens[i] == "-" {
                negative = !negative;
            }
            signs += 1;
            i += 1;
        }
        if i == tokens.len() {
            return Err(parse_err(line, "relation ends with a dangling sign"));
        }
        if !first && signs == 0 {
            return Err(parse_err(line, "expected `+` or `-` between terms"));
        }
        let mut coeff = field.from_i64(if negative { -1 } else { 1 });
        if tokens[i].chars().next().unwrap().is_ascii_digit() {
            let lit = field.parse_scalar(tokens[i])?;
            coeff = field.mul(&coeff, &lit);
            i += 1;
            if i == tokens.len() || tokens[i] == "+" || tokens[i] == "-" {
                return Err(parse_err(line, "coefficient without a path"));
            }
        }
        let path = parse_word(tokens[i], quiver, line)?;
        i += 1;
        if path.len() < 2 {
            return Err(Error::NotAdmissible {
                message: format!(
                    "relation term `{}` at line {line} has length {} < 2",
                    path.display(quiver),
                    path.len()
                ),
            });
        }
        elem.add_term(field, path, coeff);
        first = false;
    }
    Ok(elem)
}

/// Parses the presentation text format into a structurally valid
/// [`AlgebraPresentation`] with the monomial flag computed.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let mut field: Option<FieldDescriptor> = None;
    let mut vertex_count: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut arrow_names: BTreeSet<String> = BTreeSet::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut nil_bound: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("field:") {
            if field.is_some() {
                return Err(parse_err(line, "duplicate `field:` line"));
            }
            field = Some(parse_field_line(rest, line)?);
        } else if let Some(rest) = content.strip_prefix("vertices:") {
            if vertex_count.is_some() {
                return Err(parse_err(line, "duplicate `vertices:` line"));
            }
            let mut seen = BTreeSet::new();
            for tok in rest.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad vertex `{tok}`")))?;
                if v == 0 || !seen.insert(v) {
                    return Err(parse_err(line, format!("bad vertex `{tok}`")));
                }
            }
            let n = seen.len();
            if n == 0 {
                return Err(parse_err(line, "empty vertex list"));
            }
            if seen.iter().copied().ne(1..=n) {
                return Err(parse_err(line, "vertices must be exactly 1..n"));
            }
            vertex_count = Some(n);
        } else if let Some(rest) = content.strip_prefix("arrow ") {
            let n = vertex_count
                .ok_or_else(|| parse_err(line, "`arrow` before `vertices:`"))?;
            let (name, endpoints) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line, "expected `arrow name: s -> t`"))?;
            let name = name.trim();
            if !is_valid_name(name) {
                return Err(parse_err(line, format!("bad arrow name `{name}`")));
            }
            if !arrow_names.insert(name.to_string()) {
                return Err(parse_err(line, format!("duplicate arrow name `{name}`")));
            }
            let (s, t) = endpoints
                .split_once("->")
                .ok_or_else(|| parse_err(line, "expected `arrow name: s -> t`"))?;
            let parse_vertex = |tok: &str| -> Result<VertexId> {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad vertex `{}`", tok.trim())))?;
                if (1..=n).contains(&v) {
                    Ok(v)
                } else {
                    Err(parse_err(line, format!("vertex {v} was not declared")))
                }
            };
            arrows.push(Arrow {
                name: name.to_string(),
                source: parse_vertex(s)?,
                target: parse_vertex(t)?,
            });
        } else if let Some(rest) = content.strip_prefix("relation ") {
            relation_lines.push((line, rest.trim().to_string()));
        } else if let Some(rest) = content.strip_prefix("nilbound:") {
            if nil_bound.is_some() {
                return Err(parse_err(line, "duplicate `nilbound:` line"));
            }
            let nb: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(line, "bad nilbound"))?;
            if nb < 2 {
                return Err(parse_err(line, "nilbound must be at least 2"));
            }
            nil_bound = Some(nb);
        } else {
            return Err(parse_err(
                line,
                format!("unrecognized directive `{content}`"),
            ));
        }
    }

    let field = field.ok_or_else(|| parse_err(0, "missing `field:` line"))?;
    let vertex_count = vertex_count.ok_or_else(|| parse_err(0, "missing `vertices:` line"))?;
    let quiver = Quiver::new(vertex_count, arrows);

    let mut relations = Vec::new();
    for (line, expr) in relation_lines {
        let elem = parse_relation_expr(&expr, &quiver, &field, line)?;
        if elem.is_zero() {
            continue;
        }
        if elem.endpoints().is_none() {
            return Err(Error::NonParallelRelation {
                line,
                message: format!("terms of `{expr}` have differing endpoints"),
            });
        }
        relations.push(elem);
    }

    Ok(AlgebraPresentation::new(quiver, field, relations, nil_bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL: &str = "field: Q\nvertices: 1\narrow a: 1 -> 1\nrelation a*a\n";
    const REMARK7: &str = "\
field: Q
vertices: 1 2
arrow a1: 1 -> 2
arrow a2: 2 -> 1
relation a1*a2*a1
";

    #[test]
    fn dual_numbers_parse_as_monomial() {
        let p = parse_presentation(DUAL).unwrap();
        assert_eq!(p.quiver.vertex_count(), 1);
        assert_eq!(p.quiver.arrows().len(), 1);
        assert_eq!(p.relations.len(), 1);
        assert!(p.monomial);
        assert_eq!(p.nil_bound, None);
    }

    #[test]
    fn remark7_relation_reads_left_to_right() {
        let p = parse_presentation(REMARK7).unwrap();
        assert!(p.monomial);
        let (path, _) = p.relations[0].terms().next().unwrap();
        assert_eq!(path.arrows(), &[0, 1, 0]);
        assert_eq!((path.source(), path.target()), (1, 2));
    }

    #[test]
    fn non_composable_relation_is_rejected() {
        let text = "field: Q\nvertices: 1 2\narrow a1: 1 -> 2\narrow a2: 2 -> 1\nrelation a1*a1\n";
        match parse_presentation(text) {
            Err(Error::NonComposablePath { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected NonComposablePath, got {other:?}"),
        }
    }

    #[test]
    fn unknown_arrow_is_reported_by_name() {
        let text = "field: Q\nvertices: 1\narrow a: 1 -> 1\nrelation a*b\n";
        match parse_presentation(text) {
            Err(Error::UnknownArrow { name, line }) => {
                assert_eq!(name, "b");
                assert_eq!(line, 4);
            }
            other => panic!("expected UnknownArrow, got {other:?}"),
        }
    }

    #[test]
    fn non_parallel_terms_are_rejected() {
        let text = "\
field: Q
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a*b + b*a
";
        assert!(matches!(
            parse_presentation(text),
            Err(Error::NonParallelRelation { line: 5, .. })
        ));
    }

    #[test]
    fn short_relation_terms_are_not_admissible() {
        let text = "field: Q\nvertices: 1\narrow a: 1 -> 1\nrelation a\n";
        assert!(matches!(
            parse_presentation(text),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn coefficients_parse_with_signs_and_fractions() {
        let text = "\
field: Q
vertices: 1
arrow x: 1 -> 1
arrow y: 1 -> 1
relation x*y - 2/3 y*x
nilbound: 4
";
        let p = parse_presentation(text).unwrap();
        assert!(!p.monomial);
        assert_eq!(p.nil_bound, Some(4));
        let rel = &p.relations[0];
        assert_eq!(rel.term_count(), 2);
        let f = p.field;
        let coeffs: Vec<String> = rel
            .terms()
            .map(|(path, c)| format!("{}:{}", path.display(&p.quiver), f.format_scalar(c)))
            .collect();
        assert_eq!(coeffs, vec!["x*y:1", "y*x:-2/3"]);
    }

    #[test]
    fn cancelling_terms_drop_the_relation() {
        let text = "field: Q\nvertices: 1\narrow x: 1 -> 1\nrelation x*x - x*x\n";
        let p = parse_presentation(text).unwrap();
        assert!(p.relations.is_empty());
        assert!(p.monomial);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\nfield: Q\n\nvertices: 1  # one vertex\narrow a: 1 -> 1\n";
        assert!(parse_presentation(text).is_ok());
    }

    #[test]
    fn prime_field_header_accepts_only_primes() {
        assert!(parse_presentation("field: Fp 5\nvertices: 1\n").is_ok());
        assert!(parse_presentation("field: Fp 6\nvertices: 1\n").is_err());
        assert!(parse_presentation("field: R\nvertices: 1\n").is_err());
    }

    #[test]
    fn structural_line_errors_carry_line_numbers() {
        assert!(matches!(
            parse_presentation("field: Q\nvertices: 1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("field: Q\narrow a: 1 -> 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("field: Q\nvertices: 1\nnonsense here\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_presentation("vertices: 1\n"),
            Err(Error::Parse { line: 0, .. })
        ));
    }

    #[test]
    fn round_trip_through_text_preserves_presentation() {
        let text = "\
field: Fp 7
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a*b*a - 3 a*b*a
nilbound: 5
";
        let p = parse_presentation(text).unwrap();
        let rendered = p.to_quiver_text();
        let q = parse_presentation(&rendered).unwrap();
        assert_eq!(p.field, q.field);
        assert_eq!(p.relations.len(), q.relations.len());
        assert_eq!(rendered, q.to_quiver_text());
    }
}
