//! Seeded random monomial algebras and the cross-module property battery
//! they are run through.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::cycles::find_truncated_cycles;
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::hochschild::{
    boundary_matrix, chain_basis_capped, certify_nonvanishing, hh0_direct, hh_compare_summand,
    hh_dimensions, ChainBasis, ResourceCaps,
};
use crate::presentation::{AlgebraPresentation, FreeElement};
use crate::quiver::{Arrow, Path, Quiver};
use crate::resolutions::{
    pd_simple_cutoff, pd_simple_monomial, gldim_monomial, projective_cover_and_syzygy,
    simple_module, PdBound, PdValue,
};

/// Size envelope for generated algebras. Defaults stay small enough that
/// exact homology up to degree six is cheap.
#[derive(Clone, Debug)]
pub struct CorpusParams {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_rel_len: usize,
    pub max_rels: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_vertices: 4,
            max_arrows: 5,
            max_rel_len: 4,
            max_rels: 5,
        }
    }
}

const GENERATION_ATTEMPTS: usize = 100;

/// Draws a finite-dimensional monomial presentation over the rationals,
/// deterministically from the seed, retrying on infinite-dimensional draws.
pub fn random_monomial_algebra(seed: u64, params: &CorpusParams) -> Result<AlgebraPresentation> {
    assert!(params.max_vertices >= 1, "positive vertex bound");
    assert!(params.max_arrows >= 1, "positive arrow bound");
    assert!(params.max_rel_len >= 2, "relation words need length two");
    assert!(params.max_rels >= 1, "positive relation bound");
    let field = FieldDescriptor::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_ATTEMPTS {
        let n = rng.gen_range(1..=params.max_vertices);
        let arrow_count = rng.gen_range(1..=params.max_arrows);
        let arrows: Vec<Arrow> = (0..arrow_count)
            .map(|i| Arrow {
                name: format!("a{}", i + 1),
                source: rng.gen_range(1..=n),
                target: rng.gen_range(1..=n),
            })
            .collect();
        let quiver = Quiver::new(n, arrows);

        let rel_count = rng.gen_range(1..=params.max_rels);
        let mut words: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        for _ in 0..rel_count {
            let len = rng.gen_range(2..=params.max_rel_len);
            let mut word = vec![rng.gen_range(0..arrow_count)];
            let mut at = quiver.arrow(word[0]).target;
            while word.len() < len {
                let out = quiver.arrows_from(at);
                if out.is_empty() {
                    break;
                }
                let next = out[rng.gen_range(0..out.len())];
                word.push(next);
                at = quiver.arrow(next).target;
            }
            if word.len() >= 2 {
                words.insert(word);
            }
        }
        let relations: Vec<FreeElement> = words
            .into_iter()
            .map(|w| {
                let path = Path::from_arrows(&quiver, w).expect("walk is composable");
                FreeElement::from_path(path, &field)
            })
            .collect();
        let pres = AlgebraPresentation::new(quiver, field, relations, None);
        match Algebra::new(pres.clone()) {
            Ok(_) => return Ok(pres),
            Err(Error::InfiniteDimensional { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationExhausted {
        attempts: GENERATION_ATTEMPTS,
    })
}

/// Rebuilds a monomial presentation over another coefficient field.
pub fn monomial_presentation_over(
    pres: &AlgebraPresentation,
    field: FieldDescriptor,
) -> AlgebraPresentation {
    assert!(pres.monomial, "only monomial relations carry over verbatim");
    let relations: Vec<FreeElement> = pres
        .relations
        .iter()
        .map(|r| {
            let (path, _) = r.terms().next().expect("nonzero relation");
            FreeElement::from_path(path.clone(), &field)
        })
        .collect();
    AlgebraPresentation::new(pres.quiver.clone(), field, relations, pres.nil_bound)
}

fn max_relation_length(pres: &AlgebraPresentation) -> usize {
    pres.relations
        .iter()
        .filter_map(|r| r.min_term_len())
        .max()
        .unwrap_or(2)
}

/// Outcome of the property battery on one generated algebra.
#[derive(Clone, Debug)]
pub struct CorpusCheckOutcome {
    pub seed: u64,
    pub dim: usize,
    pub witness_bearing: bool,
    pub checks_run: Vec<&'static str>,
    pub skipped: Vec<&'static str>,
    pub violations: Vec<String>,
}

/// Aggregate over a seed range.
#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub algebras: usize,
    pub witness_bearing: usize,
    pub violation_count: usize,
    pub outcomes: Vec<CorpusCheckOutcome>,
}

fn capped_bases(
    algebra: &Algebra,
    q_max: usize,
    caps: &ResourceCaps,
) -> Result<Vec<ChainBasis>> {
    (0..=q_max + 1)
        .map(|q| chain_basis_capped(algebra, q, Some(caps.max_chain_tuples)))
        .collect()
}

/// Runs every cross-module property over one algebra; resource-limited
/// checks are skipped, everything else must hold.
pub fn check_algebra(
    seed: u64,
    algebra: &Algebra,
    q_max: usize,
    caps: &ResourceCaps,
) -> CorpusCheckOutcome {
    let mut out = CorpusCheckOutcome {
        seed,
        dim: algebra.dim(),
        witness_bearing: false,
        checks_run: Vec::new(),
        skipped: Vec::new(),
        violations: Vec::new(),
    };
    let violation = |v: &mut Vec<String>, msg: String| v.push(format!("seed {seed}: {msg}"));

    match capped_bases(algebra, q_max, caps) {
        Err(_) => out.skipped.push("boundary_squares_to_zero"),
        Ok(bases) => {
            out.checks_run.push("boundary_squares_to_zero");
            for q in 2..=q_max + 1 {
                let outer = boundary_matrix(algebra, &bases[q - 1], &bases[q - 2]);
                let inner = boundary_matrix(algebra, &bases[q], &bases[q - 1]);
                if !outer.matmul(&inner).is_zero() {
                    violation(&mut out.violations, format!("∂² ≠ 0 in degree {q}"));
                }
            }
        }
    }

    let dims = match hh_dimensions(algebra, q_max, caps) {
        Err(_) => {
            out.skipped.push("hh0_matches_direct");
            None
        }
        Ok(dims) => {
            out.checks_run.push("hh0_matches_direct");
            if dims[0] != hh0_direct(algebra) {
                violation(
                    &mut out.violations,
                    format!("HH₀ = {} from the complex but {} directly", dims[0], hh0_direct(algebra)),
                );
            }
            Some(dims)
        }
    };

    let gldim = gldim_monomial(algebra).expect("corpus algebras are monomial");
    let mut witnesses_any = Vec::new();
    for m in 2..=max_relation_length(algebra.presentation()) {
        witnesses_any.extend(find_truncated_cycles(algebra, m, 8));
    }
    out.witness_bearing = !witnesses_any.is_empty();
    out.checks_run.push("gldim_cycle_consistency");
    if matches!(gldim.value, PdValue::Finite(_)) && out.witness_bearing {
        violation(
            &mut out.violations,
            "finite global dimension alongside a truncated cycle".to_string(),
        );
    }

    out.checks_run.push("pd_oracle_agreement");
    let cutoff = (2 * algebra.dim()).max(6);
    for v in algebra.quiver().vertices() {
        let exact = pd_simple_monomial(algebra, v).expect("monomial");
        let bounded = pd_simple_cutoff(algebra, v, cutoff);
        let agree = match (&exact.value, &bounded) {
            (PdValue::Finite(d), PdBound::Exact(b)) => d == b,
            (PdValue::Infinite, PdBound::AtLeast(b)) => *b == cutoff + 1,
            _ => false,
        };
        if !agree {
            violation(
                &mut out.violations,
                format!("pd routes disagree at vertex {v}: {exact:?} vs {bounded:?}"),
            );
        }
    }

    out.checks_run.push("syzygy_dimension_law");
    for v in algebra.quiver().vertices() {
        let (_, syz) = projective_cover_and_syzygy(algebra, &simple_module(algebra, v))
            .expect("simples satisfy the relations");
        let predicted: usize = algebra
            .quiver()
            .arrows_from(v)
            .iter()
            .map(|&a| {
                let word = [a];
                algebra
                    .basis()
                    .paths()
                    .iter()
                    .filter(|r| r.arrows().first() == Some(&word[0]))
                    .count()
            })
            .sum();
        if syz.total_dim() != predicted {
            violation(
                &mut out.violations,
                format!(
                    "Ω(S_{v}) has dimension {} but the direct-sum law predicts {predicted}",
                    syz.total_dim()
                ),
            );
        }
    }

    if let (PdValue::Finite(g), Some(dims)) = (&gldim.value, &dims) {
        out.checks_run.push("happel_vanishing");
        for (i, &d) in dims.iter().enumerate().skip(g + 1) {
            if d != 0 {
                violation(
                    &mut out.violations,
                    format!("gldim {g} but HH_{i} has dimension {d}"),
                );
            }
        }
    }

    if let Some(cycle) = crate::cycles::minimal_two_truncated(algebra) {
        let l = cycle.len();
        out.checks_run.push("witness_certificate");
        for m in 1..=q_max {
            if l * m - 1 > q_max || (m % 2 == 0 && l % 2 == 1) {
                continue;
            }
            match certify_nonvanishing(algebra, &cycle, m, caps) {
                Err(Error::ResourceLimit { .. }) => {
                    out.skipped.push("witness_certificate");
                    break;
                }
                Err(e) => violation(
                    &mut out.violations,
                    format!("certificate construction failed: {e}"),
                ),
                Ok(cert) => {
                    if !cert.hh_lower_bound {
                        violation(
                            &mut out.violations,
                            format!(
                                "certificate for {} at m = {m} does not bound HH_{}",
                                cycle.display(algebra.quiver()),
                                cert.degree
                            ),
                        );
                    }
                }
            }
        }
    }

    if let Some(witness) = witnesses_any.first() {
        let l = witness.cycle.len();
        let m = witness.m;
        if l * m <= 7 {
            out.checks_run.push("summand_domination");
            match hh_compare_summand(algebra, witness, q_max.min(6), caps) {
                Err(Error::ResourceLimit { .. }) => {
                    out.checks_run.pop();
                    out.skipped.push("summand_domination");
                }
                Err(e) => violation(
                    &mut out.violations,
                    format!("summand comparison failed: {e}"),
                ),
                Ok(report) => {
                    if !report.dominated {
                        violation(
                            &mut out.violations,
                            format!(
                                "HH(A) does not dominate HH(Λ({l},{m})): {:?} vs {:?}",
                                report.dims_algebra, report.dims_cycle_algebra
                            ),
                        );
                    }
                }
            }
        }
    }

    out
}

/// Generates `count` algebras from consecutive seeds and runs the battery
/// on each.
pub fn run_corpus_checks(
    base_seed: u64,
    count: usize,
    params: &CorpusParams,
    q_max: usize,
    caps: &ResourceCaps,
) -> Result<CorpusReport> {
    let started = std::time::Instant::now();
    let mut outcomes = Vec::with_capacity(count);
    for i in 0..count {
        caps.check_deadline(started)?;
        let seed = base_seed + i as u64;
        let pres = random_monomial_algebra(seed, params)?;
        let algebra = Algebra::new(pres)?;
        outcomes.push(check_algebra(seed, &algebra, q_max, caps));
    }
    Ok(CorpusReport {
        algebras: outcomes.len(),
        witness_bearing: outcomes.iter().filter(|o| o.witness_bearing).count(),
        violation_count: outcomes.iter().map(|o| o.violations.len()).sum(),
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_presentation;

    #[test]
    fn generation_is_deterministic_per_seed() {
        let params = CorpusParams::default();
        for seed in [0u64, 1, 7, 42] {
            let a = random_monomial_algebra(seed, &params).unwrap();
            let b = random_monomial_algebra(seed, &params).unwrap();
            assert_eq!(a.to_quiver_text(), b.to_quiver_text());
        }
    }

    #[test]
    fn generated_presentations_validate_and_are_finite() {
        let params = CorpusParams::default();
        for seed in 0..20u64 {
            let pres = random_monomial_algebra(seed, &params).unwrap();
            assert!(pres.monomial);
            for rel in &pres.relations {
                assert_eq!(rel.term_count(), 1);
                assert!(rel.min_term_len().unwrap() >= 2);
            }
            let report = validate_presentation(pres.clone()).unwrap();
            assert!(report.dim >= pres.quiver.vertex_count());
        }
    }

    #[test]
    fn field_change_preserves_the_monomial_basis() {
        let params = CorpusParams::default();
        let pres = random_monomial_algebra(3, &params).unwrap();
        let over_q = Algebra::new(pres.clone()).unwrap();
        let over_f5 =
            Algebra::new(monomial_presentation_over(&pres, FieldDescriptor::Prime(5))).unwrap();
        assert_eq!(over_q.dim(), over_f5.dim());
        assert_eq!(over_q.nilpotency(), over_f5.nilpotency());
    }

    #[test]
    fn battery_reports_no_violations_on_a_sample() {
        let report = run_corpus_checks(
            100,
            10,
            &CorpusParams::default(),
            3,
            &ResourceCaps::default(),
        )
        .unwrap();
        assert_eq!(report.algebras, 10);
        assert_eq!(report.violation_count, 0, "{:?}", report.outcomes);
    }
}
