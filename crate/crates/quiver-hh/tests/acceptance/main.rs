//! Acceptance suite: one test per shipped guarantee, each printing a single
//! pass/fail line through the harness and enforcing its own time budget.

mod oracle;

use std::path::Path;
use std::time::{Duration, Instant};

use quiver_hh::algebra::Algebra;
use quiver_hh::corpus::{random_monomial_algebra, CorpusParams};
use quiver_hh::cycles::{find_truncated_cycles, minimal_two_truncated};
use quiver_hh::field::FieldDescriptor;
use quiver_hh::hochschild::{
    boundary_matrix, certify_nonvanishing, chain_basis_capped, hh0_direct, hh_compare_summand,
    hh_dimensions, truncated_cycle_algebra, ResourceCaps,
};
use quiver_hh::presentation::{parse_presentation, AlgebraPresentation};
use quiver_hh::resolutions::{
    gldim_monomial, pd_simple_cutoff, pd_simple_monomial, PdBound, PdValue,
};
use quiver_hh::Error;

fn bundled(name: &str) -> Algebra {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    let text = std::fs::read_to_string(&path).expect("bundled example readable");
    Algebra::new(parse_presentation(&text).expect("bundled example parses"))
        .expect("bundled example builds")
}

fn corpus_algebras(count: usize) -> Vec<(u64, Algebra)> {
    let params = CorpusParams::default();
    (0..count as u64)
        .map(|seed| {
            let pres = random_monomial_algebra(seed, &params).expect("generation succeeds");
            (seed, Algebra::new(pres).expect("generated algebra builds"))
        })
        .collect()
}

fn max_relation_length(pres: &AlgebraPresentation) -> usize {
    pres.relations
        .iter()
        .flat_map(|r| r.terms().map(|(p, _)| p.arrows().len()))
        .max()
        .unwrap_or(2)
}

fn within(start: Instant, budget: Duration, label: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "{label} took {elapsed:?}, budget {budget:?}"
    );
    println!("{label}: pass in {elapsed:?}");
}

#[test]
fn a1_certificates_on_truncated_cycle_algebras() {
    let start = Instant::now();
    let caps = ResourceCaps::default();
    let mut verified = Vec::new();
    for l in 1..=3usize {
        for m in 1..=10usize {
            let degree = l * m - 1;
            if degree > 9 || (m % 2 == 0 && l % 2 == 1) {
                continue;
            }
            let algebra =
                Algebra::new(truncated_cycle_algebra(l, 2, FieldDescriptor::Rationals)).unwrap();
            let cycle = minimal_two_truncated(&algebra).expect("the full cycle is 2-truncated");
            assert_eq!(cycle.len(), l);
            let cert = certify_nonvanishing(&algebra, &cycle, m, &caps).unwrap();
            assert_eq!(cert.degree, degree);
            assert!(
                cert.hh_lower_bound,
                "certificate must hold for l = {l}, m = {m}"
            );
            let dims = hh_dimensions(&algebra, degree, &caps).unwrap();
            assert!(
                dims[degree] >= 1,
                "rank computation must confirm HH_{degree} != 0 for l = {l}, m = {m}"
            );
            verified.push((l, m));
        }
    }
    assert_eq!(
        verified,
        vec![
            (1, 1), (1, 3), (1, 5), (1, 7), (1, 9),
            (2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
            (3, 1), (3, 3),
        ]
    );
    within(start, Duration::from_secs(60), "a1 certificates on cyclic algebras");
}

#[test]
fn a2_dual_numbers_homology_matches_dense_oracle() {
    let start = Instant::now();
    let dual = bundled("dual.quiver");
    let dims = hh_dimensions(&dual, 6, &ResourceCaps::default()).unwrap();
    assert_eq!(dims, vec![2, 1, 1, 1, 1, 1, 1]);

    let reference = oracle::Oracle::new(1, vec![(1, 1)], vec![vec![0, 0]]);
    assert_eq!(reference.dim(), 2);
    for q in 2..=7 {
        assert!(oracle::boundary_squares_to_zero(&reference, q));
    }
    assert_eq!(reference.hh_dimensions(6), dims);
    within(start, Duration::from_secs(5), "a2 dual numbers homology vs oracle");
}

#[test]
fn a3_two_cycle_homology_matches_dense_oracle() {
    let start = Instant::now();
    let algebra = bundled("cycle2.quiver");
    assert_eq!(algebra.dim(), 4);
    let dims = hh_dimensions(&algebra, 5, &ResourceCaps::default()).unwrap();
    assert_eq!(dims, vec![2, 1, 1, 1, 1, 1]);

    let reference = oracle::Oracle::new(2, vec![(1, 2), (2, 1)], vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(reference.dim(), 4);
    for q in 2..=6 {
        assert!(oracle::boundary_squares_to_zero(&reference, q));
    }
    assert_eq!(reference.hh_dimensions(5), dims);
    within(start, Duration::from_secs(10), "a3 two-cycle homology vs oracle");
}

#[test]
fn a4_boundaries_square_to_zero_and_hh0_routes_agree() {
    let start = Instant::now();
    let caps = ResourceCaps::default();
    let bundled_names = [
        "dual.quiver",
        "cycle2.quiver",
        "cycle3.quiver",
        "remark7.quiver",
        "hereditary_a2.quiver",
        "linear_ab.quiver",
    ];
    let mut checked = 0usize;
    let mut subjects: Vec<(String, Algebra, usize)> = bundled_names
        .iter()
        .map(|n| (n.to_string(), bundled(n), 5))
        .collect();
    for (seed, algebra) in corpus_algebras(50) {
        subjects.push((format!("seed {seed}"), algebra, 3));
    }
    for (label, algebra, q_max) in &subjects {
        let bases: Vec<_> = (0..=q_max + 1)
            .map(|q| chain_basis_capped(algebra, q, Some(caps.max_chain_tuples)).unwrap())
            .collect();
        for q in 2..=*q_max {
            let upper = boundary_matrix(algebra, &bases[q], &bases[q - 1]);
            let lower = boundary_matrix(algebra, &bases[q - 1], &bases[q - 2]);
            assert!(
                lower.matmul(&upper).is_zero(),
                "consecutive boundaries must compose to zero on {label} at q = {q}"
            );
        }
        let dims = hh_dimensions(algebra, 0, &caps).unwrap();
        assert_eq!(dims[0], hh0_direct(algebra), "HH_0 routes disagree on {label}");
        checked += 1;
    }
    assert_eq!(checked, 56);
    within(start, Duration::from_secs(300), "a4 boundary squares and hh0 agreement");
}

#[test]
fn a5_round_trip_algebra_has_no_cycles_yet_infinite_dimension() {
    let start = Instant::now();
    let algebra = bundled("remark7.quiver");
    for m in 2..=4 {
        assert!(
            find_truncated_cycles(&algebra, m, 8).is_empty(),
            "no {m}-truncated cycle up to length 8"
        );
    }
    let g = gldim_monomial(&algebra).unwrap();
    assert_eq!(g.value, PdValue::Infinite);
    assert_eq!(g.display_witness(&algebra), vec!["a2*a1".to_string()]);
    assert_eq!(pd_simple_cutoff(&algebra, 1, 6), PdBound::AtLeast(7));
    within(start, Duration::from_secs(5), "a5 cycle-free with infinite global dimension");
}

#[test]
fn a6_finite_global_dimension_excludes_truncated_cycles() {
    let start = Instant::now();
    let params = CorpusParams::default();
    let mut finite_count = 0usize;
    for seed in 0..50u64 {
        let pres = random_monomial_algebra(seed, &params).unwrap();
        let rel_len = max_relation_length(&pres);
        let algebra = Algebra::new(pres).unwrap();
        let g = gldim_monomial(&algebra).unwrap();
        if g.value == PdValue::Infinite {
            continue;
        }
        finite_count += 1;
        for m in 2..=rel_len {
            assert!(
                find_truncated_cycles(&algebra, m, 8).is_empty(),
                "seed {seed} has finite global dimension yet an {m}-truncated cycle"
            );
        }
    }
    assert!(finite_count >= 5, "sample should contain finite cases, got {finite_count}");
    within(start, Duration::from_secs(300), "a6 finite gldim excludes truncated cycles");
}

#[test]
fn a7_witness_algebras_dominate_their_cyclic_summand() {
    let start = Instant::now();
    let params = CorpusParams::default();
    let caps = ResourceCaps::default();
    let mut dominated = 0usize;
    let mut seed = 0u64;
    while dominated < 10 && seed < 300 {
        let pres = random_monomial_algebra(seed, &params).unwrap();
        let rel_len = max_relation_length(&pres);
        let algebra = Algebra::new(pres).unwrap();
        let witness = (2..=rel_len)
            .flat_map(|m| find_truncated_cycles(&algebra, m, 8))
            .next();
        seed += 1;
        let Some(witness) = witness else { continue };
        match hh_compare_summand(&algebra, &witness, 6, &caps) {
            Ok(report) => {
                assert!(
                    report.dominated,
                    "seed {} must dominate its cyclic algebra degreewise",
                    seed - 1
                );
                dominated += 1;
            }
            Err(Error::ResourceLimit { .. }) => continue,
            Err(e) => panic!("unexpected failure on seed {}: {e}", seed - 1),
        }
    }
    assert!(dominated >= 10, "needed 10 dominating witnesses, found {dominated}");
    within(start, Duration::from_secs(600), "a7 summand domination on witness algebras");
}

#[test]
fn a8_syzygy_route_agrees_with_successor_graph_route() {
    let start = Instant::now();
    for (seed, algebra) in corpus_algebras(50) {
        let cutoff = algebra.dim() + 2;
        for vertex in algebra.quiver().vertices() {
            let graph_route = pd_simple_monomial(&algebra, vertex).unwrap();
            let rep_route = pd_simple_cutoff(&algebra, vertex, cutoff);
            match graph_route.value {
                PdValue::Finite(d) => {
                    assert!(d <= cutoff, "finite pd exceeds cutoff on seed {seed}");
                    assert_eq!(
                        rep_route,
                        PdBound::Exact(d),
                        "routes disagree on seed {seed}, vertex {vertex}"
                    );
                }
                PdValue::Infinite => {
                    assert_eq!(
                        rep_route,
                        PdBound::AtLeast(cutoff + 1),
                        "infinite pd must exhaust the cutoff on seed {seed}, vertex {vertex}"
                    );
                }
            }
        }
    }
    within(start, Duration::from_secs(300), "a8 syzygy and successor-graph routes agree");
}

#[test]
fn a9_finite_global_dimension_kills_high_homology() {
    let start = Instant::now();
    let caps = ResourceCaps::default();

    let hereditary = bundled("hereditary_a2.quiver");
    let g = gldim_monomial(&hereditary).unwrap();
    assert_eq!(g.value, PdValue::Finite(1));
    assert_eq!(hh_dimensions(&hereditary, 3, &caps).unwrap(), vec![2, 0, 0, 0]);

    let linear = bundled("linear_ab.quiver");
    let g = gldim_monomial(&linear).unwrap();
    assert_eq!(g.value, PdValue::Finite(2));
    let dims = hh_dimensions(&linear, 4, &caps).unwrap();
    assert_eq!(&dims[3..], &[0, 0], "HH_i vanishes for 2 < i <= 4");
    within(start, Duration::from_secs(5), "a9 finite gldim vanishing spot checks");
}
