//! Compute Hochschild homology dimensions from the normalized chain complex:
//! enumerate chain tuples, build boundary matrices, take exact ranks.

use quiver_hh::algebra::Algebra;
use quiver_hh::hochschild::{
    boundary_matrix, chain_basis, hh0_direct, hh_dimensions, ResourceCaps,
};
use quiver_hh::presentation::parse_presentation;

fn load(name: &str) -> quiver_hh::Result<Algebra> {
    let path = format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"));
    Algebra::new(parse_presentation(&std::fs::read_to_string(path)?)?)
}

fn main() -> quiver_hh::Result<()> {
    let dual = load("dual.quiver")?;
    println!("dual.quiver (K[x]/(x^2))");
    for q in 0..=3 {
        let basis = chain_basis(&dual, q);
        let shown: Vec<String> = basis.tuples().iter().map(|t| t.display(&dual)).collect();
        println!("  C_{q}: dim {} {:?}", basis.len(), shown);
    }
    let b2 = boundary_matrix(&dual, &chain_basis(&dual, 2), &chain_basis(&dual, 1));
    println!("  rank b_2 = {} over Q, since b(e_1; a, a) = 2(a; a)", b2.rank());

    let caps = ResourceCaps::default();
    let dims = hh_dimensions(&dual, 4, &caps)?;
    println!("  dim HH_q for q = 0..=4: {dims:?}");
    println!("  dim A/[A,A] = {} (independent HH_0 route)", hh0_direct(&dual));

    for name in ["cycle2.quiver", "hereditary_a2.quiver", "linear_ab.quiver"] {
        let algebra = load(name)?;
        let dims = hh_dimensions(&algebra, 4, &caps)?;
        println!("\n{name}\n  dim HH_q for q = 0..=4: {dims:?}");
    }
    Ok(())
}
