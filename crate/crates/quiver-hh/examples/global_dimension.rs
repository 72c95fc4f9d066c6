//! Global dimension of monomial algebras through the successor graph: exact
//! values, explicit witness chains, and infinite-dimension cycle witnesses.

use quiver_hh::algebra::Algebra;
use quiver_hh::presentation::parse_presentation;
use quiver_hh::resolutions::{build_successor_graph, gldim_monomial, pd_simple_monomial, PdValue};

fn load(name: &str) -> quiver_hh::Result<Algebra> {
    let path = format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"));
    Algebra::new(parse_presentation(&std::fs::read_to_string(path)?)?)
}

fn main() -> quiver_hh::Result<()> {
    for name in ["hereditary_a2.quiver", "linear_ab.quiver", "remark7.quiver", "dual.quiver"] {
        let algebra = load(name)?;
        println!("{name}");

        let graph = build_successor_graph(&algebra)?;
        println!("  successor graph:");
        for (i, targets) in graph.edges().iter().enumerate() {
            let shown: Vec<String> = targets.iter().map(|&t| graph.display_node(&algebra, t)).collect();
            println!("    {} -> {:?}", graph.display_node(&algebra, i), shown);
        }

        for vertex in algebra.quiver().vertices() {
            let pd = pd_simple_monomial(&algebra, vertex)?;
            match pd.value {
                PdValue::Finite(d) => println!(
                    "  pd S_{vertex} = {d}, chain {:?}",
                    pd.display_witness(&algebra)
                ),
                PdValue::Infinite => println!(
                    "  pd S_{vertex} = infinite, reachable cycle {:?}",
                    pd.display_witness(&algebra)
                ),
            }
        }

        let g = gldim_monomial(&algebra)?;
        match g.value {
            PdValue::Finite(d) => println!("  gldim = {d}"),
            PdValue::Infinite => println!("  gldim = infinite"),
        }
        println!();
    }
    Ok(())
}
