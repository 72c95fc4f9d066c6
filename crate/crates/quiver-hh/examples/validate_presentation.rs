//! Parse a `.quiver` presentation, build the algebra, and print the
//! validation report: dimension, nilpotency index, basis paths.

use quiver_hh::algebra::Algebra;
use quiver_hh::presentation::parse_presentation;

fn main() -> quiver_hh::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/remark7.quiver");
    let text = std::fs::read_to_string(path)?;
    let presentation = parse_presentation(&text)?;
    let algebra = Algebra::new(presentation)?;

    let report = algebra.validation_report();
    println!("input: {path}");
    println!("dim A        = {}", report.dim);
    println!("nilpotency   = {} (J^{} = 0)", report.nilpotency, report.nilpotency);
    println!("monomial     = {}", report.monomial);
    println!("vertices     = {}", report.vertices);
    println!("arrows       = {}", report.arrows);
    println!("relations    = {}", report.relations);

    println!("\nbasis paths (trivial first, then length-lex):");
    for path in algebra.basis().paths() {
        println!("  {}", path.display(algebra.quiver()));
    }

    let bad = "field: Q\nvertices: 1\narrow a: 1 -> 1\n";
    match Algebra::new(parse_presentation(bad)?) {
        Err(e) => println!("\nloop without relations is rejected: {e}"),
        Ok(_) => unreachable!("an unbounded loop algebra must not validate"),
    }
    Ok(())
}
