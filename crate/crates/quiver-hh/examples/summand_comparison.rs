//! Compare HH dimensions of a monomial algebra against the cyclic algebra
//! carried by one of its truncated cycles: the small algebra's dimensions
//! bound the big one's from below, degree by degree.

use quiver_hh::algebra::Algebra;
use quiver_hh::cycles::find_truncated_cycles;
use quiver_hh::field::FieldDescriptor;
use quiver_hh::hochschild::{hh_compare_summand, truncated_cycle_algebra, ResourceCaps};
use quiver_hh::presentation::parse_presentation;

fn main() -> quiver_hh::Result<()> {
    for (l, m) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
        let algebra = Algebra::new(truncated_cycle_algebra(l, m, FieldDescriptor::Rationals))?;
        println!(
            "cyclic algebra on {l} vertex(es), windows of length {m} vanish: dim {}",
            algebra.dim()
        );
    }

    let text = "\
field: Q
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 3
relation a*b
relation b*a
relation a*c
";
    let algebra = Algebra::new(parse_presentation(text)?)?;
    println!("\nhost algebra: dim {}, with a 2-truncated 2-cycle (a, b) inside", algebra.dim());

    let witness = find_truncated_cycles(&algebra, 2, 8)
        .into_iter()
        .next()
        .expect("the (a, b) cycle is found");
    let caps = ResourceCaps::default();
    let report = hh_compare_summand(&algebra, &witness, 4, &caps)?;
    println!("  cycle length l = {}, truncation m = {}", report.l, report.m);
    println!("  host HH dims   q = 0..: {:?}", report.dims_algebra);
    println!("  cyclic HH dims q = 0..: {:?}", report.dims_cycle_algebra);
    println!("  dominated in degrees 1 and up: {}", report.dominated);
    Ok(())
}
