//! Representation-level projective covers and syzygies: the route that works
//! for any admissible presentation, monomial or not, up to an iteration cap.

use quiver_hh::algebra::Algebra;
use quiver_hh::presentation::parse_presentation;
use quiver_hh::resolutions::{
    default_cutoff, gldim_cutoff, pd_simple_cutoff, projective_cover_and_syzygy, simple_module,
    PdBound,
};

fn load(name: &str) -> quiver_hh::Result<Algebra> {
    let path = format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"));
    Algebra::new(parse_presentation(&std::fs::read_to_string(path)?)?)
}

fn show_bound(label: &str, bound: &PdBound) {
    match bound {
        PdBound::Exact(d) => println!("  {label}: exactly {d}"),
        PdBound::AtLeast(d) => println!("  {label}: at least {d} (cutoff reached)"),
    }
}

fn main() -> quiver_hh::Result<()> {
    let linear = load("linear_ab.quiver")?;
    println!("linear_ab.quiver, resolving S_1 one syzygy at a time:");
    let mut module = simple_module(&linear, 1);
    for step in 1.. {
        let (multiplicities, syzygy) = projective_cover_and_syzygy(&linear, &module)?;
        println!(
            "  step {step}: cover multiplicities {:?}, syzygy dims {:?}",
            multiplicities, syzygy.dims
        );
        if syzygy.is_zero() {
            println!("  resolution stops, pd S_1 = {}", step - 1);
            break;
        }
        module = syzygy;
    }
    show_bound("pd_simple_cutoff(1, 6)", &pd_simple_cutoff(&linear, 1, 6));

    let remark7 = load("remark7.quiver")?;
    println!("\nremark7.quiver, the cutoff route can only bound from below:");
    show_bound("pd_simple_cutoff(1, 6)", &pd_simple_cutoff(&remark7, 1, 6));
    show_bound("pd_simple_cutoff(2, 6)", &pd_simple_cutoff(&remark7, 2, 6));
    let report = gldim_cutoff(&remark7, 6);
    show_bound("gldim_cutoff(6) aggregate", &report.aggregate);

    let commuting = Algebra::new(parse_presentation(
        "field: Q\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelation x*x\nrelation y*y\nrelation x*y - y*x\nnilbound: 3\n",
    )?)?;
    println!("\nK[x,y]/(x^2, y^2, xy - yx), not monomial, same machinery applies:");
    let cutoff = default_cutoff(&commuting);
    let report = gldim_cutoff(&commuting, cutoff);
    show_bound(&format!("gldim_cutoff({cutoff}) aggregate"), &report.aggregate);
    Ok(())
}
