//! Build the distinguished chain on a 2-truncated cycle and certify that its
//! class survives in homology: closed under the boundary, outside the image.

use quiver_hh::algebra::Algebra;
use quiver_hh::cycles::minimal_two_truncated;
use quiver_hh::hochschild::{certify_nonvanishing, BoundaryStatus, ResourceCaps};
use quiver_hh::presentation::parse_presentation;

fn load(name: &str) -> quiver_hh::Result<Algebra> {
    let path = format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"));
    Algebra::new(parse_presentation(&std::fs::read_to_string(path)?)?)
}

fn show(algebra: &Algebra, m: usize) -> quiver_hh::Result<()> {
    let cycle = minimal_two_truncated(algebra).expect("a 2-truncated cycle exists");
    let caps = ResourceCaps::default();
    let cert = certify_nonvanishing(algebra, &cycle, m, &caps)?;
    let xi: Vec<String> = cert.xi.keys().map(|t| t.display(algebra)).collect();
    println!("  cycle {} repeated {} times", cert.cycle.display(algebra.quiver()), m);
    println!("    xi = {:?} in degree {}", xi, cert.degree);
    println!("    b(xi) = 0: {}", cert.is_cycle);
    match &cert.boundary_status {
        BoundaryStatus::NotInImage => println!("    xi not in image of b: true"),
        BoundaryStatus::InImage { preimage } => {
            let eta: Vec<String> = preimage.keys().map(|t| t.display(algebra)).collect();
            println!("    xi = b(eta) for eta supported on {eta:?}");
        }
    }
    println!("    certifies dim HH_{} >= 1: {}", cert.degree, cert.hh_lower_bound);
    Ok(())
}

fn main() -> quiver_hh::Result<()> {
    let dual = load("dual.quiver")?;
    println!("dual.quiver over Q, odd repetition counts certify:");
    show(&dual, 1)?;
    show(&dual, 3)?;
    println!("\ndual.quiver over Q, an even count bounds (the class dies):");
    show(&dual, 2)?;

    let dual_f2 = Algebra::new(parse_presentation(
        "field: Fp 2\nvertices: 1\narrow a: 1 -> 1\nrelation a*a\n",
    )?)?;
    println!("\nsame algebra over F_2, the even count survives:");
    show(&dual_f2, 2)?;

    let cycle2 = load("cycle2.quiver")?;
    println!("\ncycle2.quiver, even cycle length lets every count through:");
    show(&cycle2, 1)?;
    show(&cycle2, 2)?;
    Ok(())
}
