//! The map "jump as far clockwise as possible": periodic orbits, fast and
//! slow vertices, and the travelled distance γ_m.

use ellipse_rips::dynamics::{classify_vertices, gamma_m, periodic_orbits};
use ellipse_rips::graph::fixtures;

fn main() -> ellipse_rips::Result<()> {
    for (name, g) in [("six vertices", fixtures::six_vertex()), ("eight vertices", fixtures::eight_vertex())] {
        let orbits = periodic_orbits(&g)?;
        let classes = classify_vertices(&g)?;
        println!(
            "{name}: {} orbit(s) of length {} winding {} -> wf {}",
            orbits.count,
            orbits.length,
            orbits.winding,
            orbits.winding_fraction()?
        );
        for (v, class) in classes.iter().enumerate() {
            let m = orbits.length;
            println!("  v{v}: {class:?}, γ_{m} = {:.4}", gamma_m(&g, v, m));
        }
    }
    Ok(())
}
