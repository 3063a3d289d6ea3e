//! Dismantling, winding fractions and homotopy types of small cyclic graphs.

use ellipse_rips::graph::{fixtures, CyclicGraph};

fn report(name: &str, g: &CyclicGraph) -> ellipse_rips::Result<()> {
    let d = g.dismantle()?;
    println!("{name}: out-degrees {:?}", g.out_degrees());
    for (i, round) in d.rounds.iter().enumerate() {
        println!("  round {}: remove {:?}", i + 1, round);
    }
    println!(
        "  core C_{}^{} on {:?}, wf = {}, clique complex ≃ {}",
        d.core.len(),
        d.core.out_degree(0),
        d.core_vertices,
        g.winding_fraction()?,
        g.homotopy_type()?
    );
    Ok(())
}

fn main() -> ellipse_rips::Result<()> {
    report("six vertices", &fixtures::six_vertex())?;
    report("eight vertices", &fixtures::eight_vertex())?;
    report("C_9^3", &fixtures::nine_three())?;
    // the regular graphs sweep through the circle's homotopy types
    for k in 1..6 {
        let g = CyclicGraph::regular(12, k)?;
        println!("C_12^{k}: {}", g.homotopy_type()?);
    }
    Ok(())
}
