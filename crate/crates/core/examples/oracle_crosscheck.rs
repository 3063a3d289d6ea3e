//! Compares the combinatorial homotopy type of random cyclic graphs with
//! Betti numbers of their clique complexes computed by matrix reduction.

use ellipse_rips::graph::CyclicGraph;
use ellipse_rips::oracle::{betti_numbers, clique_complex, DEFAULT_SIMPLEX_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> ellipse_rips::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 20 {
        let n: usize = rng.gen_range(3..=10);
        let degrees: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.div_ceil(2))).collect();
        let Ok(g) = CyclicGraph::evenly_spaced(degrees) else { continue };
        let h = g.homotopy_type()?;
        let c = clique_complex(&g.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP)?;
        let betti = betti_numbers(&c, 2).betti;
        let agree = if betti == h.betti(2) { "agree" } else { "DISAGREE" };
        println!("{:?} ≃ {h}: betti {betti:?} {agree}", g.out_degrees());
        checked += 1;
    }
    Ok(())
}
