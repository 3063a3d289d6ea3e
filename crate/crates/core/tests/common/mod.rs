#![allow(dead_code)]

use ellipse_rips::circle::CyclePosition;
use ellipse_rips::graph::CyclicGraph;
use ellipse_rips::oracle::{betti_numbers, clique_complex, DEFAULT_SIMPLEX_CAP};
use rand::Rng;

/// A random valid cyclic graph on `n` vertices, drawn from one of four
/// families: regular graphs `C_n^k`, sparse perturbations of them, out-degree
/// random walks obeying the closure inequality, and "within distance r"
/// graphs of random points on the circle. Invalid draws are rejected.
pub fn random_cyclic_graph(rng: &mut impl Rng, n: usize) -> CyclicGraph {
    loop {
        // skip the complete graph C_{2k+1}^k unless n leaves no other choice
        let k = rng.gen_range(n / 4..=(n.saturating_sub(2) / 2).max(n / 4));
        let candidate = match rng.gen_range(0..4) {
            0 => CyclicGraph::regular(n, k),
            1 => {
                let d: Vec<usize> = (0..n)
                    .map(|_| match rng.gen_range(0..8) {
                        0 => k.saturating_sub(1),
                        1 => k + 1,
                        _ => k,
                    })
                    .collect();
                CyclicGraph::evenly_spaced(d)
            }
            2 => {
                let mut d = vec![0usize; n];
                d[0] = rng.gen_range(0..n.div_ceil(2));
                for i in 1..n {
                    let lo = d[i - 1].saturating_sub(1);
                    d[i] = rng.gen_range(lo..=(lo + 2).min(n - 1));
                }
                CyclicGraph::evenly_spaced(d)
            }
            _ => circle_graph(rng, n),
        };
        if let Ok(g) = candidate {
            return g;
        }
    }
}

fn circle_graph(rng: &mut impl Rng, n: usize) -> ellipse_rips::Result<CyclicGraph> {
    let mut pos: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    pos.sort_by(f64::total_cmp);
    pos.dedup();
    let r = rng.gen_range(0.0..0.5f64).max(rng.gen_range(0.0..0.5));
    let m = pos.len();
    let out: Vec<usize> = (0..m)
        .map(|i| {
            (1..m)
                .take_while(|&j| (pos[(i + j) % m] - pos[i]).rem_euclid(1.0) < r)
                .count()
        })
        .collect();
    CyclicGraph::new(pos.into_iter().map(CyclePosition::new).collect(), out)
}

/// Betti numbers in dimensions `0..=max_dim` of the clique complex, by
/// matrix reduction.
pub fn oracle_betti(g: &CyclicGraph, max_dim: usize) -> Vec<usize> {
    let c = clique_complex(&g.undirected_adjacency(), max_dim + 1, DEFAULT_SIMPLEX_CAP).expect("small complex");
    betti_numbers(&c, max_dim).betti
}
