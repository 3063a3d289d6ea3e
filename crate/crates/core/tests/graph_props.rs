mod common;

use ellipse_rips::circle::in_cyclic_order;
use ellipse_rips::dynamics::{gamma_m, orbits_hit, periodic_orbits, step};
use ellipse_rips::graph::{CyclicGraph, HomotopyType, WindingFraction};
use ellipse_rips::oracle::{clique_complex, induced_rank, DEFAULT_SIMPLEX_CAP};
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{oracle_betti, random_cyclic_graph};

fn graph(seed: u64, n: usize) -> CyclicGraph {
    random_cyclic_graph(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn homotopy_type_matches_reduction_through_dim_3(seed: u64, n in 1usize..=10) {
        let g = graph(seed, n);
        prop_assert_eq!(g.homotopy_type().unwrap().betti(3), oracle_betti(&g, 3));
    }

    #[test]
    fn dismantling_keeps_homology(seed: u64, n in 1usize..=12) {
        let g = graph(seed, n);
        let d = g.dismantle().unwrap();
        prop_assert_eq!(oracle_betti(&g, 2), oracle_betti(&d.core, 2));
        prop_assert!(d.core.validate());
    }

    #[test]
    fn orbit_ratio_is_the_winding_fraction(seed: u64, n in 1usize..=30) {
        let g = graph(seed, n);
        let o = periodic_orbits(&g).unwrap();
        let wf = WindingFraction::new(o.winding as u64, o.length as u64).unwrap();
        prop_assert_eq!(wf, g.dismantle().unwrap().winding_fraction());
        prop_assert_eq!(o.count * o.length, o.orbits.iter().map(Vec::len).sum::<usize>());
    }

    #[test]
    fn travel_differs_by_less_than_one_lap(seed: u64, n in 1usize..=12) {
        let g = graph(seed, n);
        for m in 1..=3 * n {
            let gammas: Vec<f64> = (0..n.min(g.len())).map(|v| gamma_m(&g, v, m)).collect();
            let hi = gammas.iter().cloned().fold(f64::MIN, f64::max);
            let lo = gammas.iter().cloned().fold(f64::MAX, f64::min);
            prop_assert!(hi - lo < 1.0, "m = {m}: spread {}", hi - lo);
        }
    }

    #[test]
    fn average_travel_approaches_the_winding_fraction(seed: u64, n in 1usize..=12) {
        let g = graph(seed, n);
        let wf = g.winding_fraction().unwrap().value();
        let m = 10 * g.len();
        for v in 0..g.len() {
            let avg = gamma_m(&g, v, m) / m as f64;
            prop_assert!((avg - wf).abs() <= 2.0 / m as f64, "v{v}: {avg} vs {wf}");
        }
    }

    #[test]
    fn step_preserves_cyclic_order(seed: u64, n in 3usize..=12) {
        let g = graph(seed, n);
        let pos = g.positions();
        let n = g.len();
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    let (fu, fv, fw) = (step(&g, u), step(&g, v), step(&g, w));
                    prop_assert!(in_cyclic_order(pos[fu], pos[fv], pos[fw], false)
                        || fu == fv || fv == fw || fw == fu);
                }
            }
        }
    }

    #[test]
    fn induced_subgraphs_are_cyclic(seed: u64, n in 1usize..=12, mask: u16) {
        let g = graph(seed, n);
        let keep: Vec<usize> = (0..g.len()).filter(|&v| mask & (1 << v) != 0).collect();
        prop_assert!(g.induced(&keep).validate());
    }

    #[test]
    fn adding_edges_merges_orbits_with_matching_rank(seed: u64, k in 1usize..=4) {
        // C_{3k}^k has k orbits; raising a few out-degrees keeps wf = 1/3 while
        // merging some of them.
        let n = 3 * k;
        let base = CyclicGraph::regular(n, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bigger = loop {
            let d: Vec<usize> = (0..n).map(|_| k + usize::from(rng.gen_bool(0.3))).collect();
            if let Ok(g) = CyclicGraph::evenly_spaced(d) {
                if g.winding_fraction().map(|w| w == WindingFraction::new(1, 3).unwrap()).unwrap_or(false) {
                    break g;
                }
            }
        };
        let id: Vec<usize> = (0..n).collect();
        let hit = orbits_hit(&base, &bigger, &id).unwrap();
        let small = clique_complex(&base.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        let big = clique_complex(&bigger.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        prop_assert_eq!(induced_rank(&small, &big, 2).unwrap(), hit - 1);
    }
}

#[test]
fn regular_graph_winding_fractions() {
    for n in 1..=30u64 {
        for k in 0..n {
            if 2 * k >= n {
                break;
            }
            let g = CyclicGraph::regular(n as usize, k as usize).unwrap();
            let wf = g.winding_fraction().unwrap();
            let d = k.gcd(&n);
            assert_eq!((wf.numer(), wf.denom()), (k / d, n / d), "C_{n}^{k}");
        }
    }
}

#[test]
fn every_small_regular_graph_matches_reduction() {
    for n in 1..=12 {
        for k in 0..n {
            if 2 * k >= n {
                break;
            }
            let g = CyclicGraph::regular(n, k).unwrap();
            assert_eq!(g.homotopy_type().unwrap().betti(3), oracle_betti(&g, 3), "C_{n}^{k}");
        }
    }
    assert_eq!(CyclicGraph::regular(8, 3).unwrap().homotopy_type().unwrap(), HomotopyType::sphere(3));
}
