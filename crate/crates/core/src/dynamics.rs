//! The finite dynamical system attached to a cyclic graph.
//!
//! `f(v)` is the clockwise-most vertex of the closed out-neighbourhood of `v`;
//! in run-length form that is simply `v + out_degree[v]`.

use serde::{Deserialize, Serialize};

use crate::circle::cw_dist;
use crate::error::{consistency, param, Result};
use crate::graph::{CyclicGraph, WindingFraction};

/// Periodic orbits of `f`, all of which share one length and winding number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitReport {
    /// Each orbit in `f`-iteration order, starting at its smallest vertex;
    /// orbits sorted by that vertex.
    pub orbits: Vec<Vec<usize>>,
    /// Common orbit length `ℓ`.
    pub length: usize,
    /// Common winding number `ω`.
    pub winding: usize,
    /// Number of orbits `P`.
    pub count: usize,
}

impl OrbitReport {
    /// `ω/ℓ` reduced.
    pub fn winding_fraction(&self) -> Result<WindingFraction> {
        WindingFraction::new(self.winding as u64, self.length as u64)
    }

    /// `orbit_of[v]` is the index of the orbit containing `v`, if periodic.
    pub fn orbit_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (o, orbit) in self.orbits.iter().enumerate() {
            for &v in orbit {
                idx[v] = Some(o);
            }
        }
        idx
    }

    pub fn periodic_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    Periodic,
    Fast,
    Slow,
}

/// One step of the dynamics.
pub fn step(g: &CyclicGraph, v: usize) -> usize {
    (v + g.out_degree(v)) % g.len()
}

/// `f^m(v)`.
pub fn iterate(g: &CyclicGraph, v: usize, m: usize) -> usize {
    (0..m).fold(v, |u, _| step(g, u))
}

/// Total clockwise distance travelled along `v, f(v), ..., f^m(v)`.
///
/// For a finite graph the supremum over directed paths of length `m` is
/// attained by the greedy path.
pub fn gamma_m(g: &CyclicGraph, v: usize, m: usize) -> f64 {
    let mut total = 0.0;
    let mut u = v;
    for _ in 0..m {
        let w = step(g, u);
        total += g.gap(u, w);
        u = w;
    }
    total
}

/// Finds every periodic orbit of `f`.
///
/// Uses the usual three-colour walk on a functional graph, which visits each
/// vertex once; a vertex is periodic iff it lies on the cycle a walk closes.
pub fn periodic_orbits(g: &CyclicGraph) -> Result<OrbitReport> {
    let n = g.len();
    if n == 0 {
        return Ok(OrbitReport {
            orbits: vec![],
            length: 1,
            winding: 0,
            count: 0,
        });
    }
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![NEW; n];
    let mut orbits = Vec::new();
    let mut path = Vec::new();
    for start in 0..n {
        if state[start] != NEW {
            continue;
        }
        path.clear();
        let mut v = start;
        while state[v] == NEW {
            state[v] = ACTIVE;
            path.push(v);
            v = step(g, v);
        }
        if state[v] == ACTIVE {
            let pos = path.iter().position(|&u| u == v).expect("on path");
            let cycle = &path[pos..];
            let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).expect("nonempty");
            let mut orbit = cycle[min_at..].to_vec();
            orbit.extend_from_slice(&cycle[..min_at]);
            orbits.push(orbit);
        }
        for &u in &path {
            state[u] = DONE;
        }
    }
    orbits.sort_by_key(|o| o[0]);

    let length = orbits[0].len();
    let mut winding = None;
    for orbit in &orbits {
        if orbit.len() != length {
            return Err(consistency(format!(
                "periodic orbits of different lengths {} and {}",
                length,
                orbit.len()
            )));
        }
        let total: f64 = orbit
            .iter()
            .zip(orbit.iter().cycle().skip(1))
            .map(|(&u, &w)| cw_dist(g.positions()[u], g.positions()[w]))
            .sum();
        let w = total.round();
        if (total - w).abs() > 1e-9 {
            return Err(consistency(format!("orbit winding {total} is not an integer")));
        }
        let w = w as usize;
        match winding {
            None => winding = Some(w),
            Some(prev) if prev != w => {
                return Err(consistency(format!("orbits with winding numbers {prev} and {w}")))
            }
            _ => {}
        }
    }
    let count = orbits.len();
    Ok(OrbitReport {
        orbits,
        length,
        winding: winding.unwrap_or(0),
        count,
    })
}

/// Periodic / fast / slow label for every vertex.
///
/// With `wf = p/q` reduced, a non-periodic vertex is fast iff `γ_q(v) > p`.
pub fn classify_vertices(g: &CyclicGraph) -> Result<Vec<VertexClass>> {
    let report = periodic_orbits(g)?;
    let wf = report.winding_fraction()?;
    let index = report.orbit_index(g.len());
    let (p, q) = (wf.numer() as f64, wf.denom() as usize);
    Ok((0..g.len())
        .map(|v| {
            if index[v].is_some() {
                VertexClass::Periodic
            } else if gamma_m(g, v, q) > p {
                VertexClass::Fast
            } else {
                VertexClass::Slow
            }
        })
        .collect())
}

/// Checks that `h` is a cyclic homomorphism `g -> target`: edges map to
/// edges or collapse, cyclic order is weakly preserved, and `h` is not
/// constant when `g` has a directed cycle.
pub fn check_cyclic_homomorphism(g: &CyclicGraph, target: &CyclicGraph, h: &[usize]) -> Result<()> {
    let n = g.len();
    let nt = target.len();
    if h.len() != n {
        return Err(param(format!("vertex map has {} entries for {} vertices", h.len(), n)));
    }
    if let Some(&bad) = h.iter().find(|&&x| x >= nt) {
        return Err(param(format!("vertex map hits {bad}, target has {nt} vertices")));
    }
    for (v, w) in g.edges() {
        if h[v] != h[w] && !target.has_edge(h[v], h[w]) {
            return Err(param(format!(
                "edge {v}->{w} maps to non-edge {}->{}",
                h[v], h[w]
            )));
        }
    }
    // Weak cyclic order preservation of all triples is equivalent to the
    // closed walk h(0), h(1), ..., h(n-1), h(0) winding at most once.
    if n >= 3 {
        let turns: usize = (0..n).map(|i| (h[(i + 1) % n] + nt - h[i]) % nt).sum();
        if turns > nt {
            return Err(param("vertex map does not preserve cyclic order"));
        }
    }
    let constant = h.iter().all(|&x| x == h[0]);
    if constant && n > 0 {
        let report = periodic_orbits(g)?;
        if report.winding > 0 {
            return Err(param("constant map on a graph with a directed cycle"));
        }
    }
    Ok(())
}

/// Number of periodic orbits of `target` hit by the cyclic homomorphism `h`.
///
/// The induced map on `H_{2l}` (field coefficients) has rank one less than
/// this count.
pub fn orbits_hit(g: &CyclicGraph, target: &CyclicGraph, h: &[usize]) -> Result<usize> {
    check_cyclic_homomorphism(g, target, h)?;
    let wf = g.winding_fraction()?;
    let wf_t = target.winding_fraction()?;
    if wf != wf_t {
        return Err(param(format!("winding fractions differ: {wf} vs {wf_t}")));
    }
    if !wf.is_singular() {
        return Err(param(format!("winding fraction {wf} is not of the form l/(2l+1)")));
    }
    let source = periodic_orbits(g)?;
    let dest = periodic_orbits(target)?;
    let dest_index = dest.orbit_index(target.len());
    // transients are bounded by the vertex count
    let settle = target.len();
    let mut hit = vec![false; dest.count];
    for orbit in &source.orbits {
        let mut landed = None;
        for &v in orbit {
            let u = iterate(target, h[v], settle);
            let o = dest_index[u].ok_or_else(|| consistency("iterate did not reach a periodic vertex"))?;
            match landed {
                None => landed = Some(o),
                Some(prev) if prev != o => {
                    return Err(consistency(format!(
                        "image of orbit {orbit:?} spreads over target orbits {prev} and {o}"
                    )))
                }
                _ => {}
            }
        }
        if let Some(o) = landed {
            hit[o] = true;
        }
    }
    Ok(hit.into_iter().filter(|&b| b).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn step_examples() {
        assert_eq!(step(&nine_three(), 0), 3);
        assert_eq!(step(&six_vertex(), 0), 2);
        let iso = CyclicGraph::regular(4, 0).unwrap();
        assert_eq!(step(&iso, 2), 2);
    }

    #[test]
    fn gamma_examples() {
        assert!((gamma_m(&nine_three(), 0, 3) - 1.0).abs() < 1e-12);
        assert_eq!(gamma_m(&six_vertex(), 4, 0), 0.0);
        // 0 -> 2 -> 5 -> 0 on positions i/8
        assert!((gamma_m(&eight_vertex(), 0, 3) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn orbit_examples() {
        let r = periodic_orbits(&nine_three()).unwrap();
        assert_eq!((r.count, r.length, r.winding), (3, 3, 1));
        assert_eq!(r.orbits, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]);

        let r = periodic_orbits(&CyclicGraph::regular(6, 2).unwrap()).unwrap();
        assert_eq!((r.count, r.length, r.winding), (2, 3, 1));
        assert_eq!(r.orbits, vec![vec![0, 2, 4], vec![1, 3, 5]]);

        let r = periodic_orbits(&CyclicGraph::regular(4, 0).unwrap()).unwrap();
        assert_eq!((r.count, r.length, r.winding), (4, 1, 0));

        let r = periodic_orbits(&eight_vertex()).unwrap();
        assert_eq!(r.orbits, vec![vec![0, 2, 5], vec![1, 4, 6]]);
    }

    #[test]
    fn orbits_cover_the_dismantled_core() {
        for g in [six_vertex(), eight_vertex(), nine_three()] {
            let r = periodic_orbits(&g).unwrap();
            let d = g.dismantle().unwrap();
            assert_eq!(r.periodic_vertices(), d.core_vertices);
        }
    }

    #[test]
    fn fast_slow_fixtures() {
        let c = classify_vertices(&six_vertex()).unwrap();
        assert_eq!(c[1], VertexClass::Fast);
        assert_eq!(c[3], VertexClass::Slow);
        let c = classify_vertices(&eight_vertex()).unwrap();
        assert_eq!(c[3], VertexClass::Fast);
        assert_eq!(c[7], VertexClass::Slow);
        let c = classify_vertices(&nine_three()).unwrap();
        assert!(c.iter().all(|&x| x == VertexClass::Periodic));
    }

    #[test]
    fn orbits_hit_identity_and_inclusion() {
        let g = nine_three();
        let id: Vec<usize> = (0..9).collect();
        assert_eq!(orbits_hit(&g, &g, &id).unwrap(), 3);

        let small = CyclicGraph::regular(3, 1).unwrap();
        assert_eq!(orbits_hit(&small, &g, &[0, 3, 6]).unwrap(), 1);
        // two orbits of C_6^2 into C_9^3 by i -> ... (0,2,4)->(0,3,6), (1,3,5)->(1,4,7)
        let six = CyclicGraph::regular(6, 2).unwrap();
        assert_eq!(orbits_hit(&six, &g, &[0, 1, 3, 4, 6, 7]).unwrap(), 2);
    }

    #[test]
    fn orbits_hit_rejects_bad_maps() {
        let g = nine_three();
        let small = CyclicGraph::regular(3, 1).unwrap();
        // order reversing
        assert!(orbits_hit(&small, &g, &[0, 6, 3]).is_err());
        // constant map on a graph with a cycle
        assert!(orbits_hit(&small, &g, &[2, 2, 2]).is_err());
        // edge 0->1 to non-edge 0->4... 0 -> 4 is not an edge of C_9^3
        assert!(orbits_hit(&small, &g, &[0, 4, 8]).is_err());
        // wf mismatch: C_4^1 into C_9^3
        let four = CyclicGraph::regular(4, 1).unwrap();
        assert!(orbits_hit(&four, &g, &[0, 2, 4, 6]).is_err());
        // non-singular wf
        let eight = CyclicGraph::regular(8, 3).unwrap();
        let id: Vec<usize> = (0..8).collect();
        assert!(orbits_hit(&eight, &eight, &id).is_err());
    }
}
