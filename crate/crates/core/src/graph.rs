//! Finite cyclic graphs.
//!
//! A cyclic graph lives on cyclically sorted points of the circle, and every
//! out-neighbourhood is a contiguous clockwise run. We therefore store one run
//! length per vertex instead of an edge list: vertex `i` points at
//! `i+1, ..., i+out_degree[i]` (indices mod `n`).

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::circle::{cw_dist, CyclePosition};
use crate::dynamics;
use crate::error::{consistency, param, Result};

/// Directed cyclic graph in run-length form.
///
/// Construction through [`CyclicGraph::new`] validates; [`CyclicGraph::new_unchecked`]
/// does not, so that [`CyclicGraph::validate`] can be exercised on arbitrary
/// input (for instance graphs read from JSON).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclicGraph {
    positions: Vec<CyclePosition>,
    out_degree: Vec<usize>,
}

impl CyclicGraph {
    pub fn new(positions: Vec<CyclePosition>, out_degree: Vec<usize>) -> Result<Self> {
        let g = CyclicGraph::new_unchecked(positions, out_degree);
        if g.positions.len() != g.out_degree.len() {
            return Err(param(format!(
                "{} positions but {} out-degrees",
                g.positions.len(),
                g.out_degree.len()
            )));
        }
        if !g.validate() {
            return Err(param("graph violates the cyclic-graph invariants"));
        }
        Ok(g)
    }

    pub fn new_unchecked(positions: Vec<CyclePosition>, out_degree: Vec<usize>) -> Self {
        CyclicGraph {
            positions,
            out_degree,
        }
    }

    /// Vertices evenly spaced at `i/n`.
    pub fn evenly_spaced(out_degree: Vec<usize>) -> Result<Self> {
        let n = out_degree.len();
        let positions = (0..n)
            .map(|i| CyclePosition::new(i as f64 / n as f64))
            .collect();
        CyclicGraph::new(positions, out_degree)
    }

    /// The regular cyclic graph `C_n^k`: vertex `i` points at `i+1, ..., i+k`.
    pub fn regular(n: usize, k: usize) -> Result<Self> {
        if n == 0 || 2 * k >= n {
            return Err(param(format!("regular graph needs 0 <= k < n/2, got n={n}, k={k}")));
        }
        CyclicGraph::evenly_spaced(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[CyclePosition] {
        &self.positions
    }

    pub fn out_degrees(&self) -> &[usize] {
        &self.out_degree
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_degree[v]
    }

    /// Whether the directed edge `v -> w` exists.
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        let n = self.len();
        if v == w {
            return false;
        }
        let ahead = (w + n - v) % n;
        ahead <= self.out_degree[v]
    }

    /// All directed edges `(v, w)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |v| (1..=self.out_degree[v]).map(move |s| (v, (v + s) % n)))
    }

    /// Undirected adjacency lists (sorted), as consumed by the clique enumerator.
    pub fn undirected_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (v, w) in self.edges() {
            adj[v].push(w);
            adj[w].push(v);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Checks every invariant of a cyclic graph:
    /// strictly increasing positions in `[0, 1)`, runs shorter than `n`,
    /// the closure inequality `out[i+1] >= out[i] - 1`, and no 2-cycles.
    pub fn validate(&self) -> bool {
        let n = self.len();
        if self.out_degree.len() != n {
            return false;
        }
        if self
            .positions
            .iter()
            .any(|p| !(0.0..1.0).contains(&p.coord()))
        {
            return false;
        }
        if self
            .positions
            .windows(2)
            .any(|w| w[0].coord() >= w[1].coord())
        {
            return false;
        }
        for i in 0..n {
            let k = self.out_degree[i];
            if k >= n {
                return false;
            }
            if self.out_degree[(i + 1) % n] + 1 < k {
                return false;
            }
            // Under closure, a 2-cycle through i exists iff the farthest
            // out-neighbour of i points back at i.
            if k > 0 {
                let far = (i + k) % n;
                let back = (i + n - far) % n;
                if self.out_degree[far] >= back {
                    return false;
                }
            }
        }
        true
    }

    /// In-degree of every vertex. In a cyclic graph the in-neighbourhood of
    /// `j` is the contiguous counter-clockwise run ending at `j-1`.
    pub fn in_degrees(&self) -> Vec<usize> {
        let n = self.len();
        // circular difference array
        let mut diff = vec![0isize; n + 1];
        for v in 0..n {
            let k = self.out_degree[v];
            if k == 0 {
                continue;
            }
            let lo = v + 1;
            let hi = v + k;
            if hi < n {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            } else if lo >= n {
                diff[lo - n] += 1;
                diff[hi - n + 1] -= 1;
            } else {
                diff[lo] += 1;
                diff[n] -= 1;
                diff[0] += 1;
                diff[hi - n + 1] -= 1;
            }
        }
        let mut acc = 0isize;
        (0..n)
            .map(|i| {
                acc += diff[i];
                acc as usize
            })
            .collect()
    }

    /// Whether `v_i` is dominated by `v_{i+1}`, i.e. `N^-(v_{i+1}) = N^-[v_i]`.
    pub fn is_dominated(&self, i: usize) -> bool {
        self.is_dominated_with(i, &self.in_degrees())
    }

    fn is_dominated_with(&self, i: usize, in_deg: &[usize]) -> bool {
        let n = self.len();
        if n < 2 {
            return false;
        }
        // Both sets are contiguous runs ending at v_i, so they agree iff
        // their sizes do.
        in_deg[(i + 1) % n] == in_deg[i] + 1
    }

    /// All currently dominated vertices.
    pub fn dominated_vertices(&self) -> Vec<usize> {
        let in_deg = self.in_degrees();
        (0..self.len())
            .filter(|&i| self.is_dominated_with(i, &in_deg))
            .collect()
    }

    /// Induced subgraph on `keep` (strictly increasing vertex indices).
    pub fn induced(&self, keep: &[usize]) -> CyclicGraph {
        let n = self.len();
        let mut kept = vec![false; n];
        for &v in keep {
            kept[v] = true;
        }
        // prefix[i] = number of kept vertices among 0..i, over two laps
        let mut prefix = vec![0usize; 2 * n + 1];
        for i in 0..2 * n {
            prefix[i + 1] = prefix[i] + usize::from(kept[i % n]);
        }
        let out_degree = keep
            .iter()
            .map(|&v| prefix[v + self.out_degree[v] + 1] - prefix[v + 1])
            .collect();
        let positions = keep.iter().map(|&v| self.positions[v]).collect();
        CyclicGraph::new_unchecked(positions, out_degree)
    }

    /// Removes dominated vertices in rounds, all currently dominated vertices
    /// at once, until none remain.
    pub fn dismantle(&self) -> Result<Dismantling> {
        let mut alive: Vec<usize> = (0..self.len()).collect();
        let mut current = self.clone();
        let mut rounds = Vec::new();
        loop {
            let dominated = current.dominated_vertices();
            if dominated.is_empty() {
                break;
            }
            if dominated.len() == current.len() {
                return Err(consistency("every vertex dominated; dismantling would empty the graph"));
            }
            let mut drop = vec![false; current.len()];
            for &d in &dominated {
                drop[d] = true;
            }
            rounds.push(dominated.iter().map(|&d| alive[d]).collect());
            let keep: Vec<usize> = (0..current.len()).filter(|&i| !drop[i]).collect();
            current = current.induced(&keep);
            alive = keep.iter().map(|&i| alive[i]).collect();
        }
        if let Some(&k) = current.out_degree.first() {
            if current.out_degree.iter().any(|&d| d != k) || 2 * k >= current.len() {
                return Err(consistency(format!(
                    "dismantled core is not regular: out-degrees {:?}",
                    current.out_degree
                )));
            }
        }
        Ok(Dismantling {
            core: current,
            core_vertices: alive,
            rounds,
        })
    }

    /// Winding fraction `k/n` of the dismantled core `C_n^k`, cross-checked
    /// against `ω/ℓ` of the dynamics.
    pub fn winding_fraction(&self) -> Result<WindingFraction> {
        if self.is_empty() {
            return Ok(WindingFraction::ZERO);
        }
        let d = self.dismantle()?;
        let wf = d.winding_fraction();
        let orbits = dynamics::periodic_orbits(self)?;
        let dyn_wf = WindingFraction::new(orbits.winding as u64, orbits.length as u64)?;
        if dyn_wf != wf {
            return Err(consistency(format!(
                "dismantling gives wf {wf} but dynamics give {dyn_wf}"
            )));
        }
        Ok(wf)
    }

    /// Homotopy type of the clique complex.
    pub fn homotopy_type(&self) -> Result<HomotopyType> {
        if self.len() <= 1 {
            return Ok(HomotopyType::Point);
        }
        let wf = self.winding_fraction()?;
        let (p, q) = (wf.numer(), wf.denom());
        // l/(2l+1) < p/q  <=>  l (q - 2p) < p, and p/q = l/(2l+1) iff q - 2p = 1
        let gap = q - 2 * p;
        let l = (p / gap) as usize;
        if gap == 1 {
            let orbits = dynamics::periodic_orbits(self)?;
            Ok(HomotopyType::wedge(orbits.count - 1, l))
        } else {
            Ok(HomotopyType::OddSphere { l })
        }
    }

    /// Clockwise distance from vertex `v` to vertex `w`.
    pub fn gap(&self, v: usize, w: usize) -> f64 {
        cw_dist(self.positions[v], self.positions[w])
    }
}

/// Result of [`CyclicGraph::dismantle`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dismantling {
    /// The induced subgraph on the survivors; always some `C_n^k`.
    pub core: CyclicGraph,
    /// Original indices of the survivors.
    pub core_vertices: Vec<usize>,
    /// Original indices removed in each round.
    pub rounds: Vec<Vec<usize>>,
}

impl Dismantling {
    pub fn winding_fraction(&self) -> WindingFraction {
        let n = self.core.len() as u64;
        let k = self.core.out_degree.first().copied().unwrap_or(0) as u64;
        WindingFraction::new(k, n.max(1)).expect("core is regular")
    }

    /// Vertex set (original indices) that survives the first `rounds` rounds.
    pub fn survivors_after(&self, rounds: usize, n: usize) -> Vec<usize> {
        let mut removed = vec![false; n];
        for round in self.rounds.iter().take(rounds) {
            for &v in round {
                removed[v] = true;
            }
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }
}

/// An exact rational in `[0, 1/2)`, stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindingFraction {
    num: u64,
    den: u64,
}

impl WindingFraction {
    pub const ZERO: WindingFraction = WindingFraction { num: 0, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || 2 * num >= den {
            return Err(param(format!("winding fraction {num}/{den} outside [0, 1/2)")));
        }
        let g = num.gcd(&den);
        Ok(WindingFraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Whether the fraction has the form `l/(2l+1)`.
    pub fn is_singular(self) -> bool {
        self.den == 2 * self.num + 1
    }
}

impl Ord for WindingFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for WindingFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WindingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for WindingFraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WindingFraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| serde::de::Error::custom("expected \"k/n\""))?;
        let num = a.trim().parse().map_err(serde::de::Error::custom)?;
        let den = b.trim().parse().map_err(serde::de::Error::custom)?;
        WindingFraction::new(num, den).map_err(serde::de::Error::custom)
    }
}

/// Homotopy type of the clique complex of a finite cyclic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomotopyType {
    /// `S^(2l+1)`.
    OddSphere { l: usize },
    /// Wedge of `count >= 1` copies of `S^(2l)`.
    WedgeOfEvenSpheres { count: usize, l: usize },
    Point,
}

impl HomotopyType {
    /// Canonicalizing constructor: an empty wedge is a point.
    pub fn wedge(count: usize, l: usize) -> Self {
        if count == 0 {
            HomotopyType::Point
        } else {
            HomotopyType::WedgeOfEvenSpheres { count, l }
        }
    }

    pub fn sphere(dim: usize) -> Self {
        if dim % 2 == 1 {
            HomotopyType::OddSphere { l: dim / 2 }
        } else {
            HomotopyType::wedge(1, dim / 2)
        }
    }

    /// Unreduced Betti numbers in dimensions `0..=max_dim`.
    pub fn betti(&self, max_dim: usize) -> Vec<usize> {
        let mut b = vec![0; max_dim + 1];
        b[0] = 1;
        match *self {
            HomotopyType::OddSphere { l } => {
                if 2 * l + 1 <= max_dim {
                    b[2 * l + 1] = 1;
                }
            }
            HomotopyType::WedgeOfEvenSpheres { count, l } => {
                if 2 * l <= max_dim {
                    b[2 * l] += count;
                }
            }
            HomotopyType::Point => {}
        }
        b
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HomotopyType::OddSphere { l } => write!(f, "S^{}", 2 * l + 1),
            HomotopyType::WedgeOfEvenSpheres { count: 1, l } => write!(f, "S^{}", 2 * l),
            HomotopyType::WedgeOfEvenSpheres { count, l } => write!(f, "⋁^{} S^{}", count, 2 * l),
            HomotopyType::Point => write!(f, "point"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum HomotopyRepr {
    Sphere { dim: usize },
    Wedge { count: usize, sphere_dim: usize },
    Point,
}

impl Serialize for HomotopyType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match *self {
            HomotopyType::OddSphere { l } => HomotopyRepr::Sphere { dim: 2 * l + 1 },
            HomotopyType::WedgeOfEvenSpheres { count, l } => HomotopyRepr::Wedge {
                count,
                sphere_dim: 2 * l,
            },
            HomotopyType::Point => HomotopyRepr::Point,
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomotopyType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match HomotopyRepr::deserialize(d)? {
            HomotopyRepr::Sphere { dim } if dim % 2 == 1 => HomotopyType::OddSphere { l: dim / 2 },
            HomotopyRepr::Sphere { dim } => {
                return Err(serde::de::Error::custom(format!("sphere of even dimension {dim}; use wedge")))
            }
            HomotopyRepr::Wedge { count, sphere_dim } if sphere_dim % 2 == 0 => {
                HomotopyType::wedge(count, sphere_dim / 2)
            }
            HomotopyRepr::Wedge { sphere_dim, .. } => {
                return Err(serde::de::Error::custom(format!("wedge of odd spheres S^{sphere_dim}")))
            }
            HomotopyRepr::Point => HomotopyType::Point,
        })
    }
}

/// The three graphs of the standard cyclic-graph figure, on evenly spaced
/// vertices: a 6-vertex graph of winding fraction 1/4, an 8-vertex graph of
/// winding fraction 1/3, and `C_9^3`.
pub mod fixtures {
    use super::CyclicGraph;

    /// Edges 0→1,2; 1→2,3,4; 2→3,4; 3→4; 4→5; 5→0.
    pub fn six_vertex() -> CyclicGraph {
        CyclicGraph::evenly_spaced(vec![2, 3, 2, 1, 1, 1]).expect("valid fixture")
    }

    /// Edges 0→1,2; 1→2,3,4; 2→3,4,5; 3→4,5,6; 4→5,6; 5→6,7,0; 6→7,0,1; 7→0,1.
    pub fn eight_vertex() -> CyclicGraph {
        CyclicGraph::evenly_spaced(vec![2, 3, 3, 3, 2, 3, 3, 2]).expect("valid fixture")
    }

    pub fn nine_three() -> CyclicGraph {
        CyclicGraph::regular(9, 3).expect("valid fixture")
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use std::collections::BTreeSet;

    fn in_set(g: &CyclicGraph, v: usize) -> BTreeSet<usize> {
        g.edges().filter(|&(_, w)| w == v).map(|(u, _)| u).collect()
    }

    fn dominated_by_sets(g: &CyclicGraph, i: usize) -> bool {
        let n = g.len();
        let mut closed = in_set(g, i);
        closed.insert(i);
        in_set(g, (i + 1) % n) == closed
    }

    #[test]
    fn regular_constructor() {
        let g = CyclicGraph::regular(9, 3).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.edges().count(), 27);
        assert!(g.has_edge(0, 3) && !g.has_edge(0, 4) && !g.has_edge(3, 0));
        let iso = CyclicGraph::regular(4, 0).unwrap();
        assert_eq!(iso.edges().count(), 0);
        assert!(CyclicGraph::regular(6, 3).is_err());
        assert!(CyclicGraph::regular(0, 0).is_err());
    }

    #[test]
    fn octahedron_misses_only_antipodes() {
        let g = CyclicGraph::regular(6, 2).unwrap();
        let adj = g.undirected_adjacency();
        for (v, nbrs) in adj.iter().enumerate() {
            assert_eq!(nbrs.len(), 4);
            assert!(!nbrs.contains(&((v + 3) % 6)));
        }
    }

    #[test]
    fn validate_examples() {
        assert!(nine_three().validate());
        let bad = CyclicGraph::new_unchecked(
            (0..3).map(|i| CyclePosition::new(i as f64 / 3.0)).collect(),
            vec![2, 0, 1],
        );
        assert!(!bad.validate());
        let single = CyclicGraph::new_unchecked(vec![CyclePosition::new(0.3)], vec![0]);
        assert!(single.validate());
        // 2-cycle: 0 -> 1 -> 0
        let two = CyclicGraph::new_unchecked(
            vec![CyclePosition::new(0.0), CyclePosition::new(0.5)],
            vec![1, 1],
        );
        assert!(!two.validate());
        // unsorted positions
        let unsorted = CyclicGraph::new_unchecked(
            vec![CyclePosition::new(0.5), CyclePosition::new(0.1)],
            vec![0, 0],
        );
        assert!(!unsorted.validate());
    }

    #[test]
    fn in_degrees_match_edge_count() {
        for g in [six_vertex(), eight_vertex(), nine_three()] {
            let fast = g.in_degrees();
            for v in 0..g.len() {
                assert_eq!(fast[v], in_set(&g, v).len());
            }
        }
    }

    #[test]
    fn dominated_examples() {
        let g = six_vertex();
        assert!(g.is_dominated(1));
        assert!(g.is_dominated(3));
        assert_eq!(g.dominated_vertices(), vec![1, 3]);
        let r = nine_three();
        assert!((0..9).all(|i| !r.is_dominated(i)));
        // 0 -> 1 only: N^-(v1) = {0} = N^-[v0]
        let path = CyclicGraph::evenly_spaced(vec![1, 0]).unwrap();
        assert!(path.is_dominated(0));
        assert!(!path.is_dominated(1));
        for g in [six_vertex(), eight_vertex(), nine_three(), path] {
            for i in 0..g.len() {
                assert_eq!(g.is_dominated(i), dominated_by_sets(&g, i));
            }
        }
    }

    #[test]
    fn dismantle_examples() {
        let d = nine_three().dismantle().unwrap();
        assert!(d.rounds.is_empty());
        assert_eq!(d.core, nine_three());

        let d = six_vertex().dismantle().unwrap();
        assert_eq!(d.rounds, vec![vec![1, 3]]);
        assert_eq!(d.core_vertices, vec![0, 2, 4, 5]);
        assert_eq!(d.core.out_degrees(), &[1, 1, 1, 1]);
        assert_eq!(d.winding_fraction().to_string(), "1/4");

        let d = eight_vertex().dismantle().unwrap();
        assert_eq!(d.winding_fraction().to_string(), "1/3");
    }

    #[test]
    fn winding_fraction_examples() {
        assert_eq!(nine_three().winding_fraction().unwrap().to_string(), "1/3");
        assert_eq!(six_vertex().winding_fraction().unwrap().to_string(), "1/4");
        assert_eq!(eight_vertex().winding_fraction().unwrap().to_string(), "1/3");
        let g = CyclicGraph::regular(7, 3).unwrap();
        assert_eq!(g.winding_fraction().unwrap().to_string(), "3/7");
    }

    #[test]
    fn regular_winding_fractions() {
        for n in 1..=30u64 {
            for k in 0..n {
                if 2 * k >= n {
                    break;
                }
                let g = CyclicGraph::regular(n as usize, k as usize).unwrap();
                let wf = g.winding_fraction().unwrap();
                let gcd = n.gcd(&k);
                assert_eq!((wf.numer(), wf.denom()), (k / gcd, n / gcd));
            }
        }
    }

    #[test]
    fn homotopy_examples() {
        assert_eq!(
            nine_three().homotopy_type().unwrap(),
            HomotopyType::WedgeOfEvenSpheres { count: 2, l: 1 }
        );
        assert_eq!(
            CyclicGraph::regular(6, 2).unwrap().homotopy_type().unwrap(),
            HomotopyType::sphere(2)
        );
        assert_eq!(
            CyclicGraph::regular(7, 3).unwrap().homotopy_type().unwrap(),
            HomotopyType::Point
        );
        assert_eq!(six_vertex().homotopy_type().unwrap(), HomotopyType::OddSphere { l: 0 });
        assert_eq!(
            CyclicGraph::regular(4, 0).unwrap().homotopy_type().unwrap(),
            HomotopyType::WedgeOfEvenSpheres { count: 3, l: 0 }
        );
        // 2/5 = l/(2l+1) with l = 2, P = gcd(10, 4) = 2
        assert_eq!(
            CyclicGraph::regular(10, 4).unwrap().homotopy_type().unwrap(),
            HomotopyType::WedgeOfEvenSpheres { count: 1, l: 2 }
        );
        // 3/8 lies strictly between 1/3 and 2/5
        assert_eq!(
            CyclicGraph::regular(8, 3).unwrap().homotopy_type().unwrap(),
            HomotopyType::OddSphere { l: 1 }
        );
        let single = CyclicGraph::new(vec![CyclePosition::new(0.0)], vec![0]).unwrap();
        assert_eq!(single.homotopy_type().unwrap(), HomotopyType::Point);
        let empty = CyclicGraph::new(vec![], vec![]).unwrap();
        assert_eq!(empty.homotopy_type().unwrap(), HomotopyType::Point);
    }

    #[test]
    fn homotopy_json_shape() {
        let w = HomotopyType::WedgeOfEvenSpheres { count: 2, l: 1 };
        let js = serde_json::to_value(w).unwrap();
        assert_eq!(js, serde_json::json!({"type": "wedge", "count": 2, "sphere_dim": 2}));
        let s = serde_json::to_value(HomotopyType::OddSphere { l: 0 }).unwrap();
        assert_eq!(s, serde_json::json!({"type": "sphere", "dim": 1}));
        for h in [w, HomotopyType::Point, HomotopyType::OddSphere { l: 2 }] {
            let back: HomotopyType = serde_json::from_value(serde_json::to_value(h).unwrap()).unwrap();
            assert_eq!(back, h);
        }
        assert_eq!(HomotopyType::wedge(0, 3), HomotopyType::Point);
    }

    #[test]
    fn graph_json_shape() {
        let g = CyclicGraph::regular(3, 1).unwrap();
        let js = serde_json::to_value(&g).unwrap();
        assert_eq!(js["out_degree"], serde_json::json!([1, 1, 1]));
        assert_eq!(js["positions"].as_array().unwrap().len(), 3);
        let back: CyclicGraph = serde_json::from_value(js).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn fraction_order_and_parse() {
        let a = WindingFraction::new(1, 3).unwrap();
        let b = WindingFraction::new(3, 8).unwrap();
        assert!(a < b);
        assert!(WindingFraction::new(1, 2).is_err());
        assert_eq!(WindingFraction::new(2, 6).unwrap(), a);
        let parsed: WindingFraction = serde_json::from_str("\"2/6\"").unwrap();
        assert_eq!(parsed, a);
        assert!(a.is_singular() && !b.is_singular() && WindingFraction::ZERO.is_singular());
    }
}
