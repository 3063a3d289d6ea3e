//! Brute-force homology of clique complexes over GF(2).
//!
//! Cliques are enumerated explicitly and boundary matrices are reduced column
//! by column, with clearing: columns are processed from the top dimension
//! down, and any column that is already known to be a pivot row of a higher
//! column is skipped. Everything here is deliberately naive; it is the ground
//! truth the symbolic classification is tested against.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{param, Error, Result};

/// Largest simplex dimension the oracle will enumerate.
pub const MAX_DIM: usize = 4;
/// Default cap on the number of enumerated simplices.
pub const DEFAULT_SIMPLEX_CAP: usize = 2_000_000;

/// A simplex with strictly increasing vertex labels and a filtration value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Simplex {
    pub vertices: Vec<usize>,
    pub value: f64,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A simplicial complex with a monotone filtration, stored in filtration
/// order (value, then dimension, then vertex labels).
#[derive(Debug, Clone, Serialize)]
pub struct FilteredComplex {
    simplices: Vec<Simplex>,
    max_dim: usize,
}

impl FilteredComplex {
    /// Sorts the simplices into filtration order and checks that every face
    /// is present with a value no larger than its coface.
    pub fn new(mut simplices: Vec<Simplex>, max_dim: usize) -> Result<Self> {
        for s in &simplices {
            if s.vertices.is_empty() || s.vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(param(format!("simplex {:?} is not strictly sorted", s.vertices)));
            }
            if s.dim() > max_dim {
                return Err(param(format!("simplex {:?} exceeds max_dim {max_dim}", s.vertices)));
            }
        }
        sort_filtration(&mut simplices);
        let c = FilteredComplex { simplices, max_dim };
        let index = c.index();
        for s in &c.simplices {
            if s.dim() == 0 {
                continue;
            }
            for face in facets(&s.vertices) {
                match index.get(&face) {
                    Some(&i) if c.simplices[i].value <= s.value => {}
                    Some(_) => {
                        return Err(param(format!("face {face:?} enters after {:?}", s.vertices)));
                    }
                    None => return Err(param(format!("face {face:?} of {:?} missing", s.vertices))),
                }
            }
        }
        Ok(c)
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of simplices of each dimension `0..=max_dim`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim + 1];
        for s in &self.simplices {
            counts[s.dim()] += 1;
        }
        counts
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn index(&self) -> HashMap<Vec<usize>, usize> {
        self.simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.vertices.clone(), i))
            .collect()
    }
}

fn sort_filtration(simplices: &mut [Simplex]) {
    simplices.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then(a.vertices.len().cmp(&b.vertices.len()))
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
}

fn facets(v: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..v.len()).map(move |skip| {
        v.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// Clique complex of a weighted graph, each clique entering at its largest
/// edge weight (vertices at 0). `weight(i, j)` is called with `i < j` and
/// returns `None` for non-edges.
pub fn flag_filtration(
    n: usize,
    weight: impl Fn(usize, usize) -> Option<f64>,
    max_dim: usize,
    cap: usize,
) -> Result<FilteredComplex> {
    if max_dim > MAX_DIM {
        return Err(param(format!("max_dim {max_dim} above the oracle limit {MAX_DIM}")));
    }
    let mut w = vec![vec![None; n]; n];
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if let Some(x) = weight(i, j) {
                w[i][j] = Some(x);
                w[j][i] = Some(x);
                up[i].push(j);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(max_dim + 1);
    for v in 0..n {
        stack.push(v);
        extend(&mut out, &mut stack, 0.0, &up[v], &w, max_dim, cap)?;
        stack.pop();
    }
    sort_filtration(&mut out);
    Ok(FilteredComplex {
        simplices: out,
        max_dim,
    })
}

fn extend(
    out: &mut Vec<Simplex>,
    stack: &mut Vec<usize>,
    value: f64,
    candidates: &[usize],
    w: &[Vec<Option<f64>>],
    max_dim: usize,
    cap: usize,
) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::CapExceeded {
            what: "simplices",
            count: out.len() + 1,
            cap,
        });
    }
    out.push(Simplex {
        vertices: stack.clone(),
        value,
    });
    if stack.len() > max_dim {
        return Ok(());
    }
    for (k, &c) in candidates.iter().enumerate() {
        let mut val = value;
        for &s in stack.iter() {
            val = val.max(w[s][c].expect("candidate adjacent to clique"));
        }
        let next: Vec<usize> = candidates[k + 1..]
            .iter()
            .copied()
            .filter(|&x| w[c][x].is_some())
            .collect();
        stack.push(c);
        extend(out, stack, val, &next, w, max_dim, cap)?;
        stack.pop();
    }
    Ok(())
}

/// Unfiltered clique complex of an undirected graph given as adjacency lists.
pub fn clique_complex(adjacency: &[Vec<usize>], max_dim: usize, cap: usize) -> Result<FilteredComplex> {
    let n = adjacency.len();
    let mut m = vec![vec![false; n]; n];
    for (i, nb) in adjacency.iter().enumerate() {
        for &j in nb {
            if j >= n || j == i {
                return Err(param(format!("bad adjacency entry {i} -> {j}")));
            }
            m[i][j] = true;
            m[j][i] = true;
        }
    }
    flag_filtration(n, |i, j| m[i][j].then_some(0.0), max_dim, cap)
}

/// Vietoris–Rips filtration: every clique enters at its diameter.
pub fn rips_filtration(dist: &[Vec<f64>], max_dim: usize, cap: usize) -> Result<FilteredComplex> {
    flag_filtration(dist.len(), |i, j| Some(dist[i][j]), max_dim, cap)
}

/// Betti numbers, unreduced unless `reduced` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub betti: Vec<usize>,
    pub reduced: bool,
}

impl BettiVector {
    pub fn to_reduced(&self) -> BettiVector {
        let mut betti = self.betti.clone();
        if !self.reduced {
            if let Some(b0) = betti.first_mut() {
                *b0 = b0.saturating_sub(1);
            }
        }
        BettiVector { betti, reduced: true }
    }
}

/// A finite bar `[birth, death)` in the filtration order (ties are reported
/// with `birth == death`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PersistencePair {
    pub dim: usize,
    pub birth: f64,
    pub death: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EssentialClass {
    pub dim: usize,
    pub birth: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Persistence {
    pub pairs: Vec<PersistencePair>,
    pub essential: Vec<EssentialClass>,
}

impl Persistence {
    /// Number of classes of dimension `dim` alive at filtration value `t`
    /// (born at or before `t`, dying strictly after).
    pub fn alive_at(&self, dim: usize, t: f64) -> usize {
        let finite = self
            .pairs
            .iter()
            .filter(|p| p.dim == dim && p.birth <= t && p.death > t)
            .count();
        let inf = self.essential.iter().filter(|e| e.dim == dim && e.birth <= t).count();
        finite + inf
    }
}

/// Column-reduces the boundary matrix. Returns `low[j]` for every column:
/// the pivot row of reduced column `j`, or `None` for zero columns.
fn reduce(c: &FilteredComplex) -> Vec<Option<usize>> {
    let index = c.index();
    let n = c.simplices.len();
    let mut boundary: Vec<Vec<usize>> = c
        .simplices
        .iter()
        .map(|s| {
            if s.dim() == 0 {
                return Vec::new();
            }
            let mut col: Vec<usize> = facets(&s.vertices).map(|f| index[&f]).collect();
            col.sort_unstable();
            col
        })
        .collect();
    let mut low: Vec<Option<usize>> = vec![None; n];
    let mut pivot_of: Vec<Option<usize>> = vec![None; n];
    let mut cleared = vec![false; n];
    for d in (1..=c.max_dim).rev() {
        for j in 0..n {
            if c.simplices[j].dim() != d || cleared[j] {
                continue;
            }
            let mut col = std::mem::take(&mut boundary[j]);
            while let Some(&p) = col.last() {
                match pivot_of[p] {
                    Some(k) => col = sym_diff(&col, &boundary[k]),
                    None => break,
                }
            }
            if let Some(&p) = col.last() {
                pivot_of[p] = Some(j);
                low[j] = Some(p);
                // row p is a positive simplex paired here; its own column is zero
                cleared[p] = true;
            }
            boundary[j] = col;
        }
    }
    low
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Betti numbers in dimensions `0..=max_dim`. Exact for `i < c.max_dim()`;
/// the top dimension is exact only if the complex has no higher simplices.
pub fn betti_numbers(c: &FilteredComplex, max_dim: usize) -> BettiVector {
    let low = reduce(c);
    let top = max_dim.max(c.max_dim);
    let mut count = vec![0usize; top + 2];
    let mut rank = vec![0usize; top + 2];
    for (s, l) in c.simplices.iter().zip(&low) {
        count[s.dim()] += 1;
        if l.is_some() {
            rank[s.dim()] += 1;
        }
    }
    let betti = (0..=max_dim)
        .map(|i| count[i] - rank[i] - rank[i + 1])
        .collect();
    BettiVector {
        betti,
        reduced: false,
    }
}

/// Persistence pairs and essential classes in dimensions `0..=max_dim`.
/// Zero-length pairs are kept; callers decide whether to drop them.
pub fn persistent_pairs(c: &FilteredComplex, max_dim: usize) -> Persistence {
    let low = reduce(c);
    let mut paired = vec![false; c.simplices.len()];
    let mut pairs = Vec::new();
    for (j, l) in low.iter().enumerate() {
        if let Some(i) = *l {
            paired[i] = true;
            paired[j] = true;
            let dim = c.simplices[i].dim();
            if dim <= max_dim {
                pairs.push(PersistencePair {
                    dim,
                    birth: c.simplices[i].value,
                    death: c.simplices[j].value,
                });
            }
        }
    }
    let essential = c
        .simplices
        .iter()
        .zip(&paired)
        .filter(|(s, &p)| !p && s.dim() <= max_dim)
        .map(|(s, _)| EssentialClass {
            dim: s.dim(),
            birth: s.value,
        })
        .collect();
    Persistence { pairs, essential }
}

/// Rank of `H_dim(small) -> H_dim(big)` induced by inclusion, computed as the
/// number of bars born at level 0 that survive to level 1 in the two-step
/// filtration `small ⊆ big`.
pub fn induced_rank(small: &FilteredComplex, big: &FilteredComplex, dim: usize) -> Result<usize> {
    let inner: std::collections::HashSet<&[usize]> =
        small.simplices.iter().map(|s| s.vertices.as_slice()).collect();
    let big_index = big.index();
    for s in &small.simplices {
        if !big_index.contains_key(&s.vertices) {
            return Err(param(format!("simplex {:?} of the smaller complex is missing from the larger", s.vertices)));
        }
    }
    let two_step: Vec<Simplex> = big
        .simplices
        .iter()
        .map(|s| Simplex {
            vertices: s.vertices.clone(),
            value: if inner.contains(s.vertices.as_slice()) { 0.0 } else { 1.0 },
        })
        .collect();
    let c = FilteredComplex::new(two_step, big.max_dim)?;
    let p = persistent_pairs(&c, dim);
    Ok(p.essential.iter().filter(|e| e.dim == dim && e.birth == 0.0).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CyclicGraph;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    fn octahedron() -> Vec<Vec<usize>> {
        CyclicGraph::regular(6, 2).unwrap().undirected_adjacency()
    }

    #[test]
    fn full_simplex_counts() {
        let k4: Vec<Vec<usize>> = (0..4).map(|i| (0..4).filter(|&j| j != i).collect()).collect();
        let c = clique_complex(&k4, 3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.len(), 15);
        assert_eq!(betti_numbers(&c, 2).betti, vec![1, 0, 0]);
    }

    #[test]
    fn octahedron_is_a_sphere() {
        let c = clique_complex(&octahedron(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.counts(), vec![6, 12, 8, 0]);
        assert_eq!(betti_numbers(&c, 2).betti, vec![1, 0, 1]);
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn square_is_a_circle() {
        let c = clique_complex(&cycle(4), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.counts(), vec![4, 4, 0, 0]);
        assert_eq!(betti_numbers(&c, 2).betti, vec![1, 1, 0]);
    }

    #[test]
    fn nine_three_is_two_spheres() {
        let g = CyclicGraph::regular(9, 3).unwrap();
        let c = clique_complex(&g.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(betti_numbers(&c, 2).betti, vec![1, 0, 2]);
    }

    #[test]
    fn cap_is_enforced() {
        let k6: Vec<Vec<usize>> = (0..6).map(|i| (0..6).filter(|&j| j != i).collect()).collect();
        let err = clique_complex(&k6, 4, 20).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(clique_complex(&k6, 5, DEFAULT_SIMPLEX_CAP).is_err());
    }

    #[test]
    fn invalid_complexes_rejected() {
        let s = |v: Vec<usize>, value| Simplex { vertices: v, value };
        assert!(FilteredComplex::new(vec![s(vec![0, 1], 0.0)], 1).is_err());
        assert!(FilteredComplex::new(vec![s(vec![1, 0], 0.0)], 1).is_err());
        let late_face = vec![s(vec![0], 0.0), s(vec![1], 2.0), s(vec![0, 1], 1.0)];
        assert!(FilteredComplex::new(late_face, 1).is_err());
    }

    #[test]
    fn two_points() {
        let d = vec![vec![0.0, 0.7], vec![0.7, 0.0]];
        let c = rips_filtration(&d, 1, DEFAULT_SIMPLEX_CAP).unwrap();
        let p = persistent_pairs(&c, 1);
        assert_eq!(p.essential, vec![EssentialClass { dim: 0, birth: 0.0 }]);
        assert_eq!(p.pairs, vec![PersistencePair { dim: 0, birth: 0.0, death: 0.7 }]);
    }

    #[test]
    fn single_level_persistence_is_betti() {
        let c = clique_complex(&CyclicGraph::regular(9, 3).unwrap().undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        let p = persistent_pairs(&c, 2);
        let b: Vec<usize> = (0..3).map(|d| p.alive_at(d, 0.0)).collect();
        assert_eq!(b, betti_numbers(&c, 2).betti);
    }

    #[test]
    fn hexagon_filtration_has_an_octahedral_bar() {
        let pts: Vec<(f64, f64)> = (0..6)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 6.0;
                (t.cos(), t.sin())
            })
            .collect();
        let d: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| pts.iter().map(|q| (p.0 - q.0).hypot(p.1 - q.1)).collect())
            .collect();
        let c = rips_filtration(&d, 3, DEFAULT_SIMPLEX_CAP).unwrap();
        let p = persistent_pairs(&c, 2);
        let h2: Vec<_> = p.pairs.iter().filter(|q| q.dim == 2 && q.death > q.birth).collect();
        assert_eq!(h2.len(), 1);
        assert!((h2[0].birth - 3f64.sqrt()).abs() < 1e-9);
        assert!((h2[0].death - 2.0).abs() < 1e-9);
    }

    #[test]
    fn induced_rank_examples() {
        let oct = clique_complex(&octahedron(), 3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(induced_rank(&oct, &oct, 2).unwrap(), 1);
        let mut cone = octahedron();
        for nb in cone.iter_mut() {
            nb.push(6);
        }
        cone.push((0..6).collect());
        let big = clique_complex(&cone, 4, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(induced_rank(&oct, &big, 2).unwrap(), 0);
        assert!(induced_rank(&big, &oct, 2).is_err());
    }
}
