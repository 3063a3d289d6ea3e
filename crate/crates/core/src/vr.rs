//! Vietoris–Rips graphs of ellipse samples, their classification, and
//! barcodes for samples and for the whole ellipse.

use std::io::Write;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dynamics::{self, OrbitReport};
use crate::ellipse::{ahead, dist, EllipseModel, EllipsePoint};
use crate::error::{param, Error, Result};
use crate::graph::{CyclicGraph, HomotopyType};
use crate::oracle;

/// Whether a simplex at scale `r` needs diameter `< r` or `<= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Less,
    #[serde(rename = "leq")]
    #[value(name = "leq")]
    LessEq,
}

impl Convention {
    pub fn admits(self, d: f64, r: f64) -> bool {
        match self {
            Convention::Less => d < r,
            Convention::LessEq => d <= r,
        }
    }
}

/// Default point cap for [`sample_barcode`].
pub const DEFAULT_BARCODE_CAP: usize = 60;
/// Distance from a critical radius treated as landing on it.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Distance from a critical radius that triggers a proximity warning.
pub const WARNING_TOL: f64 = 1e-9;

/// Returns the points in cyclic order, rejecting duplicates.
pub fn sorted_sample(points: &[EllipsePoint]) -> Result<Vec<EllipsePoint>> {
    let mut pts = points.to_vec();
    pts.sort_by(|p, q| p.t().total_cmp(&q.t()));
    if let Some(w) = pts.windows(2).find(|w| w[0].cycle() == w[1].cycle()) {
        return Err(param(format!("duplicate sample point at t = {}", w[0].t())));
    }
    Ok(pts)
}

/// The oriented VR graph at scale `r`. Vertex `i` is the `i`-th point in
/// cyclic order (see [`sorted_sample`]).
pub fn vr_graph(m: &EllipseModel, points: &[EllipsePoint], r: f64, c: Convention) -> Result<CyclicGraph> {
    if !(r > 0.0 && r < 2.0) {
        return Err(param(format!("scale {r} outside (0, 2)")));
    }
    let pts = sorted_sample(points)?;
    let n = pts.len();
    let reach: Vec<f64> = pts
        .iter()
        .map(|p| ahead(p.t(), m.inverse_antipodal_normal(p).t()))
        .collect();
    let admits = |i: usize, k: usize| {
        let q = &pts[(i + k) % n];
        c.admits(dist(&pts[i], q), r) && ahead(pts[i].t(), q.t()) < reach[i]
    };
    let mut out = vec![0usize; n];
    for i in 0..n {
        // out-runs shrink by at most one from one vertex to the next
        let mut k = if i == 0 { 0 } else { out[i - 1].saturating_sub(1) };
        if k > 0 && !admits(i, k) {
            k = 0;
        }
        while k + 1 < n && admits(i, k + 1) {
            k += 1;
        }
        out[i] = k;
    }
    let positions = pts.iter().map(|p| p.cycle()).collect();
    CyclicGraph::new(positions, out).map_err(|e| Error::Consistency(format!("VR graph is not cyclic: {e}")))
}

/// Homotopy type of the VR complex of a finite sample, with its orbit report.
pub fn classify_sample(
    m: &EllipseModel,
    points: &[EllipsePoint],
    r: f64,
    c: Convention,
) -> Result<(HomotopyType, OrbitReport)> {
    let g = vr_graph(m, points, r, c)?;
    Ok((g.homotopy_type()?, dynamics::periodic_orbits(&g)?))
}

/// Closed-form homotopy type for the full ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaleAnswer {
    pub homotopy: HomotopyType,
    /// Set when `r` is within [`WARNING_TOL`] of a critical radius without
    /// being within [`BOUNDARY_TOL`] of it.
    pub near_boundary: bool,
}

pub fn ellipse_homotopy(m: &EllipseModel, r: f64, c: Convention) -> Result<ScaleAnswer> {
    let (r1, r2) = m.critical_radii();
    if r <= 0.0 {
        return Err(param(format!("scale {r} must be positive")));
    }
    if r > r2 + BOUNDARY_TOL {
        return Err(Error::UnsupportedRange(format!("scale {r} beyond r2 = {r2}")));
    }
    let at1 = (r - r1).abs() <= BOUNDARY_TOL;
    let at2 = (r - r2).abs() <= BOUNDARY_TOL;
    let near = |x: f64| {
        let d = (r - x).abs();
        d > BOUNDARY_TOL && d <= WARNING_TOL
    };
    let near_boundary = near(r1) || near(r2);
    let homotopy = match c {
        Convention::Less => {
            if r <= r1 || at1 {
                HomotopyType::sphere(1)
            } else {
                HomotopyType::sphere(2)
            }
        }
        Convention::LessEq => {
            if at1 && at2 {
                return Err(Error::UnsupportedRange(
                    "the circle at the triangle scale has no finite wedge model".into(),
                ));
            }
            if at1 {
                HomotopyType::sphere(2)
            } else if r < r1 {
                HomotopyType::sphere(1)
            } else if at2 {
                HomotopyType::wedge(3, 1)
            } else {
                HomotopyType::wedge(5, 1)
            }
        }
    };
    Ok(ScaleAnswer {
        homotopy,
        near_boundary,
    })
}

fn ser_death<S: Serializer>(d: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if d.is_finite() {
        s.serialize_f64(*d)
    } else {
        s.serialize_none()
    }
}

fn de_death<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

/// One bar. An infinite death serializes as `null`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarInterval {
    pub dim: usize,
    pub birth: f64,
    #[serde(serialize_with = "ser_death", deserialize_with = "de_death")]
    pub death: f64,
    pub birth_closed: bool,
    pub death_closed: bool,
}

impl BarInterval {
    pub fn contains(&self, r: f64) -> bool {
        let after_birth = if self.birth_closed { r >= self.birth } else { r > self.birth };
        let before_death = if self.death_closed { r <= self.death } else { r < self.death };
        after_birth && before_death
    }
}

/// Ephemeral summands `[r, r]` of the given multiplicity for every `r` in
/// the open range `(lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalRecord {
    pub dim: usize,
    pub lo: f64,
    pub hi: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Barcode {
    pub intervals: Vec<BarInterval>,
    pub diagonal: Vec<DiagonalRecord>,
}

impl Barcode {
    /// Number of bars of dimension `dim` containing `r`.
    pub fn rank_at(&self, dim: usize, r: f64) -> usize {
        self.intervals.iter().filter(|b| b.dim == dim && b.contains(r)).count()
    }

    /// One CSV row per interval, then one per diagonal record.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let io = |e: csv::Error| param(format!("csv output failed: {e}"));
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["kind", "dim", "birth", "death", "birth_closed", "death_closed", "multiplicity"])
            .map_err(io)?;
        for b in &self.intervals {
            let death = if b.death.is_finite() { b.death.to_string() } else { "inf".into() };
            out.write_record([
                "interval".to_string(),
                b.dim.to_string(),
                b.birth.to_string(),
                death,
                b.birth_closed.to_string(),
                b.death_closed.to_string(),
                "1".into(),
            ])
            .map_err(io)?;
        }
        for d in &self.diagonal {
            out.write_record([
                "diagonal".to_string(),
                d.dim.to_string(),
                d.lo.to_string(),
                d.hi.to_string(),
                "false".into(),
                "false".into(),
                d.multiplicity.to_string(),
            ])
            .map_err(io)?;
        }
        out.flush().map_err(|e| param(format!("csv output failed: {e}")))
    }
}

/// Persistent homology of the full ellipse in dimensions 1 and 2.
pub fn ellipse_barcode(m: &EllipseModel, c: Convention) -> Barcode {
    let (r1, r2) = m.critical_radii();
    let closed_birth = c == Convention::LessEq;
    let mut intervals = vec![BarInterval {
        dim: 1,
        birth: 0.0,
        death: r1,
        birth_closed: closed_birth,
        death_closed: !closed_birth,
    }];
    let mut diagonal = Vec::new();
    if r1 < r2 {
        intervals.push(BarInterval {
            dim: 2,
            birth: r1,
            death: r2,
            birth_closed: closed_birth,
            death_closed: true,
        });
        if c == Convention::LessEq {
            diagonal.push(DiagonalRecord {
                dim: 2,
                lo: r1,
                hi: r2,
                multiplicity: 4,
            });
        }
    }
    Barcode { intervals, diagonal }
}

/// Barcode of the VR filtration of a small sample in dimensions
/// `0..=max_dim`. Zero-length bars are dropped.
pub fn sample_barcode(points: &[EllipsePoint], c: Convention, max_dim: usize, cap: usize) -> Result<Barcode> {
    if points.len() > cap {
        return Err(Error::CapExceeded {
            what: "sample points",
            count: points.len(),
            cap,
        });
    }
    let pts = sorted_sample(points)?;
    let d: Vec<Vec<f64>> = pts.iter().map(|p| pts.iter().map(|q| dist(p, q)).collect()).collect();
    let complex = oracle::rips_filtration(&d, max_dim + 1, oracle::DEFAULT_SIMPLEX_CAP)?;
    let pers = oracle::persistent_pairs(&complex, max_dim);
    let closed_birth = c == Convention::LessEq;
    let bar = |dim, birth, death| BarInterval {
        dim,
        birth,
        death,
        birth_closed: closed_birth,
        death_closed: !closed_birth && f64::is_finite(death),
    };
    let mut intervals: Vec<BarInterval> = pers
        .pairs
        .iter()
        .filter(|p| p.death > p.birth)
        .map(|p| bar(p.dim, p.birth, p.death))
        .chain(pers.essential.iter().map(|e| bar(e.dim, e.birth, f64::INFINITY)))
        .collect();
    intervals.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then(a.birth.total_cmp(&b.birth))
            .then(a.death.total_cmp(&b.death))
    });
    Ok(Barcode {
        intervals,
        diagonal: Vec::new(),
    })
}

/// Rank of `H_2l(VR(X, r)) -> H_2l(VR(X, r_tilde))` from the periodic orbits
/// hit by the identity vertex map.
pub fn rank_across(
    m: &EllipseModel,
    points: &[EllipsePoint],
    r: f64,
    r_tilde: f64,
    c: Convention,
) -> Result<usize> {
    if r > r_tilde {
        return Err(param(format!("rank_across needs r <= r_tilde, got {r} > {r_tilde}")));
    }
    let g = vr_graph(m, points, r, c)?;
    let t = vr_graph(m, points, r_tilde, c)?;
    let id: Vec<usize> = (0..g.len()).collect();
    Ok(dynamics::orbits_hit(&g, &t, &id)? - 1)
}
