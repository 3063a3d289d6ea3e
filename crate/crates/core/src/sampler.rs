//! Finite samples of the ellipse: dense samples whose VR graph has a
//! prescribed number of periodic orbits, jittered uniform samples, and a
//! grid estimate of sample density.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bisect;
use crate::dynamics;
use crate::ellipse::{ahead, dist, EllipseModel, EllipsePoint, ZPoints};
use crate::error::{param, Error, Result};
use crate::graph::HomotopyType;
use crate::vr::{self, Convention};

/// Default number of grid nodes for [`epsilon_density`].
pub const DEFAULT_DENSITY_NODES: usize = 10_000;
/// Smallest parameter gap left before the end of a fast interval in which
/// another orbit may be planted.
const ORBIT_ROOM: f64 = 1e-9;

/// Relative jitter of the arbitrary points placed in slow intervals.
const FILL_JITTER: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplerSpec {
    pub a: f64,
    pub r: f64,
    pub epsilon: f64,
    pub k: usize,
    /// Orbits placed in the first and second fast interval.
    pub split: (usize, usize),
    /// Seed for the arbitrary points in the slow intervals.
    pub seed: u64,
}

impl SamplerSpec {
    /// A spec at the midpoint scale `(r1 + r2) / 2` with the orbits split as
    /// evenly as possible.
    pub fn midpoint(a: f64, epsilon: f64, k: usize, seed: u64) -> Result<Self> {
        let (r1, r2) = EllipseModel::new(a)?.critical_radii();
        Ok(SamplerSpec {
            a,
            r: 0.5 * (r1 + r2),
            epsilon,
            k,
            split: (k / 2, k - k / 2),
            seed,
        })
    }

    pub fn validate(&self) -> Result<EllipseModel> {
        let m = EllipseModel::new(self.a)?;
        let (r1, r2) = m.critical_radii();
        if !(self.r > r1 && self.r < r2) {
            return Err(param(format!("r = {} outside ({r1}, {r2})", self.r)));
        }
        if !(self.epsilon > 0.0) {
            return Err(param("epsilon must be positive"));
        }
        if self.k < 2 || self.split.0 + self.split.1 != self.k || self.split.0 == 0 || self.split.1 == 0 {
            return Err(param(format!(
                "need k >= 2 split into two positive parts, got k = {} split {:?}",
                self.k, self.split
            )));
        }
        Ok(m)
    }
}

/// Grid estimate of `sup_y d(y, X)`. The true supremum lies in
/// `[sup, sup + mesh]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityEstimate {
    pub sup: f64,
    pub mesh: f64,
}

impl DensityEstimate {
    pub fn upper_bound(&self) -> f64 {
        self.sup + self.mesh
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub points: usize,
    pub density: DensityEstimate,
    /// Step between consecutive chain points.
    pub delta: f64,
    pub orbits: usize,
    pub homotopy: HomotopyType,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdversarialSample {
    /// Sample in cyclic order.
    pub points: Vec<EllipsePoint>,
    /// The inscribed triangles planted as periodic orbits.
    pub seeded_orbits: Vec<[EllipsePoint; 3]>,
    pub report: SampleReport,
}

/// `max` of the distances between corresponding triangle vertices.
fn d_star(p: &[EllipsePoint; 3], q: &[EllipsePoint; 3]) -> f64 {
    (0..3).map(|c| dist(&p[c], &q[c])).fold(0.0, f64::max)
}

fn triangle_at(m: &EllipseModel, t: f64) -> Result<[EllipsePoint; 3]> {
    Ok(m.inscribed_triangle(&m.point(t))?.vertices)
}

/// Whether `g_r` of each vertex of `q` lands strictly beyond the next vertex
/// of `p`, so that no vertex of `q` can reach exactly its successor in `q`.
fn overshoots(m: &EllipseModel, r: f64, q: &[EllipsePoint; 3], p: &[EllipsePoint; 3]) -> Result<bool> {
    for c in 0..3 {
        let g = m.advance(&q[c], r)?;
        let next = &p[(c + 1) % 3];
        if ahead(q[c].t(), next.t()) >= ahead(q[c].t(), g.t()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Allowed `d*` step below the fast triangle `p`: the distance to the point
/// whose `g_r`-image is `p`'s next vertex, minimized over the three vertices,
/// halved, capped by `eps`, and halved again.
fn local_step(m: &EllipseModel, r: f64, p: &[EllipsePoint; 3], eps: f64) -> Result<f64> {
    let mut best = f64::INFINITY;
    for c in 0..3 {
        let q = m.retreat(&p[(c + 1) % 3], r)?;
        best = best.min(dist(&q, &p[c]));
    }
    Ok((0.5 * best).min(eps) / 2.0)
}

/// One fast interval `(z_j, z_{j+1})` together with its two triangle images,
/// the first planted orbit near its end and the chain that fills it.
#[derive(Debug, Clone)]
struct FastInterval {
    start: f64,
    len: f64,
    first_offset: f64,
    first: [EllipsePoint; 3],
    /// Non-periodic triangles, walking back from `first` toward the start.
    chain: Vec<[EllipsePoint; 3]>,
    min_step: f64,
}

impl FastInterval {
    fn build(m: &EllipseModel, z: &ZPoints, j: usize, eps: f64) -> Result<Self> {
        let r = z.r;
        let (start, end) = z.interval(j, 0);
        let len = end - start;
        let lo = [z.z(j, 0), z.z(j, 1), z.z(j, 2)];
        let hi = [z.z(j + 1, 0), z.z(j + 1, 1), z.z(j + 1, 2)];
        let mut err = None;
        let mut probe = |x: f64, target: &[EllipsePoint; 3]| match triangle_at(m, start + x) {
            Ok(t) => d_star(&t, target),
            Err(e) => {
                err = Some(e);
                0.0
            }
        };

        // first orbit at d*(p1, z_{j+1}) = eps / 2, or mid-interval when the
        // whole interval is that close to its end
        let first_offset = if d_star(&lo, &hi) < 0.5 * eps {
            0.5 * len
        } else {
            bisect::boundary(0.0, len, 1e-13, |x| probe(x, &hi) >= 0.5 * eps)
        };
        // u: d*(z_j, u) = eps / 2
        let u = bisect::boundary(0.0, len, 1e-13, |x| probe(x, &lo) < 0.5 * eps);
        if let Some(e) = err {
            return Err(e);
        }
        let first = triangle_at(m, start + first_offset)?;

        let mut chain = Vec::new();
        let mut min_step = f64::INFINITY;
        let mut cur = first;
        let mut cur_off = first_offset;
        let mut rate: Option<f64> = None;
        while cur_off > u {
            let target = local_step(m, r, &cur, eps)?;
            min_step = min_step.min(target);
            let mut dt = rate.map_or(0.25 * target / m.a(), |rho| 0.9 * target / rho).min(0.5 * cur_off);
            let mut accepted = None;
            for _ in 0..bisect::MAX_ITER {
                let q = triangle_at(m, start + cur_off - dt)?;
                let d = d_star(&q, &cur);
                if d <= target && overshoots(m, r, &q, &cur)? {
                    rate = Some(d / dt);
                    accepted = Some(q);
                    break;
                }
                dt *= if d > target { 0.9 * target / d } else { 0.5 };
            }
            let q = accepted.ok_or(Error::Verification {
                stage: "chain",
                detail: format!("no admissible chain step below offset {cur_off}"),
            })?;
            chain.push(q);
            cur = q;
            cur_off -= dt;
        }
        Ok(FastInterval {
            start,
            len,
            first_offset,
            first,
            chain,
            min_step,
        })
    }

    /// `count` planted orbits: the first one, then each next triangle placed
    /// midway between the end of the interval and the first position that
    /// clears `g_r` of the previous triangle in every copy.
    fn orbits(&self, m: &EllipseModel, r: f64, count: usize) -> Result<Vec<[EllipsePoint; 3]>> {
        let mut orbits = vec![self.first];
        let mut last = self.first_offset;
        for _ in 1..count {
            let prev = *orbits.last().expect("nonempty");
            let bounds = [m.advance(&prev[2], r)?, m.advance(&prev[0], r)?, m.advance(&prev[1], r)?];
            let mut err = None;
            let lower = bisect::boundary(last, self.len, 1e-13, |x| match triangle_at(m, self.start + x) {
                Ok(tri) => (0..3).any(|c| ahead(prev[c].t(), tri[c].t()) <= ahead(prev[c].t(), bounds[c].t())),
                Err(e) => {
                    err = Some(e);
                    false
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            let off = 0.5 * (lower + self.len);
            if self.len - lower < ORBIT_ROOM {
                return Err(Error::Verification {
                    stage: "orbits",
                    detail: format!("no room for orbit {} of {count} in a fast interval", orbits.len() + 1),
                });
            }
            orbits.push(triangle_at(m, self.start + off)?);
            last = off;
        }
        Ok(orbits)
    }
}

/// The seed-independent part of the construction for one `(a, r, ε)`: the
/// twelve z-points and the chains filling both fast intervals.
#[derive(Debug, Clone)]
pub struct SamplerPlan {
    m: EllipseModel,
    r: f64,
    eps: f64,
    z: ZPoints,
    fast: [FastInterval; 2],
}

impl SamplerPlan {
    pub fn new(a: f64, r: f64, epsilon: f64) -> Result<Self> {
        SamplerSpec {
            a,
            r,
            epsilon,
            k: 2,
            split: (1, 1),
            seed: 0,
        }
        .validate()?;
        let m = EllipseModel::new(a)?;
        let z = m.z_points(r)?;
        let fast = [FastInterval::build(&m, &z, 0, epsilon)?, FastInterval::build(&m, &z, 2, epsilon)?];
        Ok(SamplerPlan {
            m,
            r,
            eps: epsilon,
            z,
            fast,
        })
    }

    pub fn model(&self) -> &EllipseModel {
        &self.m
    }

    pub fn z_points(&self) -> &ZPoints {
        &self.z
    }

    /// Points contributed by the two chains.
    pub fn chain_points(&self) -> usize {
        3 * self.fast.iter().map(|f| f.chain.len()).sum::<usize>()
    }

    /// The verified sample with `split.0 + split.1` orbits.
    pub fn sample(&self, split: (usize, usize), seed: u64) -> Result<AdversarialSample> {
        let (m, eps) = (&self.m, self.eps);
        let k = split.0 + split.1;
        if split.0 == 0 || split.1 == 0 {
            return Err(param(format!("both parts of the split must be positive, got {split:?}")));
        }
        let mut points = Vec::new();
        let mut seeded = Vec::new();
        for (iv, count) in self.fast.iter().zip([split.0, split.1]) {
            let orbits = iv.orbits(m, self.r, count)?;
            points.extend(orbits.iter().flatten().copied());
            points.extend(iv.chain.iter().flatten().copied());
            seeded.extend(orbits);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for j in [1, 3] {
            for c in 0..3 {
                let (start, end) = self.z.interval(j, c);
                points.extend(fill_arc(m, start, end - start, 0.5 * eps, &mut rng));
            }
        }
        let points = vr::sorted_sample(&points)?;

        let nodes = DEFAULT_DENSITY_NODES.max((m.perimeter(1024) * 10.0 / eps).ceil() as usize);
        let density = epsilon_density_grid(m, &points, nodes);
        if density.mesh > eps / 10.0 || density.upper_bound() > eps {
            return Err(Error::Verification {
                stage: "density",
                detail: format!(
                    "grid sup {:.3e} + mesh {:.3e} exceeds epsilon {eps}",
                    density.sup, density.mesh
                ),
            });
        }
        let mut homotopy = HomotopyType::Point;
        let mut orbits = 0;
        for c in [Convention::Less, Convention::LessEq] {
            let g = vr::vr_graph(m, &points, self.r, c)?;
            let report = dynamics::periodic_orbits(&g)?;
            if report.count != k || report.length != 3 {
                return Err(Error::Verification {
                    stage: "orbits",
                    detail: format!(
                        "{c:?}: expected {k} orbits of length 3, found {} of length {}",
                        report.count, report.length
                    ),
                });
            }
            homotopy = g.homotopy_type()?;
            if homotopy != HomotopyType::wedge(k - 1, 1) {
                return Err(Error::Verification {
                    stage: "homotopy",
                    detail: format!("{c:?}: classified as {homotopy}"),
                });
            }
            orbits = report.count;
        }
        let delta = self.fast.iter().map(|f| f.min_step).fold(f64::INFINITY, f64::min);
        Ok(AdversarialSample {
            report: SampleReport {
                points: points.len(),
                density,
                delta,
                orbits,
                homotopy,
            },
            points,
            seeded_orbits: seeded,
        })
    }
}

/// Arbitrary points in the open parameter arc `(start, start + len)` at
/// Euclidean spacing below `spacing`, jittered.
fn fill_arc(m: &EllipseModel, start: f64, len: f64, spacing: f64, rng: &mut ChaCha8Rng) -> Vec<EllipsePoint> {
    // the parametrization has speed at most a
    let count = (len * m.a() / spacing).ceil().max(1.0) as usize;
    let h = len / count as f64;
    (0..count)
        .map(|j| {
            let jitter = rng.gen_range(-FILL_JITTER..=FILL_JITTER);
            m.point(start + (j as f64 + 0.5 + jitter) * h)
        })
        .collect()
}

/// A self-certifying `ε`-dense sample whose VR graph at scale `r` has
/// exactly `k` periodic orbits, so that its VR complex is a wedge of `k - 1`
/// two-spheres. Both conventions are checked.
pub fn adversarial_sample(spec: &SamplerSpec) -> Result<AdversarialSample> {
    spec.validate()?;
    SamplerPlan::new(spec.a, spec.r, spec.epsilon)?.sample(spec.split, spec.seed)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformSample {
    pub points: Vec<EllipsePoint>,
    /// Grid estimate of the density actually achieved.
    pub epsilon: f64,
}

/// `n` points at equal parameter spacing, each shifted by up to a quarter
/// step when a seed is given.
pub fn uniform_sample(m: &EllipseModel, n: usize, jitter_seed: Option<u64>) -> Result<UniformSample> {
    if n < 3 {
        return Err(param(format!("uniform sample needs at least 3 points, got {n}")));
    }
    let h = TAU / n as f64;
    let mut rng = jitter_seed.map(ChaCha8Rng::seed_from_u64);
    let points: Vec<EllipsePoint> = (0..n)
        .map(|i| {
            let jitter = rng.as_mut().map_or(0.0, |g| g.gen_range(-0.25..=0.25));
            m.point((i as f64 + jitter) * h)
        })
        .collect();
    let epsilon = epsilon_density(m, &points);
    Ok(UniformSample { points, epsilon })
}

/// Grid estimate of the density of `points` with the default node count.
pub fn epsilon_density(m: &EllipseModel, points: &[EllipsePoint]) -> f64 {
    epsilon_density_grid(m, points, DEFAULT_DENSITY_NODES).sup
}

/// Largest distance from a grid node to the sample, over `nodes` evenly
/// spaced parameters. Distance to an ellipse point is unimodal along the
/// ellipse, so each node only needs its two cyclic neighbours in the sample.
pub fn epsilon_density_grid(m: &EllipseModel, points: &[EllipsePoint], nodes: usize) -> DensityEstimate {
    let mut ts: Vec<f64> = points.iter().map(|p| p.t()).collect();
    ts.sort_by(f64::total_cmp);
    let sample: Vec<EllipsePoint> = ts.iter().map(|&t| m.point(t)).collect();
    let n = sample.len();
    let grid: Vec<EllipsePoint> = (0..nodes).map(|i| m.point(TAU * i as f64 / nodes as f64)).collect();
    let mut mesh: f64 = 0.0;
    let mut sup: f64 = 0.0;
    let mut next = 0;
    for (i, y) in grid.iter().enumerate() {
        mesh = mesh.max(dist(y, &grid[(i + 1) % nodes]));
        if n == 0 {
            sup = f64::INFINITY;
            continue;
        }
        while next < n && ts[next] < y.t() {
            next += 1;
        }
        let after = &sample[next % n];
        let before = &sample[(next + n - 1) % n];
        sup = sup.max(dist(y, after).min(dist(y, before)));
    }
    DensityEstimate { sup, mesh }
}
