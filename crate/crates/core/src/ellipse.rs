//! Geometry of the ellipse `(x/a)^2 + y^2 = 1` for `1 <= a <= sqrt(2)`.
//!
//! Points are parametrized as `(a cos t, sin t)`. The parameter is the source
//! of truth; coordinates are derived from it. Moving "clockwise" on the circle
//! of positions means increasing `t`, and the position of a point is
//! `t / 2π`.
//!
//! Every root in this module is found by bisection on an interval where the
//! relevant function is known to be monotone:
//!
//! * the inverse of the normal-antipode map solves
//!   `(a^2 - 1) sin t - a x tan t + y = 0`, increasing on the open quadrant
//!   diametrically opposite the target;
//! * `d(p, ·)` increases along the clockwise arc from `p` to `h^{-1}(p)`,
//!   which yields the arc-advance map `g_r`;
//! * the total travel of `g_r^3` increases with `r`, which yields the
//!   side `s(p)` of the unique inscribed equilateral triangle through `p`;
//! * `s` is monotone between consecutive vertices of the four axis triangles,
//!   which yields the twelve solutions of `s(p) = r`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use crate::bisect;
use crate::circle::CyclePosition;
use crate::error::{consistency, param, Result};

/// Parameter tolerance for bisection in `t`.
pub const PARAM_TOL: f64 = 1e-13;
/// Tolerance on `s` when classifying points as fast, slow or critical.
pub const SIDE_TOL: f64 = 1e-9;

/// A point of the ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipsePoint {
    t: f64,
    x: f64,
    y: f64,
}

impl EllipsePoint {
    /// Parameter in `[0, 2π)`.
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.x, self.y)
    }

    /// Position on the unit-circumference circle.
    pub fn cycle(&self) -> CyclePosition {
        CyclePosition::new(self.t / TAU)
    }
}

/// Euclidean distance.
pub fn dist(p: &EllipsePoint, q: &EllipsePoint) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Clockwise parameter distance from `t0` to `t1`, in `[0, 2π)`.
pub fn ahead(t0: f64, t1: f64) -> f64 {
    let d = (t1 - t0).rem_euclid(TAU);
    if d >= TAU {
        0.0
    } else {
        d
    }
}

/// The four points where the ellipse meets its axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisPoint {
    /// `(a, 0)`
    PosX,
    /// `(0, 1)`
    PosY,
    /// `(-a, 0)`
    NegX,
    /// `(0, -1)`
    NegY,
}

impl AxisPoint {
    pub const ALL: [AxisPoint; 4] = [AxisPoint::PosX, AxisPoint::PosY, AxisPoint::NegX, AxisPoint::NegY];

    fn param(self) -> f64 {
        match self {
            AxisPoint::PosX => 0.0,
            AxisPoint::PosY => FRAC_PI_2,
            AxisPoint::NegX => PI,
            AxisPoint::NegY => 3.0 * FRAC_PI_2,
        }
    }
}

/// Three vertices `p, p', p''` of an inscribed equilateral triangle in
/// clockwise order, and the common side length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleCertificate {
    pub vertices: [EllipsePoint; 3],
    pub side: f64,
}

impl TriangleCertificate {
    /// Largest deviation of a pairwise distance from `side`.
    pub fn side_residual(&self) -> f64 {
        let [p, q, w] = &self.vertices;
        [dist(p, q), dist(q, w), dist(w, p)]
            .iter()
            .map(|d| (d - self.side).abs())
            .fold(0.0, f64::max)
    }
}

/// Classification of an ellipse point at scale `r` by comparing `s(p)` to `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    Fast,
    Slow,
    Critical,
}

/// The twelve solutions of `s(p) = r` for `r1 < r < r2`, in the cyclic order
/// `z0 z1 z2 z3 z0' z1' z2' z3' z0'' z1'' z2'' z3''`, where `z0` is the
/// solution just before `(a, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZPoints {
    pub r: f64,
    pub points: [EllipsePoint; 12],
}

impl ZPoints {
    /// `z_i` for `copy = 0`, `z_i'` for `copy = 1`, `z_i''` for `copy = 2`.
    pub fn z(&self, i: usize, copy: usize) -> EllipsePoint {
        self.points[4 * (copy % 3) + i]
    }

    /// Parameter-space arcs `(start, end)` of interval `I_j` (`j` in 0..4),
    /// one per copy. `I_0` and `I_2` consist of fast points, `I_1` and `I_3`
    /// of slow points.
    pub fn interval(&self, j: usize, copy: usize) -> (f64, f64) {
        let start = self.z(j, copy).t();
        let end = if j == 3 {
            self.z(0, copy + 1).t()
        } else {
            self.z(j + 1, copy).t()
        };
        (start, start + ahead(start, end))
    }
}

/// An ellipse of small eccentricity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipseModel {
    a: f64,
}

impl EllipseModel {
    pub fn new(a: f64) -> Result<Self> {
        if !(1.0..=std::f64::consts::SQRT_2 + 1e-12).contains(&a) {
            return Err(param(format!("semi-major axis a = {a} outside [1, sqrt(2)]")));
        }
        Ok(EllipseModel { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn is_circle(&self) -> bool {
        self.a == 1.0
    }

    /// The point with parameter `t` (any real; normalized mod 2π).
    pub fn point(&self, t: f64) -> EllipsePoint {
        let mut t = t.rem_euclid(TAU);
        if t >= TAU {
            t = 0.0;
        }
        let (mut s, mut c) = t.sin_cos();
        // pin axis points so that symmetric configurations stay exact
        if s.abs() < 1e-15 {
            s = 0.0;
        }
        if c.abs() < 1e-15 {
            c = 0.0;
        }
        EllipsePoint {
            t,
            x: self.a * c,
            y: s,
        }
    }

    /// The point at position `c` of the unit-circumference circle.
    pub fn point_at(&self, c: CyclePosition) -> EllipsePoint {
        self.point(c.coord() * TAU)
    }

    /// The ellipse point on the ray from the centre through `(x, y)` scaled
    /// in `x` by `1/a`; exact for points already on the ellipse.
    pub fn point_from_coords(&self, x: f64, y: f64) -> EllipsePoint {
        self.point(y.atan2(x / self.a))
    }

    pub fn axis_point(&self, which: AxisPoint) -> EllipsePoint {
        self.point(which.param())
    }

    /// Residual of the defining equation at `p`.
    pub fn equation_residual(&self, p: &EllipsePoint) -> f64 {
        ((p.x / self.a).powi(2) + p.y * p.y - 1.0).abs()
    }

    /// The normal-antipode map `h`: the second intersection of the normal
    /// line at `p` with the ellipse.
    pub fn antipodal_normal(&self, p: &EllipsePoint) -> EllipsePoint {
        if self.is_circle() || p.x == 0.0 || p.y == 0.0 {
            return self.point(p.t + PI);
        }
        let a2 = self.a * self.a;
        let (nx, ny) = (p.x / a2, p.y);
        // p + λ n on the ellipse: λ^2 (nx²/a² + ny²) + 2λ (x nx/a² + y ny) = 0
        let lam = -2.0 * (p.x * nx / a2 + p.y * ny) / (nx * nx / a2 + ny * ny);
        self.point_from_coords(p.x + lam * nx, p.y + lam * ny)
    }

    /// `h^{-1}`: the unique `q` whose normal line meets the ellipse again at `p`.
    pub fn inverse_antipodal_normal(&self, p: &EllipsePoint) -> EllipsePoint {
        self.point(self.inverse_param(p))
    }

    fn inverse_param(&self, p: &EllipsePoint) -> f64 {
        if self.is_circle() || p.x == 0.0 || p.y == 0.0 {
            return (p.t + PI).rem_euclid(TAU);
        }
        // Reflect p into the open third quadrant; the preimage lies in the
        // first quadrant, where g(t) = (a²-1) sin t - a x tan t + y increases.
        let (sx, sy) = (p.x.signum(), p.y.signum());
        let (x, y) = (-p.x.abs(), -p.y.abs());
        let a = self.a;
        let g = |t: f64| (a * a - 1.0) * t.sin() - a * x * t.tan() + y;
        let t = bisect::boundary(0.0, FRAC_PI_2, PARAM_TOL, |t| g(t) < 0.0);
        // undo the reflection (x, y) -> (-sx x, -sy y)
        let (qx, qy) = (-sx * a * t.cos(), -sy * t.sin());
        qy.atan2(qx / a).rem_euclid(TAU)
    }

    /// Clockwise parameter step from `t` to `g_r(point(t))`. Requires `0 < r < 2`.
    fn hop(&self, t: f64, r: f64) -> f64 {
        self.step_to_distance(t, r, 1.0)
    }

    /// Parameter distance from `t` to the point at Euclidean distance `r`,
    /// moving clockwise (`dir = 1`) or counterclockwise (`dir = -1`).
    fn step_to_distance(&self, t: f64, r: f64, dir: f64) -> f64 {
        if self.is_circle() {
            return 2.0 * (0.5 * r).asin();
        }
        let p = self.point(t);
        let d = |u: f64| dist(&p, &self.point(t + dir * u));
        // d(p, .) is unimodal along the ellipse with its maximum at h^{-1}(p):
        // coarse steps find a bracket unless they overshoot the maximum, in
        // which case fall back to the exact bracket ending there.
        let step = PI / 8.0;
        let mut prev = (0.0, 0.0);
        let mut bracket = None;
        for k in 1..=16 {
            let u = k as f64 * step;
            let du = d(u);
            if du >= r {
                bracket = Some((prev.0, u));
                break;
            }
            if du < prev.1 {
                break;
            }
            prev = (u, du);
        }
        let (lo, hi) = bracket.unwrap_or_else(|| {
            let far = self.inverse_param(&p);
            (0.0, if dir > 0.0 { ahead(t, far) } else { ahead(far, t) })
        });
        bisect::boundary(lo, hi, PARAM_TOL, |u| d(u) < r)
    }

    /// The arc-advance map `g_r`: the unique point at distance `r` on the
    /// clockwise arc from `p` to `h^{-1}(p)`.
    pub fn advance(&self, p: &EllipsePoint, r: f64) -> Result<EllipsePoint> {
        if !(r > 0.0 && r < 2.0) {
            return Err(param(format!("advance radius {r} outside (0, 2)")));
        }
        Ok(self.point(p.t + self.hop(p.t, r)))
    }

    /// `g_r^{-1}`: the unique point `q` before `p` with `g_r(q) = p`.
    pub fn retreat(&self, p: &EllipsePoint, r: f64) -> Result<EllipsePoint> {
        if !(r > 0.0 && r < 2.0) {
            return Err(param(format!("retreat radius {r} outside (0, 2)")));
        }
        Ok(self.point(p.t - self.step_to_distance(p.t, r, -1.0)))
    }

    /// Total clockwise parameter travel of `g_r^3` starting at `t`.
    fn triple_travel(&self, t: f64, r: f64) -> f64 {
        let u1 = self.hop(t, r);
        let u2 = self.hop(t + u1, r);
        let u3 = self.hop(t + u1 + u2, r);
        u1 + u2 + u3
    }

    /// Side length `s(p)` of the unique inscribed equilateral triangle with
    /// vertex `p`, i.e. the `r` at which `g_r^3` returns exactly once around.
    pub fn triangle_side(&self, p: &EllipsePoint) -> f64 {
        if self.is_circle() {
            return 3f64.sqrt();
        }
        // r1 >= sqrt(3) > 1 and r2 < 2 throughout 1 <= a <= sqrt(2)
        bisect::boundary(1.0, 1.9999, 1e-13, |r| self.triple_travel(p.t, r) < TAU)
    }

    /// `p' = g_{s(p)}(p)`: the next vertex of the triangle through `p`.
    pub fn triangle_next(&self, p: &EllipsePoint) -> EllipsePoint {
        let s = self.triangle_side(p);
        self.point(p.t + self.hop(p.t, s))
    }

    /// `(r1, r2)`: the sides of the triangles through `(±a, 0)` and `(0, ±1)`.
    pub fn critical_radii(&self) -> (f64, f64) {
        let a = self.a;
        let k = 4.0 * 3f64.sqrt();
        (k * a / (a * a + 3.0), k * a * a / (3.0 * a * a + 1.0))
    }

    pub fn inscribed_triangle(&self, p: &EllipsePoint) -> Result<TriangleCertificate> {
        let side = self.triangle_side(p);
        let q = self.point(p.t + self.hop(p.t, side));
        let w = self.point(q.t + self.hop(q.t, side));
        let cert = TriangleCertificate {
            vertices: [*p, q, w],
            side,
        };
        let res = cert.side_residual();
        if res > 1e-9 {
            return Err(consistency(format!("inscribed triangle side residual {res:e}")));
        }
        Ok(cert)
    }

    /// Closed-form vertices of the inscribed equilateral triangle through an
    /// axis point, in clockwise (increasing-`t`) order starting there.
    pub fn axis_triangle(&self, which: AxisPoint) -> [(f64, f64); 3] {
        let a = self.a;
        let a2 = a * a;
        let r3 = 3f64.sqrt();
        let cx = (3.0 * a - a2 * a) / (a2 + 3.0);
        let cy = 2.0 * r3 * a / (a2 + 3.0);
        let ex = 2.0 * r3 * a2 / (3.0 * a2 + 1.0);
        let ey = (3.0 * a2 - 1.0) / (3.0 * a2 + 1.0);
        match which {
            AxisPoint::PosX => [(a, 0.0), (-cx, cy), (-cx, -cy)],
            AxisPoint::NegX => [(-a, 0.0), (cx, -cy), (cx, cy)],
            AxisPoint::PosY => [(0.0, 1.0), (-ex, -ey), (ex, -ey)],
            AxisPoint::NegY => [(0.0, -1.0), (ex, ey), (-ex, ey)],
        }
    }

    /// The twelve extrema of `s` (vertices of the four axis triangles),
    /// sorted by parameter starting at `(a, 0)`. Minima sit at even indices.
    pub fn side_extrema(&self) -> [EllipsePoint; 12] {
        let mut pts: Vec<EllipsePoint> = AxisPoint::ALL
            .iter()
            .flat_map(|&w| self.axis_triangle(w))
            .map(|(x, y)| self.point_from_coords(x, y))
            .collect();
        pts.sort_by(|p, q| p.t.total_cmp(&q.t));
        pts.try_into().expect("twelve extrema")
    }

    /// The twelve solutions of `s(p) = r`, for `r1 < r < r2`.
    pub fn z_points(&self, r: f64) -> Result<ZPoints> {
        let (r1, r2) = self.critical_radii();
        if !(r > r1 && r < r2) {
            return Err(param(format!("z-points need r1 < r < r2, got r = {r} with ({r1}, {r2})")));
        }
        let ext = self.side_extrema();
        let mut points = [self.point(0.0); 12];
        for (j, slot) in points.iter_mut().enumerate() {
            // z_j lies on arc (j + 11) mod 12, between extrema e and e+1
            let e = (j + 11) % 12;
            let t0 = ext[e].t;
            let span = ahead(t0, ext[(e + 1) % 12].t);
            let increasing = e % 2 == 0;
            let u = bisect::boundary(0.0, span, PARAM_TOL, |u| {
                let s = self.triangle_side(&self.point(t0 + u));
                (s < r) == increasing
            });
            *slot = self.point(t0 + u);
        }
        Ok(ZPoints { r, points })
    }

    pub fn point_class(&self, r: f64, p: &EllipsePoint) -> Result<PointClass> {
        let (r1, r2) = self.critical_radii();
        if !(r > r1 && r < r2) {
            return Err(param(format!("point_class needs r1 < r < r2, got {r}")));
        }
        let s = self.triangle_side(p);
        Ok(if s < r - SIDE_TOL {
            PointClass::Fast
        } else if s > r + SIDE_TOL {
            PointClass::Slow
        } else {
            PointClass::Critical
        })
    }

    /// `(t, s(point(t)))` on `samples` evenly spaced parameters.
    pub fn side_profile(&self, samples: usize) -> Vec<(f64, f64)> {
        (0..samples)
            .map(|i| {
                let t = TAU * i as f64 / samples as f64;
                (t, self.triangle_side(&self.point(t)))
            })
            .collect()
    }

    /// Approximate perimeter by polyline with `segments` chords.
    pub fn perimeter(&self, segments: usize) -> f64 {
        (0..segments)
            .map(|i| {
                let t0 = TAU * i as f64 / segments as f64;
                let t1 = TAU * (i + 1) as f64 / segments as f64;
                dist(&self.point(t0), &self.point(t1))
            })
            .sum()
    }
}

/// The 40 monomials of the sextic `p(x, a, r)` whose roots in `x` contain the
/// `x`-coordinates of every inscribed equilateral triangle of side `r`,
/// grouped by power of `x` (0, 2, 4, 6).
fn sextic_monomials(x: f64, a: f64, r: f64) -> [[f64; 16]; 4] {
    let a2 = a * a;
    let ap = |k: i32| a2.powi(k / 2);
    let r4 = r.powi(4);
    let r6 = r.powi(6);
    let r8 = r.powi(8);
    let r10 = r.powi(10);
    let x2 = x * x;
    let x4 = x2 * x2;
    let x6 = x4 * x2;
    let mut m = [[0.0; 16]; 4];
    let c0 = [
        12288.0 * ap(12) * r4,
        -6912.0 * ap(12) * r6,
        -10752.0 * ap(10) * r6,
        13568.0 * ap(8) * r6,
        1296.0 * ap(12) * r8,
        4032.0 * ap(10) * r8,
        -2208.0 * ap(8) * r8,
        -6720.0 * ap(6) * r8,
        3600.0 * ap(4) * r8,
        -81.0 * ap(12) * r10,
        -378.0 * ap(10) * r10,
        -63.0 * ap(8) * r10,
        1044.0 * ap(6) * r10,
        -63.0 * ap(4) * r10,
        -378.0 * ap(2) * r10,
        -81.0 * r10,
    ];
    let c2 = [
        -36864.0 * ap(10) * r4,
        36864.0 * ap(8) * r4,
        13824.0 * ap(10) * r6,
        -4608.0 * ap(8) * r6,
        16896.0 * ap(6) * r6,
        -26112.0 * ap(4) * r6,
        -1296.0 * ap(10) * r8,
        -432.0 * ap(8) * r8,
        -4512.0 * ap(6) * r8,
        4512.0 * ap(4) * r8,
        432.0 * ap(2) * r8,
        1296.0 * r8,
    ];
    let c4 = [
        36864.0 * ap(8) * r4,
        -73728.0 * ap(6) * r4,
        36864.0 * ap(4) * r4,
        -6912.0 * ap(8) * r6,
        15360.0 * ap(6) * r6,
        -16896.0 * ap(4) * r6,
        15360.0 * ap(2) * r6,
        -6912.0 * r6,
    ];
    let c6 = [
        -12288.0 * ap(6) * r4,
        36864.0 * ap(4) * r4,
        -36864.0 * ap(2) * r4,
        12288.0 * r4,
    ];
    m[0][..16].copy_from_slice(&c0);
    for (i, v) in c2.iter().enumerate() {
        m[1][i] = v * x2;
    }
    for (i, v) in c4.iter().enumerate() {
        m[2][i] = v * x4;
    }
    for (i, v) in c6.iter().enumerate() {
        m[3][i] = v * x6;
    }
    m
}

/// Value of the sextic certificate polynomial `p(x, a, r)`.
///
/// Each power of `x` is summed separately from its own monomials and the four
/// partial sums are then combined smallest-magnitude first.
pub fn sextic_residual(x: f64, a: f64, r: f64) -> f64 {
    let m = sextic_monomials(x, a, r);
    let mut parts: Vec<f64> = m.iter().map(|row| row.iter().sum()).collect();
    parts.sort_by(|p, q| p.abs().total_cmp(&q.abs()));
    parts.iter().sum()
}

/// Largest monomial magnitude of the sextic at `(x, a, r)`; the natural scale
/// for judging whether [`sextic_residual`] vanishes.
pub fn sextic_scale(x: f64, a: f64, r: f64) -> f64 {
    sextic_monomials(x, a, r)
        .iter()
        .flatten()
        .fold(0.0, |acc, v| acc.max(v.abs()))
}
