//! Two fast triangles that are separate orbits at one scale merge into one
//! orbit at a larger scale, so the map on H_2 has rank 1.

use ellipse_rips::ellipse::{EllipseModel, EllipsePoint};
use ellipse_rips::oracle::{clique_complex, induced_rank, DEFAULT_SIMPLEX_CAP};
use ellipse_rips::vr::{rank_across, sorted_sample, vr_graph, Convention};

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.2)?;
    let (r1, r2) = m.critical_radii();
    let r = 0.5 * (r1 + r2);
    let r_tilde = r1 + 0.8 * (r2 - r1);
    let z = m.z_points(r)?;
    let (s0, e0) = z.interval(0, 0);
    let (s2, e2) = z.interval(2, 0);
    let p = 0.5 * (s0 + e0);
    let mut pts: Vec<EllipsePoint> = Vec::new();
    for t in [p, p + 0.01, 0.5 * (s2 + e2)] {
        pts.extend(m.inscribed_triangle(&m.point(t))?.vertices);
    }
    let pts = sorted_sample(&pts)?;
    let c = Convention::LessEq;
    let small = clique_complex(&vr_graph(&m, &pts, r, c)?.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP)?;
    let big = clique_complex(&vr_graph(&m, &pts, r_tilde, c)?.undirected_adjacency(), 3, DEFAULT_SIMPLEX_CAP)?;
    println!("rank from orbits: {}", rank_across(&m, &pts, r, r_tilde, c)?);
    println!("rank from reduction: {}", induced_rank(&small, &big, 2)?);
    Ok(())
}
