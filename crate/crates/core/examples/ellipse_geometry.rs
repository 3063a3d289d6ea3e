//! Geometry of the ellipse (a cos t, sin t): critical radii, inscribed
//! equilateral triangles, the forward map g_r and the points where the
//! triangle side equals r.

use ellipse_rips::ellipse::{sextic_residual, sextic_scale, AxisPoint, EllipseModel};

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.2)?;
    let (r1, r2) = m.critical_radii();
    println!("a = 1.2: r1 = {r1:.10}, r2 = {r2:.10}");

    for which in [AxisPoint::PosX, AxisPoint::PosY] {
        let tri = m.inscribed_triangle(&m.axis_point(which))?;
        println!("triangle at {which:?}: side {:.10}", tri.side);
        for v in tri.vertices {
            println!(
                "  ({:+.8}, {:+.8})  sextic residual {:.1e}",
                v.x(),
                v.y(),
                sextic_residual(v.x(), m.a(), tri.side) / sextic_scale(v.x(), m.a(), tri.side)
            );
        }
    }

    let r = 0.5 * (r1 + r2);
    let p = m.point(0.3);
    let q = m.advance(&p, r)?;
    println!("g_r(t = 0.3) at r = {r:.6}: t = {:.6}, distance {:.12}", q.t(), ellipse_rips::ellipse::dist(&p, &q));
    let z = m.z_points(r)?;
    for j in 0..4 {
        let (s, e) = z.interval(j, 0);
        println!("I_{j}: [{s:.4}, {e:.4}] length {:.4}", e - s);
    }
    Ok(())
}
