//! Dense samples whose Vietoris–Rips complex at one scale is a wedge of any
//! requested number of 2-spheres.

use std::time::Instant;

use ellipse_rips::ellipse::EllipseModel;
use ellipse_rips::sampler::SamplerPlan;

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.2)?;
    let (r1, r2) = m.critical_radii();
    let start = Instant::now();
    let plan = SamplerPlan::new(1.2, 0.5 * (r1 + r2), 0.02)?;
    println!("plan: {} chain points in {:.1?}", plan.chain_points(), start.elapsed());
    for k in 2..=5 {
        let s = plan.sample((k / 2, k - k / 2), 1)?;
        println!(
            "k = {k}: {} points, density ≤ {:.4}, {} orbits, ≃ {}",
            s.report.points,
            s.report.density.upper_bound(),
            s.report.orbits,
            s.report.homotopy
        );
    }
    Ok(())
}
