//! Classification of one sample over a grid of scales, evaluated in parallel.

use ellipse_rips::cli::sweep_rows;
use ellipse_rips::ellipse::EllipseModel;
use ellipse_rips::sampler::uniform_sample;
use ellipse_rips::vr::Convention;

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.1)?;
    let (_, r2) = m.critical_radii();
    let pts = uniform_sample(&m, 1500, Some(0))?.points;
    let grid: Vec<f64> = (1..=40).map(|i| r2 * i as f64 / 40.0 + 0.02).collect();
    for row in sweep_rows(&m, &pts, &grid, Convention::Less)? {
        println!("{:.4}  {:>8}  {:<10} {}", row.r, row.wf, row.homotopy, row.orbits);
    }
    Ok(())
}
