//! Homotopy types of Vietoris–Rips complexes of a dense ellipse sample as the
//! scale grows past the critical radii.

use ellipse_rips::ellipse::EllipseModel;
use ellipse_rips::sampler::uniform_sample;
use ellipse_rips::vr::{classify_sample, ellipse_homotopy, Convention};

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.2)?;
    let (r1, r2) = m.critical_radii();
    let sample = uniform_sample(&m, 3000, Some(7))?;
    println!("3000 points, density {:.4}", sample.epsilon);
    for r in [0.5, 1.0, r1 - 0.01, r1 + 0.001, 0.5 * (r1 + r2), r2 + 0.01] {
        let (h, orbits) = classify_sample(&m, &sample.points, r, Convention::LessEq)?;
        let whole = match ellipse_homotopy(&m, r, Convention::LessEq) {
            Ok(ans) => ans.homotopy.to_string(),
            Err(e) => format!("({e})"),
        };
        println!("r = {r:.5}: sample ≃ {h} ({} orbits), ellipse ≃ {whole}", orbits.count);
    }
    Ok(())
}
