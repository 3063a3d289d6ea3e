//! Persistence barcodes: the closed form for the whole ellipse and a direct
//! computation for a small sample.

use ellipse_rips::ellipse::EllipseModel;
use ellipse_rips::sampler::uniform_sample;
use ellipse_rips::vr::{ellipse_barcode, sample_barcode, Convention};

fn main() -> ellipse_rips::Result<()> {
    let m = EllipseModel::new(1.2)?;
    for c in [Convention::Less, Convention::LessEq] {
        println!("ellipse, {c:?}:");
        ellipse_barcode(&m, c).write_csv(std::io::stdout())?;
    }
    let pts = uniform_sample(&m, 18, None)?.points;
    let b = sample_barcode(&pts, Convention::LessEq, 2, 60)?;
    println!("18 evenly spaced points:");
    for bar in b.intervals.iter().filter(|b| b.dim > 0 || b.death.is_infinite()) {
        println!("  H{} [{:.4}, {:.4})", bar.dim, bar.birth, bar.death);
    }
    Ok(())
}
