//! Vietoris–Rips complexes of points on an ellipse of small eccentricity,
//! analysed through cyclic graphs and their dynamics.

mod bisect;
pub mod circle;
pub mod cli;
pub mod dynamics;
pub mod ellipse;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sampler;
pub mod vr;

pub use error::{Error, Result};
