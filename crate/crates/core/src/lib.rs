//! Reversible message-to-Gaussian-noise steganography.
//!
//! - [`normal`]: standard-normal CDF/PPF/PDF.
//! - [`codec`]: framing, keyed masking, interval encoding and the
//!   variance-preserving encoder.
//! - [`ode`]: probability-flow ODE with analytic score fields and a Heun
//!   integrator, mapping noise to samples and back.
//! - [`stats`]: normality tests, moments, discrete KL and histograms.
//! - [`cli`]: config and tensor file formats plus the command pipelines.

pub mod cli;
pub mod codec;
pub mod error;
pub mod normal;
pub mod ode;
mod par;
pub mod stats;
pub mod tensor;

pub use error::{Error, Result};
