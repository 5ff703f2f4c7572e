//! Probability-flow ODE
//!
//! ```text
//! dx/dt = (s'(t)/s(t)) x - s(t)² σ'(t) σ(t) ∇ₓ log p(x/s(t); σ(t))
//! ```
//!
//! integrated with Heun's method between `T` and `epsilon`. Generation starts
//! from `s(T) σ(T) g` and stops at `x_epsilon`; inversion runs the same grid
//! backwards and divides the result by `s(T) σ(T)`.

mod heun;
pub mod scheduler;
pub mod score;

use crate::codec::NoiseVector;
use crate::error::{Error, Result};
use crate::tensor::Tensor;

pub use heun::{heun_integrate, heun_trajectory, Direction};
pub use scheduler::{LinearSigma, Scheduler};
pub use score::{mixture_score, GaussianMixture, MixtureComponent, ScoreField, ZeroScore};

/// Default exponent of the power-law time discretization.
pub const DEFAULT_RHO: f64 = 7.0;

/// Strictly decreasing times from `T` down to `epsilon`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid(Vec<f64>);

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::Argument("time grid needs at least two points".into()));
        }
        if times.windows(2).any(|w| !(w[0] > w[1])) || !(times[times.len() - 1] > 0.0) {
            return Err(Error::Argument("time grid must be strictly decreasing and positive".into()));
        }
        Ok(Self(times))
    }

    pub fn times(&self) -> &[f64] {
        &self.0
    }

    pub fn steps(&self) -> usize {
        self.0.len() - 1
    }

    pub fn start(&self) -> f64 {
        self.0[0]
    }

    pub fn end(&self) -> f64 {
        self.0[self.0.len() - 1]
    }
}

/// `t_i = (T^(1/ρ) + i/N (ε^(1/ρ) - T^(1/ρ)))^ρ`, with both endpoints pinned.
pub fn build_time_grid(steps: usize, scheduler: &dyn Scheduler, rho: f64) -> Result<TimeGrid> {
    if steps == 0 {
        return Err(Error::Argument("time grid needs at least one step".into()));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Argument(format!("rho must be > 0, got {rho}")));
    }
    let (t_max, eps) = (scheduler.t_max(), scheduler.epsilon());
    let (a, b) = (t_max.powf(1.0 / rho), eps.powf(1.0 / rho));
    let mut times: Vec<f64> = (0..=steps)
        .map(|i| (a + i as f64 / steps as f64 * (b - a)).powf(rho))
        .collect();
    times[0] = t_max;
    times[steps] = eps;
    TimeGrid::new(times)
}

/// Right-hand side of the ODE at `(x, t)`.
pub fn drift(x: &[f64], t: f64, scheduler: &dyn Scheduler, score: &dyn ScoreField) -> Result<Vec<f64>> {
    let mut out = vec![0.0; x.len()];
    drift_into(x, t, scheduler, score, &mut out)?;
    Ok(out)
}

pub(crate) fn drift_into(
    x: &[f64],
    t: f64,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
    out: &mut [f64],
) -> Result<()> {
    if !(t >= scheduler.epsilon() && t <= scheduler.t_max()) {
        return Err(Error::Domain(format!(
            "t = {t} outside [{}, {}]",
            scheduler.epsilon(),
            scheduler.t_max()
        )));
    }
    let s = scheduler.scale(t);
    let sigma = scheduler.sigma(t);
    let growth = scheduler.scale_dot(t) / s;
    let pull = s * s * scheduler.sigma_dot(t) * sigma;
    if s == 1.0 {
        score.score_into(x, sigma, out);
    } else {
        let scaled: Vec<f64> = x.iter().map(|v| v / s).collect();
        score.score_into(&scaled, sigma, out);
    }
    for (o, xi) in out.iter_mut().zip(x) {
        *o = growth * xi - pull * *o;
    }
    Ok(())
}

fn check_dim(len: usize, score: &dyn ScoreField) -> Result<()> {
    match score.dim() {
        Some(d) if d != len => Err(Error::Argument(format!(
            "noise has {len} elements but the score field expects {d}"
        ))),
        _ => Ok(()),
    }
}

/// Noise to sample: scales `g` to `N(0, σ(T)² I)` and integrates down to `epsilon`.
pub fn generate(
    g: &NoiseVector,
    grid: &TimeGrid,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
) -> Result<Tensor> {
    check_dim(g.len(), score)?;
    let t_max = scheduler.t_max();
    let factor = scheduler.scale(t_max) * scheduler.sigma(t_max) / g.sigma_t();
    let x_t: Vec<f64> = g.values().iter().map(|v| v * factor).collect();
    let sample = heun_integrate(&x_t, grid, Direction::NoiseToSample, scheduler, score)?;
    Tensor::new(g.shape().to_vec(), sample)
}

/// Sample to unit-scale noise.
pub fn invert(
    x: &Tensor,
    grid: &TimeGrid,
    scheduler: &dyn Scheduler,
    score: &dyn ScoreField,
) -> Result<NoiseVector> {
    check_dim(x.len(), score)?;
    let t_max = scheduler.t_max();
    let factor = scheduler.scale(t_max) * scheduler.sigma(t_max);
    let x_t = heun_integrate(x.data(), grid, Direction::SampleToNoise, scheduler, score)?;
    NoiseVector::new(x_t.into_iter().map(|v| v / factor).collect(), x.shape().to_vec(), 1.0)
}

/// Clamps to `[lo, hi]` and snaps to the nearest of `levels` evenly spaced values.
pub fn quantize(x: &[f64], levels: u32, range: (f64, f64)) -> Result<Vec<f64>> {
    let (lo, hi) = range;
    if levels < 2 {
        return Err(Error::Argument(format!("need at least 2 levels, got {levels}")));
    }
    if !(lo < hi) {
        return Err(Error::Argument(format!("empty quantization range ({lo}, {hi})")));
    }
    let step = (hi - lo) / (levels - 1) as f64;
    Ok(x.iter()
        .map(|&v| {
            let idx = ((v.clamp(lo, hi) - lo) / step).round();
            (lo + idx * step).min(hi)
        })
        .collect())
}

/// Exact state at time `t` of the VE trajectory through a single isotropic
/// Gaussian `N(mean, base_std² I)`, given its state at `t_start`.
pub fn single_gaussian_state(x_start: f64, t_start: f64, t: f64, mean: f64, base_std: f64) -> f64 {
    let v0 = base_std * base_std;
    mean + (x_start - mean) * ((v0 + t * t) / (v0 + t_start * t_start)).sqrt()
}
