use crate::error::{Error, Result};

/// Noise level σ(t) and scale s(t) of the probability-flow ODE, with their
/// time derivatives, on the time span `[epsilon, t_max]`.
pub trait Scheduler: Sync {
    fn sigma(&self, t: f64) -> f64;
    fn sigma_dot(&self, t: f64) -> f64;
    fn scale(&self, _t: f64) -> f64 {
        1.0
    }
    fn scale_dot(&self, _t: f64) -> f64 {
        0.0
    }
    fn t_max(&self) -> f64;
    fn epsilon(&self) -> f64;
}

/// σ(t) = t, s(t) = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearSigma {
    t_max: f64,
    epsilon: f64,
}

impl LinearSigma {
    pub fn new(t_max: f64, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && t_max > epsilon && t_max.is_finite()) {
            return Err(Error::Argument(format!(
                "need 0 < epsilon < T, got epsilon={epsilon}, T={t_max}"
            )));
        }
        Ok(Self { t_max, epsilon })
    }
}

impl Default for LinearSigma {
    fn default() -> Self {
        Self { t_max: 80.0, epsilon: 1e-6 }
    }
}

impl Scheduler for LinearSigma {
    fn sigma(&self, t: f64) -> f64 {
        t
    }

    fn sigma_dot(&self, _t: f64) -> f64 {
        1.0
    }

    fn t_max(&self) -> f64 {
        self.t_max
    }

    fn epsilon(&self) -> f64 {
        self.epsilon
    }
}
