//! Analytic score fields ∇ₓ log p(x; σ).

use crate::error::{Error, Result};

pub trait ScoreField: Sync {
    /// Required input dimension, or `None` if any dimension works.
    fn dim(&self) -> Option<usize>;

    fn score_into(&self, x: &[f64], sigma: f64, out: &mut [f64]);

    fn score(&self, x: &[f64], sigma: f64) -> Vec<f64> {
        let mut out = vec![0.0; x.len()];
        self.score_into(x, sigma, &mut out);
        out
    }

    /// `(mean, base std)` when the field is a single isotropic Gaussian, whose
    /// ODE trajectories have a closed form.
    fn single_gaussian(&self) -> Option<(&[f64], f64)> {
        None
    }

    /// True when the score vanishes everywhere.
    fn is_zero(&self) -> bool {
        false
    }
}

/// The score of a flat (improper) density: identically zero.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZeroScore;

impl ScoreField for ZeroScore {
    fn dim(&self) -> Option<usize> {
        None
    }

    fn score_into(&self, _x: &[f64], _sigma: f64, out: &mut [f64]) {
        out.fill(0.0);
    }

    fn is_zero(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureComponent {
    pub weight: f64,
    pub mean: Vec<f64>,
    pub base_std: f64,
}

/// Isotropic Gaussian mixture; noising at level σ adds σ² to each variance.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianMixture {
    components: Vec<MixtureComponent>,
    dim: usize,
}

impl GaussianMixture {
    pub fn new(components: Vec<MixtureComponent>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Argument("mixture needs at least one component".into()))?;
        let dim = first.mean.len();
        if dim == 0 {
            return Err(Error::Argument("mixture dimension must be >= 1".into()));
        }
        let mut total = 0.0;
        for (j, c) in components.iter().enumerate() {
            if c.mean.len() != dim {
                return Err(Error::Argument(format!("component {j} has dimension {}", c.mean.len())));
            }
            if !(c.weight > 0.0) || !(c.base_std > 0.0) || c.mean.iter().any(|v| !v.is_finite()) {
                return Err(Error::Argument(format!("component {j} has invalid weight, std or mean")));
            }
            total += c.weight;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Argument(format!("mixture weights sum to {total}")));
        }
        Ok(Self { components, dim })
    }

    /// One component with mean `mean * 1` and base std `base_std` in `dim` dimensions.
    pub fn single(dim: usize, mean: f64, base_std: f64) -> Result<Self> {
        Self::new(vec![MixtureComponent { weight: 1.0, mean: vec![mean; dim], base_std }])
    }

    pub fn components(&self) -> &[MixtureComponent] {
        &self.components
    }

    /// log p_σ(x), stabilized with log-sum-exp.
    pub fn log_density(&self, x: &[f64], sigma: f64) -> f64 {
        let logs: Vec<f64> = self.components.iter().map(|c| self.log_joint(c, x, sigma)).collect();
        let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        top + logs.iter().map(|l| (l - top).exp()).sum::<f64>().ln()
    }

    fn log_joint(&self, c: &MixtureComponent, x: &[f64], sigma: f64) -> f64 {
        let var = c.base_std * c.base_std + sigma * sigma;
        let dist2: f64 = x.iter().zip(&c.mean).map(|(a, b)| (a - b) * (a - b)).sum();
        c.weight.ln() - 0.5 * self.dim as f64 * (2.0 * std::f64::consts::PI * var).ln() - 0.5 * dist2 / var
    }
}

impl ScoreField for GaussianMixture {
    fn dim(&self) -> Option<usize> {
        Some(self.dim)
    }

    fn score_into(&self, x: &[f64], sigma: f64, out: &mut [f64]) {
        out.fill(0.0);
        if let [only] = self.components.as_slice() {
            let var = only.base_std * only.base_std + sigma * sigma;
            for ((o, xi), mi) in out.iter_mut().zip(x).zip(&only.mean) {
                *o = (mi - xi) / var;
            }
            return;
        }
        let logs: Vec<f64> = self.components.iter().map(|c| self.log_joint(c, x, sigma)).collect();
        let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = logs.iter().map(|l| (l - top).exp()).collect();
        let norm: f64 = weights.iter().sum();
        for (c, w) in self.components.iter().zip(&weights) {
            let resp = w / norm;
            if resp == 0.0 {
                continue;
            }
            let var = c.base_std * c.base_std + sigma * sigma;
            for ((o, xi), mi) in out.iter_mut().zip(x).zip(&c.mean) {
                *o += resp * (mi - xi) / var;
            }
        }
    }

    fn single_gaussian(&self) -> Option<(&[f64], f64)> {
        match self.components.as_slice() {
            [only] => Some((&only.mean, only.base_std)),
            _ => None,
        }
    }
}

/// ∇ₓ log p_σ(x) for a mixture.
pub fn mixture_score(mixture: &GaussianMixture, x: &[f64], sigma: f64) -> Result<Vec<f64>> {
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!("sigma must be > 0, got {sigma}")));
    }
    if x.len() != mixture.dim {
        return Err(Error::Argument(format!("point has dimension {}, field {}", x.len(), mixture.dim)));
    }
    Ok(mixture.score(x, sigma))
}
