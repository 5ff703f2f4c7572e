//! Normality testing, moments, discrete KL divergence and histograms.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::normal::cdf;

/// Significance level of the normality test.
pub const ALPHA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsReport {
    pub n: usize,
    pub statistic: f64,
    pub p_value: f64,
    pub accept_h0: bool,
}

/// One-sample Kolmogorov-Smirnov distance to N(0, 1). `sorted` must be ascending.
pub fn ks_statistic(sorted: &[f64]) -> Result<f64> {
    if sorted.is_empty() {
        return Err(Error::Argument("K-S statistic of an empty sample".into()));
    }
    if sorted.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("K-S sample contains non-finite values".into()));
    }
    if sorted.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Argument("K-S sample is not sorted".into()));
    }
    let n = sorted.len() as f64;
    let d = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max);
    Ok(d)
}

/// Asymptotic Kolmogorov tail probability with Stephens' finite-n scaling.
pub fn ks_p_value(statistic: f64, n: usize) -> f64 {
    if n == 0 || statistic <= 0.0 {
        return 1.0;
    }
    let sqrt_n = (n as f64).sqrt();
    let lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * statistic;
    kolmogorov_tail(lambda).clamp(0.0, 1.0)
}

/// Q(λ) = 2 Σ (-1)^(j-1) exp(-2 j² λ²).
///
/// Below λ = 1.18 the alternating series converges slowly, so the equivalent
/// theta-function form 1 - √(2π)/λ Σ exp(-(2j-1)² π² / (8λ²)) is summed instead.
pub fn kolmogorov_tail(lambda: f64) -> f64 {
    const TERM_FLOOR: f64 = 1e-12;
    if lambda <= 0.0 {
        return 1.0;
    }
    if lambda < 1.18 {
        let k = -std::f64::consts::PI.powi(2) / (8.0 * lambda * lambda);
        let mut sum = 0.0;
        for j in 1..=100 {
            let odd = (2 * j - 1) as f64;
            let term = (k * odd * odd).exp();
            sum += term;
            if term < TERM_FLOOR {
                break;
            }
        }
        1.0 - (2.0 * std::f64::consts::PI).sqrt() / lambda * sum
    } else {
        let mut sum = 0.0;
        let mut sign = 1.0;
        for j in 1..=100 {
            let jf = j as f64;
            let term = (-2.0 * jf * jf * lambda * lambda).exp();
            sum += sign * term;
            if term < TERM_FLOOR {
                break;
            }
            sign = -sign;
        }
        2.0 * sum
    }
}

/// Sorts a copy of `sample` and runs the test at [`ALPHA`].
pub fn ks_test(sample: &[f64]) -> Result<KsReport> {
    let mut sorted = sample.to_vec();
    sorted.sort_by(f64::total_cmp);
    let statistic = ks_statistic(&sorted)?;
    let p_value = ks_p_value(statistic, sorted.len());
    Ok(KsReport {
        n: sorted.len(),
        statistic,
        p_value,
        accept_h0: p_value >= ALPHA,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchReport {
    pub trials: Vec<KsReport>,
}

impl BatchReport {
    /// Fraction of trials that accept H0.
    pub fn acceptance_ratio(&self) -> f64 {
        let accepted = self.trials.iter().filter(|t| t.accept_h0).count();
        accepted as f64 / self.trials.len().max(1) as f64
    }
}

/// Runs `trials` independent normality tests. `generate(i)` must depend only on `i`.
pub fn normality_batch<F>(trials: usize, generate: F) -> Result<BatchReport>
where
    F: Fn(usize) -> Result<Vec<f64>> + Sync + Send,
{
    if trials == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    let reports = crate::par::map_range(trials, |i| generate(i).and_then(|s| ks_test(&s)));
    Ok(BatchReport {
        trials: reports.into_iter().collect::<Result<_>>()?,
    })
}

fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 64 {
        values.iter().sum()
    } else {
        let (a, b) = values.split_at(values.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

/// Mean and unbiased variance, two passes.
pub fn sample_moments(values: &[f64]) -> Result<(f64, f64)> {
    if values.len() < 2 {
        return Err(Error::Argument(format!(
            "variance needs at least 2 values, got {}",
            values.len()
        )));
    }
    let n = values.len() as f64;
    let mean = pairwise_sum(values) / n;
    let centered: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    Ok((mean, pairwise_sum(&centered) / (n - 1.0)))
}

/// A probability vector over a finite outcome set.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution(Vec<f64>);

impl DiscreteDistribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.is_empty() {
            return Err(Error::Argument("empty distribution".into()));
        }
        if probabilities.iter().any(|&p| !(p >= 0.0 && p.is_finite())) {
            return Err(Error::Argument("probabilities must be finite and >= 0".into()));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Argument(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Self(probabilities))
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pushes the distribution through the bijection `outcome i -> perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if perm.len() != self.len() || perm.iter().any(|&j| j >= seen.len() || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::Argument("not a permutation of the outcome set".into()));
        }
        let mut out = vec![0.0; self.len()];
        for (i, &j) in perm.iter().enumerate() {
            out[j] = self.0[i];
        }
        Ok(Self(out))
    }
}

/// KL(p || q) in nats; `f64::INFINITY` when p is not absolutely continuous w.r.t. q.
pub fn discrete_kl(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::Argument(format!(
            "outcome sets differ in size: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    let mut total = 0.0;
    for (&pi, &qi) in p.probabilities().iter().zip(q.probabilities()) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Ok(f64::INFINITY);
        }
        total += pi * (pi / qi).ln();
    }
    Ok(total.max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramRow {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    pub density: f64,
}

/// Equal-width histogram over `[lo, hi]`; values outside the range are dropped.
pub fn histogram(values: &[f64], bins: usize, range: (f64, f64)) -> Result<Vec<HistogramRow>> {
    let (lo, hi) = range;
    if bins == 0 {
        return Err(Error::Argument("histogram needs at least one bin".into()));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Argument(format!("bad histogram range ({lo}, {hi})")));
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0u64; bins];
    for &v in values {
        if v >= lo && v <= hi {
            let idx = (((v - lo) / width) as usize).min(bins - 1);
            counts[idx] += 1;
        }
    }
    let inside: u64 = counts.iter().sum();
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| HistogramRow {
            lo: lo + i as f64 * width,
            hi: if i + 1 == bins { hi } else { lo + (i + 1) as f64 * width },
            count,
            density: if inside == 0 { 0.0 } else { count as f64 / (inside as f64 * width) },
        })
        .collect())
}

pub fn histogram_csv(rows: &[HistogramRow]) -> String {
    let mut out = String::from("bin_lo,bin_hi,count,density\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.lo, r.hi, r.count, r.density);
    }
    out
}
