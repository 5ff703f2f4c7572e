//! Browser bindings for three operations: encoder histograms, a full
//! hide/extract round trip, and ODE trajectories of a 1-D score field.

use sha2::{Digest, Sha256};
use wasm_bindgen::prelude::*;

use pab2g::cli::{self, FieldSpec, RunConfig};
use pab2g::codec::{encode, pack_bits, CodecConfig, Key, Mode};
use pab2g::normal::ppf;
use pab2g::ode::{build_time_grid, heun_trajectory, Direction, LinearSigma, Scheduler, DEFAULT_RHO};
use pab2g::stats::{histogram, ks_test, sample_moments};

/// Histogram range shown on the page.
pub const RANGE: (f64, f64) = (-4.0, 4.0);

fn mode(mode_ii: bool) -> Mode {
    if mode_ii {
        Mode::II
    } else {
        Mode::I
    }
}

fn key_from(passphrase: &str) -> Key {
    Key::from_bytes(Sha256::digest(passphrase.as_bytes()).into())
}

#[wasm_bindgen]
#[derive(Debug, Clone, Default)]
pub struct NoiseSummary {
    densities: Vec<f64>,
    quantile_images: Vec<f64>,
    error: Option<String>,
    pub ks_statistic: f64,
    pub p_value: f64,
    pub accept: bool,
    pub mean: f64,
    pub variance: f64,
    pub iterations: usize,
}

#[wasm_bindgen]
impl NoiseSummary {
    pub fn densities(&self) -> Vec<f64> {
        self.densities.clone()
    }

    /// Noise-space positions of the quantiles, where clearance cuts gaps.
    pub fn quantile_images(&self) -> Vec<f64> {
        self.quantile_images.clone()
    }

    pub fn error(&self) -> Option<String> {
        self.error.clone()
    }
}

/// Encodes `k` random symbols and summarizes the noise.
#[wasm_bindgen]
pub fn noise_summary(mode_ii: bool, l: u32, delta_g: f64, k: usize, seed: u32, bins: usize) -> NoiseSummary {
    match try_noise_summary(mode(mode_ii), l, delta_g, k, seed as u64, bins) {
        Ok(s) => s,
        Err(e) => NoiseSummary { error: Some(e.to_string()), ..NoiseSummary::default() },
    }
}

fn try_noise_summary(mode: Mode, l: u32, delta_g: f64, k: usize, seed: u64, bins: usize) -> pab2g::Result<NoiseSummary> {
    let key = key_from(&format!("demo-{seed}"));
    let mut cfg = CodecConfig::new(mode, l, delta_g, key.clone());
    cfg.master_seed = seed;
    let message_bits = pab2g::codec::apply_keystream(&vec![false; k * l as usize], &key, seed);
    let (g, report) = encode(&pack_bits(&message_bits, l)?, &cfg)?;
    let ks = ks_test(g.values())?;
    let (mean, variance) = sample_moments(g.values())?;
    Ok(NoiseSummary {
        densities: histogram(g.values(), bins.max(1), RANGE)?.iter().map(|r| r.density).collect(),
        quantile_images: pab2g::codec::quantile_set(mode, l).into_iter().map(ppf).collect(),
        error: None,
        ks_statistic: ks.statistic,
        p_value: ks.p_value,
        accept: ks.accept_h0,
        mean,
        variance,
        iterations: report.iterations,
    })
}

#[wasm_bindgen]
#[derive(Debug, Clone, Default)]
pub struct RoundTrip {
    recovered: Option<String>,
    stego: Vec<f64>,
    error: Option<String>,
    pub bit_accuracy: f64,
    pub capacity_bytes: usize,
    pub iterations: usize,
    pub variance: f64,
}

#[wasm_bindgen]
impl RoundTrip {
    pub fn recovered(&self) -> Option<String> {
        self.recovered.clone()
    }

    /// First channel of the stego tensor, row-major.
    pub fn stego(&self) -> Vec<f64> {
        self.stego.clone()
    }

    pub fn error(&self) -> Option<String> {
        self.error.clone()
    }
}

/// Side length of the square demo tensor (3 channels).
pub const SIDE: usize = 16;

/// Hides `message`, optionally quantizes the sample, and extracts it again.
#[wasm_bindgen]
pub fn round_trip(
    message: &str,
    passphrase: &str,
    l: u32,
    delta_g: f64,
    field_std: f64,
    quantize_levels: u32,
) -> RoundTrip {
    let cfg = RunConfig {
        bits_per_symbol: l,
        delta_g,
        shape: vec![3, SIDE, SIDE],
        field: FieldSpec::Mixture(vec![(1.0, 0.0, field_std)]),
        quantize_levels,
        ..RunConfig::default()
    };
    let capacity_bytes = cfg.capacity_bits().saturating_sub(32) / 8;
    match try_round_trip(message, passphrase, &cfg) {
        Ok(r) => RoundTrip { capacity_bytes, ..r },
        Err(e) => RoundTrip { capacity_bytes, error: Some(e.to_string()), ..RoundTrip::default() },
    }
}

fn try_round_trip(message: &str, passphrase: &str, cfg: &RunConfig) -> pab2g::Result<RoundTrip> {
    cfg.validate()?;
    let key = key_from(passphrase);
    let hidden = cli::hide(message.as_bytes(), &key, cfg)?;
    let out = cli::extract(&hidden.stego, &key, cfg, Some(message.as_bytes()))?;
    let (recovered, error) = match out.message {
        Ok(bytes) => (Some(String::from_utf8_lossy(&bytes).into_owned()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(RoundTrip {
        recovered,
        stego: hidden.stego.data()[..SIDE * SIDE].to_vec(),
        error,
        bit_accuracy: out.accuracy.unwrap_or(1.0),
        capacity_bytes: 0,
        iterations: hidden.report.correction.iterations,
        variance: hidden.report.correction.variance,
    })
}

#[wasm_bindgen]
#[derive(Debug, Clone, Default)]
pub struct Trajectories {
    times: Vec<f64>,
    states: Vec<f64>,
    error: Option<String>,
    pub paths: usize,
}

#[wasm_bindgen]
impl Trajectories {
    /// Grid times from `T` down to `epsilon`.
    pub fn times(&self) -> Vec<f64> {
        self.times.clone()
    }

    /// `paths` rows of `times().len()` states each.
    pub fn states(&self) -> Vec<f64> {
        self.states.clone()
    }

    pub fn error(&self) -> Option<String> {
        self.error.clone()
    }
}

/// Integrates `paths` noise quantiles through a 1-D field given as
/// `zero`, `gaussian:MEAN:STD` or `mixture:W:MEAN:STD,...`.
#[wasm_bindgen]
pub fn trajectories(field: &str, paths: usize, steps: usize) -> Trajectories {
    match try_trajectories(field, paths, steps) {
        Ok(t) => t,
        Err(e) => Trajectories { error: Some(e.to_string()), ..Trajectories::default() },
    }
}

fn try_trajectories(field: &str, paths: usize, steps: usize) -> pab2g::Result<Trajectories> {
    let field = field.parse::<FieldSpec>()?.build(1)?;
    let sched = LinearSigma::default();
    let grid = build_time_grid(steps, &sched, DEFAULT_RHO)?;
    let sigma_t = sched.sigma(sched.t_max());
    let mut states = Vec::with_capacity(paths * (steps + 1));
    for i in 0..paths {
        let g = ppf((i as f64 + 0.5) / paths as f64);
        let path = heun_trajectory(&[sigma_t * g], &grid, Direction::NoiseToSample, &sched, field.as_ref())?;
        states.extend(path.into_iter().map(|x| x[0]));
    }
    Ok(Trajectories { times: grid.times().to_vec(), states, error: None, paths })
}
