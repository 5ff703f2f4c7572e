//! `key = value` run configuration.
//!
//! ```text
//! # comments and blank lines are ignored
//! mode = II
//! l = 2
//! delta_g = 0.02
//! delta_c = 1/3072
//! shape = 3x32x32
//! field = mixture:0.5:-1:0.5,0.5:1:0.5
//! ```
//!
//! Score fields: `zero`, `gaussian:MEAN:STD`, or `mixture:` followed by
//! comma-separated `WEIGHT:MEAN:STD` triples. Means are scalars broadcast to
//! every coordinate.

use std::fmt;
use std::str::FromStr;

use crate::codec::{CodecConfig, Key, Mode};
use crate::error::{Error, Result};
use crate::ode::{build_time_grid, GaussianMixture, LinearSigma, MixtureComponent, ScoreField, TimeGrid, ZeroScore};

#[derive(Debug, Clone, PartialEq)]
pub enum FieldSpec {
    Zero,
    /// `(weight, mean, base_std)` per component.
    Mixture(Vec<(f64, f64, f64)>),
}

impl FieldSpec {
    pub fn build(&self, dim: usize) -> Result<Box<dyn ScoreField>> {
        Ok(match self {
            FieldSpec::Zero => Box::new(ZeroScore),
            FieldSpec::Mixture(parts) => Box::new(GaussianMixture::new(
                parts
                    .iter()
                    .map(|&(weight, mean, base_std)| MixtureComponent {
                        weight,
                        mean: vec![mean; dim],
                        base_std,
                    })
                    .collect(),
            )?),
        })
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad field spec {s:?}"));
        let num = |v: &str| v.trim().parse::<f64>().map_err(|_| bad());
        let s = s.trim();
        if s == "zero" {
            return Ok(FieldSpec::Zero);
        }
        if let Some(rest) = s.strip_prefix("gaussian:") {
            let (mean, std) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(FieldSpec::Mixture(vec![(1.0, num(mean)?, num(std)?)]));
        }
        if let Some(rest) = s.strip_prefix("mixture:") {
            let parts = rest
                .split(',')
                .map(|triple| {
                    let v: Vec<&str> = triple.split(':').collect();
                    match v.as_slice() {
                        [w, m, sd] => Ok((num(w)?, num(m)?, num(sd)?)),
                        _ => Err(bad()),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(FieldSpec::Mixture(parts));
        }
        Err(bad())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Zero => write!(f, "zero"),
            FieldSpec::Mixture(parts) => {
                write!(f, "mixture:")?;
                for (i, (w, m, s)) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{w}:{m}:{s}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub bits_per_symbol: u32,
    pub delta_g: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub correction_step: f64,
    pub shape: Vec<usize>,
    pub field: FieldSpec,
    pub steps: usize,
    pub t_max: f64,
    pub epsilon: f64,
    pub rho: f64,
    /// 0 disables quantization of the stego tensor.
    pub quantize_levels: u32,
    pub quantize_lo: f64,
    pub quantize_hi: f64,
    pub master_seed: u64,
    pub nonce: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::I,
            bits_per_symbol: 1,
            delta_g: 0.02,
            tolerance: 0.0185,
            max_iterations: 100,
            correction_step: 1.0 / 3072.0,
            shape: vec![3, 32, 32],
            field: FieldSpec::Mixture(vec![(1.0, 0.0, 1.0)]),
            steps: 40,
            t_max: 80.0,
            epsilon: 1e-6,
            rho: 7.0,
            quantize_levels: 0,
            quantize_lo: -1.0,
            quantize_hi: 1.0,
            master_seed: 0,
            nonce: 0,
        }
    }
}

pub const KEYS: &[&str] = &[
    "mode",
    "l",
    "delta_g",
    "e",
    "n_max",
    "delta_c",
    "shape",
    "field",
    "steps",
    "t_max",
    "epsilon",
    "rho",
    "quantize_levels",
    "quantize_lo",
    "quantize_hi",
    "master_seed",
    "nonce",
];

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {value:?}")))
}

fn parse_real(key: &str, value: &str) -> Result<f64> {
    match value.split_once('/') {
        Some((a, b)) => Ok(parse::<f64>(key, a.trim())? / parse::<f64>(key, b.trim())?),
        None => parse(key, value),
    }
}

impl RunConfig {
    /// Parses and validates a config file body, starting from the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "mode" => {
                self.mode = match value {
                    "I" | "i" | "1" => Mode::I,
                    "II" | "ii" | "2" => Mode::II,
                    _ => return Err(Error::Config(format!("mode: expected I or II, got {value:?}"))),
                }
            }
            "l" => self.bits_per_symbol = parse(key, value)?,
            "delta_g" => self.delta_g = parse_real(key, value)?,
            "e" => self.tolerance = parse_real(key, value)?,
            "n_max" => self.max_iterations = parse(key, value)?,
            "delta_c" => self.correction_step = parse_real(key, value)?,
            "shape" => {
                self.shape = value
                    .split(['x', 'X', ','])
                    .map(|d| parse::<usize>(key, d.trim()))
                    .collect::<Result<_>>()?
            }
            "field" => self.field = value.parse()?,
            "steps" => self.steps = parse(key, value)?,
            "t_max" | "T" => self.t_max = parse_real(key, value)?,
            "epsilon" => self.epsilon = parse_real(key, value)?,
            "rho" => self.rho = parse_real(key, value)?,
            "quantize_levels" => self.quantize_levels = parse(key, value)?,
            "quantize_lo" => self.quantize_lo = parse_real(key, value)?,
            "quantize_hi" => self.quantize_hi = parse_real(key, value)?,
            "master_seed" => self.master_seed = parse(key, value)?,
            "nonce" => self.nonce = parse(key, value)?,
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let cfg_err = |e: Error| Error::Config(e.to_string());
        if self.shape.is_empty() || self.shape.contains(&0) {
            return Err(Error::Config(format!("shape {:?} has an empty dimension", self.shape)));
        }
        self.codec(Key::from_bytes([0; 32])).geometry().map_err(|e| match e {
            Error::InfeasibleGeometry { .. } => e,
            other => cfg_err(other),
        })?;
        self.scheduler().map_err(cfg_err)?;
        self.grid().map_err(cfg_err)?;
        self.field.build(self.elements()).map_err(cfg_err)?;
        if self.quantize_levels == 1 || (self.quantize_levels > 1 && !(self.quantize_lo < self.quantize_hi)) {
            return Err(Error::Config("quantization needs levels >= 2 and lo < hi".into()));
        }
        Ok(())
    }

    pub fn elements(&self) -> usize {
        self.shape.iter().product()
    }

    /// Pixel count `h * w`: the two trailing dimensions.
    pub fn pixels(&self) -> usize {
        self.shape.iter().rev().take(2).product()
    }

    pub fn capacity_bits(&self) -> usize {
        self.elements() * self.bits_per_symbol as usize
    }

    pub fn codec(&self, key: Key) -> CodecConfig {
        CodecConfig {
            mode: self.mode,
            bits_per_symbol: self.bits_per_symbol,
            delta_g: self.delta_g,
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
            correction_step: self.correction_step,
            key,
            master_seed: self.master_seed,
        }
    }

    pub fn scheduler(&self) -> Result<LinearSigma> {
        LinearSigma::new(self.t_max, self.epsilon)
    }

    pub fn grid(&self) -> Result<TimeGrid> {
        build_time_grid(self.steps, &self.scheduler()?, self.rho)
    }

    pub fn quantization(&self) -> Option<(u32, (f64, f64))> {
        (self.quantize_levels >= 2).then_some((self.quantize_levels, (self.quantize_lo, self.quantize_hi)))
    }
}
