//! Message to Gaussian-noise codec.
//!
//! Encoding maps each symbol to a uniform draw inside its cell of a
//! symmetric partition of (0, 1) and pushes it through the normal PPF.
//! Decoding pushes the noise back through the CDF and reads off the cell.

pub mod bits;
pub mod cipher;
pub mod draws;
pub mod interval;
pub mod variance;

use std::fmt;

use crate::error::{Error, Result};
use crate::normal::{cdf, ppf};

pub use bits::{bits_to_bytes, bytes_to_bits, pack_bits, unpack_symbols};
pub use cipher::{apply_keystream, decrypt_and_unpad, pad_and_encrypt, unframe, HEADER_BITS};
pub use interval::{
    compute_no_sampling_offsets, decode_uniform, encode_uniform, quantile_set, CorrectionReading, IntervalGeometry,
};
pub use variance::{encode, encode_variance_preserving, CorrectionReport};

pub const MAX_BITS_PER_SYMBOL: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    I,
    II,
}

/// Which mirror cell a mode-II symbol is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// 256-bit shared secret.
#[derive(Clone, PartialEq, Eq)]
pub struct Key([u8; 32]);

impl Key {
    pub fn from_bytes(bytes: [u8; 32]) -> Self {
        Self(bytes)
    }

    /// Accepts 32 raw bytes or 64 hex characters (surrounding whitespace ignored).
    pub fn from_file_contents(contents: &[u8]) -> Result<Self> {
        if contents.len() == 32 {
            let mut bytes = [0u8; 32];
            bytes.copy_from_slice(contents);
            return Ok(Self(bytes));
        }
        let text = std::str::from_utf8(contents)
            .map_err(|_| Error::Argument("key file is neither 32 raw bytes nor hex".into()))?
            .trim();
        let decoded = hex::decode(text).map_err(|e| Error::Argument(format!("bad hex key: {e}")))?;
        let bytes: [u8; 32] = decoded
            .try_into()
            .map_err(|v: Vec<u8>| Error::Argument(format!("hex key has {} bytes, want 32", v.len())))?;
        Ok(Self(bytes))
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Key(..)")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CodecConfig {
    pub mode: Mode,
    /// Bits carried by each noise element (`l`).
    pub bits_per_symbol: u32,
    /// No-sampling clearance measured in noise space.
    pub delta_g: f64,
    /// Accepted deviation of the sample variance from 1 (`e`).
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Increment of the correction constants per iteration (`Δc`).
    pub correction_step: f64,
    pub key: Key,
    pub master_seed: u64,
}

impl CodecConfig {
    pub fn new(mode: Mode, bits_per_symbol: u32, delta_g: f64, key: Key) -> Self {
        Self {
            mode,
            bits_per_symbol,
            delta_g,
            tolerance: 0.0185,
            max_iterations: 100,
            correction_step: 1.0 / 3072.0,
            key,
            master_seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bits_per_symbol == 0 || self.bits_per_symbol > MAX_BITS_PER_SYMBOL {
            return Err(Error::Argument(format!(
                "bits per symbol must be in 1..={MAX_BITS_PER_SYMBOL}, got {}",
                self.bits_per_symbol
            )));
        }
        if !(self.delta_g >= 0.0 && self.delta_g.is_finite()) {
            return Err(Error::Argument(format!("delta_g must be >= 0, got {}", self.delta_g)));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Argument(format!("tolerance e must be > 0, got {}", self.tolerance)));
        }
        if !(self.correction_step > 0.0 && self.correction_step.is_finite()) {
            return Err(Error::Argument(format!(
                "correction step must be > 0, got {}",
                self.correction_step
            )));
        }
        Ok(())
    }

    pub fn geometry(&self) -> Result<IntervalGeometry> {
        self.validate()?;
        IntervalGeometry::new(self.mode, self.bits_per_symbol, self.delta_g)
    }
}

/// Symbols `m_i < 2^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolStream {
    symbols: Vec<u32>,
    bits_per_symbol: u32,
}

impl SymbolStream {
    pub fn new(symbols: Vec<u32>, bits_per_symbol: u32) -> Result<Self> {
        if bits_per_symbol == 0 || bits_per_symbol > MAX_BITS_PER_SYMBOL {
            return Err(Error::Argument(format!("bits per symbol {bits_per_symbol} out of range")));
        }
        if let Some(&bad) = symbols.iter().find(|&&m| m >= 1 << bits_per_symbol) {
            return Err(Error::Argument(format!(
                "symbol {bad} does not fit in {bits_per_symbol} bits"
            )));
        }
        Ok(Self { symbols, bits_per_symbol })
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.symbols
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.bits_per_symbol
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// Latent noise with its tensor shape and scale.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseVector {
    values: Vec<f64>,
    shape: Vec<usize>,
    sigma_t: f64,
}

impl NoiseVector {
    pub fn new(values: Vec<f64>, shape: Vec<usize>, sigma_t: f64) -> Result<Self> {
        if shape.iter().product::<usize>() != values.len() {
            return Err(Error::Argument(format!(
                "shape {shape:?} does not hold {} values",
                values.len()
            )));
        }
        if !(sigma_t > 0.0 && sigma_t.is_finite()) {
            return Err(Error::Argument(format!("sigma_T must be > 0, got {sigma_t}")));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("noise element {i} is not finite")));
        }
        Ok(Self { values, shape, sigma_t })
    }

    /// Unit-scale flat vector.
    pub fn flat(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        Self::new(values, vec![n], 1.0)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn sigma_t(&self) -> f64 {
        self.sigma_t
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn with_shape(self, shape: Vec<usize>) -> Result<Self> {
        Self::new(self.values, shape, self.sigma_t)
    }

    /// Multiplies every entry by `factor` and records the new scale.
    pub fn rescaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.values.iter().map(|v| v * factor).collect(),
            self.shape.clone(),
            self.sigma_t * factor,
        )
    }
}

/// Uncorrected encoding: every element is sampled from its full cell.
pub fn symbols_to_noise_plain(ms: &SymbolStream, cfg: &CodecConfig) -> Result<NoiseVector> {
    cfg.validate()?;
    if ms.bits_per_symbol() != cfg.bits_per_symbol {
        return Err(Error::Argument("symbol width differs from config".into()));
    }
    let l = cfg.bits_per_symbol;
    let draws = draws::element_draws(&cfg.key, cfg.master_seed, ms.len());
    let symbols = ms.as_slice();
    let values = crate::par::map_range(symbols.len(), |i| {
        let u = encode_uniform(symbols[i], draws.r[i], draws.side[i], cfg.mode, l);
        ppf(u.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0))
    });
    NoiseVector::flat(values)
}

/// Reads symbols back from (possibly perturbed) noise.
pub fn noise_to_symbols(g: &NoiseVector, cfg: &CodecConfig) -> Result<SymbolStream> {
    cfg.validate()?;
    let scale = g.sigma_t();
    let symbols = g
        .values()
        .iter()
        .map(|&v| decode_uniform(cdf(v / scale), cfg.mode, cfg.bits_per_symbol))
        .collect();
    SymbolStream::new(symbols, cfg.bits_per_symbol)
}

/// Fraction of agreeing positions.
pub fn bit_accuracy(sent: &[bool], received: &[bool]) -> Result<f64> {
    if sent.len() != received.len() {
        return Err(Error::Argument(format!(
            "length mismatch: {} vs {}",
            sent.len(),
            received.len()
        )));
    }
    if sent.is_empty() {
        return Ok(1.0);
    }
    let same = sent.iter().zip(received).filter(|(a, b)| a == b).count();
    Ok(same as f64 / sent.len() as f64)
}
