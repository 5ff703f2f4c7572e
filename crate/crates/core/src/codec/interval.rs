//! Symmetric interval partition of (0, 1) and the no-sampling geometry.
//!
//! Mode I splits (0, 1) into `2^l` cells, one per symbol. Mode II splits it
//! into `2^(l+1)` cells; symbol `m` owns cell `m` on the left half and its
//! mirror image on the right half. A cell edge is a quantile (a point whose
//! crossing changes the decoded symbol) unless it is 0, 1, or, in mode II,
//! 1/2. Only quantile edges receive no-sampling clearance.

use crate::error::{Error, Result};
use crate::normal::{cdf, ppf};

use super::{Mode, Side};

/// Number of cells the unit interval is split into.
pub fn cell_count(mode: Mode, l: u32) -> u32 {
    match mode {
        Mode::I => 1 << l,
        Mode::II => 1 << (l + 1),
    }
}

/// The literal mapping of a uniform draw `r` into the cell of symbol `m`.
pub fn encode_uniform(m: u32, r: f64, side: Side, mode: Mode, l: u32) -> f64 {
    match mode {
        Mode::I => (r + m as f64) / (1u64 << l) as f64,
        Mode::II => {
            let cells = (1u64 << (l + 1)) as f64;
            match side {
                Side::Left => (r + m as f64) / cells,
                Side::Right => r / cells + 1.0 - (m as f64 + 1.0) / cells,
            }
        }
    }
}

/// Symbol owning `u`. Total: endpoints clamp into the last symbol.
pub fn decode_uniform(u: f64, mode: Mode, l: u32) -> u32 {
    let top = (1u32 << l) - 1;
    let idx = match mode {
        Mode::I => (u * (1u64 << l) as f64).floor(),
        Mode::II => {
            let cells = (1u64 << (l + 1)) as f64;
            if u > 0.5 {
                ((1.0 - u) * cells).floor()
            } else {
                (u * cells).floor()
            }
        }
    };
    if idx.is_nan() || idx < 0.0 {
        0
    } else {
        (idx as u64).min(top as u64) as u32
    }
}

/// Which interval edge each correction constant trims.
///
/// `Literal` transcribes the interval formulas directly: `c1` moves the edge
/// farther from u = 1/2 and `c2` the edge nearer to it. `Caption` swaps them
/// so that growing `c1` widens the spread of u (raising the variance) and
/// growing `c2` narrows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionReading {
    Literal,
    Caption,
}

impl CorrectionReading {
    pub fn name(self) -> &'static str {
        match self {
            CorrectionReading::Literal => "literal",
            CorrectionReading::Caption => "caption",
        }
    }
}

/// Per-symbol clearances for a given `(mode, l, delta_g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalGeometry {
    mode: Mode,
    l: u32,
    delta_g: f64,
    /// Clearance below each symbol's upper edge.
    h_upper: Vec<f64>,
    /// Clearance above each symbol's lower edge.
    h_lower: Vec<f64>,
}

impl IntervalGeometry {
    pub fn new(mode: Mode, l: u32, delta_g: f64) -> Result<Self> {
        if !(delta_g >= 0.0 && delta_g.is_finite()) {
            return Err(Error::Argument(format!("delta_g {delta_g} must be finite and >= 0")));
        }
        let symbols = 1u32 << l;
        let mut h_upper = Vec::with_capacity(symbols as usize);
        let mut h_lower = Vec::with_capacity(symbols as usize);
        for m in 0..symbols {
            let (h1, h2) = offsets(m, mode, l, delta_g);
            h_upper.push(h1);
            h_lower.push(h2);
        }
        let geometry = Self { mode, l, delta_g, h_upper, h_lower };
        for m in 0..symbols {
            geometry.check_width(m, 0.0, 0.0)?;
        }
        Ok(geometry)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.l
    }

    pub fn delta_g(&self) -> f64 {
        self.delta_g
    }

    /// `(h1, h2)`: clearance below the upper edge and above the lower edge.
    pub fn offsets(&self, m: u32) -> (f64, f64) {
        (self.h_upper[m as usize], self.h_lower[m as usize])
    }

    pub fn cell_width(&self) -> f64 {
        1.0 / cell_count(self.mode, self.l) as f64
    }

    /// Interior quantiles: `i/2^l` for mode I, `i/2^(l+1)` with `i != 2^l` for mode II.
    pub fn quantiles(&self) -> Vec<f64> {
        quantile_set(self.mode, self.l)
    }

    /// Width left for sampling once clearance and corrections are removed.
    pub fn sampling_width(&self, m: u32, c1: f64, c2: f64) -> f64 {
        let (h1, h2) = self.offsets(m);
        self.cell_width() - h1 - h2 - c1 - c2
    }

    fn check_width(&self, m: u32, c1: f64, c2: f64) -> Result<f64> {
        let width = self.sampling_width(m, c1, c2);
        if width > 0.0 {
            Ok(width)
        } else {
            Err(Error::InfeasibleGeometry { symbol: m, width })
        }
    }

    /// Smallest sampling width over all symbols.
    pub fn min_width(&self, c1: f64, c2: f64) -> f64 {
        (0..1u32 << self.l)
            .map(|m| self.sampling_width(m, c1, c2))
            .fold(f64::INFINITY, f64::min)
    }

    /// Errors with the first symbol whose interval vanishes at `(c1, c2)`.
    pub fn check_feasible(&self, c1: f64, c2: f64) -> Result<()> {
        for m in 0..1u32 << self.l {
            self.check_width(m, c1, c2)?;
        }
        Ok(())
    }

    /// The u-interval actually sampled for symbol `m` on `side`.
    pub fn sampling_interval(
        &self,
        m: u32,
        side: Side,
        c1: f64,
        c2: f64,
        reading: CorrectionReading,
    ) -> Result<(f64, f64)> {
        let width = self.check_width(m, c1, c2)?;
        let (_, h2) = self.offsets(m);
        let cells = cell_count(self.mode, self.l);
        let base_lo = m as f64 / cells as f64;
        let outer_is_lower = match self.mode {
            Mode::I => 2 * m < cells,
            Mode::II => true,
        };
        let (outer, inner) = match reading {
            CorrectionReading::Literal => (c1, c2),
            CorrectionReading::Caption => (c2, c1),
        };
        let trim_lo = if outer_is_lower { outer } else { inner };
        let lo = base_lo + h2 + trim_lo;
        let hi = lo + width;
        Ok(match (self.mode, side) {
            (Mode::II, Side::Right) => (1.0 - hi, 1.0 - lo),
            _ => (lo, hi),
        })
    }
}

/// Interior quantile set for a partition mode.
pub fn quantile_set(mode: Mode, l: u32) -> Vec<f64> {
    let cells = cell_count(mode, l);
    (1..cells)
        .filter(|&i| mode == Mode::I || i != 1 << l)
        .map(|i| i as f64 / cells as f64)
        .collect()
}

fn offsets(m: u32, mode: Mode, l: u32, delta_g: f64) -> (f64, f64) {
    if delta_g == 0.0 {
        return (0.0, 0.0);
    }
    let cells = cell_count(mode, l) as f64;
    let lower = m as f64 / cells;
    let upper = (m as f64 + 1.0) / cells;
    // Mode I upper edges reach 1 at the last symbol; mode II left cells reach 1/2.
    let upper_is_quantile = m + 1 < 1 << l;
    let lower_is_quantile = m > 0;
    let h1 = if upper_is_quantile {
        upper - cdf(ppf(upper) - delta_g)
    } else {
        0.0
    };
    let h2 = if lower_is_quantile {
        cdf(ppf(lower) + delta_g) - lower
    } else {
        0.0
    };
    (h1, h2)
}

/// `(h1, h2)` for symbol `m`, or an infeasible-geometry error.
pub fn compute_no_sampling_offsets(m: u32, mode: Mode, l: u32, delta_g: f64) -> Result<(f64, f64)> {
    if m >= 1 << l {
        return Err(Error::Argument(format!("symbol {m} needs more than {l} bits")));
    }
    if !(delta_g >= 0.0 && delta_g.is_finite()) {
        return Err(Error::Argument(format!("delta_g {delta_g} must be finite and >= 0")));
    }
    let (h1, h2) = offsets(m, mode, l, delta_g);
    let width = 1.0 / cell_count(mode, l) as f64 - h1 - h2;
    if width > 0.0 {
        Ok((h1, h2))
    } else {
        Err(Error::InfeasibleGeometry { symbol: m, width })
    }
}
