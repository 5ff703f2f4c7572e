//! Standard-normal CDF, PPF and density.
//!
//! The CDF goes through `erfc`, so both tails keep relative accuracy. The
//! PPF starts from Acklam's rational approximation (central and tail
//! branches, relative error ~1e-9) and applies one Halley step against the
//! CDF, which brings it to round-off. The PPF is only ever evaluated on the
//! lower half and reflected, so `ppf(1 - u) == -ppf(u)` holds bit-exactly
//! whenever `1 - u` is representable.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// A probability strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitProbability(f64);

impl UnitProbability {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!(
                "probability {value} outside the open interval (0, 1)"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// A finite real-valued standard-normal deviate.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct StandardNormalDeviate(f64);

impl StandardNormalDeviate {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!("deviate {value} is not finite")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Φ(x), the standard-normal CDF. May return exactly 0 or 1 far in the tails.
pub fn std_normal_cdf(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("cdf of NaN".into()));
    }
    Ok(cdf(x))
}

/// Φ⁻¹(u), the standard-normal percent point function.
pub fn std_normal_ppf(u: UnitProbability) -> StandardNormalDeviate {
    StandardNormalDeviate(ppf(u.get()))
}

/// The standard-normal density.
pub fn std_normal_pdf(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("pdf of NaN".into()));
    }
    Ok(pdf(x))
}

/// Unchecked Φ(x) for hot loops. NaN propagates.
#[inline]
pub fn cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Unchecked density for hot loops.
#[inline]
pub fn pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Unchecked Φ⁻¹(u); the caller guarantees 0 < u < 1.
#[inline]
pub fn ppf(u: f64) -> f64 {
    debug_assert!(u > 0.0 && u < 1.0, "ppf argument {u} outside (0, 1)");
    if u > 0.5 {
        -lower_ppf(1.0 - u)
    } else {
        lower_ppf(u)
    }
}

// Acklam's coefficients.
const A: [f64; 6] = [
    -3.969_683_028_665_376e1,
    2.209_460_984_245_205e2,
    -2.759_285_104_469_687e2,
    1.383_577_518_672_69e2,
    -3.066_479_806_614_716e1,
    2.506_628_277_459_239,
];
const B: [f64; 5] = [
    -5.447_609_879_822_406e1,
    1.615_858_368_580_409e2,
    -1.556_989_798_598_866e2,
    6.680_131_188_771_972e1,
    -1.328_068_155_288_572e1,
];
const C: [f64; 6] = [
    -7.784_894_002_430_293e-3,
    -3.223_964_580_411_365e-1,
    -2.400_758_277_161_838,
    -2.549_732_539_343_734,
    4.374_664_141_464_968,
    2.938_163_982_698_783,
];
const D: [f64; 4] = [
    7.784_695_709_041_462e-3,
    3.224_671_290_700_398e-1,
    2.445_134_137_142_996,
    3.754_408_661_907_416,
];
const TAIL_SPLIT: f64 = 0.02425;

/// PPF on (0, 0.5]; result is <= 0.
fn lower_ppf(u: f64) -> f64 {
    if u == 0.5 {
        return 0.0;
    }
    let x = if u < TAIL_SPLIT {
        let q = (-2.0 * u.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = u - 0.5;
        let r = q * q;
        q * (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5])
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    };
    // Halley correction.
    let err = cdf(x) - u;
    let t = err * (2.0 * PI).sqrt() * (0.5 * x * x).exp();
    let refined = x - t / (1.0 + 0.5 * x * t);
    if refined.is_finite() {
        refined.min(0.0)
    } else {
        x
    }
}
