//! Command pipelines behind the `pab2g` binary.
//!
//! Every command is a pure function of `(config, key, nonce)`; the binary only
//! adds file I/O and argument parsing.

pub mod config;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use crate::codec::{
    apply_keystream, bit_accuracy, bytes_to_bits, encode, noise_to_symbols, pack_bits,
    pad_and_encrypt, unframe, unpack_symbols, CorrectionReport, Key, NoiseVector, HEADER_BITS,
};
use crate::error::{Error, Result};
use crate::ode::{
    build_time_grid, generate, heun_trajectory, invert, quantize, single_gaussian_state, Direction, GaussianMixture,
    LinearSigma, Scheduler,
};
use crate::stats::{ks_test, KsReport};
use crate::tensor::Tensor;

pub use config::{FieldSpec, RunConfig};

#[derive(Debug, Clone)]
pub struct HideReport {
    /// Header plus message bits, before padding.
    pub used_bits: usize,
    pub capacity_bits: usize,
    pub capacity_bpp: f64,
    pub payload_bpp: f64,
    pub correction: CorrectionReport,
}

impl HideReport {
    pub fn to_csv(&self) -> String {
        let c = &self.correction;
        format!(
            "field,value\nused_bits,{}\ncapacity_bits,{}\ncapacity_bpp,{}\npayload_bpp,{}\n\
             iterations,{}\nmean,{}\nvariance,{}\nconverged,{}\nreading,{}\n",
            self.used_bits,
            self.capacity_bits,
            self.capacity_bpp,
            self.payload_bpp,
            c.iterations,
            c.mean,
            c.variance,
            c.converged,
            c.reading.name()
        )
    }
}

#[derive(Debug, Clone)]
pub struct HideOutput {
    pub noise: NoiseVector,
    pub stego: Tensor,
    pub report: HideReport,
}

/// Encrypts, maps to noise and integrates to a sample, quantizing it when configured.
pub fn hide(message: &[u8], key: &Key, cfg: &RunConfig) -> Result<HideOutput> {
    let capacity_bits = cfg.capacity_bits();
    let frame = pad_and_encrypt(message, capacity_bits, key, cfg.nonce)?;
    let (noise, correction) = encode_frame(&frame, key, cfg)?;
    let stego = render(&noise, cfg)?;
    let used_bits = HEADER_BITS + 8 * message.len();
    let pixels = cfg.pixels() as f64;
    Ok(HideOutput {
        noise,
        stego,
        report: HideReport {
            used_bits,
            capacity_bits,
            capacity_bpp: capacity_bits as f64 / pixels,
            payload_bpp: used_bits as f64 / pixels,
            correction,
        },
    })
}

fn encode_frame(frame: &[bool], key: &Key, cfg: &RunConfig) -> Result<(NoiseVector, CorrectionReport)> {
    let symbols = pack_bits(frame, cfg.bits_per_symbol)?;
    let (noise, report) = encode(&symbols, &cfg.codec(key.clone()))?;
    Ok((noise.with_shape(cfg.shape.clone())?, report))
}

fn render(noise: &NoiseVector, cfg: &RunConfig) -> Result<Tensor> {
    let field = cfg.field.build(cfg.elements())?;
    let sample = generate(noise, &cfg.grid()?, &cfg.scheduler()?, field.as_ref())?;
    match cfg.quantization() {
        Some((levels, range)) => Tensor::new(sample.shape().to_vec(), quantize(sample.data(), levels, range)?),
        None => Ok(sample),
    }
}

/// Inverts the sample and decodes the still-encrypted frame bits.
pub fn recover_frame(stego: &Tensor, cfg: &RunConfig) -> Result<Vec<bool>> {
    if stego.len() != cfg.elements() {
        return Err(Error::Argument(format!(
            "stego has {} elements, config shape {:?} needs {}",
            stego.len(),
            cfg.shape,
            cfg.elements()
        )));
    }
    let field = cfg.field.build(cfg.elements())?;
    let noise = invert(stego, &cfg.grid()?, &cfg.scheduler()?, field.as_ref())?;
    let symbols = noise_to_symbols(&noise, &cfg.codec(Key::from_bytes([0; 32])))?;
    Ok(unpack_symbols(&symbols))
}

#[derive(Debug, Clone)]
pub struct ExtractOutput {
    pub message: Result<Vec<u8>>,
    /// Agreement with the reference message over its own bit positions.
    pub accuracy: Option<f64>,
}

pub fn extract(stego: &Tensor, key: &Key, cfg: &RunConfig, reference: Option<&[u8]>) -> Result<ExtractOutput> {
    let frame = apply_keystream(&recover_frame(stego, cfg)?, key, cfg.nonce);
    let accuracy = reference
        .map(|r| {
            let want = bytes_to_bits(r);
            let end = (HEADER_BITS + want.len()).min(frame.len());
            let got = &frame[HEADER_BITS.min(end)..end];
            if got.len() < want.len() {
                return Err(Error::Capacity { needed: HEADER_BITS + want.len(), capacity: frame.len() });
            }
            bit_accuracy(&want, got)
        })
        .transpose()?;
    Ok(ExtractOutput { message: unframe(&frame), accuracy })
}

fn derive(tag: &[u8], seed: u64, trial: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(tag);
    h.update(seed.to_le_bytes());
    h.update(trial.to_le_bytes());
    h.finalize().into()
}

/// Per-trial key and full-capacity random message, both derived from
/// `(master_seed, trial)`.
pub fn trial_inputs(cfg: &RunConfig, trial: u64) -> (Key, Vec<u8>) {
    let key = Key::from_bytes(derive(b"pab2g:trial-key", cfg.master_seed, trial));
    let mut rng = ChaCha20Rng::from_seed(derive(b"pab2g:trial-message", cfg.master_seed, trial));
    let mut message = vec![0u8; cfg.capacity_bits().saturating_sub(HEADER_BITS) / 8];
    rng.fill_bytes(&mut message);
    (key, message)
}

fn trial_frame(cfg: &RunConfig, trial: u64) -> Result<(Key, Vec<bool>)> {
    let (key, message) = trial_inputs(cfg, trial);
    let frame = pad_and_encrypt(&message, cfg.capacity_bits(), &key, cfg.nonce)?;
    Ok((key, frame))
}

#[derive(Debug, Clone)]
pub struct TrialRow {
    pub trial: usize,
    pub ks: KsReport,
    pub iterations: usize,
}

#[derive(Debug, Clone)]
pub struct NormalityRun {
    pub rows: Vec<TrialRow>,
}

impl NormalityRun {
    pub fn acceptance_ratio(&self) -> f64 {
        self.rows.iter().filter(|r| r.ks.accept_h0).count() as f64 / self.rows.len() as f64
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,n,ks_statistic,p_value,accept_h0,iterations\n");
        for r in &self.rows {
            out += &format!(
                "{},{},{},{},{},{}\n",
                r.trial, r.ks.n, r.ks.statistic, r.ks.p_value, r.ks.accept_h0, r.iterations
            );
        }
        out += &format!("# acceptance_ratio,{}\n", self.acceptance_ratio());
        out
    }
}

/// K-S test of the encoder output over independent trials.
pub fn analyze_normality(cfg: &RunConfig, trials: usize) -> Result<NormalityRun> {
    if trials == 0 {
        return Err(Error::Argument("trials must be >= 1".into()));
    }
    let rows = crate::par::map_range(trials, |t| -> Result<TrialRow> {
        let (key, frame) = trial_frame(cfg, t as u64)?;
        let (noise, report) = encode_frame(&frame, &key, cfg)?;
        Ok(TrialRow { trial: t, ks: ks_test(noise.values())?, iterations: report.iterations })
    });
    Ok(NormalityRun { rows: rows.into_iter().collect::<Result<_>>()? })
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub delta_g: f64,
    /// `Err` carries the reason the row could not be run.
    pub outcome: std::result::Result<SweepPoint, String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub ks_ratio: f64,
    /// Mean agreement over the whole encrypted frame after the round trip.
    pub bit_accuracy: f64,
    pub mean_iterations: f64,
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("delta_g,ks_ratio,bit_accuracy,mean_iterations,status\n");
    for r in rows {
        match &r.outcome {
            Ok(p) => {
                out += &format!("{},{},{},{},ok\n", r.delta_g, p.ks_ratio, p.bit_accuracy, p.mean_iterations)
            }
            Err(e) => out += &format!("{},,,,\"infeasible: {}\"\n", r.delta_g, e.replace('"', "'")),
        }
    }
    out
}

/// Runs normality and round-trip accuracy for each clearance on the same trials.
pub fn sweep_tradeoff(cfg: &RunConfig, delta_gs: &[f64], trials: usize) -> Result<Vec<SweepRow>> {
    if delta_gs.is_empty() {
        return Err(Error::Argument("delta_g list is empty".into()));
    }
    if trials == 0 {
        return Err(Error::Argument("trials must be >= 1".into()));
    }
    let mut rows = Vec::with_capacity(delta_gs.len());
    for &delta_g in delta_gs {
        let point_cfg = RunConfig { delta_g, ..cfg.clone() };
        let outcome = match sweep_point(&point_cfg, trials) {
            Ok(p) => Ok(p),
            Err(e @ (Error::InfeasibleGeometry { .. } | Error::Config(_) | Error::Argument(_))) => Err(e.to_string()),
            Err(e) => return Err(e),
        };
        rows.push(SweepRow { delta_g, outcome });
    }
    Ok(rows)
}

fn sweep_point(cfg: &RunConfig, trials: usize) -> Result<SweepPoint> {
    cfg.validate()?;
    let per_trial = crate::par::map_range(trials, |t| -> Result<(bool, f64, usize)> {
        let (key, frame) = trial_frame(cfg, t as u64)?;
        let (noise, report) = encode_frame(&frame, &key, cfg)?;
        let accept = ks_test(noise.values())?.accept_h0;
        let stego = render(&noise, cfg)?;
        let received = recover_frame(&stego, cfg)?;
        Ok((accept, bit_accuracy(&frame, &received)?, report.iterations))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let n = trials as f64;
    Ok(SweepPoint {
        ks_ratio: per_trial.iter().filter(|p| p.0).count() as f64 / n,
        bit_accuracy: per_trial.iter().map(|p| p.1).sum::<f64>() / n,
        mean_iterations: per_trial.iter().map(|p| p.2 as f64).sum::<f64>() / n,
    })
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    /// `(steps, max |x - exact|)` along the trajectory.
    pub errors: Vec<(usize, f64)>,
    /// Least-squares slope of `-log error` against `log steps`.
    pub order: Option<f64>,
    pub notices: Vec<String>,
    pub pass: bool,
}

impl SelftestReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("steps,max_error\n");
        for (s, e) in &self.errors {
            out += &format!("{s},{e}\n");
        }
        match self.order {
            Some(p) => out += &format!("# order,{p}\n"),
            None => out += "# order,skipped\n",
        }
        for n in &self.notices {
            out += &format!("# {n}\n");
        }
        out += &format!("# result,{}\n", if self.pass { "pass" } else { "fail" });
        out
    }
}

pub const MIN_SELFTEST_ORDER: f64 = 1.5;

/// Step counts `{s/4, s/2, s, 2s}` (rounded up, deduplicated).
pub fn step_ladder(steps: usize) -> Vec<usize> {
    let mut ladder: Vec<usize> = [steps.div_ceil(4), steps.div_ceil(2), steps, 2 * steps]
        .into_iter()
        .filter(|&s| s > 0)
        .collect();
    ladder.dedup();
    ladder
}

/// Max trajectory error against the closed form for a one-dimensional
/// Gaussian `N(mean, base_std²)` started one `σ(T)` above the mean.
pub fn closed_form_error(steps: usize, mean: f64, base_std: f64, sched: &dyn Scheduler, rho: f64) -> Result<f64> {
    let field = GaussianMixture::single(1, mean, base_std)?;
    let grid = build_time_grid(steps, sched, rho)?;
    let t_max = sched.t_max();
    let x_t = mean + sched.sigma(t_max);
    let states = heun_trajectory(&[x_t], &grid, Direction::NoiseToSample, sched, &field)?;
    Ok(grid
        .times()
        .iter()
        .zip(&states)
        .map(|(&t, x)| (x[0] - single_gaussian_state(x_t, t_max, t, mean, base_std)).abs())
        .fold(0.0, f64::max))
}

/// Least-squares convergence order from `(steps, error)` pairs.
pub fn fitted_order(errors: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = errors
        .iter()
        .filter(|(_, e)| *e > 0.0)
        .map(|&(s, e)| ((s as f64).ln(), e.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| -sxy / sxx)
}

pub fn ode_selftest(cfg: &RunConfig) -> Result<SelftestReport> {
    let sched = LinearSigma::new(cfg.t_max, cfg.epsilon)?;
    let ladder = step_ladder(cfg.steps);
    let mut notices = Vec::new();
    let field = cfg.field.build(1)?;
    if field.is_zero() {
        let errors = ladder
            .iter()
            .map(|&s| -> Result<(usize, f64)> {
                let grid = build_time_grid(s, &sched, cfg.rho)?;
                let x = crate::ode::heun_integrate(&[1.0], &grid, Direction::NoiseToSample, &sched, field.as_ref())?;
                Ok((s, (x[0] - 1.0).abs()))
            })
            .collect::<Result<Vec<_>>>()?;
        notices.push("zero score field: trajectories are constant, order test skipped".into());
        let pass = errors.iter().all(|e| e.1 == 0.0);
        return Ok(SelftestReport { errors, order: None, notices, pass });
    }
    let (mean, base_std) = match field.single_gaussian() {
        Some((m, s)) => (m[0], s),
        None => {
            notices.push("field has no closed form; using N(0, 1) for the study".into());
            (0.0, 1.0)
        }
    };
    let errors = ladder
        .iter()
        .map(|&s| Ok((s, closed_form_error(s, mean, base_std, &sched, cfg.rho)?)))
        .collect::<Result<Vec<_>>>()?;
    let order = fitted_order(&errors);
    let pass = match order {
        Some(p) => p >= MIN_SELFTEST_ORDER,
        None => {
            notices.push("fewer than two distinct step counts with nonzero error; order undefined".into());
            false
        }
    };
    Ok(SelftestReport { errors, order, notices, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig { shape: vec![1, 16, 16], ..RunConfig::default() }
    }

    #[test]
    fn hide_extract_round_trip() {
        let cfg = small();
        let key = Key::from_bytes([7; 32]);
        let out = hide(b"hello", &key, &cfg).unwrap();
        assert_eq!(out.report.used_bits, 72);
        let ext = extract(&out.stego, &key, &cfg, Some(b"hello")).unwrap();
        assert_eq!(ext.message.unwrap(), b"hello");
        assert_eq!(ext.accuracy, Some(1.0));
    }

    #[test]
    fn capacity_report() {
        let cfg = RunConfig::default();
        let out = hide(&[0xAB; 16], &Key::from_bytes([1; 32]), &cfg).unwrap();
        assert_eq!(out.report.used_bits, 160);
        assert_eq!(out.report.capacity_bits, 3072);
        assert_eq!(out.report.capacity_bpp, 3.0);
        assert!(out.report.to_csv().contains("used_bits,160\n"));
        assert!(matches!(
            hide(&[0; 400], &Key::from_bytes([1; 32]), &cfg),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn ladder() {
        assert_eq!(step_ladder(40), vec![10, 20, 40, 80]);
        assert_eq!(step_ladder(1), vec![1, 2]);
        assert_eq!(step_ladder(3), vec![1, 2, 3, 6]);
    }

    #[test]
    fn fitted_order_of_power_law() {
        let errs: Vec<(usize, f64)> = [10, 20, 40].iter().map(|&s| (s, 3.0 / (s as f64).powi(2))).collect();
        assert!((fitted_order(&errs).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(fitted_order(&[(4, 1.0)]), None);
    }

    #[test]
    fn selftest_variants() {
        let default = ode_selftest(&RunConfig::default()).unwrap();
        assert!(default.pass);
        assert!((default.order.unwrap() - 2.0).abs() < 0.3);
        let one = ode_selftest(&RunConfig { steps: 1, ..RunConfig::default() }).unwrap();
        assert!(one.errors[0].1 > 1.0);
        let zero = ode_selftest(&RunConfig { field: FieldSpec::Zero, ..RunConfig::default() }).unwrap();
        assert!(zero.pass && zero.order.is_none() && zero.errors.iter().all(|e| e.1 == 0.0));
        let mix = RunConfig { field: "mixture:0.5:-1:0.5,0.5:1:0.5".parse().unwrap(), ..RunConfig::default() };
        assert!(!ode_selftest(&mix).unwrap().notices.is_empty());
    }

    #[test]
    fn single_trial_csv_has_one_row() {
        let run = analyze_normality(&small(), 1).unwrap();
        let csv = run.to_csv();
        assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 2);
        assert!(analyze_normality(&small(), 0).is_err());
    }

    #[test]
    fn sweep_flags_infeasible_rows() {
        let cfg = RunConfig { bits_per_symbol: 4, ..small() };
        let rows = sweep_tradeoff(&cfg, &[0.02, 10.0], 2).unwrap();
        assert!(rows[0].outcome.is_ok());
        assert!(rows[1].outcome.is_err());
        assert!(sweep_csv(&rows).contains("infeasible"));
        assert!(sweep_tradeoff(&cfg, &[], 2).is_err());
    }
}
