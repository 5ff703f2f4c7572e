//! Headline criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line before asserting. The line goes straight to the
//! stderr handle, which the test harness does not capture.

use std::io::Write;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use pab2g::cli::{self, FieldSpec, RunConfig};
use pab2g::codec::{
    decrypt_and_unpad, encode, encode_variance_preserving, noise_to_symbols, pack_bits,
    pad_and_encrypt, unpack_symbols, CodecConfig, Key, Mode,
};
use pab2g::ode::LinearSigma;
use pab2g::stats::{discrete_kl, sample_moments, DiscreteDistribution};
use pab2g::Error;

fn verdict(name: &str, ok: bool, detail: String) {
    let line = format!("\n{} {name}: {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    assert!(ok, "{name}: {detail}");
}

fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn random_key(rng: &mut ChaCha20Rng) -> Key {
    let mut k = [0u8; 32];
    rng.fill_bytes(&mut k);
    Key::from_bytes(k)
}

fn within(elapsed: Duration, budget_s: u64) -> bool {
    elapsed <= Duration::from_secs(budget_s)
}

/// Configurations whose clearance cannot be honoured at every correction step.
fn expect_infeasible(mode: Mode, l: u32, delta_g: f64) -> bool {
    delta_g == 0.08 && (l == 4 || (mode == Mode::II && l == 3))
}

#[test]
fn exact_reversibility() {
    const TUPLES: usize = 10_000;
    const SYMBOLS: usize = 3072;
    let combos: Vec<(Mode, u32, f64)> = [Mode::I, Mode::II]
        .into_iter()
        .flat_map(|m| (1..=4u32).flat_map(move |l| [0.0, 0.02, 0.08].map(|dg| (m, l, dg))))
        .collect();
    let start = Instant::now();
    let mut r = rng(1);
    let (mut exact, mut refused, mut bad) = (0usize, 0usize, Vec::new());
    for i in 0..TUPLES {
        let (mode, l, delta_g) = combos[i % combos.len()];
        let key = random_key(&mut r);
        let nonce = r.next_u64();
        let capacity = SYMBOLS * l as usize;
        let mut message = vec![0u8; (r.next_u32() as usize) % ((capacity - 32) / 8 + 1)];
        r.fill_bytes(&mut message);
        let frame = pad_and_encrypt(&message, capacity, &key, nonce).unwrap();
        let symbols = pack_bits(&frame, l).unwrap();
        let mut cfg = CodecConfig::new(mode, l, delta_g, key.clone());
        cfg.master_seed = r.next_u64();
        match encode(&symbols, &cfg) {
            Ok((g, _)) => {
                let back = noise_to_symbols(&g, &cfg).unwrap();
                let bits = unpack_symbols(&back);
                if back == symbols && decrypt_and_unpad(&bits, &key, nonce).unwrap() == message {
                    exact += 1;
                } else {
                    bad.push(format!("{mode:?} l={l} dg={delta_g}"));
                }
            }
            Err(Error::InfeasibleGeometry { .. }) if expect_infeasible(mode, l, delta_g) => refused += 1,
            Err(e) => bad.push(format!("{mode:?} l={l} dg={delta_g}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let failures = bad.len();
    bad.truncate(5);
    verdict(
        "exact reversibility",
        failures == 0 && exact + refused == TUPLES && within(elapsed, 120),
        format!(
            "{exact}/{TUPLES} tuples bit-exact over {} configs, {refused} refused as infeasible \
             (l=4 and mode II l=3 at dg=0.08), {failures} failures {bad:?}, {:.1}s",
            combos.len(),
            elapsed.as_secs_f64()
        ),
    );
}

fn table_ratio(mode: Mode, side: usize, delta_g: f64, trials: usize) -> f64 {
    let cfg = RunConfig { mode, bits_per_symbol: 1, delta_g, shape: vec![3, side, side], ..RunConfig::default() };
    cli::analyze_normality(&cfg, trials).unwrap().acceptance_ratio()
}

#[test]
fn normality_without_clearance() {
    let start = Instant::now();
    let mut cells = Vec::new();
    for mode in [Mode::I, Mode::II] {
        for side in [32, 64] {
            cells.push((mode, 3 * side * side, table_ratio(mode, side, 0.0, 1000)));
        }
    }
    let elapsed = start.elapsed();
    let ok = cells.iter().all(|c| (c.2 - 0.95).abs() <= 0.02) && within(elapsed, 300);
    verdict(
        "K-S acceptance at dg=0",
        ok,
        format!("ratios {cells:?} (target 0.95 +- 0.02), {:.1}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn normality_with_clearance() {
    let start = Instant::now();
    let mut large = Vec::new();
    let mut medium = Vec::new();
    for mode in [Mode::I, Mode::II] {
        large.push((mode, table_ratio(mode, 128, 0.02, 1000)));
        medium.push((mode, table_ratio(mode, 64, 0.02, 1000)));
    }
    let elapsed = start.elapsed();
    let ok = large.iter().all(|c| c.1 <= 0.01)
        && medium.iter().all(|c| (0.30..=0.70).contains(&c.1))
        && within(elapsed, 600);
    verdict(
        "K-S acceptance at dg=0.02",
        ok,
        format!(
            "n=49152 {large:?} (<= 0.01), n=12288 {medium:?} (in [0.30, 0.70]), {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn clearance_moves_variance_not_mean() {
    const K: usize = 3 * 128 * 128;
    let start = Instant::now();
    let mut r = rng(3);
    let key = random_key(&mut r);
    let bits: Vec<bool> = (0..K).map(|_| r.next_u32() & 1 == 1).collect();
    let symbols = pack_bits(&bits, 1).unwrap();
    let mut off = CodecConfig::new(Mode::I, 1, 0.08, key.clone());
    off.max_iterations = 0;
    let (g, _) = encode_variance_preserving(&symbols, &off).unwrap();
    let (mean, var) = sample_moments(g.values()).unwrap();
    let on = CodecConfig::new(Mode::I, 1, 0.08, key);
    let (corrected, report) = encode_variance_preserving(&symbols, &on).unwrap();
    let (_, var_on) = sample_moments(corrected.values()).unwrap();
    let elapsed = start.elapsed();
    let bound = 3.0 / (K as f64).sqrt();
    let ok = mean.abs() <= bound
        && (var - 1.0).abs() > 0.0185
        && report.converged
        && (var_on - 1.0).abs() <= 0.0185
        && report.iterations <= 100
        && within(elapsed, 60);
    verdict(
        "clearance keeps mean, correction restores variance",
        ok,
        format!(
            "uncorrected mean {mean:.2e} (bound {bound:.2e}) var {var:.4}; corrected var {var_on:.4} after {} iterations \
             ({}), {:.2}s",
            report.iterations,
            report.reading.name(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn ode_convergence_order() {
    let start = Instant::now();
    let sched = LinearSigma::default();
    let errors: Vec<(usize, f64)> = [10, 20, 40, 80]
        .iter()
        .map(|&s| (s, cli::closed_form_error(s, 0.0, 1.0, &sched, 7.0).unwrap()))
        .collect();
    let order = cli::fitted_order(&errors).unwrap();
    let pairwise: Vec<f64> = errors.windows(2).map(|w| (w[0].1 / w[1].1).log2()).collect();
    let elapsed = start.elapsed();
    let at_80 = errors[3].1;
    verdict(
        "integrator order and 80-step error",
        order >= 1.8 && pairwise.iter().all(|&p| p >= 1.8) && at_80 <= 1e-6 && within(elapsed, 30),
        format!(
            "fitted order {order:.3}, pairwise {pairwise:.3?}, max error at 80 steps {at_80:.3e} (target 1e-6), {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn end_to_end_hide_extract() {
    let start = Instant::now();
    let cfg = RunConfig {
        shape: vec![3, 32, 32],
        field: FieldSpec::Mixture(vec![(1.0, 0.0, 1.0)]),
        steps: 40,
        delta_g: 0.02,
        ..RunConfig::default()
    };
    let mut r = rng(6);
    let (mut exact, mut bits_ok, mut bits_total) = (0, 0.0, 0usize);
    for i in 0..100u64 {
        let key = random_key(&mut r);
        let mut message = vec![0u8; 1 + (r.next_u32() as usize) % 380];
        r.fill_bytes(&mut message);
        let cfg = RunConfig { nonce: i, master_seed: r.next_u64(), ..cfg.clone() };
        let hidden = cli::hide(&message, &key, &cfg).unwrap();
        let out = cli::extract(&hidden.stego, &key, &cfg, Some(&message)).unwrap();
        let n = message.len() * 8;
        bits_ok += out.accuracy.unwrap() * n as f64;
        bits_total += n;
        if out.message.as_deref() == Ok(&message[..]) {
            exact += 1;
        }
    }
    let elapsed = start.elapsed();
    let accuracy = bits_ok / bits_total as f64;
    verdict(
        "end-to-end hide and extract",
        exact == 100 && accuracy == 1.0 && within(elapsed, 300),
        format!("{exact}/100 messages exact, bit accuracy {accuracy}, {:.1}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn quantization_tradeoff() {
    let start = Instant::now();
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/tradeoff-demo.conf")).unwrap();
    let cfg = RunConfig::parse(&text).unwrap();
    let rows = cli::sweep_tradeoff(&cfg, &[0.0, 0.08], 200).unwrap();
    let (plain, cleared) = (rows[0].outcome.clone().unwrap(), rows[1].outcome.clone().unwrap());
    let elapsed = start.elapsed();
    let gap = 100.0 * (cleared.bit_accuracy - plain.bit_accuracy);
    verdict(
        "clearance trades normality for robustness",
        gap >= 2.0 && cleared.ks_ratio < plain.ks_ratio && within(elapsed, 900),
        format!(
            "accuracy {:.4} -> {:.4} (+{gap:.2} pp), K-S ratio {} -> {}, {:.1}s",
            plain.bit_accuracy,
            cleared.bit_accuracy,
            plain.ks_ratio,
            cleared.ks_ratio,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn kl_invariant_under_bijection() {
    let start = Instant::now();
    let mut r = rng(8);
    let unit = |r: &mut ChaCha20Rng| (r.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    let (mut worst, mut min_kl) = (0.0f64, f64::INFINITY);
    for _ in 0..1000 {
        let n = 2 + (r.next_u32() as usize) % 30;
        let draw = |r: &mut ChaCha20Rng| {
            let w: Vec<f64> = (0..n).map(|_| unit(r) + 1e-3).collect();
            let s: f64 = w.iter().sum();
            DiscreteDistribution::new(w.iter().map(|v| v / s).collect()).unwrap()
        };
        let (p, q) = (draw(&mut r), draw(&mut r));
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (r.next_u32() as usize) % (i + 1));
        }
        let before = discrete_kl(&p, &q).unwrap();
        let after = discrete_kl(&p.relabeled(&perm).unwrap(), &q.relabeled(&perm).unwrap()).unwrap();
        worst = worst.max((before - after).abs());
        min_kl = min_kl.min(before).min(after);
    }
    let elapsed = start.elapsed();
    verdict(
        "KL divergence invariant under relabeling",
        worst <= 1e-12 && min_kl >= 0.0 && within(elapsed, 5),
        format!("max |dKL| {worst:.2e}, min KL {min_kl:.3e}, {:.3}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn encoding_latency() {
    const K: usize = 3 * 128 * 128;
    let mut r = rng(9);
    let key = random_key(&mut r);
    let bits: Vec<bool> = (0..K).map(|_| r.next_u32() & 1 == 1).collect();
    let mut worst = Duration::ZERO;
    let mut cases = Vec::new();
    for mode in [Mode::I, Mode::II] {
        let symbols = pack_bits(&bits, 1).unwrap();
        let cfg = CodecConfig::new(mode, 1, 0.08, key.clone());
        let start = Instant::now();
        let (_, report) = encode_variance_preserving(&symbols, &cfg).unwrap();
        let t = start.elapsed();
        worst = worst.max(t);
        cases.push(format!("{mode:?}: {:.3}s/{} it", t.as_secs_f64(), report.iterations));
    }
    verdict(
        "variance-preserving encode latency",
        worst < Duration::from_secs(1),
        format!("3x128x128 at dg=0.08 {cases:?} (budget 1s)"),
    );
}
