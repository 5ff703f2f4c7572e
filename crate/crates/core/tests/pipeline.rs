use std::path::Path;
use std::process::Command;

use pab2g::cli::{self, RunConfig};
use pab2g::codec::Key;
use pab2g::ode::{
    build_time_grid, generate, invert, mixture_score, GaussianMixture, LinearSigma, MixtureComponent, DEFAULT_RHO,
};
use pab2g::codec::NoiseVector;
use pab2g::stats::sample_moments;
use pab2g::tensor::Tensor;

const BIN: &str = env!("CARGO_BIN_EXE_pab2g");

fn run(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).current_dir(dir).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("key.hex"), format!("{}\n", "a5".repeat(32))).unwrap();
    std::fs::write(dir.path().join("other.key"), [9u8; 32]).unwrap();
    std::fs::write(dir.path().join("msg.bin"), b"sixteen byte msg").unwrap();
    std::fs::write(dir.path().join("run.conf"), "delta_g = 0.02\ne = 0.0185\nsteps = 40\nnonce = 3\n").unwrap();
    dir
}

const HIDE: &[&str] = &[
    "hide", "--message", "msg.bin", "--key", "key.hex", "--noise-out", "n.paht", "--stego-out", "s.paht", "--config",
    "run.conf",
];

#[test]
fn binary_round_trip_and_report() {
    let dir = workspace();
    let (code, report, _) = run(dir.path(), HIDE);
    assert_eq!(code, 0);
    assert!(report.contains("used_bits,160\n") && report.contains("capacity_bits,3072\n"));
    assert!(report.contains("capacity_bpp,3\n"));

    let noise = Tensor::load(&dir.path().join("n.paht")).unwrap();
    assert_eq!(noise.shape(), &[3, 32, 32]);
    let (_, var) = sample_moments(noise.data()).unwrap();
    assert!((var - 1.0).abs() <= 0.0185, "{var}");

    let (code, stdout, stderr) = run(
        dir.path(),
        &["extract", "--stego", "s.paht", "--key", "key.hex", "--reference", "msg.bin", "--config", "run.conf"],
    );
    assert_eq!(code, 0, "{stderr}");
    assert_eq!(stdout, "sixteen byte msg");
    assert!(stderr.contains("bit_accuracy,1"));
}

#[test]
fn identical_inputs_give_identical_files() {
    let dir = workspace();
    run(dir.path(), HIDE);
    let first = (std::fs::read(dir.path().join("n.paht")).unwrap(), std::fs::read(dir.path().join("s.paht")).unwrap());
    run(dir.path(), HIDE);
    assert_eq!(std::fs::read(dir.path().join("n.paht")).unwrap(), first.0);
    assert_eq!(std::fs::read(dir.path().join("s.paht")).unwrap(), first.1);
}

#[test]
fn wrong_key_is_detected_or_garbled() {
    let dir = workspace();
    run(dir.path(), HIDE);
    let (code, _, stderr) = run(
        dir.path(),
        &["extract", "--stego", "s.paht", "--key", "other.key", "--reference", "msg.bin", "--config", "run.conf"],
    );
    if code == 0 {
        let acc: f64 = stderr.trim().rsplit(',').next().unwrap().parse().unwrap();
        assert!((acc - 0.5).abs() < 0.2, "{acc}");
    } else {
        assert_eq!(code, 5, "{stderr}");
    }
}

#[test]
fn exit_codes_are_distinct() {
    let dir = workspace();
    std::fs::write(dir.path().join("big.bin"), vec![0u8; 1000]).unwrap();
    let capacity = run(
        dir.path(),
        &["hide", "--message", "big.bin", "--key", "key.hex", "--noise-out", "n", "--stego-out", "s"],
    );
    let geometry = run(
        dir.path(),
        &[
            "hide", "--message", "msg.bin", "--key", "key.hex", "--noise-out", "n", "--stego-out", "s", "--l", "4",
            "--delta-g", "10",
        ],
    );
    std::fs::write(dir.path().join("bad.key"), b"short").unwrap();
    let bad_key = run(
        dir.path(),
        &["hide", "--message", "msg.bin", "--key", "bad.key", "--noise-out", "n", "--stego-out", "s"],
    );
    std::fs::write(dir.path().join("junk.paht"), b"PAHTjunk").unwrap();
    let corrupt = run(dir.path(), &["extract", "--stego", "junk.paht", "--key", "key.hex"]);
    let unknown = run(dir.path(), &["ode-selftest", "--set", "colour=red"]);
    assert_eq!(
        [capacity.0, geometry.0, bad_key.0, corrupt.0, unknown.0],
        [3, 4, 2, 5, 2],
        "{:?}",
        [&capacity.2, &geometry.2, &bad_key.2, &corrupt.2, &unknown.2]
    );
}

#[test]
fn experiment_verbs() {
    let dir = workspace();
    let (code, csv, _) = run(dir.path(), &["analyze-normality", "--trials", "1"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 2);

    let (code, csv, _) = run(dir.path(), &["sweep-tradeoff", "--delta-gs", "0.02,10", "--trials", "2", "--l", "4"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert!(rows[0].ends_with(",ok") && rows[1].contains("infeasible"), "{csv}");

    let (code, out, _) = run(dir.path(), &["ode-selftest"]);
    assert_eq!(code, 0);
    assert!(out.contains("# result,pass"));
    let (code, out, _) = run(dir.path(), &["ode-selftest", "--steps", "1"]);
    assert!(out.starts_with("steps,max_error\n1,"), "{out}");
    assert!(code == 0 || code == 1);
}

#[test]
fn shipped_configs_parse() {
    for name in ["default.conf", "tradeoff-demo.conf"] {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name);
        RunConfig::parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    }
}

#[test]
fn extraction_needs_only_key_and_public_config() {
    let cfg = RunConfig::default();
    let key = Key::from_bytes([3; 32]);
    let hidden = cli::hide(b"public algorithms", &key, &cfg).unwrap();
    let reseeded = RunConfig { master_seed: 99, ..cfg.clone() };
    let other = cli::hide(b"public algorithms", &key, &reseeded).unwrap();
    assert_ne!(hidden.stego, other.stego);
    for stego in [&hidden.stego, &other.stego] {
        let out = cli::extract(stego, &key, &cfg, None).unwrap();
        assert_eq!(out.message.unwrap(), b"public algorithms");
    }
    let wrong_nonce = RunConfig { nonce: 1, ..cfg };
    assert!(cli::extract(&hidden.stego, &key, &wrong_nonce, None).unwrap().message.is_err());
}

fn two_modes() -> GaussianMixture {
    GaussianMixture::new(vec![
        MixtureComponent { weight: 0.3, mean: vec![-1.0, 0.5], base_std: 0.6 },
        MixtureComponent { weight: 0.7, mean: vec![1.5, -0.5], base_std: 0.4 },
    ])
    .unwrap()
}

#[test]
fn mixture_score_matches_density_slope() {
    let field = two_modes();
    let h = 1e-5;
    for i in 0..100 {
        let x = [-3.0 + 0.06 * i as f64, 2.0 - 0.045 * i as f64];
        let sigma = 0.2 + 0.03 * i as f64;
        let s = mixture_score(&field, &x, sigma).unwrap();
        for d in 0..2 {
            let (mut up, mut down) = (x, x);
            up[d] += h;
            down[d] -= h;
            let fd = (field.log_density(&up, sigma) - field.log_density(&down, sigma)) / (2.0 * h);
            assert!((fd - s[d]).abs() <= 1e-6, "x={x:?} sigma={sigma}: {fd} vs {}", s[d]);
        }
    }
}

#[test]
fn mixture_round_trip_recovers_noise() {
    let sched = LinearSigma::default();
    let field = two_modes();
    let g = NoiseVector::flat(vec![0.7, -1.3]).unwrap();
    let mut last = f64::INFINITY;
    for steps in [20, 40, 80] {
        let grid = build_time_grid(steps, &sched, DEFAULT_RHO).unwrap();
        let x = generate(&g, &grid, &sched, &field).unwrap();
        let back = invert(&x, &grid, &sched, &field).unwrap();
        let err = back.values().iter().zip(g.values()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        assert!(err < last, "{steps}: {err}");
        last = err;
    }
    assert!(last < 1e-2, "{last}");
}
