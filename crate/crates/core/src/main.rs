use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pab2g::cli::{self, config::KEYS, RunConfig};
use pab2g::codec::Key;
use pab2g::tensor::Tensor;
use pab2g::{Error, Result};

#[derive(Parser)]
#[command(name = "pab2g", version, about = "Hide messages in Gaussian noise and recover them through a probability-flow ODE")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ConfigArgs {
    /// key = value config file; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Extra overrides, `key=value`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long = "delta-g")]
    delta_g: Option<String>,
    #[arg(long)]
    e: Option<String>,
    #[arg(long = "n-max")]
    n_max: Option<String>,
    #[arg(long = "delta-c")]
    delta_c: Option<String>,
    /// e.g. 3x32x32
    #[arg(long)]
    shape: Option<String>,
    /// zero | gaussian:MEAN:STD | mixture:W:MEAN:STD,...
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    #[arg(long = "t-max")]
    t_max: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long)]
    rho: Option<String>,
    /// Quantization levels for the stego tensor (0 = off).
    #[arg(long = "quantize")]
    quantize_levels: Option<String>,
    #[arg(long = "quantize-lo")]
    quantize_lo: Option<String>,
    #[arg(long = "quantize-hi")]
    quantize_hi: Option<String>,
    #[arg(long = "master-seed")]
    master_seed: Option<String>,
    #[arg(long)]
    nonce: Option<String>,
}

impl ConfigArgs {
    fn load(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::parse(&read_text(p)?)?,
            None => RunConfig::default(),
        };
        let flags = [
            &self.mode,
            &self.l,
            &self.delta_g,
            &self.e,
            &self.n_max,
            &self.delta_c,
            &self.shape,
            &self.field,
            &self.steps,
            &self.t_max,
            &self.epsilon,
            &self.rho,
            &self.quantize_levels,
            &self.quantize_lo,
            &self.quantize_hi,
            &self.master_seed,
            &self.nonce,
        ];
        for (key, value) in KEYS.iter().zip(flags) {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        for pair in &self.set {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("--set expects KEY=VALUE, got {pair:?}")))?;
            cfg.set(k.trim(), v.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a message, map it to noise and generate the stego tensor.
    Hide {
        #[arg(long)]
        message: PathBuf,
        /// 32 raw bytes or 64 hex characters.
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "noise-out")]
        noise_out: PathBuf,
        #[arg(long = "stego-out")]
        stego_out: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Invert a stego tensor and recover the message.
    Extract {
        #[arg(long)]
        stego: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Original message, for a bit-accuracy report.
        #[arg(long)]
        reference: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// K-S acceptance ratio of the encoder output over independent trials.
    AnalyzeNormality {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Normality and round-trip accuracy across clearances.
    SweepTradeoff {
        /// Comma-separated clearances.
        #[arg(long = "delta-gs", value_delimiter = ',', required = true)]
        delta_gs: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Closed-form check and convergence order of the integrator.
    OdeSelftest {
        #[command(flatten)]
        config: ConfigArgs,
    },
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_bytes(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Hide { message, key, noise_out, stego_out, config } => {
            let cfg = config.load()?;
            let key = Key::from_file_contents(&read_bytes(&key)?)?;
            let out = cli::hide(&read_bytes(&message)?, &key, &cfg)?;
            let noise = Tensor::new(out.noise.shape().to_vec(), out.noise.values().to_vec())?;
            noise.save(&noise_out)?;
            out.stego.save(&stego_out)?;
            print!("{}", out.report.to_csv());
            Ok(true)
        }
        Command::Extract { stego, key, out, reference, config } => {
            let cfg = config.load()?;
            let key = Key::from_file_contents(&read_bytes(&key)?)?;
            let reference = reference.map(|p| read_bytes(&p)).transpose()?;
            let result = cli::extract(&Tensor::load(&stego)?, &key, &cfg, reference.as_deref())?;
            if let Some(acc) = result.accuracy {
                eprintln!("bit_accuracy,{acc}");
            }
            let message = result.message?;
            match out {
                Some(p) => write_bytes(&p, &message)?,
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&message)?;
                }
            }
            Ok(true)
        }
        Command::AnalyzeNormality { trials, out, config } => {
            let run = cli::analyze_normality(&config.load()?, trials)?;
            emit(&out, &run.to_csv())?;
            eprintln!("acceptance_ratio,{}", run.acceptance_ratio());
            Ok(true)
        }
        Command::SweepTradeoff { delta_gs, trials, out, config } => {
            let rows = cli::sweep_tradeoff(&config.load()?, &delta_gs, trials)?;
            emit(&out, &cli::sweep_csv(&rows))?;
            Ok(true)
        }
        Command::OdeSelftest { config } => {
            let report = cli::ode_selftest(&config.load()?)?;
            print!("{}", report.to_csv());
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
