use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use sunit_gcd::cli::commands::{self, CandidateMode, CommandOutput, Format};
use sunit_gcd::cli::{ConfigOverrides, ScanConfig};
use sunit_gcd::qplaces::parse_rational;
use sunit_gcd::sunits::SignMode;
use sunit_gcd::{Error, PlaceSet, Rational};

#[derive(Parser)]
#[command(name = "sunit-gcd", version, about = "Exact gcd analogues and exceptional subtori for S-unit points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Signs {
    Positive,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Collision,
    Bounded,
    Scaled,
}

#[derive(clap::Args)]
struct ScanArgs {
    /// JSON config file; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    #[arg(long)]
    bound: Option<u32>,
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long)]
    inequality: Option<String>,
    #[arg(long)]
    function: Option<String>,
    #[arg(long, value_enum)]
    signs: Option<Signs>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    precision_bits: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// gcd(a^n - 1, b^n - 1) for n = 1..=n_max, as CSV.
    GcdGrowth {
        a: BigUint,
        b: BigUint,
        #[arg(long, default_value_t = 60)]
        n_max: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// h((u-1)/(v-1)) against h(1:u:v) over S-unit pairs, as CSV.
    RatioScan(ScanArgs),
    /// Points violating a chosen inequality, classified against candidate subtori.
    ExceptionalScan(ScanArgs),
    /// Candidate subtori from one generator.
    Candidates {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        function: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Every step of the auxiliary-point chain at (u, v).
    ProofTrace {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value = "3/5")]
        epsilon: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Exact identities on seeded random inputs.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn scan_config(a: ScanArgs) -> Result<ScanConfig, Error> {
    let base = match &a.config {
        Some(p) => ScanConfig::load(p)?,
        None => ScanConfig::default(),
    };
    Ok(base.apply(ConfigOverrides {
        primes: a.primes,
        exponent_bound: a.bound,
        epsilon: a.epsilon,
        inequality: a.inequality,
        function: a.function,
        signs: a.signs.map(|s| match s {
            Signs::Positive => SignMode::Positive,
            Signs::Both => SignMode::Both,
        }),
        output: a.output,
        precision_bits: a.precision_bits,
        seed: None,
    }))
}

fn required(name: &str, v: Option<String>) -> Result<Rational, Error> {
    let s = v.ok_or_else(|| Error::Config(format!("--{name} is required for this mode")))?;
    parse_rational(&s).map_err(|e| Error::Config(format!("{name}: {e}")))
}

fn run(cmd: Command) -> Result<(CommandOutput, Option<PathBuf>), Error> {
    Ok(match cmd {
        Command::GcdGrowth { a, b, n_max, output } => (commands::gcd_growth(&a, &b, n_max)?, output),
        Command::RatioScan(args) => {
            let cfg = scan_config(args)?.validate()?;
            let out = cfg.config.output.clone();
            (commands::ratio_scan(&cfg)?, out)
        }
        Command::ExceptionalScan(args) => {
            let cfg = scan_config(args)?.validate()?;
            let out = cfg.config.output.clone();
            (commands::exceptional_scan(&cfg)?, out)
        }
        Command::Candidates { mode, function, epsilon, theta, eta, format } => {
            let mode = match mode {
                Mode::Collision => CandidateMode::Collision {
                    function: function.ok_or_else(|| Error::Config("--function is required for collision mode".into()))?,
                },
                Mode::Bounded => CandidateMode::Bounded { epsilon: required("epsilon", epsilon)? },
                Mode::Scaled => CandidateMode::Scaled {
                    theta: required("theta", theta)?,
                    eta: required("eta", eta)?,
                    epsilon: required("epsilon", epsilon)?,
                },
            };
            let f = if matches!(format, OutFormat::Csv) { Format::Csv } else { Format::Json };
            (commands::candidates(&mode, f)?, None)
        }
        Command::ProofTrace { u, v, epsilon, primes, format } => {
            let u = parse_rational(&u)?;
            let v = parse_rational(&v)?;
            let eps = parse_rational(&epsilon)?;
            let s = PlaceSet::new(primes)?;
            let f = if matches!(format, OutFormat::Json) { Format::Json } else { Format::Csv };
            (commands::proof_trace(&u, &v, &eps, &s, f)?, None)
        }
        Command::Selfcheck { seed } => (commands::selfcheck(seed)?, None),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, path)) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            let written = match path {
                Some(p) => std::fs::write(&p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(commands::EXIT_CONFIG as u8);
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
