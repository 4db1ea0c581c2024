//! mml: a command-line laboratory for mollified second moments of the
//! Riemann zeta function on the critical line.
//!
//! Every command reads defaults, then an optional config file, then flags,
//! and writes a schema-versioned CSV table or a single JSON object. Given
//! the same configuration and cache state the output is byte-identical.

mod config;
mod experiments;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use mml_core::error::Result;

use config::{Format, LabConfig, Window};

#[derive(Args, Clone, Debug, Default)]
struct CommonArgs {
    /// Config file: `key = value` lines under [labcli]/[moments]/[kernels]/[zeta]
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Comma-separated mollifier exponents theta
    #[arg(long, value_name = "LIST")]
    theta: Option<String>,
    /// Comma-separated window sizes T
    #[arg(long, value_name = "LIST")]
    tmax: Option<String>,
    /// Window shape: from_zero ([0, T]) or dyadic ([T, 2T])
    #[arg(long, value_name = "MODE")]
    window: Option<String>,
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
    /// Directory for sieve caches, reused across runs
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Lift the desk-scale limits on T and the mollifier length
    #[arg(long)]
    override_guardrail: bool,
    /// Comma-separated mollifier lengths x
    #[arg(long, value_name = "LIST")]
    x: Option<String>,
    /// Comma-separated kernel ordinates t
    #[arg(long, value_name = "LIST")]
    t: Option<String>,
    /// Comma-separated kernel arguments u (gsupport)
    #[arg(long, value_name = "LIST")]
    u: Option<String>,
    /// How many zeros to locate (zeros)
    #[arg(long, value_name = "K")]
    count: Option<usize>,
    /// Contour node spacing
    #[arg(long, value_name = "H")]
    spacing: Option<f64>,
}

#[derive(Parser, Debug)]
#[command(
    name = "mml",
    version,
    about = "Numerical experiments on mollified second moments of zeta"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Moment ratio I/T against the 1 + 1/theta benchmark for x = T^theta
    Levinson(CommonArgs),
    /// Three-way agreement check for the kernel transform J, plus its residue
    #[command(name = "jt-check")]
    JtCheck(CommonArgs),
    /// Pointwise terms against the length-averaged moment over a window
    Chain(CommonArgs),
    /// Plain second moment of zeta against T log T
    Meanvalue(CommonArgs),
    /// First critical-line zero ordinates
    Zeros(CommonArgs),
    /// Kernel support and size report
    Gsupport(CommonArgs),
}

impl Cmd {
    fn split(&self) -> (&'static str, &CommonArgs) {
        match self {
            Cmd::Levinson(a) => ("levinson", a),
            Cmd::JtCheck(a) => ("jt-check", a),
            Cmd::Chain(a) => ("chain", a),
            Cmd::Meanvalue(a) => ("meanvalue", a),
            Cmd::Zeros(a) => ("zeros", a),
            Cmd::Gsupport(a) => ("gsupport", a),
        }
    }
}

/// Flags win over file values, which win over defaults.
fn apply_flags(cfg: &mut LabConfig, args: &CommonArgs) -> Result<()> {
    if let Some(list) = &args.theta {
        cfg.theta_list = Some(config::parse_list("--theta", list)?);
    }
    if let Some(list) = &args.tmax {
        cfg.t_list = Some(config::parse_list("--tmax", list)?);
    }
    if let Some(w) = &args.window {
        cfg.window = Window::parse(w)?;
    }
    if let Some(path) = &args.out {
        cfg.out = Some(path.clone());
    }
    if let Some(f) = &args.format {
        cfg.format = Format::parse(f)?;
    }
    if let Some(dir) = &args.cache_dir {
        cfg.cache_dir = Some(dir.clone());
    }
    if args.override_guardrail {
        cfg.override_guardrail = true;
    }
    if let Some(list) = &args.x {
        cfg.x_list = Some(config::parse_list("--x", list)?);
    }
    if let Some(list) = &args.t {
        cfg.ordinate_list = Some(config::parse_list("--t", list)?);
    }
    if let Some(list) = &args.u {
        cfg.u_list = Some(config::parse_list("--u", list)?);
    }
    if let Some(k) = args.count {
        cfg.count = k;
    }
    if let Some(h) = args.spacing {
        cfg.contour.spacing = h;
    }
    Ok(())
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let (name, args) = cli.command.split();
    let mut cfg = LabConfig::default();
    if let Some(path) = &args.config {
        config::apply_file(&mut cfg, path)?;
    }
    apply_flags(&mut cfg, args)?;
    cfg.validate()?;
    let table = match name {
        "levinson" => experiments::run_levinson(&cfg)?,
        "jt-check" => experiments::run_jt_check(&cfg)?,
        "chain" => experiments::run_chain(&cfg)?,
        "meanvalue" => experiments::run_meanvalue(&cfg)?,
        "zeros" => experiments::run_zeros(&cfg)?,
        "gsupport" => experiments::run_gsupport(&cfg)?,
        _ => unreachable!("clap restricts the command set"),
    };
    let rendered = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    output::write_rendered(&rendered, cfg.out.as_deref())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("mml: {e}");
        std::process::exit(2);
    }
}
