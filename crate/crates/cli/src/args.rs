//! Command-line surface and flat config-file ingestion.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::timearg::parse_time;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct HomArgs {
    /// Particles initially in well A.
    #[arg(long)]
    pub na: usize,
    /// Particles initially in well B.
    #[arg(long)]
    pub nb: usize,
    /// Interaction parameter γ = W/λ.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Measurement time (dimensionless λt).
    #[arg(long = "t", default_value = "hom", value_parser = parse_time, allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct HomSeriesArgs {
    #[arg(long)]
    pub na: usize,
    #[arg(long)]
    pub nb: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    /// End of the sampled window.
    #[arg(long, default_value = "pi", value_parser = parse_time)]
    pub t_max: f64,
    /// Number of evenly spaced samples, endpoints included.
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct FixedTimeArgs {
    /// Evolution time; defaults to the half-revival time.
    #[arg(long = "t", value_parser = parse_time, allow_negative_numbers = true)]
    pub t: Option<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct BellArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub xi_min: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub xi_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub xi_step: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long = "t", default_value = "bell", value_parser = parse_time)]
    pub t: f64,
    /// Bracket width of the final golden-section refinement.
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct MeanFieldArgs {
    /// Total particle number.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Initial occupation of well A (command-specific default).
    #[arg(long)]
    pub na0: Option<usize>,
    #[arg(long, default_value = "10", value_parser = parse_time)]
    pub t_max: f64,
    #[arg(long, default_value_t = 401)]
    pub points: usize,
    /// Mean-field integration step.
    #[arg(long, default_value_t = wellsim_core::meanfield::DEFAULT_STEP)]
    pub step: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub na: usize,
    #[arg(long)]
    pub nb: usize,
    /// Explicit γ values, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["gamma_min", "gamma_max", "gamma_step"])]
    pub gammas: Vec<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma_max: Option<f64>,
    #[arg(long)]
    pub gamma_step: Option<f64>,
    #[arg(long = "t", default_value = "hom", value_parser = parse_time)]
    pub t: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct GraphArgs {
    /// Number of wells.
    #[arg(long)]
    pub wells: usize,
    /// Tunneling edges as `i-j:rate`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub edges: Vec<String>,
    /// On-site interaction W.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub w: f64,
    /// On-site energy E0.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub e0: f64,
    /// Hopping sign: `negative` for −λ(a†b + b†a), `positive` for +λ(...).
    #[arg(long, default_value = "negative")]
    pub sign: String,
    /// Initial occupations, e.g. `101` or `1,0,1`.
    #[arg(long)]
    pub initial: String,
    #[arg(long = "t", value_parser = parse_time, allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Double-well HOM distribution p_n at one time.
    Hom(HomArgs),
    /// Time traces |c_n(t)|² of a double-well HOM run.
    HomSeries(HomSeriesArgs),
    /// Three wells in a line starting from |1,0,1⟩.
    ThreeWell(FixedTimeArgs),
    /// Four wells on a square starting from |1,0,1,0⟩.
    FourWell(FixedTimeArgs),
    /// CHSH parity-correlation scan and maximization over ξ.
    Bell(BellArgs),
    /// Mean-field N_A(t) with the elliptic closed form when N_A(0) = N.
    Meanfield(MeanFieldArgs),
    /// Exact versus mean-field N_A(t).
    Selftrap(MeanFieldArgs),
    /// Exact per-configuration probabilities |c_n(t)|².
    ConfigTrap(MeanFieldArgs),
    /// HOM distributions over a list or grid of γ values.
    Sweep(SweepArgs),
    /// Evolve a Fock state on an arbitrary well graph.
    Graph(GraphArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Hom(_) => "hom",
            Command::HomSeries(_) => "hom-series",
            Command::ThreeWell(_) => "three-well",
            Command::FourWell(_) => "four-well",
            Command::Bell(_) => "bell",
            Command::Meanfield(_) => "meanfield",
            Command::Selftrap(_) => "selftrap",
            Command::ConfigTrap(_) => "config-trap",
            Command::Sweep(_) => "sweep",
            Command::Graph(_) => "graph",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Hom(a) => &a.out,
            Command::HomSeries(a) => &a.out,
            Command::ThreeWell(a) | Command::FourWell(a) => &a.out,
            Command::Bell(a) => &a.out,
            Command::Meanfield(a) | Command::Selftrap(a) | Command::ConfigTrap(a) => &a.out,
            Command::Sweep(a) => &a.out,
            Command::Graph(a) => &a.out,
        }
    }
}

const COMMAND_NAMES: &[&str] = &[
    "hom",
    "hom-series",
    "three-well",
    "four-well",
    "bell",
    "meanfield",
    "selftrap",
    "config-trap",
    "sweep",
    "graph",
];

/// Simulator for bosons in tunneling-coupled potential wells.
///
/// Any subcommand also accepts `--config FILE`: a flat `key = value` file
/// whose keys are flag names; flags given on the command line win.
#[derive(Debug, Parser)]
#[command(name = "wellsim", version, args_override_self = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
}

impl RunConfig {
    pub fn format(&self) -> Format {
        self.command.output().format
    }

    pub fn output(&self) -> Option<&Path> {
        self.command.output().output.as_deref()
    }
}

/// Outcome of argument parsing that is not a runnable config.
#[derive(Debug)]
pub enum ParseOutcome {
    Run(RunConfig),
    /// `--help` / `--version`: text to print, exit 0.
    Info(String),
}

pub fn parse_args<I, T>(argv: I) -> Result<ParseOutcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv = expand_config(argv.into_iter().map(Into::into).collect())?;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Ok(ParseOutcome::Info(e.render().to_string())),
                _ => {
                    let text = e.render().to_string();
                    Err(CliError::usage(text.trim_start_matches("error: ").trim_end()))
                }
            };
        }
    };
    let config = RunConfig { command: cli.command };
    validate(&config)?;
    Ok(ParseOutcome::Run(config))
}

/// Splices `key = value` lines from `--config FILE` in as `--key value`
/// right after the subcommand, so later command-line flags override them.
fn expand_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(pos) = argv
        .iter()
        .position(|a| a == "--config" || a.to_string_lossy().starts_with("--config="))
    else {
        return Ok(argv);
    };
    let flag = argv.remove(pos).to_string_lossy().into_owned();
    let path = match flag.strip_prefix("--config=") {
        Some(p) => PathBuf::from(p),
        None if pos < argv.len() => PathBuf::from(argv.remove(pos)),
        None => return Err(CliError::usage("--config needs a file path")),
    };
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let tokens = parse_config_text(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let sub = argv
        .iter()
        .position(|a| COMMAND_NAMES.contains(&a.to_string_lossy().as_ref()))
        .ok_or_else(|| CliError::usage("--config given without a subcommand"))?;
    let tail = argv.split_off(sub + 1);
    argv.extend(tokens.into_iter().map(OsString::from));
    argv.extend(tail);
    Ok(argv)
}

/// `key = value` (or `key value`) per line, `#` comments, blank lines ignored.
pub fn parse_config_text(text: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .or_else(|| line.split_once(char::is_whitespace))
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
        if key.is_empty() || value.is_empty() || key.starts_with('-') {
            return Err(format!("line {}: expected `key = value`", lineno + 1));
        }
        out.push(format!("--{key}"));
        out.push(value.to_owned());
    }
    Ok(out)
}

fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    let finite = |name: &str, v: f64| {
        if v.is_finite() {
            Ok(())
        } else {
            Err(CliError::usage(format!("--{name} must be finite")))
        }
    };
    match &cfg.command {
        Command::Hom(a) => {
            if a.na + a.nb == 0 {
                return Err(CliError::usage("--na + --nb must be at least 1"));
            }
            finite("gamma", a.gamma)?;
        }
        Command::HomSeries(a) => {
            if a.na + a.nb == 0 {
                return Err(CliError::usage("--na + --nb must be at least 1"));
            }
            finite("gamma", a.gamma)?;
            check_window(a.t_max, a.points)?;
        }
        Command::ThreeWell(_) | Command::FourWell(_) => {}
        Command::Bell(a) => {
            if !(a.xi_step > 0.0) {
                return Err(CliError::usage("--xi-step must be positive"));
            }
            if !(a.xi_max > a.xi_min) {
                return Err(CliError::usage("--xi-max must exceed --xi-min"));
            }
            if !(a.t > 0.0) {
                return Err(CliError::usage("--t must be positive for the Bell protocol"));
            }
            if !(a.tol > 0.0) {
                return Err(CliError::usage("--tol must be positive"));
            }
        }
        Command::Meanfield(a) | Command::Selftrap(a) | Command::ConfigTrap(a) => {
            if a.n == 0 {
                return Err(CliError::usage("--n must be at least 1"));
            }
            if a.na0.is_some_and(|k| k > a.n) {
                return Err(CliError::usage("--na0 cannot exceed --n"));
            }
            if !(a.step > 0.0) {
                return Err(CliError::usage("--step must be positive"));
            }
            finite("gamma", a.gamma)?;
            check_window(a.t_max, a.points)?;
        }
        Command::Sweep(a) => {
            if a.na + a.nb == 0 {
                return Err(CliError::usage("--na + --nb must be at least 1"));
            }
            let grid = [a.gamma_min, a.gamma_max, a.gamma_step];
            if a.gammas.is_empty() && grid.iter().any(Option::is_none) {
                return Err(CliError::usage(
                    "sweep needs --gammas or all of --gamma-min/--gamma-max/--gamma-step",
                ));
            }
            if let [Some(lo), Some(hi), Some(step)] = grid {
                if !(step > 0.0) || !(hi >= lo) {
                    return Err(CliError::usage("invalid gamma grid"));
                }
            }
        }
        Command::Graph(a) => {
            if a.wells == 0 {
                return Err(CliError::usage("--wells must be at least 1"));
            }
        }
    }
    if let Some(path) = cfg.output() {
        check_writable(path)?;
    }
    Ok(())
}

fn check_window(t_max: f64, points: usize) -> Result<(), CliError> {
    if !(t_max > 0.0) {
        return Err(CliError::usage("--t-max must be positive"));
    }
    if points == 0 {
        return Err(CliError::usage("--points must be at least 1"));
    }
    Ok(())
}

fn check_writable(path: &Path) -> Result<(), CliError> {
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let err = |kind: std::io::ErrorKind, msg: &str| CliError::Io {
        path: path.to_path_buf(),
        source: std::io::Error::new(kind, msg.to_owned()),
    };
    if !parent.is_dir() {
        return Err(err(std::io::ErrorKind::NotFound, "output directory does not exist"));
    }
    if path.is_dir() {
        return Err(err(std::io::ErrorKind::InvalidInput, "output path is a directory"));
    }
    Ok(())
}
