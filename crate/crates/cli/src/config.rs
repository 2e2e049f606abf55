//! Run configuration: command-line flags layered over an optional
//! `key=value` file, then defaults.

use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use mzent_core::fock::MAX_TAIL_TOL;
use mzent_core::CutoffPolicy;

use crate::phase::parse_phi;

pub const DEFAULT_N: f64 = 3.0;
pub const DEFAULT_GAMMA: f64 = 0.5;
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;
pub const DEFAULT_PRECISION: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    /// One operating point.
    Point,
    /// epsilon over (gamma, phi) at fixed N.
    Fig2a,
    /// epsilon over N for several gamma at phi = pi/2.
    Fig2b,
    /// epsilon over gamma1 for several gamma2.
    Fig3,
    /// Coincidence-rate visibility over N.
    Fig4a,
    /// Photocurrent-difference visibility over N.
    Fig4b,
    /// Engine discrepancies on the standard validation grid.
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Gaussian,
    Fock,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Stdout,
    File(PathBuf),
}

#[derive(Debug, Parser, Default)]
#[command(
    name = "mzent",
    version,
    about = "Entanglement and fringe visibility at the output of a Mach-Zehnder interferometer \
             fed by two squeezed-coherent beams. Writes CSV.",
    after_help = "Flags override values read from --config. Config files hold key=value lines \
                  with the flag names as keys; '#' starts a comment.\n\n\
                  Exit status: 0 success, 2 bad arguments or parameters, 3 numerical or \
                  truncation failure."
)]
pub struct Cli {
    /// What to compute [default: point]
    #[arg(long, value_enum)]
    pub command: Option<CommandKind>,
    /// Mean photon number per beam [default: 3]
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<f64>,
    /// Squeezing fraction of beam a; for fig2b, fig4a, fig4b restricts the
    /// curve set to this value [default: 0.5 for point]
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// Squeezing fraction of beam b; for fig3 restricts the curve set
    /// [default: same as --gamma]
    #[arg(long, allow_negative_numbers = true)]
    pub gamma2: Option<f64>,
    /// Interferometer phase in radians; accepts forms like pi/2 or 3pi/4
    /// [default: pi/2]
    #[arg(long, value_parser = parse_phi, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Points per swept axis [default: 21 for fig2a and fig3, 40 for fig2b,
    /// fig4a and fig4b]
    #[arg(long)]
    pub grid: Option<usize>,
    /// Fock basis size per mode, or "auto" [default: auto]
    #[arg(long, value_parser = parse_dim)]
    pub dim: Option<CutoffPolicy>,
    /// Largest tolerated truncation loss for the Fock engine, in (0, 1e-4]
    /// [default: 1e-10]
    #[arg(long)]
    pub tail_tol: Option<f64>,
    /// Engine producing the numbers [default: gaussian]
    #[arg(long, value_enum)]
    pub engine: Option<EngineChoice>,
    /// Output file; "-" for standard output [default: -]
    #[arg(long)]
    pub output: Option<String>,
    /// Significant digits in the CSV, 3 to 17 [default: 9]
    #[arg(long)]
    pub precision: Option<usize>,
    /// key=value file with defaults for any of the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_dim(s: &str) -> Result<CutoffPolicy, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("auto") {
        return Ok(CutoffPolicy::Auto);
    }
    let d: usize = s.parse().map_err(|_| format!("dimension '{s}' is neither an integer nor auto"))?;
    if d < 2 {
        return Err(format!("dimension {d} must be >= 2"));
    }
    Ok(CutoffPolicy::Fixed(d))
}

fn parse_real(key: &str, s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("{key}: cannot read '{s}' as a number"))
}

fn parse_enum<T: ValueEnum>(key: &str, s: &str) -> Result<T, String> {
    T::from_str(s.trim(), true).map_err(|_| format!("{key}: unknown value '{s}'"))
}

impl Cli {
    /// Values from a config file, in the same shape as the flags.
    pub fn from_config_text(text: &str) -> Result<Cli, String> {
        let mut c = Cli::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", lineno + 1))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            let at = |e: String| format!("config line {}: {e}", lineno + 1);
            match key.as_str() {
                "command" => c.command = Some(parse_enum(&key, value).map_err(at)?),
                "n" => c.n = Some(parse_real(&key, value).map_err(at)?),
                "gamma" => c.gamma = Some(parse_real(&key, value).map_err(at)?),
                "gamma2" => c.gamma2 = Some(parse_real(&key, value).map_err(at)?),
                "phi" => c.phi = Some(parse_phi(value).map_err(at)?),
                "grid" => {
                    c.grid = Some(value.parse().map_err(|_| at(format!("grid: cannot read '{value}'")))?)
                }
                "dim" => c.dim = Some(parse_dim(value).map_err(at)?),
                "tail-tol" => c.tail_tol = Some(parse_real(&key, value).map_err(at)?),
                "engine" => c.engine = Some(parse_enum(&key, value).map_err(at)?),
                "output" => c.output = Some(value.to_string()),
                "precision" => {
                    c.precision =
                        Some(value.parse().map_err(|_| at(format!("precision: cannot read '{value}'")))?)
                }
                "config" => return Err(at("config files cannot include other config files".into())),
                other => return Err(at(format!("unknown key '{other}'"))),
            }
        }
        Ok(c)
    }

    /// Fields set here win over those of `base`.
    fn over(self, base: Cli) -> Cli {
        Cli {
            command: self.command.or(base.command),
            n: self.n.or(base.n),
            gamma: self.gamma.or(base.gamma),
            gamma2: self.gamma2.or(base.gamma2),
            phi: self.phi.or(base.phi),
            grid: self.grid.or(base.grid),
            dim: self.dim.or(base.dim),
            tail_tol: self.tail_tol.or(base.tail_tol),
            engine: self.engine.or(base.engine),
            output: self.output.or(base.output),
            precision: self.precision.or(base.precision),
            config: self.config,
        }
    }
}

/// Fully resolved settings of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n: f64,
    pub gamma: Option<f64>,
    pub gamma2: Option<f64>,
    pub phi: f64,
    pub grid: Option<usize>,
    pub dim: CutoffPolicy,
    pub tail_tol: f64,
    pub engine: EngineChoice,
    pub output: Output,
    pub precision: usize,
}

impl RunConfig {
    /// Merges flags over the config file named by `--config` (if any) and
    /// fills defaults. Only checks that do not need the numerics live here.
    pub fn resolve(cli: Cli) -> Result<RunConfig, String> {
        let merged = match &cli.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
                cli.over(Cli::from_config_text(&text)?)
            }
            None => cli,
        };
        let precision = merged.precision.unwrap_or(DEFAULT_PRECISION);
        if !(3..=17).contains(&precision) {
            return Err(format!("precision {precision} must lie in [3, 17]"));
        }
        let tail_tol = merged.tail_tol.unwrap_or(DEFAULT_TAIL_TOL);
        if !(tail_tol > 0.0 && tail_tol <= MAX_TAIL_TOL) {
            return Err(format!("tail-tol {tail_tol:e} must lie in (0, {MAX_TAIL_TOL:e}]"));
        }
        let command = merged.command.unwrap_or(CommandKind::Point);
        if let Some(g) = merged.grid {
            let min = match command {
                CommandKind::Fig2a | CommandKind::Fig3 => 16,
                _ => 2,
            };
            if g < min {
                return Err(format!("grid {g} too small; need >= {min}"));
            }
        }
        let output = match merged.output.as_deref() {
            None | Some("-") => Output::Stdout,
            Some(p) => Output::File(PathBuf::from(p)),
        };
        Ok(RunConfig {
            command,
            n: merged.n.unwrap_or(DEFAULT_N),
            gamma: merged.gamma,
            gamma2: merged.gamma2,
            phi: merged.phi.unwrap_or(FRAC_PI_2),
            grid: merged.grid,
            dim: merged.dim.unwrap_or(CutoffPolicy::Auto),
            tail_tol,
            engine: merged.engine.unwrap_or(EngineChoice::Gaussian),
            output,
            precision,
        })
    }
}
