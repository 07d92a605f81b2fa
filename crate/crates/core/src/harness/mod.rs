//! Command-line surface: run configuration, value grids, CSV formatting
//! and the subcommands behind the `dgalpha` binary.
//!
//! Exit codes: 0 ok, 2 usage or invalid input, 3 failed precondition
//! (not strongly connected, long run not enabled), 4 theorem violation.

mod cli;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::ScanConfig;
use crate::spectral::{PowerOptions, DEFAULT_MAX_ITERS, DEFAULT_TOL};

pub use cli::{run, Cli};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotStronglyConnected(_) | Error::LongRunRequired { .. } => EXIT_PRECONDITION,
        _ => EXIT_INPUT,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tol: f64,
    pub max_iters: usize,
    pub workers: usize,
    /// Gates order-6 scans and the order-7 tournament search.
    pub long_runs_enabled: bool,
    /// `None` picks each command's natural format.
    pub format: Option<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tol: DEFAULT_TOL,
            max_iters: DEFAULT_MAX_ITERS,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            long_runs_enabled: false,
            format: None,
        }
    }
}

/// Settings given explicitly, by flag or config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub tol: Option<f64>,
    pub max_iters: Option<usize>,
    pub workers: Option<usize>,
    pub long_runs: Option<bool>,
    pub format: Option<Format>,
}

impl ConfigOverrides {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = ConfigOverrides::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |_| err(format!("bad value {value:?} for {key}"));
            match key {
                "tol" => c.tol = Some(value.parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?),
                "max_iters" => c.max_iters = Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?),
                "workers" => c.workers = Some(value.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?),
                "long_runs" | "long_runs_enabled" => {
                    c.long_runs = Some(value.parse().map_err(|e: std::str::ParseBoolError| bad(e.to_string()))?)
                }
                "format" => c.format = Some(value.parse().map_err(|e: Error| bad(e.to_string()))?),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(c)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// `self` wins over `fallback`.
    pub fn or(self, fallback: ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            tol: self.tol.or(fallback.tol),
            max_iters: self.max_iters.or(fallback.max_iters),
            workers: self.workers.or(fallback.workers),
            long_runs: self.long_runs.or(fallback.long_runs),
            format: self.format.or(fallback.format),
        }
    }
}

impl RunConfig {
    /// Applies overrides on top of the defaults and validates.
    pub fn resolve(o: ConfigOverrides) -> Result<RunConfig> {
        let d = RunConfig::default();
        let cfg = RunConfig {
            tol: o.tol.unwrap_or(d.tol),
            max_iters: o.max_iters.unwrap_or(d.max_iters),
            workers: o.workers.unwrap_or(d.workers),
            long_runs_enabled: o.long_runs.unwrap_or(d.long_runs_enabled),
            format: o.format,
        };
        if !(cfg.tol > 0.0) {
            return Err(Error::BadTolerance(cfg.tol));
        }
        if cfg.workers == 0 {
            return Err(Error::Parameter("workers must be at least 1".into()));
        }
        Ok(cfg)
    }

    pub fn power_options(&self) -> PowerOptions {
        PowerOptions {
            tol: self.tol,
            max_iters: self.max_iters,
        }
    }

    pub fn scan_config(&self) -> ScanConfig {
        ScanConfig {
            opts: self.power_options(),
            workers: Some(self.workers),
            long_runs: self.long_runs_enabled,
        }
    }
}

/// Parses a real grid: `a,b,c`, `a,b,...,z` (step `b - a`, `z` included)
/// or `a..z/step` (`z` included).
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let bad = |msg: &str| Error::Parameter(format!("grid {s:?}: {msg}"));
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad(&format!("{t:?} is not a number")));
    if let Some((range, step)) = s.split_once('/') {
        let (a, z) = range.split_once("..").ok_or_else(|| bad("expected a..b/step"))?;
        return progression(num(a)?, num(z)?, num(step)?).ok_or_else(|| bad("empty or ill-formed range"));
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if let Some(pos) = parts.iter().position(|&p| p == "...") {
        if pos != 2 || parts.len() != 4 {
            return Err(bad("expected a,b,...,z"));
        }
        let (a, b, z) = (num(parts[0])?, num(parts[1])?, num(parts[3])?);
        return progression(a, z, b - a).ok_or_else(|| bad("empty or ill-formed range"));
    }
    parts.iter().map(|p| num(p)).collect()
}

fn progression(a: f64, z: f64, step: f64) -> Option<Vec<f64>> {
    if !(step > 0.0) || !a.is_finite() || !z.is_finite() || z < a {
        return None;
    }
    let count = ((z - a) / step + 1e-9).floor() as usize + 1;
    Some((0..count).map(|i| round_grid(a + i as f64 * step)).collect())
}

/// Snaps accumulated grid values to 12 decimals (`0.1 * 3` becomes `0.3`).
fn round_grid(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// Parses `a..b` (inclusive), `a,b,c` or a single integer.
pub fn parse_int_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parameter(format!("integer range {s:?}: expected a..b, a,b,c or a"));
    let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (int(a)?, int(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(int).collect()
}

/// A real with 12 significant digits, '.' decimal point.
pub struct Sig12(pub f64);

impl fmt::Display for Sig12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.0;
        if x == 0.0 || !x.is_finite() {
            return write!(f, "{}", if x == 0.0 { 0.0 } else { x });
        }
        let sci = format!("{x:.11e}");
        if x.abs() < 1e-4 || x.abs() >= 1e15 {
            let (mantissa, exp) = sci.split_once('e').unwrap();
            let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
            return write!(f, "{mantissa}e{exp}");
        }
        let rounded: f64 = sci.parse().unwrap();
        write!(f, "{rounded}")
    }
}
