use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::{
    exit_code, parse_grid, parse_int_range, ConfigOverrides, Format, RunConfig, Sig12, EXIT_OK, EXIT_VIOLATION,
};
use crate::digraph::{read_digraph, write_digraph, Digraph};
use crate::error::{Error, Result};
use crate::families::{g0_part_sizes, FamilySpec, TournamentKind, MAX_BRUTEFORCE_TOURNAMENT};
use crate::formulas::{compare_m_extremes, lambda_knkm, max_radius_vertex_connectivity, second_max_radius};
use crate::oracle::{explore_problem_4_1, extremal_scan, verify_theorem, Mode, Parameter, Status, TheoremId};
use crate::spectral::{check_alpha, spectral_radius};

/// Slack for the radius bound checks.
const CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "dgalpha", version, about = "A-alpha spectral radius of digraphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// key=value file; flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub max_iters: Option<usize>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Allow order-6 scans and the order-7 tournament search
    #[arg(long, global = true)]
    pub long_runs: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certified spectral radius of one digraph
    Radius {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        alpha: f64,
    },
    /// Check a theorem by enumeration (or on the primed families)
    Verify {
        theorem: String,
        #[arg(long)]
        n: usize,
        /// Comma list or grid
        #[arg(long, default_value = "0")]
        alpha: String,
        /// Where the witness of a violation is written
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
    /// CSV tables
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Closed forms
    Formula {
        #[command(subcommand)]
        kind: FormulaKind,
    },
    /// Write a family member in the digraph text format
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extremal values of the radius grouped by a parameter
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum)]
        parameter: ParamArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Compare G0 with the scan maximum over clique number d (exploratory)
    Explore {
        #[arg(long)]
        n: usize,
        /// Clique numbers; default 1..n-1
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value = "0,0.25,0.5,0.75")]
        alpha: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SweepKind {
    /// Closed form against the certified radius of K(n,k,m)
    Formula {
        #[arg(long)]
        n: String,
        #[arg(long)]
        alpha: String,
        /// Default: every legal k
        #[arg(long)]
        k: Option<String>,
        /// Default: every legal m
        #[arg(long)]
        m: Option<String>,
    },
    /// Radius of one digraph over an alpha grid
    Alpha {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FormulaKind {
    Knkm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        alpha: f64,
    },
    SecondMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
    },
    MaxKappa {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: f64,
    },
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    Cng,
    Bnd,
    Knkm,
    Tournament,
    G0,
    H4,
    Circulant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Transitive,
    Rotational,
    BrualdiLi,
    Extremal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Girth,
    Clique,
    VertexConn,
    ArcConn,
    ArcConnTight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Min,
    Max,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Digraph text file
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub family: OptFamilyArgs,
}

#[derive(Debug, Args)]
pub struct OptFamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub primed: bool,
    /// Circulant steps, comma separated
    #[arg(long)]
    pub steps: Option<String>,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// α used to choose extremal tournaments (tournament, g0)
    #[arg(long)]
    pub family_alpha: Option<f64>,
}

impl FamilyParams {
    fn spec(&self, name: FamilyName, default_alpha: f64) -> Result<FamilySpec> {
        fn need(v: Option<usize>, flag: &str) -> Result<usize> {
            v.ok_or_else(|| Error::Parameter(format!("this family needs --{flag}")))
        }
        let n = need(self.n, "n")?;
        let alpha = self.family_alpha.unwrap_or(default_alpha);
        Ok(match name {
            FamilyName::Path => FamilySpec::Path { n },
            FamilyName::Cycle => FamilySpec::Cycle { n },
            FamilyName::Complete => FamilySpec::Complete { n },
            FamilyName::Cng => FamilySpec::Cng {
                n,
                g: need(self.g, "g")?,
                primed: self.primed,
            },
            FamilyName::Bnd => FamilySpec::Bnd {
                n,
                d: need(self.d, "d")?,
                primed: self.primed,
            },
            FamilyName::Knkm => FamilySpec::Knkm {
                n,
                k: need(self.k, "k")?,
                m: need(self.m, "m")?,
            },
            FamilyName::Tournament => FamilySpec::Tournament {
                kind: match self.kind {
                    Some(KindArg::Transitive) => TournamentKind::Transitive,
                    Some(KindArg::Rotational) => TournamentKind::Rotational,
                    Some(KindArg::BrualdiLi) => TournamentKind::BrualdiLi,
                    Some(KindArg::Extremal) => TournamentKind::ExtremalBruteforce,
                    None => return Err(Error::Parameter("tournament needs --kind".into())),
                },
                n,
                alpha,
            },
            FamilyName::G0 => FamilySpec::G0 {
                n,
                d: need(self.d, "d")?,
                alpha,
            },
            FamilyName::H4 => FamilySpec::H4 {
                n,
                k: need(self.k, "k")?,
                a: need(self.a, "a")?,
            },
            FamilyName::Circulant => FamilySpec::Circulant {
                n,
                steps: parse_int_range(self.steps.as_deref().unwrap_or("1"))?,
            },
        })
    }
}

/// Refuses the order-7 tournament search unless long runs are enabled.
fn check_long_family(spec: &FamilySpec, cfg: &RunConfig) -> Result<()> {
    let largest = match *spec {
        FamilySpec::Tournament {
            kind: TournamentKind::ExtremalBruteforce,
            n,
            ..
        } => n,
        FamilySpec::G0 { n, d, alpha } if alpha > 0.0 && d >= 1 && d <= n => {
            g0_part_sizes(n, d).into_iter().max().unwrap_or(0)
        }
        _ => 0,
    };
    if largest == MAX_BRUTEFORCE_TOURNAMENT && !cfg.long_runs_enabled {
        return Err(Error::LongRunRequired { n: largest });
    }
    Ok(())
}

fn build_family(name: FamilyName, params: &FamilyParams, alpha: f64, cfg: &RunConfig) -> Result<Digraph> {
    let spec = params.spec(name, alpha)?;
    check_long_family(&spec, cfg)?;
    spec.build()
}

impl InputArgs {
    fn load(&self, alpha: f64, cfg: &RunConfig) -> Result<Digraph> {
        match (&self.file, self.family.family) {
            (Some(path), _) => read_digraph(path),
            (None, Some(name)) => build_family(name, &self.family.params, alpha, cfg),
            (None, None) => Err(Error::Parameter("give --file or --family".into())),
        }
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli, &mut io) {
        Ok(code) => code,
        // A closed downstream pipe (`| head`) is not a failure.
        Err(Error::Output {
            kind: std::io::ErrorKind::BrokenPipe,
            ..
        }) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn config(g: &GlobalArgs) -> Result<RunConfig> {
    let flags = ConfigOverrides {
        tol: g.tol,
        max_iters: g.max_iters,
        workers: g.workers,
        long_runs: g.long_runs.then_some(true),
        format: g.format,
    };
    let file = match &g.config {
        Some(p) => ConfigOverrides::read(p)?,
        None => ConfigOverrides::default(),
    };
    RunConfig::resolve(flags.or(file))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Output {
        kind: e.kind(),
        msg: e.to_string(),
    }
}

fn json<T: Serialize>(io: &mut Io, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Parameter(e.to_string()))?;
    writeln!(io.out, "{s}").map_err(io_err)
}

fn dispatch(cli: Cli, io: &mut Io) -> Result<i32> {
    let cfg = config(&cli.global)?;
    match cli.command {
        Command::Radius { input, alpha } => cmd_radius(&input, alpha, &cfg, io),
        Command::Verify {
            theorem,
            n,
            alpha,
            witness_dir,
        } => cmd_verify(&theorem, n, &alpha, &witness_dir, &cfg, io),
        Command::Sweep { kind } => match kind {
            SweepKind::Formula { n, alpha, k, m } => {
                cmd_sweep_formula(&n, &alpha, k.as_deref(), m.as_deref(), &cfg, io)
            }
            SweepKind::Alpha { input, alpha } => cmd_sweep_alpha(&input, &alpha, &cfg, io),
        },
        Command::Formula { kind } => cmd_formula(kind, &cfg, io),
        Command::Generate { family, out } => {
            let g = build_family(family.family, &family.params, 0.0, &cfg)?;
            let text = write_digraph(&g);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))?,
                None => write!(io.out, "{text}").map_err(io_err)?,
            }
            Ok(EXIT_OK)
        }
        Command::Scan {
            n,
            alpha,
            parameter,
            mode,
        } => {
            let parameter = match parameter {
                ParamArg::Girth => Parameter::Girth,
                ParamArg::Clique => Parameter::Clique,
                ParamArg::VertexConn => Parameter::VertexConn,
                ParamArg::ArcConn => Parameter::ArcConn,
                ParamArg::ArcConnTight => Parameter::ArcConnTight,
            };
            let mode = if mode == ModeArg::Min { Mode::Min } else { Mode::Max };
            let report = extremal_scan(n, alpha, parameter, mode, &cfg.scan_config())?;
            if cfg.format == Some(Format::Text) {
                for g in &report.groups {
                    writeln!(
                        io.out,
                        "{:?}={} members={} extremum={} classes={}",
                        parameter,
                        g.value,
                        g.members,
                        Sig12(g.extremum),
                        g.classes.len()
                    )
                    .map_err(io_err)?;
                }
            } else {
                json(io, &report)?;
            }
            Ok(EXIT_OK)
        }
        Command::Explore { n, d, alpha } => {
            let ds = match d {
                Some(d) => parse_int_range(&d)?,
                None => (1..n).collect(),
            };
            let report = explore_problem_4_1(n, &ds, &parse_grid(&alpha)?, &cfg.scan_config())?;
            match cfg.format {
                Some(Format::Json) => json(io, &report)?,
                Some(Format::Csv) => {
                    writeln!(io.out, "n,d,alpha,g0_radius,scan_max,gap,agree,note").map_err(io_err)?;
                    for r in &report.rows {
                        let opt = |v: Option<f64>| v.map_or(String::new(), |v| Sig12(v).to_string());
                        writeln!(
                            io.out,
                            "{},{},{},{},{},{},{},{}",
                            r.n,
                            r.d,
                            Sig12(r.alpha),
                            Sig12(r.g0_radius),
                            opt(r.scan_max),
                            opt(r.gap),
                            r.agree.map_or(String::new(), |a| a.to_string()),
                            r.note
                        )
                        .map_err(io_err)?;
                    }
                }
                _ => write!(io.out, "{report}").map_err(io_err)?,
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct NamedCheck {
    name: &'static str,
    pass: bool,
}

#[derive(Serialize)]
struct RadiusReport {
    radius: f64,
    lo: f64,
    hi: f64,
    perron: Vec<f64>,
    checks: Vec<NamedCheck>,
}

fn cmd_radius(input: &InputArgs, alpha: f64, cfg: &RunConfig, io: &mut Io) -> Result<i32> {
    check_alpha(alpha)?;
    let g = input.load(alpha, cfg)?;
    let r = spectral_radius(&g, alpha, &cfg.power_options())?;
    let p = g.degree_profile();
    let lam = r.radius;
    let n1 = (g.order() - 1) as f64;
    let checks = vec![
        NamedCheck {
            name: "alpha*max_out < radius",
            pass: lam - alpha * p.max_out as f64 > if alpha == 0.0 { 0.0 } else { CHECK_TOL },
        },
        NamedCheck {
            name: "radius <= n-1",
            pass: lam <= n1 + CHECK_TOL,
        },
        NamedCheck {
            name: "min_out <= radius",
            pass: p.min_out as f64 <= lam + CHECK_TOL,
        },
        NamedCheck {
            name: "radius <= max_out",
            pass: lam <= p.max_out as f64 + CHECK_TOL,
        },
    ];
    let report = RadiusReport {
        radius: lam,
        lo: r.certificate_lo,
        hi: r.certificate_hi,
        perron: r.perron_vector,
        checks,
    };
    match cfg.format {
        Some(Format::Text) => {
            writeln!(io.out, "radius {}", Sig12(report.radius)).map_err(io_err)?;
            writeln!(io.out, "certificate [{}, {}]", Sig12(report.lo), Sig12(report.hi)).map_err(io_err)?;
            let perron: Vec<String> = report.perron.iter().map(|x| Sig12(*x).to_string()).collect();
            writeln!(io.out, "perron {}", perron.join(" ")).map_err(io_err)?;
            for c in &report.checks {
                writeln!(io.out, "{} {}", if c.pass { "pass" } else { "FAIL" }, c.name).map_err(io_err)?;
            }
        }
        Some(Format::Csv) => {
            writeln!(io.out, "radius,lo,hi").map_err(io_err)?;
            writeln!(io.out, "{},{},{}", Sig12(report.radius), Sig12(report.lo), Sig12(report.hi))
                .map_err(io_err)?;
        }
        _ => json(io, &report)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    theorem: &str,
    n: usize,
    alpha: &str,
    witness_dir: &std::path::Path,
    cfg: &RunConfig,
    io: &mut Io,
) -> Result<i32> {
    let id: TheoremId = theorem.parse()?;
    let alphas = parse_grid(alpha)?;
    let verdict = verify_theorem(id, n, &alphas, &cfg.scan_config())?;
    if cfg.format == Some(Format::Text) {
        writeln!(io.out, "{id} n={n}: {:?}", verdict.status).map_err(io_err)?;
        for c in &verdict.checks {
            writeln!(io.out, "  alpha={} {} {:?}: {}", Sig12(c.alpha), c.case, c.status, c.detail)
                .map_err(io_err)?;
        }
    } else {
        json(io, &verdict)?;
    }
    if verdict.status != Status::Violated {
        return Ok(EXIT_OK);
    }
    if let Some(w) = &verdict.witness {
        let path = witness_dir.join(format!("witness_{}_n{n}.dg", id.label().replace('.', "_")));
        std::fs::write(&path, write_digraph(w))
            .map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))?;
        writeln!(io.err, "violation witness written to {}", path.display()).map_err(io_err)?;
    }
    Ok(EXIT_VIOLATION)
}

#[derive(Serialize)]
struct FormulaRow {
    n: usize,
    k: usize,
    m: usize,
    alpha: f64,
    formula: f64,
    numeric: f64,
    abs_err: f64,
}

fn cmd_sweep_formula(
    n: &str,
    alpha: &str,
    k: Option<&str>,
    m: Option<&str>,
    cfg: &RunConfig,
    io: &mut Io,
) -> Result<i32> {
    let ns = parse_int_range(n)?;
    let alphas = parse_grid(alpha)?;
    let ks = k.map(parse_int_range).transpose()?;
    let ms = m.map(parse_int_range).transpose()?;
    for &a in &alphas {
        check_alpha(a)?;
    }
    let mut rows = Vec::new();
    for &n in &ns {
        for k in 1..=n.saturating_sub(2) {
            if ks.as_ref().is_some_and(|ks| !ks.contains(&k)) {
                continue;
            }
            for m in 1..n - k {
                if ms.as_ref().is_some_and(|ms| !ms.contains(&m)) {
                    continue;
                }
                let g = crate::families::k_nkm(n, k, m)?;
                for &a in &alphas {
                    let formula = lambda_knkm(n, k, m, a)?;
                    let numeric = spectral_radius(&g, a, &cfg.power_options())?.radius;
                    rows.push(FormulaRow {
                        n,
                        k,
                        m,
                        alpha: a,
                        formula,
                        numeric,
                        abs_err: (formula - numeric).abs(),
                    });
                }
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Parameter("no legal (n, k, m) in the given ranges".into()));
    }
    if cfg.format == Some(Format::Json) {
        json(io, &rows)?;
    } else {
        writeln!(io.out, "n,k,m,alpha,formula,numeric,abs_err").map_err(io_err)?;
        for r in &rows {
            writeln!(
                io.out,
                "{},{},{},{},{},{},{}",
                r.n,
                r.k,
                r.m,
                Sig12(r.alpha),
                Sig12(r.formula),
                Sig12(r.numeric),
                Sig12(r.abs_err)
            )
            .map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct AlphaRow {
    alpha: f64,
    radius: f64,
    lo: f64,
    hi: f64,
}

fn cmd_sweep_alpha(input: &InputArgs, alpha: &str, cfg: &RunConfig, io: &mut Io) -> Result<i32> {
    let alphas = parse_grid(alpha)?;
    for &a in &alphas {
        check_alpha(a)?;
    }
    let g = input.load(0.0, cfg)?;
    let rows = alphas
        .iter()
        .map(|&a| {
            let r = spectral_radius(&g, a, &cfg.power_options())?;
            Ok(AlphaRow {
                alpha: a,
                radius: r.radius,
                lo: r.certificate_lo,
                hi: r.certificate_hi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if cfg.format == Some(Format::Json) {
        json(io, &rows)?;
    } else {
        writeln!(io.out, "alpha,radius,lo,hi").map_err(io_err)?;
        for r in &rows {
            writeln!(io.out, "{},{},{},{}", Sig12(r.alpha), Sig12(r.radius), Sig12(r.lo), Sig12(r.hi))
                .map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_formula(kind: FormulaKind, cfg: &RunConfig, io: &mut Io) -> Result<i32> {
    let value = match kind {
        FormulaKind::Knkm { n, k, m, alpha } => lambda_knkm(n, k, m, alpha)?,
        FormulaKind::SecondMax { n, alpha } => second_max_radius(n, alpha)?,
        FormulaKind::MaxKappa { n, k, alpha } => max_radius_vertex_connectivity(n, k, alpha)?,
        FormulaKind::Compare { n, k, alpha } => {
            let c = compare_m_extremes(n, k, alpha)?;
            if cfg.format == Some(Format::Json) {
                json(io, &c)?;
            } else {
                writeln!(
                    io.out,
                    "{:?} m=1: {} m=n-k-1: {}",
                    c.verdict,
                    Sig12(c.at_m_one),
                    Sig12(c.at_m_max)
                )
                .map_err(io_err)?;
            }
            return Ok(EXIT_OK);
        }
    };
    if cfg.format == Some(Format::Json) {
        json(io, &serde_json::json!({ "value": value }))?;
    } else {
        writeln!(io.out, "{}", Sig12(value)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}
