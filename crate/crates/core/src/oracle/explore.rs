//! Numerical comparison of `G0` against the true maximum over the
//! digraphs of clique number `d`. Nothing here is a verdict.

use std::fmt;

use serde::Serialize;

use super::report::GroupReport;
use super::survey::{Mode, Parameter, Survey};
use super::{ScanConfig, ATTAIN_TOL};
use crate::digraph::{clique_number, is_strongly_connected, Digraph};
use crate::error::{Error, Result};
use crate::families::g0;
use crate::spectral::spectral_radius_general;

pub const EXPLORATORY_LABEL: &str = "exploratory — open problem";

/// Largest order explored.
pub const MAX_EXPLORE_ORDER: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct Problem41Row {
    pub n: usize,
    pub d: usize,
    pub alpha: f64,
    pub g0: Digraph,
    pub g0_radius: f64,
    pub g0_strong: bool,
    pub g0_clique: usize,
    /// Maximum over strongly connected digraphs with clique number `d`;
    /// `None` when that class is empty.
    pub scan_max: Option<f64>,
    /// `scan_max - g0_radius`.
    pub gap: Option<f64>,
    /// True when `G0` lies in the class and reaches the scan maximum.
    pub agree: Option<bool>,
    /// Maximizing classes of the scan.
    pub maximizers: Vec<Digraph>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Problem41Report {
    pub label: &'static str,
    pub n: usize,
    pub rows: Vec<Problem41Row>,
}

impl Problem41Report {
    /// Largest gap among rows at α = 0.
    pub fn max_gap_at_zero(&self) -> Option<f64> {
        self.rows
            .iter()
            .filter(|r| r.alpha == 0.0)
            .filter_map(|r| r.gap)
            .fold(None, |acc, g| Some(acc.map_or(g, |a: f64| a.max(g))))
    }
}

impl fmt::Display for Problem41Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} (n = {})", self.label, self.n)?;
        writeln!(f, "{:>2} {:>5} {:>14} {:>14} {:>12}  note", "d", "alpha", "g0", "scan max", "gap")?;
        for r in &self.rows {
            let opt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v:.10}"));
            writeln!(
                f,
                "{:>2} {:>5} {:>14.10} {:>14} {:>12}  {}",
                r.d,
                r.alpha,
                r.g0_radius,
                opt(r.scan_max),
                r.gap.map_or("-".to_string(), |g| format!("{g:.3e}")),
                r.note
            )?;
        }
        Ok(())
    }
}

/// Compares λα(G0) with the scan maximum over clique number `d` for every
/// α in `alphas` and every `d` in `ds`.
pub fn explore_problem_4_1(n: usize, ds: &[usize], alphas: &[f64], cfg: &ScanConfig) -> Result<Problem41Report> {
    if n > MAX_EXPLORE_ORDER {
        return Err(Error::Parameter(format!(
            "exploration is limited to n <= {MAX_EXPLORE_ORDER}, got {n}"
        )));
    }
    for &d in ds {
        if d == 0 || d >= n {
            return Err(Error::Parameter(format!("need 1 <= d <= n-1, got d={d} at n={n}")));
        }
    }
    let survey = Survey::build(n, alphas, cfg)?;
    explore_on_survey(&survey, ds, cfg)
}

/// Same as [`explore_problem_4_1`] on an existing scan.
pub fn explore_on_survey(survey: &Survey, ds: &[usize], cfg: &ScanConfig) -> Result<Problem41Report> {
    let n = survey.n;
    let mut rows = Vec::new();
    for &d in ds {
        for (ai, &alpha) in survey.alphas.iter().enumerate() {
            let g = g0(n, d, alpha)?;
            let g0_radius = spectral_radius_general(&g, alpha, &cfg.opts)?.radius;
            let g0_strong = is_strongly_connected(&g);
            let g0_clique = clique_number(&g);
            let group = survey
                .group(ai, Parameter::Clique, Mode::Max, d)
                .map(|e| GroupReport::from_extremum(n, d, e));
            let scan_max = group.as_ref().map(|gr| gr.extremum);
            let gap = scan_max.map(|m| m - g0_radius);
            let in_class = g0_strong && g0_clique == d;
            let agree = gap.map(|gap| in_class && gap.abs() <= ATTAIN_TOL);
            let note = match (group.is_some(), in_class, agree) {
                (false, _, _) => "class is empty".to_string(),
                (_, false, _) if !g0_strong => "G0 is not strongly connected".to_string(),
                (_, false, _) => format!("G0 has clique number {g0_clique}"),
                (_, _, Some(true)) => "G0 attains the maximum".to_string(),
                _ => "G0 falls short of the maximum".to_string(),
            };
            rows.push(Problem41Row {
                n,
                d,
                alpha,
                g0: g,
                g0_radius,
                g0_strong,
                g0_clique,
                scan_max,
                gap,
                agree,
                maximizers: group
                    .map(|gr| gr.classes.into_iter().map(|c| c.representative).collect())
                    .unwrap_or_default(),
                note,
            });
        }
    }
    Ok(Problem41Report {
        label: EXPLORATORY_LABEL,
        n,
        rows,
    })
}
