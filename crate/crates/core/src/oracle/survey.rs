use std::collections::BTreeMap;
use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{ExtremalReport, GroupReport};
use super::{cell_count, check_order, strong_in_range, ScanConfig, ATTAIN_TOL};
use crate::digraph::{arc_connectivity, clique_number, girth, vertex_connectivity, Digraph};
use crate::error::Result;
use crate::spectral::{check_alpha, spectral_radius};

/// Codes per work unit.
const CHUNK: u64 = 1 << 14;
/// Numerical slack for the bound suite.
const BOUND_TOL: f64 = 1e-9;
/// Violations kept verbatim per α; the rest are only counted.
const KEEP_VIOLATIONS: usize = 16;

/// Grouping parameter for extremal scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parameter {
    Girth,
    Clique,
    VertexConn,
    ArcConn,
    /// Arc connectivity, restricted to digraphs with κ′ = δ⁰.
    ArcConnTight,
}

impl Parameter {
    pub const ALL: [Parameter; 5] = [
        Parameter::Girth,
        Parameter::Clique,
        Parameter::VertexConn,
        Parameter::ArcConn,
        Parameter::ArcConnTight,
    ];

    pub fn key(self, p: &Profile) -> Option<usize> {
        match self {
            Parameter::Girth => Some(p.girth),
            Parameter::Clique => Some(p.clique),
            Parameter::VertexConn => Some(p.vertex_conn),
            Parameter::ArcConn => Some(p.arc_conn),
            Parameter::ArcConnTight => {
                (p.arc_conn == p.min_out.min(p.min_in)).then_some(p.arc_conn)
            }
        }
    }

    pub fn of_digraph(self, g: &Digraph) -> Option<usize> {
        let profile = Profile::of(0, g, &[], &Default::default()).ok()?;
        self.key(&profile)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Mode {
    Min,
    Max,
}

/// Everything a scan records about one strongly connected digraph.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub code: u64,
    pub n: usize,
    pub arcs: usize,
    pub girth: usize,
    pub clique: usize,
    pub vertex_conn: usize,
    pub arc_conn: usize,
    pub min_out: usize,
    pub max_out: usize,
    pub min_in: usize,
    pub max_in: usize,
    /// λα for each α of the scan, in order.
    pub radii: Vec<f64>,
}

impl Profile {
    /// Profiles a strongly connected digraph with `n >= 2`.
    pub fn of(
        code: u64,
        g: &Digraph,
        alphas: &[f64],
        opts: &crate::spectral::PowerOptions,
    ) -> Result<Profile> {
        let deg = g.degree_profile();
        let radii = alphas
            .iter()
            .map(|&a| spectral_radius(g, a, opts).map(|r| r.radius))
            .collect::<Result<_>>()?;
        Ok(Profile {
            code,
            n: g.order(),
            arcs: g.arc_count(),
            girth: girth(g).expect("strongly connected digraphs have cycles"),
            clique: clique_number(g),
            vertex_conn: vertex_connectivity(g)?,
            arc_conn: arc_connectivity(g)?,
            min_out: deg.min_out,
            max_out: deg.max_out,
            min_in: deg.min_in,
            max_in: *deg.in_degrees.iter().max().unwrap(),
            radii,
        })
    }

    pub fn is_cycle(&self) -> bool {
        self.max_out == 1
    }

    pub fn is_complete(&self) -> bool {
        self.arcs == self.n * (self.n - 1)
    }

    pub fn is_out_regular(&self) -> bool {
        self.min_out == self.max_out
    }
}

/// Running extremum of a group: the best value, every member within
/// [`ATTAIN_TOL`] of the running best, and the best value outside it.
/// The final attaining set does not depend on insertion order.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Extremum {
    sign: f64,
    best: f64,
    candidates: Vec<(u64, f64)>,
    runner_up: f64,
    members: u64,
}

impl Extremum {
    fn new(mode: Mode) -> Self {
        Extremum {
            sign: if mode == Mode::Max { 1.0 } else { -1.0 },
            best: f64::NEG_INFINITY,
            candidates: Vec::new(),
            runner_up: f64::NEG_INFINITY,
            members: 0,
        }
    }

    fn push(&mut self, code: u64, value: f64) {
        self.members += 1;
        let key = self.sign * value;
        if key > self.best {
            self.best = key;
            self.prune();
        }
        if key >= self.best - ATTAIN_TOL {
            self.candidates.push((code, key));
        } else {
            self.runner_up = self.runner_up.max(key);
        }
    }

    fn prune(&mut self) {
        let cut = self.best - ATTAIN_TOL;
        let runner = &mut self.runner_up;
        self.candidates.retain(|&(_, k)| {
            if k < cut {
                *runner = runner.max(k);
                false
            } else {
                true
            }
        });
    }

    fn merge(&mut self, other: Extremum) {
        self.members += other.members;
        self.best = self.best.max(other.best);
        self.runner_up = self.runner_up.max(other.runner_up);
        self.candidates.extend(other.candidates);
        self.prune();
        self.candidates.sort_by_key(|&(c, _)| c);
    }

    /// Extremal value (in the group's own sign).
    pub(crate) fn value(&self) -> f64 {
        self.sign * self.best
    }

    /// Attaining `(code, value)` pairs sorted by code.
    pub(crate) fn attaining(&self) -> Vec<(u64, f64)> {
        let mut v: Vec<_> = self
            .candidates
            .iter()
            .map(|&(c, k)| (c, self.sign * k))
            .collect();
        v.sort_by_key(|&(c, _)| c);
        v
    }

    /// Distance from the extremum to the best non-attaining value.
    pub(crate) fn runner_up_gap(&self) -> Option<f64> {
        self.runner_up
            .is_finite()
            .then(|| self.best - self.runner_up)
    }

    pub(crate) fn members(&self) -> u64 {
        self.members
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundViolation {
    pub code: u64,
    pub radius: f64,
    pub reason: String,
}

/// Outcome of the bound suite over every scanned digraph at one α.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct BoundTally {
    pub checked: u64,
    pub violation_count: u64,
    pub violations: Vec<BoundViolation>,
}

impl BoundTally {
    fn record(&mut self, p: &Profile, alpha: f64, lam: f64) {
        self.checked += 1;
        let n1 = (p.n - 1) as f64;
        let near = |a: f64, b: f64| (a - b).abs() <= BOUND_TOL;
        let (dmin, dmax) = (p.min_out as f64, p.max_out as f64);
        let mut fail = |reason: String| {
            self.violation_count += 1;
            if self.violations.len() < KEEP_VIOLATIONS {
                self.violations.push(BoundViolation {
                    code: p.code,
                    radius: lam,
                    reason,
                });
            }
        };
        if lam < 1.0 - BOUND_TOL || lam > n1 + BOUND_TOL {
            fail(format!("radius outside [1, {n1}]"));
        }
        if near(lam, 1.0) != p.is_cycle() {
            fail("radius 1 does not coincide with the directed cycle".into());
        }
        if near(lam, n1) != p.is_complete() {
            fail("radius n-1 does not coincide with the complete digraph".into());
        }
        if alpha > 0.0 && lam - alpha * dmax <= BOUND_TOL {
            fail(format!("radius not above alpha * max out-degree = {}", alpha * dmax));
        }
        if lam < dmin - BOUND_TOL || lam > dmax + BOUND_TOL {
            fail(format!("radius outside out-degree range [{dmin}, {dmax}]"));
        }
        let regular = p.is_out_regular();
        if near(lam, dmin) != regular || near(lam, dmax) != regular {
            fail("row-sum bound equality does not match out-regularity".into());
        }
    }

    fn merge(&mut self, other: BoundTally) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEEP_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct AlphaSurvey {
    groups: BTreeMap<(Parameter, Mode, usize), Extremum>,
    /// Maximum over every digraph other than the complete one.
    non_complete: Extremum,
    overall: Extremum,
    bounds: BoundTally,
}

impl AlphaSurvey {
    fn new() -> Self {
        AlphaSurvey {
            groups: BTreeMap::new(),
            non_complete: Extremum::new(Mode::Max),
            overall: Extremum::new(Mode::Max),
            bounds: BoundTally::default(),
        }
    }

    fn push(&mut self, p: &Profile, alpha: f64, lam: f64) {
        for param in Parameter::ALL {
            if let Some(key) = param.key(p) {
                for mode in [Mode::Min, Mode::Max] {
                    self.groups
                        .entry((param, mode, key))
                        .or_insert_with(|| Extremum::new(mode))
                        .push(p.code, lam);
                }
            }
        }
        self.overall.push(p.code, lam);
        if !p.is_complete() {
            self.non_complete.push(p.code, lam);
        }
        self.bounds.record(p, alpha, lam);
    }

    fn merge(&mut self, other: AlphaSurvey) {
        for (key, ext) in other.groups {
            match self.groups.get_mut(&key) {
                Some(mine) => mine.merge(ext),
                None => {
                    self.groups.insert(key, ext);
                }
            }
        }
        self.non_complete.merge(other.non_complete);
        self.overall.merge(other.overall);
        self.bounds.merge(other.bounds);
    }
}

/// One pass over every strongly connected digraph on `n` vertices,
/// evaluated at several α at once. Work is split into contiguous code
/// ranges; partial results merge in range order.
#[derive(Debug, Clone, PartialEq)]
pub struct Survey {
    pub n: usize,
    pub alphas: Vec<f64>,
    pub strong_count: u64,
    per_alpha: Vec<AlphaSurvey>,
}

impl Survey {
    pub fn build(n: usize, alphas: &[f64], cfg: &ScanConfig) -> Result<Survey> {
        check_order(n, cfg.long_runs)?;
        for &a in alphas {
            check_alpha(a)?;
        }
        let total = 1u64 << cell_count(n);
        let chunks = total.div_ceil(CHUNK);
        let partials: Vec<Survey> = cfg.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| Survey::scan_range(n, alphas, c * CHUNK..((c + 1) * CHUNK).min(total), cfg))
                .collect::<Result<_>>()
        })??;
        let mut acc = Survey::empty(n, alphas);
        for part in partials {
            acc.merge(part);
        }
        Ok(acc)
    }

    fn empty(n: usize, alphas: &[f64]) -> Survey {
        Survey {
            n,
            alphas: alphas.to_vec(),
            strong_count: 0,
            per_alpha: alphas.iter().map(|_| AlphaSurvey::new()).collect(),
        }
    }

    fn scan_range(n: usize, alphas: &[f64], codes: Range<u64>, cfg: &ScanConfig) -> Result<Survey> {
        let mut s = Survey::empty(n, alphas);
        for (code, g) in strong_in_range(n, codes) {
            let p = Profile::of(code, &g, alphas, &cfg.opts)?;
            s.strong_count += 1;
            for (i, (&alpha, surv)) in alphas.iter().zip(&mut s.per_alpha).enumerate() {
                surv.push(&p, alpha, p.radii[i]);
            }
        }
        Ok(s)
    }

    fn merge(&mut self, other: Survey) {
        self.strong_count += other.strong_count;
        for (mine, theirs) in self.per_alpha.iter_mut().zip(other.per_alpha) {
            mine.merge(theirs);
        }
    }

    pub fn alpha_index(&self, alpha: f64) -> Option<usize> {
        self.alphas.iter().position(|&a| a == alpha)
    }

    pub(crate) fn group(&self, ai: usize, param: Parameter, mode: Mode, key: usize) -> Option<&Extremum> {
        self.per_alpha[ai].groups.get(&(param, mode, key))
    }

    /// Parameter values present at this order, ascending.
    pub fn keys(&self, param: Parameter) -> Vec<usize> {
        let mut keys: Vec<usize> = self
            .per_alpha
            .first()
            .map(|s| {
                s.groups
                    .keys()
                    .filter(|(p, m, _)| *p == param && *m == Mode::Min)
                    .map(|&(_, _, k)| k)
                    .collect()
            })
            .unwrap_or_default();
        keys.dedup();
        keys
    }

    /// Extremal report for one α, parameter and direction.
    pub fn report(&self, ai: usize, param: Parameter, mode: Mode) -> ExtremalReport {
        let groups = self
            .keys(param)
            .into_iter()
            .filter_map(|k| self.group(ai, param, mode, k).map(|e| GroupReport::from_extremum(self.n, k, e)))
            .collect();
        ExtremalReport {
            n: self.n,
            alpha: self.alphas[ai],
            parameter: param,
            mode,
            groups,
        }
    }

    /// The largest radius among digraphs other than the complete digraph.
    pub fn second_max(&self, ai: usize) -> GroupReport {
        GroupReport::from_extremum(self.n, 0, &self.per_alpha[ai].non_complete)
    }

    pub fn overall_max(&self, ai: usize) -> GroupReport {
        GroupReport::from_extremum(self.n, 0, &self.per_alpha[ai].overall)
    }

    pub fn bounds(&self, ai: usize) -> &BoundTally {
        &self.per_alpha[ai].bounds
    }
}

/// Extremal scan of a single α and parameter.
pub fn extremal_scan(
    n: usize,
    alpha: f64,
    param: Parameter,
    mode: Mode,
    cfg: &ScanConfig,
) -> Result<ExtremalReport> {
    Ok(Survey::build(n, &[alpha], cfg)?.report(0, param, mode))
}
