//! Exhaustive enumeration of strongly connected digraphs at small order,
//! extremal scans grouped by a combinatorial parameter, theorem verdicts
//! and the exploratory `G0` comparison.
//!
//! A labeled digraph on `n` vertices is identified with its adjacency code:
//! bit `i` stands for the `i`-th off-diagonal cell in row-major order
//! (`(0,1), (0,2), ..., (1,0), (1,2), ...`). Enumeration visits codes in
//! ascending order.

mod explore;
mod report;
mod survey;
mod theorems;

use std::ops::Range;

use crate::digraph::{is_strongly_connected, Digraph};
use crate::error::{Error, Result};
use crate::spectral::PowerOptions;

pub use explore::{explore_on_survey, explore_problem_4_1, MAX_EXPLORE_ORDER, Problem41Report, Problem41Row, EXPLORATORY_LABEL};
pub use report::{ClassReport, ExtremalReport, GroupReport};
pub use survey::{extremal_scan, BoundTally, BoundViolation, Mode, Parameter, Profile, Survey};
pub use theorems::{MAX_FAMILY_ORDER, verify_on_survey, verify_theorem, Check, Status, TheoremId, VerificationVerdict};

/// Largest order the enumerator accepts; the top order needs the long-run flag.
pub const MAX_ENUM_ORDER: usize = 6;
/// Spectral tolerance used by scans.
pub const SCAN_TOL: f64 = 1e-10;
/// Values within this distance of a group extremum attain it.
pub const ATTAIN_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub opts: PowerOptions,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Allows the order-6 scan.
    pub long_runs: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            opts: PowerOptions::with_tol(SCAN_TOL),
            workers: None,
            long_runs: false,
        }
    }
}

impl ScanConfig {
    /// Runs `f` on a pool of the configured size.
    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

pub fn cell_count(n: usize) -> usize {
    n * (n - 1)
}

fn cells(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
}

pub fn digraph_from_code(n: usize, code: u64) -> Digraph {
    Digraph::from_arcs(
        n,
        cells(n)
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, a)| a),
    )
    .expect("codes decode to valid digraphs")
}

pub fn code_of(g: &Digraph) -> u64 {
    cells(g.order())
        .enumerate()
        .filter(|(_, (u, v))| g.has_arc(*u, *v))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

pub(crate) fn check_order(n: usize, long_runs: bool) -> Result<()> {
    if !(2..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::Parameter(format!(
            "enumeration supports 2 <= n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    if n == MAX_ENUM_ORDER && !long_runs {
        return Err(Error::LongRunRequired { n });
    }
    Ok(())
}

/// Strongly connected digraphs whose codes lie in `codes`, ascending.
pub fn strong_in_range(n: usize, codes: Range<u64>) -> impl Iterator<Item = (u64, Digraph)> {
    codes.filter_map(move |code| {
        let g = digraph_from_code(n, code);
        is_strongly_connected(&g).then_some((code, g))
    })
}

/// Every labeled strongly connected digraph on `n` vertices in ascending
/// code order.
pub fn enumerate_strong(n: usize, long_runs: bool) -> Result<impl Iterator<Item = (u64, Digraph)>> {
    check_order(n, long_runs)?;
    Ok(strong_in_range(n, 0..1u64 << cell_count(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn small_orders() {
        let two: Vec<_> = enumerate_strong(2, false).unwrap().collect();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].1, complete(2).unwrap());
        assert_eq!(enumerate_strong(3, false).unwrap().count(), 18);
    }

    #[test]
    fn order_limits() {
        assert!(enumerate_strong(1, false).is_err());
        assert!(enumerate_strong(7, true).is_err());
        assert!(matches!(
            enumerate_strong(6, false).err(),
            Some(Error::LongRunRequired { n: 6 })
        ));
        assert!(enumerate_strong(6, true).is_ok());
    }

    #[test]
    fn codes_round_trip() {
        for code in [0u64, 1, 0b101101, (1 << 12) - 1] {
            assert_eq!(code_of(&digraph_from_code(4, code)), code);
        }
        // cell 0 is (0,1), cell 2 is (1,0)
        assert_eq!(digraph_from_code(3, 0b101).arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        assert_eq!(code_of(&complete(4).unwrap()), (1 << 12) - 1);
    }
}
