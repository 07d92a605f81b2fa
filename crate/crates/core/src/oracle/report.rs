use serde::Serialize;

use super::digraph_from_code;
use super::survey::{Extremum, Mode, Parameter};
use crate::digraph::{is_isomorphic, Digraph};

/// One isomorphism class among the digraphs attaining a group extremum.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    /// The member with the smallest code.
    pub representative: Digraph,
    pub code: u64,
    pub radius: f64,
    /// Labeled digraphs in the class that attain the extremum.
    pub labeled_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    /// Parameter value shared by the group.
    pub value: usize,
    /// Labeled digraphs in the group.
    pub members: u64,
    pub extremum: f64,
    pub classes: Vec<ClassReport>,
    /// Distance to the best value that does not attain the extremum.
    pub runner_up_gap: Option<f64>,
}

impl GroupReport {
    pub(crate) fn from_extremum(n: usize, value: usize, e: &Extremum) -> GroupReport {
        let mut classes: Vec<ClassReport> = Vec::new();
        for (code, radius) in e.attaining() {
            let g = digraph_from_code(n, code);
            match classes
                .iter_mut()
                .find(|c| is_isomorphic(&c.representative, &g))
            {
                Some(c) => c.labeled_count += 1,
                None => classes.push(ClassReport {
                    representative: g,
                    code,
                    radius,
                    labeled_count: 1,
                }),
            }
        }
        GroupReport {
            value,
            members: e.members(),
            extremum: e.value(),
            classes,
            runner_up_gap: e.runner_up_gap(),
        }
    }

    /// True when the attaining classes are exactly the classes of
    /// `expected` (duplicates up to isomorphism allowed in `expected`).
    pub fn classes_match(&self, expected: &[Digraph]) -> bool {
        self.classes
            .iter()
            .all(|c| expected.iter().any(|e| is_isomorphic(&c.representative, e)))
            && expected
                .iter()
                .all(|e| self.classes.iter().any(|c| is_isomorphic(&c.representative, e)))
    }
}

/// Per-group extrema of λα over the strongly connected digraphs of one
/// order, grouped by a parameter.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub alpha: f64,
    pub parameter: Parameter,
    pub mode: Mode,
    pub groups: Vec<GroupReport>,
}

impl ExtremalReport {
    pub fn group(&self, value: usize) -> Option<&GroupReport> {
        self.groups.iter().find(|g| g.value == value)
    }
}
