//! L(2,1)-labelings: validation, exact λ solvers and the explicit
//! constructions for dihedral, generalized quaternion and `Z_{pq^n}` power
//! graphs.

mod backtrack;
mod construct;
mod pathcover;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use backtrack::{lambda_backtrack, BacktrackOptions};
pub use construct::{
    construct_dihedral_labeling, construct_partition_labeling, construct_quaternion_labeling,
    construct_zpqn_labeling, zpqn_order_classes, PartitionCertificate, ZpqnClasses,
};
pub use pathcover::{labeling_from_cover, lambda_via_path_cover, PathCoverSolution};

/// Nonnegative integer labels indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    pub fn span(&self) -> usize {
        match (self.labels.iter().min(), self.labels.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Same labeling shifted so its smallest label is 0.
    pub fn normalized(&self) -> Labeling {
        let lo = self.labels.iter().copied().min().unwrap_or(0);
        Labeling::new(self.labels.iter().map(|l| l - lo).collect())
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.labels.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Adjacent vertices whose labels differ by less than 2.
    AdjacentGap,
    /// Vertices at distance two sharing a label.
    Distance2Equal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_l21(graph: &Graph, labeling: &Labeling) -> Result<ValidationReport> {
    let n = graph.vertex_count();
    let labels = labeling.labels();
    if labels.len() != n {
        return Err(Error::invalid(format!(
            "labeling has {} entries for a graph on {n} vertices",
            labels.len()
        )));
    }
    let mut violations = Vec::new();
    for u in 0..n {
        for v in graph.neighbors(u).ones().filter(|&v| v > u) {
            if labels[u].abs_diff(labels[v]) < 2 {
                violations.push(Violation {
                    u,
                    v,
                    kind: ViolationKind::AdjacentGap,
                });
            }
        }
        for v in graph.distance_two(u).ones().filter(|&v| v > u) {
            if labels[u] == labels[v] {
                violations.push(Violation {
                    u,
                    v,
                    kind: ViolationKind::Distance2Equal,
                });
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// Validates and turns a failure into an internal error.
pub(crate) fn ensure_valid(graph: &Graph, labeling: &Labeling, what: &str) -> Result<()> {
    let report = validate_l21(graph, labeling)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::Internal(format!(
            "{what} produced an invalid labeling: {:?} between {} and {}",
            v.kind, v.u, v.v
        )));
    }
    Ok(())
}

/// An exact λ together with a labeling of that span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub lambda: usize,
    pub labeling: Labeling,
}
