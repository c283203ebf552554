//! The λ orchestrator: bound ledger first, then the path-cover formula, then
//! backtracking, falling back to a bounds-only report.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::arith::split_pqn;
use crate::error::{Error, Result};
use crate::groups::{Descriptor, FiniteGroup};
use crate::invariants::{hamilton_path, PathCover};
use crate::labeling::{
    construct_dihedral_labeling, construct_quaternion_labeling, construct_zpqn_labeling,
    labeling_from_cover, lambda_backtrack, lambda_via_path_cover, validate_l21, BacktrackOptions,
    Labeling,
};
use crate::ledger::{bound_ledger, Bound, BoundLedger};
use crate::limits::Limits;
use crate::oracle::predict_lambda;
use crate::powergraph::{build_power_graph, PowerGraph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Auto,
    Ledger,
    PathCover,
    Backtrack,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Ledger => "ledger",
            Method::PathCover => "path-cover",
            Method::Backtrack => "backtrack",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactOptions {
    pub method: Method,
    /// Run every feasible method and require at least two that agree.
    pub verify: bool,
    pub limits: Limits,
    /// Wall-clock budget for backtracking.
    pub budget: Option<Duration>,
    /// Construct a labeling for ledger-pinned results.
    pub witness: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            method: Method::Auto,
            verify: false,
            limits: Limits::default(),
            budget: None,
            witness: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValue {
    pub value: usize,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodCheck {
    pub method: String,
    pub lambda: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    pub group: String,
    pub order: usize,
    pub lambda: Option<usize>,
    pub exact: bool,
    pub method: String,
    pub bounds: Vec<Bound>,
    pub labeling: Option<Vec<usize>>,
    pub oracle: Option<OracleValue>,
    pub agreement: Option<bool>,
    pub runtime_ms: u64,
    /// Every method that produced a value, in the order they ran.
    pub checks: Vec<MethodCheck>,
    /// Verify mode only: true when at least two methods ran and agree, false
    /// when two ran and disagree, absent when fewer than two could run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

struct Outcome {
    lambda: usize,
    labeling: Option<Labeling>,
}

pub fn lambda_exact(g: &FiniteGroup, opts: &ExactOptions) -> Result<LambdaReport> {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let pg = build_power_graph(g);
    let ledger = bound_ledger(g, &pg, &opts.limits)?;

    let order: &[Method] = match opts.method {
        Method::Auto => &[Method::Ledger, Method::PathCover, Method::Backtrack],
        Method::Ledger => &[Method::Ledger],
        Method::PathCover => &[Method::PathCover],
        Method::Backtrack => &[Method::Backtrack],
    };
    let candidates: &[Method] = if opts.verify {
        &[Method::Ledger, Method::PathCover, Method::Backtrack]
    } else {
        order
    };

    let mut chosen: Option<(Method, Outcome)> = None;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    for &m in candidates {
        let primary = order.contains(&m) && chosen.is_none();
        if !primary && !opts.verify {
            continue;
        }
        let want_witness = primary && opts.witness;
        match run_method(m, g, &pg, &ledger, opts, deadline, want_witness) {
            Ok(Some(outcome)) => {
                if let Some(l) = &outcome.labeling {
                    let report = validate_l21(&pg, l)?;
                    if !report.is_ok() || l.span() != outcome.lambda {
                        return Err(Error::Internal(format!(
                            "{} produced an invalid witness",
                            m.tag()
                        )));
                    }
                }
                checks.push(MethodCheck {
                    method: m.tag().to_string(),
                    lambda: outcome.lambda,
                });
                if primary {
                    chosen = Some((m, outcome));
                }
            }
            Ok(None) => notes.push(format!("{}: not applicable", m.tag())),
            Err(e) if e.is_capacity() => notes.push(format!("{}: {e}", m.tag())),
            Err(e) => return Err(e),
        }
    }

    let prediction = predict_lambda(g);
    let oracle = match (prediction.value, prediction.source) {
        (Some(value), Some(source)) => Some(OracleValue {
            value,
            source: source.tag().to_string(),
        }),
        _ => None,
    };

    let verified = (opts.verify && checks.len() >= 2)
        .then(|| checks.iter().all(|c| c.lambda == checks[0].lambda));
    if opts.verify && checks.len() < 2 {
        notes.push(format!("verification needs two methods, {} ran", checks.len()));
    }

    let (method, lambda, labeling) = match chosen {
        Some((m, o)) => (m.tag().to_string(), Some(o.lambda), o.labeling),
        None => ("bounds-only".to_string(), None, None),
    };
    let agreement = match (lambda, &oracle) {
        (Some(l), Some(o)) => Some(l == o.value),
        _ => None,
    };

    Ok(LambdaReport {
        group: g.descriptor().to_string(),
        order: g.order(),
        lambda,
        exact: lambda.is_some(),
        method,
        bounds: ledger.bounds.clone(),
        labeling: labeling.map(Labeling::into_labels),
        oracle,
        agreement,
        runtime_ms: start.elapsed().as_millis() as u64,
        checks,
        verified,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    })
}

fn run_method(
    m: Method,
    g: &FiniteGroup,
    pg: &PowerGraph,
    ledger: &BoundLedger,
    opts: &ExactOptions,
    deadline: Option<Instant>,
    witness: bool,
) -> Result<Option<Outcome>> {
    match m {
        Method::Auto => unreachable!("auto is expanded before dispatch"),
        Method::Ledger => {
            let Some(lambda) = ledger.pinned() else {
                return Ok(None);
            };
            let labeling = if witness {
                ledger_witness(g, pg, ledger, lambda, opts.limits.dp)?
            } else {
                None
            };
            Ok(Some(Outcome { lambda, labeling }))
        }
        Method::PathCover => match pg.diameter() {
            Some(d) if d <= 2 => {
                let s = lambda_via_path_cover(pg, opts.limits.dp)?;
                Ok(Some(Outcome {
                    lambda: s.lambda,
                    labeling: Some(s.labeling),
                }))
            }
            _ => Ok(None),
        },
        Method::Backtrack => {
            let s = lambda_backtrack(
                pg,
                &BacktrackOptions {
                    limit: opts.limits.backtrack,
                    span_budget: None,
                    deadline,
                },
            )?;
            Ok(Some(Outcome {
                lambda: s.lambda,
                labeling: Some(s.labeling),
            }))
        }
    }
}

/// A labeling of span exactly `lambda`, from the first source that yields
/// one: a family construction, the all-even labeling, a Hamilton path in the
/// complement of `Γ - e`, or the path-cover labeling.
fn ledger_witness(
    g: &FiniteGroup,
    pg: &PowerGraph,
    ledger: &BoundLedger,
    lambda: usize,
    dp_limit: usize,
) -> Result<Option<Labeling>> {
    let n = g.order();
    let accept = |l: Labeling| -> Result<Option<Labeling>> {
        Ok((l.span() == lambda && validate_l21(pg, &l)?.is_ok()).then_some(l))
    };

    let family = match g.descriptor() {
        Descriptor::Dihedral(order) => construct_dihedral_labeling(order / 2).ok(),
        Descriptor::GeneralizedQuaternion(order) => construct_quaternion_labeling(order / 4).ok(),
        Descriptor::Cyclic(m) => split_pqn(*m).and_then(|(p, q, e)| construct_zpqn_labeling(p, q, e).ok()),
        _ => None,
    };
    if let Some(l) = family {
        if let Some(l) = accept(l)? {
            return Ok(Some(l));
        }
    }

    if n >= 1 && lambda == 2 * n - 2 {
        return accept(Labeling::new((0..n).map(|v| 2 * v).collect()));
    }

    if n >= 2 && lambda == n {
        let path = match &ledger.identity_hamilton {
            Some(p) => Some(p.clone()),
            None => {
                let (rest, map) = pg.without_identity();
                match hamilton_path(&rest.complement(), dp_limit) {
                    Ok(p) => p.map(|p| p.into_iter().map(|i| map[i]).collect()),
                    Err(e) if e.is_capacity() => None,
                    Err(e) => return Err(e),
                }
            }
        };
        if let Some(path) = path {
            let cover = PathCover {
                paths: vec![vec![pg.identity_vertex()], path],
            };
            if let Some(l) = accept(labeling_from_cover(n, &cover))? {
                return Ok(Some(l));
            }
        }
    }

    match lambda_via_path_cover(pg, dp_limit) {
        Ok(s) => accept(s.labeling),
        Err(e) if e.is_capacity() || matches!(e, Error::InvalidParameter(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
