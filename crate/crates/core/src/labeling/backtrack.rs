//! Exact λ by iterative deepening on the span with forward checking.
//!
//! Vertices are assigned in descending degree order (ties by index), labels
//! scanned ascending. Twins are forced into nondecreasing label order and
//! the first vertex into the lower half of the span, which removes the
//! twin-permutation and reflection symmetries without losing any optimum.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::clique_number;
use crate::limits::{DEFAULT_BACKTRACK_LIMIT, DEFAULT_CLIQUE_LIMIT};

use super::{ensure_valid, Labeling, Solution};

/// Hard ceiling: vertex masks are `u32` and label domains `u64`.
const MAX_VERTICES: usize = 32;
const DEADLINE_CHECK_INTERVAL: u64 = 4096;

#[derive(Debug, Clone, Copy)]
pub struct BacktrackOptions {
    pub limit: usize,
    /// Largest span to try before giving up.
    pub span_budget: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Default for BacktrackOptions {
    fn default() -> Self {
        BacktrackOptions {
            limit: DEFAULT_BACKTRACK_LIMIT,
            span_budget: None,
            deadline: None,
        }
    }
}

pub fn lambda_backtrack(graph: &Graph, opts: &BacktrackOptions) -> Result<Solution> {
    let n = graph.vertex_count();
    let limit = opts.limit.min(MAX_VERTICES);
    if n > limit {
        return Err(Error::capacity(format!("backtracking on {n} vertices"), limit));
    }
    if n == 0 {
        return Ok(Solution {
            lambda: 0,
            labeling: Labeling::new(Vec::new()),
        });
    }

    let omega = clique_number(graph, DEFAULT_CLIQUE_LIMIT)?.value;
    let injective = matches!(graph.diameter(), Some(d) if d <= 2);
    let mut lower = 2 * omega - 2;
    if injective {
        lower = lower.max(n - 1);
    }
    // Labels 0, 2, ..., 2n - 2 always work.
    let upper = 2 * n - 2;

    let mut solver = Solver::new(graph, injective, opts.deadline);
    for k in lower..=upper {
        if opts.span_budget.is_some_and(|b| k > b) {
            return Err(Error::CapacityExceeded {
                what: format!("span budget exhausted on {n} vertices"),
                limit: opts.span_budget.unwrap_or(0),
                lower: Some(k),
                upper: Some(upper),
            });
        }
        if let Some(labels) = solver.solve(k).map_err(|e| with_bounds(e, k, upper))? {
            let labeling = Labeling::new(labels);
            ensure_valid(graph, &labeling, "backtracking")?;
            return Ok(Solution { lambda: k, labeling });
        }
    }
    Err(Error::Internal("no labeling within span 2n - 2".into()))
}

fn with_bounds(e: Error, lower: usize, upper: usize) -> Error {
    match e {
        Error::CapacityExceeded { what, limit, .. } => Error::CapacityExceeded {
            what,
            limit,
            lower: Some(lower),
            upper: Some(upper),
        },
        other => other,
    }
}

struct Solver {
    n: usize,
    adj: Vec<u32>,
    dist2: Vec<u32>,
    order: Vec<usize>,
    twin_pred: Vec<Option<usize>>,
    clique_parts: Vec<u32>,
    injective: bool,
    deadline: Option<Instant>,
    nodes: u64,
    k: usize,
    labels: Vec<usize>,
}

impl Solver {
    fn new(graph: &Graph, injective: bool, deadline: Option<Instant>) -> Self {
        let n = graph.vertex_count();
        let to_mask = |set: &fixedbitset::FixedBitSet| set.ones().fold(0u32, |m, w| m | (1 << w));
        let adj: Vec<u32> = (0..n).map(|v| to_mask(graph.neighbors(v))).collect();
        let dist2: Vec<u32> = (0..n).map(|v| to_mask(&graph.distance_two(v))).collect();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| graph.degree(b).cmp(&graph.degree(a)).then(a.cmp(&b)));

        // u and v are twins when swapping them is an automorphism.
        let twins = |u: usize, v: usize| adj[u] & !(1 << v) == adj[v] & !(1 << u);
        let mut twin_pred = vec![None; n];
        for v in 0..n {
            twin_pred[v] = (0..v).rev().find(|&u| twins(u, v));
        }

        let mut covered = 0u32;
        let mut clique_parts = Vec::new();
        for &v in &order {
            if covered & (1 << v) != 0 {
                continue;
            }
            let mut part = 1u32 << v;
            for &w in &order {
                if covered & (1 << w) == 0 && part & (1 << w) == 0 && adj[w] & part == part {
                    part |= 1 << w;
                }
            }
            covered |= part;
            clique_parts.push(part);
        }

        Solver {
            n,
            adj,
            dist2,
            order,
            twin_pred,
            clique_parts,
            injective,
            deadline,
            nodes: 0,
            k: 0,
            labels: vec![0; n],
        }
    }

    fn solve(&mut self, k: usize) -> Result<Option<Vec<usize>>> {
        self.k = k;
        let full: u64 = if k >= 63 { u64::MAX } else { (1u64 << (k + 1)) - 1 };
        let domains = vec![full; self.n];
        if self.search(0, 0, &domains)? {
            Ok(Some(self.labels.clone()))
        } else {
            Ok(None)
        }
    }

    fn search(&mut self, depth: usize, assigned: u32, domains: &[u64]) -> Result<bool> {
        if depth == self.n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(DEADLINE_CHECK_INTERVAL) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::capacity("backtracking time budget", 0));
                }
            }
        }

        let v = self.order[depth];
        let mut candidates = domains[v];
        if let Some(p) = self.twin_pred[v] {
            debug_assert!(assigned & (1 << p) != 0);
            candidates &= !((1u64 << self.labels[p]) - 1);
        }
        if depth == 0 {
            candidates &= (1u64 << (self.k / 2 + 1)) - 1;
        }

        let assigned = assigned | (1 << v);
        let mut next = domains.to_vec();
        while candidates != 0 {
            let l = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.labels[v] = l;

            next.copy_from_slice(domains);
            let near = (0b111u64 << l) >> 1;
            let mut ok = true;
            let mut nb = self.adj[v] & !assigned;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                next[u] &= !near;
                ok &= next[u] != 0;
            }
            let mut d2 = self.dist2[v] & !assigned;
            while d2 != 0 {
                let u = d2.trailing_zeros() as usize;
                d2 &= d2 - 1;
                next[u] &= !(1u64 << l);
                ok &= next[u] != 0;
            }
            if ok && self.feasible(assigned, &next) && self.search(depth + 1, assigned, &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Counting bounds on the unassigned vertices: every clique part needs
    /// labels pairwise at least 2 apart, and in an injective graph all
    /// remaining vertices need distinct labels.
    fn feasible(&self, assigned: u32, domains: &[u64]) -> bool {
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let free = all & !assigned;
        if self.injective {
            let union = mask_union(free, domains);
            if union.count_ones() < free.count_ones() {
                return false;
            }
        }
        for &part in &self.clique_parts {
            let open = part & free;
            if open.count_ones() >= 2 && max_spread_subset(mask_union(open, domains)) < open.count_ones() {
                return false;
            }
        }
        true
    }
}

fn mask_union(mut set: u32, domains: &[u64]) -> u64 {
    let mut out = 0;
    while set != 0 {
        let u = set.trailing_zeros() as usize;
        set &= set - 1;
        out |= domains[u];
    }
    out
}

/// Largest subset of the set bits with pairwise gaps of at least 2.
fn max_spread_subset(mut labels: u64) -> u32 {
    let mut count = 0;
    while labels != 0 {
        let b = labels & labels.wrapping_neg();
        count += 1;
        labels &= !(b | (b << 1));
    }
    count
}
