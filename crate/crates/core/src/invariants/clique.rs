//! Maximum clique by branch and bound with greedy-coloring bounds over
//! `u128` adjacency rows.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MASK_BITS: usize = 128;

/// Vertices of a maximum clique, ascending.
pub(crate) fn max_clique(graph: &Graph, limit: usize) -> Result<Vec<usize>> {
    let n = graph.vertex_count();
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::capacity(
            format!("clique search on {n} vertices"),
            limit,
        ));
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    // Bit i stands for vertex order[i]; high-degree vertices get low bits so
    // the coloring visits them first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| graph.degree(b).cmp(&graph.degree(a)).then(a.cmp(&b)));
    let mut rows = vec![0u128; n];
    for (i, &u) in order.iter().enumerate() {
        for (j, &v) in order.iter().enumerate() {
            if graph.adjacent(u, v) {
                rows[i] |= 1 << j;
            }
        }
    }

    let mut search = Search {
        rows: &rows,
        best: vec![0],
        current: Vec::with_capacity(n),
    };
    let all = if n == MASK_BITS { u128::MAX } else { (1u128 << n) - 1 };
    search.expand(all);

    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    Ok(clique)
}

struct Search<'a> {
    rows: &'a [u128],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: u128) {
        let colored = self.color_sort(candidates);
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = candidates & self.rows[v];
            if next == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates &= !(1u128 << v);
        }
    }

    /// Greedy sequential coloring; returns `(vertex, color)` with colors
    /// non-decreasing, colors counted from 1.
    fn color_sort(&self, candidates: u128) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncolored = candidates;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1u128 << v);
                q &= !self.rows[v];
                uncolored &= !(1u128 << v);
                out.push((v, color));
            }
        }
        out
    }
}
