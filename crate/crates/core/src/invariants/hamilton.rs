//! Hamilton paths and minimum path covers via endpoint-tracking subset DP.
//!
//! `layer[mask]` is the set of vertices `v` such that the vertices of `mask`
//! can be covered by at most `r` vertex-disjoint paths, the last of which
//! ends at `v`. Layer 1 is the classic Hamilton-path table.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

const HEURISTIC_SEED: u64 = 0x0ba5_e1ab_e1ed;
const HEURISTIC_RESTARTS: usize = 64;

/// Local graph with at most 32 vertices as `u32` rows.
pub(crate) struct MaskGraph {
    rows: Vec<u32>,
}

impl MaskGraph {
    pub(crate) fn new(graph: &Graph) -> Self {
        let n = graph.vertex_count();
        debug_assert!(n <= 32);
        let rows = (0..n)
            .map(|v| graph.neighbors(v).ones().fold(0u32, |acc, w| acc | (1 << w)))
            .collect();
        MaskGraph { rows }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn full(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    fn neighbors_of_set(&self, mut set: u32) -> u32 {
        let mut out = 0;
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            out |= self.rows[v];
        }
        out
    }

    /// Layer 1: Hamilton-path endpoints for every subset.
    fn first_layer(&self) -> Vec<u32> {
        let mut reach = vec![0u32; 1usize << self.len()];
        for v in 0..self.len() {
            reach[1 << v] = 1 << v;
        }
        for mask in 1..reach.len() as u32 {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let mut ext = self.neighbors_of_set(ends) & !mask;
            while ext != 0 {
                let w = ext & ext.wrapping_neg();
                ext ^= w;
                reach[(mask | w) as usize] |= w;
            }
        }
        reach
    }

    /// Layer `r + 1` from layer `r`: carry, extend along an edge, or start a
    /// new path after any mask coverable by `r` paths.
    fn next_layer(&self, prev: &[u32]) -> Vec<u32> {
        let full = self.full();
        let mut layer = vec![0u32; prev.len()];
        for mask in 1..prev.len() as u32 {
            let ends = layer[mask as usize] | prev[mask as usize];
            layer[mask as usize] = ends;
            if ends == 0 {
                continue;
            }
            let mut ext = self.neighbors_of_set(ends) & !mask;
            while ext != 0 {
                let w = ext & ext.wrapping_neg();
                ext ^= w;
                layer[(mask | w) as usize] |= w;
            }
            if prev[mask as usize] != 0 {
                let mut free = full & !mask;
                while free != 0 {
                    let w = free & free.wrapping_neg();
                    free ^= w;
                    layer[(mask | w) as usize] |= w;
                }
            }
        }
        layer
    }

    pub(crate) fn hamilton_path(&self) -> Option<Vec<usize>> {
        if self.len() == 0 {
            return Some(Vec::new());
        }
        let reach = self.first_layer();
        let full = self.full();
        if reach[full as usize] == 0 {
            return None;
        }
        Some(self.reconstruct(&[reach], full).remove(0))
    }

    /// Minimum path cover; paths are reported in local indices.
    pub(crate) fn min_path_cover(&self) -> Vec<Vec<usize>> {
        if self.len() == 0 {
            return Vec::new();
        }
        let full = self.full() as usize;
        let mut layers = vec![self.first_layer()];
        while layers.last().expect("non-empty")[full] == 0 {
            let next = self.next_layer(layers.last().expect("non-empty"));
            layers.push(next);
        }
        self.reconstruct(&layers, full as u32)
    }

    /// Walks the layers backwards from the full mask, preferring in-layer
    /// edge moves to new path starts, lowest vertex first.
    fn reconstruct(&self, layers: &[Vec<u32>], full: u32) -> Vec<Vec<usize>> {
        let mut r = layers.len() - 1;
        let mut mask = full;
        let mut v = layers[r][mask as usize].trailing_zeros() as usize;
        let mut paths: Vec<Vec<usize>> = vec![vec![v]];
        loop {
            if r > 0 && layers[r - 1][mask as usize] & (1 << v) != 0 {
                r -= 1;
                continue;
            }
            let rest = mask & !(1 << v);
            if rest == 0 {
                break;
            }
            let prev = layers[r][rest as usize] & self.rows[v];
            if prev != 0 {
                v = prev.trailing_zeros() as usize;
                paths.last_mut().expect("non-empty").push(v);
            } else {
                debug_assert!(r > 0 && layers[r - 1][rest as usize] != 0);
                r -= 1;
                v = layers[r][rest as usize].trailing_zeros() as usize;
                paths.push(vec![v]);
            }
            mask = rest;
        }
        paths
    }
}

/// Randomized rotation-extension search. Returns a Hamilton path or gives
/// up; a failure says nothing about existence.
pub(crate) fn heuristic_hamilton_path(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(HEURISTIC_SEED);
    let budget = 50 * n * n;
    for restart in 0..HEURISTIC_RESTARTS {
        let start = if restart == 0 {
            (0..n).min_by_key(|&v| (graph.degree(v), v)).expect("n > 0")
        } else {
            rng.gen_range(0..n)
        };
        if let Some(p) = rotate_extend(graph, start, budget, &mut rng) {
            return Some(p);
        }
    }
    None
}

fn rotate_extend(graph: &Graph, start: usize, budget: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    let mut path = vec![start];
    let mut on_path = vec![false; n];
    on_path[start] = true;
    for _ in 0..budget {
        if path.len() == n {
            return Some(path);
        }
        let end = *path.last().expect("non-empty");
        let mut fresh: Vec<usize> = graph.neighbors(end).ones().filter(|&w| !on_path[w]).collect();
        if !fresh.is_empty() {
            // Prefer the unvisited neighbor with fewest unvisited neighbors.
            fresh.shuffle(rng);
            let w = *fresh
                .iter()
                .min_by_key(|&&w| graph.neighbors(w).ones().filter(|&x| !on_path[x]).count())
                .expect("non-empty");
            on_path[w] = true;
            path.push(w);
            continue;
        }
        // Rotation: end is adjacent to path[i]; reverse path[i+1..].
        let pivots: Vec<usize> = (0..path.len().saturating_sub(2))
            .filter(|&i| graph.adjacent(end, path[i]))
            .collect();
        if pivots.is_empty() {
            if path.len() == 1 {
                return None;
            }
            path.reverse();
            if !graph.neighbors(path[path.len() - 1]).ones().any(|w| !on_path[w])
                && (0..path.len() - 2).all(|i| !graph.adjacent(path[path.len() - 1], path[i]))
            {
                return None;
            }
            continue;
        }
        let i = pivots[rng.gen_range(0..pivots.len())];
        path[i + 1..].reverse();
    }
    None
}

/// Greedy path cover used only as an upper bound.
pub(crate) fn greedy_path_cover(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut used = vec![false; n];
    let mut paths = Vec::new();
    let unused_degree = |v: usize, used: &[bool]| graph.neighbors(v).ones().filter(|&w| !used[w]).count();
    while let Some(start) = (0..n).filter(|&v| !used[v]).min_by_key(|&v| (unused_degree(v, &used), v)) {
        used[start] = true;
        let mut path = vec![start];
        let mut end = start;
        while let Some(w) = graph
            .neighbors(end)
            .ones()
            .filter(|&w| !used[w])
            .min_by_key(|&w| (unused_degree(w, &used), w))
        {
            used[w] = true;
            path.push(w);
            end = w;
        }
        paths.push(path);
    }
    paths
}
