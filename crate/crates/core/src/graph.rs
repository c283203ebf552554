//! Simple undirected graphs on `0..n` with bit-set adjacency.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            out.extend(self.adjacency[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut adjacency = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = self.adjacency[v].clone();
            row.toggle_range(..);
            row.set(v, false);
            adjacency.push(row);
        }
        Graph { adjacency }
    }

    /// Subgraph induced on `vertices` (kept in the given order). Vertex `i`
    /// of the result is `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adjacency[v].ones() {
                let j = position[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Removes `v`, returning the remaining graph and the map from new
    /// vertex indices to the original ones.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.vertex_count() {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.vertex_count()
            )));
        }
        let survivors: Vec<usize> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        Ok((self.induced(&survivors), survivors))
    }

    /// Connected components, largest first; equal sizes ordered by smallest
    /// member. Each component is sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut comps = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adjacency[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.adjacency[u].ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.distances_from(s) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Vertices at distance exactly two from `v`.
    pub fn distance_two(&self, v: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.vertex_count());
        for w in self.adjacency[v].ones() {
            out.union_with(&self.adjacency[w]);
        }
        out.difference_with(&self.adjacency[v]);
        out.set(v, false);
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adjacency[v].is_clear())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), 10);
        assert_eq!(Graph::complete(4).complement().edge_count(), 0);
    }

    #[test]
    fn delete_and_components() {
        let (k3, map) = Graph::complete(4).delete_vertex(2).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 3]);
        assert!(Graph::complete(4).delete_vertex(4).is_err());
        let g = Graph::from_edges(6, &[(0, 5), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2, 3], vec![0, 5], vec![4]]);
    }

    #[test]
    fn diameter_and_distance_two() {
        assert_eq!(Graph::path(4).diameter(), Some(3));
        assert_eq!(Graph::complete(3).diameter(), Some(1));
        assert_eq!(Graph::empty(2).diameter(), None);
        assert_eq!(Graph::empty(1).diameter(), Some(0));
        let p = Graph::path(4);
        assert_eq!(p.distance_two(0).ones().collect::<Vec<_>>(), vec![2]);
        assert_eq!(p.distance_two(1).ones().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }
}
