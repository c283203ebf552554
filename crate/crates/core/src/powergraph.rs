//! Power graphs of finite groups.

use std::ops::Deref;

use crate::graph::Graph;
use crate::groups::{Descriptor, FiniteGroup};

/// The undirected power graph: distinct elements are adjacent when one is a
/// power of the other. Vertex `i` is group element `i`.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    graph: Graph,
    identity_vertex: usize,
    group_descriptor: Descriptor,
}

impl PowerGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn identity_vertex(&self) -> usize {
        self.identity_vertex
    }

    pub fn group_descriptor(&self) -> &Descriptor {
        &self.group_descriptor
    }

    /// `(Γ - e)` together with the survivor map back to element indices.
    pub fn without_identity(&self) -> (Graph, Vec<usize>) {
        self.graph
            .delete_vertex(self.identity_vertex)
            .expect("identity vertex is in range")
    }
}

impl Deref for PowerGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_power_graph(g: &FiniteGroup) -> PowerGraph {
    let mut graph = Graph::empty(g.order());
    for x in 0..g.order() {
        for y in g.powers(x) {
            if y != x {
                graph.add_edge(x, y);
            }
        }
    }
    PowerGraph {
        graph,
        identity_vertex: g.identity(),
        group_descriptor: g.descriptor().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;

    #[test]
    fn z6_adjacency() {
        let pg = build_power_graph(&make_cyclic(6).unwrap());
        assert!(!pg.adjacent(2, 3));
        assert_eq!(pg.complement().edges(), vec![(2, 3), (3, 4)]);
        assert_eq!(pg.edge_count(), 13);
    }

    #[test]
    fn prime_power_cyclic_is_complete() {
        for n in [2, 3, 4, 8, 9, 16, 25, 27] {
            assert!(build_power_graph(&make_cyclic(n).unwrap()).is_complete(), "Z{n}");
        }
        assert!(!build_power_graph(&make_cyclic(6).unwrap()).is_complete());
    }

    #[test]
    fn klein_is_star() {
        let z2 = make_cyclic(2).unwrap();
        let pg = build_power_graph(&direct_product(&z2, &z2).unwrap());
        assert_eq!(pg.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        let (rest, map) = pg.without_identity();
        assert_eq!(rest.edge_count(), 0);
        assert_eq!(map, vec![1, 2, 3]);
    }

    #[test]
    fn identity_isolated_in_complement() {
        for g in [
            make_cyclic(12).unwrap(),
            make_dihedral(10).unwrap(),
            make_generalized_quaternion(12).unwrap(),
            make_a5().unwrap(),
        ] {
            let pg = build_power_graph(&g);
            assert_eq!(pg.degree(0), g.order() - 1);
            assert!(pg.complement().neighbors(0).is_clear());
            assert!(pg.diameter().unwrap() <= 2);
        }
    }

    #[test]
    fn dihedral_minus_identity_components() {
        for k in 3..9 {
            let pg = build_power_graph(&make_dihedral(2 * k).unwrap());
            let (rest, _) = pg.without_identity();
            let comps = rest.connected_components();
            assert_eq!(comps.len(), k + 1);
            assert_eq!(comps[0].len(), k - 1);
        }
        let pg = build_power_graph(&make_dihedral(6).unwrap());
        let sizes: Vec<usize> = pg.without_identity().0.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 1, 1, 1]);
    }

    #[test]
    fn q8_minus_identity_connected() {
        let pg = build_power_graph(&make_generalized_quaternion(8).unwrap());
        let comps = pg.without_identity().0.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 7);
    }
}
