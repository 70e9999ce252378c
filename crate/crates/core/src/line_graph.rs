//! Line graph construction, keeping the base-edge <-> vertex correspondence.

use crate::error::GraphError;
use crate::graph::{EdgeIndex, Graph};

/// Line graph together with the index tying its vertices back to base edges:
/// vertex `e` of `lg` is edge `idx.pair(e)` of `base`.
#[derive(Clone, Debug)]
pub struct LineGraphMap {
    base: Graph,
    lg: Graph,
    idx: EdgeIndex,
}

impl LineGraphMap {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lg(&self) -> &Graph {
        &self.lg
    }

    pub fn edge_index(&self) -> &EdgeIndex {
        &self.idx
    }

    pub fn base_edge(&self, lg_vertex: usize) -> (usize, usize) {
        self.idx.pair(lg_vertex)
    }
}

/// Two base edges become adjacent iff they share an endpoint. In a simple
/// graph a pair of distinct edges shares at most one endpoint, so each line
/// edge is generated exactly once.
pub fn line_graph(g: &Graph) -> Result<LineGraphMap, GraphError> {
    if g.m() == 0 {
        return Err(GraphError::EdgelessGraph);
    }
    let idx = EdgeIndex::new(g);
    let mut lg_edges = Vec::new();
    for v in 0..g.n() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| idx.id(v, u).expect("neighbor implies indexed edge"))
            .collect();
        for i in 0..incident.len() {
            for j in i + 1..incident.len() {
                let (a, b) = (incident[i], incident[j]);
                lg_edges.push((a.min(b), a.max(b)));
            }
        }
    }
    let lg = Graph::from_edges(idx.len(), &lg_edges)?;
    Ok(LineGraphMap {
        base: g.clone(),
        lg,
        idx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn cycle_maps_to_cycle() {
        let lgm = line_graph(&cycle(5)).unwrap();
        let lg = lgm.lg();
        assert_eq!(lg.n(), 5);
        assert_eq!(lg.m(), 5);
        assert_eq!(lg.is_regular(), Some(2));
        assert!(lg.is_connected());
    }

    #[test]
    fn single_edge_maps_to_a_point() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let lgm = line_graph(&k2).unwrap();
        assert_eq!(lgm.lg().n(), 1);
        assert_eq!(lgm.lg().m(), 0);
        assert_eq!(lgm.base_edge(0), (0, 1));
    }

    #[test]
    fn k4_line_graph_is_quartic_on_six_vertices() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let lg = line_graph(&k4).unwrap();
        assert_eq!(lg.lg().n(), 6);
        assert_eq!(lg.lg().is_regular(), Some(4));
        assert_eq!(lg.lg().m(), 12);
    }

    #[test]
    fn degree_identity_on_an_irregular_graph() {
        // paw graph: triangle plus a pendant
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let lgm = line_graph(&g).unwrap();
        for e in 0..lgm.lg().n() {
            let (u, v) = lgm.base_edge(e);
            assert_eq!(lgm.lg().degree(e), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        assert_eq!(
            line_graph(&Graph::empty(3)).unwrap_err(),
            GraphError::EdgelessGraph
        );
    }
}
