//! Simple undirected graphs with positional vertex identity.
//!
//! Vertices are `0..n`. Neighbor lists are kept sorted, and self-loops and
//! parallel edges are rejected at construction, so everything derived from a
//! `Graph` (edge ids, line graphs, factors, canonical forms) can rely on one
//! fixed ordering.

use std::collections::HashMap;

use crate::error::GraphError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Endpoint order within a pair does not
    /// matter; duplicates (in either orientation) and self-loops are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            n,
            adj,
            m: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge list in lexicographic order with `u < v` in every pair. This is
    /// the ordering `EdgeIndex` assigns ids by.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` iff every vertex has degree exactly `r`; `None` for the
    /// irregular case and for the order-zero graph.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabeled copy: new vertex `i` is old vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            if v >= self.n || position[v] != usize::MAX {
                return Err(GraphError::NotAPermutation(self.n));
            }
            position[v] = i;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (i, &v) in order.iter().enumerate() {
            adj[i] = self.adj[v].iter().map(|&u| position[u]).collect();
            adj[i].sort_unstable();
        }
        Ok(Graph {
            n: self.n,
            adj,
            m: self.m,
        })
    }
}

/// Single source of edge identity: edges sorted lexicographically with
/// `u < v`, id = rank in that order.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    edges: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let lookup = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        EdgeIndex { edges, lookup }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoints of edge `id`, always with the smaller vertex first.
    pub fn pair(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }
}
