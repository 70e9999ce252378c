//! Deterministic generators for the witness families used throughout the
//! verdict machinery: the bipartite family attaining the degree-capped
//! independence bound, the factor-free regular family, P_3 packings, and a
//! few named graphs.

use crate::error::ConstructionError;
use crate::graph::Graph;

/// Circle-method 1-factorization of K_{order}: `order - 1` perfect matchings
/// that together partition the edge set. Matchings come out sorted, with
/// each pair as `(u, v)`, `u < v`.
pub fn round_robin_one_factorization(
    order: usize,
) -> Result<Vec<Vec<(usize, usize)>>, ConstructionError> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(ConstructionError::OddOrder(order));
    }
    // vertex order-1 sits at the hub; 0..order-1 rotate around it
    let m = order - 1;
    let mut rounds = Vec::with_capacity(m);
    for k in 0..m {
        let mut matching = vec![(k, m)];
        for j in 1..order / 2 {
            let a = (k + j) % m;
            let b = (k + m - j) % m;
            matching.push((a.min(b), a.max(b)));
        }
        matching.sort_unstable();
        rounds.push(matching);
    }
    Ok(rounds)
}

/// The family attaining `nr / (2r - p)`: `2t` disjoint copies of
/// K_{r, r-p}, then a p-regular graph packed onto each consecutive pair of
/// A sides (the first `p` rounds of a 1-factorization of K_{2r}). Every A
/// vertex ends at degree r with exactly p neighbors inside A, so the
/// 2t·r A vertices form a p-independent set of size nr / (2r - p).
///
/// Copy `c` occupies vertices `c*(2r-p) ..`: first its r A vertices, then
/// its r-p B vertices.
pub fn sharpness_bipartite(r: usize, p: usize, t: usize) -> Result<Graph, ConstructionError> {
    if p == 0 || p >= r || t == 0 {
        return Err(ConstructionError::BadSharpnessParams { r, p, t });
    }
    let block = 2 * r - p;
    let n = 2 * t * block;
    let mut edges = Vec::new();
    for c in 0..2 * t {
        let base = c * block;
        for i in 0..r {
            for j in 0..r - p {
                edges.push((base + i, base + r + j));
            }
        }
    }
    let rounds = round_robin_one_factorization(2 * r)?;
    for g in 0..t {
        let a0 = 2 * g * block;
        let a1 = (2 * g + 1) * block;
        let place = |v: usize| if v < r { a0 + v } else { a1 + v - r };
        for round in rounds.iter().take(p) {
            for &(x, y) in round {
                edges.push((place(x), place(y)));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("template plus matchings is simple");
    debug_assert_eq!(g.is_regular(), Some(r));
    Ok(g)
}

/// Connected k-regular graph (odd k >= 3) on k(k+2)+1 vertices with no
/// s-regular spanning subgraph for any 1 <= s <= k-1. Each of k blocks is a
/// K_{k+2} minus the edges (0,1), (0,2) and minus the matching
/// (3,4), (5,6), ..., (k, k+1); a hub vertex is joined to vertex 0 of every
/// block. Deleting the hub leaves k components of odd order k+2, which
/// kills every odd-s factor; the even-s cases are checked exhaustively at
/// k = 3 by `degree_constrained_factor`.
pub fn factorless_regular(k: usize) -> Result<Graph, ConstructionError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(ConstructionError::BadFactorlessParam(k));
    }
    let block = k + 2;
    let hub = k * block;
    let mut edges = Vec::new();
    for c in 0..k {
        let base = c * block;
        for i in 0..block {
            for j in i + 1..block {
                if i == 0 && j <= 2 {
                    continue;
                }
                if i >= 3 && i % 2 == 1 && j == i + 1 {
                    continue;
                }
                edges.push((base + i, base + j));
            }
        }
        // vertex 0 is each block's unique degree-(k-1) vertex
        edges.push((base, hub));
    }
    let g = Graph::from_edges(hub + 1, &edges).expect("blocks plus hub is simple");
    debug_assert_eq!(g.is_regular(), Some(k));
    debug_assert!(g.is_connected());
    Ok(g)
}

/// x disjoint paths on three vertices. Every edge meets exactly one other
/// edge, so the whole edge set is a 1-independent set of the line graph:
/// the family attaining mu_1 = 2n/3.
pub fn p3_packing_graph(x: usize) -> Result<Graph, ConstructionError> {
    if x == 0 {
        return Err(ConstructionError::EmptyPacking);
    }
    let mut edges = Vec::with_capacity(2 * x);
    for c in 0..x {
        edges.push((3 * c, 3 * c + 1));
        edges.push((3 * c + 1, 3 * c + 2));
    }
    Ok(Graph::from_edges(3 * x, &edges).expect("disjoint paths are simple"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Petersen,
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    /// t disjoint edges: the 1-regular graphs.
    DisjointEdges(usize),
}

pub fn named_graph(name: NamedGraph) -> Result<Graph, ConstructionError> {
    let bad = |msg: String| Err(ConstructionError::BadSize(msg));
    match name {
        NamedGraph::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Ok(Graph::from_edges(10, &edges).unwrap())
        }
        NamedGraph::Complete(n) => {
            if n == 0 {
                return bad("complete graph needs n >= 1".into());
            }
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return bad(format!("cycle needs n >= 3, got {n}"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        NamedGraph::Path(n) => {
            if n == 0 {
                return bad("path needs n >= 1".into());
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad(format!(
                    "complete bipartite graph needs both sides nonempty, got ({a}, {b})"
                ));
            }
            let mut edges = Vec::with_capacity(a * b);
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j));
                }
            }
            Ok(Graph::from_edges(a + b, &edges).unwrap())
        }
        NamedGraph::DisjointEdges(t) => {
            if t == 0 {
                return bad("edge union needs t >= 1".into());
            }
            let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
            Ok(Graph::from_edges(2 * t, &edges).unwrap())
        }
    }
}

/// Replayable description of a generated witness: enough to rebuild the
/// graph and to re-check the structural claims the family is used for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    SharpBipartite { r: usize, p: usize, t: usize },
    FactorlessRegular { k: usize },
    P3Packing { x: usize },
    Named(NamedGraph),
}

/// Machine-checkable claim attached to a recipe, re-verified after build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Order(usize),
    Regular(usize),
}

impl Recipe {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        let g = match *self {
            Recipe::SharpBipartite { r, p, t } => sharpness_bipartite(r, p, t)?,
            Recipe::FactorlessRegular { k } => factorless_regular(k)?,
            Recipe::P3Packing { x } => p3_packing_graph(x)?,
            Recipe::Named(name) => named_graph(name)?,
        };
        debug_assert!(self.claims().iter().all(|c| c.holds(&g)));
        Ok(g)
    }

    pub fn claims(&self) -> Vec<Claim> {
        match *self {
            Recipe::SharpBipartite { r, p, t } => {
                vec![Claim::Order(2 * t * (2 * r - p)), Claim::Regular(r)]
            }
            Recipe::FactorlessRegular { k } => {
                vec![Claim::Order(k * (k + 2) + 1), Claim::Regular(k)]
            }
            Recipe::P3Packing { x } => vec![Claim::Order(3 * x)],
            Recipe::Named(NamedGraph::Petersen) => vec![Claim::Order(10), Claim::Regular(3)],
            Recipe::Named(NamedGraph::Complete(n)) => {
                vec![Claim::Order(n), Claim::Regular(n.saturating_sub(1))]
            }
            Recipe::Named(NamedGraph::Cycle(n)) => vec![Claim::Order(n), Claim::Regular(2)],
            Recipe::Named(NamedGraph::Path(n)) => vec![Claim::Order(n)],
            Recipe::Named(NamedGraph::CompleteBipartite(a, b)) => {
                let mut claims = vec![Claim::Order(a + b)];
                if a == b {
                    claims.push(Claim::Regular(a));
                }
                claims
            }
            Recipe::Named(NamedGraph::DisjointEdges(t)) => {
                vec![Claim::Order(2 * t), Claim::Regular(1)]
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Recipe::SharpBipartite { r, p, t } => format!("sharp-bipartite(r={r},p={p},t={t})"),
            Recipe::FactorlessRegular { k } => format!("factorless-regular(k={k})"),
            Recipe::P3Packing { x } => format!("p3-packing(x={x})"),
            Recipe::Named(NamedGraph::Petersen) => "petersen".into(),
            Recipe::Named(NamedGraph::Complete(n)) => format!("complete(n={n})"),
            Recipe::Named(NamedGraph::Cycle(n)) => format!("cycle(n={n})"),
            Recipe::Named(NamedGraph::Path(n)) => format!("path(n={n})"),
            Recipe::Named(NamedGraph::CompleteBipartite(a, b)) => {
                format!("complete-bipartite(a={a},b={b})")
            }
            Recipe::Named(NamedGraph::DisjointEdges(t)) => format!("disjoint-edges(t={t})"),
        }
    }
}

impl Claim {
    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            Claim::Order(n) => g.n() == n,
            Claim::Regular(r) => g.is_regular() == Some(r),
        }
    }
}
