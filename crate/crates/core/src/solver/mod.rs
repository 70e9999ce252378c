//! Exact solvers for p-independence on a graph and on its line graph.

mod alpha;
mod bounds;
mod brute;
mod matching;

pub use alpha::alpha_p_exact;
pub use bounds::{lower_bound_matching, upper_bound_alpha_p, AlphaUpperBounds, Rational};
pub use brute::{alpha_p_bruteforce, BRUTE_FORCE_CAP};
pub use matching::{maximum_matching, MatchingResult};

use crate::error::GraphError;
use crate::graph::Graph;
use crate::line_graph::line_graph;

/// Result of an exact p-independence computation. `witness` is one maximum
/// set (sorted); maximum sets are rarely unique, so only its size and
/// validity are contractual. `nodes` counts search states, for regression
/// visibility only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub p: usize,
    pub nodes: u64,
}

/// True iff every vertex of `set` has at most `p` neighbors inside `set`.
/// Deliberately recounts from scratch; both solvers re-check their witnesses
/// through this.
pub fn is_p_independent(g: &Graph, set: &[usize], p: usize) -> bool {
    let mut chosen = vec![false; g.n()];
    for &v in set {
        if v >= g.n() || chosen[v] {
            return false;
        }
        chosen[v] = true;
    }
    set.iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&u| chosen[u]).count() <= p)
}

/// Maximum q-matching, computed as maximum q-independence on the line graph.
/// Witness entries are base-graph edge ids (vertex `e` of the line graph is
/// edge `e` of the base edge ordering).
pub fn mu_q(g: &Graph, q: usize) -> Result<IndependenceResult, GraphError> {
    let lgm = line_graph(g)?;
    Ok(alpha_p_exact(lgm.lg(), q))
}
