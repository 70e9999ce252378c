//! Reference solver: plain subset enumeration. Slow but simple enough to
//! trust, it is the yardstick the branch-and-bound solver is tested against.

use crate::error::SolverError;
use crate::graph::Graph;

use super::{is_p_independent, IndependenceResult};

pub const BRUTE_FORCE_CAP: usize = 28;

/// Exhaustive maximum p-independent set. The only pruning is abandoning
/// partial sets that are already infeasible, which cannot exclude a maximum:
/// a vertex over its budget stays over it in every superset.
pub fn alpha_p_bruteforce(g: &Graph, p: usize) -> Result<IndependenceResult, SolverError> {
    if g.n() > BRUTE_FORCE_CAP {
        return Err(SolverError::BruteForceCap(g.n(), BRUTE_FORCE_CAP));
    }
    let mut st = Enumeration {
        g,
        p,
        chosen_count: vec![0; g.n()],
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    st.visit(0);
    debug_assert!(is_p_independent(g, &st.best, p));
    Ok(IndependenceResult {
        value: st.best.len(),
        witness: st.best,
        p,
        nodes: st.nodes,
    })
}

struct Enumeration<'a> {
    g: &'a Graph,
    p: usize,
    chosen_count: Vec<usize>, // chosen neighbors per vertex
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Enumeration<'_> {
    fn visit(&mut self, v: usize) {
        self.nodes += 1;
        if v == self.g.n() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        // include v if no chosen vertex (v itself included) goes over budget
        let fits = self.chosen_count[v] <= self.p
            && self
                .g
                .neighbors(v)
                .iter()
                .all(|&u| !self.current.contains(&u) || self.chosen_count[u] < self.p);
        if fits {
            self.current.push(v);
            for u in 0..self.g.n() {
                if self.g.has_edge(u, v) {
                    self.chosen_count[u] += 1;
                }
            }
            self.visit(v + 1);
            for u in 0..self.g.n() {
                if self.g.has_edge(u, v) {
                    self.chosen_count[u] -= 1;
                }
            }
            self.current.pop();
        }
        self.visit(v + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn values_on_small_named_graphs() {
        let c5 = cycle(5);
        assert_eq!(alpha_p_bruteforce(&c5, 0).unwrap().value, 2);
        assert_eq!(alpha_p_bruteforce(&c5, 1).unwrap().value, 3);
        assert_eq!(alpha_p_bruteforce(&c5, 2).unwrap().value, 5);

        let c6 = cycle(6);
        assert_eq!(alpha_p_bruteforce(&c6, 1).unwrap().value, 4);

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(alpha_p_bruteforce(&k4, 0).unwrap().value, 1);
        assert_eq!(alpha_p_bruteforce(&k4, 2).unwrap().value, 3);
        assert_eq!(alpha_p_bruteforce(&k4, 3).unwrap().value, 4);
    }

    #[test]
    fn empty_graph_yields_zero() {
        let r = alpha_p_bruteforce(&Graph::empty(0), 1).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn witness_is_the_lexicographically_first_maximum() {
        // C_4 with p = 0 has maxima {0,2} and {1,3}; include-first order finds {0,2}
        let r = alpha_p_bruteforce(&cycle(4), 0).unwrap();
        assert_eq!(r.witness, vec![0, 2]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            alpha_p_bruteforce(&Graph::empty(29), 0).unwrap_err(),
            SolverError::BruteForceCap(29, BRUTE_FORCE_CAP)
        );
    }
}
