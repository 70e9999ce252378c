//! Branch-and-bound maximum p-independent set.
//!
//! Branches on a maximum-degree undecided vertex (ties to the smaller id),
//! include side first. Including a vertex propagates forced exclusions:
//! anything whose chosen-neighbor budget is exhausted can never enter.
//! Pruning combines the trivial chosen-plus-undecided bound with the degree
//! bound n'r'/(2r' - p) whenever the undecided residual happens to be
//! r'-regular with r' > p; both bounds are sound, so the first maximum found
//! is a true maximum. Everything is deterministic.

use crate::graph::Graph;

use super::{is_p_independent, IndependenceResult};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Und,
    In,
    Out,
}

pub fn alpha_p_exact(g: &Graph, p: usize) -> IndependenceResult {
    if p >= g.max_degree() {
        // every vertex keeps at most max_degree <= p chosen neighbors
        return IndependenceResult {
            value: g.n(),
            witness: (0..g.n()).collect(),
            p,
            nodes: 0,
        };
    }
    let mut s = Search {
        g,
        p,
        state: vec![Cell::Und; g.n()],
        in_count: vec![0; g.n()],
        und_deg: (0..g.n()).map(|v| g.degree(v)).collect(),
        n_und: g.n(),
        cur: Vec::new(),
        best: greedy_seed(g, p),
        nodes: 0,
    };
    s.search();
    let mut witness = s.best;
    witness.sort_unstable();
    debug_assert!(is_p_independent(g, &witness, p));
    IndependenceResult {
        value: witness.len(),
        witness,
        p,
        nodes: s.nodes,
    }
}

/// Ascending-id greedy p-independent set; only used to seed the bound.
fn greedy_seed(g: &Graph, p: usize) -> Vec<usize> {
    let mut chosen = vec![false; g.n()];
    let mut count = vec![0usize; g.n()];
    let mut set = Vec::new();
    for v in 0..g.n() {
        let fits = count[v] <= p && g.neighbors(v).iter().all(|&u| !chosen[u] || count[u] < p);
        if fits {
            chosen[v] = true;
            set.push(v);
            for &u in g.neighbors(v) {
                count[u] += 1;
            }
        }
    }
    set
}

enum Op {
    In(usize),
    Out(usize),
}

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    state: Vec<Cell>,
    in_count: Vec<usize>, // chosen neighbors, maintained for every vertex
    und_deg: Vec<usize>,  // undecided neighbors, maintained for every vertex
    n_und: usize,
    cur: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn search(&mut self) {
        self.nodes += 1;
        if self.cur.len() + self.n_und <= self.best.len() {
            return;
        }
        if self.n_und == 0 {
            // strictly better by the bound above
            self.best = self.cur.clone();
            return;
        }
        if let Some(cap) = self.residual_degree_cap() {
            if self.cur.len() + cap <= self.best.len() {
                return;
            }
        }

        let v = self.branch_vertex();

        let can_include = self.in_count[v] <= self.p
            && self
                .g
                .neighbors(v)
                .iter()
                .all(|&u| self.state[u] != Cell::In || self.in_count[u] < self.p);
        if can_include {
            let mut undo = Vec::new();
            self.apply_in(v, &mut undo);
            self.propagate(v, &mut undo);
            self.search();
            self.rollback(undo);
        }

        let mut undo = Vec::new();
        self.apply_out(v, &mut undo);
        self.search();
        self.rollback(undo);
    }

    /// Degree bound on how many undecided vertices can still join, valid when
    /// the residual (undecided-induced) graph is r'-regular with r' > p: any
    /// addition is p-independent inside the residual, so at most
    /// floor(n'r'/(2r' - p)) of them fit.
    fn residual_degree_cap(&self) -> Option<usize> {
        let mut rdeg = None;
        for v in 0..self.g.n() {
            if self.state[v] == Cell::Und {
                match rdeg {
                    None => rdeg = Some(self.und_deg[v]),
                    Some(d) if d != self.und_deg[v] => return None,
                    _ => {}
                }
            }
        }
        let d = rdeg?;
        (d > self.p).then(|| self.n_und * d / (2 * d - self.p))
    }

    fn branch_vertex(&self) -> usize {
        let mut pick = usize::MAX;
        let mut deg = 0;
        for v in 0..self.g.n() {
            if self.state[v] == Cell::Und && (pick == usize::MAX || self.und_deg[v] > deg) {
                pick = v;
                deg = self.und_deg[v];
            }
        }
        pick
    }

    fn apply_in(&mut self, v: usize, undo: &mut Vec<Op>) {
        self.state[v] = Cell::In;
        self.n_und -= 1;
        self.cur.push(v);
        for &u in self.g.neighbors(v) {
            self.in_count[u] += 1;
            self.und_deg[u] -= 1;
        }
        undo.push(Op::In(v));
    }

    fn apply_out(&mut self, v: usize, undo: &mut Vec<Op>) {
        self.state[v] = Cell::Out;
        self.n_und -= 1;
        for &u in self.g.neighbors(v) {
            self.und_deg[u] -= 1;
        }
        undo.push(Op::Out(v));
    }

    /// Exclusions forced by including `v`. Excluding never changes chosen
    /// counts, so one pass is enough: no cascade is possible.
    fn propagate(&mut self, v: usize, undo: &mut Vec<Op>) {
        let mut forced = Vec::new();
        for &u in self.g.neighbors(v) {
            match self.state[u] {
                Cell::Und => {
                    if self.in_count[u] > self.p || self.in_count[v] == self.p {
                        forced.push(u);
                    }
                }
                Cell::In => {
                    if self.in_count[u] == self.p {
                        for &w in self.g.neighbors(u) {
                            if self.state[w] == Cell::Und {
                                forced.push(w);
                            }
                        }
                    }
                }
                Cell::Out => {}
            }
        }
        for w in forced {
            if self.state[w] == Cell::Und {
                self.apply_out(w, undo);
            }
        }
    }

    fn rollback(&mut self, undo: Vec<Op>) {
        for op in undo.into_iter().rev() {
            match op {
                Op::In(v) => {
                    self.state[v] = Cell::Und;
                    self.n_und += 1;
                    self.cur.pop();
                    for &u in self.g.neighbors(v) {
                        self.in_count[u] -= 1;
                        self.und_deg[u] += 1;
                    }
                }
                Op::Out(v) => {
                    self.state[v] = Cell::Und;
                    self.n_und += 1;
                    for &u in self.g.neighbors(v) {
                        self.und_deg[u] += 1;
                    }
                }
            }
        }
    }
}
