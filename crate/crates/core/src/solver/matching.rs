//! Maximum cardinality matching via Edmonds' blossom algorithm, in the
//! classic O(n^3) contract-and-augment formulation: grow an alternating BFS
//! forest from each free vertex, contract odd cycles to their base, augment
//! when another free vertex is reached.

use std::collections::VecDeque;

use crate::graph::{EdgeIndex, Graph};

/// `edges` are ids into the base graph's canonical `EdgeIndex`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    pub edges: Vec<usize>,
}

const NONE: usize = usize::MAX;

pub fn maximum_matching(g: &Graph) -> MatchingResult {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        // cheap greedy start; the search below only pays for what is left
        if mate[v] == NONE {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| mate[u] == NONE) {
                mate[v] = u;
                mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if mate[root] == NONE {
            augment_from(g, root, &mut mate);
        }
    }
    let idx = EdgeIndex::new(g);
    let edges: Vec<usize> = idx
        .pairs()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| mate[u] == v)
        .map(|(id, _)| id)
        .collect();
    MatchingResult {
        size: edges.len(),
        edges,
    }
}

struct Forest<'a> {
    g: &'a Graph,
    mate: &'a mut Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>, // vertex sits at an even position in the forest
}

fn augment_from(g: &Graph, root: usize, mate: &mut Vec<usize>) -> bool {
    let n = g.n();
    let mut f = Forest {
        g,
        mate,
        parent: vec![NONE; n],
        base: (0..n).collect(),
        outer: vec![false; n],
    };
    f.outer[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in f.g.neighbors(v) {
            if f.base[v] == f.base[to] || f.mate[v] == to {
                continue;
            }
            if to == root || (f.mate[to] != NONE && f.parent[f.mate[to]] != NONE) {
                // two outer vertices meet: contract the blossom to its base
                let cur_base = f.lca(v, to);
                let mut blossom = vec![false; n];
                f.mark_path(v, cur_base, to, &mut blossom);
                f.mark_path(to, cur_base, v, &mut blossom);
                for i in 0..n {
                    if blossom[f.base[i]] {
                        f.base[i] = cur_base;
                        if !f.outer[i] {
                            f.outer[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if f.parent[to] == NONE {
                f.parent[to] = v;
                if f.mate[to] == NONE {
                    // free inner vertex: flip the alternating path back to root
                    let mut u = to;
                    while u != NONE {
                        let pv = f.parent[u];
                        let next = f.mate[pv];
                        f.mate[u] = pv;
                        f.mate[pv] = u;
                        u = next;
                    }
                    return true;
                }
                let m = f.mate[to];
                f.outer[m] = true;
                queue.push_back(m);
            }
        }
    }
    false
}

impl Forest<'_> {
    fn lca(&self, a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        let mut x = a;
        loop {
            x = self.base[x];
            on_path[x] = true;
            if self.mate[x] == NONE {
                break;
            }
            x = self.parent[self.mate[x]];
        }
        let mut y = b;
        loop {
            y = self.base[y];
            if on_path[y] {
                return y;
            }
            y = self.parent[self.mate[y]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            blossom[self.base[v]] = true;
            blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}
