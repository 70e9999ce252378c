//! Euler circuits via Hierholzer's algorithm.

use crate::error::EulerError;
use crate::graph::{EdgeIndex, Graph};

/// Closed trail through every edge of `component`, returned as directed
/// pairs in trail order (the head of each pair is the tail of the next, and
/// the trail ends where it started). The input must be one whole connected
/// component of `g` with all degrees even. Ties are broken toward the
/// smallest available neighbor, starting from the smallest vertex, so the
/// output is deterministic.
pub fn euler_circuit(g: &Graph, component: &[usize]) -> Result<Vec<(usize, usize)>, EulerError> {
    if component.is_empty() {
        return Err(EulerError::EmptySet);
    }
    let mut member = vec![false; g.n()];
    for &v in component {
        if v >= g.n() {
            return Err(EulerError::VertexOutOfRange(v));
        }
        if member[v] {
            return Err(EulerError::DuplicateVertex(v));
        }
        member[v] = true;
    }
    for &v in component {
        for &u in g.neighbors(v) {
            if !member[u] {
                return Err(EulerError::NotClosed(v.min(u), v.max(u)));
            }
        }
        if !g.degree(v).is_multiple_of(2) {
            return Err(EulerError::OddDegree(v, g.degree(v)));
        }
    }
    // connectivity within the set
    let start = *component.iter().min().expect("nonempty");
    let mut seen = vec![false; g.n()];
    let mut queue = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                reached += 1;
                queue.push(u);
            }
        }
    }
    if reached != component.len() {
        return Err(EulerError::Disconnected);
    }

    let idx = EdgeIndex::new(g);
    let mut used = vec![false; idx.len()];
    let mut next = vec![0usize; g.n()]; // per-vertex cursor into the sorted neighbor list
    let mut stack = vec![start];
    let mut walk = Vec::new();
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while next[v] < g.degree(v) {
            let u = g.neighbors(v)[next[v]];
            let e = idx.id(v, u).expect("neighbor implies indexed edge");
            if used[e] {
                next[v] += 1;
                continue;
            }
            used[e] = true;
            stack.push(u);
            advanced = true;
            break;
        }
        if !advanced {
            walk.push(v);
            stack.pop();
        }
    }
    walk.reverse();
    debug_assert_eq!(
        walk.len(),
        component.iter().map(|&v| g.degree(v)).sum::<usize>() / 2 + 1
    );
    Ok(walk.windows(2).map(|w| (w[0], w[1])).collect())
}
