//! Exact minimum path cover (vertex-disjoint paths covering every vertex),
//! by subset dynamic programming: first which subsets carry a Hamiltonian
//! path and with which endpoints, then a minimum partition into such
//! subsets. Exponential, hence the hard cap on the order.

use crate::error::FactorError;
use crate::graph::Graph;

pub const PATH_COVER_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCover {
    pub number: usize,
    /// Vertex-disjoint paths covering every vertex; singletons allowed.
    pub paths: Vec<Vec<usize>>,
}

pub fn path_cover_number(g: &Graph) -> Result<PathCover, FactorError> {
    let n = g.n();
    if n > PATH_COVER_CAP {
        return Err(FactorError::PathCoverCap(n, PATH_COVER_CAP));
    }
    if n == 0 {
        return Ok(PathCover {
            number: 0,
            paths: Vec::new(),
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;

    // endpoints[s]: vertices v such that the subgraph on s has a Hamiltonian
    // path ending at v
    let mut endpoints = vec![0u32; 1 << n];
    for v in 0..n {
        endpoints[1 << v] = 1 << v;
    }
    for s in 1..=full {
        if s.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u32;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if endpoints[(s ^ (1 << v)) as usize] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        endpoints[s as usize] = ends;
    }

    // cover[s]: minimum number of paths partitioning s; the block containing
    // the lowest vertex of s is enumerated directly
    let mut cover = vec![u8::MAX; 1 << n];
    cover[0] = 0;
    for s in 1..=full {
        let low = 1u32 << s.trailing_zeros();
        let rest = s ^ low;
        let mut sub = rest;
        let mut best = u8::MAX;
        loop {
            let block = sub | low;
            if endpoints[block as usize] != 0 {
                best = best.min(1 + cover[(s ^ block) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        cover[s as usize] = best;
    }

    // reconstruct one optimal partition, smallest valid block choice first
    let mut paths = Vec::new();
    let mut s = full;
    while s != 0 {
        let low = 1u32 << s.trailing_zeros();
        let rest = s ^ low;
        let mut sub = rest;
        let block = loop {
            let block = sub | low;
            if endpoints[block as usize] != 0
                && cover[s as usize] == 1 + cover[(s ^ block) as usize]
            {
                break block;
            }
            debug_assert!(sub != 0, "some block must realize the optimum");
            sub = (sub - 1) & rest;
        };
        paths.push(walk_path(block, &endpoints, &adj));
        s ^= block;
    }
    Ok(PathCover {
        number: cover[full as usize] as usize,
        paths,
    })
}

/// Unwinds one Hamiltonian path of `block`, preferring the smallest endpoint
/// at each step so reconstruction is deterministic.
fn walk_path(block: u32, endpoints: &[u32], adj: &[u32]) -> Vec<usize> {
    let mut rev = Vec::new();
    let mut s = block;
    let mut v = endpoints[s as usize].trailing_zeros() as usize;
    loop {
        rev.push(v);
        let prev = s ^ (1 << v);
        if prev == 0 {
            break;
        }
        let candidates = endpoints[prev as usize] & adj[v];
        debug_assert!(candidates != 0);
        s = prev;
        v = candidates.trailing_zeros() as usize;
    }
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_cover(g: &Graph, cover: &PathCover) {
        let mut seen = vec![false; g.n()];
        assert_eq!(cover.number, cover.paths.len());
        for path in &cover.paths {
            assert!(!path.is_empty());
            for w in path.windows(2) {
                assert!(g.has_edge(w[0], w[1]), "path steps must be edges");
            }
            for &v in path {
                assert!(!seen[v], "paths must be disjoint");
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&b| b), "paths must cover every vertex");
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn paths_cycles_and_petersen() {
        let p7 = Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let c = path_cover_number(&p7).unwrap();
        assert_eq!(c.number, 1);
        check_cover(&p7, &c);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let c = path_cover_number(&two_k2).unwrap();
        assert_eq!(c.number, 2);
        check_cover(&two_k2, &c);

        let c = path_cover_number(&petersen()).unwrap();
        assert_eq!(c.number, 1, "a Hamiltonian path exists");
        check_cover(&petersen(), &c);
    }

    #[test]
    fn isolated_vertices_are_singleton_paths() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let c = path_cover_number(&g).unwrap();
        assert_eq!(c.number, 2);
        check_cover(&g, &c);
        let empty = Graph::empty(4);
        assert_eq!(path_cover_number(&empty).unwrap().number, 4);
    }

    #[test]
    fn zero_vertices_need_zero_paths() {
        assert_eq!(path_cover_number(&Graph::empty(0)).unwrap().number, 0);
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(17);
        assert_eq!(
            path_cover_number(&big).unwrap_err(),
            FactorError::PathCoverCap(17, PATH_COVER_CAP)
        );
    }
}
