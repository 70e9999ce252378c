//! Spanning subgraphs with degree constraints: two-factorizations of
//! even-regular graphs, exhaustive [a, b]-factor search, and the reduction
//! that turns a [k-1, k]-factor into one with no two adjacent degree-k
//! vertices.

use crate::error::FactorError;
use crate::euler::euler_circuit;
use crate::graph::{EdgeIndex, Graph};
use crate::solver::maximum_matching;

/// Spanning subgraph of a base graph, stored as ids into the base's
/// canonical edge ordering. All base vertices are carried, so "spanning"
/// is structural; degree bounds are the caller's business.
#[derive(Clone, Debug)]
pub struct FactorSubgraph {
    base: Graph,
    idx: EdgeIndex,
    edge_ids: Vec<usize>,
    degrees: Vec<usize>,
}

impl FactorSubgraph {
    pub fn from_edge_ids(
        base: &Graph,
        ids: impl IntoIterator<Item = usize>,
    ) -> Result<Self, FactorError> {
        let idx = EdgeIndex::new(base);
        let mut edge_ids: Vec<usize> = ids.into_iter().collect();
        edge_ids.sort_unstable();
        if let Some(w) = edge_ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(FactorError::DuplicateEdgeId(w[0]));
        }
        let mut degrees = vec![0; base.n()];
        for &e in &edge_ids {
            if e >= idx.len() {
                return Err(FactorError::EdgeIdOutOfRange(e, idx.len()));
            }
            let (u, v) = idx.pair(e);
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(FactorSubgraph {
            base: base.clone(),
            idx,
            edge_ids,
            degrees,
        })
    }

    /// The base graph viewed as a factor of itself.
    pub fn full(base: &Graph) -> Self {
        Self::from_edge_ids(base, 0..base.m()).expect("identity factor is valid")
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edge_index(&self) -> &EdgeIndex {
        &self.idx
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn contains_edge(&self, id: usize) -> bool {
        self.edge_ids.binary_search(&id).is_ok()
    }

    /// The factor as a standalone graph on the same vertex set.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edge_ids.iter().map(|&e| self.idx.pair(e)).collect();
        Graph::from_edges(self.base.n(), &edges).expect("factor edges come from the base")
    }
}

/// Splits a 2s-regular graph into s spanning 2-regular factors. Each
/// component is walked by an Euler circuit; the circuit orientation gives
/// every vertex s outgoing and s incoming edges, and peeling perfect
/// matchings off the resulting s-regular bipartite out/in graph yields the
/// factors.
pub fn two_factorization(g: &Graph) -> Result<Vec<FactorSubgraph>, FactorError> {
    let r = g.is_regular().ok_or(FactorError::NotRegular)?;
    if r == 0 || r % 2 != 0 {
        return Err(FactorError::NotEvenRegular(r));
    }
    let s = r / 2;
    let idx = EdgeIndex::new(g);
    let mut rounds: Vec<Vec<usize>> = vec![Vec::new(); s];
    for comp in g.components() {
        let circuit = euler_circuit(g, &comp).expect("even-regular component has a circuit");
        // local bipartite graph: tails on the left, heads on the right
        let local: std::collections::HashMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let k = comp.len();
        let mut out_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k]; // (head, base edge id)
        for &(u, v) in &circuit {
            let e = idx.id(u, v).expect("circuit edge exists");
            out_arcs[local[&u]].push((local[&v], e));
        }
        for arcs in out_arcs.iter_mut() {
            arcs.sort_unstable();
        }
        for round in rounds.iter_mut() {
            let matching = bipartite_perfect_matching(&out_arcs, k);
            for (tail, head) in matching.iter().enumerate() {
                let pos = out_arcs[tail]
                    .iter()
                    .position(|&(h, _)| h == *head)
                    .expect("matched arc exists");
                let (_, e) = out_arcs[tail].remove(pos);
                round.push(e);
            }
        }
        debug_assert!(out_arcs.iter().all(Vec::is_empty));
    }
    rounds
        .into_iter()
        .map(|mut ids| {
            ids.sort_unstable();
            let f = FactorSubgraph::from_edge_ids(g, ids)?;
            debug_assert!(f.degrees().iter().all(|&d| d == 2));
            Ok(f)
        })
        .collect()
}

/// Kuhn's augmenting-path perfect matching on a regular bipartite arc list.
/// Returns, for each left vertex, the matched right vertex. Regularity
/// guarantees the matching is perfect.
fn bipartite_perfect_matching(out_arcs: &[Vec<(usize, usize)>], k: usize) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut right_mate = vec![NONE; k];
    fn try_place(
        tail: usize,
        out_arcs: &[Vec<(usize, usize)>],
        right_mate: &mut [usize],
        visited: &mut [bool],
    ) -> bool {
        for &(head, _) in &out_arcs[tail] {
            if visited[head] {
                continue;
            }
            visited[head] = true;
            if right_mate[head] == NONE
                || try_place(right_mate[head], out_arcs, right_mate, visited)
            {
                right_mate[head] = tail;
                return true;
            }
        }
        false
    }
    for tail in 0..k {
        let mut visited = vec![false; k];
        let ok = try_place(tail, out_arcs, &mut right_mate, &mut visited);
        debug_assert!(ok, "regular bipartite graphs satisfy Hall's condition");
    }
    let mut left_mate = vec![NONE; k];
    for (head, &tail) in right_mate.iter().enumerate() {
        left_mate[tail] = head;
    }
    left_mate
}

/// Exhaustive search for a spanning subgraph with every degree in [a, b].
/// `None` is a certificate of absence: the backtracking enumerates, per
/// component, every edge subset not already violating a degree cap or an
/// unreachable floor.
pub fn degree_constrained_factor(
    g: &Graph,
    a: usize,
    b: usize,
) -> Result<Option<FactorSubgraph>, FactorError> {
    if a > b {
        return Err(FactorError::BadDegreeBand(a, b));
    }
    if a > 0 && (0..g.n()).any(|v| g.degree(v) < a) {
        return Ok(None);
    }
    let idx = EdgeIndex::new(g);
    let mut chosen: Vec<usize> = Vec::new();
    for comp in g.components() {
        // parity cut: an exact k-factor on an odd count of odd-degree demands is impossible
        if a == b && (a * comp.len()) % 2 == 1 {
            return Ok(None);
        }
        let mut edges: Vec<usize> = Vec::new();
        for &v in &comp {
            for &u in g.neighbors(v) {
                if v < u {
                    edges.push(idx.id(v, u).expect("component edge"));
                }
            }
        }
        edges.sort_unstable();
        let mut deg = vec![0usize; g.n()];
        let mut pending = vec![0usize; g.n()];
        for &e in &edges {
            let (u, v) = idx.pair(e);
            pending[u] += 1;
            pending[v] += 1;
        }
        let mut picked = Vec::new();
        if !pick_edges(&idx, &edges, 0, a, b, &mut deg, &mut pending, &mut picked) {
            return Ok(None);
        }
        chosen.extend(picked);
    }
    Ok(Some(FactorSubgraph::from_edge_ids(g, chosen)?))
}

#[allow(clippy::too_many_arguments)] // recursive backtracker; the state is the signature
fn pick_edges(
    idx: &EdgeIndex,
    edges: &[usize],
    at: usize,
    a: usize,
    b: usize,
    deg: &mut [usize],
    pending: &mut [usize],
    picked: &mut Vec<usize>,
) -> bool {
    if at == edges.len() {
        return edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = idx.pair(e);
                [u, v]
            })
            .all(|v| deg[v] >= a);
    }
    let e = edges[at];
    let (u, v) = idx.pair(e);
    // include first: finds dense factors quickly when they exist
    if deg[u] < b && deg[v] < b {
        deg[u] += 1;
        deg[v] += 1;
        pending[u] -= 1;
        pending[v] -= 1;
        picked.push(e);
        if pick_edges(idx, edges, at + 1, a, b, deg, pending, picked) {
            return true;
        }
        picked.pop();
        pending[u] += 1;
        pending[v] += 1;
        deg[u] -= 1;
        deg[v] -= 1;
    }
    // exclude: only viable if both ends can still reach the floor
    pending[u] -= 1;
    pending[v] -= 1;
    let viable = deg[u] + pending[u] >= a && deg[v] + pending[v] >= a;
    let found = viable && pick_edges(idx, edges, at + 1, a, b, deg, pending, picked);
    pending[u] += 1;
    pending[v] += 1;
    found
}

/// Repeatedly deletes the smallest edge joining two degree-k vertices of a
/// [k-1, k]-factor. Each deletion drops both endpoints to k-1, so the result
/// stays a [k-1, k]-factor and ends with no two degree-k vertices adjacent.
pub fn reduce_factor(h: &FactorSubgraph, k: usize) -> Result<FactorSubgraph, FactorError> {
    if k == 0 {
        return Err(FactorError::BadDegreeBand(0, 0));
    }
    for (v, &d) in h.degrees().iter().enumerate() {
        if d + 1 < k || d > k {
            return Err(FactorError::OutsideDegreeBand {
                lo: k - 1,
                hi: k,
                vertex: v,
                degree: d,
            });
        }
    }
    let mut ids: Vec<usize> = h.edge_ids().to_vec();
    let mut deg = h.degrees().to_vec();
    loop {
        let next = ids.iter().copied().find(|&e| {
            let (u, v) = h.edge_index().pair(e);
            deg[u] == k && deg[v] == k
        });
        match next {
            Some(e) => {
                let (u, v) = h.edge_index().pair(e);
                deg[u] -= 1;
                deg[v] -= 1;
                ids.retain(|&x| x != e);
            }
            None => break,
        }
    }
    FactorSubgraph::from_edge_ids(h.base(), ids)
}

/// Checks the properties that make a [k-1, k]-factor useful as a
/// q-independent edge set: degree band, no adjacent degree-k pair, line
/// degree at most 2k-3, and at least ceil(n(k-1)/2) edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RFactorReport {
    pub degrees_in_band: bool,
    pub no_adjacent_peak: bool,
    pub line_degree_ok: bool,
    pub edge_count_ok: bool,
    pub max_line_degree: Option<usize>,
    pub edge_count: usize,
    pub required_edges: usize,
}

impl RFactorReport {
    pub fn pass(&self) -> bool {
        self.degrees_in_band && self.no_adjacent_peak && self.line_degree_ok && self.edge_count_ok
    }
}

pub fn validate_r_factor(h: &FactorSubgraph, k: usize) -> RFactorReport {
    assert!(k >= 1, "degree band needs k >= 1");
    let n = h.base().n();
    let degrees_in_band = h.degrees().iter().all(|&d| d + 1 == k || d == k);
    let mut no_adjacent_peak = true;
    let mut max_line_degree = None;
    for &e in h.edge_ids() {
        let (u, v) = h.edge_index().pair(e);
        if h.degree(u) == k && h.degree(v) == k {
            no_adjacent_peak = false;
        }
        let ld = h.degree(u) + h.degree(v) - 2;
        max_line_degree = Some(max_line_degree.map_or(ld, |m: usize| m.max(ld)));
    }
    let line_degree_ok = match max_line_degree {
        Some(ld) => ld as i64 <= 2 * k as i64 - 3,
        None => true,
    };
    let required_edges = (n * (k - 1)).div_ceil(2);
    RFactorReport {
        degrees_in_band,
        no_adjacent_peak,
        line_degree_ok,
        edge_count_ok: h.edge_count() >= required_edges,
        max_line_degree,
        edge_count: h.edge_count(),
        required_edges,
    }
}

/// For a cubic graph: delete a maximum matching, then one surviving edge at
/// each unsaturated vertex (unsaturated vertices form an independent set, so
/// these deletions are distinct). What remains has maximum degree 2 and at
/// least (17n - 2)/18 edges, since the matching has at least (4n - 1)/9.
pub fn cubic_degree2_subgraph(g: &Graph) -> Result<FactorSubgraph, FactorError> {
    if g.is_regular() != Some(3) {
        return Err(FactorError::WrongRegularity(3));
    }
    let idx = EdgeIndex::new(g);
    let matching = maximum_matching(g);
    let mut removed = vec![false; idx.len()];
    let mut saturated = vec![false; g.n()];
    for &e in &matching.edges {
        removed[e] = true;
        let (u, v) = idx.pair(e);
        saturated[u] = true;
        saturated[v] = true;
    }
    for (v, &sat) in saturated.iter().enumerate() {
        if sat {
            continue;
        }
        // none of v's edges were matched, so all three survive; drop the smallest
        let e = g
            .neighbors(v)
            .iter()
            .map(|&u| idx.id(v, u).expect("incident edge"))
            .filter(|&e| !removed[e])
            .min()
            .expect("unsaturated cubic vertex keeps its edges");
        removed[e] = true;
    }
    let keep: Vec<usize> = (0..idx.len()).filter(|&e| !removed[e]).collect();
    let f = FactorSubgraph::from_edge_ids(g, keep)?;
    debug_assert!(f.degrees().iter().all(|&d| d <= 2));
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
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

    fn assert_two_factorization(g: &Graph, factors: &[FactorSubgraph]) {
        let r = g.is_regular().unwrap();
        assert_eq!(factors.len(), r / 2);
        let mut counts = vec![0usize; g.m()];
        for f in factors {
            assert!(
                f.degrees().iter().all(|&d| d == 2),
                "factor must be 2-regular"
            );
            for &e in f.edge_ids() {
                counts[e] += 1;
            }
        }
        assert!(
            counts.iter().all(|&c| c == 1),
            "factors must partition the edges"
        );
    }

    #[test]
    fn cycle_is_its_own_two_factorization() {
        let c6 = cycle(6);
        let fs = two_factorization(&c6).unwrap();
        assert_two_factorization(&c6, &fs);
        assert_eq!(fs[0].edge_count(), 6);
    }

    #[test]
    fn k5_splits_into_two_hamiltonian_factors() {
        let k5 = complete(5);
        let fs = two_factorization(&k5).unwrap();
        assert_two_factorization(&k5, &fs);
    }

    #[test]
    fn disconnected_even_regular_graphs_factorize() {
        // two disjoint copies of K_5
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let fs = two_factorization(&g).unwrap();
        assert_two_factorization(&g, &fs);
    }

    #[test]
    fn odd_regularity_is_rejected() {
        assert_eq!(
            two_factorization(&complete(4)).unwrap_err(),
            FactorError::NotEvenRegular(3)
        );
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(two_factorization(&p3).unwrap_err(), FactorError::NotRegular);
    }

    #[test]
    fn factor_band_search_finds_and_refutes() {
        // any cubic graph is a [2,3]-factor of itself
        let found = degree_constrained_factor(&petersen(), 2, 3)
            .unwrap()
            .unwrap();
        assert!(found.degrees().iter().all(|&d| (2..=3).contains(&d)));

        // K_5 has a 2-factor
        let two = degree_constrained_factor(&complete(5), 2, 2)
            .unwrap()
            .unwrap();
        assert!(two.degrees().iter().all(|&d| d == 2));

        // C_5 has no perfect matching: odd order parity cut
        assert!(degree_constrained_factor(&cycle(5), 1, 1)
            .unwrap()
            .is_none());

        // a path has no 2-factor: endpoint cannot reach the floor
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(degree_constrained_factor(&p4, 2, 2).unwrap().is_none());

        assert_eq!(
            degree_constrained_factor(&cycle(4), 2, 1).unwrap_err(),
            FactorError::BadDegreeBand(2, 1)
        );
    }

    #[test]
    fn reduction_of_k4_leaves_a_four_cycle() {
        let k4 = complete(4);
        let h = FactorSubgraph::full(&k4);
        let reduced = reduce_factor(&h, 3).unwrap();
        // deletions: (0,1) first, then (2,3); the quadrilateral remains
        assert_eq!(reduced.edge_count(), 4);
        assert!(reduced.degrees().iter().all(|&d| d == 2));
        let kept: Vec<(usize, usize)> = reduced
            .edge_ids()
            .iter()
            .map(|&e| reduced.edge_index().pair(e))
            .collect();
        assert_eq!(kept, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let report = validate_r_factor(&reduced, 3);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn an_already_reduced_factor_is_unchanged() {
        let c6 = cycle(6);
        let h = FactorSubgraph::full(&c6);
        let reduced = reduce_factor(&h, 3).unwrap();
        assert_eq!(reduced.edge_ids(), h.edge_ids());
    }

    #[test]
    fn validation_flags_adjacent_peaks() {
        let k4 = complete(4);
        let h = FactorSubgraph::full(&k4);
        let report = validate_r_factor(&h, 3);
        assert!(!report.no_adjacent_peak);
        assert!(!report.line_degree_ok); // line degree 4 > 3
        assert!(!report.pass());
        assert_eq!(report.required_edges, 4);
    }

    #[test]
    fn cubic_pruning_keeps_enough_edges() {
        for g in [complete(4), petersen()] {
            let n = g.n();
            let f = cubic_degree2_subgraph(&g).unwrap();
            assert!(f.degrees().iter().all(|&d| d <= 2));
            assert!(f.edge_count() * 18 >= 17 * n - 2, "{}", f.edge_count());
        }
        assert_eq!(
            cubic_degree2_subgraph(&cycle(6)).unwrap_err(),
            FactorError::WrongRegularity(3)
        );
    }

    #[test]
    fn factor_subgraph_rejects_bad_ids() {
        let c4 = cycle(4);
        assert_eq!(
            FactorSubgraph::from_edge_ids(&c4, vec![0, 0]).unwrap_err(),
            FactorError::DuplicateEdgeId(0)
        );
        assert_eq!(
            FactorSubgraph::from_edge_ids(&c4, vec![9]).unwrap_err(),
            FactorError::EdgeIdOutOfRange(9, 4)
        );
    }
}
