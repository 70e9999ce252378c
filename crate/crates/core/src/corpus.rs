//! Desk-scale corpora of regular graphs: exhaustive enumeration up to
//! isomorphism, canonical certificates, and graph6 file ingestion.
//!
//! Certificates double as the deduplication key and the deterministic order
//! of every enumerated corpus, so corpus content is stable across runs.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CorpusError;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};

pub const CANONICAL_CAP: usize = 12;
pub const ENUMERATION_CAP: usize = 12;

/// Canonical certificate: the lexicographically smallest graph6 encoding of
/// the graph over all vertex relabelings. Certs are equal iff the graphs are
/// isomorphic, at any order the cap admits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    cert: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.cert
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.cert).expect("graph6 is ASCII")
    }
}

/// What a corpus load produced and what it passed over. Each `skipped`
/// entry pairs a context number (graph order for enumeration skips, 1-based
/// line number for file skips) with the reason.
#[derive(Clone, Debug)]
pub struct CorpusLoad {
    pub graphs: Vec<Graph>,
    pub skipped: Vec<(usize, String)>,
}

/// A corpus source: enumerate internally, or ingest a graph6 file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    Enumerate {
        r: usize,
        n_min: usize,
        n_max: usize,
        connected_only: bool,
    },
    File {
        path: PathBuf,
    },
}

impl CorpusSpec {
    /// File corpora are read strictly: one malformed line aborts the load.
    pub fn load(&self) -> Result<CorpusLoad, CorpusError> {
        match self {
            CorpusSpec::Enumerate {
                r,
                n_min,
                n_max,
                connected_only,
            } => enumerate_regular(*r, *n_min, *n_max, *connected_only),
            CorpusSpec::File { path } => ingest_graph6_file(path, true),
        }
    }
}

/// Smallest graph6 string over all relabelings of `g`.
///
/// The graph6 payload lists adjacency bits column by column (vertex k
/// against vertices 0..k), so the minimum is found by fixing positions one
/// at a time: keep every prefix whose column sequence is still minimal,
/// extend each by every viable candidate, and retain the extensions
/// achieving the smallest next column. A candidate is skipped when a
/// not-yet-placed twin with smaller index exists — swapping the two is an
/// automorphism, so the smaller twin alone preserves a minimal completion.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CorpusError> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(CorpusError::CanonicalCap(n, CANONICAL_CAP));
    }
    let masks = adjacency_masks(g);
    let order = canonical_order(&masks);
    let relabeled = g.relabel(&order).expect("orderings are permutations");
    Ok(CanonicalForm {
        cert: write_graph6(&relabeled)
            .expect("order under cap")
            .into_bytes(),
    })
}

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect()
}

/// One vertex ordering realizing the minimal column-by-column adjacency
/// bitstring. Bit `k-1-i` of column k holds adjacency against position i,
/// so integer comparison of columns is lexicographic comparison of bits.
fn canonical_order(masks: &[u16]) -> Vec<usize> {
    let n = masks.len();
    if n == 0 {
        return Vec::new();
    }
    let mut frontier: Vec<([u8; 12], u16)> = Vec::new();
    for x in 0..n {
        if !has_smaller_unused_twin(masks, x, 0) {
            let mut pref = [0u8; 12];
            pref[0] = x as u8;
            frontier.push((pref, 1 << x));
        }
    }
    let mut next: Vec<([u8; 12], u16)> = Vec::new();
    for k in 1..n {
        let mut best = u32::MAX;
        next.clear();
        for &(pref, used) in &frontier {
            for x in 0..n {
                if used & (1 << x) != 0 || has_smaller_unused_twin(masks, x, used) {
                    continue;
                }
                let mut col = 0u32;
                for (i, &p) in pref[..k].iter().enumerate() {
                    col |= ((masks[x] >> p) as u32 & 1) << (k - 1 - i);
                }
                if col > best {
                    continue;
                }
                if col < best {
                    best = col;
                    next.clear();
                }
                let mut ext = pref;
                ext[k] = x as u8;
                next.push((ext, used | 1 << x));
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    frontier[0].0[..n].iter().map(|&b| b as usize).collect()
}

/// True iff some unused y < x has the same neighbors as x outside {x, y}.
/// The transposition (x y) is then an automorphism.
fn has_smaller_unused_twin(masks: &[u16], x: usize, used: u16) -> bool {
    (0..x).any(|y| used & (1 << y) == 0 && masks[x] & !(1u16 << y) == masks[y] & !(1u16 << x))
}

/// Exhaustive enumeration of r-regular graphs, one canonical representative
/// per isomorphism class, ordered by (order, certificate). Orders that
/// cannot host an r-regular graph (n·r odd, or r ≥ n) are recorded in
/// `skipped`, not treated as errors.
pub fn enumerate_regular(
    r: usize,
    n_min: usize,
    n_max: usize,
    connected_only: bool,
) -> Result<CorpusLoad, CorpusError> {
    if n_max > ENUMERATION_CAP {
        return Err(CorpusError::EnumerationCap(n_max, ENUMERATION_CAP));
    }
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for n in n_min..=n_max {
        if r >= n {
            skipped.push((n, format!("no {r}-regular graph of order {n}: need r < n")));
            continue;
        }
        if !(n * r).is_multiple_of(2) {
            skipped.push((n, format!("no {r}-regular graph of order {n}: n·r is odd")));
            continue;
        }
        let mut certs = BTreeSet::new();
        let mut search = RowSearch {
            n,
            r,
            connected_only,
            deg: vec![0; n],
            adj: vec![0; n],
            certs: &mut certs,
        };
        // pin vertex 0's neighbors to {1..r}: every r-regular graph can be
        // relabeled this way, so no class is lost, and the labeled search
        // space shrinks by a factor of C(n-1, r)
        for u in 1..=r {
            search.toggle_edge(0, u);
        }
        search.fill_row(1);
        for cert in certs {
            let g = parse_graph6(std::str::from_utf8(&cert).unwrap()).expect("own certificate");
            debug_assert_eq!(g.is_regular(), Some(r));
            graphs.push(g);
        }
    }
    Ok(CorpusLoad { graphs, skipped })
}

struct RowSearch<'a> {
    n: usize,
    r: usize,
    connected_only: bool,
    deg: Vec<usize>,
    adj: Vec<u16>,
    certs: &'a mut BTreeSet<Vec<u8>>,
}

impl RowSearch<'_> {
    fn toggle_edge(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
        // toggling twice restores the degree, so xor-style bookkeeping works
        if self.adj[u] >> v & 1 == 1 {
            self.deg[u] += 1;
            self.deg[v] += 1;
        } else {
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    /// Chooses the upward neighbors of vertex v; rows 0..v are final.
    fn fill_row(&mut self, v: usize) {
        if v == self.n {
            self.emit();
            return;
        }
        debug_assert!(self.deg[v] <= self.r);
        self.choose(v, v + 1, self.r - self.deg[v]);
    }

    fn choose(&mut self, v: usize, from: usize, remaining: usize) {
        if remaining == 0 {
            if self.rows_ahead_feasible(v) {
                self.fill_row(v + 1);
            }
            return;
        }
        if self.n - from < remaining {
            return;
        }
        for u in from..=self.n - remaining {
            if self.deg[u] < self.r {
                self.toggle_edge(v, u);
                self.choose(v, u + 1, remaining - 1);
                self.toggle_edge(v, u);
            }
        }
    }

    /// With rows 0..=v final, every later vertex must still be able to reach
    /// degree r among vertices above v, and the total missing degree must be
    /// even (each future edge supplies two).
    fn rows_ahead_feasible(&self, v: usize) -> bool {
        let above = !0u16 << (v + 1) & ((1u32 << self.n) as u16).wrapping_sub(1);
        let mut missing = 0;
        for u in v + 1..self.n {
            let need = self.r - self.deg[u];
            let open = (above & !self.adj[u] & !(1 << u)).count_ones() as usize;
            if need > open {
                return false;
            }
            missing += need;
        }
        missing % 2 == 0
    }

    fn emit(&mut self) {
        debug_assert!(self.deg.iter().all(|&d| d == self.r));
        if self.connected_only && !masks_connected(&self.adj) {
            return;
        }
        let order = canonical_order(&self.adj);
        let mut edges = Vec::with_capacity(self.n * self.r / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adj[order[i]] >> order[j] & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(self.n, &edges).unwrap();
        self.certs.insert(write_graph6(&g).unwrap().into_bytes());
    }
}

fn masks_connected(masks: &[u16]) -> bool {
    let mut seen = 1u16;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        let mut fresh = masks[v] & !seen;
        seen |= masks[v];
        while fresh != 0 {
            stack.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen.count_ones() as usize == masks.len()
}

/// Reads one graph6 graph per line. Blank lines and a standalone
/// `>>graph6<<` header line are tolerated. Under `strict`, any malformed
/// line aborts the load; otherwise it is recorded in `skipped` with its
/// line number and parsing continues.
pub fn ingest_graph6_file(path: &Path, strict: bool) -> Result<CorpusLoad, CorpusError> {
    let text = fs::read_to_string(path)?;
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == ">>graph6<<" {
            continue;
        }
        match parse_graph6(trimmed) {
            Ok(g) => graphs.push(g),
            Err(source) if strict => {
                return Err(CorpusError::Parse {
                    line: i + 1,
                    source,
                })
            }
            Err(source) => skipped.push((i + 1, source.to_string())),
        }
    }
    Ok(CorpusLoad { graphs, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
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
    fn certificates_are_relabeling_invariant() {
        for g in [cycle(5), cycle(6), petersen()] {
            let cert = canonical_form(&g).unwrap();
            let n = g.n();
            // a few scrambles: rotation, reversal, and a transposition
            let rot: Vec<usize> = (0..n).map(|i| (i + 3) % n).collect();
            let rev: Vec<usize> = (0..n).rev().collect();
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, n - 1);
            for order in [rot, rev, swap] {
                let h = g.relabel(&order).unwrap();
                assert_eq!(canonical_form(&h).unwrap(), cert);
            }
        }
    }

    #[test]
    fn certificates_separate_nonisomorphic_graphs() {
        // both 3-regular on 6 vertices; the prism has triangles
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(
            canonical_form(&k33).unwrap(),
            canonical_form(&prism).unwrap()
        );
    }

    #[test]
    fn certificate_is_a_fixed_point() {
        for g in [cycle(7), petersen()] {
            let cert = canonical_form(&g).unwrap();
            let h = parse_graph6(cert.as_str()).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), cert);
            // the canonical relabeling encodes to the cert itself
            assert_eq!(write_graph6(&h).unwrap().as_bytes(), cert.as_bytes());
        }
    }

    #[test]
    fn canonical_cap_is_enforced() {
        let big = Graph::empty(13);
        assert!(matches!(
            canonical_form(&big).unwrap_err(),
            CorpusError::CanonicalCap(13, CANONICAL_CAP)
        ));
    }

    /// Exhaustive isomorphism test by permutation search; test oracle only.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.n();
        if n != b.n() || a.m() != b.m() {
            return false;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn place(
            v: usize,
            a: &Graph,
            b: &Graph,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.n();
            if v == n {
                return true;
            }
            for t in 0..n {
                if used[t] || a.degree(v) != b.degree(t) {
                    continue;
                }
                if a.neighbors(v)
                    .iter()
                    .filter(|&&u| u < v)
                    .any(|&u| !b.has_edge(perm[u], t))
                    || (0..v)
                        .filter(|&u| !a.has_edge(u, v))
                        .any(|u| b.has_edge(perm[u], t))
                {
                    continue;
                }
                perm[v] = t;
                used[t] = true;
                if place(v + 1, a, b, perm, used) {
                    return true;
                }
                used[t] = false;
            }
            false
        }
        place(0, a, b, &mut perm, &mut used)
    }

    /// Brute-force class list: every graph on n labeled vertices, filtered
    /// to r-regular (and connectivity if asked), deduplicated by pairwise
    /// isomorphism tests. Independent of canonical_form.
    fn regular_classes_bruteforce(n: usize, r: usize, connected_only: bool) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_regular() != Some(r) || (connected_only && !g.is_connected()) {
                continue;
            }
            if !reps.iter().any(|h| isomorphic(&g, h)) {
                reps.push(g);
            }
        }
        reps
    }

    #[test]
    fn enumeration_matches_bruteforce_classification() {
        for (r, n) in [(1, 4), (2, 5), (2, 6), (3, 4), (3, 6)] {
            for connected_only in [false, true] {
                let ours = enumerate_regular(r, n, n, connected_only).unwrap().graphs;
                let oracle = regular_classes_bruteforce(n, r, connected_only);
                assert_eq!(ours.len(), oracle.len(), "count at r={r}, n={n}");
                let a: BTreeSet<_> = ours.iter().map(|g| canonical_form(g).unwrap()).collect();
                let b: BTreeSet<_> = oracle.iter().map(|g| canonical_form(g).unwrap()).collect();
                assert_eq!(a, b, "classes at r={r}, n={n}");
            }
        }
    }

    #[test]
    fn enumeration_counts_match_known_values() {
        let cubic = |n| enumerate_regular(3, n, n, true).unwrap().graphs.len();
        assert_eq!((cubic(4), cubic(6), cubic(8)), (1, 2, 5));
        let quartic = |n| enumerate_regular(4, n, n, true).unwrap().graphs.len();
        assert_eq!(
            (quartic(5), quartic(6), quartic(7), quartic(8)),
            (1, 1, 2, 6)
        );
        // a single class per order for connected 2-regular (the cycle)
        for n in 3..=8 {
            assert_eq!(enumerate_regular(2, n, n, true).unwrap().graphs.len(), 1);
        }
        // disconnected classes join when the filter is off
        assert_eq!(enumerate_regular(2, 6, 6, false).unwrap().graphs.len(), 2);
        assert_eq!(enumerate_regular(3, 8, 8, false).unwrap().graphs.len(), 6);
    }

    #[test]
    fn infeasible_orders_are_skipped_with_notices() {
        let load = enumerate_regular(3, 3, 6, true).unwrap();
        assert_eq!(load.graphs.len(), 3); // K_4 at n=4 plus 2 at n=6
        let skipped: Vec<usize> = load.skipped.iter().map(|s| s.0).collect();
        assert_eq!(skipped, vec![3, 5]); // r ≥ n, then odd n·r
        assert!(load.skipped[1].1.contains("odd"));
        assert!(matches!(
            enumerate_regular(3, 4, 13, true).unwrap_err(),
            CorpusError::EnumerationCap(13, ENUMERATION_CAP)
        ));
    }

    #[test]
    fn enumerated_graphs_come_out_canonical_and_sorted() {
        let load = enumerate_regular(3, 4, 6, true).unwrap();
        let certs: Vec<Vec<u8>> = load
            .graphs
            .iter()
            .map(|g| canonical_form(g).unwrap().as_bytes().to_vec())
            .collect();
        for (g, cert) in load.graphs.iter().zip(&certs) {
            assert_eq!(write_graph6(g).unwrap().as_bytes(), &cert[..]);
        }
        // sorted by (order, cert): K_4 first, then the two order-6 classes
        assert!(certs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn file_ingestion_strict_and_permissive() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.g6");
        let mut f = fs::File::create(&path).unwrap();
        writeln!(f, ">>graph6<<").unwrap();
        writeln!(f, "C~").unwrap();
        writeln!(f).unwrap();
        writeln!(f, "C*").unwrap(); // '*' is outside the printable range
        writeln!(f, "DQc").unwrap();
        drop(f);

        let err = ingest_graph6_file(&path, true).unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 4, .. }));

        let load = ingest_graph6_file(&path, false).unwrap();
        assert_eq!(load.graphs.len(), 2);
        assert_eq!(load.graphs[0].n(), 4);
        assert_eq!(load.graphs[0].m(), 6); // C~ is K_4
        assert_eq!(load.skipped.len(), 1);
        assert_eq!(load.skipped[0].0, 4);

        let empty = dir.path().join("empty.g6");
        fs::File::create(&empty).unwrap();
        assert!(ingest_graph6_file(&empty, true).unwrap().graphs.is_empty());
    }

    #[test]
    fn corpus_spec_dispatches() {
        let spec = CorpusSpec::Enumerate {
            r: 2,
            n_min: 5,
            n_max: 5,
            connected_only: true,
        };
        let load = spec.load().unwrap();
        assert_eq!(load.graphs.len(), 1);
        assert!(isomorphic(&load.graphs[0], &cycle(5)));
    }
}
