//! Corpus-level drivers: load a corpus, sweep a triple over it, hunt for
//! counterexamples, and evaluate every per-graph bound the toolkit knows.

use std::path::PathBuf;

use alphamu::constructions::{NamedGraph, Recipe};
use alphamu::corpus::{CorpusSpec, ENUMERATION_CAP};
use alphamu::factors::cubic_degree2_subgraph;
use alphamu::line_graph::line_graph;
use alphamu::path_cover::{path_cover_number, PATH_COVER_CAP};
use alphamu::solver::{
    alpha_p_exact, lower_bound_matching, maximum_matching, mu_q, upper_bound_alpha_p, Rational,
};
use alphamu::{write_graph6, Graph};
use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Parses `enum:r=R,n=A..B[,connected]` or `file:PATH`.
pub fn parse_corpus_spec(s: &str) -> Result<CorpusSpec, String> {
    if let Some(path) = s.strip_prefix("file:") {
        if path.is_empty() {
            return Err("file: needs a path".into());
        }
        return Ok(CorpusSpec::File {
            path: PathBuf::from(path),
        });
    }
    let Some(body) = s.strip_prefix("enum:") else {
        return Err(format!(
            "corpus spec must start with enum: or file:, got {s:?}"
        ));
    };
    let mut r = None;
    let mut range = None;
    let mut connected_only = false;
    for part in body.split(',') {
        if let Some(v) = part.strip_prefix("r=") {
            r = Some(v.parse::<usize>().map_err(|e| format!("bad r: {e}"))?);
        } else if let Some(v) = part.strip_prefix("n=") {
            let (a, b) = v
                .split_once("..")
                .ok_or_else(|| format!("n wants A..B, got {v:?}"))?;
            let a = a
                .parse::<usize>()
                .map_err(|e| format!("bad n range: {e}"))?;
            let b = b
                .parse::<usize>()
                .map_err(|e| format!("bad n range: {e}"))?;
            if a > b {
                return Err(format!("empty n range {a}..{b}"));
            }
            range = Some((a, b));
        } else if part == "connected" {
            connected_only = true;
        } else {
            return Err(format!("unknown corpus spec field {part:?}"));
        }
    }
    let r = r.ok_or("enum: needs r=R")?;
    let (n_min, n_max) = range.ok_or("enum: needs n=A..B")?;
    if n_max > ENUMERATION_CAP {
        return Err(format!(
            "n range ends past the enumeration cap {ENUMERATION_CAP}"
        ));
    }
    Ok(CorpusSpec::Enumerate {
        r,
        n_min,
        n_max,
        connected_only,
    })
}

/// Loads a corpus and pins every graph to regularity `r`. File corpora are
/// how larger graphs enter, so the mismatch check happens here, not inside
/// the codec.
pub fn load_corpus_for(spec: &CorpusSpec, r: usize) -> Result<Vec<Graph>> {
    if let CorpusSpec::Enumerate { r: spec_r, .. } = spec {
        if *spec_r != r {
            bail!("corpus regularity {spec_r} does not match requested r = {r}");
        }
    }
    let load = spec.load().context("corpus load failed")?;
    for (i, g) in load.graphs.iter().enumerate() {
        if g.is_regular() != Some(r) {
            bail!(
                "corpus graph {} (order {}) is not {r}-regular",
                i + 1,
                g.n()
            );
        }
    }
    Ok(load.graphs)
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub alpha_p: usize,
    pub alpha_q_line: usize,
}

/// One graph's row in a triple sweep: the two exact values and their slack.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub graph6: String,
    pub alpha_p: usize,
    pub alpha_q_line: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutcome {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub checked: usize,
    pub rows: Vec<SweepRow>,
    pub violations: Vec<Violation>,
    /// Minimum of α_q(L) − α_p over the corpus; negative iff some violation.
    pub min_slack: Option<i64>,
}

/// Computes α_p(G) and α_q(L(G)) exactly on every corpus graph and records
/// each comparison. Rows come back sorted by graph6 string.
pub fn verify_triple_on_corpus(
    p: usize,
    q: usize,
    r: usize,
    spec: &CorpusSpec,
) -> Result<VerifyOutcome> {
    let graphs = load_corpus_for(spec, r)?;
    let mut rows = graphs
        .par_iter()
        .map(|g| {
            let alpha_p = alpha_p_exact(g, p).value;
            let alpha_q_line = if q == 0 {
                maximum_matching(g).size
            } else {
                mu_q(g, q)
                    .expect("regular graphs with r >= 1 have edges")
                    .value
            };
            SweepRow {
                graph6: write_graph6(g).expect("corpus graphs encode"),
                alpha_p,
                alpha_q_line,
                holds: alpha_p <= alpha_q_line,
            }
        })
        .collect::<Vec<_>>();
    rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let violations = rows
        .iter()
        .filter(|row| !row.holds)
        .map(|row| Violation {
            graph6: row.graph6.clone(),
            alpha_p: row.alpha_p,
            alpha_q_line: row.alpha_q_line,
        })
        .collect();
    let min_slack = rows
        .iter()
        .map(|row| row.alpha_q_line as i64 - row.alpha_p as i64)
        .min();
    Ok(VerifyOutcome {
        p,
        q,
        r,
        checked: rows.len(),
        rows,
        violations,
        min_slack,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub witness: Option<Violation>,
    /// Where the search looked, in order, including skips.
    pub log: Vec<String>,
}

/// Tries the known extremal families first, then scans the corpus. Returns
/// the first graph with α_p > α_q(L).
pub fn search_counterexample(
    p: usize,
    q: usize,
    r: usize,
    spec: &CorpusSpec,
) -> Result<SearchOutcome> {
    let mut log = Vec::new();
    for recipe in candidate_recipes(p, r) {
        let g = match recipe.build() {
            Ok(g) => g,
            Err(e) => {
                log.push(format!("{}: inapplicable ({e})", recipe.label()));
                continue;
            }
        };
        match crate::verdict::confirm_violation(&g, p, q) {
            Some(true) => {
                log.push(format!("{}: violation", recipe.label()));
                return Ok(SearchOutcome {
                    p,
                    q,
                    r,
                    witness: Some(Violation {
                        graph6: write_graph6(&g)?,
                        alpha_p: alpha_p_exact(&g, p).value,
                        alpha_q_line: if q == 0 {
                            maximum_matching(&g).size
                        } else {
                            mu_q(&g, q)?.value
                        },
                    }),
                    log,
                });
            }
            Some(false) => log.push(format!("{}: holds", recipe.label())),
            None => log.push(format!("{}: beyond desk scale, skipped", recipe.label())),
        }
    }
    let outcome = verify_triple_on_corpus(p, q, r, spec)?;
    log.push(format!(
        "corpus {spec:?}: {} graphs, {} violations",
        outcome.checked,
        outcome.violations.len()
    ));
    Ok(SearchOutcome {
        p,
        q,
        r,
        witness: outcome.violations.into_iter().next(),
        log,
    })
}

/// The families worth trying against a triple, most promising first.
fn candidate_recipes(p: usize, r: usize) -> Vec<Recipe> {
    let mut recipes = Vec::new();
    if r == 1 {
        recipes.push(Recipe::Named(NamedGraph::DisjointEdges(2)));
        return recipes;
    }
    if (1..r).contains(&p) {
        recipes.push(Recipe::SharpBipartite { r, p, t: 1 });
    } else if p >= r {
        recipes.push(Recipe::Named(NamedGraph::Complete(r + 1)));
    }
    if r == 2 {
        recipes.push(Recipe::Named(NamedGraph::Cycle(6)));
    }
    if r >= 3 && r % 2 == 1 {
        recipes.push(Recipe::FactorlessRegular { k: r });
    }
    recipes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Computed values, so any row can be re-checked independently.
    pub detail: String,
}

/// Every bound evaluated on one corpus graph. α values go up to cap 4 on
/// the graph and its line graph; ρ is present when the path-cover search
/// is in range.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub r: usize,
    pub alpha: Vec<usize>,
    pub alpha_line: Vec<usize>,
    pub mu: usize,
    pub rho: Option<usize>,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }
}

/// Fixed column order for reports; every report carries exactly these
/// checks, with Skip marking the out-of-range ones.
pub const CHECK_NAMES: [&str; 8] = [
    "alpha_degree_caps",
    "line_alpha1_cap",
    "line_alpha2_value",
    "matching_lower_bound",
    "matching_agreement",
    "alpha_vs_line_alpha",
    "path_cover_cap",
    "line_alpha2_vs_path_cover",
];

pub fn check_bounds_suite(spec: &CorpusSpec) -> Result<Vec<BoundReport>> {
    let load = spec.load().context("corpus load failed")?;
    let mut reports = load
        .graphs
        .par_iter()
        .map(bound_report)
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(reports)
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let n = g.n();
    let r = g
        .is_regular()
        .ok_or_else(|| anyhow!("bounds suite needs regular graphs"))?;
    let lg = line_graph(g).context("bounds suite needs at least one edge")?;
    let alpha: Vec<usize> = (0..=4).map(|p| alpha_p_exact(g, p).value).collect();
    let alpha_line: Vec<usize> = (0..=4).map(|q| alpha_p_exact(lg.lg(), q).value).collect();
    let mu = maximum_matching(g).size;
    let rho = (n <= PATH_COVER_CAP).then(|| path_cover_number(g).expect("cap checked").number);

    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    // alpha_degree_caps: α_p ≤ nr/(2r−p), and α_p ≤ nr/(r+1) while p < r
    let mut cap_vals = Vec::new();
    let mut cap_broken = None;
    for (p, &a_p) in alpha.iter().enumerate().take(4.min(r) + 1) {
        let Ok(bounds) = upper_bound_alpha_p(n, r, p) else {
            continue; // outside the bound's domain; nothing to assert
        };
        let a = Rational::from_integer(a_p as i64);
        if a > bounds.primary || bounds.secondary.is_some_and(|s| a > s) {
            cap_broken = Some(p);
            break;
        }
        cap_vals.push(format!("alpha_{p}={a_p} <= {}", bounds.primary));
    }
    checks.push(match cap_broken {
        Some(p) => check(
            "alpha_degree_caps",
            CheckStatus::Fail,
            format!("alpha_{p}={} breaks its cap at n={n}, r={r}", alpha[p]),
        ),
        None if cap_vals.is_empty() => check(
            "alpha_degree_caps",
            CheckStatus::Skip,
            format!("caps inapplicable at n={n}, r={r}"),
        ),
        None => check("alpha_degree_caps", CheckStatus::Pass, cap_vals.join(", ")),
    });

    // line_alpha1_cap: α_1(L) ≤ ⌊2n/3⌋
    let cap = 2 * n / 3;
    checks.push(check(
        "line_alpha1_cap",
        if alpha_line[1] <= cap {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        format!("alpha_1(L)={} vs floor(2n/3)={cap}", alpha_line[1]),
    ));

    // line_alpha2_value: even r pins α_2(L) = n; odd r >= 3 guarantees
    // ceil((17n-2)/18), witnessed constructively on cubic graphs
    checks.push(if r >= 2 && r % 2 == 0 {
        check(
            "line_alpha2_value",
            if alpha_line[2] == n {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            format!("alpha_2(L)={} vs n={n}", alpha_line[2]),
        )
    } else if r >= 3 {
        let floor_bound = (17 * n - 2).div_ceil(18);
        let constructive =
            (r == 3).then(|| cubic_degree2_subgraph(g).expect("r checked").edge_count());
        let ok = alpha_line[2] >= floor_bound
            && constructive.is_none_or(|c| c >= floor_bound && alpha_line[2] >= c);
        check(
            "line_alpha2_value",
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            format!(
                "alpha_2(L)={} vs ceil((17n-2)/18)={floor_bound}{}",
                alpha_line[2],
                constructive.map_or(String::new(), |c| format!(", pruned subgraph edges={c}")),
            ),
        )
    } else {
        check(
            "line_alpha2_value",
            CheckStatus::Skip,
            format!("no guarantee at r={r}"),
        )
    });

    // matching_lower_bound: odd r >= 3, connected, n >= r+1
    checks.push(match lower_bound_matching(n, r) {
        Ok(bound) if g.is_connected() => {
            let m = Rational::from_integer(mu as i64);
            check(
                "matching_lower_bound",
                if m >= bound {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                format!("mu={mu} vs {bound}"),
            )
        }
        Ok(_) => check(
            "matching_lower_bound",
            CheckStatus::Skip,
            "needs connectivity".into(),
        ),
        Err(_) => check(
            "matching_lower_bound",
            CheckStatus::Skip,
            format!("needs odd r >= 3 and n >= r+1, have r={r}, n={n}"),
        ),
    });

    // matching_agreement: blossom vs line-graph independence
    checks.push(check(
        "matching_agreement",
        if mu == alpha_line[0] {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        format!("blossom={mu}, alpha_0(L)={}", alpha_line[0]),
    ));

    // alpha_vs_line_alpha: α_p(G) ≤ α_p(L(G)) for p = 0..4
    let bad: Vec<usize> = (0..=4).filter(|&p| alpha[p] > alpha_line[p]).collect();
    checks.push(check(
        "alpha_vs_line_alpha",
        if bad.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        if bad.is_empty() {
            format!("alpha={alpha:?} <= alpha_line={alpha_line:?} pointwise")
        } else {
            format!("violated at p={bad:?}: alpha={alpha:?}, alpha_line={alpha_line:?}")
        },
    ));

    // path_cover_cap: ρ ≤ ⌊n/(r+1)⌋ for r ≤ 6
    checks.push(match rho {
        Some(rho) if r <= 6 => check(
            "path_cover_cap",
            if rho <= n / (r + 1) {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            format!("rho={rho} vs floor(n/(r+1))={}", n / (r + 1)),
        ),
        Some(_) => check(
            "path_cover_cap",
            CheckStatus::Skip,
            format!("no guarantee at r={r}"),
        ),
        None => check(
            "path_cover_cap",
            CheckStatus::Skip,
            format!("path cover out of range at n={n}"),
        ),
    });

    // line_alpha2_vs_path_cover: α_2(L) ≥ n − ρ
    checks.push(match rho {
        Some(rho) => check(
            "line_alpha2_vs_path_cover",
            if alpha_line[2] + rho >= n {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            format!("alpha_2(L)={} vs n-rho={}", alpha_line[2], n - rho),
        ),
        None => check(
            "line_alpha2_vs_path_cover",
            CheckStatus::Skip,
            format!("path cover out of range at n={n}"),
        ),
    });

    debug_assert_eq!(checks.len(), CHECK_NAMES.len());
    debug_assert!(checks.iter().zip(CHECK_NAMES).all(|(c, n)| c.name == n));
    Ok(BoundReport {
        graph6: write_graph6(g)?,
        n,
        r,
        alpha,
        alpha_line,
        mu,
        rho,
        checks,
    })
}

fn check(name: &'static str, status: CheckStatus, detail: String) -> BoundCheck {
    BoundCheck {
        name,
        status,
        detail,
    }
}
