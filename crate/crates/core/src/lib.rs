//! Exact machinery for comparing generalized independence numbers of regular
//! graphs with those of their line graphs: solvers, factor decompositions,
//! extremal constructions, and small-order corpora.

pub mod constructions;
pub mod corpus;
pub mod error;
pub mod euler;
pub mod factors;
pub mod graph;
pub mod graph6;
pub mod line_graph;
pub mod path_cover;
pub mod solver;

pub use euler::euler_circuit;
pub use graph::{EdgeIndex, Graph};
pub use graph6::{parse_graph6, write_graph6};
pub use line_graph::{line_graph, LineGraphMap};
pub use solver::{
    alpha_p_bruteforce, alpha_p_exact, is_p_independent, lower_bound_matching, maximum_matching,
    mu_q, upper_bound_alpha_p, IndependenceResult, MatchingResult, Rational,
};
