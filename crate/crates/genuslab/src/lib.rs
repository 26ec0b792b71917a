//! Labelled pseudographs on surfaces: embedding schemes, Euler genus search,
//! graph-class membership predicates, exact map-counting formulas, and an
//! exhaustive small-n census with an inequality verification report.
//!
//! Everything here is exact: counting paths use arbitrary-precision integers
//! and rationals, genus values come from exhaustive scheme search, and the
//! few closed forms that need a logarithm are evaluated with outward-rounded
//! rational intervals that refuse to answer rather than round incorrectly.

pub mod census;
pub mod classes;
pub mod embedding;
pub mod formulas;
pub mod graph;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex {vertex} (graph has {n} vertices)")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid edge index {edge} (graph has {e} edges)")]
    InvalidEdge { edge: usize, e: usize },
    #[error("simple graph may not contain {0}")]
    SimplicityViolation(String),
    #[error("{what} ceiling exceeded: requested {requested}, limit {limit}")]
    CeilingExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("search budget exceeded: estimated {estimated} trace states, budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{name} evaluated outside its stated validity range: {detail}")]
    OutOfValidityRange { name: String, detail: String },
    #[error("interval straddles an integer; refusing to round (width {width}); use a table override")]
    IntervalStraddlesInteger { width: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// State budget for exhaustive scheme searches; each face trace of a scheme
/// with `e` edges costs `4e` states. Overridable via the `GENUSLAB_BUDGET`
/// environment variable or per-call arguments.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Budget taken from `GENUSLAB_BUDGET` if set and parseable, else the default.
pub fn budget_from_env() -> u128 {
    std::env::var("GENUSLAB_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}
