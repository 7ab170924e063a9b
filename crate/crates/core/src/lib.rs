//! Exact computation and verification of anti-Ramsey numbers of small
//! graphs.
//!
//! For a target graph `H`, `f(n, H)` is the largest number of colours an
//! edge-colouring of `K_n` can use without a rainbow copy of `H`, and
//! `rb(n, H) = f(n, H) + 1`. The crate provides
//! - a small-graph core with a catalog of named targets ([`graphs`]),
//! - canonical forms and copy enumeration ([`embeddings`]),
//! - colourings, unique colours and rainbow detection ([`coloring`]),
//! - explicit lower-bound constructions as checkable certificates
//!   ([`constructions`]),
//! - exact engines for `f(n, H)` and Turán numbers ([`search`]),
//! - closed forms, bounds and published reference values ([`formulas`]),
//! - a command-line front end, certificate files and a result cache
//!   ([`cli`]).

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod embeddings;
pub mod error;
pub mod formulas;
pub mod graphs;
pub mod search;

pub use coloring::{color_classes, find_rainbow_copy, normalize, ColorClassView, EdgeColoring};
pub use constructions::{Certificate, Verdict};
pub use embeddings::{canonical_code, enumerate_copies, CanonicalCode, EmbeddingTable};
pub use error::{Error, Result};
pub use formulas::{classify, rb_cycle, ClassKind, Classification};
pub use graphs::{minus_edge_family, ForbiddenFamily, GraphName, SmallGraph, Target};
pub use search::{decide_colorable, f_exact, rb_exact, turan_exact, Decision, SearchConfig, SearchOutcome, Status};
