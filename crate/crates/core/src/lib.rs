//! Balanced biregular graphs of prescribed girth.
//!
//! An `(r, s; g)`-babi-graph has girth `g`, degree set `{r, s}` and equally
//! many vertices of each degree. This crate builds such graphs from finite
//! geometry (projective and biaffine planes, Baer subplanes, conic ovals),
//! from deletions and amalgamations of known cages, and from the general
//! switching composition. It also evaluates the closed-form lower and exact
//! bounds for `n_bb(r, s; g)` and certifies small cages by exhaustive,
//! isomorph-pruned search.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, e.g.
//! `cargo run --example girth5_cages`.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod named;
pub mod search;

pub use error::{Error, Result};
pub use graph::{BabiParams, Certificate, EdgeCensus, Girth, Graph};
