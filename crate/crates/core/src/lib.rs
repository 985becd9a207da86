//! Bounded powers of edge ideals.
//!
//! For a graph `G` on `x1..xn` and caps `c`, the top bounded power of the edge
//! ideal is generated by the products of `delta` edges whose exponent vectors
//! stay below `c`, where `delta` is as large as possible. This crate computes
//! `delta` and that generator set `W(c, G)`, checks the exchange, symmetric
//! exchange and strong exchange properties on it, recognises Veronese-type
//! sets, decides the known classifications of cycles, trees and unicyclic
//! graphs, and certifies generation of the associated toric ideal by quadratic
//! exchange moves through a chosen degree.

pub mod bounded_powers;
pub mod classify;
pub mod error;
pub mod exchange;
pub mod exec;
pub mod fixtures;
pub mod graph;
pub mod sample;
pub mod toric;

pub use bounded_powers::{
    brute_force_oracle, delta, delta_with, edge_decompose, enumerate_generators, enumerate_generators_with,
    normalize_caps, CapVector, EdgeMultiset, ExponentVector, GeneratorSet, Limits,
};
pub use error::{Error, Result};
pub use exchange::{
    check_exchange, check_strong_exchange, check_symmetric_exchange, detect_veronese, search_sep_counterexample,
    ExchangeReport, Property, VeroneseDecomposition,
};
pub use exec::Execution;
pub use graph::{Graph, GraphFamilySpec};
