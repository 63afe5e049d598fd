//! Balanced complete bipartite subgraphs in dense graphs.
//!
//! - [`finder`] locates a `K_{q,q}` whose size is guaranteed by the edge
//!   count alone, by scanning `q`-subsets of the highest-degree vertices.
//! - [`decomposer`] partitions all edges into balanced bicliques by repeated
//!   extraction, with total vertex count `O(n^2 / ln n)`.
//! - [`oracle`] holds exhaustive reference procedures for small graphs.
//! - [`gen`] builds seeded random and structured inputs; [`bench`] times them.

mod bitset;
mod exact;

pub mod bench;
pub mod combin;
pub mod decomposer;
pub mod error;
pub mod finder;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod params;

pub use decomposer::{decompose, decompose_bipartite, verify_bipartite_decomposition, verify_decomposition, Decomposition};
pub use error::{Error, Result};
pub use finder::{find_biclique, find_biclique_bipartite, find_biclique_with_params, Biclique, FindReport, FinderConfig};
pub use graph::{BipartiteGraph, Graph};
pub use params::{bipartite_params, density_precondition, general_params, ParamSet, Regime};
