//! Maximal k-edge-connected subgraphs of undirected multigraphs.
//!
//! The partition of the vertex set into inclusion-maximal sets whose
//! induced subgraphs are k-edge-connected is computed by recursive
//! peeling: a work list maintains the invariant that every small cut of
//! the current graph touches it, pairs from the list are tested through a
//! pairwise-connectivity oracle, and the smaller side of a failed test is
//! found by a lockstep local race, split off, and recursed on. The same
//! loop seeded with two endpoints maintains the partition under edge
//! deletions. Everything is checked against independent brute-force
//! oracles in `reference`.
//!
//! - [`graph`]: the multigraph, partitions, text formats
//! - [`oracle`]: the pairwise k-edge-connectivity oracle interface and the
//!   capped-flow baseline
//! - [`local`]: component-of-kECC discovery and the volume race
//! - [`sparsify`]: forest decompositions and the sparse certificate
//! - [`solver`]: the static partition computation
//! - [`decremental`]: partition maintenance under deletions
//! - [`reference`]: brute-force ground truth
//! - [`gen`]: deterministic graph generators

pub mod decremental;
pub mod error;
pub mod gen;
pub mod graph;
pub mod local;
pub mod oracle;
pub mod reference;
pub mod solver;
pub mod sparsify;

pub use error::{Error, Result};
pub use graph::{format_partition, parse_graph, serialize_graph};
pub use graph::{EdgeId, Graph, VertexId, VertexPartition};
pub use oracle::{BaselineOracle, ConnectivityOracle, CostCounters};
pub use solver::{maximal_kecs, maximal_kecs_opts, SolverOptions, SolverResult};
