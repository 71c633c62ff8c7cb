//! Exact degree-based topological indices (first and second Zagreb, the
//! forgotten index F, the general first Zagreb index and the redefined
//! Zagreb index) together with the graph operations they are studied on:
//! line graphs, the subdivision-type operators S, R, Q and T, generalized
//! hierarchical products and the four F-sums.
//!
//! Index arithmetic is generic over [`ExactInt`]; the aliases below cover
//! the usual choices.

pub mod closed_forms;
pub mod edgelist;
pub mod error;
pub mod family;
pub mod graph;
pub mod indices;
pub mod random;
pub mod scalar;
pub mod transforms;
pub mod verifier;

pub use error::{Error, Result};
pub use family::{build_family, FamilySpec};
pub use graph::{Graph, VertexId, VertexSubset};
pub use indices::{invariant_bundle, InvariantBundle};
pub use scalar::ExactInt;
pub use transforms::{SubdivisionOp, TransformedGraph};

/// Checked 64-bit index value. The verifier and most tests use this.
pub type IndexValue = i64;
/// Checked 128-bit index value.
pub type WideIndexValue = i128;
/// Arbitrary-precision index value; never overflows.
pub type BigIndexValue = num_bigint::BigInt;

/// Bundle of 64-bit invariants.
pub type Bundle = InvariantBundle<IndexValue>;
