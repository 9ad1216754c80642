//! Constructions, exact Berge-pattern detection, closed-form bounds and
//! exhaustive extremal search for linear uniform hypergraphs.
//!
//! The central object is the finite-field hypergraph built in
//! [`construction`]: `r` parts of `q^2` points each, one edge for every
//! `(x, y, a, m_s)`. The [`berge`] detectors certify that it avoids Berge
//! copies of `C2`, `C3` and `K_{2,t}`; [`bounds`] compares its size with the
//! known upper bounds; [`search`] computes exact extremal numbers for tiny
//! instances as an independent check.

pub mod berge;
pub mod bounds;
pub mod construction;
pub mod gf;
pub mod hypergraph;
pub mod matching;
mod par;
pub mod search;

pub use berge::{BergePattern, Multigraph, VerificationReport, Witness};
pub use gf::{FieldContext, FieldDescriptor, FieldElement};
pub use hypergraph::{Hypergraph, PartitionedHypergraph};
