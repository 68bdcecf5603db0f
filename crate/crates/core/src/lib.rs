//! Self-complementary graphs and their complete minors.
//!
//! A self-complementary graph on `n` vertices always contains a
//! `K_⌊(n+1)/2⌋` minor. This crate finds an antimorphism, builds the
//! contraction that realizes the minor, and verifies the branch sets before
//! returning them. An exact minor search is available for cross-checking. It also generates and enumerates self-complementary
//! graphs and reports planarity-type properties.

pub mod antimorphism;
pub mod canon;
pub mod construction;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod oracle;
pub mod permutation;
pub mod planarity;
pub mod topology;

pub use antimorphism::{
    check_sachs, cycle_side_counts, find_antimorphism, is_antimorphism, side_partition,
    CycleSideCounts, SachsViolation, SidePartition,
};
pub use canon::{are_isomorphic, canonical_form};
pub use construction::{build_plan, prove, realize_minor, theorem_minor, ContractionPlan, TheoremWitness};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use minor::{verify_minor_model, MinorModel, ModelViolation};
pub use oracle::{has_minor, hadwiger, MinorAnswer, MinorOutcome, MinorQuery};
pub use permutation::{cycle_decomposition, CycleDecomposition, Permutation};
