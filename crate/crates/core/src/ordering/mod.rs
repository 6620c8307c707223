//! Vertex and edge orderings that drive the branching steps.

mod coloring;
mod degeneracy;
mod heap;
mod truss;

pub use coloring::{greedy_color, orient_by_rank, Coloring, OrientedGraph};
pub use degeneracy::{core_decompose, DegeneracyOrdering};
pub use truss::{truss_decompose, SuccessorScratch, SuccessorSets, TrussOrdering, DEFAULT_SUCCESSOR_CAP};
