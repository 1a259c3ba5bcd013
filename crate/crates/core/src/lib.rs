//! Exact edge-vertex and paired domination on small graphs, the twinning
//! procedure relating their minimum sets, and an exhaustive census that
//! checks the uniqueness correspondences over all small trees and graphs.

pub mod census;
pub mod domination;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lemma;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
