pub mod budget;
pub mod complex;
pub mod domination;
pub mod error;
pub mod graph;
pub mod homology;
pub mod prime;
pub mod transversal;
pub mod vset;

pub use complex::{Clutter, Complex};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};
pub use vset::VertexSet;
