//! Planar triangulations as the graphs of three linear orders.
//!
//! A standard representation is a triple of linear orders with no pair
//! dominated in all three and whose maxima are the outer vertices. The
//! representation determines a graph (`sigma2`) and a set of bounded faces
//! (`sigma3`); [`realize`](realizer::realize) and [`embed`](embedder::embed)
//! convert between triangulations and representations.

pub mod cli;
pub mod corpus;
pub mod embedder;
pub mod error;
pub mod format;
pub mod graph;
mod hamiltonian;
pub mod oracle;
pub mod orders;
pub mod realizer;
pub mod rotation;
pub mod sigma;
pub mod triangulation;
pub mod vertex;

pub use embedder::{embed, faces, FaceList};
pub use error::{Error, Result};
pub use graph::{SimpleGraph, Triple, TripleSet};
pub use orders::{LinearOrder, StandardRepresentation};
pub use realizer::{realize, realize_with, RealizeOptions};
pub use rotation::RotationSystem;
pub use sigma::{fan_of_apex, sigma2, sigma3, FanReport};
pub use triangulation::Triangulation;
pub use vertex::{Labels, VertexId};
