//! k-connected graph families whose Ramsey number tracks a prescribed
//! growth rate: the constructions themselves, exact vertex connectivity,
//! exhaustive arrowing search, and the embedding strategies that hunt for a
//! monochromatic family member inside a given red/blue colouring.

pub mod bitset;
pub mod colouring;
pub mod connectivity;
pub mod constructions;
pub mod digraph;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod proof;
pub mod ramsey;
pub mod ratio;

pub use bitset::VertexSet;
pub use colouring::{Colour, TwoColouring};
pub use digraph::Digraph;
pub use embedding::{validate_embedding, Embedding};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, serialize_graph6};
pub use ramsey::{arrows, find_mono_copy, ramsey_number, ArrowingResult, RamseyValue};
pub use ratio::Ratio;
