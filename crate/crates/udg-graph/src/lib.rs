//! Core graph types for the unit-disk-graph toolkit.
//!
//! Graphs are immutable, vertex ids are dense `0..n`, and every transform
//! returns a fresh value.

pub mod bipartite;
pub mod components;
pub mod cycles;
pub mod edgelist;
pub mod embedding;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod pendant;

pub use bipartite::{BipartiteGraph, Part};
pub use components::{connected_components, two_connected_components};
pub use cycles::{chordless_cycles_up_to, for_each_chordless_cycle};
pub use embedding::{Embedding, EmbeddingParams, Point};
pub use graph::{Graph, GraphError};
pub use induced::{contains_induced, for_each_induced, is_isomorphic};
pub use pendant::{pendant_twin_reduce, PendantExpansion};
