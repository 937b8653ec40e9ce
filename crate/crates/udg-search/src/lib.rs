//! Numerical probing for unit disk representations. A failed search is
//! inconclusive; it never certifies that no representation exists.

pub mod minimality;
pub mod potential;
pub mod search;

pub use minimality::{certify_udg, minimality_check, Certified, Method, MinimalityReport, VertexRow};
pub use potential::{potential, potential_grad};
pub use search::{search_embedding, SearchConfig, SearchResult};
