//! Forbidden induced subgraphs for unit disk graphs.
//!
//! Fixed entries come in two kinds: graphs that are themselves minimal
//! non-UDGs, and bipartite seeds whose co-bipartite relatives are forbidden.
//! Infinite families are instantiated on demand.

pub mod detect;
pub mod eat;
pub mod entries;
pub mod family;

pub use detect::{detect_forbidden, detect_forbidden_with_parts, DetectionReport, EatObstruction, Match};
pub use eat::{has_edge_asteroid_triple, replay_witness, EatWitness};
pub use entries::{builtin_catalog, catalog_dump, CatalogEntry, EntryKind};
pub use family::{generate_family, Family, FamilyError};
