//! Recognition of the hexagon-only bipartite class and its decomposition
//! into hexagonal strips and lobsters.

pub mod decomp;
pub mod generate;
pub mod hexagon;
pub mod recognize;
pub mod twins;
pub mod witness;

pub use decomp::{ComponentDecomp, Decomposition, HexStrip, Leg, Lobster, Piece, StripBlock};
pub use generate::generate_random_member;
pub use hexagon::{hexagon_intersection_type, Intersection, IntersectionError};
pub use recognize::{decompose, recognize_class_x, Recognition, StructureError};
pub use twins::{are_twins, basic_core, is_basic, twin_edge_classes};
pub use witness::{find_witness, Witness, WitnessKind};
