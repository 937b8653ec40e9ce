//! Explicit unit disk constructions: circle complements, lobsters,
//! hexagonal caterpillars, twin copies, and the polar map to complements.

pub mod block;
pub mod circles;
pub mod layout;
pub mod lobster;
pub mod pipeline;
pub mod polar;
pub mod tau;
pub mod twins;
pub mod vec2;

use thiserror::Error;
use udg_structure::{StructureError, Witness};

pub use block::{BlockGeometry, BlockPoints, Lines};
pub use circles::{embed_complement_k1_cycle, embed_complement_path, feasible_radius};
pub use lobster::{embed_basic_caterpillar_star, embed_lobster_star, lobster_parts};
pub use pipeline::{
    default_epsilon, embed_class_x_complement, embed_class_x_star, embed_decomposition_star, q_dprime,
    ComplementCertificate, StarCertificate,
};
pub use polar::PolarPoint;
pub use tau::{
    special_value_c, special_value_f, special_value_f_numeric, tau_hypothesis, tau_point, tau_transform, TauCheck,
};
pub use twins::{duplicate_twins, CopyClass, Spacing};

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("graph is not in the class; witness {0:?}")]
    NotMember(Witness),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("construction precondition failed: {0}")]
    Precondition(String),
    #[error("polar map hypothesis fails: sigma {}, delta {}, {} pairs in annulus", .0.sigma, .0.delta, .0.annulus.len())]
    Hypothesis(Box<TauCheck>),
    #[error("no certified embedding down to epsilon {epsilon}: {reason}")]
    Certification { epsilon: f64, reason: String },
}
