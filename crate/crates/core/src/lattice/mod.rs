//! Exact geometry of rational polyhedral cones.

mod cone;
mod dd;
mod hilbert;
pub mod intmat;

pub use cone::{dual_cone, minimize, ConeFace, Minimum, RationalCone, RationalVector, DEFAULT_MAX_DIM};
pub use hilbert::{grading, hilbert_basis, in_semigroup, parallelepiped_points, triangulation};
pub use intmat::IntVec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("ambient dimension {dim} exceeds the cap {cap}")]
    AmbientDimTooLarge { dim: usize, cap: usize },
    #[error("no generators given")]
    EmptyInput,
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("vector of length {found} in dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear form is unbounded below on the cone")]
    UnboundedBelow,
}
