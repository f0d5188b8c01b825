//! Bicovariant first-order calculi `Γ_ζ(v)`, their quantum Lie algebras,
//! central elements and decompositions.

mod calculus;
mod classify;

use thiserror::Error;

use crate::coordalg::CoordError;
use crate::dual::DualError;

pub use calculus::{
    central_element, check_central, compare_spans, d_inverse_matrix, direct_sum, quantum_lie, quantum_lie_from_central,
    tensor_identity_check, Calculus, DirectSum, QuantumLieAlgebra, SpanCertificate,
};
pub use classify::{
    classify, frame_descriptor, Candidate, ClassificationReport, Component, LibraryConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FodcError {
    #[error(transparent)]
    Dual(#[from] DualError),
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error("functional is not central: {0}")]
    NotCentral(String),
    #[error("calculi are not independent: ranks {parts:?}, union {union}")]
    NotDirect { parts: Vec<usize>, union: usize },
    #[error("{0}")]
    Invalid(String),
}
