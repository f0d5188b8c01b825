//! The dual side: L-functionals, convolution, the r-form and separation.

mod eval;
mod functional;
mod lfunc;
mod matrep;

use thiserror::Error;

pub use eval::{
    eval_columns, eval_matrix, export_json, functional_equal, independent_subset, rank, rank_at, span_contains,
    span_ranks, stabilized_rank, subset_ranks, Certified, Equality, Policy,
};
pub use functional::{unify, Functional};
pub use lfunc::{Dual, Normalization};
pub use matrep::{MatRep, SparseMat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("block matrix of generator values of {0} is singular")]
    AntipodeFailure(String),
    #[error("rank did not stabilize; ranks by degree {ranks:?}")]
    RankUnstable { ranks: Vec<usize> },
    #[error("functional is not housed in a representation: {0}")]
    UnsupportedFunctional(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
}
