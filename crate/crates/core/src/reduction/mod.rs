//! Integration-theoretic analysis of a rational function: Hermite reduction,
//! Rothstein–Trager residues, residue commensurability, and recognition of
//! exact derivatives and scaled logarithmic derivatives.

use thiserror::Error;

use crate::algebra::AlgebraError;

mod hermite;
mod logderiv;
mod residues;

pub use hermite::{hermite_reduce, HermiteParts};
pub use logderiv::{
    has_rational_antiderivative, is_log_derivative_up_to_constant, log_witness, LogDerivFailure,
    LogDerivative, LogWitness, MAX_WITNESS_DEGREE,
};
pub use residues::{
    commensurable, ratio_poly, residue_certificate, rt_resultant, Commensurability,
    ResidueCertificate, MAX_RATIO_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected a proper rational function")]
    NonProperInput,
    #[error("expected a squarefree denominator")]
    NonSquarefreeDenominator,
    #[error("residue polynomial has a root at t = 0")]
    ZeroRootInput,
    #[error("residue polynomial must have positive degree")]
    ConstantInput,
    #[error("{0} requires a nonzero rational function")]
    ZeroInput(&'static str),
    #[error("residues are not all rational")]
    NonRationalResidue,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
