//! Decision procedures: autonomous `y' = R(y)`, squared `(y')^2 = P(y)`,
//! Abel-type equations over `Q(x)`, and the degree bound for iterated
//! antiderivative towers.

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::reduction::ReductionError;
use crate::verify::VerifyError;

mod abel;
mod autonomous;
mod square;
mod tower;

pub use abel::{
    decide_abel, log_derivative_of_algebraic, AbelStatus, AbelVerdict, GammaFailure, GammaVerdict,
    HypothesisReport,
};
pub use autonomous::{decide_autonomous, AutonomousStatus, AutonomousVerdict, AutonomousWitness, FailureReason};
pub use square::{decide_square, degree_bound_check, DegreeBound, SquareReason, SquareStatus, SquareVerdict};
pub use tower::{Generator, GeneratorKind, QuadConst, QuadExt, TowerExpr, TowerWitness, LAMBDA};

pub use crate::verify::AutonomousBranch as Branch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0} must be nonzero")]
    ZeroInput(&'static str),
    #[error("malformed coefficient list: {0}")]
    MalformedCoefficients(String),
    #[error("emitted witness failed verification: {0}")]
    WitnessRejected(String),
}

impl DecisionError {
    /// Precondition violations and resource limits, as opposed to bugs.
    pub fn is_precondition(&self) -> bool {
        match self {
            DecisionError::ZeroInput(_) | DecisionError::MalformedCoefficients(_) => true,
            DecisionError::Algebra(e) | DecisionError::Reduction(ReductionError::Algebra(e)) => {
                matches!(e, AlgebraError::ResourceLimit(_) | AlgebraError::ZeroInput(_))
            }
            DecisionError::Reduction(ReductionError::ZeroInput(_)) => true,
            _ => false,
        }
    }
}
