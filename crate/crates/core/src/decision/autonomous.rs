//! `y' = R(y)` with `R` in `Q(y)`: a nonconstant liouvillian solution exists
//! exactly when `1/R = dz/dy` or `1/R = (dz/dy)/(a z)` for some `z` in
//! `Qbar(y)` and nonzero constant `a`.

use crate::algebra::{Rat, RatFunc};
use crate::reduction::{
    has_rational_antiderivative, hermite_reduce, is_log_derivative_up_to_constant, LogDerivFailure,
    LogDerivative, ResidueCertificate,
};
use crate::verify::{verify_autonomous_witness, AutonomousBranch};

use super::DecisionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutonomousStatus {
    Liouvillian,
    NotLiouvillian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutonomousWitness {
    pub z: RatFunc,
    /// Present on the log-derivative branch.
    pub a: Option<Rat>,
}

/// A criterion conjunct that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// `1/R` has no rational antiderivative; carries the Hermite remainder.
    NoRationalAntiderivative(RatFunc),
    LogDerivative(LogDerivFailure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutonomousVerdict {
    pub status: AutonomousStatus,
    /// Set exactly when `status` is liouvillian.
    pub branch: Option<AutonomousBranch>,
    pub witness: Option<AutonomousWitness>,
    pub certificate: Option<ResidueCertificate>,
    pub failure_reasons: Vec<FailureReason>,
}

pub fn decide_autonomous(r: &RatFunc) -> Result<AutonomousVerdict, DecisionError> {
    if r.is_zero() {
        return Err(DecisionError::ZeroInput("R"));
    }
    let f = r.inv()?;

    if let Some(z) = has_rational_antiderivative(&f)? {
        let report = verify_autonomous_witness(r, AutonomousBranch::Antiderivative, &z, None)?;
        if !report.passed {
            return Err(DecisionError::WitnessRejected(report.residual));
        }
        return Ok(AutonomousVerdict {
            status: AutonomousStatus::Liouvillian,
            branch: Some(AutonomousBranch::Antiderivative),
            witness: Some(AutonomousWitness { z, a: None }),
            certificate: None,
            failure_reasons: Vec::new(),
        });
    }

    let liouvillian = |witness, certificate| AutonomousVerdict {
        status: AutonomousStatus::Liouvillian,
        branch: Some(AutonomousBranch::LogDerivative),
        witness,
        certificate: Some(certificate),
        failure_reasons: Vec::new(),
    };
    match is_log_derivative_up_to_constant(&f)? {
        LogDerivative::Witness { witness, certificate } => {
            let report =
                verify_autonomous_witness(r, AutonomousBranch::LogDerivative, &witness.z, Some(&witness.a))?;
            if !report.passed {
                return Err(DecisionError::WitnessRejected(report.residual));
            }
            Ok(liouvillian(Some(AutonomousWitness { z: witness.z, a: Some(witness.a) }), certificate))
        }
        LogDerivative::CertificateOnly(certificate) => Ok(liouvillian(None, certificate)),
        LogDerivative::No(reasons) => {
            let remainder = hermite_reduce(&f)?.remainder;
            let mut failure_reasons = vec![FailureReason::NoRationalAntiderivative(remainder)];
            failure_reasons.extend(reasons.into_iter().map(FailureReason::LogDerivative));
            Ok(AutonomousVerdict {
                status: AutonomousStatus::NotLiouvillian,
                branch: None,
                witness: None,
                certificate: None,
                failure_reasons,
            })
        }
    }
}
