//! Recognizing exact derivatives and scaled logarithmic derivatives.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::{is_squarefree, poly_gcd, rational_roots, AlgebraError, Poly, Rat, RatFunc};

use super::residues::{residue_certificate, rt_resultant, scaling_constant, ResidueCertificate};
use super::{hermite_reduce, ReductionError};

/// `z` with `dz/dv = f`, when one exists in `Q(v)`.
///
/// Works for any variable tag; over `Q(x)` with `d/dx` this is the test for
/// `x' = f` having a solution in the ground field.
pub fn has_rational_antiderivative(f: &RatFunc) -> Result<Option<RatFunc>, ReductionError> {
    let parts = hermite_reduce(f)?;
    if !parts.remainder.is_zero() {
        return Ok(None);
    }
    Ok(Some(&RatFunc::from_poly(parts.poly_part.integrate()) + &parts.rat_part))
}

/// Explicit `a`, `z` with `z' / (a z) = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogWitness {
    pub a: Rat,
    pub z: RatFunc,
}

/// Largest total degree `sum |a r_i| deg g_i` of an explicit witness `z`.
pub const MAX_WITNESS_DEGREE: u64 = 100;

fn witness_degree(a: &Rat, factors: &[(Rat, Poly)]) -> BigInt {
    factors
        .iter()
        .map(|(r, g)| (a * r).abs().to_integer() * BigInt::from(g.degree().finite().unwrap_or(0)))
        .sum()
}

/// Builds `z = prod g_i^(a r_i)` for a proper `h` with squarefree
/// denominator and rational residues `r_i`.
pub fn log_witness(h: &RatFunc) -> Result<LogWitness, ReductionError> {
    let s = rt_resultant(h)?;
    let roots = rational_roots(&s)?;
    if !roots.splits() {
        return Err(ReductionError::NonRationalResidue);
    }
    let residues: Vec<Rat> = roots.roots.iter().map(|(r, _)| r.clone()).collect();
    let a = scaling_constant(&residues);
    let var = h.variable();
    let dprime = h.den().diff();
    let mut factors = Vec::with_capacity(residues.len());
    for r in &residues {
        factors.push((r.clone(), poly_gcd(h.den(), &(h.num() - &dprime.scale(r)))?));
    }
    if witness_degree(&a, &factors) > BigInt::from(MAX_WITNESS_DEGREE) {
        return Err(AlgebraError::ResourceLimit(format!(
            "explicit witness would exceed degree {MAX_WITNESS_DEGREE} (scaling constant {a})"
        ))
        .into());
    }
    let mut z = RatFunc::one(var);
    for (r, g) in factors {
        let e: i64 = (&a * &r)
            .to_integer()
            .try_into()
            .map_err(|_| ReductionError::Internal("witness exponent overflow".into()))?;
        z = &z * &RatFunc::from_poly(g).pow(e)?;
    }
    let lhs = z.diff();
    let rhs = &(&z * h).scale(&a);
    if &lhs != rhs {
        return Err(ReductionError::Internal(format!(
            "log witness z = {z}, a = {a} does not satisfy z' = a z h"
        )));
    }
    Ok(LogWitness { a, z })
}

/// Why a function is not of the form `z' / (a z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogDerivFailure {
    /// Nonzero polynomial part.
    PolynomialPart(Poly),
    /// Denominator has repeated factors; carries `gcd(den, den')`.
    NonSquarefreeDenominator(Poly),
    /// Some residue ratio is irrational.
    IncommensurableResidues(ResidueCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogDerivative {
    No(Vec<LogDerivFailure>),
    /// Rational residues: explicit witness.
    Witness { witness: LogWitness, certificate: ResidueCertificate },
    /// Commensurable residues without an explicit `z`: either some residue
    /// is irrational (`z` needs an algebraic extension of `Q`; `scale_a` is
    /// `None`), or `z` would exceed [`MAX_WITNESS_DEGREE`].
    CertificateOnly(ResidueCertificate),
}

impl LogDerivative {
    pub fn is_yes(&self) -> bool {
        !matches!(self, LogDerivative::No(_))
    }
}

/// Decides whether `f = z' / (a z)` for some `z` in `Qbar(v)` and nonzero
/// constant `a`.
pub fn is_log_derivative_up_to_constant(f: &RatFunc) -> Result<LogDerivative, ReductionError> {
    if f.is_zero() {
        return Err(ReductionError::ZeroInput("log-derivative test"));
    }
    let (poly_part, proper) = f.proper_split();
    let mut failures = Vec::new();
    if !poly_part.is_zero() {
        failures.push(LogDerivFailure::PolynomialPart(poly_part));
    }
    if !is_squarefree(f.den()) {
        let repeated = poly_gcd(f.den(), &f.den().diff())?;
        failures.push(LogDerivFailure::NonSquarefreeDenominator(repeated));
    }
    if !failures.is_empty() {
        return Ok(LogDerivative::No(failures));
    }
    let certificate = residue_certificate(&proper)?;
    if let Some(a) = &certificate.scale_a {
        if witness_degree(a, &certificate.rational_residues) > BigInt::from(MAX_WITNESS_DEGREE) {
            return Ok(LogDerivative::CertificateOnly(certificate));
        }
        let witness = log_witness(&proper)?;
        return Ok(LogDerivative::Witness { witness, certificate });
    }
    if certificate.commensurable {
        Ok(LogDerivative::CertificateOnly(certificate))
    } else {
        Ok(LogDerivative::No(vec![LogDerivFailure::IncommensurableResidues(certificate)]))
    }
}
