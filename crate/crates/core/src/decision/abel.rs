//! Abel-type equations `y' = αn y^n + ... + α2 y^2 + α1 y` over `Q(x)`.
//!
//! A nonzero `α1` is removed by the substitution `y = γ Y` with
//! `γ'/γ = α1`, which turns `αi` into `γ^(i-1) αi`. With `α1 = 0` every
//! solution in a liouvillian extension with the same constants is algebraic
//! over `Q(x)` as soon as neither `α2` nor `α3` is a derivative in `Q(x)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::{is_squarefree, poly_gcd, rational_roots, Rat, RatFunc, Var};
use crate::reduction::{has_rational_antiderivative, rt_resultant};

use super::DecisionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaFailure {
    /// `α` has a nonzero polynomial part.
    NotProper,
    /// The denominator of `α` has a repeated factor.
    NonSquarefree,
    /// Some residue of `α` is irrational.
    NonRationalResidues,
}

impl GammaFailure {
    pub fn code(&self) -> &'static str {
        match self {
            GammaFailure::NotProper => "not_proper",
            GammaFailure::NonSquarefree => "non_squarefree_denominator",
            GammaFailure::NonRationalResidues => "non_rational_residues",
        }
    }
}

/// Whether `γ'/γ = α` has a solution `γ` algebraic over `Q(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaVerdict {
    No(GammaFailure),
    /// Integer residues: `γ` in `Q(x)`.
    RationalGamma(RatFunc),
    /// Rational, non-integer residues: `γ^power = gamma_power` in `Q(x)`.
    AlgebraicGamma { residues: Vec<Rat>, power: BigInt, gamma_power: RatFunc },
}

/// Solves `γ'/γ = α` with `γ` algebraic over `Q(x)`, when possible.
pub fn log_derivative_of_algebraic(alpha: &RatFunc) -> Result<GammaVerdict, DecisionError> {
    let var = alpha.variable();
    if alpha.is_zero() {
        return Ok(GammaVerdict::RationalGamma(RatFunc::one(var)));
    }
    if !alpha.is_proper() {
        return Ok(GammaVerdict::No(GammaFailure::NotProper));
    }
    if !is_squarefree(alpha.den()) {
        return Ok(GammaVerdict::No(GammaFailure::NonSquarefree));
    }
    let roots = rational_roots(&rt_resultant(alpha)?)?;
    if !roots.splits() {
        return Ok(GammaVerdict::No(GammaFailure::NonRationalResidues));
    }
    let residues: Vec<Rat> = roots.roots.into_iter().map(|(r, _)| r).collect();
    let power = residues.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let dprime = alpha.den().diff();
    let mut g = RatFunc::one(var);
    for r in &residues {
        let factor = poly_gcd(alpha.den(), &(alpha.num() - &dprime.scale(r)))?;
        let e = (r * Rat::from_integer(power.clone())).to_integer();
        let e: i64 = e
            .try_into()
            .map_err(|_| DecisionError::MalformedCoefficients("residue exponent overflow".into()))?;
        g = &g * &RatFunc::from_poly(factor).pow(e)?;
    }
    let n = Rat::from_integer(power.clone());
    if g.diff() != (&g * alpha).scale(&n) {
        return Err(DecisionError::WitnessRejected(format!("gamma^{power} = {g} fails (g'/g) = {power}*alpha")));
    }
    if power.is_one() {
        Ok(GammaVerdict::RationalGamma(g))
    } else {
        Ok(GammaVerdict::AlgebraicGamma { residues, power, gamma_power: g })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbelStatus {
    /// Every liouvillian solution is algebraic over `Q(x)`.
    AlgebraicOnly,
    Inconclusive,
    /// `α1` needs a `γ` outside `Q(x)`.
    Unsupported,
}

/// Outcome of each hypothesis; `None` when it was not evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    /// `γ'/γ = α1` solvable with `γ` in `Q(x)`.
    pub alpha1_log_derivative: Option<bool>,
    /// No `w` in `Q(x)` with `w' = α2` (after scaling).
    pub alpha2_no_antiderivative: Option<bool>,
    /// No `v` in `Q(x)` with `v' = α3` (after scaling; `α3 = 0` when `n = 2`).
    pub alpha3_no_antiderivative: Option<bool>,
    /// Antiderivatives found for failed hypotheses.
    pub alpha2_antiderivative: Option<RatFunc>,
    pub alpha3_antiderivative: Option<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelVerdict {
    pub status: AbelStatus,
    pub gamma: Option<GammaVerdict>,
    /// Coefficients after removing `α1`; `None` when `γ` is not in `Q(x)`.
    pub scaled_coeffs: Option<Vec<RatFunc>>,
    pub hypothesis_report: HypothesisReport,
    pub part_i_fact: Option<String>,
    pub part_ii_fact: Option<String>,
}

/// Decides the algebraic-only property for `y' = Σ αi y^i`, `i = 1..=n`.
pub fn decide_abel(coeffs: &[RatFunc]) -> Result<AbelVerdict, DecisionError> {
    if coeffs.len() < 2 {
        return Err(DecisionError::MalformedCoefficients(format!(
            "need at least two coefficients, got {}",
            coeffs.len()
        )));
    }
    if let Some(c) = coeffs.iter().find(|c| !c.is_constant() && c.variable() != Var::X) {
        return Err(DecisionError::MalformedCoefficients(format!("coefficient {c} is not in Q(x)")));
    }
    let coeffs: Vec<RatFunc> = coeffs.iter().map(|c| c.with_var(Var::X)).collect();
    let mut report = HypothesisReport {
        alpha1_log_derivative: None,
        alpha2_no_antiderivative: None,
        alpha3_no_antiderivative: None,
        alpha2_antiderivative: None,
        alpha3_antiderivative: None,
    };
    let (gamma, scaled) = if coeffs[0].is_zero() {
        (None, coeffs.clone())
    } else {
        let verdict = log_derivative_of_algebraic(&coeffs[0])?;
        let g = match &verdict {
            GammaVerdict::RationalGamma(g) => g.clone(),
            GammaVerdict::AlgebraicGamma { .. } | GammaVerdict::No(_) => {
                report.alpha1_log_derivative = Some(false);
                let status = if matches!(verdict, GammaVerdict::No(_)) {
                    AbelStatus::Inconclusive
                } else {
                    AbelStatus::Unsupported
                };
                return Ok(AbelVerdict {
                    status,
                    gamma: Some(verdict),
                    scaled_coeffs: None,
                    hypothesis_report: report,
                    part_i_fact: None,
                    part_ii_fact: None,
                });
            }
        };
        let mut scaled = Vec::with_capacity(coeffs.len());
        scaled.push(RatFunc::zero(Var::X));
        for (i, a) in coeffs.iter().enumerate().skip(1) {
            let e = i64::try_from(i).expect("coefficient index fits i64");
            scaled.push(a * &g.pow(e)?);
        }
        (Some(verdict), scaled)
    };
    if gamma.is_some() {
        report.alpha1_log_derivative = Some(true);
    }
    let zero = RatFunc::zero(Var::X);
    let a2 = &scaled[1];
    let a3 = scaled.get(2).unwrap_or(&zero);
    let w = has_rational_antiderivative(a2)?;
    let v = has_rational_antiderivative(a3)?;
    report.alpha2_no_antiderivative = Some(w.is_none());
    report.alpha3_no_antiderivative = Some(v.is_none());
    report.alpha2_antiderivative = w;
    report.alpha3_antiderivative = v;
    let holds = report.alpha2_no_antiderivative == Some(true) && report.alpha3_no_antiderivative == Some(true);
    let part_i_fact = holds.then(|| {
        "no z in a liouvillian extension with z'/z algebraic over Q(x) other than algebraic z".to_string()
    });
    let part_ii_fact = holds.then(|| {
        format!(
            "w' = {a2} and v' = {a3} have no solution in Q(x); every liouvillian solution y lies in the algebraic closure of Q(x)"
        )
    });
    Ok(AbelVerdict {
        status: if holds { AbelStatus::AlgebraicOnly } else { AbelStatus::Inconclusive },
        gamma,
        scaled_coeffs: Some(scaled),
        hypothesis_report: report,
        part_i_fact,
        part_ii_fact,
    })
}
