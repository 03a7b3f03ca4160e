//! `(y')^2 = P(y)` with constant coefficients, and the degree bound for
//! solutions in iterated antiderivative towers.

use num_traits::{One, Zero};

use crate::algebra::{is_squarefree, rational_sqrt, CoeffPoly, Degree, Poly, Rat, RatFunc, Var};
use crate::verify::verify_square_witness;

use super::tower::{Generator, GeneratorKind, QuadConst, QuadExt, TowerExpr, TowerWitness};
use super::DecisionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareStatus {
    Liouvillian,
    NotLiouvillian,
    Inapplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareReason {
    /// `deg P >= 3` and `P` squarefree.
    DegreeAndSquarefree,
    /// Explicit witness for `deg P <= 2`.
    ExplicitConstruction,
    /// `deg P >= 3` with a repeated root: outside the proved criterion.
    RepeatedRootsOrLowDegreeUnhandled,
}

impl SquareReason {
    pub fn code(self) -> &'static str {
        match self {
            SquareReason::DegreeAndSquarefree => "degree_and_squarefree",
            SquareReason::ExplicitConstruction => "explicit_construction",
            SquareReason::RepeatedRootsOrLowDegreeUnhandled => "repeated_roots_or_low_degree_unhandled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareVerdict {
    pub status: SquareStatus,
    pub witness: Option<TowerWitness>,
    pub reason: SquareReason,
}

pub fn decide_square(p: &Poly) -> Result<SquareVerdict, DecisionError> {
    let Degree::Finite(deg) = p.degree() else {
        return Err(DecisionError::ZeroInput("P"));
    };
    if deg >= 3 {
        let (status, reason) = if is_squarefree(p) {
            (SquareStatus::NotLiouvillian, SquareReason::DegreeAndSquarefree)
        } else {
            (SquareStatus::Inapplicable, SquareReason::RepeatedRootsOrLowDegreeUnhandled)
        };
        return Ok(SquareVerdict { status, witness: None, reason });
    }
    let witness = match deg {
        0 => constant_witness(&p.coeff(0)),
        1 => linear_witness(&p.coeff(1), &p.coeff(0)),
        _ => quadratic_witness(&p.coeff(2), &p.coeff(1), &p.coeff(0)),
    };
    let witness = TowerWitness { claimed_relation: format!("(y')^2 = {}", p.with_var(Var::Y)), ..witness };
    let report = verify_square_witness(p, &witness)?;
    if !report.passed {
        return Err(DecisionError::WitnessRejected(report.residual));
    }
    Ok(SquareVerdict {
        status: SquareStatus::Liouvillian,
        witness: Some(witness),
        reason: SquareReason::ExplicitConstruction,
    })
}

fn antiderivative_gen() -> Vec<Generator> {
    vec![Generator { name: Var::T, kind: GeneratorKind::Antiderivative }]
}

/// `P = c`: `y = sqrt(c) t`.
fn constant_witness(c: &Rat) -> TowerWitness {
    let t = RatFunc::var(Var::T);
    let (quad_ext, expression) = match rational_sqrt(c) {
        Some(q) => (None, TowerExpr::rational(t.scale(&q))),
        None => (Some(QuadExt { square: c.clone() }), TowerExpr::pure_lambda(t)),
    };
    TowerWitness { generators: antiderivative_gen(), quad_ext, expression, claimed_relation: String::new() }
}

/// `P = a y + b`: `y = (a/4) t^2 - b/a`, so `y' = (a/2) t`.
fn linear_witness(a: &Rat, b: &Rat) -> TowerWitness {
    let expr = Poly::new(Var::T, vec![-(b / a), Rat::zero(), a / Rat::from_integer(4.into())]);
    TowerWitness {
        generators: antiderivative_gen(),
        quad_ext: None,
        expression: TowerExpr::rational(RatFunc::from_poly(expr)),
        claimed_relation: String::new(),
    }
}

/// `P = c y^2 + b y + e = c (y - m)^2 - k`: `y = m + v/2 + (k / 2c) / v`
/// with `v' = sqrt(c) v`. All coefficients stay rational; only the rate
/// may need `λ^2 = c`.
fn quadratic_witness(c: &Rat, b: &Rat, e: &Rat) -> TowerWitness {
    let two = Rat::from_integer(2.into());
    let four = Rat::from_integer(4.into());
    let m = -(b / (&two * c));
    let k = (b * b - &four * c * e) / (&four * c);
    let half = Rat::one() / &two;
    let inner = &k / (&two * c);
    let num = Poly::new(Var::V, vec![inner, m, half]);
    let expression = TowerExpr::rational(RatFunc::new(num, Poly::var(Var::V)).expect("nonzero denominator"));
    let (quad_ext, rate) = match rational_sqrt(c) {
        Some(q) => (None, QuadConst::rational(q)),
        None => (Some(QuadExt { square: c.clone() }), QuadConst::lambda()),
    };
    TowerWitness {
        generators: vec![Generator { name: Var::V, kind: GeneratorKind::Exponential { rate } }],
        quad_ext,
        expression,
        claimed_relation: String::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeBound {
    /// `deg_y P >= 3`: no solution outside the ground field in any iterated
    /// antiderivative extension with the same constants.
    NoSolutionInAntiderivativeTowers,
    Inconclusive,
}

/// Degree test for `y' = P(y)` with coefficients in `Q(x)`.
pub fn degree_bound_check(p: &CoeffPoly) -> Result<DegreeBound, DecisionError> {
    match p.degree() {
        Degree::NegInfinity => Err(DecisionError::ZeroInput("P")),
        Degree::Finite(d) if d >= 3 => Ok(DegreeBound::NoSolutionInAntiderivativeTowers),
        Degree::Finite(_) => Ok(DegreeBound::Inconclusive),
    }
}
