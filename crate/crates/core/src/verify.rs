//! Independent witness verification.
//!
//! Every check substitutes a witness back into its defining identity and
//! tests the difference for exact zero, using only [`crate::algebra`]
//! arithmetic. Nothing here calls into [`crate::reduction`], so a bug there
//! cannot certify its own output.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{rational_sqrt, render_rat, Poly, Rat, RatFunc, Var};
use crate::decision::{GeneratorKind, QuadConst, TowerExpr, TowerWitness, LAMBDA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("unsupported tower shape: {0}")]
    UnsupportedTowerShape(String),
    #[error("malformed extension: {0}")]
    MalformedExtension(String),
}

/// Outcome of one exact check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// The identity that was checked.
    pub identity: String,
    pub passed: bool,
    /// Rendered `lhs - rhs`; `"0"` exactly when `passed`.
    pub residual: String,
}

impl VerificationReport {
    fn from_residual(identity: String, residual: String, is_zero: bool) -> Self {
        VerificationReport { identity, passed: is_zero, residual }
    }
}

/// Which half of the autonomous criterion a witness claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutonomousBranch {
    /// `1/R = dz/dy`, so `z' = 1`.
    Antiderivative,
    /// `1/R = (dz/dy) / (a z)`, so `z' = a z`.
    LogDerivative,
}

/// Checks `R * dz/dy = 1` (antiderivative branch) or `R * dz/dy = a z`
/// (log-derivative branch).
pub fn verify_autonomous_witness(
    r: &RatFunc,
    branch: AutonomousBranch,
    z: &RatFunc,
    a: Option<&Rat>,
) -> Result<VerificationReport, VerifyError> {
    if r.variable() != z.variable() {
        return Err(VerifyError::MalformedWitness(format!(
            "witness in {} for an equation in {}",
            z.variable(),
            r.variable()
        )));
    }
    let var = r.variable();
    let lhs = r * &z.diff();
    let (rhs, identity) = match (branch, a) {
        (AutonomousBranch::Antiderivative, None) => {
            (RatFunc::one(var), format!("R*dz/d{var} = 1"))
        }
        (AutonomousBranch::LogDerivative, Some(a)) if !a.is_zero() => {
            (z.scale(a), format!("R*dz/d{var} = {}*z", render_rat(a)))
        }
        (AutonomousBranch::Antiderivative, Some(_)) => {
            return Err(VerifyError::MalformedWitness("antiderivative branch takes no constant".into()))
        }
        (AutonomousBranch::LogDerivative, _) => {
            return Err(VerifyError::MalformedWitness("log-derivative branch needs a nonzero constant".into()))
        }
    };
    let residual = &lhs - &rhs;
    Ok(VerificationReport::from_residual(identity, residual.to_string(), residual.is_zero()))
}

/// Checks the Leibniz rule `(f g)' = f' g + f g'` for one pair.
pub fn check_leibniz(f: &RatFunc, g: &RatFunc) -> VerificationReport {
    let lhs = (f * g).diff();
    let rhs = &(&f.diff() * g) + &(f * &g.diff());
    let residual = &lhs - &rhs;
    VerificationReport::from_residual(
        "(f*g)' = f'*g + f*g'".into(),
        residual.to_string(),
        residual.is_zero(),
    )
}

/// Element `p + q λ` of `Q(λ)(g)`, with `λ^2 = square`.
#[derive(Clone, Debug)]
struct Quad<'a> {
    p: RatFunc,
    q: RatFunc,
    square: &'a Rat,
}

impl<'a> Quad<'a> {
    fn new(p: RatFunc, q: RatFunc, square: &'a Rat) -> Self {
        Quad { p, q, square }
    }

    fn constant(var: Var, c: &QuadConst, square: &'a Rat) -> Self {
        Quad::new(RatFunc::constant(var, c.rational.clone()), RatFunc::constant(var, c.lambda.clone()), square)
    }

    fn add(&self, o: &Quad<'a>) -> Quad<'a> {
        Quad::new(&self.p + &o.p, &self.q + &o.q, self.square)
    }

    fn sub(&self, o: &Quad<'a>) -> Quad<'a> {
        Quad::new(&self.p - &o.p, &self.q - &o.q, self.square)
    }

    fn mul(&self, o: &Quad<'a>) -> Quad<'a> {
        let p = &(&self.p * &o.p) + &(&self.q * &o.q).scale(self.square);
        let q = &(&self.p * &o.q) + &(&self.q * &o.p);
        Quad::new(p, q, self.square)
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn render(&self) -> String {
        TowerExpr { rational: self.p.clone(), lambda: self.q.clone() }.to_string()
    }
}

/// Checks `(y')^2 = P(y)` for `y` given by a single-generator tower
/// witness, differentiating by the generator's rule and reducing `λ^2`.
pub fn verify_square_witness(p: &Poly, w: &TowerWitness) -> Result<VerificationReport, VerifyError> {
    let [gen] = w.generators.as_slice() else {
        return Err(VerifyError::UnsupportedTowerShape(format!(
            "expected exactly one generator, found {}",
            w.generators.len()
        )));
    };
    let var = gen.name;
    if w.expression.rational.variable() != var || w.expression.lambda.variable() != var {
        return Err(VerifyError::MalformedWitness(format!("expression is not written in the generator {var}")));
    }
    let zero = Rat::zero();
    let square = match &w.quad_ext {
        Some(ext) => {
            if is_rational_square(&ext.square) {
                return Err(VerifyError::MalformedExtension(format!(
                    "{LAMBDA}^2 = {} has a rational root",
                    render_rat(&ext.square)
                )));
            }
            &ext.square
        }
        None => {
            let rate_lambda = match &gen.kind {
                GeneratorKind::Exponential { rate } => !rate.lambda.is_zero(),
                GeneratorKind::Antiderivative => false,
            };
            if !w.expression.lambda.is_zero() || rate_lambda {
                return Err(VerifyError::MalformedExtension(format!("{LAMBDA} used without a declared extension")));
            }
            &zero
        }
    };

    let y = Quad::new(w.expression.rational.clone(), w.expression.lambda.clone(), square);
    let dy_dgen = Quad::new(y.p.diff(), y.q.diff(), square);
    let y_prime = match &gen.kind {
        GeneratorKind::Antiderivative => dy_dgen,
        GeneratorKind::Exponential { rate } => {
            let gen_prime = Quad::constant(var, rate, square).mul(&Quad::new(RatFunc::var(var), RatFunc::zero(var), square));
            dy_dgen.mul(&gen_prime)
        }
    };
    let lhs = y_prime.mul(&y_prime);
    let rhs = p.coeffs().iter().rev().fold(
        Quad::new(RatFunc::zero(var), RatFunc::zero(var), square),
        |acc, c| {
            acc.mul(&y).add(&Quad::new(RatFunc::constant(var, c.clone()), RatFunc::zero(var), square))
        },
    );
    let residual = lhs.sub(&rhs);
    let identity = format!("(y')^2 = {} with y = {}", p.with_var(Var::Y), w.expression);
    Ok(VerificationReport::from_residual(identity, residual.render(), residual.is_zero()))
}

fn is_rational_square(c: &Rat) -> bool {
    rational_sqrt(c).is_some()
}
