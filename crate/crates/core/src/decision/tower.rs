//! Explicit liouvillian witnesses over a single generator, with coefficients
//! in `Q` or in one quadratic extension `Q(λ)`, `λ^2 = c`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{render_rat, Rat, RatFunc, Var};

/// Name used for the quadratic-extension generator in rendered output.
pub const LAMBDA: &str = "lambda";

/// `rational + lambda * λ` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadConst {
    pub rational: Rat,
    pub lambda: Rat,
}

impl QuadConst {
    pub fn rational(r: Rat) -> Self {
        QuadConst { rational: r, lambda: Rat::zero() }
    }

    /// The extension generator `λ` itself.
    pub fn lambda() -> Self {
        QuadConst { rational: Rat::zero(), lambda: Rat::one() }
    }
}

impl fmt::Display for QuadConst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.lambda.is_zero()) {
            (_, true) => f.write_str(&render_rat(&self.rational)),
            (true, false) if self.lambda.is_one() => f.write_str(LAMBDA),
            (true, false) => write!(f, "({})*{LAMBDA}", render_rat(&self.lambda)),
            (false, false) => {
                write!(f, "{} + ({})*{LAMBDA}", render_rat(&self.rational), render_rat(&self.lambda))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `t' = 1`.
    Antiderivative,
    /// `v' = rate * v`.
    Exponential { rate: QuadConst },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: Var,
    pub kind: GeneratorKind,
}

impl Generator {
    /// Right-hand side of the generator's derivation rule, rendered.
    pub fn derivative_text(&self) -> String {
        match &self.kind {
            GeneratorKind::Antiderivative => "1".to_string(),
            GeneratorKind::Exponential { rate } if rate.lambda.is_zero() && rate.rational.is_one() => {
                self.name.to_string()
            }
            GeneratorKind::Exponential { rate } => format!("{}*{}", paren(&rate.to_string()), self.name),
        }
    }
}

/// Quadratic extension `λ^2 = square`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub square: Rat,
}

/// `rational + λ * lambda`, both rational functions in the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerExpr {
    pub rational: RatFunc,
    pub lambda: RatFunc,
}

impl TowerExpr {
    pub fn rational(f: RatFunc) -> Self {
        let lambda = RatFunc::zero(f.variable());
        TowerExpr { rational: f, lambda }
    }

    pub fn pure_lambda(f: RatFunc) -> Self {
        let rational = RatFunc::zero(f.variable());
        TowerExpr { rational, lambda: f }
    }
}

fn paren(s: &str) -> String {
    if s.contains([' ', '/', '*']) || s.starts_with('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

impl fmt::Display for TowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lam = || format!("{LAMBDA}*{}", paren(&self.lambda.to_string()));
        match (self.rational.is_zero(), self.lambda.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => f.write_str(&lam()),
            (false, false) => write!(f, "{} + {}", self.rational, lam()),
        }
    }
}

/// Witness `y = expression` over the declared generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerWitness {
    pub generators: Vec<Generator>,
    pub quad_ext: Option<QuadExt>,
    pub expression: TowerExpr,
    /// The identity the witness satisfies, e.g. `(y')^2 = 2*y + 3`.
    pub claimed_relation: String,
}
