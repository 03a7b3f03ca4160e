//! Exact univariate polynomial and rational-function arithmetic over `Q`.
//!
//! Everything here is immutable value arithmetic: gcds and resultants by
//! subresultant remainder sequences, Yun squarefree decomposition, rational
//! root extraction by real-root isolation, and a two-variable resultant used
//! by the residue machinery.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

mod bivariate;
mod coeffpoly;
mod gcd;
mod poly;
mod ratfunc;
mod render;
mod roots;
mod squarefree;

pub use bivariate::{resultant_bivariate, BiPoly};
pub use coeffpoly::CoeffPoly;
pub use gcd::{ext_gcd, poly_gcd, resultant, solve_bezout};
pub use poly::{Degree, Poly};
pub use ratfunc::RatFunc;
pub use render::render_rat;
pub use roots::{rational_roots, RationalRoots};
pub use squarefree::{is_squarefree, squarefree_decompose, squarefree_part};

pub(crate) use poly::pow_rat;

/// Exact rational number; always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Shorthand for the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Nonnegative rational square root of `c`, when it is rational.
pub fn rational_sqrt(c: &Rat) -> Option<Rat> {
    if c.is_negative() {
        return None;
    }
    let (n, d) = (c.numer().sqrt(), c.denom().sqrt());
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Rat::new(n, d))
}

/// Role tag of a polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Dependent variable of the differential equation.
    Y,
    /// Independent variable; `Q(x)` with `d/dx`.
    X,
    /// Antiderivative generator, or the residue variable of Rothstein–Trager.
    T,
    /// Residue-ratio variable.
    U,
    /// Exponential generator `v' = λ v`.
    V,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Y => "y",
            Var::X => "x",
            Var::T => "t",
            Var::U => "u",
            Var::V => "v",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("{0} requires a nonzero polynomial")]
    ZeroInput(&'static str),
    #[error("polynomial division was not exact")]
    InexactDivision,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
