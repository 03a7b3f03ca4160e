//! Exact decision procedures for liouvillian solutions of first-order
//! differential equations with rational coefficients.
//!
//! Three families are covered:
//!
//! * autonomous equations `y' = R(y)`, decided by whether `1/R` is an exact
//!   derivative `dz/dy` or a scaled logarithmic derivative `(dz/dy)/(a z)`;
//! * squared equations `(y')^2 = P(y)`, impossible when `P` is squarefree of
//!   degree at least three, with explicit witnesses in degrees zero to two;
//! * Abel-type equations `y' = a_n y^n + ... + a_2 y^2 + a_1 y` over `Q(x)`,
//!   where antiderivative tests on `a_2`, `a_3` force every liouvillian
//!   solution to be algebraic.
//!
//! Every "liouvillian" verdict carrying an explicit witness is checked by
//! [`verify`], which re-derives the defining identity using only the
//! [`algebra`] primitives.

pub mod algebra;
pub mod reduction;
pub mod decision;
pub mod parser;
pub mod verify;
