//! Polynomials in `y` whose coefficients are rational functions in `x`.

use std::fmt;

use super::{Degree, Poly, RatFunc, Var};

#[derive(Clone, PartialEq, Eq)]
pub struct CoeffPoly {
    coeff_var: Var,
    coeffs: Vec<RatFunc>,
}

impl CoeffPoly {
    pub fn new(coeff_var: Var, mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.variable() == coeff_var));
        CoeffPoly { coeff_var, coeffs }
    }

    /// Embeds a polynomial in `y` over `Q`.
    pub fn from_poly(p: &Poly, coeff_var: Var) -> Self {
        let coeffs = p.coeffs().iter().map(|c| RatFunc::constant(coeff_var, c.clone())).collect();
        CoeffPoly::new(coeff_var, coeffs)
    }

    pub fn coeff_var(&self) -> Var {
        self.coeff_var
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y`.
    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "y".to_string(),
                k => format!("y^{k}"),
            };
            match (c.is_one(), mono.is_empty()) {
                (true, false) => f.write_str(&mono)?,
                (_, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffPoly({self})")
    }
}
