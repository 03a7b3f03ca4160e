//! Text rendering of polynomials and rational functions. The output is valid
//! input for the expression parser and reparses to the same canonical value.

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use super::{Poly, Rat, RatFunc, Var};

/// `3`, `-3/2`.
pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One term `|c| * var^e` (sign handled by the caller). Negative exponents
/// render as a division.
fn term(out: &mut String, c: &Rat, var: Var, e: i64) {
    let c = c.abs();
    let coeff = if c.is_integer() { render_rat(&c) } else { format!("({})", render_rat(&c)) };
    let power = |k: i64| if k == 1 { var.to_string() } else { format!("{var}^{k}") };
    match e {
        0 => out.push_str(&render_rat(&c)),
        e if e > 0 && c.is_one() => out.push_str(&power(e)),
        e if e > 0 => {
            let _ = write!(out, "{coeff}*{}", power(e));
        }
        e => {
            let _ = write!(out, "{coeff}/{}", power(-e));
        }
    }
}

/// Renders `sum c_e var^e` over the given (exponent, coefficient) pairs in
/// the order supplied.
fn render_terms<'a>(var: Var, terms: impl Iterator<Item = (i64, &'a Rat)>) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        term(&mut out, c, var, e);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(p: &Poly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs().iter().enumerate().rev().map(|(k, c)| (k as i64, c));
        f.write_str(&render_terms(self.variable(), terms))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = (self.num(), self.den());
        if den.is_constant() {
            return write!(f, "{num}");
        }
        if den.is_monic_monomial() {
            let d = den.deg0() as i64;
            let terms = num.coeffs().iter().enumerate().rev().map(|(k, c)| (k as i64 - d, c));
            return f.write_str(&render_terms(self.variable(), terms));
        }
        let simple_num = term_count(num) == 1 && num.lc().is_integer();
        if simple_num {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}
