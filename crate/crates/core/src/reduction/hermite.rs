use crate::algebra::{poly_gcd, solve_bezout, Poly, RatFunc};

use super::ReductionError;

/// `f = poly_part + d(rat_part)/dv + remainder`, with `remainder` proper and
/// its denominator squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteParts {
    pub poly_part: Poly,
    pub rat_part: RatFunc,
    pub remainder: RatFunc,
}

impl HermiteParts {
    /// Reassembles `poly_part + rat_part' + remainder`.
    pub fn reconstruct(&self) -> RatFunc {
        &(&RatFunc::from_poly(self.poly_part.clone()) + &self.rat_part.diff()) + &self.remainder
    }
}

/// Hermite reduction (linear version), in the function's own variable.
pub fn hermite_reduce(f: &RatFunc) -> Result<HermiteParts, ReductionError> {
    let var = f.variable();
    let (poly_part, proper) = f.proper_split();
    let mut rat_part = RatFunc::zero(var);
    if proper.is_zero() {
        return Ok(HermiteParts { poly_part, rat_part, remainder: proper });
    }
    let mut a = proper.num().clone();
    let d = proper.den();
    let mut d_minus = poly_gcd(d, &d.diff())?;
    let d_star = d.div_exact(&d_minus)?;
    while !d_minus.is_constant() {
        let dm_prime = d_minus.diff();
        let d_minus2 = poly_gcd(&d_minus, &dm_prime)?;
        let d_minus_star = d_minus.div_exact(&d_minus2)?;
        let lhs = -&(&d_star * &dm_prime).div_exact(&d_minus)?;
        let (b, c) = solve_bezout(&lhs, &d_minus_star, &a)?;
        a = &c - &(&b.diff() * &d_star).div_exact(&d_minus_star)?;
        rat_part = &rat_part + &RatFunc::new(b, d_minus.clone())?;
        d_minus = d_minus2;
    }
    let remainder = RatFunc::new(a, d_star)?;
    Ok(HermiteParts { poly_part, rat_part, remainder })
}
