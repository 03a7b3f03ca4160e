//! Input families for the benchmarks, sized by a single parameter.

use liouvillian::algebra::{Poly, Rat, RatFunc, Var};

/// `R = prod_{i=1..n} (y - i)`: `1/R` has `n` rational residues.
pub fn split_denominator(n: i64) -> RatFunc {
    let r = (1..=n).fold(Poly::one(Var::Y), |acc, i| &acc * &Poly::from_ints(Var::Y, &[-i, 1]));
    RatFunc::from_poly(r)
}

/// `R = y^n - 2`: residues differ by roots of unity, so `W(u)` does not split.
pub fn binomial(n: usize) -> RatFunc {
    let mut c = vec![0; n + 1];
    c[0] = -2;
    c[n] = 1;
    RatFunc::from_poly(Poly::from_ints(Var::Y, &c))
}

/// `prod_{i=1..n} (k y - i)` with large `k`: many roots on a fine grid.
pub fn dense_roots(n: i64, k: i64) -> Poly {
    (1..=n).fold(Poly::one(Var::Y), |acc, i| &acc * &Poly::from_ints(Var::Y, &[-i, k]))
}

/// `1/x, 1/x^2, ..., 1/x^n`.
pub fn abel_coeffs(n: usize) -> Vec<RatFunc> {
    (1..=n)
        .map(|k| {
            let mut d = vec![Rat::from_integer(0.into()); k + 1];
            d[k] = Rat::from_integer(1.into());
            RatFunc::new(Poly::one(Var::X), Poly::new(Var::X, d)).expect("nonzero denominator")
        })
        .collect()
}
