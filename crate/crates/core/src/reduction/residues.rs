//! Residues of a proper fraction with squarefree denominator, read off the
//! Rothstein–Trager resultant, and the pairwise residue-ratio polynomial
//! that decides whether all residues are rational multiples of one another.

use num_traits::{One, Zero};

use crate::algebra::{
    is_squarefree, poly_gcd, rational_roots, resultant_bivariate, squarefree_part, AlgebraError,
    BiPoly, Poly, Rat, RatFunc, Var,
};

use super::ReductionError;

/// Largest residue-polynomial degree accepted by [`ratio_poly`]; the ratio
/// polynomial has degree up to the square of it.
pub const MAX_RATIO_DEGREE: usize = 64;

/// Residue data of a proper fraction `h` with squarefree denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCertificate {
    /// Primitive squarefree `S(t)` whose roots are the residues of `h`.
    pub rt_resultant: Poly,
    /// `W(u) = res_t(S(t), S(u t))`; its roots are the residue ratios.
    pub ratio_poly: Poly,
    /// Rational residues `r` with `gcd(den, num - r den')`, the product of
    /// the pole factors carrying that residue.
    pub rational_residues: Vec<(Rat, Poly)>,
    /// Every residue ratio is rational.
    pub commensurable: bool,
    /// Least positive `a` scaling every residue to an integer, when all
    /// residues are rational.
    pub scale_a: Option<Rat>,
}

/// Outcome of the commensurability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commensurability {
    pub commensurable: bool,
    /// Distinct rational roots of the ratio polynomial.
    pub ratios: Vec<Rat>,
}

fn check_proper_squarefree(h: &RatFunc) -> Result<(), ReductionError> {
    if h.is_zero() {
        return Err(ReductionError::ZeroInput("residue analysis"));
    }
    if !h.is_proper() {
        return Err(ReductionError::NonProperInput);
    }
    if !is_squarefree(h.den()) {
        return Err(ReductionError::NonSquarefreeDenominator);
    }
    Ok(())
}

/// Primitive squarefree part of `res_v(num - t den', den)` with positive
/// leading coefficient, as a polynomial in `t`.
pub fn rt_resultant(h: &RatFunc) -> Result<Poly, ReductionError> {
    check_proper_squarefree(h)?;
    let (num, den) = (h.num(), h.den());
    let dprime = den.diff();
    let len = num.coeffs().len().max(dprime.coeffs().len());
    let coeffs = (0..len)
        .map(|k| Poly::new(Var::T, vec![num.coeff(k), -dprime.coeff(k)]))
        .collect();
    let a = BiPoly::new(num.variable(), Var::T, coeffs)?;
    let b = BiPoly::from_outer(den, Var::T)?;
    let raw = resultant_bivariate(&a, &b)?;
    if raw.is_zero() {
        return Err(ReductionError::Internal("Rothstein-Trager resultant vanished".into()));
    }
    let s = squarefree_part(&raw)?.primitive_integer();
    if s.coeff(0).is_zero() {
        return Err(ReductionError::Internal("residue polynomial has a root at t = 0".into()));
    }
    Ok(s)
}

/// `W(u) = res_t(S(t), S(u t))`, the polynomial whose roots are all ratios
/// `r_i / r_j` of roots of `S`.
pub fn ratio_poly(s: &Poly) -> Result<Poly, ReductionError> {
    if s.is_constant() {
        return Err(ReductionError::ConstantInput);
    }
    if s.coeff(0).is_zero() {
        return Err(ReductionError::ZeroRootInput);
    }
    let m = s.deg0();
    if m > MAX_RATIO_DEGREE {
        return Err(AlgebraError::ResourceLimit(format!(
            "residue polynomial of degree {m} exceeds {MAX_RATIO_DEGREE}"
        ))
        .into());
    }
    let outer = s.variable();
    let a = BiPoly::from_outer(s, Var::U)?;
    let scaled = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Poly::monomial(Var::U, c.clone(), k))
        .collect();
    let b = BiPoly::new(outer, Var::U, scaled)?;
    Ok(resultant_bivariate(&a, &b)?)
}

/// Whether all roots of `S` are rational multiples of one another.
pub fn commensurable(s: &Poly) -> Result<Commensurability, ReductionError> {
    let w = ratio_poly(s)?;
    let roots = rational_roots(&w)?;
    Ok(Commensurability {
        commensurable: roots.splits(),
        ratios: roots.roots.into_iter().map(|(r, _)| r).collect(),
    })
}

/// Least positive rational `a` with `a * r` integral for every `r`.
pub(crate) fn scaling_constant(residues: &[Rat]) -> Rat {
    let mut num_gcd = num_bigint::BigInt::zero();
    let mut den_lcm = num_bigint::BigInt::one();
    for r in residues {
        num_gcd = num_integer::Integer::gcd(&num_gcd, r.numer());
        den_lcm = num_integer::Integer::lcm(&den_lcm, r.denom());
    }
    Rat::new(den_lcm, num_gcd)
}

/// Full residue analysis of `h` (proper, squarefree denominator, nonzero).
pub fn residue_certificate(h: &RatFunc) -> Result<ResidueCertificate, ReductionError> {
    let s = rt_resultant(h)?;
    let w = ratio_poly(&s)?;
    let roots = rational_roots(&s)?;
    let mut rational_residues = Vec::with_capacity(roots.roots.len());
    let dprime = h.den().diff();
    for (r, _) in &roots.roots {
        let g = poly_gcd(h.den(), &(h.num() - &dprime.scale(r)))?;
        rational_residues.push((r.clone(), g));
    }
    let (commensurable, scale_a) = if roots.splits() {
        let rs: Vec<Rat> = rational_residues.iter().map(|(r, _)| r.clone()).collect();
        (true, Some(scaling_constant(&rs)))
    } else {
        (rational_roots(&w)?.splits(), None)
    };
    Ok(ResidueCertificate { rt_resultant: s, ratio_poly: w, rational_residues, commensurable, scale_a })
}
