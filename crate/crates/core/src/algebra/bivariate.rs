//! Two-variable resultants, computed by evaluating the parameter at enough
//! integer points and interpolating. Only the Rothstein–Trager and residue
//! ratio call sites need this.

use num_traits::{One, Zero};

use super::{int, pow_rat, resultant, AlgebraError, Poly, Rat, Var};

/// Polynomial in `outer` whose coefficients are polynomials in `inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    outer: Var,
    inner: Var,
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(outer: Var, inner: Var, mut coeffs: Vec<Poly>) -> Result<Self, AlgebraError> {
        if outer == inner {
            return Err(AlgebraError::VariableMismatch { left: outer, right: inner });
        }
        if let Some(c) = coeffs.iter().find(|c| c.variable() != inner) {
            return Err(AlgebraError::VariableMismatch { left: inner, right: c.variable() });
        }
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Ok(BiPoly { outer, inner, coeffs })
    }

    /// Lifts a polynomial in `outer` with constant coefficients.
    pub fn from_outer(p: &Poly, inner: Var) -> Result<Self, AlgebraError> {
        let coeffs = p.coeffs().iter().map(|c| Poly::constant(inner, c.clone())).collect();
        BiPoly::new(p.variable(), inner, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the outer variable (formal: the leading coefficient is a
    /// nonzero polynomial, but may vanish at particular parameter values).
    pub fn outer_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn inner_degree(&self) -> usize {
        self.coeffs.iter().map(Poly::deg0).max().unwrap_or(0)
    }

    /// Specializes the inner variable.
    pub fn eval_inner(&self, at: &Rat) -> Poly {
        Poly::new(self.outer, self.coeffs.iter().map(|c| c.eval(at)).collect())
    }
}

/// Sylvester resultant of `a` (formal degree `m`) and `b` (formal degree `n`),
/// where the actual degrees may be lower.
fn formal_resultant(a: &Poly, m: usize, b: &Poly, n: usize) -> Result<Rat, AlgebraError> {
    let sign = |e: usize| if e % 2 == 0 { Rat::one() } else { -Rat::one() };
    match (a.degree().finite(), b.degree().finite()) {
        (None, None) => return Ok(Rat::zero()),
        (None, Some(_)) => return Ok(if n == 0 { pow_rat(&b.lc(), m as i64) } else { Rat::zero() }),
        (Some(_), None) => return Ok(if m == 0 { pow_rat(&a.lc(), n as i64) } else { Rat::zero() }),
        (Some(da), Some(db)) => {
            if da < m && db < n {
                // first column of the Sylvester matrix vanishes
                return Ok(Rat::zero());
            }
            let core = resultant(a, b)?;
            if da < m {
                // expanding the zero leading column of a repeatedly
                let f = sign(n) * b.lc();
                return Ok(pow_rat(&f, (m - da) as i64) * core);
            }
            if db < n {
                let f = sign(m) * a.lc();
                let s = sign(m * n) * sign(db * m);
                return Ok(s * pow_rat(&f, (n - db) as i64) * core);
            }
            Ok(core)
        }
    }
}

/// Resultant with respect to the shared outer variable; a polynomial in the
/// shared inner variable.
pub fn resultant_bivariate(a: &BiPoly, b: &BiPoly) -> Result<Poly, AlgebraError> {
    if a.outer != b.outer {
        return Err(AlgebraError::VariableMismatch { left: a.outer, right: b.outer });
    }
    if a.inner != b.inner {
        return Err(AlgebraError::VariableMismatch { left: a.inner, right: b.inner });
    }
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroInput("bivariate resultant"));
    }
    let (m, n) = (a.outer_degree(), b.outer_degree());
    let bound = m * b.inner_degree() + n * a.inner_degree();
    let points: Vec<Rat> = (0..=bound as i64).map(int).collect();
    let mut values = Vec::with_capacity(points.len());
    for p in &points {
        values.push(formal_resultant(&a.eval_inner(p), m, &b.eval_inner(p), n)?);
    }
    Ok(interpolate(a.inner, &points, &values))
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in monomial basis.
fn interpolate(var: Var, xs: &[Rat], ys: &[Rat]) -> Poly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Poly::zero(var);
    for i in (0..n).rev() {
        let factor = Poly::new(var, vec![-xs[i].clone(), Rat::one()]);
        acc = &(&acc * &factor) + &Poly::constant(var, dd[i].clone());
    }
    acc
}
