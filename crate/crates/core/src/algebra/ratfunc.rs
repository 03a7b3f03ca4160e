//! Canonical univariate rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{poly_gcd, AlgebraError, Poly, Rat, Var};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonicalizes `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        num.check_var(&den)?;
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(num.variable()));
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let inv = den.lc().recip();
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.variable());
        RatFunc { num: p, den }
    }

    pub fn zero(var: Var) -> Self {
        RatFunc::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RatFunc::from_poly(Poly::one(var))
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(var, c))
    }

    pub fn var(var: Var) -> Self {
        RatFunc::from_poly(Poly::var(var))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn variable(&self) -> Var {
        self.num.variable()
    }

    pub fn with_var(&self, var: Var) -> Self {
        RatFunc { num: self.num.with_var(var), den: self.den.with_var(var) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one_poly() && self.den.is_constant()
    }

    /// True when the function is a constant (no dependence on the variable).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Constant value, when the function is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    /// `deg num < deg den`.
    pub fn is_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let inv = self.num.lc().recip();
        Ok(RatFunc { num: self.den.scale(&inv), den: self.num.scale(&inv) })
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, AlgebraError> {
        self.num.check_var(&rhs.num)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFunc::zero(self.variable());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    /// Formal derivative `(num' den - num den') / den^2` in the own variable.
    pub fn diff(&self) -> Self {
        let n = &(&self.num.diff() * &self.den) - &(&self.num * &self.den.diff());
        RatFunc::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Splits into polynomial part and proper part.
    pub fn proper_split(&self) -> (Poly, RatFunc) {
        let (q, r) = self.num.div_rem(&self.den).expect("nonzero denominator");
        // r and den stay coprime and den stays monic, so no renormalization
        (q, RatFunc { num: r, den: self.den.clone() })
    }

    /// Substitutes a rational function for the variable: `self(arg)`.
    pub fn compose(&self, arg: &RatFunc) -> Result<Self, AlgebraError> {
        let eval = |p: &Poly| -> RatFunc {
            p.coeffs().iter().rev().fold(RatFunc::zero(arg.variable()), |acc, c| {
                &(&acc * arg) + &RatFunc::constant(arg.variable(), c.clone())
            })
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }

    fn assert_var(&self, other: &RatFunc) {
        assert!(
            self.variable() == other.variable(),
            "rational function variable mismatch: {} vs {}",
            self.variable(),
            other.variable()
        );
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.assert_var(rhs);
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(n, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.assert_var(rhs);
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
