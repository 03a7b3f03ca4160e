//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rat, Var};

/// Degree of a polynomial. The zero polynomial has the sentinel
/// [`Degree::NegInfinity`], which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A dense polynomial `coeffs[0] + coeffs[1]*v + ...` in the variable `var`.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::new(var, vec![c])
    }

    /// The polynomial `c * var^k`.
    pub fn monomial(var: Var, c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    /// The identity polynomial `var`.
    pub fn var(var: Var) -> Self {
        Poly::monomial(var, Rat::one(), 1)
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    /// Same coefficients, relabelled to another variable.
    pub fn with_var(&self, var: Var) -> Self {
        Poly { var, coeffs: self.coeffs.clone() }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree with the zero polynomial mapped to 0. Only for callers that
    /// have already excluded the zero polynomial or do not care.
    pub(crate) fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// True when the polynomial is `var^k` for some `k`.
    pub fn is_monic_monomial(&self) -> bool {
        self.is_monic() && self.coeffs[..self.coeffs.len() - 1].iter().all(Zero::is_zero)
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&lc.recip())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { var: self.var, coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative with respect to the polynomial's own variable.
    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rat::from_integer(BigInt::from(k + 1)));
        }
        Poly::new(self.var, coeffs)
    }

    /// Evaluates `self` at another polynomial (composition `self(p)`).
    pub fn compose(&self, p: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(p.var), |acc, c| &(&acc * p) + &Poly::constant(p.var, c.clone()))
    }

    /// The polynomial `self(c * var)`.
    pub fn scale_arg(&self, c: &Rat) -> Poly {
        let mut pow = Rat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow *= c;
        }
        Poly::new(self.var, coeffs)
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        self.check_var(b)?;
        if b.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = b.deg0();
        let lc_inv = b.lc().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= n {
            return Ok((Poly::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - n];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + n] * &lc_inv;
            if !c.is_zero() {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * bj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(n);
        Ok((Poly::new(self.var, quot), Poly::new(self.var, rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly, AlgebraError> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()))
    }

    /// Primitive integer form: integer coefficients with gcd 1 and positive
    /// leading coefficient. Zero maps to zero.
    pub fn primitive_integer(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = Rat::from_integer(self.denominator_lcm());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Poly::new(self.var, ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    pub(crate) fn check_var(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    fn assert_var(&self, other: &Poly) {
        assert!(
            self.var == other.var,
            "polynomial variable mismatch: {} vs {}",
            self.var,
            other.var
        );
    }
}

/// `base^e` for any integer exponent; `base` must be nonzero when `e < 0`.
pub(crate) fn pow_rat(base: &Rat, e: i64) -> Rat {
    let mut acc = Rat::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut e = e.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_var(rhs);
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(self.var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(self.var, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
