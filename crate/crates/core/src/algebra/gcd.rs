//! Polynomial gcd and resultant via subresultant remainder sequences, plus
//! the extended Euclidean algorithm used by Hermite reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{pow_rat, AlgebraError, Poly, Rat};

/// Dense integer coefficients, lowest degree first, no trailing zeros.
type IntPoly = Vec<BigInt>;

fn int_coeffs(p: &Poly) -> IntPoly {
    p.primitive_integer().coeffs().iter().map(|c| c.to_integer()).collect()
}

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without fractions.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return r;
    }
    let lb = b.last().expect("nonzero divisor");
    let mut pending = r.len() - b.len() + 1;
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[i + k] -= &lr * bi;
        }
        trim(&mut r);
        pending -= 1;
    }
    if pending > 0 {
        let f = num_traits::pow(lb.clone(), pending);
        for x in r.iter_mut() {
            *x *= &f;
        }
    }
    r
}

fn int_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn int_to_poly(p: &Poly, c: &[BigInt]) -> Poly {
    Poly::new(p.variable(), c.iter().map(|x| Rat::from_integer(x.clone())).collect())
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly, AlgebraError> {
    a.check_var(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::ZeroInput("gcd"));
    }
    let (mut x, mut y) = (int_coeffs(a), int_coeffs(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.is_empty() {
        return Ok(int_to_poly(a, &x).monic());
    }
    // primitive remainder sequence
    loop {
        let r = int_prem(&x, &y);
        if r.is_empty() {
            return Ok(int_to_poly(a, &y).monic());
        }
        if r.len() == 1 {
            return Ok(Poly::one(a.variable()));
        }
        let c = int_content(&r);
        x = std::mem::replace(&mut y, r.into_iter().map(|v| v / &c).collect());
    }
}

/// Resultant of two nonzero polynomials in their common variable, with the
/// Sylvester-matrix sign convention (rows of `a` first).
pub fn resultant(a: &Poly, b: &Poly) -> Result<Rat, AlgebraError> {
    a.check_var(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroInput("resultant"));
    }
    // a = ca * pa with pa primitive integer
    let (pa, pb) = (a.primitive_integer(), b.primitive_integer());
    let (ca, cb) = (a.lc() / pa.lc(), b.lc() / pb.lc());
    let t = pow_rat(&ca, pb.deg0() as i64) * pow_rat(&cb, pa.deg0() as i64);
    let (mut x, mut y) = (int_coeffs(a), int_coeffs(b));
    let mut sign = BigInt::one();
    let odd = |p: &IntPoly| (p.len() - 1) % 2 == 1;
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
        if odd(&x) && odd(&y) {
            sign = -sign;
        }
    }
    // subresultant PRS; g and h stay integral
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    while y.len() > 1 {
        let delta = x.len() - y.len();
        if odd(&x) && odd(&y) {
            sign = -sign;
        }
        let r = int_prem(&x, &y);
        if r.is_empty() {
            return Ok(Rat::zero());
        }
        let d = &g * num_traits::pow(h.clone(), delta);
        x = std::mem::replace(&mut y, r.into_iter().map(|v| v / &d).collect());
        g = x.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
        };
    }
    let da = x.len() - 1;
    let lb = y[0].clone();
    let h = match da {
        0 => h,
        _ => num_traits::pow(lb, da) / num_traits::pow(h, da - 1),
    };
    Ok(Rat::from_integer(sign * h) * t)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` the monic gcd.
pub fn ext_gcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly), AlgebraError> {
    a.check_var(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::ZeroInput("gcd"));
    }
    let var = a.variable();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(var), Poly::zero(var));
    let (mut t0, mut t1) = (Poly::zero(var), Poly::one(var));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.lc().recip();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// Solves `s*a + t*b = c` with `deg s < deg b`. Requires `gcd(a, b) | c`.
pub fn solve_bezout(a: &Poly, b: &Poly, c: &Poly) -> Result<(Poly, Poly), AlgebraError> {
    if b.is_constant() {
        // deg s < 0 forces s = 0, so t carries everything.
        return Ok((Poly::zero(a.variable()), c.div_exact(b)?));
    }
    let (g, s0, t0) = ext_gcd(a, b)?;
    let q = c.div_exact(&g)?;
    let s = &s0 * &q;
    let t = &t0 * &q;
    let (k, s) = s.div_rem(b)?;
    let t = &t + &(&k * a);
    Ok((s, t))
}
