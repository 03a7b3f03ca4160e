//! Complete rational root extraction.
//!
//! A rational root of a primitive integer polynomial with leading
//! coefficient `L` has the form `m / L` with `m` an integer. Real roots of the
//! squarefree part are isolated by Descartes-rule bisection (Vincent,
//! Collins, Akritas); each isolating interval is narrowed until it holds at
//! most one point of `Z / L`, which is then tested exactly. No coefficient is
//! ever factored.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{squarefree_part, AlgebraError, Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Distinct rational roots with multiplicities, in increasing order.
    pub roots: Vec<(Rat, usize)>,
    /// `p / prod (var - r)^m`; has no rational root.
    pub nonsplit: Poly,
}

impl RationalRoots {
    /// True when `p` is a constant times a product of linear factors over `Q`.
    pub fn splits(&self) -> bool {
        self.nonsplit.is_constant()
    }
}

pub fn rational_roots(p: &Poly) -> Result<RationalRoots, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroInput("rational root extraction"));
    }
    let var = p.variable();
    let mut work = p.primitive_integer();
    let mut roots: Vec<(Rat, usize)> = Vec::new();

    let zeros = work.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rat::zero(), zeros));
        work = Poly::new(var, work.coeffs()[zeros..].to_vec());
    }

    if !work.is_constant() {
        let sqf = squarefree_part(&work)?.primitive_integer();
        let f: Vec<BigInt> = sqf.coeffs().iter().map(|c| c.to_integer()).collect();
        for c in real_rational_roots(&f) {
            // q*var - p keeps the working polynomial integral
            let linear = Poly::new(
                var,
                vec![Rat::from_integer(-c.numer().clone()), Rat::from_integer(c.denom().clone())],
            );
            let mut mult = 0;
            while !work.is_constant() && work.eval(&c).is_zero() {
                work = work.div_exact(&linear)?;
                mult += 1;
            }
            debug_assert!(mult > 0);
            roots.push((c, mult));
        }
    }

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let mut divisor = Poly::one(var);
    for (r, m) in &roots {
        divisor = &divisor * &Poly::new(var, vec![-r.clone(), Rat::one()]).pow(*m as u32);
    }
    let nonsplit = p.div_exact(&divisor)?;
    Ok(RationalRoots { roots, nonsplit })
}

/// Rational roots of a squarefree integer polynomial with `f(0) != 0`.
fn real_rational_roots(f: &[BigInt]) -> Vec<Rat> {
    let lead = f.last().expect("nonconstant").abs();
    let mut out = Vec::new();
    for negate in [false, true] {
        let g: Vec<BigInt> = f
            .iter()
            .enumerate()
            .map(|(i, c)| if negate && i % 2 == 1 { -c } else { c.clone() })
            .collect();
        let k = root_bound_log2(&g);
        let scaled: Vec<BigInt> = g.iter().enumerate().map(|(i, c)| c << (k * i as u64)).collect();
        let mut found = Vec::new();
        isolate(scaled, Rat::zero(), Rat::from_integer(BigInt::one() << k), &lead, &g, &mut found);
        out.extend(found.into_iter().map(|r| if negate { -r } else { r }));
    }
    out.sort();
    out
}

/// `k` with every positive root of `g` strictly below `2^k`.
fn root_bound_log2(g: &[BigInt]) -> u64 {
    // Cauchy: |root| < 1 + max |g_i / g_n|
    let lead = g.last().expect("nonconstant").abs();
    let max = g[..g.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    let ratio = max.div_ceil(&lead) + 1u32;
    ratio.bits()
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in c.iter().filter(|c| !c.is_zero()).map(|c| if c.is_positive() { 1i8 } else { -1 }) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Coefficients of `g(x + 1)`.
fn taylor_shift_one(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let n = c.len() - 1;
    for i in 0..n {
        for j in (i..n).rev() {
            let next = c[j + 1].clone();
            c[j] += next;
        }
    }
    c
}

/// Number of integers `m` with `lo < m / lead < hi`, and the smallest one.
fn grid_points(lo: &Rat, hi: &Rat, lead: &BigInt) -> (BigInt, BigInt) {
    let l = Rat::from_integer(lead.clone());
    let first = (lo * &l).floor().to_integer() + 1u32;
    let last = (hi * &l).ceil().to_integer() - 1u32;
    let count = if last >= first { &last - &first + 1u32 } else { BigInt::zero() };
    (count, first)
}

/// Roots of `orig` in `(a, a + w)`; `g(x)` is `orig(a + w x)` up to a
/// positive factor, so its roots in `(0, 1)` correspond.
fn isolate(g: Vec<BigInt>, a: Rat, w: Rat, lead: &BigInt, orig: &[BigInt], out: &mut Vec<Rat>) {
    let b = &a + &w;
    let (count, first) = grid_points(&a, &b, lead);
    if count.is_zero() {
        return;
    }
    let mut rev = g.clone();
    rev.reverse();
    let v = sign_variations(&taylor_shift_one(rev));
    if v == 0 {
        return;
    }
    if v == 1 {
        // one simple root in (a, b): its sign change, if any, lies on the grid
        let last = &first + &count - 1u32;
        if let Some(m) = grid_root(orig, lead, first, last) {
            out.push(Rat::new(m, lead.clone()));
        }
        return;
    }
    let n = g.len() - 1;
    let half = primitive(g.iter().enumerate().map(|(i, c)| c << (n - i)).collect());
    let half_w = w / Rat::from_integer(2.into());
    let mid = &a + &half_w;
    let mut right = primitive(taylor_shift_one(half.clone()));
    if right[0].is_zero() {
        out.push(mid.clone());
        right.remove(0);
    }
    isolate(half, a, half_w.clone(), lead, orig, out);
    if right.len() > 1 {
        isolate(right, mid, half_w, lead, orig, out);
    }
}

fn primitive(c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        c
    } else {
        c.into_iter().map(|x| x / &g).collect()
    }
}

/// Sign of `f(m / lead)`, from `sum f_i m^i lead^(n-i)`.
fn sign_at(f: &[BigInt], lead_pows: &[BigInt], m: &BigInt) -> i8 {
    let n = f.len() - 1;
    let mut acc = f[n].clone();
    for i in (0..n).rev() {
        acc = acc * m + &f[i] * &lead_pows[n - i];
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// The `m` in `[first, last]` with `f(m / lead) = 0`, given that `f` has
/// exactly one root, a simple one, in an open interval containing the range.
fn grid_root(f: &[BigInt], lead: &BigInt, mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    let n = f.len() - 1;
    let mut lead_pows = vec![BigInt::one()];
    for i in 0..n {
        let next = &lead_pows[i] * lead;
        lead_pows.push(next);
    }
    let s_lo = sign_at(f, &lead_pows, &lo);
    if s_lo == 0 {
        return Some(lo);
    }
    let s_hi = sign_at(f, &lead_pows, &hi);
    if s_hi == 0 {
        return Some(hi);
    }
    if s_lo == s_hi {
        return None;
    }
    // invariant: signs at lo and hi differ and are nonzero
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1u32;
        match sign_at(f, &lead_pows, &mid) {
            0 => return Some(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    None
}
