//! Yun's squarefree decomposition.

use super::{poly_gcd, AlgebraError, Poly};

/// Squarefree decomposition `p = lc(p) * prod(f_i ^ m_i)` with monic,
/// squarefree, pairwise coprime factors listed by increasing multiplicity.
pub fn squarefree_decompose(p: &Poly) -> Result<Vec<(Poly, usize)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroInput("squarefree decomposition"));
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.diff();
    let a0 = poly_gcd(&f, &df)?;
    let mut b = f.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut d = &c - &b.diff();
    let mut i = 1;
    while !b.is_constant() {
        let a = poly_gcd(&b, &d)?;
        b = b.div_exact(&a)?;
        let c = d.div_exact(&a)?;
        d = &c - &b.diff();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// `gcd(p, p')` is constant. The zero polynomial is not squarefree.
pub fn is_squarefree(p: &Poly) -> bool {
    if p.is_zero() {
        return false;
    }
    poly_gcd(p, &p.diff()).is_ok_and(|g| g.is_constant())
}

/// Monic product of the distinct irreducible factors of `p`.
pub fn squarefree_part(p: &Poly) -> Result<Poly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroInput("squarefree part"));
    }
    let g = poly_gcd(p, &p.diff())?;
    Ok(p.div_exact(&g)?.monic())
}
