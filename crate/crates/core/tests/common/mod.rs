//! Seeded random generators and randomized property suites shared by the
//! integration and acceptance targets. Each suite returns the number of
//! cases checked, or a description of the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liouvillian::algebra::{
    is_squarefree, poly_gcd, rat, rational_roots, resultant, squarefree_decompose, Degree, Poly, Rat, RatFunc, Var,
};
use liouvillian::decision::{
    decide_abel, decide_autonomous, decide_square, AbelStatus, AutonomousStatus, Branch, GeneratorKind,
    SquareStatus, TowerExpr, TowerWitness,
};
use liouvillian::parser::parse_ratfunc;
use liouvillian::reduction::{
    commensurable, has_rational_antiderivative, hermite_reduce, is_log_derivative_up_to_constant, log_witness,
    residue_certificate, rt_resultant, LogDerivative,
};
use liouvillian::verify::{check_leibniz, verify_autonomous_witness, verify_square_witness};

pub type SuiteResult = Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut impl Rng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn nonzero_rat(rng: &mut impl Rng, bound: i64) -> Rat {
    loop {
        let r = small_rat(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rand_poly(rng: &mut impl Rng, var: Var, max_deg: usize, bound: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new(var, (0..=deg).map(|_| small_rat(rng, bound)).collect())
}

pub fn nonzero_poly(rng: &mut impl Rng, var: Var, max_deg: usize, bound: i64) -> Poly {
    loop {
        let p = rand_poly(rng, var, max_deg, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rand_ratfunc(rng: &mut impl Rng, var: Var) -> RatFunc {
    let num = rand_poly(rng, var, 4, 5);
    let den = nonzero_poly(rng, var, 3, 5);
    RatFunc::new(num, den).expect("nonzero denominator")
}

pub fn nonzero_ratfunc(rng: &mut impl Rng, var: Var) -> RatFunc {
    loop {
        let f = rand_ratfunc(rng, var);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn distinct_rats(rng: &mut impl Rng, k: usize, bound: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < k {
        let r = small_rat(rng, bound);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `var - c`.
pub fn linear(var: Var, c: &Rat) -> Poly {
    Poly::new(var, vec![-c.clone(), Rat::one()])
}

pub fn product(var: Var, factors: &[Poly]) -> Poly {
    factors.iter().fold(Poly::one(var), |acc, f| &acc * f)
}

/// Proper `num/den` with `den` a product of distinct rational linear
/// factors and `num` nonzero at every pole. Returns the poles too.
pub fn split_proper(rng: &mut impl Rng, var: Var, max_poles: usize) -> (RatFunc, Vec<Rat>) {
    let k = rng.gen_range(1..=max_poles);
    let poles = distinct_rats(rng, k, 4);
    let den = product(var, &poles.iter().map(|c| linear(var, c)).collect::<Vec<_>>());
    loop {
        let num = nonzero_poly(rng, var, k - 1, 4);
        if poles.iter().all(|c| !num.eval(c).is_zero()) {
            return (RatFunc::new(num, den).expect("nonzero denominator"), poles);
        }
    }
}

/// Proper function with simple poles at distinct rational points and the
/// given nonzero residues there, built by Lagrange interpolation of
/// `num(c_i) = r_i den'(c_i)`.
pub fn with_residues(var: Var, poles: &[Rat], residues: &[Rat]) -> RatFunc {
    let linears: Vec<Poly> = poles.iter().map(|c| linear(var, c)).collect();
    let den = product(var, &linears);
    let dprime = den.diff();
    let mut num = Poly::zero(var);
    for (i, (c, r)) in poles.iter().zip(residues).enumerate() {
        let others: Vec<Poly> = linears.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, l)| l.clone()).collect();
        let basis = product(var, &others);
        let target = r * dprime.eval(c);
        num = &num + &basis.scale(&(target / basis.eval(c)));
    }
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Split proper function whose residues are small rationals.
pub fn small_residue_proper(rng: &mut impl Rng, var: Var, max_poles: usize) -> (RatFunc, Vec<Rat>) {
    let k = rng.gen_range(1..=max_poles);
    let poles = distinct_rats(rng, k, 4);
    let den = rng.gen_range(1..=3);
    let residues: Vec<Rat> = (0..k)
        .map(|_| loop {
            let n = rng.gen_range(-3..=3);
            if n != 0 {
                break rat(n, den);
            }
        })
        .collect();
    (with_residues(var, &poles, &residues), residues)
}

/// Monic quadratic without rational roots.
pub fn irreducible_quadratic(rng: &mut impl Rng, var: Var) -> Poly {
    loop {
        let q = Poly::new(var, vec![small_rat(rng, 6), small_rat(rng, 6), Rat::one()]);
        if rational_roots(&q).expect("nonzero").roots.is_empty() {
            return q;
        }
    }
}

pub fn squarefree_poly(rng: &mut impl Rng, var: Var, deg: usize) -> Poly {
    loop {
        let mut c: Vec<Rat> = (0..deg).map(|_| small_rat(rng, 6)).collect();
        c.push(nonzero_rat(rng, 6));
        let p = Poly::new(var, c);
        if is_squarefree(&p) {
            return p;
        }
    }
}

fn is_canonical(f: &RatFunc) -> bool {
    f.den().is_monic() && poly_gcd(f.num(), f.den()).map_or(f.num().is_zero(), |g| g.is_constant())
        || (f.num().is_zero() && f.den() == &Poly::one(f.variable()))
}

pub fn canonical_form(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let f = rand_ratfunc(&mut rng, Var::Y);
        let g = rand_ratfunc(&mut rng, Var::Y);
        let mut results = vec![&f + &g, &f - &g, &f * &g, f.diff(), f.scale(&small_rat(&mut rng, 5))];
        if !g.is_zero() {
            results.push(f.checked_div(&g).map_err(|e| e.to_string())?);
        }
        if let Some(bad) = results.iter().find(|r| !is_canonical(r)) {
            return Err(format!("non-canonical result {bad:?} from f = {f}, g = {g}"));
        }
    }
    Ok(cases)
}

pub fn leibniz(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let f = rand_ratfunc(&mut rng, Var::Y);
        let g = rand_ratfunc(&mut rng, Var::Y);
        let report = check_leibniz(&f, &g);
        if !report.passed {
            return Err(format!("Leibniz residual {} for f = {f}, g = {g}", report.residual));
        }
    }
    Ok(cases)
}

pub fn divrem(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let a = rand_poly(&mut rng, Var::Y, 7, 9);
        let b = nonzero_poly(&mut rng, Var::Y, 4, 9);
        let (q, r) = a.div_rem(&b).map_err(|e| e.to_string())?;
        if &(&q * &b) + &r != a || r.degree() >= b.degree() && !r.is_zero() {
            return Err(format!("divrem failed for a = {a}, b = {b}"));
        }
    }
    Ok(cases)
}

pub fn squarefree_reconstruction(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let factors: Vec<Poly> = (0..n).map(|_| nonzero_poly(&mut rng, Var::Y, 2, 4)).collect();
        let p = factors.iter().fold(Poly::constant(Var::Y, nonzero_rat(&mut rng, 5)), |acc, f| {
            let m = rng.gen_range(1..=3);
            &acc * &f.pow(m)
        });
        let dec = squarefree_decompose(&p).map_err(|e| e.to_string())?;
        let rebuilt = dec.iter().fold(Poly::constant(Var::Y, p.lc()), |acc, (f, m)| &acc * &f.pow(*m as u32));
        if rebuilt != p {
            return Err(format!("reconstruction failed for {p}"));
        }
        for (i, (f, _)) in dec.iter().enumerate() {
            if !is_squarefree(f) || !f.is_monic() {
                return Err(format!("factor {f} of {p} not monic squarefree"));
            }
            for (g, _) in &dec[i + 1..] {
                if !poly_gcd(f, g).map_err(|e| e.to_string())?.is_constant() {
                    return Err(format!("factors {f}, {g} of {p} share a factor"));
                }
            }
        }
    }
    Ok(cases)
}

pub fn resultant_gcd_duality(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let mut shared = 0;
    for _ in 0..cases {
        let mut a = nonzero_poly(&mut rng, Var::Y, 3, 5);
        let mut b = nonzero_poly(&mut rng, Var::Y, 3, 5);
        if rng.gen_bool(0.5) {
            let c = nonzero_poly(&mut rng, Var::Y, 2, 5);
            if !c.is_constant() {
                a = &a * &c;
                b = &b * &c;
                shared += 1;
            }
        }
        if a.is_constant() && b.is_constant() {
            continue;
        }
        let res = resultant(&a, &b).map_err(|e| e.to_string())?;
        let g = poly_gcd(&a, &b).map_err(|e| e.to_string())?;
        if res.is_zero() != !g.is_constant() {
            return Err(format!("res({a}, {b}) = {res} but gcd = {g}"));
        }
    }
    if shared < cases / 4 {
        return Err(format!("only {shared} pairs with a shared factor"));
    }
    Ok(cases)
}

pub fn rational_roots_oracle(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let k = rng.gen_range(0..=4);
        let mut expected: BTreeMap<Rat, usize> = BTreeMap::new();
        let mut p = Poly::constant(Var::Y, nonzero_rat(&mut rng, 9));
        for _ in 0..k {
            let r = small_rat(&mut rng, 7);
            *expected.entry(r.clone()).or_default() += 1;
            // random nonzero multiple of (y - r)
            let s = nonzero_rat(&mut rng, 5);
            p = &p * &linear(Var::Y, &r).scale(&s);
        }
        if rng.gen_bool(0.7) {
            p = &p * &irreducible_quadratic(&mut rng, Var::Y);
        }
        let got = rational_roots(&p).map_err(|e| e.to_string())?;
        let got_map: BTreeMap<Rat, usize> = got.roots.iter().cloned().collect();
        if got_map != expected {
            return Err(format!("roots of {p}: got {:?}, expected {expected:?}", got.roots));
        }
        if got.nonsplit.degree() > Degree::Finite(2) || got.nonsplit.degree() == Degree::Finite(1) {
            return Err(format!("cofactor {} of {p} has the wrong degree", got.nonsplit));
        }
    }
    Ok(cases)
}

pub fn hermite_reconstruction(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let den = (0..n).fold(Poly::constant(Var::Y, nonzero_rat(&mut rng, 4)), |acc, _| {
            let f = nonzero_poly(&mut rng, Var::Y, 2, 4);
            &acc * &f.pow(rng.gen_range(1..=3))
        });
        let num = rand_poly(&mut rng, Var::Y, 7, 6);
        let f = RatFunc::new(num, den).map_err(|e| e.to_string())?;
        let parts = hermite_reduce(&f).map_err(|e| e.to_string())?;
        if parts.reconstruct() != f {
            return Err(format!("Hermite reconstruction failed for {f}"));
        }
        if !parts.remainder.is_zero() && !is_squarefree(parts.remainder.den()) {
            return Err(format!("remainder {} of {f} has a repeated pole", parts.remainder));
        }
        if !parts.remainder.is_proper() {
            return Err(format!("remainder {} of {f} not proper", parts.remainder));
        }
    }
    Ok(cases)
}

/// Brute-force residues `num(c) / den'(c)` at the poles of a split function.
fn brute_residues(h: &RatFunc, poles: &[Rat]) -> Vec<Rat> {
    let dprime = h.den().diff();
    let mut r: Vec<Rat> = poles.iter().map(|c| h.num().eval(c) / dprime.eval(c)).collect();
    r.sort();
    r
}

pub fn residue_oracle(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let (h, poles) = split_proper(&mut rng, Var::Y, 5);
        let expected = brute_residues(&h, &poles);
        let s = rt_resultant(&h).map_err(|e| e.to_string())?;
        let roots = rational_roots(&s).map_err(|e| e.to_string())?;
        let mut distinct: Vec<Rat> = expected.clone();
        distinct.dedup();
        let got: Vec<Rat> = roots.roots.iter().map(|(r, _)| r.clone()).collect();
        if !roots.splits() || got != distinct {
            return Err(format!("S(t) = {s} for {h}: roots {got:?}, expected {distinct:?}"));
        }
        let cert = residue_certificate(&h).map_err(|e| e.to_string())?;
        let mut multiset: Vec<Rat> = cert
            .rational_residues
            .iter()
            .flat_map(|(r, g)| std::iter::repeat(r.clone()).take(g.degree().finite().unwrap_or(0)))
            .collect();
        multiset.sort();
        if multiset != expected {
            return Err(format!("residue multiset {multiset:?} for {h}, expected {expected:?}"));
        }
    }
    Ok(cases)
}

pub fn ratio_oracle(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let (h, poles) = split_proper(&mut rng, Var::Y, 4);
        let residues = brute_residues(&h, &poles);
        let mut expected: Vec<Rat> = residues.iter().flat_map(|a| residues.iter().map(move |b| a / b)).collect();
        expected.sort();
        expected.dedup();
        let s = rt_resultant(&h).map_err(|e| e.to_string())?;
        let c = commensurable(&s).map_err(|e| e.to_string())?;
        if !c.commensurable || c.ratios != expected {
            return Err(format!("ratios for {h}: got {:?}, expected {expected:?}", c.ratios));
        }
    }
    Ok(cases)
}

pub fn log_witness_soundness(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let (h, residues) = small_residue_proper(&mut rng, Var::Y, 5);
        let w = log_witness(&h).map_err(|e| format!("{h}: {e}"))?;
        if residues.iter().any(|r| !(&w.a * r).is_integer()) {
            return Err(format!("a = {} does not clear residues {residues:?}", w.a));
        }
        if w.z.diff() != (&w.z * &h).scale(&w.a) {
            return Err(format!("z = {}, a = {} fails z' = a z h for {h}", w.z, w.a));
        }
    }
    Ok(cases)
}

pub fn antiderivative_soundness(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let mut exact = 0;
    for _ in 0..cases {
        let g = rand_ratfunc(&mut rng, Var::X);
        let mut f = g.diff();
        let perturbed = rng.gen_bool(0.5);
        if perturbed {
            let (h, _) = split_proper(&mut rng, Var::X, 3);
            f = &f + &h;
        }
        match has_rational_antiderivative(&f).map_err(|e| e.to_string())? {
            Some(z) if z.diff() != f => return Err(format!("antiderivative {z} of {f} is wrong")),
            Some(_) => exact += 1,
            None if !perturbed => return Err(format!("missed antiderivative of {f} = ({g})'")),
            None => {}
        }
    }
    if exact < cases / 4 {
        return Err(format!("only {exact} exact derivatives"));
    }
    Ok(cases)
}

/// `has_rational_antiderivative` and the log-derivative class are
/// invariant under nonzero scaling; the constant `a` scales by `1/c`.
pub fn reduction_scaling(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let f = nonzero_ratfunc(&mut rng, Var::Y);
        let c = nonzero_rat(&mut rng, 7);
        let cf = f.scale(&c);
        let (a, b) = (
            has_rational_antiderivative(&f).map_err(|e| e.to_string())?,
            has_rational_antiderivative(&cf).map_err(|e| e.to_string())?,
        );
        if a.is_some() != b.is_some() {
            return Err(format!("antiderivative presence differs for {f} and {c}*f"));
        }
        let (lf, lcf) = (
            is_log_derivative_up_to_constant(&f).map_err(|e| e.to_string())?,
            is_log_derivative_up_to_constant(&cf).map_err(|e| e.to_string())?,
        );
        let class = |l: &LogDerivative| std::mem::discriminant(l);
        if class(&lf) != class(&lcf) {
            return Err(format!("log-derivative class differs for {f} and {c}*f"));
        }
        if let (LogDerivative::Witness { witness: w1, .. }, LogDerivative::Witness { witness: w2, .. }) = (&lf, &lcf) {
            use num_traits::Signed;
            if w2.a != (&w1.a / &c).abs() {
                return Err(format!("a = {} for f but {} for {c}*f", w1.a, w2.a));
            }
        }
    }
    Ok(cases)
}

/// Random nonzero `R` whose reciprocal mixes an exact derivative with a few
/// simple poles, so both verdicts occur.
pub fn rand_autonomous_r(rng: &mut impl Rng) -> RatFunc {
    loop {
        let mut inv = RatFunc::zero(Var::Y);
        if rng.gen_bool(0.6) {
            inv = &inv + &rand_poly(rng, Var::Y, 2, 4).into();
            inv = &inv + &RatFunc::new(Poly::constant(Var::Y, small_rat(rng, 3)), linear(Var::Y, &small_rat(rng, 3)).pow(2))
                .expect("nonzero");
        }
        if rng.gen_bool(0.7) {
            let part = if rng.gen_bool(0.5) { small_residue_proper(rng, Var::Y, 3).0 } else { split_proper(rng, Var::Y, 3).0 };
            inv = &inv + &part;
        }
        if rng.gen_bool(0.2) {
            let q = irreducible_quadratic(rng, Var::Y);
            inv = &inv + &RatFunc::new(rand_poly(rng, Var::Y, 1, 4), q).expect("nonzero");
        }
        if !inv.is_zero() {
            return inv.inv().expect("nonzero");
        }
    }
}

/// `-y^2 R(1/y)`.
pub fn inversion(r: &RatFunc) -> RatFunc {
    let y = RatFunc::var(Var::Y);
    let composed = r.compose(&y.inv().expect("nonzero")).expect("defined composition");
    -(&(&y * &y) * &composed)
}

pub fn autonomous_invariance(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let mut counts = [0usize; 2];
    for _ in 0..cases {
        let r = rand_autonomous_r(&mut rng);
        let c = nonzero_rat(&mut rng, 9);
        let base = decide_autonomous(&r).map_err(|e| format!("{r}: {e}"))?.status;
        let scaled = decide_autonomous(&r.scale(&c)).map_err(|e| e.to_string())?.status;
        let inv = inversion(&r);
        let inverted = decide_autonomous(&inv).map_err(|e| format!("{inv}: {e}"))?.status;
        if base != scaled || base != inverted {
            return Err(format!("R = {r}: {base:?}, scaled {scaled:?}, inverted {inverted:?}"));
        }
        counts[usize::from(base == AutonomousStatus::Liouvillian)] += 1;
    }
    if counts.iter().any(|&n| n < cases / 10) {
        return Err(format!("unbalanced verdicts {counts:?}"));
    }
    Ok(cases)
}

/// Every single-coefficient perturbation of `f` that still is a valid
/// rational function: one entry per coefficient slot of `num` and `den`.
fn mutations(rng: &mut impl Rng, f: &RatFunc) -> Vec<RatFunc> {
    let var = f.variable();
    let mut out = Vec::new();
    let bump = |c: &[Rat], k: usize, d: &Rat| {
        let mut c = c.to_vec();
        if k >= c.len() {
            c.resize(k + 1, Rat::zero());
        }
        c[k] += d;
        Poly::new(var, c)
    };
    let (n, d) = (f.num().coeffs(), f.den().coeffs());
    for k in 0..=n.len() {
        let delta = nonzero_rat(rng, 5);
        if let Ok(m) = RatFunc::new(bump(n, k, &delta), f.den().clone()) {
            out.push(m);
        }
    }
    for k in 0..=d.len() {
        let delta = nonzero_rat(rng, 5);
        if let Ok(m) = RatFunc::new(f.num().clone(), bump(d, k, &delta)) {
            out.push(m);
        }
    }
    // a perturbed denominator of the zero function is a no-op
    out.retain(|m| m != f);
    out
}

fn is_translate(orig: &RatFunc, mutated: &RatFunc) -> bool {
    // y(t) -> y(±t + c), for polynomial witnesses
    if !orig.is_polynomial() || !mutated.is_polynomial() {
        return false;
    }
    let Degree::Finite(d) = orig.num().degree() else { return false };
    if d == 0 || mutated.num().degree() != orig.num().degree() {
        return false;
    }
    let (a, m) = (orig.num(), mutated.num());
    [Rat::one(), -Rat::one()].into_iter().any(|s| {
        let sign = if (d - 1) % 2 == 0 { Rat::one() } else { s.clone() };
        let c = (m.coeff(d - 1) * &sign - a.coeff(d - 1)) / (Rat::from_integer(d.into()) * a.lc());
        &a.compose(&Poly::new(orig.variable(), vec![c, s])) == m
    })
}

fn is_rescale(orig: &RatFunc, mutated: &RatFunc) -> bool {
    // y(v) -> y(c v) or y(c / v), for Laurent-polynomial witnesses
    let v = RatFunc::var(orig.variable());
    candidate_scales(orig, mutated).into_iter().any(|c| {
        let args = [v.scale(&c), v.inv().expect("nonzero").scale(&c)];
        args.iter().any(|arg| orig.compose(arg).ok().as_ref() == Some(mutated))
    })
}

fn candidate_scales(orig: &RatFunc, mutated: &RatFunc) -> Vec<Rat> {
    let mut out = Vec::new();
    for (a, b) in orig.num().coeffs().iter().zip(mutated.num().coeffs()) {
        if !a.is_zero() && !b.is_zero() && a != b {
            let r = b / a;
            out.push(r.clone());
            out.push(Rat::one() / r);
        }
    }
    out
}

fn tower_passes(p: &Poly, w: &TowerWitness) -> bool {
    verify_square_witness(p, w).is_ok_and(|r| r.passed)
}

/// Witness round trip: emitted witnesses verify; every single-coefficient
/// mutation fails, except mutations that realize a symmetry of the
/// identity being checked (`z + c` on the antiderivative branch, `c z` on
/// the log-derivative branch, `t -> ±t + c`, `v -> c v^(±1)`) or collapse the
/// witness to a constant root of `P`.
pub fn witness_mutation(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let (mut checked, mut mutated_total, mut symmetric) = (0, 0, 0);
    while checked < cases {
        if rng.gen_bool(0.5) {
            let r = rand_autonomous_r(&mut rng);
            let v = decide_autonomous(&r).map_err(|e| e.to_string())?;
            let (Some(branch), Some(w)) = (v.branch, v.witness) else { continue };
            let size = |p: &Poly| p.degree().finite().unwrap_or(0);
            if size(w.z.num()) + size(w.z.den()) > 16 {
                continue;
            }
            let ok = verify_autonomous_witness(&r, branch, &w.z, w.a.as_ref()).map_err(|e| e.to_string())?;
            if !ok.passed {
                return Err(format!("emitted witness {} for R = {r} fails", w.z));
            }
            for m in mutations(&mut rng, &w.z) {
                mutated_total += 1;
                let report = verify_autonomous_witness(&r, branch, &m, w.a.as_ref()).map_err(|e| e.to_string())?;
                if report.passed {
                    let ratio = m.checked_div(&w.z).ok();
                    let allowed = match branch {
                        Branch::Antiderivative => (&m - &w.z).is_constant(),
                        Branch::LogDerivative => ratio.is_some_and(|q| q.is_constant()),
                    };
                    if !allowed {
                        return Err(format!("mutated witness {m} of {} verifies for R = {r}", w.z));
                    }
                    symmetric += 1;
                }
            }
            if let Some(a) = &w.a {
                let other = a + nonzero_rat(&mut rng, 5);
                if !other.is_zero()
                    && verify_autonomous_witness(&r, branch, &w.z, Some(&other)).is_ok_and(|rep| rep.passed)
                {
                    return Err(format!("constant {other} in place of {a} verifies for R = {r}"));
                }
            }
        } else {
            let p = nonzero_poly(&mut rng, Var::Y, 2, 6);
            let v = decide_square(&p).map_err(|e| e.to_string())?;
            let w = v.witness.ok_or_else(|| format!("no witness for {p}"))?;
            if !tower_passes(&p, &w) {
                return Err(format!("emitted witness {} for {p} fails", w.expression));
            }
            let exponential = matches!(w.generators[0].kind, GeneratorKind::Exponential { .. });
            let parts = [(&w.expression.rational, true), (&w.expression.lambda, false)];
            for (part, is_rational) in parts {
                for m in mutations(&mut rng, part) {
                    mutated_total += 1;
                    let expression = if is_rational {
                        TowerExpr { rational: m.clone(), lambda: w.expression.lambda.clone() }
                    } else {
                        TowerExpr { rational: w.expression.rational.clone(), lambda: m.clone() }
                    };
                    let mw = TowerWitness { expression, ..w.clone() };
                    if tower_passes(&p, &mw) {
                        // constant P: every y + k is again a solution
                        let shifted = p.is_constant() && (&m - part).is_constant();
                        // a constant root of P is a trivial solution
                        let equilibrium = mw.expression.rational.is_constant() && mw.expression.lambda.is_constant();
                        let allowed = shifted
                            || equilibrium
                            || if exponential { is_rescale(part, &m) } else { is_translate(part, &m) };
                        if !allowed {
                            return Err(format!("mutated witness {} for {p} verifies", mw.expression));
                        }
                        symmetric += 1;
                    }
                }
            }
        }
        checked += 1;
    }
    if symmetric * 4 > mutated_total {
        return Err(format!("{symmetric} of {mutated_total} mutations verified"));
    }
    Ok(checked)
}

pub fn square_soundness(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let p = if rng.gen_bool(0.5) {
            let deg = rng.gen_range(3..=5);
            squarefree_poly(&mut rng, Var::Y, deg)
        } else {
            nonzero_poly(&mut rng, Var::Y, 5, 5)
        };
        let v = decide_square(&p).map_err(|e| format!("{p}: {e}"))?;
        match v.status {
            SquareStatus::NotLiouvillian => {
                if p.degree() < Degree::Finite(3) || !is_squarefree(&p) {
                    return Err(format!("not_liouvillian outside the criterion for {p}"));
                }
            }
            SquareStatus::Liouvillian => {
                let w = v.witness.ok_or_else(|| format!("missing witness for {p}"))?;
                if !tower_passes(&p, &w) {
                    return Err(format!("witness for {p} fails"));
                }
            }
            SquareStatus::Inapplicable => {
                if is_squarefree(&p) || p.degree() < Degree::Finite(3) {
                    return Err(format!("inapplicable for {p}"));
                }
            }
        }
    }
    Ok(cases)
}

/// Coefficient in `Q(x)` that is a derivative about half the time.
fn rand_abel_coeff(rng: &mut impl Rng) -> RatFunc {
    let mut f = rand_ratfunc(rng, Var::X).diff();
    if rng.gen_bool(0.6) {
        f = &f + &split_proper(rng, Var::X, 2).0;
    }
    f
}

pub fn abel_monotonicity(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let mut positive = 0;
    for _ in 0..cases {
        let base = vec![RatFunc::zero(Var::X), rand_abel_coeff(&mut rng), rand_abel_coeff(&mut rng)];
        let v = decide_abel(&base).map_err(|e| e.to_string())?;
        if v.status != AbelStatus::AlgebraicOnly {
            continue;
        }
        positive += 1;
        let mut longer = base.clone();
        for _ in 0..rng.gen_range(1..=3) {
            longer.push(rand_ratfunc(&mut rng, Var::X));
        }
        let w = decide_abel(&longer).map_err(|e| e.to_string())?;
        if w.status != AbelStatus::AlgebraicOnly {
            return Err(format!("{:?} lost algebraic_only after appending coefficients", base));
        }
    }
    if positive < cases / 10 {
        return Err(format!("only {positive} algebraic_only bases"));
    }
    Ok(cases)
}

pub fn parser_round_trip(cases: usize, seed: u64) -> SuiteResult {
    let mut rng = rng(seed);
    let ops = ["+", "-", "*", "/"];
    for _ in 0..cases {
        let f = rand_ratfunc(&mut rng, Var::Y);
        let text = f.to_string();
        let back = parse_ratfunc(&text, Var::Y).map_err(|e| format!("{text}: {e}"))?;
        if back != f || back.to_string() != text {
            return Err(format!("round trip of {text} gave {back}"));
        }
        // random well-formed expression: parsing is deterministic
        let mut s = format!("{}", rng.gen_range(1..9));
        for _ in 0..rng.gen_range(1..5) {
            let atom = if rng.gen_bool(0.5) { "y".to_string() } else { format!("({}*y^{} + 1)", rng.gen_range(1..5), rng.gen_range(0..3)) };
            s = format!("{s} {} {atom}", ops.choose(&mut rng).expect("nonempty"));
        }
        let (a, b) = (parse_ratfunc(&s, Var::Y), parse_ratfunc(&s, Var::Y));
        if a != b || a.as_ref().map(ToString::to_string).ok() != b.as_ref().map(ToString::to_string).ok() {
            return Err(format!("nondeterministic parse of {s}"));
        }
    }
    Ok(cases)
}
