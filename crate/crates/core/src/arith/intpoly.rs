//! Helpers on integer coefficient vectors (ascending degree, no trailing
//! zeros). Used by the fast multiplication path, the gcd and Sturm chains.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[BigInt]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the (positive) content, preserving the sign pattern.
pub(crate) fn strip_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&v);
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut v = strip_content(v);
    if v.last().is_some_and(|c| c.sign() == Sign::Minus) {
        for c in &mut v {
            *c = -&*c;
        }
    }
    v
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder `lc(g)^(deg f - deg g + 1) * f mod g`.
///
/// `g` must be nonzero. Returns `f` unchanged when `deg f < deg g`.
pub(crate) fn prem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = degree(g).expect("pseudo-division by zero polynomial");
    let mut r = f.to_vec();
    let Some(df) = degree(&r) else {
        return r;
    };
    if df < dg {
        return r;
    }
    let lc = g[dg].clone();
    let mut steps = 0u32;
    let delta = (df - dg) as u32;
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let lead = r[dr].clone();
        let shift = dr - dg;
        for c in &mut r {
            *c *= &lc;
        }
        for (j, gc) in g.iter().enumerate() {
            r[shift + j] -= &lead * gc;
        }
        trim(&mut r);
        steps += 1;
    }
    let missing = delta + 1 - steps;
    if missing > 0 {
        let factor = num_traits::pow(lc, missing as usize);
        for c in &mut r {
            *c *= &factor;
        }
    }
    r
}

/// Sign of `lc^k`, used to keep Sturm remainders sign-correct.
pub(crate) fn power_is_negative(lc: &BigInt, k: u32) -> bool {
    lc.is_negative() && k % 2 == 1
}

/// Greatest common divisor over ℚ[x], returned as a primitive integer
/// polynomial with positive leading coefficient (empty if both are zero).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut f = primitive(a.to_vec());
    let mut g = primitive(b.to_vec());
    if degree(&f) < degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_empty() {
            return f;
        }
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(prem(&f, &g));
        f = g;
        g = r;
    }
}
