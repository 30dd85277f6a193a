//! Real-root counting by Sturm sequences over ℤ.
//!
//! The chain is built from pseudo-remainders with the content divided out
//! at every step, which keeps coefficient growth in check on the large
//! Betti-number polynomials. Signs are corrected so that each member is a
//! positive multiple of the classical `-rem(s_(i-1), s_i)`.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::{intpoly, Poly};

/// `p / gcd(p, p')`, normalized to a primitive integer polynomial with
/// positive leading coefficient.
pub fn square_free_part(p: &Poly) -> Poly {
    if p.is_constant() {
        return p.clone();
    }
    let (v, _) = p.integer_form();
    let dv = derivative(&v);
    let g = intpoly::gcd(&v, &dv);
    let q = if g.len() <= 1 {
        intpoly::primitive(v)
    } else {
        let quotient = Poly::from_integer_form(v, &BigInt::one())
            .div_exact(&Poly::from_integer_form(g, &BigInt::one()))
            .expect("gcd divides");
        intpoly::primitive(quotient.integer_form().0)
    };
    Poly::from_integer_form(q, &BigInt::one())
}

fn derivative(v: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    intpoly::trim(&mut out);
    out
}

fn chain(v: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let first = intpoly::strip_content(v);
    let second = intpoly::strip_content(derivative(&first));
    let mut seq = vec![first];
    if second.is_empty() {
        return seq;
    }
    seq.push(second);
    // Subresultant divisors: g = |lc| of the previous divisor polynomial,
    // h = |g^δ / h^(δ-1)|, both carried as magnitudes.
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let n = seq.len();
        let (f, s) = (&seq[n - 2], &seq[n - 1]);
        let ds = s.len() - 1;
        let delta = f.len() - 1 - ds;
        let mut r = intpoly::prem(f, s);
        if r.is_empty() {
            break;
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        if !divisor.is_one() {
            for c in &mut r {
                *c /= &divisor;
            }
        }
        // prem = lc(s)^(δ+1) * rem; keep a positive multiple of -rem.
        if !intpoly::power_is_negative(&s[ds], (delta + 1) as u32) {
            for c in &mut r {
                *c = -&*c;
            }
        }
        g = s[ds].abs();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
        seq.push(r);
    }
    seq
}

/// The Sturm chain of `p` as integer polynomials, each a positive multiple
/// of the classical member. For non-square-free `p` the chain ends in a
/// multiple of `gcd(p, p')`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    if p.is_zero() {
        return Vec::new();
    }
    chain(p.integer_form().0)
        .into_iter()
        .map(|v| Poly::from_integer_form(v, &BigInt::one()))
        .collect()
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut count = 0;
    let mut last = Sign::NoSign;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_neg_infinity(v: &[BigInt]) -> Sign {
    let lc = v.last().expect("nonzero").sign();
    if (v.len() - 1) % 2 == 1 {
        -lc
    } else {
        lc
    }
}

fn distinct_real_roots(seq: &[Vec<BigInt>]) -> usize {
    let at_pos = variations(seq.iter().map(|v| v.last().expect("nonzero").sign()));
    let at_neg = variations(seq.iter().map(|v| sign_at_neg_infinity(v)));
    at_neg - at_pos
}

/// Number of distinct real roots of `p` (constants: zero).
pub fn real_root_count(p: &Poly) -> usize {
    if p.is_constant() {
        return 0;
    }
    distinct_real_roots(&chain(p.integer_form().0))
}

/// True iff every complex root of `p` is real. Constants are vacuously
/// real-rooted; the zero polynomial is not.
///
/// One chain serves both counts: its last member has the degree of
/// `gcd(p, p')`, so `deg p - deg last` is the number of distinct roots.
/// Palindromic inputs are first folded to half degree, see
/// [`fold_palindromic`].
pub fn is_real_rooted(p: &Poly) -> bool {
    if p.is_zero() {
        return false;
    }
    let (v, _) = p.integer_form();
    let zeros = v.iter().take_while(|c| c.is_zero()).count();
    let v = v[zeros..].to_vec();
    if v.len() <= 1 {
        return true;
    }
    if is_symmetric(&v) {
        return palindromic_real_rooted(v);
    }
    let seq = chain(v);
    distinct_real_roots(&seq) == square_free_degree(&seq)
}

fn square_free_degree(seq: &[Vec<BigInt>]) -> usize {
    let deg = seq[0].len() - 1;
    let gcd_deg = seq.last().expect("nonempty").len() - 1;
    deg - gcd_deg
}

fn is_symmetric(v: &[BigInt]) -> bool {
    v.iter().eq(v.iter().rev())
}

fn eval_int(v: &[BigInt], at: i64) -> BigInt {
    let at = BigInt::from(at);
    v.iter().rev().fold(BigInt::zero(), |acc, c| acc * &at + c)
}

/// Quotient of `v` by `x - root`; the division must be exact.
fn deflate(v: &[BigInt], root: i64) -> Vec<BigInt> {
    let root = BigInt::from(root);
    let d = v.len() - 1;
    let mut q = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for k in (1..=d).rev() {
        carry = &v[k] + &root * carry;
        q[k - 1] = carry.clone();
    }
    debug_assert!((&v[0] + &root * carry).is_zero(), "inexact deflation");
    q
}

/// For `q` palindromic of degree `2m`, the degree-`m` polynomial `R` with
/// `q(x) = x^m R(x + 1/x)`, built from `x^k + x^(-k) = D_k(x + 1/x)` where
/// `D_0 = 2`, `D_1 = y`, `D_k = y D_(k-1) - D_(k-2)`.
///
/// A root `y` of `R` gives two roots of `q` with `x + 1/x = y`; they are
/// real exactly when `|y| ≥ 2`.
pub fn fold_palindromic(q: &Poly) -> Option<Poly> {
    let (v, _) = q.integer_form();
    if v.is_empty() || (v.len() - 1) % 2 == 1 || !is_symmetric(&v) {
        return None;
    }
    Some(Poly::from_integer_form(fold(&v), &BigInt::one()))
}

fn fold(v: &[BigInt]) -> Vec<BigInt> {
    let m = (v.len() - 1) / 2;
    let mut out = vec![BigInt::zero(); m + 1];
    out[0] = v[m].clone();
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for k in 1..=m {
        for (i, c) in cur.iter().enumerate() {
            out[i] += &v[m + k] * c;
        }
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    intpoly::trim(&mut out);
    out
}

fn palindromic_real_rooted(mut v: Vec<BigInt>) -> bool {
    if (v.len() - 1) % 2 == 1 {
        // odd palindromic: q(-1) = 0
        v = deflate(&v, -1);
    }
    let mut r = fold(&v);
    // y = ±2 are real roots, coming from the real roots x = ±1.
    for root in [2, -2] {
        while r.len() > 1 && eval_int(&r, root).is_zero() {
            r = deflate(&r, root);
        }
    }
    if r.len() <= 1 {
        return true;
    }
    let seq = chain(r);
    if distinct_real_roots(&seq) != square_free_degree(&seq) {
        return false;
    }
    let at = |x: i64| variations(seq.iter().map(|m| eval_int(m, x).sign()));
    at(-2) == at(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c.iter().copied())
    }

    #[test]
    fn quadratics_by_discriminant() {
        assert!(is_real_rooted(&p(&[1, 8, 1])));
        assert!(!is_real_rooted(&p(&[1, 1, 1])));
        assert_eq!(real_root_count(&p(&[1, 8, 1])), 2);
        assert_eq!(real_root_count(&p(&[1, 1, 1])), 0);
    }

    #[test]
    fn repeated_roots() {
        // (x+1)^3 (x-2)^2
        let q = &Poly::one_plus_x_pow(3) * &p(&[-2, 1]).pow(2);
        assert!(is_real_rooted(&q));
        assert_eq!(real_root_count(&q), 2);
        assert_eq!(square_free_part(&q), p(&[-2, -1, 1]));
        // (x^2+1)^2 has no real roots
        assert!(!is_real_rooted(&p(&[1, 0, 1]).pow(2)));
    }

    #[test]
    fn linear_and_constant() {
        assert!(is_real_rooted(&p(&[1, 1])));
        assert!(is_real_rooted(&p(&[7])));
        assert!(!is_real_rooted(&Poly::zero()));
    }

    #[test]
    fn cubic_with_one_real_root() {
        // x^3 - 2 has one real root
        assert_eq!(real_root_count(&p(&[-2, 0, 0, 1])), 1);
        assert!(!is_real_rooted(&p(&[-2, 0, 0, 1])));
        // x^3 - x has three
        assert_eq!(real_root_count(&p(&[0, -1, 0, 1])), 3);
    }

    #[test]
    fn palindromic_folding() {
        // x^2 + 8x + 1 -> y + 8
        assert_eq!(fold_palindromic(&p(&[1, 8, 1])), Some(p(&[8, 1])));
        assert_eq!(fold_palindromic(&p(&[1, 2])), None);
        assert!(!is_real_rooted(&p(&[1, 1, 1])));
        assert!(is_real_rooted(&p(&[1, 2, 1])));
        assert!(is_real_rooted(&p(&[1, 35, 35, 1])));
        // (x^2+1)^2 folds to y^2 with a double root inside (-2, 2)
        assert!(!is_real_rooted(&p(&[1, 0, 2, 0, 1])));
        // (x-1)^2 (x+1)^2 hits y = 2 and y = -2
        assert!(is_real_rooted(&p(&[1, 0, -2, 0, 1])));
        assert!(is_real_rooted(&p(&[0, 0, 1, 8, 1])));
        // two real roots and two on the unit circle
        let mixed = &p(&[1, 3, 1]) * &p(&[1, 1, 1]);
        assert!(!is_real_rooted(&mixed));
    }

    #[test]
    fn chain_ends_in_constant_for_square_free_input() {
        let seq = sturm_sequence(&p(&[1, 35, 35, 1]));
        assert!(seq.last().unwrap().is_constant());
    }
}
