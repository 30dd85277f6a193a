use crate::arith::{rat, Poly, RatFunc};
use crate::series::{Egf, Weight};

fn product_of_roots(roots: impl Iterator<Item = i64>) -> Poly {
    roots.fold(Poly::one(), |acc, r| &acc * &Poly::from_ints([-r, 1]))
}

/// `χ^B_n(x) = Π_(i=0)^(n-1) (x - (2i+1))`, the characteristic polynomial of
/// the signed partition lattice.
pub fn char_poly_b(n: usize) -> Poly {
    product_of_roots((0..n as i64).map(|i| 2 * i + 1))
}

/// `χ̄^B_n = χ^B_n / (x-1)` for `n ≥ 1`, and `χ̄^B_0 = -1`.
pub fn reduced_char_poly_b(n: usize) -> Poly {
    if n == 0 {
        return Poly::constant(rat(-1));
    }
    product_of_roots((1..n as i64).map(|i| 2 * i + 1))
}

/// `n! [tⁿ]` of `-t + ((1+t)^x - 1 - xt) / (x(x-1))`: zero for `n = 0`,
/// `-1` for `n = 1`, and `(x-2)(x-3)…(x-n+1)` for `n ≥ 2`.
pub fn reduced_char_poly_a(n: usize) -> Poly {
    match n {
        0 => Poly::zero(),
        1 => Poly::constant(rat(-1)),
        _ => product_of_roots(2..n as i64),
    }
}

/// `Σ χ̄^B_n tⁿ / (2ⁿ n!)` up to `order`.
pub fn reduced_char_poly_b_egf(order: usize) -> Egf {
    Egf::new(
        Weight::B,
        (0..=order)
            .map(|n| RatFunc::from_poly(reduced_char_poly_b(n)))
            .collect(),
    )
}

/// `Σ χ̄^A_n tⁿ / n!` up to `order`.
pub fn reduced_char_poly_a_egf(order: usize) -> Egf {
    Egf::new(
        Weight::A,
        (0..=order)
            .map(|n| RatFunc::from_poly(reduced_char_poly_a(n)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn one_plus_t_pow(order: usize, e: &RatFunc) -> Egf {
        Egf::one(Weight::A, order)
            .add(&Egf::t(Weight::A, order))
            .unwrap()
            .pow(e)
            .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(char_poly_b(2), Poly::from_ints([3, -4, 1]));
        assert_eq!(reduced_char_poly_b(2), Poly::from_ints([-3, 1]));
        assert_eq!(reduced_char_poly_b(0), Poly::from_ints([-1]));
        assert_eq!(reduced_char_poly_b(1), Poly::one());
        assert_eq!(reduced_char_poly_a(3), Poly::from_ints([-2, 1]));
    }

    #[test]
    fn reduced_times_x_minus_one() {
        let x_minus_one = Poly::from_ints([-1, 1]);
        for n in 1..=10 {
            assert!(char_poly_b(n).eval(&rat(1)) == rat(0));
            assert_eq!(&reduced_char_poly_b(n) * &x_minus_one, char_poly_b(n));
        }
    }

    #[test]
    fn b_egf_matches_closed_form() {
        let order = 6;
        let half = RatFunc::from_poly(Poly::from_coeffs(vec![ratio(-1, 2), ratio(1, 2)]));
        let x_minus_one = RatFunc::from_poly(Poly::from_ints([-1, 1]));
        let closed = one_plus_t_pow(order, &half)
            .reweight(Weight::B)
            .sub(&Egf::constant(Weight::B, order, RatFunc::x()))
            .unwrap()
            .scale(&x_minus_one.inv().unwrap());
        assert_eq!(closed, reduced_char_poly_b_egf(order));
    }

    #[test]
    fn a_egf_matches_closed_form() {
        let order = 8;
        let x = RatFunc::x();
        let denom = x.mul(&x.sub(&RatFunc::one())).inv().unwrap();
        let mut inner = one_plus_t_pow(order, &x);
        inner = inner
            .sub(&Egf::one(Weight::A, order))
            .unwrap()
            .sub(&Egf::t(Weight::A, order).scale(&x))
            .unwrap()
            .scale(&denom);
        let closed = inner.sub(&Egf::t(Weight::A, order)).unwrap();
        assert_eq!(closed, reduced_char_poly_a_egf(order));
    }
}
