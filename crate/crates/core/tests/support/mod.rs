//! Randomized properties of the series and polynomial toolkit, shared by
//! the `proptests` and `acceptance` targets.

#![allow(dead_code)]

use moduli_core::arith::{
    gamma_decompose, is_real_rooted, ratio, real_root_count, Poly, RatFunc, Rational,
};
use moduli_core::comb::bell_reciprocal;
use moduli_core::series::{Egf, Weight};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// `(a + b x) / d` with small integers.
pub fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i64..=2, 1i64..=3)
        .prop_map(|(a, b, d)| RatFunc::from_poly(Poly::from_coeffs(vec![ratio(a, d), ratio(b, d)])))
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    small_ratfunc().prop_filter("nonzero", |c| !c.is_zero())
}

pub fn weight() -> impl Strategy<Value = Weight> {
    prop_oneof![Just(Weight::A), Just(Weight::B)]
}

/// A series of order `0..=max_order` whose constant term is `c0`, or
/// random when `c0` is `None`.
pub fn series(w: Weight, max_order: usize, c0: Option<RatFunc>) -> impl Strategy<Value = Egf> {
    (0..=max_order)
        .prop_flat_map(|order| prop::collection::vec(small_ratfunc(), order + 1))
        .prop_map(move |mut coeffs| {
            if let Some(c) = &c0 {
                coeffs[0] = c.clone();
            }
            Egf::new(w, coeffs)
        })
}

/// Weight-1 series with zero constant term and invertible linear term,
/// order at least 1.
pub fn invertible_inner(max_order: usize) -> impl Strategy<Value = Egf> {
    (1..=max_order)
        .prop_flat_map(|order| {
            (
                nonzero_ratfunc(),
                prop::collection::vec(small_ratfunc(), order - 1),
            )
        })
        .prop_map(|(f1, rest)| {
            let mut coeffs = vec![RatFunc::zero(), f1];
            coeffs.extend(rest);
            Egf::new(Weight::A, coeffs)
        })
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..=max_deg + 1).prop_map(Poly::from_ints)
}

fn eq<T: PartialEq + std::fmt::Debug>(a: T, b: T, what: &str) -> Result<(), TestCaseError> {
    if a == b {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("{what}: {a:?} != {b:?}")))
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn one_like(s: &Egf) -> Egf {
    Egf::one(s.weight(), s.order())
}

/// A named property over a fixed number of random cases.
pub struct Property {
    pub name: &'static str,
    pub run: fn(&mut TestRunner) -> Result<(), String>,
}

macro_rules! property {
    ($name:ident, $strategy:expr, |$arg:pat_param| $body:expr) => {
        fn $name(runner: &mut TestRunner) -> Result<(), String> {
            runner
                .run(&$strategy, |$arg| $body)
                .map_err(|e| e.to_string())
        }
    };
}

property!(
    exp_log_round_trip,
    (weight(), 0usize..=8).prop_flat_map(|(w, k)| series(w, k, Some(RatFunc::zero()))),
    |a| {
        let e = ok(a.exp())?;
        eq(ok(e.log())?, a, "log(exp(a))")
    }
);

property!(
    log_exp_round_trip,
    (weight(), 0usize..=8).prop_flat_map(|(w, k)| series(w, k, Some(RatFunc::one()))),
    |b| {
        let l = ok(b.log())?;
        eq(ok(l.exp())?, b, "exp(log(b))")
    }
);

property!(
    exponent_additivity,
    (
        (weight(), 0usize..=6).prop_flat_map(|(w, k)| series(w, k, Some(RatFunc::one()))),
        small_ratfunc(),
        small_ratfunc()
    ),
    |(b, e1, e2)| {
        let lhs = ok(ok(b.pow(&e1))?.mul(&ok(b.pow(&e2))?))?;
        eq(lhs, ok(b.pow(&e1.add(&e2)))?, "b^e1 b^e2 = b^(e1+e2)")?;
        eq(ok(b.pow(&RatFunc::one()))?, b.clone(), "b^1")?;
        eq(
            ok(b.pow(&RatFunc::constant(ratio(2, 1))))?,
            ok(b.mul(&b))?,
            "b^2",
        )
    }
);

property!(compositional_inverse_identity, invertible_inner(7), |f| {
    let g = ok(f.compositional_inverse())?;
    let t = Egf::t(Weight::A, f.order());
    eq(ok(f.compose(&g))?, t.clone(), "f(g(t))")?;
    eq(ok(g.compose(&f))?, t, "g(f(t))")?;
    eq(ok(f.lagrange_inverse_bell())?, g, "Lagrange form")
});

property!(
    reciprocal_bell_vs_convolution,
    (0usize..=8)
        .prop_flat_map(|k| (nonzero_ratfunc(), series(Weight::A, k, None)))
        .prop_map(|(c0, s)| {
            let mut coeffs = s.into_coeffs();
            coeffs[0] = c0;
            Egf::new(Weight::A, coeffs)
        }),
    |f| {
        let direct = ok(f.inverse_mul())?;
        eq(ok(f.mul(&direct))?, one_like(&f), "f (1/f)")?;
        let bell = ok(bell_reciprocal(f.coeffs()))?;
        eq(bell.as_slice(), direct.coeffs(), "Bell reciprocal")
    }
);

property!(
    compose_bell_vs_horner,
    (weight(), 0usize..=6, 1usize..=6)
        .prop_flat_map(|(w, k, j)| (series(w, k, None), invertible_inner(j))),
    |(g, f)| {
        let order = g.order().min(f.order());
        let (g, f) = (g.truncate(order), f.truncate(order));
        eq(ok(g.compose(&f))?, ok(g.compose_horner(&f))?, "compose")
    }
);

property!(
    ring_laws,
    (weight(), 0usize..=6)
        .prop_flat_map(|(w, k)| (series(w, k, None), series(w, k, None), series(w, k, None)))
        .prop_map(|(a, b, c)| {
            let o = a.order().min(b.order()).min(c.order());
            (a.truncate(o), b.truncate(o), c.truncate(o))
        }),
    |(a, b, c)| {
        eq(ok(a.mul(&b))?, ok(b.mul(&a))?, "ab = ba")?;
        eq(
            ok(ok(a.mul(&b))?.mul(&c))?,
            ok(a.mul(&ok(b.mul(&c))?))?,
            "(ab)c = a(bc)",
        )?;
        eq(
            ok(a.mul(&ok(b.add(&c))?))?,
            ok(ok(a.mul(&b))?.add(&ok(a.mul(&c))?))?,
            "a(b+c)",
        )?;
        if a.order() >= 1 {
            let lhs = ok(ok(a.mul(&b))?.derivative())?;
            let (da, db) = (ok(a.derivative())?, ok(b.derivative())?);
            let o = a.order() - 1;
            let rhs = ok(ok(da.mul(&b.truncate(o)))?.add(&ok(a.truncate(o).mul(&db))?))?;
            eq(lhs, rhs, "product rule")?;
        }
        Ok(())
    }
);

property!(
    normalization_round_trips,
    (weight(), 0usize..=8)
        .prop_flat_map(|(w, k)| (series(w, k, None), series(w, k, None)))
        .prop_map(|(a, b)| {
            let o = a.order().min(b.order());
            (a.truncate(o), b.truncate(o))
        }),
    |(a, b)| {
        let other = match a.weight() {
            Weight::A => Weight::B,
            Weight::B => Weight::A,
        };
        eq(
            a.reweight(other).reweight(a.weight()),
            a.clone(),
            "reweight",
        )?;
        eq(
            Egf::from_ordinary(a.weight(), a.to_ordinary()),
            a.clone(),
            "ordinary",
        )?;
        eq(
            ok(a.mul(&b))?.reweight(other),
            ok(a.reweight(other).mul(&b.reweight(other)))?,
            "mul commutes with reweight",
        )
    }
);

property!(
    poly_division,
    (
        small_poly(6),
        small_poly(4).prop_filter("nonzero", |p| !p.is_zero())
    ),
    |(a, b)| {
        let (q, r) = ok(a.div_rem(&b))?;
        eq(&(&q * &b) + &r, a.clone(), "a = qb + r")?;
        if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
            prop_assert!(dr < db);
        }
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(ok(b.div_rem(&g))?.1.is_zero());
        }
        Ok(())
    }
);

property!(
    gamma_round_trip,
    (0usize..=12).prop_flat_map(|d| (Just(d), prop::collection::vec(0i64..50, d / 2 + 1))),
    |(d, gamma)| {
        let mut p = Poly::zero();
        for (i, g) in gamma.iter().enumerate() {
            p += &Poly::one_plus_x_pow(d - 2 * i)
                .shift(i)
                .scale_int(&(*g).into());
        }
        if p.is_zero() {
            return Ok(());
        }
        let dec = ok(gamma_decompose(&p, d))?;
        eq(dec.reassemble(), p, "reassemble")?;
        let back: Vec<Rational> = (0..=d / 2).map(|i| dec.gamma_poly().coeff(i)).collect();
        let want: Vec<Rational> = gamma.iter().map(|&g| ratio(g, 1)).collect();
        eq(back, want, "γ coefficients")
    }
);

property!(
    sturm_counts_distinct_roots,
    (
        prop::collection::vec((-6i64..=6, 1i64..=3), 1..=7),
        prop::collection::vec(1i64..=4, 0..=2)
    ),
    |(roots, quadratics)| {
        let mut p = Poly::one();
        let mut distinct: Vec<Rational> = Vec::new();
        for (n, d) in roots {
            let r = ratio(n, d);
            p = &p * &Poly::linear(-r.clone(), ratio(1, 1));
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        prop_assert!(is_real_rooted(&p));
        for c in &quadratics {
            p = &p * &Poly::from_ints([*c, 0, 1]);
        }
        eq(real_root_count(&p), distinct.len(), "distinct real roots")?;
        eq(is_real_rooted(&p), quadratics.is_empty(), "real-rooted")
    }
);

property!(
    palindromic_folding,
    (
        prop::collection::vec((1i64..=5, 1i64..=5), 1..=5),
        any::<bool>(),
        any::<bool>()
    ),
    |(pairs, odd, spoil)| {
        let mut p = if odd {
            Poly::from_ints([1, 1])
        } else {
            Poly::one()
        };
        for (n, d) in pairs {
            let r = ratio(n, d);
            let factor =
                &Poly::linear(r.clone(), ratio(1, 1)) * &Poly::linear(r.recip(), ratio(1, 1));
            p = &p * &factor;
        }
        if spoil {
            p = &p * &Poly::from_ints([1, 1, 1]);
        }
        prop_assert!(moduli_core::arith::is_palindromic(
            &p.scale(&p.coeff(0).recip()),
            p.degree().unwrap()
        ));
        eq(is_real_rooted(&p), !spoil, "folded verdict")?;
        eq(
            is_real_rooted(&p),
            real_root_count(&p) == moduli_core::arith::square_free_part(&p).degree().unwrap(),
            "matches direct chain",
        )
    }
);

pub const PROPERTIES: &[Property] = &[
    Property {
        name: "exp_log_round_trip",
        run: exp_log_round_trip,
    },
    Property {
        name: "log_exp_round_trip",
        run: log_exp_round_trip,
    },
    Property {
        name: "exponent_additivity",
        run: exponent_additivity,
    },
    Property {
        name: "compositional_inverse_identity",
        run: compositional_inverse_identity,
    },
    Property {
        name: "reciprocal_bell_vs_convolution",
        run: reciprocal_bell_vs_convolution,
    },
    Property {
        name: "compose_bell_vs_horner",
        run: compose_bell_vs_horner,
    },
    Property {
        name: "ring_laws",
        run: ring_laws,
    },
    Property {
        name: "normalization_round_trips",
        run: normalization_round_trips,
    },
    Property {
        name: "poly_division",
        run: poly_division,
    },
    Property {
        name: "gamma_round_trip",
        run: gamma_round_trip,
    },
    Property {
        name: "sturm_counts_distinct_roots",
        run: sturm_counts_distinct_roots,
    },
    Property {
        name: "palindromic_folding",
        run: palindromic_folding,
    },
];

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn run_property(name: &str, cases: u32) -> Result<(), String> {
    let p = PROPERTIES
        .iter()
        .find(|p| p.name == name)
        .unwrap_or_else(|| panic!("no property {name}"));
    (p.run)(&mut runner(cases))
}
