//! Exact residual checks of the functional, differential and compositional
//! identities satisfied by the generating functions
//! `A(t) = Σ A_n tⁿ/n!` and `B(t) = Σ B_n tⁿ/(2ⁿ n!)`.
//!
//! Every check builds its series from an [`Inputs`] value, so a corrupted
//! table can be fed in to confirm that the harness notices.

use std::fmt;

use serde::Serialize;

use crate::arith::{ratio, Poly, RatFunc};
use crate::comb::EnumerationLimits;
use crate::moduli::{
    chow_sum_value, compute_a_keel, compute_a_manin, compute_a_stirling, compute_b_bell_iterative,
    compute_b_oracle_table, compute_b_quadratic, compute_b_series, OracleMode,
};
use crate::series::{Egf, SeriesError, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one identity check. `status` is `Pass` exactly when
/// `residual_nonzero_at` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub order: usize,
    pub residual_nonzero_at: Option<usize>,
    /// The first nonzero residual coefficient, or the error that stopped
    /// the check.
    pub offending: Option<String>,
    pub status: Status,
}

impl IdentityCheck {
    fn pass(name: &str, order: usize) -> Self {
        Self {
            name: name.to_owned(),
            order,
            residual_nonzero_at: None,
            offending: None,
            status: Status::Pass,
        }
    }

    fn fail(name: &str, order: usize, at: usize, offending: String) -> Self {
        Self {
            name: name.to_owned(),
            order,
            residual_nonzero_at: Some(at),
            offending: Some(offending),
            status: Status::Fail,
        }
    }

    fn from_residual(name: &str, order: usize, residual: &Egf) -> Self {
        match residual.first_nonzero() {
            None => Self::pass(name, order),
            Some(n) => Self::fail(name, order, n, residual.coeff(n).to_string()),
        }
    }

    fn from_result(name: &str, order: usize, r: Result<Egf, SeriesError>) -> Self {
        match r {
            Ok(residual) => Self::from_residual(name, order, &residual),
            Err(e) => Self::fail(name, order, 0, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The tables `A_0 … A_N` and `B_0 … B_N` the identities are checked on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inputs {
    pub a: Vec<Poly>,
    pub b: Vec<Poly>,
}

/// Which table a corruption touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    A,
    B,
}

impl Inputs {
    /// Keel's recursion for `A`, the quadratic recursion for `B`.
    pub fn compute(order: usize) -> Self {
        Self {
            a: compute_a_keel(order).into_polys(),
            b: compute_b_quadratic(order).into_polys(),
        }
    }

    pub fn order(&self) -> usize {
        self.a.len().min(self.b.len()) - 1
    }

    /// A copy with `1` added to the constant term of `A_n` or `B_n`.
    pub fn corrupt(&self, table: Table, n: usize) -> Self {
        let mut out = self.clone();
        let target = match table {
            Table::A => &mut out.a[n],
            Table::B => &mut out.b[n],
        };
        *target += &Poly::one();
        out
    }

    fn a_series(&self, order: usize) -> Egf {
        Egf::from_polys(Weight::A, self.a[..=order].iter().cloned())
    }

    /// `B` in weight 1, i.e. the same function of `t` as the weight-2 table.
    fn b_series(&self, order: usize) -> Egf {
        Egf::from_polys(Weight::B, self.b[..=order].iter().cloned()).reweight(Weight::A)
    }
}

/// The identities of the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `A^x - x²A = 1 - x² + (1-x)xt`
    ManinFunctional,
    /// `A = (1 + x + xt - xA) ∂A`
    ManinDifferential,
    /// `B = (1-x) / (A^((x-1)/2) - x)`
    AbRationalForm,
    /// `B = (A^((x+1)/2) + xA) / (1 + x + xt)`
    AbSecondForm,
    /// `(B(1+x+xt) - xA)² = x²A² + A(1-x)(1+x+xt)`
    AbSquareRootForm,
    /// `(1+x+xt)B² - 2xAB + (x-1)A = 0`
    AbQuadratic,
    /// `A = (1+x+xt)B² / (1 - x + 2xB)`
    AbAFromB,
    /// `(B²(1+x+xt) / (1-x+2xB))^((x-1)/2) = (1-x)/B + x`
    BFunctional,
    /// `2 ∂B (1 + x + xt - xA) = B - xB + xB²`, `B(0) = 1`
    BDifferential,
    /// `A(Y) = 1 + t` with `Y = t - ((1+t)^x - 1 - xt)/(x(x-1))`
    GetzlerA,
    /// `B(Y) = (x-1) / (x - (1+t)^((x-1)/2))`
    GetzlerBFirst,
    /// `Φ(B(t)) = t` for
    /// `Φ(s) = (1/x)((1-x+2xs)/s² ((1-x)/s + x)^(2/(x-1)) - 1 - x)`
    GetzlerBSecond,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::ManinFunctional,
        Identity::ManinDifferential,
        Identity::AbRationalForm,
        Identity::AbSecondForm,
        Identity::AbSquareRootForm,
        Identity::AbQuadratic,
        Identity::AbAFromB,
        Identity::BFunctional,
        Identity::BDifferential,
        Identity::GetzlerA,
        Identity::GetzlerBFirst,
        Identity::GetzlerBSecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ManinFunctional => "manin_functional",
            Identity::ManinDifferential => "manin_differential",
            Identity::AbRationalForm => "ab_rational_form",
            Identity::AbSecondForm => "ab_second_form",
            Identity::AbSquareRootForm => "ab_square_root_form",
            Identity::AbQuadratic => "ab_quadratic",
            Identity::AbAFromB => "ab_a_from_b",
            Identity::BFunctional => "b_functional",
            Identity::BDifferential => "b_differential",
            Identity::GetzlerA => "getzler_a",
            Identity::GetzlerBFirst => "getzler_b_first",
            Identity::GetzlerBSecond => "getzler_b_second",
        }
    }

    /// The tables the identity reads.
    pub fn tables(self) -> &'static [Table] {
        match self {
            Identity::ManinFunctional | Identity::ManinDifferential | Identity::GetzlerA => {
                &[Table::A]
            }
            Identity::BFunctional | Identity::GetzlerBFirst | Identity::GetzlerBSecond => {
                &[Table::B]
            }
            _ => &[Table::A, Table::B],
        }
    }

    pub fn check(self, inputs: &Inputs, order: usize) -> IdentityCheck {
        let name = self.name();
        match self {
            Identity::ManinDifferential | Identity::BDifferential if order == 0 => {
                IdentityCheck::pass(name, 0)
            }
            _ => IdentityCheck::from_result(name, order, self.residual(inputs, order)),
        }
    }

    fn residual(self, inputs: &Inputs, order: usize) -> Result<Egf, SeriesError> {
        let k = Kit::new(order);
        match self {
            Identity::ManinFunctional => {
                let a = inputs.a_series(order);
                let lhs = a.pow(&k.x)?.sub(&a.scale(&k.x.mul(&k.x)))?;
                let one_minus_x = RatFunc::one().sub(&k.x);
                let rhs = k
                    .constant(one_minus_x.mul(&k.one_plus_x))
                    .add(&k.t.scale(&one_minus_x.mul(&k.x)))?;
                lhs.sub(&rhs)
            }
            Identity::ManinDifferential => {
                let a = inputs.a_series(order);
                let da = a.derivative()?;
                let a = a.truncate(order - 1);
                let kk = Kit::new(order - 1);
                let factor = kk.l.sub(&a.scale(&kk.x))?;
                a.sub(&factor.mul(&da)?)
            }
            Identity::AbRationalForm => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                let p = a.pow(&half_shift(-1))?.sub(&k.constant(k.x.clone()))?;
                b.mul(&p)?.sub(&k.constant(RatFunc::one().sub(&k.x)))
            }
            Identity::AbSecondForm => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                let rhs = a.pow(&half_shift(1))?.add(&a.scale(&k.x))?;
                b.mul(&k.l)?.sub(&rhs)
            }
            Identity::AbSquareRootForm => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                let lhs_root = b.mul(&k.l)?.sub(&a.scale(&k.x))?;
                let lhs = lhs_root.mul(&lhs_root)?;
                let x2 = k.x.mul(&k.x);
                let rhs = a
                    .mul(&a)?
                    .scale(&x2)
                    .add(&a.mul(&k.l)?.scale(&RatFunc::one().sub(&k.x)))?;
                lhs.sub(&rhs)
            }
            Identity::AbQuadratic => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                let two_x = k.x.scale(&ratio(2, 1));
                k.l.mul(&b.mul(&b)?)?
                    .sub(&a.mul(&b)?.scale(&two_x))?
                    .add(&a.scale(&k.x.sub(&RatFunc::one())))
            }
            Identity::AbAFromB => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                a.mul(&k.one_minus_x_plus_2xs(&b)?)?
                    .sub(&k.l.mul(&b.mul(&b)?)?)
            }
            Identity::BFunctional => {
                let b = inputs.b_series(order);
                let base = b
                    .mul(&b)?
                    .mul(&k.l)?
                    .mul(&k.one_minus_x_plus_2xs(&b)?.inverse_mul()?)?;
                if !base.coeff(0).is_one() {
                    return Err(SeriesError::BadConstantTerm { expected: "1" });
                }
                let lhs = base.pow(&half_shift(-1))?;
                lhs.sub(&k.one_minus_x_over_s_plus_x(&b)?)
            }
            Identity::BDifferential => {
                let (a, b) = (inputs.a_series(order), inputs.b_series(order));
                if !b.coeff(0).is_one() {
                    return Err(SeriesError::BadConstantTerm { expected: "1" });
                }
                let db = b.derivative()?;
                let (a, b) = (a.truncate(order - 1), b.truncate(order - 1));
                let kk = Kit::new(order - 1);
                let factor = kk.l.sub(&a.scale(&kk.x))?;
                let lhs = db.mul(&factor)?.scale(&RatFunc::constant(ratio(2, 1)));
                let rhs = b
                    .scale(&RatFunc::one().sub(&kk.x))
                    .add(&b.mul(&b)?.scale(&kk.x))?;
                lhs.sub(&rhs)
            }
            Identity::GetzlerA => {
                let y = k.getzler_y()?;
                let one_plus_t = k.constant(RatFunc::one()).add(&k.t)?;
                inputs.a_series(order).compose(&y)?.sub(&one_plus_t)
            }
            Identity::GetzlerBFirst => {
                let y = k.getzler_y()?;
                let lhs = inputs.b_series(order).compose(&y)?;
                let p = k.one_plus_t_pow(&half_shift(-1))?;
                let rhs = k
                    .constant(k.x.clone())
                    .sub(&p)?
                    .inverse_mul()?
                    .scale(&k.x.sub(&RatFunc::one()));
                lhs.sub(&rhs)
            }
            Identity::GetzlerBSecond => {
                let b = inputs.b_series(order);
                let exponent = RatFunc::constant(ratio(2, 1))
                    .div(&k.x.sub(&RatFunc::one()))
                    .expect("x - 1 is nonzero");
                let inner = k.one_minus_x_over_s_plus_x(&b)?;
                if !inner.coeff(0).is_one() {
                    return Err(SeriesError::BadConstantTerm { expected: "1" });
                }
                let powered = inner.pow(&exponent)?;
                let inv_b2 = b.mul(&b)?.inverse_mul()?;
                let phi = k
                    .one_minus_x_plus_2xs(&b)?
                    .mul(&inv_b2)?
                    .mul(&powered)?
                    .sub(&k.constant(k.one_plus_x.clone()))?
                    .scale(&k.x.inv().expect("x is nonzero"));
                phi.sub(&k.t)
            }
        }
    }
}

fn half_shift(c: i64) -> RatFunc {
    RatFunc::from_poly(Poly::from_coeffs(vec![ratio(c, 2), ratio(1, 2)]))
}

/// Weight-1 building blocks at a fixed order.
struct Kit {
    order: usize,
    x: RatFunc,
    one_plus_x: RatFunc,
    t: Egf,
    /// `1 + x + xt`
    l: Egf,
}

impl Kit {
    fn new(order: usize) -> Self {
        let x = RatFunc::x();
        let one_plus_x = RatFunc::from_poly(Poly::from_ints([1, 1]));
        let t = Egf::t(Weight::A, order);
        let l = Egf::constant(Weight::A, order, one_plus_x.clone())
            .add(&t.scale(&x))
            .expect("same shape");
        Self {
            order,
            x,
            one_plus_x,
            t,
            l,
        }
    }

    fn constant(&self, c: RatFunc) -> Egf {
        Egf::constant(Weight::A, self.order, c)
    }

    /// `(1 + t)^e`
    fn one_plus_t_pow(&self, e: &RatFunc) -> Result<Egf, SeriesError> {
        self.constant(RatFunc::one()).add(&self.t)?.pow(e)
    }

    /// `1 - x + 2x s`
    fn one_minus_x_plus_2xs(&self, s: &Egf) -> Result<Egf, SeriesError> {
        self.constant(RatFunc::one().sub(&self.x))
            .add(&s.scale(&self.x.scale(&ratio(2, 1))))
    }

    /// `(1 - x)/s + x`
    fn one_minus_x_over_s_plus_x(&self, s: &Egf) -> Result<Egf, SeriesError> {
        s.inverse_mul()?
            .scale(&RatFunc::one().sub(&self.x))
            .add(&self.constant(self.x.clone()))
    }

    /// `Y = t - ((1+t)^x - 1 - xt) / (x(x-1))`
    fn getzler_y(&self) -> Result<Egf, SeriesError> {
        let x = &self.x;
        let denom = x.mul(&x.sub(&RatFunc::one())).inv().expect("nonzero");
        let inner = self
            .one_plus_t_pow(x)?
            .sub(&self.constant(RatFunc::one()))?
            .sub(&self.t.scale(x))?
            .scale(&denom);
        self.t.sub(&inner)
    }
}

/// The Chow-polynomial sum over the signed partition lattice at `n`,
/// expected to be `-1` at `n = 0` and `0` for `n ≥ 1`.
pub fn check_chow_sum(n: usize, inputs: &Inputs, limits: &EnumerationLimits) -> IdentityCheck {
    let name = format!("chow_sum[{n}]");
    let expected = if n == 0 {
        Poly::from_ints([-1])
    } else {
        Poly::zero()
    };
    match chow_sum_value(n, &inputs.b, &inputs.a, limits) {
        Ok(v) if v == expected => IdentityCheck::pass(&name, n),
        Ok(v) => IdentityCheck::fail(&name, n, n, v.to_string()),
        Err(e) => IdentityCheck::fail(&name, n, n, e.to_string()),
    }
}

fn first_difference(a: &[Poly], b: &[Poly]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(p, q)| p != q)
        .or_else(|| (a.len() != b.len()).then_some(a.len().min(b.len())))
}

fn compare(name: &str, max_n: usize, a: &[Poly], b: &[Poly]) -> IdentityCheck {
    match first_difference(a, b) {
        None => IdentityCheck::pass(name, max_n),
        Some(n) => {
            let shown = |v: &[Poly]| v.get(n).map_or("missing".to_owned(), Poly::to_plain);
            IdentityCheck::fail(name, max_n, n, format!("{} vs {}", shown(a), shown(b)))
        }
    }
}

/// Table agreement across routes: Keel, Manin and Stirling for `A` up to
/// `max_a`; quadratic, Bell-iterative and series extraction for `B` up to
/// `max_b`; the brute-force oracle against the quadratic route up to
/// `oracle_max_n`.
pub fn cross_method_checks(
    max_a: usize,
    max_b: usize,
    oracle_max_n: usize,
    limits: &EnumerationLimits,
) -> Vec<IdentityCheck> {
    let keel = compute_a_keel(max_a);
    let quadratic = compute_b_quadratic(max_b);
    let mut out = vec![
        compare(
            "cross_a[keel=manin]",
            max_a,
            keel.polys(),
            compute_a_manin(max_a).polys(),
        ),
        compare(
            "cross_a[keel=stirling_closed]",
            max_a,
            keel.polys(),
            compute_a_stirling(max_a).polys(),
        ),
        compare(
            "cross_b[quadratic_B=bell_iterative]",
            max_b,
            quadratic.polys(),
            compute_b_bell_iterative(max_b).polys(),
        ),
    ];
    let name = "cross_b[quadratic_B=series_extraction]";
    out.push(match compute_b_series(max_b) {
        Ok(t) => compare(name, max_b, quadratic.polys(), t.polys()),
        Err(e) => IdentityCheck::fail(name, max_b, 0, e.to_string()),
    });
    let oracle_n = oracle_max_n.min(max_b);
    let name = "cross_b[quadratic_B=oracle]";
    out.push(
        match compute_b_oracle_table(oracle_n, OracleMode::SetPartitions, limits) {
            Ok(t) => compare(name, oracle_n, &quadratic.polys()[..=oracle_n], t.polys()),
            Err(e) => IdentityCheck::fail(name, oracle_n, 0, e.to_string()),
        },
    );
    out
}

/// Configuration of [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub order: usize,
    pub oracle_max_n: usize,
    /// Feed the Manin functional check a corrupted `A` table; every other
    /// check sees clean inputs, so exactly one failure is expected.
    pub self_test: bool,
    pub limits: EnumerationLimits,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            order: 25,
            oracle_max_n: 6,
            self_test: false,
            limits: EnumerationLimits::default(),
        }
    }
}

/// Every identity at `config.order`, the Chow sums for `n ≤ oracle_max_n`
/// and the cross-method agreements with both table bounds set to `order`.
pub fn run_all(config: &RunConfig) -> Vec<IdentityCheck> {
    let order = config.order;
    let table_n = order.max(config.oracle_max_n);
    let inputs = Inputs::compute(table_n);
    let mut out: Vec<IdentityCheck> = Identity::ALL
        .iter()
        .map(|id| {
            if config.self_test && *id == Identity::ManinFunctional {
                id.check(&inputs.corrupt(Table::A, order.min(4)), order)
            } else {
                id.check(&inputs, order)
            }
        })
        .collect();
    out.extend((1..=config.oracle_max_n).map(|n| check_chow_sum(n, &inputs, &config.limits)));
    out.extend(cross_method_checks(
        order,
        order,
        config.oracle_max_n,
        &config.limits,
    ));
    out
}

/// One row of [`mutation_sweep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub check: String,
    pub table: &'static str,
    pub index: usize,
    pub detected: bool,
}

/// For every identity and every table it reads, adds 1 to one entry
/// (`A_4` or `B_3`, clamped to `order`) and records whether the check
/// fails. Also corrupts `B_2` for the Chow sum at `chow_n`.
pub fn mutation_sweep(order: usize, chow_n: usize, limits: &EnumerationLimits) -> Vec<Mutation> {
    let inputs = Inputs::compute(order.max(chow_n));
    let mut out = Vec::new();
    for id in Identity::ALL {
        for &table in id.tables() {
            let (label, index) = match table {
                Table::A => ("A", order.min(4)),
                Table::B => ("B", order.min(3)),
            };
            let corrupted = inputs.corrupt(table, index);
            out.push(Mutation {
                check: id.name().to_owned(),
                table: label,
                index,
                detected: !id.check(&corrupted, order).passed(),
            });
        }
    }
    if chow_n >= 2 {
        let corrupted = inputs.corrupt(Table::B, 2);
        out.push(Mutation {
            check: format!("chow_sum[{chow_n}]"),
            table: "B",
            index: 2,
            detected: !check_chow_sum(chow_n, &corrupted, limits).passed(),
        });
    }
    out
}
