//! Generating functions summed directly over enumerated words, and the
//! residual checks of the last-column functional equations against them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::poly::{mono, Caps, Monomial, SparsePoly, Var};
use super::trunc::{Subst, TruncSeries};
use crate::error::Result;
use crate::word::{self, Limits, MotzkinWord, PolyominoStats};

/// `sum_{1 <= n <= order} sum_{w in M_n} x^n p^sper(w) q^area(w) v^(last(w)-1)`.
pub fn brute_gf(order: usize) -> Result<TruncSeries> {
    brute_series(order, |s| [s.sper as u32, s.area as u32, s.last - 1])
}

/// Same sum with `q` marking interior points and no `p`.
pub fn brute_interior_gf(order: usize) -> Result<TruncSeries> {
    brute_series(order, |s| [0, s.inter as u32, s.last - 1])
}

fn brute_series(order: usize, exps: impl Fn(&PolyominoStats) -> Monomial) -> Result<TruncSeries> {
    let limits = Limits::default();
    let mut coeffs = vec![SparsePoly::zero()];
    for n in 1..=order {
        let words = word::generate_all_with(n, &limits)?;
        coeffs.push(weigh(&words, &exps));
    }
    Ok(TruncSeries::from_coeffs(coeffs))
}

pub(crate) fn weigh(words: &[MotzkinWord], exps: impl Fn(&PolyominoStats) -> Monomial) -> SparsePoly {
    let mut c = SparsePoly::zero();
    for w in words {
        c.add_term(exps(&word::stats(w)), BigRational::one());
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalEquation {
    /// `A(v) = p^2qx + pqx/(1-qv) A(1) + (p^2q^2xv - pqx/(1-qv)) A(qv)`
    LastColumn,
    /// `A(v) = x + x/(1-qv) A(1) + (xv - x/(1-qv)) A(qv)`, `q` marking interior points.
    Interior,
}

impl FunctionalEquation {
    pub fn name(self) -> &'static str {
        match self {
            FunctionalEquation::LastColumn => "last-column",
            FunctionalEquation::Interior => "interior",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub n: usize,
    pub monomial: Monomial,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub equation: FunctionalEquation,
    pub order: usize,
    /// First nonzero residual coefficient, if any.
    pub residual: Option<Residual>,
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.residual.is_none()
    }
}

/// Caps large enough to hold every monomial the check can produce at
/// `order`: `v` up to the word length, `q` up to the statistic's maximum
/// plus the shift from `v <- qv`.
pub fn equation_caps(order: usize) -> Caps {
    let n = order as u32;
    Caps::NONE.with(Var::Q, n * (n + 1) / 2 + n).with(Var::V, n)
}

/// Left side minus right side of the equation, evaluated on `series`.
pub fn functional_equation_residual(eq: FunctionalEquation, series: &TruncSeries) -> Result<TruncSeries> {
    let order = series.order();
    let caps = equation_caps(order);
    let a = series.clone().with_caps(caps);
    let a_one = a.eval_at_one(Var::V);
    let a_qv = a.substitute_scale(Subst::Aux(Var::V), &mono(Var::Q, 1))?;
    let geo = (&SparsePoly::one() - &SparsePoly::int_term(1, [0, 1, 1])).inverse(&caps)?;

    let (base, lin, shift): (SparsePoly, SparsePoly, SparsePoly) = match eq {
        FunctionalEquation::LastColumn => (
            SparsePoly::int_term(1, [2, 1, 0]),
            SparsePoly::int_term(1, [1, 1, 0]),
            SparsePoly::int_term(1, [2, 2, 1]),
        ),
        FunctionalEquation::Interior => (SparsePoly::one(), SparsePoly::one(), SparsePoly::var(Var::V)),
    };
    // every right-hand term carries exactly one factor x
    let lin_geo = lin.mul_capped(&geo, &caps);
    let x_coeff = TruncSeries::monomial(base, 0, order).with_caps(caps);
    let first = a_one.mul_poly(&lin_geo);
    let second = a_qv.mul_poly(&(&shift - &lin_geo));
    let rhs = (&(&x_coeff + &first) + &second).shift_up(1);
    Ok(&a - &rhs)
}

pub fn residual_report(eq: FunctionalEquation, series: &TruncSeries) -> Result<ResidualReport> {
    let residual = functional_equation_residual(eq, series)?;
    let first = residual.coeffs().iter().enumerate().find_map(|(n, c)| {
        c.terms().next().map(|(m, r)| Residual {
            n,
            monomial: *m,
            value: r.to_string(),
        })
    });
    Ok(ResidualReport {
        equation: eq,
        order: series.order(),
        residual: first,
    })
}

/// Checks the named equation against the enumerated generating function.
pub fn check_functional_equation(eq: FunctionalEquation, order: usize) -> Result<ResidualReport> {
    let series = match eq {
        FunctionalEquation::LastColumn => brute_gf(order)?,
        FunctionalEquation::Interior => brute_interior_gf(order)?,
    };
    residual_report(eq, &series)
}

/// Exact integer count of words carrying a given monomial at `x^n`.
pub fn count(series: &TruncSeries, n: usize, m: &Monomial) -> BigInt {
    series.coeff(n).coeff(m).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::gf;

    #[test]
    fn brute_prefix() {
        let b = brute_gf(5).unwrap();
        assert_eq!(count(&b, 5, &[9, 11, 2]), BigInt::from(1)); // 12343
        assert_eq!(count(&b, 1, &[2, 1, 0]), BigInt::from(1));
        let s = b.eval_at_one(Var::Q).eval_at_one(Var::V);
        assert_eq!(s, gf::s_xp(5).unwrap());
    }

    #[test]
    fn brute_specializations_match_closed_forms() {
        let order = 9;
        let b = brute_gf(order).unwrap();
        let u = b.eval_at_one(Var::P).eval_at_one(Var::V);
        assert_eq!(u.first_difference(&gf::u_xq(order).unwrap()), None);
        let apv = b.eval_at_one(Var::Q).with_caps(gf::a_xpv(order).unwrap().caps());
        assert_eq!(apv, gf::a_xpv(order).unwrap());
        let av = b
            .eval_at_one(Var::P)
            .eval_at_one(Var::Q)
            .mul_poly(&SparsePoly::var(Var::V));
        assert_eq!(av.first_difference(&gf::a_xv_lastsymbol(order).unwrap()), None);
        let hi = brute_interior_gf(order).unwrap().eval_at_one(Var::V);
        assert_eq!(hi.first_difference(&gf::h_interior_xq(order).unwrap()), None);
    }

    #[test]
    fn equations_hold() {
        for eq in [FunctionalEquation::LastColumn, FunctionalEquation::Interior] {
            let r = check_functional_equation(eq, 8).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn perturbation_is_caught_where_injected() {
        let mut b = brute_gf(7).unwrap();
        let mut c = b.coeff(6).clone();
        c.add_term([11, 15, 2], BigRational::one());
        b.set_coeff(6, c);
        let r = residual_report(FunctionalEquation::LastColumn, &b).unwrap();
        let res = r.residual.expect("nonzero residual");
        assert_eq!(res.n, 6);
        assert_eq!(res.monomial, [11, 15, 2]);

        let mut h = brute_interior_gf(7).unwrap();
        let mut c = h.coeff(4).clone();
        c.add_term([0, 0, 0], BigRational::one());
        h.set_coeff(4, c);
        assert!(!residual_report(FunctionalEquation::Interior, &h)
            .unwrap()
            .passed());
    }
}
