//! Closed-form generating functions, expanded exactly to a given order.
//!
//! Every builder returns the coefficients of `x^0..=x^order`. Divisions by
//! `x` or `x^2` are exact shifts that fail loudly if the numerator does not
//! vanish to the needed order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{mono, Caps, SparsePoly, Var};
use super::trunc::{Subst, TruncSeries};
use crate::error::{Error, Result};

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn x_poly(c: &[i64], order: usize) -> TruncSeries {
    TruncSeries::from_ints(c, order)
}

fn term(c: i64, m: [u32; 3]) -> SparsePoly {
    SparsePoly::int_term(c, m)
}

/// `sqrt(1 - 2x - 3x^2)`.
fn motzkin_radical(order: usize) -> TruncSeries {
    x_poly(&[1, -2, -3], order).sqrt_unit().expect("unit constant")
}

/// `sqrt(1 - 2p^2 x - 4p^3 x^2 + p^4 x^2)`.
fn sper_radical(order: usize) -> TruncSeries {
    let mut r = TruncSeries::one(order);
    if order >= 1 {
        r.set_coeff(1, term(-2, [2, 0, 0]));
    }
    if order >= 2 {
        r.set_coeff(2, &term(1, [4, 0, 0]) - &term(4, [3, 0, 0]));
    }
    r.sqrt_unit().expect("unit constant")
}

/// Motzkin numbers: `M(x) = (1 - x - sqrt(1-2x-3x^2)) / (2x^2)`.
pub fn motzkin_gf(order: usize) -> Result<TruncSeries> {
    let n = order + 2;
    let num = &x_poly(&[1, -1], n) - &motzkin_radical(n);
    Ok(num.div_x_pow(2)?.scalar_mul(&half()))
}

/// Central trinomial coefficients: `1 / sqrt(1-2x-3x^2)`.
pub fn trinomial_gf(order: usize) -> Result<TruncSeries> {
    TruncSeries::div_unit(&TruncSeries::one(order), &motzkin_radical(order))
}

/// Nonempty words by length and semiperimeter:
/// `S(x,p) = (1 - p^2 x - sqrt(1 - 2p^2x - 4p^3x^2 + p^4x^2)) / (2px)`.
pub fn s_xp(order: usize) -> Result<TruncSeries> {
    let n = order + 1;
    let lin = &TruncSeries::one(n) - &TruncSeries::monomial(term(1, [2, 0, 0]), 1, n);
    let num = &lin - &sper_radical(n);
    Ok(num
        .div_x_pow(1)?
        .div_monomial(&mono(Var::P, 1))?
        .scalar_mul(&half()))
}

/// Length, semiperimeter and last letter (as `v^(last-1)`):
/// `(1 + p^2(x - 2vx) - sqrt(..)) / (2(1 + px + p^2v^2x - v(1 + p^2x)))`.
pub fn a_xpv(order: usize) -> Result<TruncSeries> {
    let caps = Caps::NONE.with(Var::V, order as u32);
    let mut num = &TruncSeries::one(order) - &sper_radical(order);
    if order >= 1 {
        num.set_coeff(1, num.coeff(1) + &(&term(1, [2, 0, 0]) - &term(2, [2, 0, 1])));
    }
    let mut den = TruncSeries::constant(&term(2, [0, 0, 0]) - &term(2, [0, 0, 1]), order);
    if order >= 1 {
        let c1 = &(&term(2, [1, 0, 0]) + &term(2, [2, 0, 2])) - &term(2, [2, 0, 1]);
        den.set_coeff(1, c1);
    }
    TruncSeries::div_unit(&num.with_caps(caps), &den.with_caps(caps))
}

/// Length and last letter (as `v^last`):
/// `A(x;1,1;v) v = (xv(1-v) + x^2 v M(x)) / (1 - v + x - vx + v^2 x)`.
pub fn a_xv_lastsymbol(order: usize) -> Result<TruncSeries> {
    let caps = Caps::NONE.with(Var::V, order as u32 + 1);
    let v = SparsePoly::var(Var::V);
    let mut num = motzkin_gf(order)?.shift_up(2).mul_poly(&v);
    if order >= 1 {
        num.set_coeff(1, &v - &term(1, [0, 0, 2]));
    }
    let mut den = TruncSeries::constant(&SparsePoly::one() - &v, order);
    if order >= 1 {
        den.set_coeff(1, &(&SparsePoly::one() - &v) + &term(1, [0, 0, 2]));
    }
    TruncSeries::div_unit(&num.with_caps(caps), &den.with_caps(caps))
}

/// Total of the last letter: `(1 - x - 2x^2 - sqrt(1-2x-3x^2)) / (2x^2)`.
pub fn lastsym_total_gf(order: usize) -> Result<TruncSeries> {
    let n = order + 2;
    let num = &x_poly(&[1, -1, -2], n) - &motzkin_radical(n);
    Ok(num.div_x_pow(2)?.scalar_mul(&half()))
}

/// Total semiperimeter: `(1 + x^2 - (1+x) sqrt(R)) / (2x sqrt(R))`, `R = 1-2x-3x^2`.
pub fn total_sper_gf(order: usize) -> Result<TruncSeries> {
    let n = order + 1;
    let root = motzkin_radical(n);
    let num = &x_poly(&[1, 0, 1], n) - &(&x_poly(&[1, 1], n) * &root);
    Ok(TruncSeries::div_unit(&num, &root)?
        .div_x_pow(1)?
        .scalar_mul(&half()))
}

/// Total area: `(1/(1-3x) - 1/sqrt(1-2x-3x^2)) / 2`.
pub fn total_area_gf(order: usize) -> Result<TruncSeries> {
    let geo = TruncSeries::div_unit(&TruncSeries::one(order), &x_poly(&[1, -3], order))?;
    Ok((&geo - &trinomial_gf(order)?).scalar_mul(&half()))
}

/// Total interior points:
/// `(2 - 3x - 5x^2 - (2 - x - 2x^2) sqrt(R)) / (2x(1+x)(1-3x))`.
pub fn total_inter_gf(order: usize) -> Result<TruncSeries> {
    let n = order + 1;
    let num = &x_poly(&[2, -3, -5], n) - &(&x_poly(&[2, -1, -2], n) * &motzkin_radical(n));
    let den = x_poly(&[1, -2, -3], n);
    Ok(TruncSeries::div_unit(&num, &den)?
        .div_x_pow(1)?
        .scalar_mul(&half()))
}

/// Smallest q-cap that holds every area of a word of length `order`.
pub fn area_cap(order: usize) -> u32 {
    (order * (order + 1) / 2) as u32
}

fn q_pow(e: u32) -> SparsePoly {
    term(1, mono(Var::Q, e))
}

/// `1 / (1 - q^i)` in the capped ring.
fn inv_one_minus_q(i: u32, caps: &Caps) -> SparsePoly {
    (&SparsePoly::one() - &q_pow(i)).inverse(caps).expect("unit")
}

/// `num / den` with `num = sum_j a_j x^j`, `den = 1 - sum_j b_j x^j`.
fn ratio_of_sums(a: Vec<SparsePoly>, b: Vec<SparsePoly>, order: usize, caps: Caps) -> Result<TruncSeries> {
    let mut num = TruncSeries::zero(order).with_caps(caps);
    let mut den = TruncSeries::one(order).with_caps(caps);
    for j in 1..=order {
        num.set_coeff(j, a[j - 1].clone());
        den.set_coeff(j, -&b[j - 1]);
    }
    TruncSeries::div_unit(&num, &den)
}

/// Nonempty words by length and area, from the alternating q-series
/// quotient with `prod_{i<j} (1 - q^i + q^{2i}) / (1 - q^i)`.
pub fn u_xq(order: usize) -> Result<TruncSeries> {
    let caps = Caps::NONE.with(Var::Q, area_cap(order));
    let mut prod = SparsePoly::one();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for j in 1..=order as u32 {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let signed = q_pow(j)
            .mul_capped(&prod, &caps)
            .scale(&BigRational::from_integer(sign.into()));
        b.push(signed.mul_capped(&inv_one_minus_q(j, &caps), &caps));
        a.push(signed);
        let factor = &(&SparsePoly::one() - &q_pow(j)) + &q_pow(2 * j);
        prod = prod
            .mul_capped(&factor, &caps)
            .mul_capped(&inv_one_minus_q(j, &caps), &caps);
    }
    ratio_of_sums(a, b, order, caps)
}

/// Nonempty words by length and interior points, from the q-series quotient
/// with `prod_{i<j} (q^(i-1) - 1/(1 - q^i))`.
pub fn h_interior_xq(order: usize) -> Result<TruncSeries> {
    let caps = Caps::NONE.with(Var::Q, area_cap(order));
    let mut prod = SparsePoly::one();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for j in 1..=order as u32 {
        a.push(prod.clone());
        b.push(prod.mul_capped(&inv_one_minus_q(j, &caps), &caps));
        let factor = &q_pow(j - 1) - &inv_one_minus_q(j, &caps);
        prod = prod.mul_capped(&factor, &caps);
    }
    ratio_of_sums(a, b, order, caps)
}

/// `1 + U(x,q)` from the continued fraction
/// `1 / (1 - qx / E_1)`, `E_k = (1 + q^k x) (1 - q^(k+1) x / E_(k+1))`,
/// cut at depth `order + 1`; level `k` carries a factor `x`, so deeper
/// levels cannot reach `x^order`.
pub fn continued_fraction_xq(order: usize) -> Result<TruncSeries> {
    let depth = order as u32 + 1;
    let level =
        |k: u32| -> TruncSeries { &TruncSeries::one(order) + &TruncSeries::monomial(q_pow(k), 1, order) };
    let mut e = level(depth);
    for k in (1..depth).rev() {
        let tail = TruncSeries::monomial(q_pow(k + 1), 1, order);
        let frac = TruncSeries::div_unit(&tail, &e)?;
        e = &level(k) * &(&TruncSeries::one(order) - &frac);
    }
    let qx = TruncSeries::monomial(q_pow(1), 1, order);
    let inner = TruncSeries::div_unit(&qx, &e)?;
    TruncSeries::div_unit(&TruncSeries::one(order), &(&TruncSeries::one(order) - &inner))
}

/// `B_i(x) = x^i M(x)^i / (1 - x - 2x^2 M(x))`: cells at level `i`.
pub fn b_i_gf(i: usize, order: usize) -> Result<TruncSeries> {
    let m = motzkin_gf(order)?;
    let mut pow = TruncSeries::one(order);
    for _ in 0..i {
        pow = &pow * &m;
    }
    let num = pow.shift_up(i);
    let den = &x_poly(&[1, -1], order) - &m.shift_up(2).scalar_mul(&BigRational::from_integer(2.into()));
    TruncSeries::div_unit(&num, &den)
}

/// `H_i(x,q)`: `1 +` words weighted by `q^(cells at level i)`.
/// `H_1 = 1 + qx M(qx)`; `H_i = (1+x) / (1 - x(H_(i-1) - 1))` for `i >= 2`.
pub fn h_i_xq(i: usize, order: usize) -> Result<TruncSeries> {
    if i == 0 {
        return Err(Error::Parse("level i must be at least 1".into()));
    }
    let mq = motzkin_gf(order)?.substitute_scale(Subst::X, &mono(Var::Q, 1))?;
    let mut h = &TruncSeries::one(order) + &mq.shift_up(1).mul_poly(&q_pow(1));
    let one_plus_x = x_poly(&[1, 1], order);
    for _ in 2..=i {
        let den = &one_plus_x - &h.shift_up(1);
        h = TruncSeries::div_unit(&one_plus_x, &den)?;
    }
    Ok(h)
}

/// Generating functions addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    Motzkin,
    Trinomial,
    Sper,
    SperLast,
    LastSymbol,
    Area,
    ContinuedFraction,
    Interior,
    LevelCells,
    LevelTotal,
    LastTotal,
    SperTotal,
    AreaTotal,
    InteriorTotal,
}

impl SeriesName {
    pub const ALL: [SeriesName; 14] = [
        SeriesName::Motzkin,
        SeriesName::Trinomial,
        SeriesName::Sper,
        SeriesName::SperLast,
        SeriesName::LastSymbol,
        SeriesName::Area,
        SeriesName::ContinuedFraction,
        SeriesName::Interior,
        SeriesName::LevelCells,
        SeriesName::LevelTotal,
        SeriesName::LastTotal,
        SeriesName::SperTotal,
        SeriesName::AreaTotal,
        SeriesName::InteriorTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::Motzkin => "M",
            SeriesName::Trinomial => "T",
            SeriesName::Sper => "S",
            SeriesName::SperLast => "A_pv",
            SeriesName::LastSymbol => "A_v",
            SeriesName::Area => "U",
            SeriesName::ContinuedFraction => "CF",
            SeriesName::Interior => "Hint",
            SeriesName::LevelCells => "Hi",
            SeriesName::LevelTotal => "Bi",
            SeriesName::LastTotal => "g",
            SeriesName::SperTotal => "s-total",
            SeriesName::AreaTotal => "u-total",
            SeriesName::InteriorTotal => "int-total",
        }
    }

    /// Whether the series takes a level index `i`.
    pub fn needs_level(self) -> bool {
        matches!(self, SeriesName::LevelCells | SeriesName::LevelTotal)
    }

    pub fn build(self, order: usize, level: Option<usize>) -> Result<TruncSeries> {
        let level = || level.ok_or_else(|| Error::Parse(format!("series {} needs a level i", self.name())));
        match self {
            SeriesName::Motzkin => motzkin_gf(order),
            SeriesName::Trinomial => trinomial_gf(order),
            SeriesName::Sper => s_xp(order),
            SeriesName::SperLast => a_xpv(order),
            SeriesName::LastSymbol => a_xv_lastsymbol(order),
            SeriesName::Area => u_xq(order),
            SeriesName::ContinuedFraction => continued_fraction_xq(order),
            SeriesName::Interior => h_interior_xq(order),
            SeriesName::LevelCells => h_i_xq(level()?, order),
            SeriesName::LevelTotal => b_i_gf(level()?, order),
            SeriesName::LastTotal => lastsym_total_gf(order),
            SeriesName::SperTotal => total_sper_gf(order),
            SeriesName::AreaTotal => total_area_gf(order),
            SeriesName::InteriorTotal => total_inter_gf(order),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown series {s:?}")))
    }
}
