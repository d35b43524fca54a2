//! Truncated power series in `x` whose coefficients are [`SparsePoly`]s.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{Caps, Monomial, SparsePoly, Var, ONE};
use crate::error::{Error, Result};

/// Variable targeted by [`TruncSeries::substitute_scale`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subst {
    X,
    Aux(Var),
}

/// Power series known exactly up to and including `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<SparsePoly>,
    caps: Caps,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![SparsePoly::zero(); order + 1],
            caps: Caps::NONE,
        }
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(SparsePoly::one(), order)
    }

    pub fn constant(c: SparsePoly, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k` at the given order.
    pub fn monomial(c: SparsePoly, k: usize, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with integer coefficients `c[0] + c[1] x + ...`, padded with zeros to `order`.
    pub fn from_ints(c: &[i64], order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        for (k, &v) in c.iter().enumerate().take(order + 1) {
            s.coeffs[k] = SparsePoly::int(v);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<SparsePoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the x^0 coefficient");
        TruncSeries {
            coeffs,
            caps: Caps::NONE,
        }
    }

    /// Applies degree caps, dropping every term above them.
    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = self.caps.meet(&caps);
        for c in &mut self.coeffs {
            *c = c.truncate(&self.caps);
        }
        self
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &SparsePoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[SparsePoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: SparsePoly) {
        self.coeffs[n] = c.truncate(&self.caps);
    }

    pub fn truncate_order(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            caps: self.caps,
        }
    }

    fn aligned(&self, other: &TruncSeries) -> (usize, Caps) {
        (self.order().min(other.order()), self.caps.meet(&other.caps))
    }

    pub fn scalar_mul(&self, s: &BigRational) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        let caps = self.caps;
        self.map(|c| c.mul_capped(p, &caps))
    }

    fn map(&self, f: impl Fn(&SparsePoly) -> SparsePoly) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
            caps: self.caps,
        }
    }

    /// `num / den` with `den`'s `x^0` coefficient a unit of the capped ring.
    pub fn div_unit(num: &TruncSeries, den: &TruncSeries) -> Result<TruncSeries> {
        let (order, caps) = num.aligned(den);
        let inv0 = den.coeffs[0].inverse(&caps)?;
        let mut out: Vec<SparsePoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs[n].truncate(&caps);
            for k in 1..=n {
                acc = &acc - &den.coeffs[k].mul_capped(&out[n - k], &caps);
            }
            out.push(acc.mul_capped(&inv0, &caps));
        }
        Ok(TruncSeries { coeffs: out, caps })
    }

    /// Square root with constant term `+1`, via
    /// `c_n = (s_n - sum_{k=1}^{n-1} c_k c_{n-k}) / 2`.
    pub fn sqrt_unit(&self) -> Result<TruncSeries> {
        if self.coeffs[0] != SparsePoly::one() {
            return Err(Error::NonUnitConstant);
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let caps = self.caps;
        let mut out = vec![SparsePoly::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = &acc - &out[k].mul_capped(&out[n - k], &caps);
            }
            out.push(acc.scale(&half));
        }
        Ok(TruncSeries { coeffs: out, caps })
    }

    /// Replaces `x` by `by * x`, or an auxiliary variable `a` by `by * a`.
    pub fn substitute_scale(&self, target: Subst, by: &Monomial) -> Result<TruncSeries> {
        let caps = self.caps;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| match target {
                Subst::Aux(var) => c.substitute_scale(var, by, &caps),
                Subst::X => {
                    let n = n as u32;
                    c.shift_by(&[by[0] * n, by[1] * n, by[2] * n], &caps)
                }
            })
            .collect::<Result<_>>()?;
        Ok(TruncSeries { coeffs, caps })
    }

    /// Formal derivative in `var` followed by `var = 1`.
    pub fn derivative_at_one(&self, var: Var) -> TruncSeries {
        self.map(|c| c.derivative(var).eval_at_one(var))
    }

    pub fn eval_at_one(&self, var: Var) -> TruncSeries {
        self.map(|c| c.eval_at_one(var))
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order());
        out.caps = self.caps;
        for n in k..=self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Exact division by `x^k`; the low coefficients must vanish. The
    /// result is known to order `order - k`.
    pub fn div_x_pow(&self, k: usize) -> Result<TruncSeries> {
        if let Some(index) = (0..k.min(self.coeffs.len())).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::ShiftResidue { shift: k, index });
        }
        if k > self.order() {
            return Err(Error::ShiftResidue {
                shift: k,
                index: self.order(),
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[k..].to_vec(),
            caps: self.caps,
        })
    }

    /// Exact division of every coefficient by an auxiliary monomial.
    pub fn div_monomial(&self, by: &Monomial) -> Result<TruncSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                c.div_monomial(by).ok_or_else(|| {
                    Error::NonUnitDivisor(format!("coefficient of x^{n} not divisible by the monomial"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(TruncSeries {
            coeffs,
            caps: self.caps,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SparsePoly::is_zero)
    }

    /// First `(n, monomial, coefficient)` that differs from `other`, up to the common order.
    pub fn first_difference(
        &self,
        other: &TruncSeries,
    ) -> Option<(usize, Monomial, BigRational, BigRational)> {
        let order = self.order().min(other.order());
        for n in 0..=order {
            let diff = &self.coeffs[n] - &other.coeffs[n];
            let first = diff.terms().next().map(|(m, _)| *m);
            if let Some(m) = first {
                return Some((n, m, self.coeffs[n].coeff(&m), other.coeffs[n].coeff(&m)));
            }
        }
        None
    }

    /// Integer coefficients when every coefficient is an integer constant.
    pub fn integer_sequence(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    return Some(BigInt::zero());
                }
                if c.len() != 1 || c.constant_term().is_zero() {
                    return None;
                }
                let v = c.constant_term();
                v.is_integer().then(|| v.to_integer())
            })
            .collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(n, c)| {
                c.terms().map(move |(m, r)| TermJson {
                    x: n as u32,
                    p: m[0],
                    q: m[1],
                    v: m[2],
                    num: r.numer().to_string(),
                    den: r.denom().to_string(),
                })
            })
            .collect();
        SeriesJson {
            order: self.order(),
            terms,
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<TruncSeries> {
        let mut s = TruncSeries::zero(json.order);
        for t in &json.terms {
            let bad = |e: num_bigint::ParseBigIntError| Error::Parse(e.to_string());
            let num: BigInt = t.num.parse().map_err(bad)?;
            let den: BigInt = t.den.parse().map_err(bad)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let n = t.x as usize;
            if n > json.order {
                return Err(Error::Parse(format!("term x^{n} beyond order {}", json.order)));
            }
            s.coeffs[n].add_term([t.p, t.q, t.v], BigRational::new(num, den));
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub terms: Vec<TermJson>,
}

/// One monomial `num/den * x^x p^p q^q v^v`; the rational is written as
/// decimal strings so that no precision is lost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: u32,
    pub p: u32,
    pub q: u32,
    pub v: u32,
    pub num: String,
    pub den: String,
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let xs = match n {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{n}"),
            };
            let (neg, body) = if c.len() == 1 {
                let (m, r) = c.terms().next().expect("one term");
                let neg = r < &BigRational::zero();
                let abs = SparsePoly::term(if neg { -r.clone() } else { r.clone() }, *m);
                let body = if n > 0 && *m == ONE && abs.constant_term().is_one() {
                    xs.clone()
                } else if n == 0 {
                    abs.render(true)
                } else {
                    format!("{} {xs}", abs.render(true))
                };
                (neg, body)
            } else if n == 0 {
                (false, c.render(true))
            } else {
                (false, format!("({}) {xs}", c.render(true)))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let (order, caps) = self.aligned(rhs);
        TruncSeries {
            coeffs: (0..=order)
                .map(|n| (&self.coeffs[n] + &rhs.coeffs[n]).truncate(&caps))
                .collect(),
            caps,
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let (order, caps) = self.aligned(rhs);
        TruncSeries {
            coeffs: (0..=order)
                .map(|n| (&self.coeffs[n] - &rhs.coeffs[n]).truncate(&caps))
                .collect(),
            caps,
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        self.map(|c| -c)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let (order, caps) = self.aligned(rhs);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = SparsePoly::zero();
                for k in 0..=n {
                    let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.mul_capped(b, &caps);
                    }
                }
                acc
            })
            .collect();
        TruncSeries { coeffs, caps }
    }
}
