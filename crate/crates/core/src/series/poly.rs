//! Sparse polynomials with exact rational coefficients in the auxiliary
//! variables `p`, `q`, `v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    P,
    Q,
    V,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::P, Var::Q, Var::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::P => 'p',
            Var::Q => 'q',
            Var::V => 'v',
        }
    }
}

/// Exponents of `(p, q, v)`.
pub type Monomial = [u32; 3];

pub const ONE: Monomial = [0, 0, 0];

pub fn mono(var: Var, exp: u32) -> Monomial {
    let mut m = ONE;
    m[var.index()] = exp;
    m
}

fn mono_add(a: &Monomial, b: &Monomial) -> Monomial {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Optional per-variable degree caps. Terms above a cap are zero in the
/// quotient ring `Q[p,q,v] / (var^(cap+1))`, which is closed under every
/// operation here, including `v <- q v` substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Caps(pub [Option<u32>; 3]);

impl Caps {
    pub const NONE: Caps = Caps([None; 3]);

    pub fn with(mut self, var: Var, cap: u32) -> Caps {
        self.0[var.index()] = Some(cap);
        self
    }

    pub fn get(&self, var: Var) -> Option<u32> {
        self.0[var.index()]
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        self.0.iter().zip(m).all(|(cap, &e)| cap.is_none_or(|c| e <= c))
    }

    /// Tighter of the two caps per variable.
    pub fn meet(&self, other: &Caps) -> Caps {
        let mut out = [None; 3];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = match (self.0[k], other.0[k]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        Caps(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        SparsePoly::term(c, ONE)
    }

    pub fn int(c: i64) -> Self {
        SparsePoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    /// `c * m` with an integer coefficient.
    pub fn int_term(c: i64, m: Monomial) -> Self {
        SparsePoly::term(BigRational::from_integer(BigInt::from(c)), m)
    }

    pub fn var(var: Var) -> Self {
        SparsePoly::int_term(1, mono(var, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, s: &BigRational) -> SparsePoly {
        if s.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn truncate(&self, caps: &Caps) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| caps.admits(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn mul_capped(&self, other: &SparsePoly, caps: &Caps) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = mono_add(ma, mb);
                if caps.admits(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Multiplicative inverse in the capped ring. Needs a nonzero constant
    /// term and a cap on every variable that occurs.
    pub fn inverse(&self, caps: &Caps) -> Result<SparsePoly> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NonUnitDivisor(format!("constant term of {self} is zero")));
        }
        let inv_c = c.recip();
        let mut rest = self.clone();
        rest.terms.remove(&ONE);
        if rest.is_zero() {
            return Ok(SparsePoly::constant(inv_c));
        }
        let mut budget = 0u32;
        for var in Var::ALL {
            if rest.terms.keys().any(|m| m[var.index()] > 0) {
                match caps.get(var) {
                    Some(cap) => budget += cap,
                    None => {
                        return Err(Error::NonUnitDivisor(format!(
                            "{self} is invertible only with a cap on {}",
                            var.symbol()
                        )))
                    }
                }
            }
        }
        // 1/(c + r) = (1/c) sum_k (-r/c)^k; r^k vanishes once k exceeds the
        // total cap budget since every term of r has positive degree.
        let ratio = rest.scale(&-inv_c.clone());
        let mut power = SparsePoly::one();
        let mut sum = SparsePoly::one();
        for _ in 0..budget {
            power = power.mul_capped(&ratio, caps);
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        Ok(sum.scale(&inv_c))
    }

    /// Replaces `var` by `by * var`; errors if a result exceeds `caps`.
    pub fn substitute_scale(&self, var: Var, by: &Monomial, caps: &Caps) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m[var.index()];
            let mut nm = *m;
            for k in 0..3 {
                nm[k] += e * by[k];
            }
            check_caps(&nm, caps)?;
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Multiplies by a monomial; errors if a result exceeds `caps`.
    pub fn shift_by(&self, by: &Monomial, caps: &Caps) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let nm = mono_add(m, by);
            check_caps(&nm, caps)?;
            out.terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    /// Exact division by a monomial, `None` if some term is not divisible.
    pub fn div_monomial(&self, by: &Monomial) -> Option<SparsePoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if (0..3).any(|k| m[k] < by[k]) {
                return None;
            }
            terms.insert([m[0] - by[0], m[1] - by[1], m[2] - by[2]], c.clone());
        }
        Some(SparsePoly { terms })
    }

    pub fn derivative(&self, var: Var) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m[var.index()];
            if e > 0 {
                let mut nm = *m;
                nm[var.index()] -= 1;
                out.add_term(nm, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Sets `var = 1`.
    pub fn eval_at_one(&self, var: Var) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut nm = *m;
            nm[var.index()] = 0;
            out.add_term(nm, c.clone());
        }
        out
    }

    pub fn max_exponent(&self, var: Var) -> u32 {
        self.terms.keys().map(|m| m[var.index()]).max().unwrap_or(0)
    }

    /// Univariate integer coefficients in `var`, if this is one.
    pub fn integer_coefficients(&self, var: Var) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.max_exponent(var) as usize + 1];
        for (m, c) in &self.terms {
            if (0..3).any(|k| k != var.index() && m[k] != 0) || !c.is_integer() {
                return None;
            }
            out[m[var.index()] as usize] = c.to_integer();
        }
        Some(out)
    }

    /// Renders with compact (`a+b`) or spaced (`a + b`) separators.
    pub fn render(&self, compact: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let (plus, minus) = if compact { ("+", "-") } else { (" + ", " - ") };
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { minus } else { plus });
            }
            out.push_str(&render_term(&c.abs(), m));
        }
        out
    }
}

fn check_caps(m: &Monomial, caps: &Caps) -> Result<()> {
    for var in Var::ALL {
        if let Some(cap) = caps.get(var) {
            if m[var.index()] > cap {
                return Err(Error::CapExceeded {
                    var: var.symbol(),
                    cap,
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn render_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for var in Var::ALL {
        match m[var.index()] {
            0 => {}
            1 => out.push(var.symbol()),
            e => {
                out.push(var.symbol());
                out.push_str(&format!("^{e}"));
            }
        }
    }
    out
}

/// `c * m` for nonnegative `c`.
fn render_term(c: &BigRational, m: &Monomial) -> String {
    let vars = render_monomial(m);
    let coef = if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({c})")
    };
    if vars.is_empty() {
        coef
    } else if c.is_one() {
        vars
    } else {
        format!("{coef}{vars}")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_capped(rhs, &Caps::NONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: u32) -> SparsePoly {
        SparsePoly::int_term(1, mono(Var::Q, e))
    }

    #[test]
    fn arithmetic_and_zero_elimination() {
        let a = &SparsePoly::one() + &q(1);
        let b = &SparsePoly::one() - &q(1);
        let prod = &a * &b;
        assert_eq!(prod, &SparsePoly::one() - &q(2));
        assert!((&a - &a).is_zero());
        assert_eq!((&q(1) * &q(1)), q(2));
    }

    #[test]
    fn capped_inverse_is_geometric() {
        let caps = Caps::NONE.with(Var::Q, 5);
        let inv = (&SparsePoly::one() - &q(1)).inverse(&caps).unwrap();
        assert_eq!(inv.integer_coefficients(Var::Q).unwrap(), vec![BigInt::one(); 6]);
        let back = inv.mul_capped(&(&SparsePoly::one() - &q(1)), &caps);
        assert_eq!(back, SparsePoly::one());
    }

    #[test]
    fn inverse_needs_caps_and_unit() {
        let p = &SparsePoly::one() - &SparsePoly::var(Var::V);
        assert!(matches!(p.inverse(&Caps::NONE), Err(Error::NonUnitDivisor(_))));
        assert!(matches!(
            q(1).inverse(&Caps::NONE.with(Var::Q, 3)),
            Err(Error::NonUnitDivisor(_))
        ));
        let two = SparsePoly::int(2).inverse(&Caps::NONE).unwrap();
        assert_eq!(two.constant_term(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn substitution_and_derivative() {
        let v = SparsePoly::var(Var::V);
        let qv = v.substitute_scale(Var::V, &mono(Var::Q, 1), &Caps::NONE).unwrap();
        assert_eq!(qv, SparsePoly::int_term(1, [0, 1, 1]));
        let capped = Caps::NONE.with(Var::Q, 0);
        assert!(matches!(
            v.substitute_scale(Var::V, &mono(Var::Q, 1), &capped),
            Err(Error::CapExceeded { var: 'q', cap: 0 })
        ));
        let v2 = SparsePoly::int_term(1, mono(Var::V, 2));
        assert_eq!(v2.derivative(Var::V).eval_at_one(Var::V), SparsePoly::int(2));
    }

    #[test]
    fn monomial_division() {
        let p = SparsePoly::int_term(2, [3, 0, 0]);
        assert_eq!(
            p.div_monomial(&[1, 0, 0]).unwrap(),
            SparsePoly::int_term(2, [2, 0, 0])
        );
        assert!(p.div_monomial(&[0, 1, 0]).is_none());
    }

    #[test]
    fn rendering() {
        let p = &(&SparsePoly::int_term(2, [8, 0, 0]) + &SparsePoly::int_term(6, [9, 0, 0]))
            + &SparsePoly::int_term(1, [10, 0, 0]);
        assert_eq!(p.to_string(), "2p^8 + 6p^9 + p^10");
        assert_eq!(p.render(true), "2p^8+6p^9+p^10");
        let mixed = &SparsePoly::int_term(3, [9, 0, 2]) - &SparsePoly::int(1);
        assert_eq!(mixed.to_string(), "-1 + 3p^9v^2");
        let half = SparsePoly::term(BigRational::new(1.into(), 2.into()), [0, 1, 0]);
        assert_eq!(half.to_string(), "(1/2)q");
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }
}
