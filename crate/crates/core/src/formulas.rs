//! Closed forms, recurrences and asymptotic evaluators for the integer
//! sequences and triangles attached to Motzkin polyominoes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{self, MotzkinWord};

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// `m_0..=m_n` from `m_{j+1} = m_j + sum_{k=0}^{j-1} m_k m_{j-1-k}`.
pub fn motzkin_numbers(n: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(n + 1);
    m.push(BigInt::one());
    for j in 0..n {
        let conv: BigInt = (0..j).map(|k| &m[k] * &m[j - 1 - k]).sum();
        let next = &m[j] + conv;
        m.push(next);
    }
    m
}

pub fn motzkin(n: usize) -> BigInt {
    motzkin_numbers(n).pop().expect("nonempty")
}

/// `m_n = 1/(n+1) sum_i C(n+1, i) C(n+1-i, i+1)`.
pub fn motzkin_binomial(n: usize) -> BigInt {
    let n = n as i64;
    let sum: BigInt = (0..=n + 1)
        .map(|i| binomial(n + 1, i) * binomial(n + 1 - i, i + 1))
        .sum();
    let (q, r) = sum.div_rem(&BigInt::from(n + 1));
    assert!(r.is_zero(), "binomial Motzkin sum not divisible");
    q
}

/// Number of Motzkin words of length `n` ending in `k`:
/// `m(n,k) = k/n sum_{j=k}^{n} (-1)^{n-j} C(n,j) C(2j-k-1, j-1)`.
pub fn m_nk(n: usize, k: usize) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let sum: BigInt = (k..=n)
        .map(|j| {
            let term = binomial(n, j) * binomial(2 * j - k - 1, j - 1);
            if (n - j) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let value = BigRational::new(BigInt::from(k) * sum, BigInt::from(n));
    assert!(value.is_integer(), "m({n},{k}) is not an integer");
    value.to_integer()
}

/// Rows `0..=n_max` of the coefficients of `(1+x+x^2)^n`, each of length `2n+1`.
pub fn trinomial_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |i: i64| -> BigInt {
            if i < 0 || i as usize >= prev.len() {
                BigInt::zero()
            } else {
                prev[i as usize].clone()
            }
        };
        let row = (0..=2 * n as i64)
            .map(|i| at(i) + at(i - 1) + at(i - 2))
            .collect();
        rows.push(row);
    }
    rows
}

/// `T(n,i) = [x^i](1+x+x^2)^n`, zero outside `0 <= i <= 2n`.
pub fn trinomial(n: usize, i: i64) -> BigInt {
    if i < 0 || i > 2 * n as i64 {
        return BigInt::zero();
    }
    trinomial_rows(n).pop().expect("nonempty")[i as usize].clone()
}

pub fn central_trinomial(n: usize) -> BigInt {
    trinomial(n, n as i64)
}

fn pow3(n: usize) -> BigInt {
    num_traits::pow(BigInt::from(3), n)
}

/// Total semiperimeter over words of length `n`: `T_n + 2T_{n-1} - m_{n-1}`.
pub fn s_total(n: usize) -> BigInt {
    assert!(n >= 1);
    central_trinomial(n) + 2 * central_trinomial(n - 1) - motzkin(n - 1)
}

/// Total area over words of length `n`: `(3^n - T_n) / 2`.
pub fn u_total(n: usize) -> BigInt {
    let twice = pow3(n) - central_trinomial(n);
    assert!(twice.is_even());
    twice / 2
}

/// Total number of interior points: `(3^n - 3T_n)/2 - 2T_{n-1} + 2m_{n-1}`.
pub fn int_total(n: usize) -> BigInt {
    assert!(n >= 1);
    let twice: BigInt = pow3(n) - central_trinomial(n) * 3;
    assert!(twice.is_even());
    twice / 2 - 2 * central_trinomial(n - 1) + 2 * motzkin(n - 1)
}

/// Sum of the last letters over words of length `n`, which is `m_n`.
pub fn lastsym_total(n: usize) -> BigInt {
    motzkin(n)
}

/// Exact integer triangle or sequence indexed by `(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub name: String,
    pub first_row: usize,
    pub first_col: i64,
    pub rows: Vec<Vec<BigInt>>,
}

impl StatTable {
    pub fn get(&self, n: usize, i: i64) -> BigInt {
        n.checked_sub(self.first_row)
            .and_then(|r| self.rows.get(r))
            .and_then(|row| {
                let c = i - self.first_col;
                (c >= 0).then(|| row.get(c as usize)).flatten()
            })
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        n.checked_sub(self.first_row)
            .and_then(|r| self.rows.get(r))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.row(n).iter().sum()
    }

    pub fn last_row(&self) -> usize {
        self.first_row + self.rows.len().saturating_sub(1)
    }

    /// `(n, i, value)` triples in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &BigInt)> {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, v)| (self.first_row + r, self.first_col + c as i64, v))
        })
    }

    pub fn set(&mut self, n: usize, i: i64, value: BigInt) {
        let r = n - self.first_row;
        let c = (i - self.first_col) as usize;
        self.rows[r][c] = value;
    }
}

/// Per-last-letter totals of one statistic over words of length `n`, indexed `1..=n`.
fn enumerate_by_last(n: usize, stat: impl Fn(&MotzkinWord) -> u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n];
    for w in word::generate_all(n).expect("small n") {
        row[w.last() as usize - 1] += stat(&w);
    }
    row
}

fn m_row(n: usize) -> Vec<BigInt> {
    (0..=n + 1).map(|k| m_nk(n, k)).collect()
}

/// `s(n,i)`: total semiperimeter of words of length `n` ending in `i`.
///
/// Rows 1 and 2 come from enumeration; later rows from the last-column
/// decomposition (difference form for `3 <= i <= n-1`).
pub fn s_table(n_max: usize) -> StatTable {
    aggregate_table("s", n_max, |w| word::stats_formula(w).sper, s_step)
}

/// `u(n,i)`: total area of words of length `n` ending in `i`.
pub fn u_table(n_max: usize) -> StatTable {
    aggregate_table("u", n_max, |w| word::stats_formula(w).area, u_step)
}

fn aggregate_table(
    name: &str,
    n_max: usize,
    stat: impl Fn(&MotzkinWord) -> u64 + Copy,
    step: fn(&[BigInt], &[BigInt], usize) -> Vec<BigInt>,
) -> StatTable {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for n in 1..=n_max {
        let row = if n <= 2 {
            enumerate_by_last(n, stat)
        } else {
            step(&rows[n - 2], &m_row(n - 1), n)
        };
        rows.push(row);
    }
    StatTable {
        name: name.into(),
        first_row: 1,
        first_col: 1,
        rows,
    }
}

// Row-local accessors with 1-based `i` and zero outside the stored range.
fn at(row: &[BigInt], i: i64) -> BigInt {
    if i < 1 {
        return BigInt::zero();
    }
    row.get(i as usize - 1).cloned().unwrap_or_default()
}

fn mat(m: &[BigInt], i: i64) -> BigInt {
    if i < 0 {
        return BigInt::zero();
    }
    m.get(i as usize).cloned().unwrap_or_default()
}

/// Direct form of the semiperimeter recurrence for one entry.
pub(crate) fn s_direct(prev: &[BigInt], m: &[BigInt], n: usize, i: i64) -> BigInt {
    let tail: BigInt = (i + 1..n as i64).map(|j| at(prev, j) + mat(m, j)).sum();
    if i == 1 {
        tail
    } else {
        at(prev, i - 1) + 2 * mat(m, i - 1) + tail
    }
}

pub(crate) fn s_difference(prev: &[BigInt], m: &[BigInt], cur_prev: &BigInt, i: i64) -> BigInt {
    cur_prev + at(prev, i - 1) - at(prev, i - 2) - at(prev, i) + 2 * (mat(m, i - 1) - mat(m, i - 2))
        - mat(m, i)
}

fn s_step(prev: &[BigInt], m: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut row: Vec<BigInt> = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let v = if (3..n as i64).contains(&i) {
            s_difference(prev, m, &row[i as usize - 2], i)
        } else {
            s_direct(prev, m, n, i)
        };
        row.push(v);
    }
    row
}

pub(crate) fn u_direct(prev: &[BigInt], m: &[BigInt], n: usize, i: i64) -> BigInt {
    if i == 1 {
        return (2..n as i64).map(|j| at(prev, j) + mat(m, j)).sum();
    }
    let tail: BigInt = (i + 1..n as i64).map(|j| at(prev, j) + i * mat(m, j)).sum();
    at(prev, i - 1) + i * mat(m, i - 1) + tail
}

pub(crate) fn u_difference(prev: &[BigInt], m: &[BigInt], n: usize, cur_prev: &BigInt, i: i64) -> BigInt {
    let tail: BigInt = (i..n as i64).map(|j| mat(m, j)).sum();
    cur_prev + at(prev, i - 1) - at(prev, i) - at(prev, i - 2) + i * mat(m, i - 1)
        - (i - 1) * mat(m, i - 2)
        - i * mat(m, i)
        + tail
}

fn u_step(prev: &[BigInt], m: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut row: Vec<BigInt> = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let v = if (3..n as i64).contains(&i) {
            u_difference(prev, m, n, &row[i as usize - 2], i)
        } else {
            u_direct(prev, m, n, i)
        };
        row.push(v);
    }
    row
}

/// `h(n,i)`: number of cells at level `i` over all words of length `n`,
/// from `h(n,1) = n m_{n-1}` and `h(n,i) = h(n-1,i-1) + h(n-1,i) + h(n-1,i+1)`.
pub fn h_table(n_max: usize) -> StatTable {
    let m = motzkin_numbers(n_max);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        row.push(BigInt::from(n) * &m[n - 1]);
        for i in 2..=n as i64 {
            let prev = rows.last().map(Vec::as_slice).unwrap_or(&[]);
            row.push(at(prev, i - 1) + at(prev, i) + at(prev, i + 1));
        }
        rows.push(row);
    }
    StatTable {
        name: "h".into(),
        first_row: 1,
        first_col: 1,
        rows,
    }
}

/// `g(n,i)`: Motzkin walks (steps U, F, D, no floor) of length `n` ending at
/// height `i`, for `0 <= n <= n_max` and `-n_max <= i <= n_max`.
pub fn walks(n_max: usize) -> StatTable {
    let width = 2 * n_max + 1;
    let offset = n_max;
    let mut rows = vec![vec![BigInt::zero(); width]];
    rows[0][offset] = BigInt::one();
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..width)
            .map(|c| {
                let mut v = prev[c].clone();
                if c > 0 {
                    v += &prev[c - 1];
                }
                if c + 1 < width {
                    v += &prev[c + 1];
                }
                v
            })
            .collect();
        rows.push(row);
    }
    StatTable {
        name: "walks".into(),
        first_row: 0,
        first_col: -(n_max as i64),
        rows,
    }
}

/// Full trinomial triangle, rows `0..=n_max`, columns `0..=2n`.
pub fn trinomial_table(n_max: usize) -> StatTable {
    StatTable {
        name: "T".into(),
        first_row: 0,
        first_col: 0,
        rows: trinomial_rows(n_max),
    }
}

/// `m(n,k)` triangle, rows `1..=n_max`, columns `1..=n`.
pub fn m_table(n_max: usize) -> StatTable {
    StatTable {
        name: "m".into(),
        first_row: 1,
        first_col: 1,
        rows: (1..=n_max)
            .map(|n| (1..=n).map(|k| m_nk(n, k)).collect())
            .collect(),
    }
}

/// Linear integer sequences exposed for export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sequence {
    Motzkin,
    CentralTrinomial,
    STotal,
    UTotal,
    IntTotal,
    LastsymTotal,
    HeightOne,
}

impl Sequence {
    pub const ALL: [Sequence; 7] = [
        Sequence::Motzkin,
        Sequence::CentralTrinomial,
        Sequence::STotal,
        Sequence::UTotal,
        Sequence::IntTotal,
        Sequence::LastsymTotal,
        Sequence::HeightOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Motzkin => "motzkin",
            Sequence::CentralTrinomial => "central-trinomial",
            Sequence::STotal => "s-total",
            Sequence::UTotal => "u-total",
            Sequence::IntTotal => "int-total",
            Sequence::LastsymTotal => "lastsym-total",
            Sequence::HeightOne => "h1",
        }
    }

    /// First index of the sequence.
    pub fn offset(self) -> usize {
        match self {
            Sequence::Motzkin | Sequence::CentralTrinomial => 0,
            _ => 1,
        }
    }

    pub fn value(self, n: usize) -> BigInt {
        match self {
            Sequence::Motzkin => motzkin(n),
            Sequence::CentralTrinomial => central_trinomial(n),
            Sequence::STotal => s_total(n),
            Sequence::UTotal => u_total(n),
            Sequence::IntTotal => int_total(n),
            Sequence::LastsymTotal => lastsym_total(n),
            Sequence::HeightOne => BigInt::from(n) * motzkin(n - 1),
        }
    }

    /// `(n, a(n))` for `offset <= n <= last`.
    pub fn terms(self, last: usize) -> Vec<(usize, BigInt)> {
        (self.offset()..=last).map(|n| (n, self.value(n))).collect()
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown sequence {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Asymptotic {
    Gn,
    Sn,
    Un,
    Intn,
    ExpectedLast,
    ExpectedSper,
    ExpectedInter,
}

impl Asymptotic {
    pub const ALL: [Asymptotic; 7] = [
        Asymptotic::Gn,
        Asymptotic::Sn,
        Asymptotic::Un,
        Asymptotic::Intn,
        Asymptotic::ExpectedLast,
        Asymptotic::ExpectedSper,
        Asymptotic::ExpectedInter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Asymptotic::Gn => "gn",
            Asymptotic::Sn => "sn",
            Asymptotic::Un => "un",
            Asymptotic::Intn => "intn",
            Asymptotic::ExpectedLast => "expected-last",
            Asymptotic::ExpectedSper => "expected-sper",
            Asymptotic::ExpectedInter => "expected-inter",
        }
    }
}

impl FromStr for Asymptotic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        Asymptotic::ALL
            .into_iter()
            .find(|a| a.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown asymptotic {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticComparison {
    pub n: usize,
    pub exact: f64,
    pub asymptotic: f64,
    pub ratio: f64,
}

fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    // scale so both fit comfortably in f64 before dividing
    let shift = num.bits().max(den.bits()).saturating_sub(900);
    let a = (num >> shift).to_f64().unwrap_or(f64::NAN);
    let b = (den >> shift).to_f64().unwrap_or(f64::NAN);
    a / b
}

/// Exact value against its stated asymptotic estimate. Floats are used only here.
pub fn asymptotic(name: Asymptotic, n: usize) -> AsymptoticComparison {
    assert!(n >= 3, "asymptotic comparisons need n >= 3");
    let nf = n as f64;
    let three_n = 3f64.powi(n as i32);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let sqrt3 = 3f64.sqrt();
    let one = BigInt::one();
    let (exact, asym) = match name {
        Asymptotic::Gn => (
            ratio_f64(&lastsym_total(n), &one),
            3.0 * sqrt3 * nf.powf(-1.5) * three_n / (2.0 * sqrt_pi),
        ),
        Asymptotic::Sn => (
            ratio_f64(&s_total(n), &one),
            5.0 * sqrt3 * nf.powf(-0.5) * three_n / (6.0 * sqrt_pi),
        ),
        Asymptotic::Un => (ratio_f64(&u_total(n), &one), three_n / 2.0),
        Asymptotic::Intn => (ratio_f64(&int_total(n), &one), three_n / 2.0),
        Asymptotic::ExpectedLast => (ratio_f64(&motzkin(n), &motzkin(n - 1)), 3.0),
        Asymptotic::ExpectedSper => (ratio_f64(&s_total(n), &motzkin(n - 1)), 5.0 * nf / 3.0),
        Asymptotic::ExpectedInter => (
            ratio_f64(&int_total(n), &motzkin(n - 1)),
            (std::f64::consts::PI / 3.0).sqrt() * nf.powf(1.5),
        ),
    };
    AsymptoticComparison {
        n,
        exact,
        asymptotic: asym,
        ratio: exact / asym,
    }
}
