//! Motzkin words and their bottom-justified polyominoes.
//!
//! A word `w` is a Motzkin word when `w[0] = 1` and every later letter
//! satisfies `1 <= w[k] <= w[k-1] + 1` and `w[k] != w[k-1]`. Column `i` of
//! the polyomino holds `w[i]` unit cells.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, WordViolation};
use crate::formulas;

/// Caps for exhaustive operations. Exceeding a cap is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of objects a single generation call may produce.
    pub max_objects: u64,
    /// Maximum length accepted by exhaustive generation.
    pub max_exhaustive_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 10_000_000,
            max_exhaustive_len: 16,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &str, len: usize, count: &BigUint) -> Result<()> {
        if len > self.max_exhaustive_len {
            return Err(Error::ResourceLimit(format!(
                "{what}: length {len} exceeds exhaustive cap {}",
                self.max_exhaustive_len
            )));
        }
        if *count > BigUint::from(self.max_objects) {
            return Err(Error::ResourceLimit(format!(
                "{what}: {count} objects exceed cap {}",
                self.max_objects
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MotzkinWord {
    letters: Vec<u32>,
}

impl MotzkinWord {
    pub fn empty() -> Self {
        MotzkinWord::default()
    }

    pub fn new(letters: Vec<u32>) -> Result<Self> {
        validate_letters(&letters)?;
        Ok(MotzkinWord { letters })
    }

    /// Builds a word without checking; callers must uphold the invariants.
    pub(crate) fn from_trusted(letters: Vec<u32>) -> Self {
        debug_assert!(validate_letters(&letters).is_ok(), "{letters:?}");
        MotzkinWord { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Height of the last column, 0 for the empty word.
    pub fn last(&self) -> u32 {
        self.letters.last().copied().unwrap_or(0)
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }
}

/// Checks a raw integer sequence against the Motzkin word constraints.
pub fn validate(seq: &[u32]) -> Result<MotzkinWord> {
    MotzkinWord::new(seq.to_vec())
}

fn validate_letters(letters: &[u32]) -> Result<()> {
    let Some(&first) = letters.first() else {
        return Ok(());
    };
    if first != 1 {
        return Err(Error::InvalidWord {
            position: 0,
            reason: WordViolation::FirstNotOne,
        });
    }
    for (k, pair) in letters.windows(2).enumerate() {
        let (prev, cur) = (pair[0], pair[1]);
        let reason = if cur == 0 {
            WordViolation::ZeroLetter
        } else if cur > prev + 1 {
            WordViolation::RiseTooLarge
        } else if cur == prev {
            WordViolation::EqualAdjacent
        } else {
            continue;
        };
        return Err(Error::InvalidWord {
            position: k + 1,
            reason,
        });
    }
    Ok(())
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// Digit string when every letter is a single digit, comma separated otherwise.
pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.iter().all(|&l| l <= 9) {
        for l in letters {
            write!(f, "{l}")?;
        }
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
    }
    Ok(())
}

pub(crate) fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad letter {t:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MotzkinWord::new(parse_letters(s)?)
    }
}

impl Serialize for MotzkinWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MotzkinWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All Motzkin words of length `n` in lexicographic order.
pub fn generate_all(n: usize) -> Result<Vec<MotzkinWord>> {
    generate_all_with(n, &Limits::default())
}

pub fn generate_all_with(n: usize, limits: &Limits) -> Result<Vec<MotzkinWord>> {
    let count = word_count(n);
    limits.check("generate_all", n, &count)?;
    let mut out = Vec::new();
    extend_words(n, None, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// All Motzkin words of length `n` whose last letter is `k`, in lexicographic order.
pub fn generate_by_last(n: usize, k: u32) -> Result<Vec<MotzkinWord>> {
    generate_by_last_with(n, k, &Limits::default())
}

pub fn generate_by_last_with(n: usize, k: u32, limits: &Limits) -> Result<Vec<MotzkinWord>> {
    if n == 0 || k == 0 || k as usize > n {
        return Ok(Vec::new());
    }
    let count = formulas::m_nk(n, k as usize).to_biguint().unwrap_or_default();
    limits.check("generate_by_last", n, &count)?;
    let mut out = Vec::new();
    extend_words(n, Some(k), &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

fn word_count(n: usize) -> BigUint {
    if n == 0 {
        BigUint::from(1u32)
    } else {
        formulas::motzkin(n - 1).to_biguint().unwrap_or_default()
    }
}

// Depth-first extension: from a prefix ending in h the children are
// 1..=h+1 without h, in increasing order, so output is lexicographic.
fn extend_words(n: usize, last: Option<u32>, prefix: &mut Vec<u32>, out: &mut Vec<MotzkinWord>) {
    if prefix.len() == n {
        if last.is_none_or(|k| prefix.last() == Some(&k)) {
            out.push(MotzkinWord::from_trusted(prefix.clone()));
        }
        return;
    }
    let remaining = (n - prefix.len()) as u32;
    let Some(&h) = prefix.last() else {
        prefix.push(1);
        extend_words(n, last, prefix, out);
        prefix.pop();
        return;
    };
    for next in (1..=h + 1).filter(|&c| c != h) {
        // the final letter can rise by at most one per remaining step
        if let Some(k) = last {
            if k > next + (remaining - 1) {
                continue;
            }
        }
        prefix.push(next);
        extend_words(n, last, prefix, out);
        prefix.pop();
    }
}

/// Polyomino statistics of a single word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyominoStats {
    pub length: usize,
    pub area: u64,
    pub sper: u64,
    pub inter: u64,
    pub last: u32,
    pub height_histogram: BTreeMap<u32, u64>,
}

/// Statistics measured on the unit-cell grid: cells are counted, boundary
/// edges are those without a neighbouring cell, interior points are lattice
/// vertices shared by four cells.
pub fn stats(w: &MotzkinWord) -> PolyominoStats {
    let n = w.len();
    let top = w.letters.iter().copied().max().unwrap_or(0) as usize;
    let filled = |col: isize, row: isize| -> bool {
        col >= 0 && row >= 0 && (col as usize) < n && (row as usize) < w.letters[col as usize] as usize
    };

    let mut area = 0u64;
    let mut boundary_edges = 0u64;
    for col in 0..n as isize {
        for row in 0..w.letters[col as usize] as isize {
            area += 1;
            for (dc, dr) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                if !filled(col + dc, row + dr) {
                    boundary_edges += 1;
                }
            }
        }
    }
    assert!(
        boundary_edges.is_multiple_of(2),
        "odd perimeter {boundary_edges} for {w}"
    );

    let mut inter = 0u64;
    for x in 1..n as isize {
        for y in 1..top as isize {
            if filled(x - 1, y - 1) && filled(x, y - 1) && filled(x - 1, y) && filled(x, y) {
                inter += 1;
            }
        }
    }

    PolyominoStats {
        length: n,
        area,
        sper: boundary_edges / 2,
        inter,
        last: w.last(),
        height_histogram: height_histogram(w),
    }
}

/// Closed bargraph formulas for the same statistics.
pub fn stats_formula(w: &MotzkinWord) -> PolyominoStats {
    let l = &w.letters;
    let n = l.len();
    let area = l.iter().map(|&h| h as u64).sum();
    let (sper, inter) = match l.first() {
        None => (0, 0),
        Some(&first) => {
            let rises: u64 = l.windows(2).map(|p| p[1].saturating_sub(p[0]) as u64).sum();
            let inner: u64 = l
                .windows(2)
                .map(|p| p[0].min(p[1]).saturating_sub(1) as u64)
                .sum();
            (n as u64 + first as u64 + rises, inner)
        }
    };
    PolyominoStats {
        length: n,
        area,
        sper,
        inter,
        last: w.last(),
        height_histogram: height_histogram(w),
    }
}

/// Number of cells at each level `i >= 1`, i.e. `|{j : w[j] >= i}|`.
pub fn height_histogram(w: &MotzkinWord) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for &h in &w.letters {
        for level in 1..=h {
            *hist.entry(level).or_insert(0) += 1;
        }
    }
    hist
}

/// Bottom-justified column drawing, top row first.
pub fn render_ascii(w: &MotzkinWord) -> String {
    let top = w.letters.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for level in (1..=top).rev() {
        let row: String = w
            .letters
            .iter()
            .map(|&h| if h >= level { '#' } else { ' ' })
            .collect();
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}
