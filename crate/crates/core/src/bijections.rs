//! Bijections between Motzkin words and other Motzkin families: Motzkin
//! paths (`psi`), restricted Catalan words (`phi`), primitive Łukasiewicz
//! paths without flat steps, and Dyck paths avoiding `UDU`.

use std::fmt;
use std::str::FromStr;

#[cfg(test)]
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas;
use crate::word::{self, Limits, MotzkinWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathKind {
    Motzkin,
    Dyck,
    Lukasiewicz,
}

/// A lattice path stored as its sequence of rises.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    kind: PathKind,
    steps: Vec<i32>,
}

impl PartialOrd for PathKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PathKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self as u8).cmp(&(*other as u8))
    }
}

impl LatticePath {
    /// Validates steps for `kind`: allowed rises, never below the axis, ending on it.
    pub fn new(kind: PathKind, steps: Vec<i32>) -> Result<Self> {
        let mut height = 0i64;
        for (i, &s) in steps.iter().enumerate() {
            let allowed = match kind {
                PathKind::Motzkin => (-1..=1).contains(&s),
                PathKind::Dyck => s == 1 || s == -1,
                PathKind::Lukasiewicz => s >= -1,
            };
            if !allowed {
                return Err(Error::MalformedPath {
                    step: i,
                    reason: format!("rise {s} not allowed in a {kind:?} path"),
                });
            }
            height += s as i64;
            if height < 0 {
                return Err(Error::MalformedPath {
                    step: i,
                    reason: "goes below the axis".into(),
                });
            }
        }
        if height != 0 {
            return Err(Error::MalformedPath {
                step: steps.len(),
                reason: format!("ends at height {height}"),
            });
        }
        Ok(LatticePath { kind, steps })
    }

    fn from_trusted(kind: PathKind, steps: Vec<i32>) -> Self {
        debug_assert!(LatticePath::new(kind, steps.clone()).is_ok());
        LatticePath { kind, steps }
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn steps(&self) -> &[i32] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each step.
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, &s| {
                *h += s as i64;
                Some(*h)
            })
            .collect()
    }

    /// Touches the axis only at its (nonempty) end.
    pub fn is_primitive(&self) -> bool {
        let h = self.heights();
        !h.is_empty() && h[..h.len() - 1].iter().all(|&y| y >= 1)
    }

    pub fn parse(kind: PathKind, s: &str) -> Result<Self> {
        let s = s.trim();
        let steps = match kind {
            PathKind::Lukasiewicz => {
                if s.is_empty() {
                    Vec::new()
                } else {
                    s.split(',')
                        .map(|t| {
                            let t = t.trim();
                            t.strip_prefix('+')
                                .unwrap_or(t)
                                .parse::<i32>()
                                .map_err(|e| Error::Parse(format!("bad rise {t:?}: {e}")))
                        })
                        .collect::<Result<_>>()?
                }
            }
            PathKind::Motzkin | PathKind::Dyck => s
                .chars()
                .filter(|c| *c != 'ε')
                .map(|c| match c {
                    'U' => Ok(1),
                    'D' => Ok(-1),
                    'F' => Ok(0),
                    other => Err(Error::Parse(format!("bad step {other:?}"))),
                })
                .collect::<Result<_>>()?,
        };
        LatticePath::new(kind, steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PathKind::Lukasiewicz => {
                for (i, s) in self.steps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            PathKind::Motzkin | PathKind::Dyck => {
                for s in &self.steps {
                    f.write_str(match s {
                        1 => "U",
                        -1 => "D",
                        _ => "F",
                    })?;
                }
                Ok(())
            }
        }
    }
}

fn require_nonempty(w: &MotzkinWord) -> Result<()> {
    if w.is_empty() {
        return Err(Error::InvalidWord {
            position: 0,
            reason: crate::error::WordViolation::FirstNotOne,
        });
    }
    Ok(())
}

/// Motzkin word of length `n` to Motzkin path of length `n - 1`:
/// `psi(1) = ε`, `psi(1(1+u)) = F psi(u)`, `psi(1(1+u)v) = U psi(u) D psi(v)`
/// where `v` starts at the second letter equal to 1.
pub fn psi(w: &MotzkinWord) -> Result<LatticePath> {
    require_nonempty(w)?;
    let mut steps = Vec::with_capacity(w.len() - 1);
    psi_into(w.letters(), 0, &mut steps);
    Ok(LatticePath::from_trusted(PathKind::Motzkin, steps))
}

// `letters` minus `base` is a Motzkin word.
fn psi_into(letters: &[u32], base: u32, out: &mut Vec<i32>) {
    if letters.len() <= 1 {
        return;
    }
    match letters[1..].iter().position(|&l| l - base == 1) {
        None => {
            out.push(0);
            psi_into(&letters[1..], base + 1, out);
        }
        Some(k) => {
            let split = k + 1;
            out.push(1);
            psi_into(&letters[1..split], base + 1, out);
            out.push(-1);
            psi_into(&letters[split..], base, out);
        }
    }
}

pub fn psi_inv(path: &LatticePath) -> Result<MotzkinWord> {
    if path.kind != PathKind::Motzkin {
        return Err(Error::MalformedPath {
            step: 0,
            reason: format!("expected a Motzkin path, got {:?}", path.kind),
        });
    }
    let mut letters = Vec::with_capacity(path.len() + 1);
    psi_inv_into(&path.steps, 0, &mut letters);
    MotzkinWord::new(letters)
}

fn psi_inv_into(steps: &[i32], base: u32, out: &mut Vec<u32>) {
    out.push(base + 1);
    let Some(&first) = steps.first() else {
        return;
    };
    if first == 0 {
        psi_inv_into(&steps[1..], base + 1, out);
        return;
    }
    // U A D B with D the first return to height 0
    let mut h = 0;
    let close = steps
        .iter()
        .position(|&s| {
            h += s;
            h == 0
        })
        .expect("valid Motzkin path returns to the axis");
    psi_inv_into(&steps[1..close], base + 1, out);
    psi_inv_into(&steps[close + 1..], base, out);
}

/// Number of up steps.
pub fn up_steps(path: &LatticePath) -> usize {
    path.steps.iter().filter(|&&s| s == 1).count()
}

/// Catalan word (1-based: first letter 1, rises of at most 1) avoiding
/// `w[i] >= w[i+1] >= w[i+2]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RestrictedCatalanWord {
    letters: Vec<u32>,
}

impl RestrictedCatalanWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let bad = |position: usize, reason: &str| {
            Err(Error::InvalidCatalanWord {
                position,
                reason: reason.into(),
            })
        };
        if let Some(&first) = letters.first() {
            if first != 1 {
                return bad(0, "first letter not 1");
            }
        }
        for i in 1..letters.len() {
            if letters[i] == 0 {
                return bad(i, "letter below 1");
            }
            if letters[i] > letters[i - 1] + 1 {
                return bad(i, "rise larger than 1");
            }
            if i >= 2 && letters[i - 2] >= letters[i - 1] && letters[i - 1] >= letters[i] {
                return bad(i, "contains a weakly decreasing run of three");
            }
        }
        Ok(RestrictedCatalanWord { letters })
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
}

impl fmt::Display for RestrictedCatalanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        word::write_letters(f, &self.letters)
    }
}

impl FromStr for RestrictedCatalanWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RestrictedCatalanWord::new(word::parse_letters(s)?)
    }
}

/// Restricted Catalan word of length `n` to Motzkin word of length `n + 1`.
///
/// After the leading `1` (or `11`) the maximal block of letters `>= 2` is
/// `1+u`, and `v` is the rest, starting at the next `1`:
///
/// | input        | image                  |
/// |--------------|------------------------|
/// | `ε`          | `1`                    |
/// | `1(1+u)`     | `1(1+φ(u))`            |
/// | `1(1+u)v`    | `1(1+φ(ū))φ(v)`        |
/// | `11(1+u)`    | `1(1+φ(u))1`           |
/// | `11(1+u)v`   | `1(1+φ(ū))φ(v)1`       |
///
/// where `ū` is `u` without its last letter.
pub fn phi(c: &RestrictedCatalanWord) -> MotzkinWord {
    let mut out = Vec::with_capacity(c.len() + 1);
    phi_into(&c.letters, 0, &mut out);
    MotzkinWord::from_trusted(out)
}

// `letters` minus `base` is a restricted Catalan word; images are written
// shifted by `base` as well.
fn phi_into(letters: &[u32], base: u32, out: &mut Vec<u32>) {
    out.push(base + 1);
    if letters.is_empty() {
        return;
    }
    let double = letters.len() >= 2 && letters[1] - base == 1;
    let start = if double { 2 } else { 1 };
    let end = letters[start..]
        .iter()
        .position(|&l| l - base == 1)
        .map_or(letters.len(), |k| start + k);
    let block = &letters[start..end];
    if end == letters.len() {
        phi_into(block, base + 1, out);
    } else {
        let u_bar = &block[..block.len().saturating_sub(1)];
        phi_into(u_bar, base + 1, out);
        phi_into(&letters[end..], base, out);
    }
    if double {
        out.push(base + 1);
    }
}

/// All restricted Catalan words of length `n`, lexicographic.
pub fn generate_catalan_avoiding(n: usize) -> Result<Vec<RestrictedCatalanWord>> {
    let count = formulas::motzkin(n).to_biguint().unwrap_or_default();
    Limits::default().check("generate_catalan_avoiding", n, &count)?;
    let mut out = Vec::new();
    extend_catalan(n, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

fn extend_catalan(n: usize, prefix: &mut Vec<u32>, out: &mut Vec<RestrictedCatalanWord>) {
    if prefix.len() == n {
        out.push(RestrictedCatalanWord {
            letters: prefix.clone(),
        });
        return;
    }
    let top = prefix.last().map_or(1, |&h| h + 1);
    for next in 1..=top {
        let k = prefix.len();
        if k >= 2 && prefix[k - 2] >= prefix[k - 1] && prefix[k - 1] >= next {
            continue;
        }
        prefix.push(next);
        extend_catalan(n, prefix, out);
        prefix.pop();
    }
}

/// Word of length `n` to a primitive Łukasiewicz path of length `n + 1`
/// without flat steps. The heights after steps `1..=n` are the letters
/// read right to left, then the path drops to 0.
pub fn to_lukasiewicz(w: &MotzkinWord) -> Result<LatticePath> {
    require_nonempty(w)?;
    let mut heights: Vec<i64> = w.letters().iter().rev().map(|&l| l as i64).collect();
    heights.push(0);
    let mut prev = 0i64;
    let steps = heights
        .into_iter()
        .map(|h| {
            let s = (h - prev) as i32;
            prev = h;
            s
        })
        .collect();
    Ok(LatticePath::from_trusted(PathKind::Lukasiewicz, steps))
}

pub fn from_lukasiewicz(p: &LatticePath) -> Result<MotzkinWord> {
    let p = LatticePath::new(PathKind::Lukasiewicz, p.steps.clone())?;
    if let Some(i) = p.steps.iter().position(|&s| s == 0) {
        return Err(Error::HasFlatStep { step: i });
    }
    let heights = p.heights();
    if heights.is_empty() {
        return Err(Error::NotPrimitive { step: 0 });
    }
    if let Some(i) = heights[..heights.len() - 1].iter().position(|&h| h == 0) {
        return Err(Error::NotPrimitive { step: i });
    }
    let letters = heights[..heights.len() - 1]
        .iter()
        .rev()
        .map(|&h| h as u32)
        .collect();
    MotzkinWord::new(letters)
}

/// Word of length `n` to a Dyck path of semilength `n` avoiding `UDU`:
/// up step `i` ends at height `w[i]`; `w[i] - w[i+1] + 1` down steps follow
/// it, and `w[n]` after the last one.
pub fn to_dyck_udu(w: &MotzkinWord) -> LatticePath {
    let l = w.letters();
    let mut steps = Vec::with_capacity(2 * l.len());
    for (i, &h) in l.iter().enumerate() {
        steps.push(1);
        let downs = match l.get(i + 1) {
            Some(&next) => h + 1 - next,
            None => h,
        };
        steps.extend(std::iter::repeat_n(-1, downs as usize));
    }
    LatticePath::from_trusted(PathKind::Dyck, steps)
}

pub fn from_dyck_udu(p: &LatticePath) -> Result<MotzkinWord> {
    let p = LatticePath::new(PathKind::Dyck, p.steps.clone())?;
    if let Some(i) = p.steps.windows(3).position(|f| f == [1, -1, 1]) {
        return Err(Error::ContainsUdu { step: i });
    }
    let letters = p
        .steps
        .iter()
        .zip(p.heights())
        .filter(|(&s, _)| s == 1)
        .map(|(_, h)| h as u32)
        .collect();
    MotzkinWord::new(letters)
}

/// All Motzkin paths with `len` steps.
pub fn motzkin_paths(len: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    extend_path(len, &[1, 0, -1], &mut Vec::new(), 0, &mut out, |_, _| true);
    out.into_iter()
        .map(|s| LatticePath::from_trusted(PathKind::Motzkin, s))
        .collect()
}

/// All Dyck paths of semilength `n` with no factor `UDU`.
pub fn udu_avoiding_dyck_paths(n: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    extend_path(2 * n, &[1, -1], &mut Vec::new(), 0, &mut out, |p, s| {
        !(s == 1 && p.len() >= 2 && p[p.len() - 2..] == [1, -1])
    });
    out.into_iter()
        .map(|s| LatticePath::from_trusted(PathKind::Dyck, s))
        .collect()
}

/// All primitive Łukasiewicz paths with `len` steps and no flat step.
pub fn primitive_lukasiewicz_paths(len: usize) -> Vec<LatticePath> {
    let rises: Vec<i32> = std::iter::once(-1).chain(1..len as i32).collect();
    let mut out = Vec::new();
    extend_path(len, &rises, &mut Vec::new(), 0, &mut out, |p, s| {
        // proper prefixes stay strictly above the axis
        let h: i32 = p.iter().sum::<i32>() + s;
        h > 0 || p.len() + 1 == len
    });
    out.into_iter()
        .map(|s| LatticePath::from_trusted(PathKind::Lukasiewicz, s))
        .collect()
}

fn extend_path(
    len: usize,
    rises: &[i32],
    prefix: &mut Vec<i32>,
    height: i32,
    out: &mut Vec<Vec<i32>>,
    allow: impl Fn(&[i32], i32) -> bool + Copy,
) {
    if prefix.len() == len {
        if height == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let remaining = (len - prefix.len()) as i32;
    for &s in rises {
        let h = height + s;
        // every step descends by at most 1
        if h < 0 || h > remaining - 1 || !allow(prefix, s) {
            continue;
        }
        prefix.push(s);
        extend_path(len, rises, prefix, h, out, allow);
        prefix.pop();
    }
}

/// Names of the four word bijections, for batch and CLI use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BijectionMap {
    Psi,
    Phi,
    Luka,
    Dyck,
}

impl BijectionMap {
    pub fn name(self) -> &'static str {
        match self {
            BijectionMap::Psi => "psi",
            BijectionMap::Phi => "phi",
            BijectionMap::Luka => "luka",
            BijectionMap::Dyck => "dyck",
        }
    }

    /// Applies the map (or its inverse) to a serialized input.
    pub fn apply(self, input: &str, inverse: bool) -> Result<String> {
        Ok(match (self, inverse) {
            (BijectionMap::Psi, false) => psi(&input.parse()?)?.to_string(),
            (BijectionMap::Psi, true) => psi_inv(&LatticePath::parse(PathKind::Motzkin, input)?)?.to_string(),
            (BijectionMap::Phi, false) => phi(&input.parse()?).to_string(),
            (BijectionMap::Phi, true) => {
                return Err(Error::Parse("the inverse of phi is not provided".into()))
            }
            (BijectionMap::Luka, false) => to_lukasiewicz(&input.parse()?)?.to_string(),
            (BijectionMap::Luka, true) => {
                from_lukasiewicz(&LatticePath::parse(PathKind::Lukasiewicz, input)?)?.to_string()
            }
            (BijectionMap::Dyck, false) => to_dyck_udu(&input.parse()?).to_string(),
            (BijectionMap::Dyck, true) => {
                from_dyck_udu(&LatticePath::parse(PathKind::Dyck, input)?)?.to_string()
            }
        })
    }

    pub fn record(self, input: &str, inverse: bool) -> Result<BijectionRecord> {
        Ok(BijectionRecord {
            input: input.to_string(),
            map: if inverse {
                format!("{}-inverse", self.name())
            } else {
                self.name().to_string()
            },
            output: self.apply(input, inverse)?,
        })
    }
}

impl FromStr for BijectionMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => Ok(BijectionMap::Psi),
            "phi" => Ok(BijectionMap::Phi),
            "luka" => Ok(BijectionMap::Luka),
            "dyck" => Ok(BijectionMap::Dyck),
            other => Err(Error::Parse(format!("unknown map {other:?}"))),
        }
    }
}

/// One batch-mode result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRecord {
    pub input: String,
    pub map: String,
    pub output: String,
}

#[cfg(test)]
/// Exhaustive count helper for the bijection checks.
pub(crate) fn expected_words(n: usize) -> BigUint {
    if n == 0 {
        BigUint::from(1u32)
    } else {
        formulas::motzkin(n - 1).to_biguint().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn w(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    fn path(kind: PathKind, s: &str) -> LatticePath {
        LatticePath::parse(kind, s).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("12123453412")).unwrap().to_string(), "UDUFUFDFDF");
        assert!(psi(&w("1")).unwrap().is_empty());
        assert_eq!(psi(&w("12121")).unwrap().to_string(), "UDUD");
        assert_eq!(psi_inv(&path(PathKind::Motzkin, "UDUD")).unwrap(), w("12121"));
        assert!(psi(&MotzkinWord::empty()).is_err());
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inv(&path(PathKind::Motzkin, "")).unwrap(), w("1"));
        assert_eq!(
            psi_inv(&path(PathKind::Motzkin, "UDUFUFDFDF")).unwrap(),
            w("12123453412")
        );
        let images: BTreeSet<MotzkinWord> = motzkin_paths(4).iter().map(|p| psi_inv(p).unwrap()).collect();
        assert_eq!(images, word::generate_all(5).unwrap().into_iter().collect());
        assert!(matches!(
            LatticePath::parse(PathKind::Motzkin, "DU"),
            Err(Error::MalformedPath { step: 0, .. })
        ));
    }

    #[test]
    fn phi_examples() {
        let c: RestrictedCatalanWord = "1123231231".parse().unwrap();
        assert_eq!(phi(&c), w("12323123121"));
        assert_eq!(phi(&RestrictedCatalanWord::default()), w("1"));
        let c: RestrictedCatalanWord = "121".parse().unwrap();
        assert_eq!(phi(&c), w("1212"));
        assert!(matches!(
            "1221".parse::<RestrictedCatalanWord>(),
            Err(Error::InvalidCatalanWord { position: 3, .. })
        ));
        assert!("111".parse::<RestrictedCatalanWord>().is_err());
    }

    #[test]
    fn catalan_generation() {
        let two: Vec<String> = generate_catalan_avoiding(2)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(two, ["11", "12"]);
        assert_eq!(
            generate_catalan_avoiding(0).unwrap(),
            vec![RestrictedCatalanWord::default()]
        );
        assert_eq!(generate_catalan_avoiding(5).unwrap().len(), 21);
    }

    #[test]
    fn lukasiewicz_examples() {
        assert_eq!(to_lukasiewicz(&w("12")).unwrap().steps(), [2, -1, -1]);
        assert_eq!(to_lukasiewicz(&w("1")).unwrap().steps(), [1, -1]);
        let img: BTreeSet<LatticePath> = word::generate_all(5)
            .unwrap()
            .iter()
            .map(|x| to_lukasiewicz(x).unwrap())
            .collect();
        assert_eq!(img.len(), 9);
        assert_eq!(img, primitive_lukasiewicz_paths(6).into_iter().collect());
        assert_eq!(primitive_lukasiewicz_paths(3).len(), 1);
        assert_eq!(
            from_lukasiewicz(&path(PathKind::Lukasiewicz, "1,-1")).unwrap(),
            w("1")
        );
        assert_eq!(
            from_lukasiewicz(&path(PathKind::Lukasiewicz, "+2,-1,-1")).unwrap(),
            w("12")
        );
    }

    #[test]
    fn lukasiewicz_rejections() {
        let flat = LatticePath::new(PathKind::Lukasiewicz, vec![1, 0, -1]).unwrap();
        assert_eq!(from_lukasiewicz(&flat), Err(Error::HasFlatStep { step: 1 }));
        let twice = LatticePath::new(PathKind::Lukasiewicz, vec![1, -1, 1, -1]).unwrap();
        assert_eq!(from_lukasiewicz(&twice), Err(Error::NotPrimitive { step: 1 }));
        assert!(matches!(
            LatticePath::new(PathKind::Lukasiewicz, vec![2, -2]),
            Err(Error::MalformedPath { step: 1, .. })
        ));
    }

    #[test]
    fn dyck_examples() {
        let p = to_dyck_udu(&w("123212343"));
        assert_eq!(p.to_string(), "UUUDDUDDUUUUDDUDDD");
        let ups: Vec<i64> = p
            .steps()
            .iter()
            .zip(p.heights())
            .filter(|(&s, _)| s == 1)
            .map(|(_, h)| h)
            .collect();
        assert_eq!(ups, [1, 2, 3, 2, 1, 2, 3, 4, 3]);
        assert_eq!(to_dyck_udu(&w("1")).to_string(), "UD");
        let img: BTreeSet<LatticePath> = word::generate_all(5).unwrap().iter().map(to_dyck_udu).collect();
        assert_eq!(img, udu_avoiding_dyck_paths(5).into_iter().collect());
        assert_eq!(img.len(), 9);
    }

    #[test]
    fn dyck_inverse_examples() {
        assert_eq!(from_dyck_udu(&path(PathKind::Dyck, "UD")).unwrap(), w("1"));
        assert_eq!(
            from_dyck_udu(&path(PathKind::Dyck, "UUUDDUDDUUUUDDUDDD")).unwrap(),
            w("123212343")
        );
        assert_eq!(
            from_dyck_udu(&path(PathKind::Dyck, "UDUD")),
            Err(Error::ContainsUdu { step: 0 })
        );
        assert!(matches!(
            LatticePath::parse(PathKind::Dyck, "UUDDD"),
            Err(Error::MalformedPath { .. })
        ));
    }

    #[test]
    fn up_step_transport() {
        assert_eq!(up_steps(&path(PathKind::Motzkin, "UDUD")), 2);
        let p = psi(&w("12121")).unwrap();
        assert_eq!(up_steps(&p), 2);
        assert_eq!(word::stats(&w("12121")).sper, 2 * 5 - 2);
        for x in word::generate_all(7).unwrap() {
            let up = up_steps(&psi(&x).unwrap()) as u64;
            assert_eq!(word::stats(&x).sper, 14 - up, "{x}");
        }
    }

    #[test]
    fn batch_records() {
        let r = BijectionMap::Psi.record("12123453412", false).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"input":"12123453412","map":"psi","output":"UDUFUFDFDF"}"#
        );
        assert_eq!(BijectionMap::Dyck.apply("UUDD", true).unwrap(), "12");
        assert!(BijectionMap::Phi.apply("1", true).is_err());
        assert_eq!(BijectionMap::Luka.apply("12", false).unwrap(), "2,-1,-1");
        assert_eq!(BijectionMap::Luka.apply("2,-1,-1", true).unwrap(), "12");
    }

    #[test]
    fn family_counts() {
        for n in 1..=10 {
            let m = expected_words(n);
            assert_eq!(BigUint::from(motzkin_paths(n - 1).len()), m);
            assert_eq!(BigUint::from(udu_avoiding_dyck_paths(n).len()), m);
            assert_eq!(BigUint::from(primitive_lukasiewicz_paths(n + 1).len()), m);
            assert_eq!(BigUint::from(generate_catalan_avoiding(n - 1).unwrap().len()), m);
        }
    }
}
