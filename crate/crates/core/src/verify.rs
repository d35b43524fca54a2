//! Cross-check suite: enumeration against closed forms, series,
//! recurrences, bijections and embedded reference sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bijections::{self, LatticePath};
use crate::error::{Error, Result};
use crate::formulas::{self, StatTable};
use crate::series::brute::{self, FunctionalEquation};
use crate::series::poly::{Monomial, SparsePoly, Var};
use crate::series::{gf, SeriesName, TruncSeries};
use crate::word::{self, Limits, MotzkinWord, PolyominoStats};

/// Default largest word length the suite enumerates.
pub const DEFAULT_MAX_N: usize = 12;

// A001006, Motzkin numbers from n = 0.
const A001006: [u64; 15] = [
    1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
];
// A055217, total area of Motzkin polyominoes from n = 1.
const A055217: [u64; 10] = [1, 3, 10, 31, 96, 294, 897, 2727, 8272, 25048];
// A005717, n * m_{n-1} from n = 1.
const A005717: [u64; 10] = [1, 2, 6, 16, 45, 126, 357, 1016, 2907, 8350];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Counting,
    Pick,
    StatsGeometry,
    Bijections,
    SperUpSteps,
    SeriesVsBrute,
    FunctionalEquations,
    Triangles,
    TrinomialHeights,
    ClosedForms,
    OeisPrefixes,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Counting,
        Check::Pick,
        Check::StatsGeometry,
        Check::Bijections,
        Check::SperUpSteps,
        Check::SeriesVsBrute,
        Check::FunctionalEquations,
        Check::Triangles,
        Check::TrinomialHeights,
        Check::ClosedForms,
        Check::OeisPrefixes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Counting => "counting",
            Check::Pick => "pick",
            Check::StatsGeometry => "stats-geometry",
            Check::Bijections => "bijections",
            Check::SperUpSteps => "sper-up-steps",
            Check::SeriesVsBrute => "series-vs-brute",
            Check::FunctionalEquations => "functional-equations",
            Check::Triangles => "triangles",
            Check::TrinomialHeights => "trinomial-heights",
            Check::ClosedForms => "closed-forms",
            Check::OeisPrefixes => "oeis-prefixes",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Per-word statistic selectable for histograms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Area,
    Sper,
    Inter,
    Last,
}

impl Stat {
    pub const ALL: [Stat; 4] = [Stat::Area, Stat::Sper, Stat::Inter, Stat::Last];

    pub fn name(self) -> &'static str {
        match self {
            Stat::Area => "area",
            Stat::Sper => "sper",
            Stat::Inter => "inter",
            Stat::Last => "last",
        }
    }

    pub fn of(self, s: &PolyominoStats) -> u64 {
        match self {
            Stat::Area => s.area,
            Stat::Sper => s.sper,
            Stat::Inter => s.inter,
            Stat::Last => s.last as u64,
        }
    }

    fn bump(self, s: &mut PolyominoStats) {
        match self {
            Stat::Area => s.area += 1,
            Stat::Sper => s.sper += 1,
            Stat::Inter => s.inter += 1,
            Stat::Last => s.last += 1,
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

/// Exact distribution of `stat` over the words of length `n`.
pub fn histogram(n: usize, stat: Stat) -> Result<BTreeMap<u64, u64>> {
    let mut out = BTreeMap::new();
    for w in word::generate_all(n)? {
        *out.entry(stat.of(&word::stats(&w))).or_insert(0) += 1;
    }
    Ok(out)
}

/// The same distribution read off the closed-form generating function.
pub fn series_histogram(n: usize, stat: Stat) -> Result<BTreeMap<u64, BigInt>> {
    let (series, var) = match stat {
        Stat::Sper => (gf::s_xp(n)?, Var::P),
        Stat::Area => (gf::u_xq(n)?, Var::Q),
        Stat::Inter => (gf::h_interior_xq(n)?, Var::Q),
        Stat::Last => (gf::a_xv_lastsymbol(n)?, Var::V),
    };
    let mut out = BTreeMap::new();
    for (m, c) in series.coeff(n).terms() {
        out.insert(m[var.index()] as u64, c.to_integer());
    }
    Ok(out)
}

/// A deliberate fault, for checking that the suite notices it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Mutation {
    /// Adds 1 to one coefficient of a closed-form series.
    SeriesCoefficient {
        series: String,
        n: usize,
        monomial: Monomial,
    },
    /// Adds 1 to one entry of a computed triangle (`m`, `s`, `u`, `h` or `walks`).
    TableEntry { table: String, n: usize, i: i64 },
    /// Adds 1 to one statistic of one enumerated word.
    Statistic { n: usize, index: usize, stat: Stat },
    /// Drops the last enumerated word of length `n`.
    Count { n: usize },
    /// Adds 1 to one term of an embedded reference sequence.
    OeisPrefix { sequence: String, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

fn disc(location: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Discrepancy {
    Discrepancy {
        location: location.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub scope: Scope,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Pretty JSON; without timing the output is byte-stable across runs.
    pub fn to_json(&self, with_timing: bool) -> String {
        let mut r = self.clone();
        if !with_timing {
            for c in &mut r.checks {
                c.wall_time_ms = None;
            }
        }
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub limits: Option<Limits>,
    pub mutations: Vec<Mutation>,
}

pub fn run_suite(n_max: usize, selection: &[Check]) -> Result<CheckReport> {
    run_suite_with(n_max, selection, &SuiteOptions::default())
}

/// Runs the selected checks (all when `selection` is empty) concurrently.
pub fn run_suite_with(n_max: usize, selection: &[Check], opts: &SuiteOptions) -> Result<CheckReport> {
    let cap = opts.limits.map_or(DEFAULT_MAX_N, |l| l.max_exhaustive_len);
    if n_max == 0 || n_max > cap {
        return Err(Error::ResourceLimit(format!(
            "verify needs 1 <= n <= {cap}, got {n_max}"
        )));
    }
    let selected: BTreeSet<Check> = if selection.is_empty() {
        Check::ALL.into_iter().collect()
    } else {
        selection.iter().copied().collect()
    };
    let corpus = Corpus::build(n_max, opts)?;
    let mut checks: Vec<(Check, CheckResult)> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&check| {
                let corpus = &corpus;
                s.spawn(move || (check, corpus.run(check)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    checks.sort_by_key(|(c, _)| *c);
    Ok(CheckReport {
        n_max,
        checks: checks.into_iter().map(|(_, r)| r).collect(),
    })
}

type Outcome = Result<Option<Discrepancy>>;

struct Corpus<'a> {
    n_max: usize,
    /// `words[n]` holds the words of length `n`; index 0 is unused.
    words: Vec<Vec<MotzkinWord>>,
    stats: Vec<Vec<PolyominoStats>>,
    mutations: &'a [Mutation],
}

impl<'a> Corpus<'a> {
    fn build(n_max: usize, opts: &'a SuiteOptions) -> Result<Self> {
        let limits = opts.limits.unwrap_or_default();
        let mut words = vec![Vec::new()];
        let mut stats = vec![Vec::new()];
        for n in 1..=n_max {
            let mut ws = word::generate_all_with(n, &limits)?;
            if opts.mutations.contains(&Mutation::Count { n }) {
                ws.pop();
            }
            let mut st: Vec<PolyominoStats> = ws.iter().map(word::stats).collect();
            for m in &opts.mutations {
                if let Mutation::Statistic { n: mn, index, stat } = m {
                    if *mn == n {
                        if let Some(s) = st.get_mut(*index) {
                            stat.bump(s);
                        }
                    }
                }
            }
            words.push(ws);
            stats.push(st);
        }
        Ok(Corpus {
            n_max,
            words,
            stats,
            mutations: &opts.mutations,
        })
    }

    fn run(&self, check: Check) -> CheckResult {
        let start = Instant::now();
        let (from, outcome) = match check {
            Check::Counting => (1, self.counting()),
            Check::Pick => (1, self.pick()),
            Check::StatsGeometry => (1, self.stats_geometry()),
            Check::Bijections => (1, self.bijections()),
            Check::SperUpSteps => (1, self.sper_up_steps()),
            Check::SeriesVsBrute => (1, self.series_vs_brute()),
            Check::FunctionalEquations => (1, self.functional_equations()),
            Check::Triangles => (1, self.triangles()),
            Check::TrinomialHeights => (1, self.trinomial_heights()),
            Check::ClosedForms => (1, self.closed_forms()),
            Check::OeisPrefixes => (0, self.oeis_prefixes()),
        };
        let first_discrepancy = match outcome {
            Ok(d) => d,
            Err(e) => Some(disc("error", "no error", e)),
        };
        CheckResult {
            name: check.name().to_string(),
            scope: Scope { from, to: self.n_max },
            status: if first_discrepancy.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_discrepancy,
            wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
        }
    }

    fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n_max
    }

    fn entries(&self, n: usize) -> impl Iterator<Item = (&MotzkinWord, &PolyominoStats)> {
        self.words[n].iter().zip(&self.stats[n])
    }

    fn mutated_table(&self, mut t: StatTable) -> StatTable {
        for m in self.mutations {
            if let Mutation::TableEntry { table, n, i } = m {
                let row = t.row(*n);
                let c = i - t.first_col;
                if *table == t.name && c >= 0 && (c as usize) < row.len() {
                    let v = row[c as usize].clone();
                    t.set(*n, *i, v + 1);
                }
            }
        }
        t
    }

    fn mutated_series(&self, name: SeriesName, mut s: TruncSeries) -> TruncSeries {
        for m in self.mutations {
            if let Mutation::SeriesCoefficient { series, n, monomial } = m {
                if series == name.name() && *n <= s.order() {
                    let mut c = s.coeff(*n).clone();
                    c.add_term(*monomial, BigRational::one());
                    s.set_coeff(*n, c);
                }
            }
        }
        s
    }

    fn reference(&self, name: &str, values: &[u64]) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = values.iter().map(|&x| BigInt::from(x)).collect();
        for m in self.mutations {
            if let Mutation::OeisPrefix { sequence, index } = m {
                if sequence == name {
                    if let Some(x) = v.get_mut(*index) {
                        *x += 1;
                    }
                }
            }
        }
        v
    }

    fn counting(&self) -> Outcome {
        for n in self.lengths() {
            let expected = formulas::motzkin(n - 1);
            let actual = BigInt::from(self.words[n].len());
            if actual != expected {
                return Ok(Some(disc(format!("|M_{n}|"), expected, actual)));
            }
            let mut by_last = vec![0u64; n + 1];
            for w in &self.words[n] {
                by_last[w.last() as usize] += 1;
            }
            for (k, &count) in by_last.iter().enumerate().take(n + 1).skip(1) {
                let expected = formulas::m_nk(n, k);
                if BigInt::from(count) != expected {
                    return Ok(Some(disc(format!("|M_{{{n},{k}}}|"), expected, count)));
                }
            }
        }
        Ok(None)
    }

    fn pick(&self) -> Outcome {
        for n in self.lengths() {
            for (w, s) in self.entries(n) {
                let rhs = s.inter as i128 + s.sper as i128 - 1;
                if s.area as i128 != rhs {
                    return Ok(Some(disc(format!("n={n} w={w} area"), rhs, s.area)));
                }
            }
        }
        Ok(None)
    }

    fn stats_geometry(&self) -> Outcome {
        for n in self.lengths() {
            for (w, s) in self.entries(n) {
                let f = word::stats_formula(w);
                let pairs = [
                    ("area", f.area, s.area),
                    ("sper", f.sper, s.sper),
                    ("inter", f.inter, s.inter),
                    ("last", f.last as u64, s.last as u64),
                ];
                for (what, expected, actual) in pairs {
                    if expected != actual {
                        return Ok(Some(disc(format!("n={n} w={w} {what}"), expected, actual)));
                    }
                }
            }
        }
        Ok(None)
    }

    fn bijections(&self) -> Outcome {
        for n in self.lengths() {
            let words: BTreeSet<&MotzkinWord> = self.words[n].iter().collect();

            let mut images = BTreeSet::new();
            for w in &self.words[n] {
                let p = bijections::psi(w)?;
                let back = bijections::psi_inv(&p)?;
                if &back != w {
                    return Ok(Some(disc(format!("psi_inv(psi({w}))"), w, back)));
                }
                images.insert(p);
            }
            if let Some(d) = same_family("psi", n, &images, bijections::motzkin_paths(n - 1)) {
                return Ok(Some(d));
            }

            let mut phi_images = BTreeSet::new();
            for c in bijections::generate_catalan_avoiding(n - 1)? {
                let w = bijections::phi(&c);
                if !words.contains(&w) {
                    return Ok(Some(disc(format!("phi({c})"), "a word of the corpus", w)));
                }
                if !phi_images.insert(w.clone()) {
                    return Ok(Some(disc(
                        format!("phi({c})"),
                        "a new image",
                        format!("repeated {w}"),
                    )));
                }
            }
            if phi_images.len() != words.len() {
                return Ok(Some(disc(
                    format!("|phi(C_{})|", n - 1),
                    words.len(),
                    phi_images.len(),
                )));
            }

            let mut images = BTreeSet::new();
            for w in &self.words[n] {
                let p = bijections::to_lukasiewicz(w)?;
                let back = bijections::from_lukasiewicz(&p)?;
                if &back != w {
                    return Ok(Some(disc(
                        format!("from_lukasiewicz(to_lukasiewicz({w}))"),
                        w,
                        back,
                    )));
                }
                images.insert(p);
            }
            if let Some(d) = same_family(
                "lukasiewicz",
                n,
                &images,
                bijections::primitive_lukasiewicz_paths(n + 1),
            ) {
                return Ok(Some(d));
            }

            let mut images = BTreeSet::new();
            for w in &self.words[n] {
                let p = bijections::to_dyck_udu(w);
                let back = bijections::from_dyck_udu(&p)?;
                if &back != w {
                    return Ok(Some(disc(format!("from_dyck_udu(to_dyck_udu({w}))"), w, back)));
                }
                images.insert(p);
            }
            if let Some(d) = same_family("dyck", n, &images, bijections::udu_avoiding_dyck_paths(n)) {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    fn sper_up_steps(&self) -> Outcome {
        for n in self.lengths() {
            for (w, s) in self.entries(n) {
                let ups = bijections::up_steps(&bijections::psi(w)?) as u64;
                let expected = 2 * n as u64 - ups;
                if s.sper != expected {
                    return Ok(Some(disc(format!("n={n} w={w} sper"), expected, s.sper)));
                }
            }
        }
        Ok(None)
    }

    /// Generating function of the corpus with `x^n` and the given exponents.
    fn corpus_series(&self, exps: impl Fn(&PolyominoStats) -> Monomial) -> TruncSeries {
        let mut coeffs = vec![SparsePoly::zero()];
        for n in self.lengths() {
            let mut c = SparsePoly::zero();
            for s in &self.stats[n] {
                c.add_term(exps(s), BigRational::one());
            }
            coeffs.push(c);
        }
        TruncSeries::from_coeffs(coeffs)
    }

    fn corpus_total(&self, f: impl Fn(&PolyominoStats) -> u64) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero()];
        for n in self.lengths() {
            out.push(self.stats[n].iter().map(|s| BigInt::from(f(s))).sum());
        }
        out
    }

    fn closed(&self, name: SeriesName, level: Option<usize>) -> Result<TruncSeries> {
        Ok(self.mutated_series(name, name.build(self.n_max, level)?))
    }

    fn series_vs_brute(&self) -> Outcome {
        let order = self.n_max;
        let b = self.corpus_series(|s| [s.sper as u32, s.area as u32, s.last - 1]);
        let interior = self.corpus_series(|s| [0, s.inter as u32, s.last - 1]);

        let a_pv = self.closed(SeriesName::SperLast, None)?;
        let pairs = [
            (
                SeriesName::Sper,
                b.eval_at_one(Var::Q).eval_at_one(Var::V),
                self.closed(SeriesName::Sper, None)?,
            ),
            (
                SeriesName::SperLast,
                b.eval_at_one(Var::Q).with_caps(a_pv.caps()),
                a_pv,
            ),
            (
                SeriesName::LastSymbol,
                b.eval_at_one(Var::P)
                    .eval_at_one(Var::Q)
                    .mul_poly(&SparsePoly::var(Var::V)),
                self.closed(SeriesName::LastSymbol, None)?,
            ),
            (
                SeriesName::Area,
                b.eval_at_one(Var::P).eval_at_one(Var::V),
                self.closed(SeriesName::Area, None)?,
            ),
            (
                SeriesName::Interior,
                interior.eval_at_one(Var::V),
                self.closed(SeriesName::Interior, None)?,
            ),
        ];
        for (name, enumerated, closed) in pairs {
            if let Some(d) = series_difference(name.name(), &closed, &enumerated) {
                return Ok(Some(d));
            }
        }

        // linear sequences: totals, counts and level cells
        let counts: Vec<BigInt> = std::iter::once(BigInt::zero())
            .chain(self.lengths().map(|n| BigInt::from(self.words[n].len())))
            .collect();
        let m = self.closed(SeriesName::Motzkin, None)?;
        for n in self.lengths() {
            let expected = m.coeff(n - 1).constant_term().to_integer();
            if counts[n] != expected {
                return Ok(Some(disc(format!("M at x^{}", n - 1), expected, &counts[n])));
            }
        }
        let totals = [
            (SeriesName::SperTotal, self.corpus_total(|s| s.sper)),
            (SeriesName::AreaTotal, self.corpus_total(|s| s.area)),
            (SeriesName::InteriorTotal, self.corpus_total(|s| s.inter)),
            (SeriesName::LastTotal, self.corpus_total(|s| s.last as u64)),
        ];
        for (name, enumerated) in totals {
            let closed = self.closed(name, None)?;
            if let Some(d) = sequence_difference(name.name(), &closed, &enumerated) {
                return Ok(Some(d));
            }
        }
        for i in 1..=order {
            let cells = self.corpus_total(|s| s.height_histogram.get(&(i as u32)).copied().unwrap_or(0));
            let closed = self.closed(SeriesName::LevelTotal, Some(i))?;
            if let Some(d) = sequence_difference(&format!("B_{i}"), &closed, &cells) {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    fn functional_equations(&self) -> Outcome {
        let b = self.corpus_series(|s| [s.sper as u32, s.area as u32, s.last - 1]);
        let interior = self.corpus_series(|s| [0, s.inter as u32, s.last - 1]);
        for (eq, series) in [
            (FunctionalEquation::LastColumn, b),
            (FunctionalEquation::Interior, interior),
        ] {
            let r = brute::residual_report(eq, &series)?;
            if let Some(res) = r.residual {
                let place = SparsePoly::term(BigRational::one(), res.monomial).render(true);
                return Ok(Some(disc(
                    format!("{} residual at x^{} {place}", eq.name(), res.n),
                    0,
                    res.value,
                )));
            }
        }
        Ok(None)
    }

    fn triangles(&self) -> Outcome {
        let n_max = self.n_max;
        let by_last = |f: &dyn Fn(&PolyominoStats) -> u64| {
            let mut t = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
            for n in self.lengths() {
                for s in &self.stats[n] {
                    t[n][s.last as usize] += f(s);
                }
            }
            t
        };
        let checks: [(StatTable, Vec<Vec<BigInt>>); 3] = [
            (formulas::m_table(n_max), by_last(&|_| 1)),
            (formulas::s_table(n_max), by_last(&|s| s.sper)),
            (formulas::u_table(n_max), by_last(&|s| s.area)),
        ];
        for (table, enumerated) in checks {
            let table = self.mutated_table(table);
            for n in self.lengths() {
                for (i, expected) in enumerated[n].iter().enumerate().take(n + 1).skip(1) {
                    let got = table.get(n, i as i64);
                    if got != *expected {
                        return Ok(Some(disc(format!("{}({n},{i})", table.name), expected, got)));
                    }
                }
            }
        }

        let h = self.mutated_table(formulas::h_table(n_max));
        let g = self.mutated_table(formulas::walks(n_max));
        for n in self.lengths() {
            let mut levels = vec![0u64; n + 1];
            for s in &self.stats[n] {
                for (&level, &c) in &s.height_histogram {
                    levels[level as usize] += c;
                }
            }
            for (i, &count) in levels.iter().enumerate().take(n + 1).skip(1) {
                let got = h.get(n, i as i64);
                if got != BigInt::from(count) {
                    return Ok(Some(disc(format!("h({n},{i})"), count, got)));
                }
                let walk = g.get(n, i as i64);
                if walk != got {
                    return Ok(Some(disc(format!("walks({n},{i})"), got, walk)));
                }
            }
        }
        Ok(None)
    }

    fn trinomial_heights(&self) -> Outcome {
        let h = self.mutated_table(formulas::h_table(self.n_max));
        for n in self.lengths() {
            let mut levels = vec![0u64; n + 1];
            for s in &self.stats[n] {
                for (&level, &c) in &s.height_histogram {
                    levels[level as usize] += c;
                }
            }
            for i in 0..n {
                let t = formulas::trinomial(n, i as i64);
                let from_words = BigInt::from(levels[n - i]);
                if from_words != t {
                    return Ok(Some(disc(
                        format!("cells at level {} for n={n}", n - i),
                        &t,
                        from_words,
                    )));
                }
                let from_table = h.get(n, (n - i) as i64);
                if from_table != t {
                    return Ok(Some(disc(format!("h({n},{})", n - i), t, from_table)));
                }
            }
        }
        Ok(None)
    }

    fn closed_forms(&self) -> Outcome {
        let s = self.corpus_total(|s| s.sper);
        let u = self.corpus_total(|s| s.area);
        let int = self.corpus_total(|s| s.inter);
        let last = self.corpus_total(|s| s.last as u64);
        for n in self.lengths() {
            let m = formulas::motzkin(n - 1);
            let t = formulas::central_trinomial(n);
            let three = BigInt::from(3u32).pow(n as u32);
            let rows = [
                ("s", formulas::s_total(n), &s[n]),
                ("u", formulas::u_total(n), &u[n]),
                ("int", formulas::int_total(n), &int[n]),
                ("lastsym", formulas::lastsym_total(n), &last[n]),
            ];
            for (what, expected, actual) in rows {
                if &expected != actual {
                    return Ok(Some(disc(format!("{what}({n})"), expected, actual)));
                }
            }
            let lhs = BigInt::from(2) * &u[n] + &t;
            if lhs != three {
                return Ok(Some(disc(format!("2u({n}) + T_{n}"), three, lhs)));
            }
            let rhs = &int[n] + &s[n] - &m;
            if u[n] != rhs {
                return Ok(Some(disc(format!("int({n}) + s({n}) - m_{}", n - 1), &u[n], rhs)));
            }
        }
        Ok(None)
    }

    fn oeis_prefixes(&self) -> Outcome {
        let a001006 = self.reference("A001006", &A001006);
        for (n, v) in a001006.iter().enumerate() {
            let c = formulas::motzkin(n);
            if &c != v {
                return Ok(Some(disc(format!("A001006 n={n}"), v, c)));
            }
            if n < self.n_max && BigInt::from(self.words[n + 1].len()) != *v {
                return Ok(Some(disc(
                    format!("A001006 n={n} vs |M_{}|", n + 1),
                    v,
                    self.words[n + 1].len(),
                )));
            }
        }
        let u = self.corpus_total(|s| s.area);
        for (k, v) in self.reference("A055217", &A055217).iter().enumerate() {
            let n = k + 1;
            let c = formulas::u_total(n);
            if &c != v {
                return Ok(Some(disc(format!("A055217 n={n}"), v, c)));
            }
            if n <= self.n_max && &u[n] != v {
                return Ok(Some(disc(format!("A055217 n={n} vs enumeration"), v, &u[n])));
            }
        }
        let h = formulas::h_table(A005717.len());
        for (k, v) in self.reference("A005717", &A005717).iter().enumerate() {
            let n = k + 1;
            let c = h.get(n, 1);
            if &c != v {
                return Ok(Some(disc(format!("A005717 n={n}"), v, c)));
            }
        }
        Ok(None)
    }
}

fn same_family(
    map: &str,
    n: usize,
    images: &BTreeSet<LatticePath>,
    family: Vec<LatticePath>,
) -> Option<Discrepancy> {
    let family: BTreeSet<LatticePath> = family.into_iter().collect();
    if let Some(p) = family.difference(images).next() {
        return Some(disc(
            format!("{map} image for n={n}"),
            format!("contains {p}"),
            "missing",
        ));
    }
    if let Some(p) = images.difference(&family).next() {
        return Some(disc(format!("{map} image for n={n}"), "a path of the family", p));
    }
    None
}

fn series_difference(name: &str, closed: &TruncSeries, enumerated: &TruncSeries) -> Option<Discrepancy> {
    let order = closed.order().min(enumerated.order());
    let (a, b) = (closed.truncate_order(order), enumerated.truncate_order(order));
    a.first_difference(&b).map(|(n, m, e, g)| {
        let place = SparsePoly::term(BigRational::one(), m).render(true);
        disc(format!("{name} at x^{n} {place}"), e, g)
    })
}

fn sequence_difference(name: &str, closed: &TruncSeries, enumerated: &[BigInt]) -> Option<Discrepancy> {
    for (n, v) in enumerated.iter().enumerate().skip(1) {
        let c = closed.coeff(n).constant_term().to_integer();
        if n <= closed.order() && &c != v {
            return Some(disc(format!("{name} at x^{n}"), c, v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = run_suite(7, &[]).unwrap();
        assert!(r.passed(), "{}", r.to_json(false));
        assert_eq!(r.checks.len(), Check::ALL.len());
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, Check::ALL.map(Check::name));
    }

    #[test]
    fn report_is_stable() {
        let a = run_suite(5, &[]).unwrap().to_json(false);
        let b = run_suite(5, &[]).unwrap().to_json(false);
        assert_eq!(a, b);
        let parsed: CheckReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.to_json(false), a);
        assert!(!a.contains("wall_time_ms"));
        assert!(run_suite(5, &[]).unwrap().to_json(true).contains("wall_time_ms"));
    }

    #[test]
    fn selection_and_bounds() {
        let r = run_suite(4, &[Check::Pick, Check::Counting]).unwrap();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["counting", "pick"]);
        assert!(run_suite(0, &[]).is_err());
        assert!(matches!(run_suite(13, &[]), Err(Error::ResourceLimit(_))));
        assert_eq!("series-vs-brute".parse::<Check>().unwrap(), Check::SeriesVsBrute);
    }

    #[test]
    fn histograms() {
        let sper = histogram(5, Stat::Sper).unwrap();
        assert_eq!(sper, BTreeMap::from([(8, 2), (9, 6), (10, 1)]));
        let area = histogram(5, Stat::Area).unwrap();
        assert_eq!(
            area,
            BTreeMap::from([(7, 1), (9, 3), (11, 2), (12, 1), (13, 1), (15, 1)])
        );
        for stat in Stat::ALL {
            assert_eq!(histogram(1, stat).unwrap().len(), 1);
            let h = histogram(6, stat).unwrap();
            let s = series_histogram(6, stat).unwrap();
            let h: BTreeMap<u64, BigInt> = h.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
            assert_eq!(h, s, "{stat}");
        }
    }

    fn caught(m: Mutation) -> Vec<String> {
        let opts = SuiteOptions {
            limits: None,
            mutations: vec![m],
        };
        run_suite_with(6, &[], &opts)
            .unwrap()
            .failures()
            .map(|c| c.name.clone())
            .collect()
    }

    #[test]
    fn mutations_are_caught() {
        let f = caught(Mutation::SeriesCoefficient {
            series: "S".into(),
            n: 5,
            monomial: [9, 0, 0],
        });
        assert_eq!(f, ["series-vs-brute"]);
        let f = caught(Mutation::TableEntry {
            table: "u".into(),
            n: 4,
            i: 2,
        });
        assert_eq!(f, ["triangles"]);
        let f = caught(Mutation::Statistic {
            n: 5,
            index: 3,
            stat: Stat::Sper,
        });
        assert!(
            f.contains(&"pick".to_string()) && f.contains(&"stats-geometry".to_string()),
            "{f:?}"
        );
        let f = caught(Mutation::Count { n: 6 });
        assert!(f.contains(&"counting".to_string()), "{f:?}");
        let f = caught(Mutation::OeisPrefix {
            sequence: "A055217".into(),
            index: 3,
        });
        assert_eq!(f, ["oeis-prefixes"]);
    }
}
