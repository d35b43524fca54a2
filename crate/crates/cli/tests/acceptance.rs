//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use motzkin::bijections::{self, LatticePath, PathKind, RestrictedCatalanWord};
use motzkin::formulas::{self, Asymptotic};
use motzkin::series::brute::{brute_gf, brute_interior_gf, check_functional_equation, FunctionalEquation};
use motzkin::series::{gf, Var};
use motzkin::series::{SparsePoly, TruncSeries};
use motzkin::verify::{self, Check, Stat};
use motzkin::word::{self, MotzkinWord};
use num_bigint::BigInt;

// Pinned limits.
const COUNTING_BUDGET: Duration = Duration::from_secs(5);
const SERIES_BUDGET: Duration = Duration::from_secs(60);
const SUITE_BUDGET: Duration = Duration::from_secs(120);
const RATIO_BAND: (f64, f64) = (0.5, 1.5);
const SPER_TOLERANCE: f64 = 0.05;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn w(s: &str) -> MotzkinWord {
    s.parse().expect("valid word")
}

fn within(budget: Duration, start: Instant, what: &str) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("{what} took {t:?}, budget {budget:?}"))?;
    Ok(format!("{t:.2?} (budget {budget:?})"))
}

fn counting() -> Outcome {
    let start = Instant::now();
    let printed = ints(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]);
    let m: Vec<BigInt> = (0..=10).map(formulas::motzkin).collect();
    ensure(m == printed, || format!("m_0..m_10 = {m:?}"))?;
    for n in 1..=14 {
        let len = word::generate_all(n).map_err(|e| e.to_string())?.len();
        ensure(BigInt::from(len) == formulas::motzkin(n - 1), || {
            format!("|M_{n}| = {len}")
        })?;
    }
    within(COUNTING_BUDGET, start, "counting")
}

fn golden_m5() -> Outcome {
    let got: Vec<String> = word::generate_all(5)
        .unwrap()
        .iter()
        .map(|w| w.to_string())
        .collect();
    let printed = [
        "12121", "12123", "12312", "12321", "12323", "12341", "12342", "12343", "12345",
    ];
    ensure(got == printed, || format!("M_5 = {got:?}"))?;
    Ok("nine words verbatim".into())
}

fn histogram(n: usize, stat: Stat) -> BTreeMap<u64, u64> {
    verify::histogram(n, stat).unwrap()
}

fn statistics() -> Outcome {
    let s = word::stats(&w("12341"));
    ensure((s.area, s.sper, s.inter) == (11, 9, 3), || {
        format!("stats(12341) = {s:?}")
    })?;
    let sper = BTreeMap::from([(8, 2), (9, 6), (10, 1)]);
    ensure(histogram(5, Stat::Sper) == sper, || "sper histogram".into())?;
    let area = BTreeMap::from([(7, 1), (9, 3), (11, 2), (12, 1), (13, 1), (15, 1)]);
    ensure(histogram(5, Stat::Area) == area, || "area histogram".into())?;
    let inter = BTreeMap::from([(0, 1), (1, 2), (2, 1), (3, 2), (4, 1), (5, 1), (6, 1)]);
    ensure(histogram(5, Stat::Inter) == inter, || "interior histogram".into())?;
    Ok("12341 -> (11, 9, 3); three n=5 histograms".into())
}

fn same(name: &str, a: &TruncSeries, b: &TruncSeries) -> Result<(), String> {
    match a.first_difference(b) {
        None => Ok(()),
        Some((n, m, x, y)) => Err(format!("{name}: x^{n} {m:?}: {x} vs {y}")),
    }
}

fn series_vs_brute() -> Outcome {
    let start = Instant::now();
    let order = 12;
    let b = brute_gf(order).map_err(|e| e.to_string())?;
    let h = brute_interior_gf(order).map_err(|e| e.to_string())?;
    let apv = gf::a_xpv(order).unwrap();
    same(
        "S",
        &b.eval_at_one(Var::Q).eval_at_one(Var::V),
        &gf::s_xp(order).unwrap(),
    )?;
    same("A(x;p,1;v)", &b.eval_at_one(Var::Q).with_caps(apv.caps()), &apv)?;
    let av = b
        .eval_at_one(Var::P)
        .eval_at_one(Var::Q)
        .mul_poly(&SparsePoly::var(Var::V));
    same("A(x;1,1;v) v", &av, &gf::a_xv_lastsymbol(order).unwrap())?;
    same(
        "U",
        &b.eval_at_one(Var::P).eval_at_one(Var::V),
        &gf::u_xq(order).unwrap(),
    )?;
    same("H", &h.eval_at_one(Var::V), &gf::h_interior_xq(order).unwrap())?;
    within(SERIES_BUDGET, start, "series")
}

fn functional_equations() -> Outcome {
    for eq in [FunctionalEquation::LastColumn, FunctionalEquation::Interior] {
        let r = check_functional_equation(eq, 10).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{}: {:?}", eq.name(), r.residual))?;
    }
    Ok("both residuals vanish to x^10".into())
}

fn continued_fraction() -> Outcome {
    let cf = gf::continued_fraction_xq(12).unwrap();
    let one_plus_u = &TruncSeries::one(12) + &gf::u_xq(12).unwrap();
    same("1 + U vs CF", &cf.with_caps(one_plus_u.caps()), &one_plus_u)?;
    Ok("equal to x^12".into())
}

fn closed_forms() -> Outcome {
    let s_gf = gf::total_sper_gf(20).unwrap();
    let u_gf = gf::total_area_gf(20).unwrap();
    let int_gf = gf::total_inter_gf(20).unwrap();
    let three = BigInt::from(3);
    for n in 1..=20usize {
        let t = formulas::central_trinomial(n);
        let t1 = formulas::central_trinomial(n - 1);
        let m = formulas::motzkin(n - 1);
        let p = pow(&three, n);
        let s = formulas::s_total(n);
        let u = formulas::u_total(n);
        let int = formulas::int_total(n);
        ensure(s == &t + 2 * &t1 - &m, || format!("s({n})"))?;
        ensure(BigInt::from(2) * &u == &p - &t, || format!("u({n})"))?;
        ensure(BigInt::from(2) * &int == &p - 3 * &t - 4 * &t1 + 4 * &m, || {
            format!("int({n})")
        })?;
        // follows from u(n) = (3^n - T_n)/2
        ensure(BigInt::from(2) * &u + &t == p, || format!("2u({n}) + T_{n}"))?;
        ensure(u == &int + &s - &m, || format!("u({n}) = int + s - m"))?;
        for (name, series, value) in [("s", &s_gf, &s), ("u", &u_gf, &u), ("int", &int_gf, &int)] {
            let c = series.coeff(n).constant_term().to_integer();
            ensure(&c == value, || {
                format!("{name}({n}) generating function gives {c}")
            })?;
        }
    }
    let seq = |f: fn(usize) -> BigInt, r: std::ops::RangeInclusive<usize>| r.map(f).collect::<Vec<_>>();
    ensure(
        seq(formulas::s_total, 1..=10) == ints(&[2, 4, 11, 29, 80, 222, 624, 1766, 5030, 14396]),
        || "s list".into(),
    )?;
    ensure(
        seq(formulas::u_total, 1..=10) == ints(&[1, 3, 10, 31, 96, 294, 897, 2727, 8272, 25048]),
        || "u list".into(),
    )?;
    ensure(
        seq(formulas::int_total, 3..=10) == ints(&[1, 6, 25, 93, 324, 1088, 3565, 11487]),
        || "int list".into(),
    )?;
    Ok("n <= 20, printed lists to n = 10".into())
}

fn pow(b: &BigInt, e: usize) -> BigInt {
    (0..e).fold(BigInt::from(1), |acc, _| acc * b)
}

fn triangles() -> Outcome {
    let s_printed: [&[i64]; 6] = [
        &[2],
        &[0, 4],
        &[5, 0, 6],
        &[7, 14, 0, 8],
        &[25, 18, 27, 0, 10],
        &[61, 72, 33, 44, 0, 12],
    ];
    let u_printed: [&[i64]; 6] = [
        &[1],
        &[0, 3],
        &[4, 0, 6],
        &[7, 14, 0, 10],
        &[27, 21, 33, 0, 15],
        &[75, 89, 45, 64, 0, 21],
    ];
    let s = formulas::s_table(6);
    let u = formulas::u_table(6);
    for n in 1..=6 {
        ensure(s.row(n) == ints(s_printed[n - 1]).as_slice(), || {
            format!("s row {n}: {:?}", s.row(n))
        })?;
        ensure(u.row(n) == ints(u_printed[n - 1]).as_slice(), || {
            format!("u row {n}: {:?}", u.row(n))
        })?;
    }
    let h = formulas::h_table(20);
    ensure(h.row(5) == ints(&[45, 30, 15, 5, 1]).as_slice(), || {
        format!("h(5,.) = {:?}", h.row(5))
    })?;
    for n in 1..=20usize {
        for i in 0..n {
            ensure(
                h.get(n, (n - i) as i64) == formulas::trinomial(n, i as i64),
                || format!("h({n},{})", n - i),
            )?;
        }
    }
    let row8: Vec<BigInt> = (0..8).map(|i| formulas::trinomial(8, i)).collect();
    ensure(row8 == ints(&[1, 8, 36, 112, 266, 504, 784, 1016]), || {
        format!("T(8,.) = {row8:?}")
    })?;
    Ok("printed arrays, h(5,.), h/T diagonal to n = 20".into())
}

fn bijection_criterion() -> Outcome {
    let p = bijections::psi(&w("12123453412")).unwrap();
    ensure(p.to_string() == "UDUFUFDFDF", || format!("psi = {p}"))?;
    let c: RestrictedCatalanWord = "1123231231".parse().unwrap();
    let img = bijections::phi(&c);
    ensure(img == w("12323123121"), || format!("phi = {img}"))?;

    for n in 1..=12usize {
        let words = word::generate_all(n).unwrap();
        let all: BTreeSet<&MotzkinWord> = words.iter().collect();
        let mut psi_img = BTreeSet::new();
        let mut luka_img = BTreeSet::new();
        let mut dyck_img = BTreeSet::new();
        for x in &words {
            let p = bijections::psi(x).unwrap();
            ensure(&bijections::psi_inv(&p).unwrap() == x, || {
                format!("psi round trip {x}")
            })?;
            let sper = word::stats(x).sper as usize;
            ensure(sper == 2 * n - bijections::up_steps(&p), || {
                format!("transport {x}")
            })?;
            psi_img.insert(p);
            let l = bijections::to_lukasiewicz(x).unwrap();
            ensure(&bijections::from_lukasiewicz(&l).unwrap() == x, || {
                format!("luka round trip {x}")
            })?;
            luka_img.insert(l);
            let d = bijections::to_dyck_udu(x);
            ensure(&bijections::from_dyck_udu(&d).unwrap() == x, || {
                format!("dyck round trip {x}")
            })?;
            dyck_img.insert(d);
        }
        let family = |v: Vec<LatticePath>| v.into_iter().collect::<BTreeSet<_>>();
        ensure(psi_img == family(bijections::motzkin_paths(n - 1)), || {
            format!("psi onto, n={n}")
        })?;
        ensure(
            luka_img == family(bijections::primitive_lukasiewicz_paths(n + 1)),
            || format!("luka onto, n={n}"),
        )?;
        ensure(dyck_img == family(bijections::udu_avoiding_dyck_paths(n)), || {
            format!("dyck onto, n={n}")
        })?;
        ensure(dyck_img.iter().all(|d| d.kind() == PathKind::Dyck), || {
            "kind".into()
        })?;

        let catalan = bijections::generate_catalan_avoiding(n - 1).unwrap();
        let phi_img: BTreeSet<MotzkinWord> = catalan.iter().map(bijections::phi).collect();
        ensure(phi_img.len() == catalan.len(), || format!("phi injective, n={n}"))?;
        ensure(
            phi_img.iter().all(|x| all.contains(x)) && phi_img.len() == all.len(),
            || format!("phi onto, n={n}"),
        )?;
    }
    Ok("examples; four maps bijective and transport holds for n <= 12".into())
}

fn pick() -> Outcome {
    let mut count = 0usize;
    for n in 1..=12 {
        for x in word::generate_all(n).unwrap() {
            let s = word::stats(&x);
            ensure(s.area + 1 == s.inter + s.sper, || format!("{x}: {s:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} words"))
}

fn asymptotics() -> Outcome {
    let mut notes = Vec::new();
    for name in [Asymptotic::Gn, Asymptotic::Sn, Asymptotic::Un, Asymptotic::Intn] {
        let r20 = formulas::asymptotic(name, 20).ratio;
        let r60 = formulas::asymptotic(name, 60).ratio;
        ensure(RATIO_BAND.0 < r60 && r60 < RATIO_BAND.1, || {
            format!("{name:?}: ratio {r60} at n=60")
        })?;
        ensure((r60 - 1.0).abs() < (r20 - 1.0).abs(), || {
            format!("{name:?}: {r20} -> {r60}")
        })?;
        notes.push(format!("{}={r60:.3}", name.name()));
    }
    let e = formulas::asymptotic(Asymptotic::ExpectedSper, 60);
    ensure((e.ratio - 1.0).abs() < SPER_TOLERANCE, || {
        format!("expected sper ratio {}", e.ratio)
    })?;
    notes.push(format!("sper/(5n/3)={:.4}", e.ratio));
    Ok(notes.join(" "))
}

fn full_suite() -> Outcome {
    let start = Instant::now();
    let report = verify::run_suite(12, &[]).map_err(|e| e.to_string())?;
    let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    ensure(failed.is_empty(), || format!("failed checks {failed:?}"))?;
    ensure(report.checks.len() == Check::ALL.len(), || {
        "missing checks".into()
    })?;
    let status = Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(["verify", "--n", "12"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.code() == Some(0), || {
        format!("verify exited with {status}")
    })?;
    within(SUITE_BUDGET, start, "verify --n 12")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("counting", counting),
        ("M_5 golden set", golden_m5),
        ("statistics goldens", statistics),
        ("series vs brute force", series_vs_brute),
        ("functional equations", functional_equations),
        ("continued fraction", continued_fraction),
        ("closed-form sequences", closed_forms),
        ("triangles", triangles),
        ("bijections", bijection_criterion),
        ("pick identity", pick),
        ("asymptotics", asymptotics),
        ("full verify suite", full_suite),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
