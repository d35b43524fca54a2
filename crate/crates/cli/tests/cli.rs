use std::process::{Command, Output};

use motzkin::bijections::BijectionMap;
use motzkin::export::{self, Format};
use motzkin::formulas::Sequence;
use motzkin::series::SeriesName;
use motzkin::word;

fn motzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = motzkin(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn stats_of_a_word() {
    assert_eq!(
        stdout(&["stats", "--word", "12341"]),
        "area=11 sper=9 inter=3 last=1\n"
    );
    let j: serde_json::Value =
        serde_json::from_str(&stdout(&["stats", "--word", "12341", "--format", "json"])).unwrap();
    assert_eq!(j["area"], 11);
    assert_eq!(j["inter"], 3);
}

#[test]
fn histogram_output() {
    assert_eq!(
        stdout(&["stats", "--n", "5", "--stat", "sper", "--histogram"]),
        "8 2\n9 6\n10 1\n"
    );
    let j: serde_json::Value = serde_json::from_str(&stdout(&[
        "stats",
        "--n",
        "5",
        "--stat",
        "area",
        "--histogram",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(j["histogram"]["9"], 3);
}

#[test]
fn series_in_monomial_style() {
    assert_eq!(
        stdout(&["series", "--name", "S", "--order", "4"]),
        "p^2 x + p^4 x^2 + (p^5+p^6) x^3 + (3p^7+p^8) x^4\n"
    );
    let lib = SeriesName::Area.build(6, None).unwrap();
    assert_eq!(
        stdout(&["series", "--name", "U", "--order", "6"]),
        format!("{lib}\n")
    );
    let j = stdout(&[
        "series", "--name", "Bi", "--order", "5", "--i", "2", "--format", "json",
    ]);
    let parsed: motzkin::series::SeriesJson = serde_json::from_str(&j).unwrap();
    let back = motzkin::series::TruncSeries::from_json(&parsed).unwrap();
    assert_eq!(back, SeriesName::LevelTotal.build(5, Some(2)).unwrap());
}

#[test]
fn bijections() {
    assert_eq!(
        stdout(&["bijection", "--map", "psi", "--input", "12123453412"]),
        "UDUFUFDFDF\n"
    );
    assert_eq!(
        stdout(&["bijection", "--map", "phi", "--input", "1123231231"]),
        "12323123121\n"
    );
    assert_eq!(
        stdout(&[
            "bijection",
            "--map",
            "dyck",
            "--inverse",
            "--input",
            "UUUDDUDDUUUUDDUDDD"
        ]),
        "123212343\n"
    );
    let j = stdout(&[
        "bijection",
        "--map",
        "luka",
        "--input",
        "12",
        "121",
        "--format",
        "json",
    ]);
    let records: Vec<motzkin::bijections::BijectionRecord> = serde_json::from_str(&j).unwrap();
    assert_eq!(records[0].output, "2,-1,-1");
    assert_eq!(records[1], BijectionMap::Luka.record("121", false).unwrap());
}

#[test]
fn render_and_enumerate() {
    assert_eq!(
        stdout(&["render", "--word", "12341"]),
        "   #\n  ##\n ###\n#####\n"
    );
    let lines = stdout(&["enumerate", "--n", "5"]);
    let lib: String = word::generate_all(5)
        .unwrap()
        .iter()
        .map(|w| format!("{w}\n"))
        .collect();
    assert_eq!(lines, lib);
    assert_eq!(
        stdout(&["enumerate", "--n", "5", "--last", "3"]),
        "12123\n12323\n12343\n"
    );
    let j: Vec<String> =
        serde_json::from_str(&stdout(&["enumerate", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(j, ["1212", "1231", "1232", "1234"]);
}

#[test]
fn tables_and_exports() {
    let csv = stdout(&["table", "--name", "h", "--rows", "5", "--format", "csv"]);
    assert!(csv.ends_with("5,1,45\n5,2,30\n5,3,15\n5,4,5\n5,5,1\n"), "{csv}");
    let j = stdout(&["table", "--name", "u", "--rows", "6", "--format", "json"]);
    assert_eq!(
        export::table_from_json(&j).unwrap(),
        motzkin::formulas::u_table(6)
    );

    let b = stdout(&["export", "--name", "u-total", "--rows", "10", "--format", "bfile"]);
    assert_eq!(b.lines().next(), Some("1 1"));
    assert_eq!(b.lines().last(), Some("10 25048"));
    assert_eq!(b, export::sequence(Sequence::UTotal, 10, Format::Bfile));
    let t = stdout(&["export", "--name", "T", "--rows", "3", "--format", "csv"]);
    assert!(t.starts_with("n,i,value\n0,0,1\n"), "{t}");
}

#[test]
fn asymptotic_and_verify() {
    let a = stdout(&["asymptotic", "--name", "un", "--n", "60"]);
    assert!(a.starts_with("n=60 "), "{a}");
    let report: motzkin::verify::CheckReport =
        serde_json::from_str(&stdout(&["verify", "--n", "8"])).unwrap();
    assert!(report.passed());
    let only = stdout(&["verify", "--n", "6", "--only", "pick,counting"]);
    let report: motzkin::verify::CheckReport = serde_json::from_str(&only).unwrap();
    assert_eq!(report.checks.len(), 2);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("motzkin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    let o = motzkin(&[
        "export",
        "--name",
        "motzkin",
        "--rows",
        "4",
        "--format",
        "bfile",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1\n2 2\n3 4\n4 9\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["stats", "--word", "1223"],
        &["stats", "--word", "121", "--n", "3"],
        &["series", "--name", "Z", "--order", "3"],
        &["series", "--name", "Hi", "--order", "3"],
        &["table", "--name", "s", "--rows", "3", "--colour"],
        &["bijection", "--map", "phi", "--inverse", "--input", "12"],
        &["verify", "--n", "40"],
        &["enumerate", "--n", "14", "--max-objects", "10"],
        &["asymptotic", "--name", "gn", "--n", "2"],
    ] {
        let o = motzkin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}
