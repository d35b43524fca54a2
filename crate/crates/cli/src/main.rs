use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use motzkin::bijections::BijectionMap;
use motzkin::export::{self, Format};
use motzkin::formulas::{self, Asymptotic, Sequence};
use motzkin::series::SeriesName;
use motzkin::verify::{self, Check, Stat, SuiteOptions};
use motzkin::word::{self, Limits};
use motzkin::{Error, MotzkinWord};

#[derive(Parser, Debug)]
#[command(
    name = "motzkin",
    version,
    about = "Exact tools for Motzkin words and polyominoes"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest number of objects an exhaustive command may produce.
    #[arg(long, global = true, default_value_t = Limits::default().max_objects)]
    max_objects: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the words of length N, optionally only those ending in K.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        last: Option<u32>,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
    /// Statistics of one word, or a histogram over all words of length N.
    Stats {
        #[arg(long, conflicts_with_all = ["n", "stat", "histogram"], required_unless_present = "n")]
        word: Option<MotzkinWord>,
        #[arg(long, requires_all = ["stat", "histogram"])]
        n: Option<usize>,
        /// area | sper | inter | last
        #[arg(long)]
        stat: Option<Stat>,
        #[arg(long)]
        histogram: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Print a triangle: m | s | u | h | T | walks.
    Table {
        #[arg(long)]
        name: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Expand a generating function: M | T | S | A_pv | A_v | U | CF | Hint | Hi | Bi | g | s-total | u-total | int-total.
    Series {
        #[arg(long)]
        name: SeriesName,
        #[arg(long)]
        order: usize,
        /// Level for Hi and Bi.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Apply psi | phi | luka | dyck (or an inverse) to each input.
    Bijection {
        #[arg(long)]
        map: BijectionMap,
        #[arg(long)]
        inverse: bool,
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Draw the polyomino of a word.
    Render {
        #[arg(long)]
        word: MotzkinWord,
    },
    /// Run the cross-check suite up to length N; exits 1 on any failure.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<Check>,
        /// Include wall times in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Compare an exact value with its asymptotic estimate:
    /// gn | sn | un | intn | expected-last | expected-sper | expected-inter.
    Asymptotic {
        #[arg(long)]
        name: Asymptotic,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Export a sequence (motzkin, central-trinomial, s-total, u-total,
    /// int-total, lastsym-total, h1) or a triangle (m, s, u, h, T, walks).
    Export {
        #[arg(long)]
        name: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Bfile,
    Csv,
    Json,
}

impl From<ExportFormat> for Format {
    fn from(f: ExportFormat) -> Format {
        match f {
            ExportFormat::Bfile => Format::Bfile,
            ExportFormat::Csv => Format::Csv,
            ExportFormat::Json => Format::Json,
        }
    }
}

struct Output {
    text: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let limits = Limits {
        max_objects: cli.max_objects,
        ..Limits::default()
    };
    let out = match &cli.command {
        Command::Enumerate { n, last, format } => {
            let words = match last {
                Some(k) => word::generate_by_last_with(*n, *k, &limits)?,
                None => word::generate_all_with(*n, &limits)?,
            };
            match format {
                ListFormat::Lines => words.iter().map(|w| format!("{w}\n")).collect(),
                ListFormat::Json => json(&words),
            }
        }
        Command::Stats {
            word: Some(w),
            format,
            ..
        } => {
            let s = word::stats(w);
            match format {
                TextFormat::Text => format!(
                    "area={} sper={} inter={} last={}\n",
                    s.area, s.sper, s.inter, s.last
                ),
                TextFormat::Json => json(&s),
            }
        }
        Command::Stats {
            n: Some(n),
            stat: Some(stat),
            format,
            ..
        } => {
            let h = verify::histogram(*n, *stat)?;
            match format {
                TextFormat::Text => h.iter().map(|(v, c)| format!("{v} {c}\n")).collect(),
                TextFormat::Json => json(&serde_json::json!({ "n": n, "stat": stat, "histogram": h })),
            }
        }
        Command::Stats { .. } => unreachable!("clap enforces --word or --n/--stat/--histogram"),
        Command::Table { name, rows, format } => {
            let t = export::table_by_name(name, *rows)?;
            export::table(
                &t,
                match format {
                    TableFormat::Csv => Format::Csv,
                    TableFormat::Json => Format::Json,
                },
            )
        }
        Command::Series {
            name,
            order,
            i,
            format,
        } => {
            let s = name.build(*order, *i)?;
            match format {
                TextFormat::Text => format!("{s}\n"),
                TextFormat::Json => json(&s.to_json()),
            }
        }
        Command::Bijection {
            map,
            inverse,
            input,
            format,
        } => match format {
            TextFormat::Text => input
                .iter()
                .map(|s| map.apply(s, *inverse).map(|o| format!("{o}\n")))
                .collect::<Result<String, Error>>()?,
            TextFormat::Json => {
                let records = input
                    .iter()
                    .map(|s| map.record(s, *inverse))
                    .collect::<Result<Vec<_>, Error>>()?;
                json(&records)
            }
        },
        Command::Render { word } => word::render_ascii(word),
        Command::Verify { n, only, timing } => {
            let opts = SuiteOptions {
                limits: None,
                mutations: Vec::new(),
            };
            let report = verify::run_suite_with(*n, only, &opts)?;
            let mut text = report.to_json(*timing);
            text.push('\n');
            return Ok(Output {
                text,
                failed: !report.passed(),
            });
        }
        Command::Asymptotic { name, n, format } => {
            if *n < 3 {
                return Err(Error::Parse("asymptotic comparisons need --n >= 3".into()));
            }
            let c = formulas::asymptotic(*name, *n);
            match format {
                TextFormat::Text => format!(
                    "n={} exact={:e} asymptotic={:e} ratio={:.6}\n",
                    c.n, c.exact, c.asymptotic, c.ratio
                ),
                TextFormat::Json => json(&c),
            }
        }
        Command::Export { name, rows, format } => match name.parse::<Sequence>() {
            Ok(seq) => export::sequence(seq, *rows, (*format).into()),
            Err(_) => export::table(&export::table_by_name(name, *rows)?, (*format).into()),
        },
    };
    Ok(out.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text),
        None => std::io::stdout().lock().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if output.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
