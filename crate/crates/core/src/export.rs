//! Plain-text writers for sequences and triangles: OEIS b-files, CSV, JSON.
//!
//! JSON carries integers as decimal strings so that values of any size
//! survive a round trip through ordinary JSON parsers.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{self, Sequence, StatTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Bfile,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfile" => Ok(Format::Bfile),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Triangles by short name: `m`, `s`, `u`, `h`, `T` (trinomial) and `walks`.
pub fn table_by_name(name: &str, rows: usize) -> Result<StatTable> {
    Ok(match name {
        "m" => formulas::m_table(rows),
        "s" => formulas::s_table(rows),
        "u" => formulas::u_table(rows),
        "h" => formulas::h_table(rows),
        "T" => formulas::trinomial_table(rows),
        "walks" => formulas::walks(rows),
        other => return Err(Error::Parse(format!("unknown table {other:?}"))),
    })
}

pub const TABLE_NAMES: [&str; 6] = ["m", "s", "u", "h", "T", "walks"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub name: String,
    pub first_row: usize,
    pub first_col: i64,
    pub rows: Vec<Vec<String>>,
}

impl From<&StatTable> for TableJson {
    fn from(t: &StatTable) -> Self {
        TableJson {
            name: t.name.clone(),
            first_row: t.first_row,
            first_col: t.first_col,
            rows: t
                .rows
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<&TableJson> for StatTable {
    type Error = Error;

    fn try_from(j: &TableJson) -> Result<StatTable> {
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|v| parse_int(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(StatTable {
            name: j.name.clone(),
            first_row: j.first_row,
            first_col: j.first_col,
            rows,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub n: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub name: String,
    pub terms: Vec<TermJson>,
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

/// `(n, a(n))` for `n = 1..=rows`, the indexing of printed sequence lists.
pub fn sequence_terms(seq: Sequence, rows: usize) -> Vec<(usize, BigInt)> {
    (1..=rows).map(|n| (n, seq.value(n))).collect()
}

pub fn sequence(seq: Sequence, rows: usize, format: Format) -> String {
    let terms = sequence_terms(seq, rows);
    let mut out = String::new();
    match format {
        Format::Bfile => {
            for (n, v) in &terms {
                writeln!(out, "{n} {v}").unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in &terms {
                writeln!(out, "{n},{v}").unwrap();
            }
        }
        Format::Json => {
            let j = SequenceJson {
                name: seq.name().to_string(),
                terms: terms
                    .iter()
                    .map(|(n, v)| TermJson {
                        n: *n,
                        value: v.to_string(),
                    })
                    .collect(),
            };
            out = serde_json::to_string_pretty(&j).expect("serializes");
            out.push('\n');
        }
    }
    out
}

/// Writes a triangle. The b-file form flattens it row by row, numbering
/// entries from 1.
pub fn table(t: &StatTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Bfile => {
            for (k, (_, _, v)) in t.entries().enumerate() {
                writeln!(out, "{} {v}", k + 1).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,i,value\n");
            for (n, i, v) in t.entries() {
                writeln!(out, "{n},{i},{v}").unwrap();
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&TableJson::from(t)).expect("serializes");
            out.push('\n');
        }
    }
    out
}

pub fn table_from_json(s: &str) -> Result<StatTable> {
    let j: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    StatTable::try_from(&j)
}

pub fn sequence_from_json(s: &str) -> Result<Vec<(usize, BigInt)>> {
    let j: SequenceJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.terms.iter().map(|t| Ok((t.n, parse_int(&t.value)?))).collect()
}
