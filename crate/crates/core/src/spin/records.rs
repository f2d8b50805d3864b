//! Line-delimited record format for character tables and their cache files.
//!
//! ```text
//! #schema=bartab.chartable/1
//! #n    lambda  pi      kind     value
//! 6     5,1     5,1     integer  -1
//! 6     3,2,1   3,2,1   surd     ± i^2 sqrt(3/1)
//! ```
//!
//! Fields are separated by single tabs (shown here as spaces). Lines starting with `#` after the schema line
//! are comments.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CharacterTable, Sign, SpinCharacterValue, SpinCharacters, Surd};
use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};

pub const SCHEMA: &str = "#schema=bartab.chartable/1";
const COLUMNS: &str = "#n\tlambda\tpi\tkind\tvalue";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub n: u32,
    pub lambda: StrictPartition,
    pub pi: Partition,
    pub value: SpinCharacterValue,
}

impl Record {
    fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.n,
            self.lambda,
            self.pi,
            self.value.kind(),
            self.value
        )
    }
}

/// Records of a table in row order; the special class follows the odd classes.
pub fn table_records(table: &CharacterTable) -> Vec<Record> {
    let mut out = Vec::new();
    for row in &table.rows {
        for (pi, value) in table.columns.iter().zip(&row.values) {
            out.push(Record {
                n: table.n,
                lambda: row.shape.clone(),
                pi: pi.clone(),
                value: value.clone(),
            });
        }
        if let Some(s) = &row.special {
            out.push(Record {
                n: table.n,
                lambda: row.shape.clone(),
                pi: row.shape.as_partition().clone(),
                value: SpinCharacterValue::Surd(s.clone()),
            });
        }
    }
    out
}

pub fn write_records(records: &[Record]) -> String {
    let mut out = format!("{SCHEMA}\n{COLUMNS}\n");
    for r in records {
        out.push_str(&r.line());
        out.push('\n');
    }
    out
}

pub fn render_records(table: &CharacterTable) -> String {
    write_records(&table_records(table))
}

fn parse_surd(text: &str) -> Option<Surd> {
    let mut fields = text.split_whitespace();
    let sign = match fields.next()? {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        "±" => Sign::Indeterminate,
        _ => return None,
    };
    let i_power: u8 = fields.next()?.strip_prefix("i^")?.parse().ok()?;
    let inner = fields.next()?.strip_prefix("sqrt(")?.strip_suffix(')')?;
    let (a, b) = inner.split_once('/')?;
    let a: BigInt = a.parse().ok()?;
    let b: BigInt = b.parse().ok()?;
    if fields.next().is_some() || i_power > 3 || b == BigInt::from(0) {
        return None;
    }
    Some(Surd {
        i_power,
        radicand: BigRational::new(a, b),
        sign,
    })
}

/// Parses records, checking the schema line and |λ| = |π| = n on every record.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end() == SCHEMA => {}
        _ => {
            return Err(Error::Record {
                line: 1,
                reason: format!("expected schema header {SCHEMA:?}"),
            })
        }
    }
    let mut out = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: String| Error::Record {
            line: line_no,
            reason,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(bad(format!("expected 5 fields, found {}", fields.len())));
        }
        let n: u32 = fields[0]
            .parse()
            .map_err(|_| bad(format!("bad weight {:?}", fields[0])))?;
        let lambda: StrictPartition = fields[1].parse().map_err(|e: Error| bad(e.to_string()))?;
        let pi: Partition = fields[2].parse().map_err(|e: Error| bad(e.to_string()))?;
        if lambda.weight() != n || pi.weight() != n {
            return Err(bad(format!(
                "weights |{lambda}| = {}, |{pi}| = {} do not both equal n = {n}",
                lambda.weight(),
                pi.weight()
            )));
        }
        let value = match fields[3] {
            "integer" => SpinCharacterValue::from_integer(
                fields[4]
                    .parse()
                    .map_err(|_| bad(format!("bad integer {:?}", fields[4])))?,
            ),
            "zero" if fields[4] == "0" => SpinCharacterValue::Zero,
            "surd" => SpinCharacterValue::Surd(
                parse_surd(fields[4]).ok_or_else(|| bad(format!("bad surd {:?}", fields[4])))?,
            ),
            other => return Err(bad(format!("unknown kind {other:?}"))),
        };
        out.push(Record {
            n,
            lambda,
            pi,
            value,
        });
    }
    Ok(out)
}

/// Every record whose value disagrees with a fresh recomputation.
pub fn verify_records(records: &[Record]) -> Result<Vec<Record>> {
    let mut chars = SpinCharacters::new();
    let mut bad = Vec::new();
    for r in records {
        if chars.value(&r.lambda, &r.pi)? != r.value {
            bad.push(r.clone());
        }
    }
    Ok(bad)
}

/// Loads integer values of odd classes into the evaluator's memo.
pub fn seed_from_records(chars: &mut SpinCharacters, records: &[Record]) {
    for r in records {
        if r.pi.all_parts_odd() {
            if let Some(v) = r.value.as_integer() {
                chars.seed(r.lambda.clone(), r.pi.clone(), v);
            }
        }
    }
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("chartable-{n}.tsv"))
}

/// Reads the cache file for weight `n`, if present.
pub fn load_cache(dir: &Path, n: u32) -> Result<Option<Vec<Record>>> {
    let path = cache_path(dir, n);
    if !path.exists() {
        return Ok(None);
    }
    let records = parse_records(&fs::read_to_string(&path)?)?;
    if let Some(r) = records.iter().find(|r| r.n != n) {
        return Err(Error::Record {
            line: 0,
            reason: format!("cache for n = {n} holds a record for n = {}", r.n),
        });
    }
    Ok(Some(records))
}

pub fn store_cache(dir: &Path, table: &CharacterTable) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.n);
    fs::write(&path, render_records(table))?;
    Ok(path)
}
