//! Command implementations behind the `bartab` binary.
//!
//! Every `cmd_*` function returns a [`RunReport`] whose `details` are the
//! exact stdout lines. Timing lives only in `elapsed` and goes to stderr.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::thread;
use std::time::{Duration, Instant};

use bartab_core::bars::{
    all_bar_tableaux, enumerate_bar_tableaux, even_boundary_free, lemma2_structure,
    minimal_tableaux, srank_formula, BarTableau, RankOracle,
};
use bartab_core::partitions::{odd_partitions, strict_partitions, Partition, StrictPartition};
use bartab_core::qfunctions::{
    schur_expansion_with, verify_degree_bounds_with, QFunctions, DEFAULT_DEGREE_BOUND,
};
use bartab_core::spin::records::{load_cache, render_records, store_cache, table_records};
use bartab_core::spin::{vanishing_corollary_check_with, SpinCharacters};
use bartab_core::Error as CoreError;
use num_bigint::BigInt;

/// Environment variable naming the character-table cache directory.
pub const CACHE_ENV: &str = "BARTAB_CACHE_DIR";

/// Default `--n` for `verify`.
pub const DEFAULT_VERIFY_N: u32 = 10;
/// Largest weight for `tableaux` without `--allow-slow`.
pub const TABLEAUX_MAX: u32 = 12;
/// Same, for `tableaux --minimal` without `--type`.
pub const MINIMAL_TABLEAUX_MAX: u32 = 30;
/// Largest weight for `chartable` without `--allow-slow`.
pub const CHARTABLE_MAX: u32 = 24;
/// Largest weight for `srank --check` without `--allow-slow`.
pub const SRANK_CHECK_MAX: u32 = 40;
/// Counterexamples listed per failing suite.
const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Vec<(String, String)>,
    pub status: Status,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl RunReport {
    fn new(command: &'static str) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            status: Status::Info,
            details: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn input(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    fn line(&mut self, text: impl Into<String>) {
        self.details.push(text.into());
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    /// Stdout text: the detail lines, newline terminated.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.details {
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    /// One-line summary for stderr.
    pub fn summary(&self) -> String {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "bartab {} [{}]: {} in {:.3?}",
            self.command,
            inputs.join(" "),
            self.status,
            self.elapsed
        )
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Fail => 1,
            Status::Pass | Status::Info => 0,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn over_bound(what: &str, n: u32, max: u32) -> CliError {
    CliError::Usage(format!(
        "{what}: n = {n} exceeds the default bound {max}; pass --allow-slow to run it anyway"
    ))
}

fn check_bound(what: &str, n: u32, max: u32, allow_slow: bool) -> CliResult<()> {
    if n > max && !allow_slow {
        Err(over_bound(what, n, max))
    } else {
        Ok(())
    }
}

pub fn cmd_srank(shape: &StrictPartition, check: bool, allow_slow: bool) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("srank").input("shape", shape);
    if check {
        check_bound("srank --check", shape.weight(), SRANK_CHECK_MAX, allow_slow)?;
    }
    let stats = shape.as_partition().statistics();
    let rank = srank_formula(shape);
    report.line(format!("shape {shape}"));
    report.line(format!(
        "odd rows {}, even rows {}, length {}",
        stats.odd_rows,
        stats.even_rows,
        shape.len()
    ));
    report.line(format!("srank {rank}"));
    if check {
        let search = RankOracle::new().min_bars(shape);
        report.line(format!("search {search}"));
        if search == rank {
            report.line("formula and search agree");
            report.status = Status::Pass;
        } else {
            report.line(format!(
                "counterexample: {shape} formula {rank} search {search}"
            ));
            report.status = Status::Fail;
        }
    }
    Ok(report.finish(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauSelection {
    All,
    Minimal,
}

pub fn cmd_tableaux(
    shape: &StrictPartition,
    class: Option<&Partition>,
    selection: TableauSelection,
    count_only: bool,
    allow_slow: bool,
) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("tableaux").input("shape", shape);
    let max = match (class, selection) {
        (None, TableauSelection::Minimal) => MINIMAL_TABLEAUX_MAX,
        _ => TABLEAUX_MAX,
    };
    check_bound("tableaux", shape.weight(), max, allow_slow)?;
    let rank = srank_formula(shape);
    let mut tableaux: Vec<BarTableau> = match (class, selection) {
        (Some(pi), _) => {
            report = report.input("type", pi);
            enumerate_bar_tableaux(shape, pi)?
        }
        (None, TableauSelection::Minimal) => minimal_tableaux(shape),
        (None, TableauSelection::All) => all_bar_tableaux(shape),
    };
    if selection == TableauSelection::Minimal {
        report = report.input("minimal", true);
        tableaux.retain(|t| t.len() == rank);
    }
    report.line(format!("shape {shape}"));
    report.line(format!("srank {rank}"));
    if let Some(pi) = class {
        report.line(format!("type {pi}"));
    }
    if !count_only {
        for (k, t) in tableaux.iter().enumerate() {
            report.line("");
            report.line(format!(
                "tableau {} bars {} type {} weight {}",
                k + 1,
                t.len(),
                t.class(),
                t.weight()
            ));
            for row in t.grid().to_string().lines() {
                report.line(row);
            }
            for step in t.to_text().lines() {
                report.line(format!("  {step}"));
            }
        }
        report.line("");
    }
    report.line(format!("count {}", tableaux.len()));
    if let Some(pi) = class {
        let sum: BigInt = tableaux.iter().map(|t| t.weight().value()).sum();
        report.line(format!("weight sum {sum}"));
        if selection == TableauSelection::All {
            let value = SpinCharacters::new().character(shape, pi)?;
            report.line(format!("character {value}"));
            if value == sum {
                report.status = Status::Pass;
            } else {
                report.line(format!(
                    "counterexample: <{shape}>({pi}) recurrence {value} tableaux {sum}"
                ));
                report.status = Status::Fail;
            }
        }
    }
    Ok(report.finish(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Records,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(TableFormat::Text),
            "records" => Ok(TableFormat::Records),
            other => Err(format!(
                "unknown format {other:?} (expected text or records)"
            )),
        }
    }
}

/// `--cache-dir` if given, else the environment variable.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    })
}

/// The cache is advisory: a cached table is compared with a fresh
/// computation and rewritten when it is missing, unreadable or different.
pub fn cmd_chartable(
    n: u32,
    format: TableFormat,
    cache_dir: Option<PathBuf>,
    allow_slow: bool,
) -> CliResult<RunReport> {
    let start = Instant::now();
    check_bound("chartable", n, CHARTABLE_MAX, allow_slow)?;
    let mut report = RunReport::new("chartable").input("n", n);
    let table = SpinCharacters::new().table(n);
    if let Some(dir) = &cache_dir {
        let fresh = table_records(&table);
        let state = match load_cache(dir, n) {
            Ok(Some(records)) if records == fresh => "hit",
            Ok(Some(_)) | Err(_) => "replaced",
            Ok(None) => "stored",
        };
        if state != "hit" {
            store_cache(dir, &table)?;
        }
        report = report.input("cache", state);
    }
    let text = match format {
        TableFormat::Text => table.render_text(),
        TableFormat::Records => render_records(&table),
    };
    report.details.extend(text.lines().map(str::to_string));
    Ok(report.finish(start))
}

pub fn cmd_qfun(
    shape: &StrictPartition,
    specialize: bool,
    records: bool,
    allow_slow: bool,
) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::new("qfun").input("shape", shape);
    let n = shape.weight();
    check_bound("qfun", n, DEFAULT_DEGREE_BOUND, allow_slow)?;
    let mut qf = QFunctions::with_degree_bound(n.max(DEFAULT_DEGREE_BOUND));
    let inductive = qf.q_lambda(shape)?;
    let expansion = schur_expansion_with(&mut SpinCharacters::new(), shape);
    if records {
        report
            .details
            .extend(inductive.to_records().lines().map(str::to_string));
        report.status = if inductive == expansion {
            Status::Pass
        } else {
            Status::Fail
        };
        return Ok(report.finish(start));
    }
    report.line(format!("Q_{{{shape}}} inductive  = {inductive}"));
    report.line(format!("Q_{{{shape}}} characters = {expansion}"));
    let mut ok = inductive == expansion;
    report.line(if ok {
        "definitions agree"
    } else {
        "definitions differ"
    });
    if specialize {
        let rank = srank_formula(shape);
        let min_degree = inductive.min_degree()?;
        let spec = inductive.principal_specialization();
        let order = spec.t_adic_order().ok_or(CoreError::ZeroPolynomial)?;
        let divisible = spec.is_divisible_by_t_power(rank);
        report.line(format!("Q_{{{shape}}}(1^t) = {spec}"));
        report.line(format!("t-order {order}"));
        report.line(format!("min degree {min_degree}"));
        report.line(format!("srank {rank}"));
        report.line(format!(
            "divisible by t^{rank}: {}",
            if divisible { "yes" } else { "no" }
        ));
        report.line(format!(
            "min degree = srank: {}",
            if min_degree == rank { "yes" } else { "no" }
        ));
        ok &= divisible && min_degree >= rank;
    }
    report.status = if ok { Status::Pass } else { Status::Fail };
    Ok(report.finish(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Srank,
    Vanishing,
    Qdegree,
    Lemmas,
    Independence,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Srank,
        Suite::Vanishing,
        Suite::Qdegree,
        Suite::Lemmas,
        Suite::Independence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Srank => "srank",
            Suite::Vanishing => "vanishing",
            Suite::Qdegree => "qdegree",
            Suite::Lemmas => "lemmas",
            Suite::Independence => "independence",
        }
    }

    /// Largest n run without `--allow-slow`.
    pub fn max_n(self) -> u32 {
        match self {
            Suite::Srank | Suite::Vanishing | Suite::Qdegree => 12,
            Suite::Lemmas => 10,
            Suite::Independence => 9,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?} (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub n_max: u32,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs one suite over every n ≤ `n_max`.
pub fn run_suite(suite: Suite, n_max: u32) -> CliResult<SuiteOutcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    match suite {
        Suite::Srank => {
            let mut oracle = RankOracle::new();
            for n in 0..=n_max {
                for shape in strict_partitions(n) {
                    checked += 1;
                    let (f, s) = (srank_formula(&shape), oracle.min_bars(&shape));
                    if f != s {
                        bad.push(format!("{shape}: formula {f} search {s}"));
                    }
                }
            }
        }
        Suite::Vanishing => {
            let mut chars = SpinCharacters::new();
            for n in 0..=n_max {
                let report = vanishing_corollary_check_with(&mut chars, n);
                checked += report.checked;
                bad.extend(
                    report
                        .violations
                        .iter()
                        .map(|v| format!("<{}>({}) = {}", v.shape, v.class, v.value)),
                );
            }
        }
        Suite::Qdegree => {
            let mut qf = QFunctions::with_degree_bound(n_max.max(DEFAULT_DEGREE_BOUND));
            for n in 0..=n_max {
                for e in verify_degree_bounds_with(&mut qf, n)?.entries {
                    checked += 1;
                    if !e.degree_bound_holds() || !e.divisibility_holds() || !e.equality_holds() {
                        bad.push(format!(
                            "Q_{}: min degree {} t-order {} srank {}",
                            e.shape, e.min_degree, e.t_order, e.srank
                        ));
                    }
                }
            }
        }
        Suite::Lemmas => {
            for n in 0..=n_max {
                for shape in strict_partitions(n) {
                    checked += 1;
                    let minimal = minimal_tableaux(&shape);
                    let clean: Vec<&BarTableau> =
                        minimal.iter().filter(|t| even_boundary_free(t)).collect();
                    if clean.is_empty() {
                        bad.push(format!(
                            "{shape}: every minimal tableau has an even boundary"
                        ));
                    } else if let Some(t) = clean.iter().find(|t| !lemma2_structure(t)) {
                        bad.push(format!(
                            "{shape}: row structure fails for {}",
                            t.to_text().trim_end().replace('\n', "; ")
                        ));
                    }
                }
            }
        }
        Suite::Independence => {
            let mut chars = SpinCharacters::new();
            for n in 0..=n_max {
                let classes = odd_partitions(n);
                for shape in strict_partitions(n) {
                    for pi in &classes {
                        let canonical = chars.character(&shape, pi)?;
                        let mut parts = pi.parts().to_vec();
                        parts.dedup();
                        for r in parts {
                            checked += 1;
                            let other = chars.character_removing(&shape, pi, r)?;
                            if other != canonical {
                                bad.push(format!(
                                    "<{shape}>({pi}): removing {r} first gives {other}, largest part gives {canonical}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(SuiteOutcome {
        suite,
        n_max,
        checked,
        counterexamples: bad,
    })
}

/// `n` of `None` means the default, lowered to each suite's bound. An
/// explicit `n` above a suite's bound needs `allow_slow`.
pub fn cmd_verify(n: Option<u32>, suites: &[Suite], allow_slow: bool) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    if suites.is_empty() {
        return Err(CliError::Usage("no suites selected".into()));
    }
    let mut plan = Vec::new();
    for &suite in &suites {
        let n_max = match n {
            Some(n) => {
                check_bound(suite.name(), n, suite.max_n(), allow_slow)?;
                n
            }
            None => DEFAULT_VERIFY_N.min(suite.max_n()),
        };
        plan.push((suite, n_max));
    }
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    let mut report = RunReport::new("verify").input("suites", names.join(","));
    if let Some(n) = n {
        report = report.input("n", n);
    }
    // suites share nothing, so each gets its own thread
    let outcomes: Vec<CliResult<SuiteOutcome>> = thread::scope(|scope| {
        let handles: Vec<_> = plan
            .iter()
            .map(|&(suite, n_max)| scope.spawn(move || run_suite(suite, n_max)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut all_passed = true;
    for outcome in outcomes {
        let outcome = outcome?;
        all_passed &= outcome.passed();
        report.line(format!(
            "{:<12} n <= {:<2}  checked {:>6}  {}",
            outcome.suite.name(),
            outcome.n_max,
            outcome.checked,
            if outcome.passed() { "pass" } else { "FAIL" }
        ));
        for c in outcome.counterexamples.iter().take(MAX_COUNTEREXAMPLES) {
            report.line(format!("  counterexample: {c}"));
        }
        if outcome.counterexamples.len() > MAX_COUNTEREXAMPLES {
            report.line(format!(
                "  ... {} more",
                outcome.counterexamples.len() - MAX_COUNTEREXAMPLES
            ));
        }
    }
    report.status = if all_passed {
        Status::Pass
    } else {
        Status::Fail
    };
    report.line(format!("overall {}", report.status));
    Ok(report.finish(start))
}
