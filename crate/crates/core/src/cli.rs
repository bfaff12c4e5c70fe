//! Run configuration, commands and report rendering behind the
//! `palindefect` binary.
//!
//! Every command produces a [`Report`] whose JSON form has the top-level
//! fields `tool_version`, `word_meta`, `command`, `results` and `verdict`,
//! plus an exit code: 0 pass, 2 configuration error, 3 check failure, 4 every
//! selected check inapplicable.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::factors::FactorIndex;
use crate::gn::GnGraph;
use crate::identity::{
    analyze_infinite, check_alternation, check_bridge, check_characterization, check_t_nonnegative, PrefixAnalysis,
    Status, WordMeta,
};
use crate::words::{read_word_file, Word, WordSource};
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_FAIL: i32 = 3;
pub const EXIT_INAPPLICABLE: i32 = 4;

const DEFAULT_NMAX: usize = 30;
const DEFAULT_SCHEDULE: [usize; 3] = [1000, 2000, 4000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Profile,
    Verify,
    Harness,
    Graph,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Profile => "profile",
            Self::Verify => "verify",
            Self::Harness => "harness",
            Self::Graph => "graph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
    /// Graphviz, `graph` only.
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Complexity form of the counting statement, accepted as `lemma1`.
    #[serde(rename = "lemma1")]
    Counting,
    /// Prefix-sum form of the counting statement, accepted as `lemma2`.
    #[serde(rename = "lemma2")]
    CountingPrefix,
    /// Every return between `x` and `mirror(x)` is a palindrome, `prop41`.
    #[serde(rename = "prop41")]
    Returns,
    /// Unioccurrent palindromic suffixes versus palindromic returns, `lemma43`.
    #[serde(rename = "lemma43")]
    Bridge,
    Gn,
    Alternation,
    Nonneg,
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma1" => Self::Counting,
            "lemma2" => Self::CountingPrefix,
            "prop41" => Self::Returns,
            "lemma43" => Self::Bridge,
            "gn" => Self::Gn,
            "alternation" => Self::Alternation,
            "nonneg" => Self::Nonneg,
            other => return Err(Error::Config(format!("unknown check {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordInput {
    Spec(PathBuf),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: WordInput,
    pub command: Command,
    /// Prefix length; required for infinite sources except in `harness`.
    pub len: Option<usize>,
    pub n_max: Option<usize>,
    /// Inclusive length range for per-`n` checks.
    pub n_range: Option<(usize, usize)>,
    pub schedule: Option<Vec<usize>>,
    pub checks: Vec<Check>,
    /// `|q|` for the counting checks; defaults to the stabilisation index.
    pub q: Option<usize>,
    /// `|p|` for the prefix-sum counting check; defaults to the word length.
    pub p: Option<usize>,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    /// Overrides the seed of a random source.
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn new(input: WordInput, command: Command) -> Self {
        Self {
            input,
            command,
            len: None,
            n_max: None,
            n_range: None,
            schedule: None,
            checks: Vec::new(),
            q: None,
            p: None,
            format: OutputFormat::Table,
            output: None,
            seed: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max == Some(0) {
            return Err(Error::Config("--nmax must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.n_range {
            if lo > hi {
                return Err(Error::Config(format!("empty range {lo}..{hi}")));
            }
        }
        if let Some(s) = &self.schedule {
            if s.len() < 2 || s[0] == 0 || s.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::BadSchedule);
            }
        }
        if self.format == OutputFormat::Dot && self.command != Command::Graph {
            return Err(Error::Config("dot output is only available for graph".into()));
        }
        Ok(())
    }

    pub fn source(&self) -> Result<WordSource> {
        let source = match &self.input {
            WordInput::Text(text) => WordSource::literal(text)?,
            WordInput::Spec(path) => read_word_file(path)?,
        };
        Ok(match (source, self.seed) {
            (WordSource::Random { alphabet, .. }, Some(seed)) => WordSource::Random { alphabet, seed },
            (source, _) => source,
        })
    }

    fn word(&self, source: &WordSource) -> Result<Word> {
        match (source, self.len) {
            (WordSource::Literal(w), None) => Ok(w.clone()),
            (_, Some(len)) => source.prefix(len),
            (_, None) => Err(Error::Config("--len is required for infinite word sources".into())),
        }
    }
}

/// Parses `a..b` (inclusive) or a single length.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("bad length range {s:?}, expected N or A..B"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Parses a comma-separated prefix schedule.
pub fn parse_schedule(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| Error::Config(format!("bad schedule entry {x:?}")))).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub word_meta: WordMeta,
    pub command: String,
    pub results: Value,
    pub verdict: String,
}

impl Report {
    fn new(meta: WordMeta, command: Command, results: Value, verdict: &str) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            word_meta: meta,
            command: command.name().to_string(),
            results,
            verdict: verdict.to_string(),
        }
    }
}

/// A finished command: the report, its rendering in the requested format and
/// the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub rendered: String,
    pub exit_code: i32,
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    match config.command {
        Command::Profile => cmd_profile(config),
        Command::Verify => cmd_verify(config),
        Command::Harness => cmd_harness(config),
        Command::Graph => cmd_graph(config),
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inapplicable => "inapplicable",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialises") + "\n"
}

pub fn cmd_profile(config: &RunConfig) -> Result<Outcome> {
    let source = config.source()?;
    let word = config.word(&source)?;
    let a = PrefixAnalysis::with_source(&word, &source.describe());
    let n_max = config.n_max.unwrap_or(DEFAULT_NMAX).min(word.len());
    let rows: Vec<Value> = (0..=n_max)
        .map(|n| json!({"n": n, "C": a.c[n], "P": a.p[n], "T": a.t(n), "trusted": a.trusted.trusted_n.is_some_and(|t| n <= t)}))
        .collect();
    let closure_up_to = a.closure.iter().position(|&ok| !ok).map_or(word.len(), |m| m - 1);
    let results = json!({
        "rows": rows,
        "defect": a.defect.defect,
        "trusted_n": a.trusted_n(),
        "closed_under_reversal_up_to": closure_up_to,
    });
    let report = Report::new(a.meta(), Command::Profile, results, "computed");
    let rendered = match config.format {
        OutputFormat::Json => render_json(&report),
        OutputFormat::Csv => {
            let mut out = String::from("n,C,P,T,trusted\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{},{}", r["n"], r["C"], r["P"], r["T"], r["trusted"]);
            }
            out
        }
        _ => {
            let mut out = format!("{} (length {})\n", a.source, word.len());
            let _ = writeln!(out, "{:>6} {:>10} {:>10} {:>6}  trusted", "n", "C", "P", "T");
            for r in &rows {
                let mark = if r["trusted"] == true { "yes" } else { "no" };
                let cell = |k: &str| r[k].to_string();
                let _ = writeln!(out, "{:>6} {:>10} {:>10} {:>6}  {mark}", cell("n"), cell("C"), cell("P"), cell("T"));
            }
            let _ = writeln!(out, "D = {}", a.defect.defect);
            let _ = writeln!(out, "closed under reversal up to length {closure_up_to}");
            match a.trusted_n() {
                Some(t) => writeln!(out, "trusted for n <= {t}"),
                None => writeln!(out, "no trusted range"),
            }
            .ok();
            out
        }
    };
    Ok(Outcome { report, rendered, exit_code: EXIT_PASS })
}

struct CheckResult {
    name: String,
    status: Status,
    detail: Value,
}

fn aggregate(statuses: impl IntoIterator<Item = Status>) -> Status {
    let mut any_pass = false;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Pass => any_pass = true,
            Status::Inapplicable => {}
        }
    }
    if any_pass {
        Status::Pass
    } else {
        Status::Inapplicable
    }
}

fn default_range(a: &PrefixAnalysis, config: &RunConfig, lo: usize) -> (usize, usize) {
    config.n_range.unwrap_or_else(|| (lo, a.trusted_n().unwrap_or(lo).clamp(lo, 10)))
}

fn run_check(check: Check, a: &PrefixAnalysis, config: &RunConfig) -> Result<CheckResult> {
    let len = a.word.len();
    let q = config.q.unwrap_or(a.estimate.first_index);
    let (status, detail) = match check {
        Check::Counting => {
            let r = a.counting_complexity(q);
            (r.status, to_value(&r))
        }
        Check::CountingPrefix => {
            let r = a.counting_prefix_sum(q, config.p.unwrap_or(len));
            (r.status, to_value(&r))
        }
        Check::Returns => {
            let (lo, hi) = default_range(a, config, 1);
            let mut r = check_characterization(a, lo, hi);
            if let Some(scan) = &mut r.scan {
                // keep reports small; counts stay exact
                for l in &mut scan.per_length {
                    l.examples.truncate(2);
                }
            }
            (r.status, to_value(&r))
        }
        Check::Bridge => {
            let r = check_bridge(a, config.n_range.map(|(_, hi)| hi));
            (r.status(), to_value(&r))
        }
        Check::Gn => {
            let (lo, hi) = default_range(a, config, 1);
            let depth = (hi + 1).min(len);
            let idx = FactorIndex::build(&a.word, depth)?;
            let mut reports = Vec::new();
            for n in lo..=hi {
                if n + 1 > depth {
                    return Err(Error::Config(format!("n = {n} needs a prefix longer than {len}")));
                }
                let mut r = GnGraph::build(&idx, n)?.check(a.t(n));
                if !a.trusted_n().is_some_and(|t| n <= t) {
                    r.status = Status::Inapplicable;
                    r.reason = Some("n is outside the trusted range".into());
                }
                reports.push(r);
            }
            (aggregate(reports.iter().map(|r| r.status)), to_value(&reports))
        }
        Check::Alternation => {
            let (lo, hi) = default_range(a, config, 2);
            let r = check_alternation(a, lo, hi);
            (r.status, to_value(&r))
        }
        Check::Nonneg => {
            let r = check_t_nonnegative(&a.profile(len), &a.closure);
            (r.status, to_value(&r))
        }
    };
    let name = to_value(&check).as_str().unwrap_or_default().to_string();
    Ok(CheckResult { name, status, detail })
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome> {
    let source = config.source()?;
    let word = config.word(&source)?;
    let a = PrefixAnalysis::with_source(&word, &source.describe());
    let identity = a.identity();
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let results: Vec<CheckResult> = checks.iter().map(|&c| run_check(c, &a, config)).collect::<Result<_>>()?;

    let failed = !identity.pass || results.iter().any(|r| r.status == Status::Fail);
    let all_inapplicable = !results.is_empty() && results.iter().all(|r| r.status == Status::Inapplicable);
    let (verdict, exit_code) = if failed {
        ("fail", EXIT_FAIL)
    } else if all_inapplicable {
        ("inapplicable", EXIT_INAPPLICABLE)
    } else {
        ("pass", EXIT_PASS)
    };
    let check_values: Vec<Value> =
        results.iter().map(|r| json!({"check": r.name, "status": status_name(r.status), "detail": r.detail})).collect();
    let report = Report::new(a.meta(), Command::Verify, json!({"identity": identity, "checks": check_values}), verdict);
    let rendered = match config.format {
        OutputFormat::Json => render_json(&report),
        _ => {
            let mut out = format!("{} (length {})\n", a.source, word.len());
            let mark = if identity.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "identity: lhs {} rhs {} {mark}", identity.lhs, identity.rhs);
            for r in &results {
                let _ = writeln!(out, "{}: {}", r.name, status_name(r.status).to_uppercase());
                if let Some(per_n) = r.detail.as_array() {
                    for d in per_n {
                        let _ = writeln!(out, "  n = {}: {}", d["n"], d["status"].as_str().unwrap_or("?"));
                    }
                } else if let Some(reason) = r.detail.get("reason").and_then(Value::as_str) {
                    let _ = writeln!(out, "  {reason}");
                }
            }
            let _ = writeln!(out, "verdict: {verdict}");
            out
        }
    };
    Ok(Outcome { report, rendered, exit_code })
}

pub fn cmd_harness(config: &RunConfig) -> Result<Outcome> {
    let source = config.source()?;
    if matches!(source, WordSource::Literal(_)) {
        return Err(Error::Config("harness needs an infinite word source".into()));
    }
    let schedule = config.schedule.clone().unwrap_or_else(|| DEFAULT_SCHEDULE.to_vec());
    let r = analyze_infinite(&source, &schedule)?;
    let verdict = to_value(&r.verdict).as_str().unwrap_or_default().to_string();
    let report = Report::new(r.meta.clone(), Command::Harness, to_value(&r), &verdict);
    let rendered = match config.format {
        OutputFormat::Json => render_json(&report),
        OutputFormat::Csv => {
            let mut out = String::from("length,D,stabilized,trusted_n,M,sum_T_trusted\n");
            for p in &r.prefixes {
                let trusted = p.trusted_n.map_or(String::new(), |t| t.to_string());
                let m = p.m().map_or(String::new(), |m| m.to_string());
                let _ = writeln!(out, "{},{},{},{trusted},{m},{}", p.length, p.defect, p.stabilized, p.trusted_t_sum);
            }
            out
        }
        _ => {
            let mut out = format!("{}\n", r.meta.source);
            let _ = writeln!(out, "{:>8} {:>6} {:>10} {:>9} {:>6}", "length", "D", "stabilized", "trusted_n", "M");
            for p in &r.prefixes {
                let trusted = p.trusted_n.map_or("-".into(), |t| t.to_string());
                let m = p.m().map_or("-".into(), |m| m.to_string());
                let _ = writeln!(out, "{:>8} {:>6} {:>10} {:>9} {:>6}", p.length, p.defect, p.stabilized, trusted, m);
            }
            let show = |x: Option<usize>| x.map_or("-".into(), |v| v.to_string());
            let th = r.thresholds;
            let _ = writeln!(out, "L = {}, M = {}, H = {}", show(th.l), show(th.m), show(th.h));
            let _ = writeln!(out, "2D = {}, sum T(0..=M) = {}", r.lhs, r.rhs);
            let _ = writeln!(out, "verdict: {verdict}");
            out
        }
    };
    Ok(Outcome { report, rendered, exit_code: EXIT_PASS })
}

pub fn cmd_graph(config: &RunConfig) -> Result<Outcome> {
    let source = config.source()?;
    let word = config.word(&source)?;
    let (n, _) = config.n_range.ok_or_else(|| Error::Config("graph needs --n".into()))?;
    if n + 1 > word.len() {
        return Err(Error::LengthOutOfRange { requested: n + 1, len: word.len() });
    }
    let a = PrefixAnalysis::with_source(&word, &source.describe());
    let graph = GnGraph::build(&FactorIndex::build(&word, n + 1)?, n)?;
    let check = graph.check(a.t(n));
    let report =
        Report::new(a.meta(), Command::Graph, json!({"graph": graph, "check": check}), status_name(check.status));
    let rendered = match config.format {
        OutputFormat::Json => render_json(&report),
        OutputFormat::Dot => graph.to_dot(),
        _ => graph.to_tsv(),
    };
    Ok(Outcome { report, rendered, exit_code: EXIT_PASS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(cmd: Command, s: &str) -> RunConfig {
        RunConfig::new(WordInput::Text(s.into()), cmd)
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..10").unwrap(), (1, 10));
        assert_eq!(parse_range("3").unwrap(), (3, 3));
        assert_eq!(parse_range("2..=4").unwrap(), (2, 4));
        assert!(parse_range("5..1").is_err());
        assert_eq!(parse_schedule("10, 20").unwrap(), [10, 20]);
    }

    #[test]
    fn profile_aab() {
        let out = cmd_profile(&text(Command::Profile, "aab")).unwrap();
        let rows = out.report.results["rows"].as_array().unwrap();
        let col = |k: &str| rows.iter().map(|r| r[k].as_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(col("C"), [1, 2, 2, 1]);
        assert_eq!(col("P"), [1, 2, 1, 0]);
        assert_eq!(col("T"), [0, -1, 0, 1]);
        assert_eq!(out.report.results["defect"], 0);
    }

    #[test]
    fn profile_empty_word() {
        let mut c = text(Command::Profile, "");
        c.format = OutputFormat::Csv;
        let out = run(&c).unwrap();
        assert_eq!(out.rendered.lines().count(), 2);
    }

    #[test]
    fn verify_exit_codes() {
        let out = run(&text(Command::Verify, "abca")).unwrap();
        assert_eq!(out.exit_code, EXIT_PASS);
        assert_eq!(out.report.results["identity"]["lhs"], 2);
        let mut c = text(Command::Verify, "aab");
        c.checks = vec![Check::Nonneg];
        assert_eq!(run(&c).unwrap().exit_code, EXIT_INAPPLICABLE);
    }

    #[test]
    fn dot_is_graph_only() {
        let mut c = text(Command::Profile, "ab");
        c.format = OutputFormat::Dot;
        assert!(run(&c).is_err());
    }
}
