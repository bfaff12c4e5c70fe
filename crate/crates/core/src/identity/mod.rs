//! The gap `T(n)`, the finite identity `2·D(w) = Σ_{n=0}^{|w|} T_w(n)`, and
//! the prefix-evidence checks built on top of them.
//!
//! Statements about an infinite word are only ever checked on a finite prefix.
//! A length `n` is *trusted* for a prefix of length `ℓ` when the factor and
//! palindromic complexities of the first `⌈ℓ/2⌉` letters already agree with
//! those of the whole prefix for every `m <= n + 1`, and the prefix is closed
//! under reversal up to length `n + 1`. Checks about the infinite word are
//! restricted to trusted lengths and report evidence, never proofs.

mod characterization;
mod counting;
mod harness;

pub use characterization::{
    check_alternation, check_bridge, check_characterization, scan_mirror_returns, AlternationReport, BridgeAgreement,
    BridgeReport, CharacterizationReport, LengthScan, ReturnScan, ReturnViolation,
};
pub use counting::{check_t_nonnegative, CountingReport, NonnegReport};
pub use harness::{analyze_infinite, derive_verdict, HarnessVerdict, PrefixSummary, StabilizationReport, Thresholds};

use serde::{Deserialize, Serialize};

use crate::factors::full_complexity;
use crate::palindromes::{defect_profile_from, infinite_defect_estimate, DefectEstimate, DefectProfile, Eertree};
use crate::words::{reversal_closure_profile, Word};
use crate::{Error, Result};

/// Result of a check that may not apply to the given evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordMeta {
    pub source: String,
    pub length: usize,
}

/// `T(n) = C(n+1) - C(n) + 2 - P(n+1) - P(n)` for `n < |C| - 1`.
pub fn t_profile(c: &[u64], p: &[u64]) -> Result<Vec<i64>> {
    if c.len() != p.len() {
        return Err(Error::ProfileLengthMismatch { c: c.len(), p: p.len() });
    }
    if c.len() < 2 {
        return Err(Error::ProfileTooShort);
    }
    Ok((0..c.len() - 1).map(|n| c[n + 1] as i64 - c[n] as i64 + 2 - p[n + 1] as i64 - p[n] as i64).collect())
}

/// Largest `n` whose profiles are certified on a prefix, with the pieces of
/// evidence behind it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrustedRange {
    pub trusted_n: Option<usize>,
    pub half_length: usize,
    /// Smallest `m` where the half-prefix and full-prefix complexities differ.
    pub first_disagreement: Option<usize>,
    /// Smallest `m` where reversal closure fails.
    pub first_closure_failure: Option<usize>,
}

fn padded(mut v: Vec<u64>, len: usize) -> Vec<u64> {
    v.resize(len, 0);
    v
}

fn trusted_range_of(word: &Word, c_full: &[u64], p_full: &[u64], closure: &[bool]) -> TrustedRange {
    let length = word.len();
    let half_length = length.div_ceil(2);
    let half = word.slice(0, half_length);
    let c_half = padded(full_complexity(&half), length + 2);
    let p_half = padded(Eertree::build(&half).counts_by_length(length + 1), length + 2);
    let first_disagreement = (0..=length + 1).find(|&m| c_half[m] != c_full[m] || p_half[m] != p_full[m]);
    let first_closure_failure = (0..=length).find(|&m| !closure[m]);
    let first_bad = first_disagreement.into_iter().chain(first_closure_failure).min();
    let trusted_n = match first_bad {
        None => Some(length),
        Some(m) if m >= 2 => Some(m - 2),
        Some(_) => None,
    };
    TrustedRange { trusted_n, half_length, first_disagreement, first_closure_failure }
}

pub fn trusted_range(word: &Word) -> TrustedRange {
    let c_full = full_complexity(word);
    let p_full = Eertree::build(word).counts_by_length(word.len() + 1);
    let closure = reversal_closure_profile(word, word.len()).expect("n_max within word");
    trusted_range_of(word, &c_full, &p_full, &closure)
}

/// `T` over `0..=n_max`, the `C` and `P` values it is built from (one
/// more length), and the trusted-range marker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    /// `C(0..=n_max + 1)`.
    pub c: Vec<u64>,
    /// `P(0..=n_max + 1)`.
    pub p: Vec<u64>,
    pub t: Vec<i64>,
    pub trusted_n: Option<usize>,
    pub meta: WordMeta,
}

impl ComplexityProfile {
    pub fn compute(word: &Word, n_max: usize, source: &str) -> Self {
        PrefixAnalysis::with_source(word, source).profile(n_max)
    }

    pub fn n_max(&self) -> usize {
        self.t.len() - 1
    }

    pub fn is_trusted(&self, n: usize) -> bool {
        self.trusted_n.is_some_and(|t| n <= t)
    }

    /// Re-derives `T` from `C` and `P`.
    pub fn t_is_consistent(&self) -> bool {
        t_profile(&self.c, &self.p).is_ok_and(|t| t == self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub meta: WordMeta,
    pub defect: usize,
    /// `2·D(w)`.
    pub lhs: i64,
    /// `Σ_{n=0}^{|w|} T_w(n)`.
    pub rhs: i64,
    pub residual: i64,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(meta: WordMeta, defect: usize, rhs: i64) -> Self {
        let lhs = 2 * defect as i64;
        Self { meta, defect, lhs, rhs, residual: lhs - rhs, pass: lhs == rhs }
    }

    /// Residual and pass flag agree with the raw sides.
    pub fn is_consistent(&self) -> bool {
        self.lhs == 2 * self.defect as i64 && self.residual == self.lhs - self.rhs && self.pass == (self.residual == 0)
    }
}

/// Checks the finite identity on `w`; it holds for every finite word, so a
/// failing report means the computation is wrong.
pub fn verify_finite_identity(w: &Word) -> IdentityReport {
    verify_with_source(w, "literal")
}

fn verify_with_source(w: &Word, source: &str) -> IdentityReport {
    let tree = Eertree::build(w);
    let defect = defect_profile_from(&tree).defect;
    let c = full_complexity(w);
    let p = tree.counts_by_length(w.len() + 1);
    let rhs = t_profile(&c, &p).expect("profiles have |w| + 2 entries").iter().sum();
    IdentityReport::new(WordMeta { source: source.to_string(), length: w.len() }, defect, rhs)
}

/// Everything computed once about a prefix: palindromic tree, defect
/// profile and estimate, whole-word complexities, closure and trusted range.
pub struct PrefixAnalysis {
    pub word: Word,
    pub source: String,
    pub tree: Eertree,
    pub defect: DefectProfile,
    pub estimate: DefectEstimate,
    /// `C(0..=|w| + 1)`.
    pub c: Vec<u64>,
    /// `P(0..=|w| + 1)`.
    pub p: Vec<u64>,
    /// Reversal closure for `0..=|w|`.
    pub closure: Vec<bool>,
    pub trusted: TrustedRange,
}

impl PrefixAnalysis {
    pub fn new(word: &Word) -> Self {
        Self::with_source(word, "literal")
    }

    pub fn with_source(word: &Word, source: &str) -> Self {
        let tree = Eertree::build(word);
        let defect = defect_profile_from(&tree);
        let estimate = infinite_defect_estimate(&defect.prefix_defects);
        let c = full_complexity(word);
        let p = tree.counts_by_length(word.len() + 1);
        let closure = reversal_closure_profile(word, word.len()).expect("n_max within word");
        let trusted = trusted_range_of(word, &c, &p, &closure);
        Self { word: word.clone(), source: source.to_string(), tree, defect, estimate, c, p, closure, trusted }
    }

    pub fn meta(&self) -> WordMeta {
        WordMeta { source: self.source.clone(), length: self.word.len() }
    }

    pub fn trusted_n(&self) -> Option<usize> {
        self.trusted.trusted_n
    }

    /// `T(n)` of the prefix as a finite word, `n <= |w|`.
    pub fn t(&self, n: usize) -> i64 {
        self.c[n + 1] as i64 - self.c[n] as i64 + 2 - self.p[n + 1] as i64 - self.p[n] as i64
    }

    /// `T(0..=trusted_n)`, empty when nothing is trusted.
    pub fn trusted_t(&self) -> Vec<i64> {
        self.trusted_n().map(|t| (0..=t).map(|n| self.t(n)).collect()).unwrap_or_default()
    }

    pub fn profile(&self, n_max: usize) -> ComplexityProfile {
        let c = padded(self.c.clone(), (n_max + 2).max(self.c.len()))[..=n_max + 1].to_vec();
        let p = padded(self.p.clone(), (n_max + 2).max(self.p.len()))[..=n_max + 1].to_vec();
        let t = t_profile(&c, &p).expect("equal lengths");
        ComplexityProfile { c, p, t, trusted_n: self.trusted_n(), meta: self.meta() }
    }

    pub fn identity(&self) -> IdentityReport {
        let rhs = (0..=self.word.len()).map(|n| self.t(n)).sum();
        IdentityReport::new(self.meta(), self.defect.defect, rhs)
    }

    /// `C(n) >= n + 1` over the trusted range.
    pub fn aperiodic_on_evidence(&self) -> bool {
        self.trusted_n().is_some_and(|t| (0..=t).all(|n| self.c[n] > n as u64))
    }

    /// Distinct nonempty palindromes whose first occurrence ends after
    /// position `q_len`, filtered by length.
    pub(crate) fn palindromes_after(&self, q_len: usize, end_limit: usize, keep_len: impl Fn(usize) -> bool) -> usize {
        self.tree.palindromes().filter(|p| p.first_end > q_len && p.first_end <= end_limit && keep_len(p.len)).count()
    }
}
