//! Evidence for `2·D(u) = Σ T(n)` on an infinite word, gathered over a
//! schedule of growing prefixes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{PrefixAnalysis, WordMeta};
use crate::words::WordSource;
use crate::{Error, Result};

/// What one prefix of the schedule says.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixSummary {
    pub length: usize,
    pub defect: usize,
    pub stabilized: bool,
    /// Shortest prefix attaining the defect, when stabilised.
    pub stabilization_index: Option<usize>,
    pub trusted_n: Option<usize>,
    /// Last trusted `n` with `T(n) != 0`, or 0 when `T` vanishes.
    pub last_nonzero_t: usize,
    /// `Σ T(n)` over `0..=trusted_n`.
    pub trusted_t_sum: i64,
}

impl PrefixSummary {
    pub fn from_analysis(a: &PrefixAnalysis) -> Self {
        let t = a.trusted_t();
        Self {
            length: a.word.len(),
            defect: a.defect.defect,
            stabilized: a.estimate.stabilized,
            stabilization_index: a.estimate.stabilization_index(),
            trusted_n: a.trusted_n(),
            last_nonzero_t: t.iter().rposition(|&x| x != 0).unwrap_or(0),
            trusted_t_sum: t.iter().sum(),
        }
    }

    /// `M` is only meaningful when `T` is seen to vanish after it.
    pub fn m(&self) -> Option<usize> {
        self.trusted_n.filter(|&t| self.last_nonzero_t < t).map(|_| self.last_nonzero_t)
    }
}

/// `L` (defect stabilisation), `M` (last nonzero `T`) and `H = max(L, M) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub h: Option<usize>,
}

impl Thresholds {
    pub fn of(summary: &PrefixSummary) -> Self {
        let l = summary.stabilization_index;
        let m = summary.m();
        let h = l.zip(m).map(|(l, m)| l.max(m) + 1);
        Self { l, m, h }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HarnessVerdict {
    EqualityHoldsOnEvidence,
    DefectUnboundedEvidence,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub meta: WordMeta,
    pub schedule: Vec<usize>,
    pub prefixes: Vec<PrefixSummary>,
    pub thresholds: Thresholds,
    /// `2·D` of the longest prefix.
    pub lhs: i64,
    /// `Σ_{n=0}^{M} T(n)` of the longest prefix, 0 when `M` is unknown.
    pub rhs: i64,
    pub verdict: HarnessVerdict,
}

impl StabilizationReport {
    pub fn longest(&self) -> &PrefixSummary {
        self.prefixes.last().expect("schedule has at least two entries")
    }
}

/// The verdict as a function of the recorded evidence, so a deserialised
/// report can be re-checked.
pub fn derive_verdict(prefixes: &[PrefixSummary], thresholds: &Thresholds, lhs: i64, rhs: i64) -> HarnessVerdict {
    let Some(last) = prefixes.last() else {
        return HarnessVerdict::Inconclusive;
    };
    if last.stabilized && thresholds.m.is_some() && lhs == rhs {
        HarnessVerdict::EqualityHoldsOnEvidence
    } else if !last.stabilized && prefixes.len() >= 2 && prefixes.windows(2).all(|p| p[0].defect < p[1].defect) {
        HarnessVerdict::DefectUnboundedEvidence
    } else {
        HarnessVerdict::Inconclusive
    }
}

/// Analyses every prefix length of `schedule` (strictly increasing, at least
/// two entries) in parallel.
pub fn analyze_infinite(source: &WordSource, schedule: &[usize]) -> Result<StabilizationReport> {
    if schedule.len() < 2 || schedule.windows(2).any(|p| p[0] >= p[1]) || schedule[0] == 0 {
        return Err(Error::BadSchedule);
    }
    let longest = *schedule.last().unwrap();
    let word = source.prefix(longest)?;
    let describe = source.describe();
    let mut analyses: Vec<(usize, PrefixSummary, i64)> = schedule
        .par_iter()
        .map(|&len| {
            let a = PrefixAnalysis::with_source(&word.slice(0, len), &describe);
            let summary = PrefixSummary::from_analysis(&a);
            let rhs = summary.m().map_or(0, |m| (0..=m).map(|n| a.t(n)).sum());
            (len, summary, rhs)
        })
        .collect();
    analyses.sort_by_key(|(len, ..)| *len);
    let rhs = analyses.last().unwrap().2;
    let prefixes: Vec<PrefixSummary> = analyses.into_iter().map(|(_, s, _)| s).collect();
    let last = prefixes.last().unwrap();
    let thresholds = Thresholds::of(last);
    let lhs = 2 * last.defect as i64;
    let verdict = derive_verdict(&prefixes, &thresholds, lhs, rhs);
    Ok(StabilizationReport {
        meta: WordMeta { source: describe, length: longest },
        schedule: schedule.to_vec(),
        prefixes,
        thresholds,
        lhs,
        rhs,
        verdict,
    })
}
