//! Returns between occurrences of `x` and `mirror(x)`.
//!
//! For an aperiodic word closed under reversal, `T(n) = 0` for all `n >= N`
//! exactly when every factor that starts with `x` or `mirror(x)`, ends with one
//! of them and contains no other occurrence of either (for `|x| >= N`) is a
//! palindrome. On a prefix those factors are read off consecutive occurrences,
//! one length at a time, using classes over `w · # · mirror(w)` so that a
//! window and its mirror image are recognised in constant time.

use serde::{Deserialize, Serialize};

use super::{PrefixAnalysis, Status};
use crate::palindromes::PalindromeTable;
use crate::refine::Refiner;
use crate::words::Word;

const EXAMPLE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnViolation {
    pub start: usize,
    pub end: usize,
    pub factor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthScan {
    pub n: usize,
    /// Consecutive occurrence pairs inspected.
    pub returns: usize,
    /// Non-palindromic returns (occurrence count, not distinct factors).
    pub violations: usize,
    /// Pairs where `x` (not a palindrome) is followed by `x` again rather than
    /// by `mirror(x)`.
    pub alternation_breaks: usize,
    pub examples: Vec<ReturnViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnScan {
    pub n_lo: usize,
    pub n_hi: usize,
    pub per_length: Vec<LengthScan>,
}

impl ReturnScan {
    pub fn violations(&self) -> usize {
        self.per_length.iter().map(|l| l.violations).sum()
    }

    pub fn returns(&self) -> usize {
        self.per_length.iter().map(|l| l.returns).sum()
    }

    /// Smallest `N` such that no length in `N..=n_hi` has a violation.
    pub fn clean_from(&self) -> Option<usize> {
        match self.per_length.iter().rposition(|l| l.violations > 0) {
            None => Some(self.n_lo),
            Some(i) if i + 1 < self.per_length.len() => Some(self.per_length[i + 1].n),
            Some(_) => None,
        }
    }

    pub fn length(&self, n: usize) -> Option<&LengthScan> {
        self.per_length.iter().find(|l| l.n == n)
    }
}

/// Scans every length in `n_lo..=n_hi` (clamped to `|w|`) for non-palindromic
/// returns and alternation breaks.
pub fn scan_mirror_returns(word: &Word, n_lo: usize, n_hi: usize) -> ReturnScan {
    let w = word.symbols();
    let len = w.len();
    let n_hi = n_hi.min(len);
    let sigma = word.alphabet().size();
    let mut s = Vec::with_capacity(2 * len + 1);
    s.extend_from_slice(w);
    s.push(sigma as u8);
    s.extend(w.iter().rev());

    let table = PalindromeTable::new(w);
    let mut refiner = Refiner::new(sigma + 1);
    let mut ids = vec![0u32; s.len() + 1];
    let mut classes = 1usize;
    let mut last: Vec<(u32, usize, u32)> = Vec::new();
    let mut per_length = Vec::new();

    for n in 0..=n_hi {
        if n > 0 {
            let (next, count) = refiner.refine(&s, &ids, classes, n);
            ids = next;
            classes = count;
        }
        if n < n_lo {
            continue;
        }
        // last[c] = (stamp, position, own class) of the latest occurrence
        last.clear();
        last.resize(classes, (u32::MAX, 0, 0));
        let mut scan = LengthScan { n, returns: 0, violations: 0, alternation_breaks: 0, examples: Vec::new() };
        for i in 0..=len - n {
            let own = ids[i];
            let mirrored = ids[len + 1 + (len - i - n)];
            let key = own.min(mirrored) as usize;
            let (stamp, prev, prev_class) = last[key];
            if stamp == n as u32 {
                scan.returns += 1;
                if !table.is_palindrome(prev, i + n) {
                    scan.violations += 1;
                    if scan.examples.len() < EXAMPLE_LIMIT {
                        scan.examples.push(ReturnViolation {
                            start: prev,
                            end: i + n,
                            factor: word.slice(prev, i + n).to_string(),
                        });
                    }
                }
                if own != mirrored && prev_class == own {
                    scan.alternation_breaks += 1;
                }
            }
            last[key] = (n as u32, i, own);
        }
        per_length.push(scan);
    }
    ReturnScan { n_lo, n_hi, per_length }
}

/// Both sides of the tail equivalence for a candidate `N = n_lo`: `T`
/// vanishes on trusted lengths from `N` on, and every return of length
/// `N..=n_hi` is a palindrome. The check passes when the sides agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub status: Status,
    pub n_lo: usize,
    pub n_hi: usize,
    pub t_vanishes: Option<bool>,
    pub returns_palindromic: Option<bool>,
    pub violations: usize,
    pub degenerate: bool,
    pub scan: Option<ReturnScan>,
    pub reason: Option<String>,
}

impl CharacterizationReport {
    fn inapplicable(n_lo: usize, n_hi: usize, degenerate: bool, reason: String) -> Self {
        Self {
            status: Status::Inapplicable,
            n_lo,
            n_hi,
            t_vanishes: None,
            returns_palindromic: None,
            violations: 0,
            degenerate,
            scan: None,
            reason: Some(reason),
        }
    }
}

impl PrefixAnalysis {
    fn evidence_gate(&self, n_lo: usize, n_hi: usize) -> Result<(), (bool, String)> {
        let Some(t) = self.trusted_n() else {
            return Err((false, "no trusted range".into()));
        };
        if !self.aperiodic_on_evidence() {
            return Err((true, "word is not aperiodic on the trusted range".into()));
        }
        if n_lo > n_hi || n_hi > t {
            return Err((false, format!("need N <= n_hi <= trusted_n = {t}, got {n_lo}..={n_hi}")));
        }
        Ok(())
    }
}

/// The return-word characterisation with `N = n_lo`, on an aperiodic,
/// reversal-closed prefix.
pub fn check_characterization(analysis: &PrefixAnalysis, n_lo: usize, n_hi: usize) -> CharacterizationReport {
    if let Err((degenerate, reason)) = analysis.evidence_gate(n_lo, n_hi) {
        return CharacterizationReport::inapplicable(n_lo, n_hi, degenerate, reason);
    }
    let scan = scan_mirror_returns(&analysis.word, n_lo, n_hi);
    if scan.returns() == 0 {
        return CharacterizationReport::inapplicable(n_lo, n_hi, true, "no factor returns inside the prefix".into());
    }
    let trusted = analysis.trusted_n().expect("gate checked");
    let t_vanishes = (n_lo..=trusted).all(|n| analysis.t(n) == 0);
    let violations = scan.violations();
    let returns_palindromic = violations == 0;
    CharacterizationReport {
        status: if t_vanishes == returns_palindromic { Status::Pass } else { Status::Fail },
        n_lo,
        n_hi,
        t_vanishes: Some(t_vanishes),
        returns_palindromic: Some(returns_palindromic),
        violations,
        degenerate: false,
        scan: Some(scan),
        reason: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BridgeAgreement {
    BothExist,
    BothFail,
    OnlyDefectSide,
    OnlyReturnSide,
}

/// Both sides of the bridge between "eventually every longest palindromic
/// suffix is unioccurrent" and "eventually every return is a palindrome".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    /// Smallest `H` after which every prefix has a unioccurrent longest
    /// palindromic suffix, if the defect has stabilised.
    pub h_evidence: Option<usize>,
    /// Smallest `N` with no non-palindromic return for lengths `N..=n_hi`.
    pub n_evidence: Option<usize>,
    pub n_hi: Option<usize>,
    pub agreement: BridgeAgreement,
    /// No violation for lengths `H..=n_hi` (the `N = H` direction).
    pub forward_holds: Option<bool>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl BridgeReport {
    pub fn status(&self) -> Status {
        if !self.applicable {
            Status::Inapplicable
        } else if self.forward_holds == Some(false) {
            Status::Fail
        } else {
            Status::Pass
        }
    }
}

/// Evaluates both sides on the prefix; `n_cap` bounds the scanned lengths
/// below the trusted range.
pub fn check_bridge(analysis: &PrefixAnalysis, n_cap: Option<usize>) -> BridgeReport {
    let h_evidence = analysis.estimate.stabilized.then(|| analysis.defect.last_increment() + 1);
    let Some(t) = analysis.trusted_n() else {
        return BridgeReport {
            h_evidence,
            n_evidence: None,
            n_hi: None,
            agreement: if h_evidence.is_some() { BridgeAgreement::OnlyDefectSide } else { BridgeAgreement::BothFail },
            forward_holds: None,
            applicable: false,
            reason: Some("no trusted range".into()),
        };
    };
    let n_hi = n_cap.map_or(t, |cap| cap.min(t));
    let scan = scan_mirror_returns(&analysis.word, 1, n_hi);
    let n_evidence = if n_hi >= 1 { scan.clean_from() } else { None };
    let forward_holds = h_evidence.map(|h| scan.per_length.iter().filter(|l| l.n >= h).all(|l| l.violations == 0));
    let agreement = match (h_evidence.is_some(), n_evidence.is_some()) {
        (true, true) => BridgeAgreement::BothExist,
        (false, false) => BridgeAgreement::BothFail,
        (true, false) => BridgeAgreement::OnlyDefectSide,
        (false, true) => BridgeAgreement::OnlyReturnSide,
    };
    let aperiodic = analysis.aperiodic_on_evidence();
    BridgeReport {
        h_evidence,
        n_evidence,
        n_hi: Some(n_hi),
        agreement,
        forward_holds,
        applicable: aperiodic,
        reason: (!aperiodic).then(|| "word is not aperiodic on the trusted range".into()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternationReport {
    pub status: Status,
    pub n_lo: usize,
    pub n_hi: usize,
    pub breaks: usize,
    pub pairs_checked: usize,
    pub reason: Option<String>,
}

/// Occurrences of `x` and `mirror(x)` alternate for every factor with
/// `n_lo <= |x| <= n_hi`; applicable when `T` vanishes on trusted lengths
/// from `n_lo` on.
pub fn check_alternation(analysis: &PrefixAnalysis, n_lo: usize, n_hi: usize) -> AlternationReport {
    let inapplicable = |reason: String| AlternationReport {
        status: Status::Inapplicable,
        n_lo,
        n_hi,
        breaks: 0,
        pairs_checked: 0,
        reason: Some(reason),
    };
    if let Err((_, reason)) = analysis.evidence_gate(n_lo, n_hi) {
        return inapplicable(reason);
    }
    let t = analysis.trusted_n().expect("gate checked");
    if let Some(n) = (n_lo..=t).find(|&n| analysis.t(n) != 0) {
        return inapplicable(format!("T({n}) = {} is nonzero", analysis.t(n)));
    }
    let scan = scan_mirror_returns(&analysis.word, n_lo, n_hi);
    let breaks: usize = scan.per_length.iter().map(|l| l.alternation_breaks).sum();
    AlternationReport {
        status: if breaks == 0 { Status::Pass } else { Status::Fail },
        n_lo,
        n_hi,
        breaks,
        pairs_checked: scan.returns(),
        reason: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::WordSource;

    #[test]
    fn abca_has_a_non_palindromic_return_of_a() {
        let w = Word::from_text("abca").unwrap();
        let scan = scan_mirror_returns(&w, 1, 1);
        let l1 = scan.length(1).unwrap();
        assert_eq!(l1.violations, 1);
        assert_eq!(l1.examples[0].factor, "abca");
        assert_eq!(scan.clean_from(), None);
    }

    #[test]
    fn fibonacci_returns_are_palindromes() {
        let fib = WordSource::fibonacci().prefix(5000).unwrap();
        let a = PrefixAnalysis::new(&fib);
        let r = check_characterization(&a, 1, 40);
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.t_vanishes, Some(true));
        let b = check_bridge(&a, Some(40));
        assert_eq!((b.h_evidence, b.n_evidence, b.agreement), (Some(1), Some(1), BridgeAgreement::BothExist));
        assert_eq!(b.status(), Status::Pass);
        assert_eq!(check_alternation(&a, 2, 20).status, Status::Pass);
    }

    #[test]
    fn thue_morse_sides_agree() {
        let tm = WordSource::thue_morse().prefix(4096).unwrap();
        let a = PrefixAnalysis::new(&tm);
        let r = check_characterization(&a, 1, 30);
        assert_eq!((r.t_vanishes, r.returns_palindromic, r.status), (Some(false), Some(false), Status::Pass));
    }

    #[test]
    fn unary_word_is_degenerate() {
        let w = Word::from_text(&"a".repeat(50)).unwrap();
        let a = PrefixAnalysis::new(&w);
        let r = check_characterization(&a, 1, 3);
        assert_eq!(r.status, Status::Inapplicable);
        assert!(r.degenerate);
    }

    #[test]
    fn bridge_on_abca_tail() {
        let w = Word::from_text(&format!("abca{}", "a".repeat(100))).unwrap();
        let b = check_bridge(&PrefixAnalysis::new(&w), None);
        assert_eq!(b.h_evidence, Some(5));
    }

    #[test]
    fn alternation_breaks_detected() {
        // ab occurs at 0 and 3 with no ba in between
        let w = Word::from_text("abcabba").unwrap();
        let scan = scan_mirror_returns(&w, 2, 2);
        assert_eq!(scan.length(2).unwrap().alternation_breaks, 1);
    }
}
