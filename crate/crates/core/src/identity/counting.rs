//! Non-negativity of `T` and the two counting statements relating a prefix
//! `q` with `D(q) = D(u)` to palindromes first seen after it.

use serde::{Deserialize, Serialize};

use super::{ComplexityProfile, PrefixAnalysis, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegReport {
    pub status: Status,
    pub checked_up_to: Option<usize>,
    /// `(n, T(n))` with `T(n) < 0`.
    pub violations: Vec<(usize, i64)>,
    pub reason: Option<String>,
}

/// `T(n) >= 0` for every trusted `n`; needs closure evidence up to
/// `trusted_n + 1`.
pub fn check_t_nonnegative(profile: &ComplexityProfile, closure: &[bool]) -> NonnegReport {
    let inapplicable = |reason: &str| NonnegReport {
        status: Status::Inapplicable,
        checked_up_to: None,
        violations: Vec::new(),
        reason: Some(reason.to_string()),
    };
    let Some(trusted) = profile.trusted_n else {
        return inapplicable("no trusted range");
    };
    let limit = trusted.min(profile.t.len().saturating_sub(1));
    if profile.t.is_empty() {
        return inapplicable("profile has no T values");
    }
    if (0..=limit + 1).any(|m| !closure.get(m).copied().unwrap_or(true)) {
        return inapplicable("reversal closure fails inside the trusted range");
    }
    let violations: Vec<(usize, i64)> = (0..=limit).filter(|&n| profile.t[n] < 0).map(|n| (n, profile.t[n])).collect();
    NonnegReport {
        status: if violations.is_empty() { Status::Pass } else { Status::Fail },
        checked_up_to: Some(limit),
        violations,
        reason: None,
    }
}

/// Both sides of one counting statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingReport {
    pub statement: String,
    pub q_len: usize,
    /// `H` for the complexity form, `|p|` for the prefix-sum form.
    pub bound: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub status: Status,
    pub reason: Option<String>,
}

impl CountingReport {
    fn inapplicable(statement: &str, q_len: usize, bound: usize, reason: String) -> Self {
        Self {
            statement: statement.into(),
            q_len,
            bound,
            lhs: 0,
            rhs: 0,
            status: Status::Inapplicable,
            reason: Some(reason),
        }
    }

    fn decided(statement: &str, q_len: usize, bound: usize, lhs: i64, rhs: i64) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Self { statement: statement.into(), q_len, bound, lhs, rhs, status, reason: None }
    }
}

impl PrefixAnalysis {
    fn q_attains_defect(&self, q_len: usize) -> Result<(), String> {
        if q_len > self.word.len() {
            return Err(format!("q_len {q_len} exceeds prefix length {}", self.word.len()));
        }
        if !self.estimate.stabilized {
            return Err("defect has not stabilised on this prefix".into());
        }
        let dq = self.defect.prefix_defects[q_len];
        if dq != self.estimate.candidate {
            return Err(format!("D(q) = {dq} differs from the defect estimate {}", self.estimate.candidate));
        }
        Ok(())
    }

    /// `C(H) - P(H) = 2·#{palindromes shorter than H not in q}` with
    /// `H = |q| + 1`.
    pub fn counting_complexity(&self, q_len: usize) -> CountingReport {
        let mut report = self.counting_window(q_len, q_len + 1);
        report.statement = "counting_1".into();
        report
    }

    /// `C(H) - P(H) = 2·#{palindromes shorter than H not in q} - 2(H - |q| - 1)`
    /// for any `H > |q|`.
    pub fn counting_window(&self, q_len: usize, h: usize) -> CountingReport {
        const NAME: &str = "counting_general";
        if h <= q_len {
            return CountingReport::inapplicable(NAME, q_len, h, format!("H = {h} must exceed |q| = {q_len}"));
        }
        if let Err(reason) = self.q_attains_defect(q_len) {
            return CountingReport::inapplicable(NAME, q_len, h, reason);
        }
        match self.trusted_n() {
            Some(t) if h <= t + 1 => {}
            _ => {
                return CountingReport::inapplicable(
                    NAME,
                    q_len,
                    h,
                    format!("prefix is not known to contain every factor of length {h}"),
                )
            }
        }
        let lhs = self.c[h] as i64 - self.p[h] as i64;
        let fresh = self.palindromes_after(q_len, usize::MAX, |len| len < h) as i64;
        let rhs = 2 * fresh - 2 * (h - q_len - 1) as i64;
        CountingReport::decided(NAME, q_len, h, lhs, rhs)
    }

    /// `#{palindromes of p of length <= |q| not in q} + Σ_{n=|q|+1}^{|p|} P_p(n)
    /// = |p| - |q|`.
    pub fn counting_prefix_sum(&self, q_len: usize, p_len: usize) -> CountingReport {
        const NAME: &str = "counting_2";
        if p_len <= q_len || p_len > self.word.len() {
            return CountingReport::inapplicable(NAME, q_len, p_len, format!("need |q| < |p| <= {}", self.word.len()));
        }
        if let Err(reason) = self.q_attains_defect(q_len) {
            return CountingReport::inapplicable(NAME, q_len, p_len, reason);
        }
        let short_fresh = self.palindromes_after(q_len, p_len, |len| len <= q_len);
        let long_in_p = self.tree.palindromes().filter(|p| p.len > q_len && p.first_end <= p_len).count();
        CountingReport::decided(NAME, q_len, p_len, (short_fresh + long_in_p) as i64, (p_len - q_len) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{reversal_closure_profile, Word, WordSource};

    #[test]
    fn nonnegative_on_fibonacci_and_skipped_for_aab() {
        let fib = WordSource::fibonacci().prefix(3000).unwrap();
        let a = PrefixAnalysis::new(&fib);
        let r = check_t_nonnegative(&a.profile(200), &a.closure);
        assert_eq!(r.status, Status::Pass);

        let aab = Word::from_text("aab").unwrap();
        let a = PrefixAnalysis::new(&aab);
        let closure = reversal_closure_profile(&aab, 3).unwrap();
        assert_eq!(check_t_nonnegative(&a.profile(3), &closure).status, Status::Inapplicable);
    }

    #[test]
    fn counting_on_fibonacci() {
        let fib = WordSource::fibonacci().prefix(2000).unwrap();
        let a = PrefixAnalysis::new(&fib);
        let r = a.counting_complexity(1);
        assert_eq!((r.lhs, r.rhs, r.status), (2, 2, Status::Pass));
        let r = a.counting_window(1, 3);
        assert_eq!((r.lhs, r.rhs, r.status), (2, 2, Status::Pass));
        assert_eq!(a.counting_prefix_sum(1, 50).status, Status::Pass);
        assert_eq!(a.counting_window(3, 3).status, Status::Inapplicable);
    }

    #[test]
    fn counting_2_on_abca_tail() {
        let w = Word::from_text(&format!("abca{}", "a".repeat(20))).unwrap();
        let a = PrefixAnalysis::new(&w);
        let r = a.counting_prefix_sum(4, 24);
        assert_eq!((r.lhs, r.rhs, r.status), (20, 20, Status::Pass));
        assert_eq!(a.counting_prefix_sum(3, 24).status, Status::Inapplicable);
        let r = a.counting_prefix_sum(4, 5);
        assert_eq!((r.lhs, r.rhs), (1, 1));
    }
}
