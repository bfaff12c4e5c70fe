//! The counting statements for a prefix `q` that already carries the whole
//! defect: `C(H) - P(H)` against palindromes first seen after `q`, and the
//! prefix-sum form `|p| - |q|`.
//!
//!     cargo run --example counting

use palindefect::identity::PrefixAnalysis;
use palindefect::{Word, WordSource};

fn main() -> palindefect::Result<()> {
    let words = [
        ("fibonacci", WordSource::fibonacci().prefix(3000)?),
        ("(aabaa)^w", WordSource::periodic(Word::from_text("aabaa")?)?.prefix(3000)?),
        ("(abcaacba)^w", WordSource::periodic(Word::from_text("abcaacba")?)?.prefix(3000)?),
        ("abca a^40", Word::from_text(&format!("abca{}", "a".repeat(40)))?),
    ];
    for (name, w) in words {
        let a = PrefixAnalysis::new(&w);
        let q = a.estimate.first_index;
        println!("{name}: D = {}, reached at |q| = {q}, trusted n <= {:?}", a.defect.defect, a.trusted_n());
        let mut reports = vec![a.counting_complexity(q)];
        reports.extend((q + 1..q + 4).map(|h| a.counting_window(q, h)));
        reports.extend([q + 1, q + 10, w.len()].map(|p| a.counting_prefix_sum(q, p)));
        for r in reports {
            let why = r.reason.map(|s| format!(" ({s})")).unwrap_or_default();
            println!(
                "  {:<17} |q| = {:<3} bound = {:<5} {:>5} vs {:<5} {:?}{why}",
                r.statement, r.q_len, r.bound, r.lhs, r.rhs, r.status
            );
        }
        println!();
    }
    Ok(())
}
