//! Evidence for `2·D(u) = Σ T(n)` on infinite words over a schedule of
//! prefixes, with the thresholds `L`, `M`, `H` and a JSON round trip.
//!
//!     cargo run --example stabilization_harness

use palindefect::identity::{analyze_infinite, derive_verdict, StabilizationReport};
use palindefect::{Alphabet, Word, WordSource};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let schedule = [1000, 2000, 4000];
    let mut sources = vec![WordSource::fibonacci(), WordSource::thue_morse()];
    for block in ["aabaa", "abcacb", "abcaacba"] {
        sources.push(WordSource::periodic(Word::from_text(block)?)?);
    }
    sources.push(WordSource::Random { alphabet: Alphabet::new(['a', 'b'])?, seed: 17 });

    for source in &sources {
        let r = analyze_infinite(source, &schedule)?;
        let defects: Vec<usize> = r.prefixes.iter().map(|p| p.defect).collect();
        let t = r.thresholds;
        println!("{}", r.meta.source);
        println!(
            "  D per prefix {defects:?}; L = {:?}, M = {:?}, H = {:?}; 2D = {}, sum T = {}; {:?}",
            t.l, t.m, t.h, r.lhs, r.rhs, r.verdict
        );

        let json = serde_json::to_string(&r)?;
        let back: StabilizationReport = serde_json::from_str(&json)?;
        assert_eq!(derive_verdict(&back.prefixes, &back.thresholds, back.lhs, back.rhs), r.verdict);
    }
    Ok(())
}
