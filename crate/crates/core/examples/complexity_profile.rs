//! Factor complexity `C(n)`, palindromic complexity `P(n)`, the gap `T(n)`
//! and the trusted range of a prefix.
//!
//!     cargo run --example complexity_profile [length]

use palindefect::identity::{trusted_range, PrefixAnalysis};
use palindefect::{Word, WordSource};

fn main() -> palindefect::Result<()> {
    let length: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2000);

    let aab = PrefixAnalysis::new(&Word::from_text("aab")?);
    let p = aab.profile(3);
    println!("aab: C = {:?}, P = {:?}, T = {:?}\n", p.c, p.p, p.t);

    let sources =
        [WordSource::fibonacci(), WordSource::thue_morse(), WordSource::periodic(Word::from_text("abcacb")?)?];
    for source in &sources {
        let w = source.prefix(length)?;
        let a = PrefixAnalysis::with_source(&w, &source.describe());
        let range = trusted_range(&w);
        println!("{} (length {length})", a.source);
        println!(
            "  trusted n <= {:?}; half prefix agrees up to {:?}; closure fails at {:?}",
            range.trusted_n, range.first_disagreement, range.first_closure_failure
        );
        println!("  {:>3} {:>6} {:>4} {:>3}", "n", "C", "P", "T");
        for n in 0..=12 {
            println!("  {n:>3} {:>6} {:>4} {:>3}", a.c[n], a.p[n], a.t(n));
        }
        let t = a.trusted_t();
        println!("  sum of T over the trusted range: {}\n", t.iter().sum::<i64>());
    }
    Ok(())
}
