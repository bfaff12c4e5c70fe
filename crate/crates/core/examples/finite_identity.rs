//! `2·D(w) = Σ_{n=0}^{|w|} T_w(n)` on finite words.
//!
//!     cargo run --example finite_identity [word ...]

use palindefect::identity::verify_finite_identity;
use palindefect::{Alphabet, Word, WordSource};

fn main() -> palindefect::Result<()> {
    let mut words: Vec<Word> = std::env::args().skip(1).map(|s| Word::from_text(&s)).collect::<Result<_, _>>()?;
    if words.is_empty() {
        for text in ["", "a", "aab", "abca", "abcacbba", "aabbaabbab"] {
            words.push(Word::from_text(text)?);
        }
        words.push(WordSource::Random { alphabet: Alphabet::new(['a', 'b', 'c'])?, seed: 1 }.prefix(60)?);
    }
    for w in &words {
        let r = verify_finite_identity(w);
        let mark = if r.pass { "PASS" } else { "FAIL" };
        println!("{:<62} D = {:<3} 2D = {:<3} sum T = {:<3} {mark}", w.to_string(), r.defect, r.lhs, r.rhs);
    }

    // Exhaustive over short binary words.
    let ab = Alphabet::new(['a', 'b'])?;
    let mut checked = 0;
    for len in 0..=12usize {
        for bits in 0..1u32 << len {
            let text: String = (0..len).map(|i| if bits >> i & 1 == 1 { 'b' } else { 'a' }).collect();
            assert!(verify_finite_identity(&Word::parse(&ab, &text)?).pass);
            checked += 1;
        }
    }
    println!("identity holds on all {checked} binary words of length <= 12");
    Ok(())
}
