//! Factors by length, special factors, complete return words, `n`-simple
//! paths and occurrence alternation.
//!
//!     cargo run --example factor_structure

use palindefect::{FactorIndex, Word, WordSource};

fn main() -> palindefect::Result<()> {
    let tm = WordSource::thue_morse().prefix(512)?;
    let idx = FactorIndex::build(&tm, 8)?;
    println!("Thue-Morse prefix of length {}: C(0..=8) = {:?}", tm.len(), idx.complexity_profile());

    let factors: Vec<String> = idx.factors(3).map(|f| idx.factor_word(&f).to_string()).collect();
    println!("factors of length 3: {factors:?}");

    for n in 1..=4 {
        let s = idx.special_factors(n)?;
        let show = |ws: &[Word]| ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        println!("n = {n}: right special [{}], left special [{}]", show(&s.right_special), show(&s.left_special));
    }

    let x = Word::from_text("aba")?;
    let r = idx.complete_return_words(&x);
    let words: Vec<String> = r.words.iter().map(ToString::to_string).collect();
    println!("\n{} occurrences of {x}; complete return words {words:?}", r.occurrences);

    let paths = idx.n_simple_paths(2)?;
    println!("\n2-simple paths ({} truncated at the prefix end):", paths.truncated);
    for p in &paths.paths {
        println!("  {:<10} from {} to {}, {} occurrence(s)", p.word.to_string(), p.start(2), p.end(2), p.occurrences);
    }

    let fib = WordSource::fibonacci().prefix(2000)?;
    let idx = FactorIndex::build(&fib, 10)?;
    println!();
    for text in ["ab", "aab", "abaab", "abaabaab"] {
        let x = Word::from_text(text)?;
        println!("fibonacci: {text} and {} alternate? {:?}", x.mirror(), idx.alternation_check(&x));
    }
    Ok(())
}
