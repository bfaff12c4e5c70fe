//! The palindromic tree, longest palindromic suffixes, the defect of a finite
//! word and the guess for the defect of an infinite word.
//!
//!     cargo run --example palindromic_defect

use palindefect::palindromes::{defect_profile, infinite_defect_estimate, lps, palindromic_complexity_profile};
use palindefect::{Eertree, Word, WordSource};

fn main() -> palindefect::Result<()> {
    let w = Word::from_text("abcaab")?;
    let tree = Eertree::build(&w);
    let pals: Vec<String> = tree.palindromes().map(|p| tree.palindrome_word(p).to_string()).collect();
    println!("{w}: {} distinct nonempty palindromes {pals:?}", tree.palindrome_count());
    println!("P = {:?}", palindromic_complexity_profile(&w, w.len())?);

    let d = defect_profile(&w);
    for i in 1..=w.len() {
        let l = lps(&w, i)?;
        println!(
            "  prefix {:<7} lps {:<4} occurs {} time(s), defect +{}",
            w.slice(0, i).to_string(),
            l.word.to_string(),
            l.occurrences,
            d.increments[i - 1]
        );
    }
    println!("D({w}) = {} = |w| + 1 - #palindromes = {}\n", d.defect, d.palindrome_deficit());

    let tail = Word::from_text(&format!("abca{}", "a".repeat(100)))?;
    let sources = [
        ("abca a^100", tail),
        ("fibonacci", WordSource::fibonacci().prefix(5000)?),
        ("(abcaacba)^w", WordSource::periodic(Word::from_text("abcaacba")?)?.prefix(5000)?),
        (
            "random binary",
            WordSource::Random { alphabet: palindefect::Alphabet::new(['a', 'b'])?, seed: 3 }.prefix(5000)?,
        ),
    ];
    for (name, w) in sources {
        let e = infinite_defect_estimate(&defect_profile(&w).prefix_defects);
        println!(
            "{name:<14} D = {:<5} first reached at {:<5} stable over the last {} letters: {}",
            e.candidate, e.first_index, e.window, e.stabilized
        );
    }
    Ok(())
}
