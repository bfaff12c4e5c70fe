//! Word sources, the word-spec file format, mirror images and reversal
//! closure.
//!
//!     cargo run --example word_sources

use std::path::Path;

use palindefect::words::{read_word_file, reversal_closure_profile};
use palindefect::{Alphabet, Morphism, Word, WordSource};

fn main() -> palindefect::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/words");

    let literal = WordSource::literal("abca")?;
    let periodic = WordSource::periodic(Word::from_text("aabaa")?)?;
    let abc = Alphabet::new(['a', 'b', 'c'])?;
    let tribonacci = WordSource::morphic(Morphism::new(&abc, [('a', "ab"), ('b', "ac"), ('c', "a")])?, 'a')?;
    let random = WordSource::Random { alphabet: Alphabet::new(['a', 'b'])?, seed: 7 };

    for source in [literal, periodic, WordSource::fibonacci(), WordSource::thue_morse(), tribonacci, random] {
        let w = match &source {
            WordSource::Literal(w) => w.clone(),
            _ => source.prefix(24)?,
        };
        println!("{:<40} {w}", source.describe());
    }

    println!();
    for name in ["fibonacci.word", "thue_morse.word", "periodic_defect.word", "random.word", "abca.word"] {
        let source = read_word_file(dir.join(name))?;
        println!("{name:<22} {}", source.describe());
    }

    // A bad file reports the offending line.
    let err = palindefect::words::parse_word_file("type = morphic\nmorphism = a:ab\nseed = a\nshape = round\n");
    println!("\nbad spec: {}", err.unwrap_err());

    println!();
    for text in ["abca", "aab", "abaaba"] {
        let w = Word::from_text(text)?;
        let closure = reversal_closure_profile(&w, w.len())?;
        let up_to = closure.iter().take_while(|&&ok| ok).count() - 1;
        println!(
            "{text:<8} mirror {:<8} palindrome {:<5} closed under reversal up to length {up_to}",
            w.mirror().to_string(),
            w.is_palindrome()
        );
    }
    Ok(())
}
