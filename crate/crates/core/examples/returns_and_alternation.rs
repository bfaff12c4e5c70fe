//! Returns between `x` and `mirror(x)`: whether they are palindromes, the
//! bridge to unioccurrent palindromic suffixes, and alternation of
//! occurrences.
//!
//!     cargo run --example returns_and_alternation

use palindefect::identity::{
    check_alternation, check_bridge, check_characterization, scan_mirror_returns, PrefixAnalysis,
};
use palindefect::{Alphabet, Morphism, Word, WordSource};

fn main() -> palindefect::Result<()> {
    let abc = Alphabet::new(['a', 'b', 'c'])?;
    let tribonacci = WordSource::morphic(Morphism::new(&abc, [('a', "ab"), ('b', "ac"), ('c', "a")])?, 'a')?;
    for source in [WordSource::fibonacci(), WordSource::thue_morse(), tribonacci] {
        let w = source.prefix(4096)?;
        let a = PrefixAnalysis::new(&w);
        println!("{}", source.describe());

        let scan = scan_mirror_returns(&w, 1, 12);
        for l in &scan.per_length {
            let example = l.examples.first().map(|v| format!(", e.g. {}", v.factor)).unwrap_or_default();
            println!(
                "  n = {:>2}: T = {}, {:>4} returns, {:>4} non-palindromic, {:>4} alternation breaks{example}",
                l.n,
                a.t(l.n),
                l.returns,
                l.violations,
                l.alternation_breaks
            );
        }
        let c = check_characterization(&a, 1, 30);
        println!(
            "  from N = 1: T vanishes {:?}, returns palindromic {:?} -> {:?}",
            c.t_vanishes, c.returns_palindromic, c.status
        );
        let b = check_bridge(&a, Some(30));
        println!("  bridge: H = {:?}, N = {:?}, {:?}, {:?}", b.h_evidence, b.n_evidence, b.agreement, b.status());
        let alt = check_alternation(&a, 2, 20);
        println!("  alternation for lengths 2..=20: {:?} ({} pairs)\n", alt.status, alt.pairs_checked);
    }

    let w = Word::from_text("abcabba")?;
    let scan = scan_mirror_returns(&w, 2, 2);
    println!("{w}: {:?}", scan.per_length[0]);
    Ok(())
}
