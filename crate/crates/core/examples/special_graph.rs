//! The graph of special-factor reversal classes joined by `n`-simple paths,
//! its tree check against `T(n)`, and TSV / Graphviz export.
//!
//!     cargo run --example special_graph [n]

use palindefect::gn::{build_gn, check_gn};
use palindefect::identity::PrefixAnalysis;
use palindefect::{FactorIndex, WordSource};

fn main() -> palindefect::Result<()> {
    let n_show: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for source in [WordSource::fibonacci(), WordSource::thue_morse()] {
        let w = source.prefix(4096)?;
        let a = PrefixAnalysis::new(&w);
        let idx = FactorIndex::build(&w, 13)?;
        println!("{}", source.describe());
        println!("  {:>3} {:>3} {:>5} {:>5} {:>5} {:>8} {:>6}", "n", "T", "V", "E", "loops", "tree", "agree");
        for n in 1..=12 {
            let g = build_gn(&idx, n)?;
            let r = check_gn(&g, a.t(n));
            println!(
                "  {n:>3} {:>3} {:>5} {:>5} {:>5} {:>8} {:>6}",
                r.t_value, r.vertices, r.edges, r.loops, r.is_tree_after_loop_removal, r.equivalence_pass
            );
        }
        let g = build_gn(&idx, n_show)?;
        println!("\n  edges at n = {n_show}:");
        for line in g.to_tsv().lines() {
            println!("    {line}");
        }
        println!();
    }
    let w = WordSource::thue_morse().prefix(1024)?;
    print!("{}", build_gn(&FactorIndex::build(&w, 4)?, 3)?.to_dot());
    Ok(())
}
