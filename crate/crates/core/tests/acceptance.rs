//! One pass/fail line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use palindefect::factors::Alternation;
use palindefect::identity::{
    analyze_infinite, check_t_nonnegative, verify_finite_identity, HarnessVerdict, PrefixAnalysis,
};
use palindefect::palindromes::defect_profile_from;
use palindefect::{Alphabet, Eertree, FactorIndex, GnGraph, Status, Word, WordSource};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn word(k: u8, w: &[u8]) -> Word {
    let alphabet = Alphabet::new((0..k).map(|c| (b'a' + c) as char)).unwrap();
    Word::parse(&alphabet, &common::text(w)).unwrap()
}

/// Every binary word of length <= 14 and 1000 seeded ternary words of length <= 200.
fn corpus() -> Vec<(u8, Vec<u8>)> {
    let mut out: Vec<(u8, Vec<u8>)> = (0..=14).flat_map(|len| common::all_words(2, len)).map(|w| (2, w)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=200);
        out.push((3, (0..len).map(|_| rng.gen_range(0..3)).collect()));
    }
    out
}

fn finite_identity(corpus: &[(u8, Vec<u8>)]) -> Outcome {
    let bad: Vec<String> = corpus
        .iter()
        .filter(|(k, w)| verify_finite_identity(&word(*k, w)).residual != 0)
        .map(|(_, w)| common::text(w))
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} words, {} nonzero residuals {:?}", corpus.len(), bad.len(), &bad[..bad.len().min(3)]),
    )
}

fn palindrome_bound(corpus: &[(u8, Vec<u8>)]) -> Outcome {
    let mut mismatches = 0;
    for (k, w) in corpus {
        let tree = Eertree::build(&word(*k, w));
        let brute = common::palindromes(w).len() - 1;
        if tree.palindrome_count() != brute || tree.palindrome_count() + 1 > w.len() + 1 {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{} words, {mismatches} mismatches", corpus.len()))
}

fn defect_increments(corpus: &[(u8, Vec<u8>)]) -> Outcome {
    let mut mismatches = 0;
    let mut steps = 0;
    for (k, w) in corpus {
        let d = defect_profile_from(&Eertree::build(&word(*k, w)));
        for i in 1..=w.len() {
            steps += 1;
            let delta = d.increments[i - 1];
            if delta > 1 || (delta == 0) != common::lps_unioccurrent(w, i) {
                mismatches += 1;
            }
        }
        if !d.is_consistent() || d.defect != common::defect(w) {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{steps} prefix steps, {mismatches} mismatches"))
}

fn fibonacci_rich() -> Outcome {
    let start = Instant::now();
    let fib = WordSource::fibonacci().prefix(10_000).unwrap();
    let a = PrefixAnalysis::new(&fib);
    let t = a.trusted_t();
    let elapsed = start.elapsed();
    let ok = a.defect.defect == 0 && !t.is_empty() && t.iter().all(|&x| x == 0) && elapsed < Duration::from_secs(10);
    outcome(
        ok,
        format!(
            "D = {}, trusted n <= {:?}, nonzero T: {}, {elapsed:.2?}",
            a.defect.defect,
            a.trusted_n(),
            t.iter().filter(|&&x| x != 0).count()
        ),
    )
}

fn graph_equivalence() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (name, source) in [("fibonacci", WordSource::fibonacci()), ("thue-morse", WordSource::thue_morse())] {
        for len in [4096, 6000, 8192] {
            let w = source.prefix(len).unwrap();
            let a = PrefixAnalysis::new(&w);
            let Some(trusted) = a.trusted_n() else {
                mismatches.push(format!("{name}/{len}: no trusted range"));
                continue;
            };
            let top = trusted.min(12);
            let idx = FactorIndex::build(&w, top + 1).unwrap();
            for n in 0..=top {
                let r = GnGraph::build(&idx, n).unwrap().check(a.t(n));
                if r.status == Status::Inapplicable {
                    continue;
                }
                checked += 1;
                if !r.equivalence_pass {
                    mismatches.push(format!("{name}/{len}/n={n}"));
                }
            }
        }
    }
    outcome(mismatches.is_empty() && checked > 0, format!("{checked} (word, n) pairs, mismatches {mismatches:?}"))
}

fn nonnegative_t() -> Outcome {
    let mut sources = vec![WordSource::fibonacci(), WordSource::thue_morse()];
    for block in ["aabaa", "abcba", "abacaba", "abba", "aba"] {
        sources.push(WordSource::periodic(Word::from_text(block).unwrap()).unwrap());
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for s in &sources {
        let a = PrefixAnalysis::new(&s.prefix(4096).unwrap());
        let r = check_t_nonnegative(&a.profile(a.word.len()), &a.closure);
        checked += r.checked_up_to.map_or(0, |t| t + 1);
        if r.status != Status::Pass {
            bad.push(format!("{} {:?} {:?}", s.describe(), r.status, r.violations));
        }
    }
    outcome(bad.is_empty(), format!("{} words, {checked} trusted lengths, problems {bad:?}", sources.len()))
}

fn counting_statements() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    let sources = [WordSource::fibonacci(), WordSource::periodic(Word::from_text("aabaa").unwrap()).unwrap()];
    for s in &sources {
        let a = PrefixAnalysis::new(&s.prefix(3000).unwrap());
        let l = a.estimate.stabilization_index().unwrap_or(0);
        let (mut passed, mut total) = ([0usize; 3], [0usize; 3]);
        for q in l..l + 6 {
            let mut reports = vec![(0, a.counting_complexity(q))];
            for h in q + 1..q + 5 {
                reports.push((2, a.counting_window(q, h)));
            }
            for p in [q + 1, q + 7, q + 100, 1500, 3000] {
                reports.push((1, a.counting_prefix_sum(q, p)));
            }
            for (kind, r) in reports {
                total[kind] += 1;
                if r.status == Status::Pass {
                    passed[kind] += 1;
                } else {
                    ok = false;
                }
            }
        }
        ok &= passed.iter().all(|&p| p >= 6) && passed[1] >= 20 && passed[2] >= 20;
        lines.push(format!("{}: L = {l}, pass {passed:?} of {total:?}", s.describe()));
    }
    outcome(ok, lines.join("; "))
}

fn harness_verdicts() -> Outcome {
    let start = Instant::now();
    let schedule = [1000, 2000, 4000];
    let mut bad = Vec::new();
    let mut sources = vec![WordSource::fibonacci()];
    for block in ["ab", "aabaa", "abcacb", "abcacba", "abcaacba", "abacaba"] {
        sources.push(WordSource::periodic(Word::from_text(block).unwrap()).unwrap());
    }
    let mut defects = Vec::new();
    for s in &sources {
        let r = analyze_infinite(s, &schedule).unwrap();
        defects.push(r.longest().defect);
        if r.verdict != HarnessVerdict::EqualityHoldsOnEvidence || r.lhs != r.rhs {
            bad.push(s.describe());
        }
    }
    let random = WordSource::Random { alphabet: Alphabet::new(['a', 'b']).unwrap(), seed: 17 };
    let r = analyze_infinite(&random, &schedule).unwrap();
    let random_ok = r.verdict != HarnessVerdict::EqualityHoldsOnEvidence;
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && random_ok && elapsed < Duration::from_secs(120),
        format!(
            "{} equality words (D = {defects:?}), failures {bad:?}, random verdict {:?}, {elapsed:.2?}",
            sources.len(),
            r.verdict
        ),
    )
}

fn alternation() -> Outcome {
    let fib = WordSource::fibonacci().prefix(10_000).unwrap();
    let idx = FactorIndex::build(&fib, 21).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut sampled = 0;
    let mut violations = Vec::new();
    while sampled < 100 {
        let len = rng.gen_range(2..=20);
        let start = rng.gen_range(0..=fib.len() - len);
        let x = fib.slice(start, start + len);
        if x.is_palindrome() {
            continue;
        }
        sampled += 1;
        let r = idx.alternation_check(&x);
        if r != Alternation::Alternates {
            violations.push(format!("{x}: {r:?}"));
        }
    }
    outcome(violations.is_empty(), format!("{sampled} factors, violations {violations:?}"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("finite identity", Box::new(|| finite_identity(&corpus))),
        ("palindrome count and bound", Box::new(|| palindrome_bound(&corpus))),
        ("defect increments", Box::new(|| defect_increments(&corpus))),
        ("fibonacci rich regression", Box::new(fibonacci_rich)),
        ("graph tree equivalence", Box::new(graph_equivalence)),
        ("T nonnegative", Box::new(nonnegative_t)),
        ("counting statements", Box::new(counting_statements)),
        ("harness verdicts", Box::new(harness_verdicts)),
        ("alternation", Box::new(alternation)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let mark = if o.ok { "PASS" } else { "FAIL" };
        println!("[{mark}] {}. {name}: {} ({:.2?})", i + 1, o.detail, start.elapsed());
        failures += usize::from(!o.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
