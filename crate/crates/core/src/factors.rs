//! Factor enumeration by length, special factors, complete return words,
//! `n`-simple paths and occurrence alternation.
//!
//! Everything here is computed inside one finite word. In particular a factor's
//! extensions are the letters that actually follow (precede) one of its
//! occurrences in the indexed word, so a window touching the end of the word
//! contributes no right extension.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::automaton::SuffixAutomaton;
use crate::refine::Refiner;
use crate::words::Word;
use crate::{Error, Result};

struct Level {
    /// Class of the window starting at each position.
    ids: Vec<u32>,
    /// Sorted start positions per class; classes are numbered by first occurrence.
    occurrences: Vec<Vec<usize>>,
    /// One-letter right extensions of each class as `(letter, class at n + 1)`.
    children: Vec<Vec<(u8, u32)>>,
}

/// Distinct factors of every length up to a fixed depth, with complete
/// occurrence lists.
pub struct FactorIndex {
    word: Word,
    levels: Vec<Level>,
}

/// A distinct factor of the indexed word.
#[derive(Debug, Clone, Copy)]
pub struct Factor<'a> {
    pub len: usize,
    pub id: u32,
    pub occurrences: &'a [usize],
}

impl Factor<'_> {
    pub fn first(&self) -> usize {
        self.occurrences[0]
    }
}

impl FactorIndex {
    pub fn build(word: &Word, n_max: usize) -> Result<Self> {
        if n_max > word.len() {
            return Err(Error::LengthOutOfRange { requested: n_max, len: word.len() });
        }
        let text = word.symbols();
        let mut refiner = Refiner::new(word.alphabet().size());
        let mut levels = vec![Level {
            ids: vec![0; text.len() + 1],
            occurrences: vec![(0..=text.len()).collect()],
            children: Vec::new(),
        }];
        for n in 1..=n_max {
            let prev = &levels[n - 1];
            let (ids, count) = refiner.refine(text, &prev.ids, prev.occurrences.len(), n);
            let mut occurrences = vec![Vec::new(); count];
            for (i, &id) in ids.iter().enumerate() {
                occurrences[id as usize].push(i);
            }
            let mut children = vec![Vec::new(); prev.occurrences.len()];
            for (id, occ) in occurrences.iter().enumerate() {
                let f = occ[0];
                children[prev.ids[f] as usize].push((text[f + n - 1], id as u32));
            }
            levels[n - 1].children = children;
            levels.push(Level { ids, occurrences, children: Vec::new() });
        }
        Ok(Self { word: word.clone(), levels })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Largest indexed factor length.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Distinct length-`n` factors in order of first occurrence.
    pub fn factors(&self, n: usize) -> impl Iterator<Item = Factor<'_>> + '_ {
        self.levels[n].occurrences.iter().enumerate().map(move |(id, occurrences)| Factor {
            len: n,
            id: id as u32,
            occurrences,
        })
    }

    pub fn factor_word(&self, factor: &Factor<'_>) -> Word {
        let f = factor.first();
        self.word.slice(f, f + factor.len)
    }

    /// Class of the length-`n` window starting at `start`.
    pub fn class_at(&self, n: usize, start: usize) -> u32 {
        self.levels[n].ids[start]
    }

    /// `C(0..=depth)`.
    pub fn complexity_profile(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.occurrences.len() as u64).collect()
    }

    fn symbols_in_alphabet(&self, x: &Word) -> Option<Vec<u8>> {
        if x.alphabet() == self.word.alphabet() {
            return Some(x.symbols().to_vec());
        }
        let ours = self.word.alphabet();
        x.symbols().iter().map(|&s| ours.index(x.alphabet().letter(s))).collect()
    }

    fn class_of(&self, x: &[u8]) -> Option<u32> {
        let mut id = 0u32;
        for (n, &c) in x.iter().enumerate() {
            id = self.levels[n].children[id as usize].iter().find(|(l, _)| *l == c)?.1;
        }
        Some(id)
    }

    /// Sorted start positions of `x` (overlaps included).
    pub fn occurrences(&self, x: &Word) -> Vec<usize> {
        let Some(x) = self.symbols_in_alphabet(x) else {
            return Vec::new();
        };
        if x.len() <= self.depth() {
            return match self.class_of(&x) {
                Some(id) => self.levels[x.len()].occurrences[id as usize].clone(),
                None => Vec::new(),
            };
        }
        let text = self.word.symbols();
        if x.len() > text.len() {
            return Vec::new();
        }
        (0..=text.len() - x.len()).filter(|&i| text[i..i + x.len()] == x[..]).collect()
    }

    fn extension_counts(&self, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        if n + 1 > self.depth() {
            return Err(Error::LengthOutOfRange { requested: n + 1, len: self.depth() });
        }
        let level = &self.levels[n];
        let right = level.children.iter().map(Vec::len).collect();
        let mut left = vec![0usize; level.occurrences.len()];
        for occ in &self.levels[n + 1].occurrences {
            left[level.ids[occ[0] + 1] as usize] += 1;
        }
        Ok((right, left))
    }

    /// Per class of length `n`: is it right or left special?
    pub(crate) fn special_mask(&self, n: usize) -> Result<Vec<bool>> {
        let (right, left) = self.extension_counts(n)?;
        Ok(right.iter().zip(&left).map(|(&r, &l)| r >= 2 || l >= 2).collect())
    }

    /// Right and left special factors of length `n`; needs `n + 1 <= depth`.
    pub fn special_factors(&self, n: usize) -> Result<SpecialFactorReport> {
        let (right, left) = self.extension_counts(n)?;
        let mut report = SpecialFactorReport { n, right_special: Vec::new(), left_special: Vec::new() };
        for factor in self.factors(n) {
            let id = factor.id as usize;
            if right[id] >= 2 {
                report.right_special.push(self.factor_word(&factor));
            }
            if left[id] >= 2 {
                report.left_special.push(self.factor_word(&factor));
            }
        }
        Ok(report)
    }

    /// Factors that begin and end with `x` and contain exactly two
    /// occurrences of it, read off consecutive occurrences.
    pub fn complete_return_words(&self, x: &Word) -> ReturnWords {
        let occ = self.occurrences(x);
        let mut seen: HashSet<&[u8]> = HashSet::new();
        let mut words = Vec::new();
        let text = self.word.symbols();
        for pair in occ.windows(2) {
            let piece = &text[pair[0]..pair[1] + x.len()];
            if seen.insert(piece) {
                words.push(self.word.slice(pair[0], pair[1] + x.len()));
            }
        }
        ReturnWords { occurrences: occ.len(), enough_occurrences: occ.len() >= 2, words }
    }

    /// Distinct `n`-simple paths occurring in the indexed word.
    ///
    /// Every occurrence of an `n`-simple path sits between two consecutive
    /// occurrences of special length-`n` factors, so the paths are read off
    /// the sorted list of special window positions.
    pub fn n_simple_paths(&self, n: usize) -> Result<SimplePaths> {
        let special = self.special_mask(n)?;
        let ids = &self.levels[n].ids;
        let positions: Vec<usize> = (0..ids.len()).filter(|&i| special[ids[i] as usize]).collect();
        let mut result = SimplePaths { n, paths: Vec::new(), degenerate: positions.is_empty(), truncated: 0 };
        let mut by_word: HashMap<&[u8], usize> = HashMap::new();
        let text = self.word.symbols();
        for pair in positions.windows(2) {
            let (start, end) = (pair[0], pair[1] + n);
            let slot = *by_word.entry(&text[start..end]).or_insert_with(|| {
                result.paths.push(SimplePath {
                    word: self.word.slice(start, end),
                    start_class: ids[start],
                    end_class: ids[pair[1]],
                    first_occurrence: start,
                    occurrences: 0,
                });
                result.paths.len() - 1
            });
            result.paths[slot].occurrences += 1;
        }
        if let Some(&last) = positions.last() {
            if last + n < text.len() {
                result.truncated = 1;
            }
        }
        Ok(result)
    }

    /// Whether occurrences of `x` and `mirror(x)` interleave strictly.
    pub fn alternation_check(&self, x: &Word) -> Alternation {
        if x.is_palindrome() {
            return Alternation::VacuousPalindrome;
        }
        let own = self.occurrences(x);
        let mirrored = self.occurrences(&x.mirror());
        if own.is_empty() || mirrored.is_empty() {
            return Alternation::MissingOccurrences;
        }
        let mut merged: Vec<(usize, bool)> =
            own.iter().map(|&i| (i, true)).chain(mirrored.iter().map(|&i| (i, false))).collect();
        merged.sort_unstable();
        for pair in merged.windows(2) {
            if pair[0].1 == pair[1].1 {
                return Alternation::Violated { position: pair[1].0 };
            }
        }
        Alternation::Alternates
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialFactorReport {
    pub n: usize,
    #[serde(serialize_with = "words_as_strings")]
    pub right_special: Vec<Word>,
    #[serde(serialize_with = "words_as_strings")]
    pub left_special: Vec<Word>,
}

impl SpecialFactorReport {
    pub fn is_empty(&self) -> bool {
        self.right_special.is_empty() && self.left_special.is_empty()
    }
}

fn words_as_strings<S: serde::Serializer>(words: &[Word], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(words.iter().map(ToString::to_string))
}

#[derive(Debug, Clone)]
pub struct ReturnWords {
    pub words: Vec<Word>,
    pub occurrences: usize,
    /// False when `x` occurs fewer than twice, so the empty list carries no
    /// information.
    pub enough_occurrences: bool,
}

#[derive(Debug, Clone)]
pub struct SimplePath {
    pub word: Word,
    /// Classes (at length `n`) of the prefix and suffix of length `n`.
    pub start_class: u32,
    pub end_class: u32,
    pub first_occurrence: usize,
    pub occurrences: usize,
}

impl SimplePath {
    pub fn start(&self, n: usize) -> Word {
        self.word.slice(0, n)
    }

    pub fn end(&self, n: usize) -> Word {
        self.word.slice(self.word.len() - n, self.word.len())
    }
}

#[derive(Debug, Clone)]
pub struct SimplePaths {
    pub n: usize,
    pub paths: Vec<SimplePath>,
    /// No special factor of length `n` occurs.
    pub degenerate: bool,
    /// Paths that started at the last special occurrence and never closed.
    pub truncated: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Alternation {
    Alternates,
    /// Two consecutive occurrences carry the same label; `position` is the second.
    Violated {
        position: usize,
    },
    /// `x` is a palindrome, so the property holds trivially.
    VacuousPalindrome,
    /// `x` or its mirror image does not occur.
    MissingOccurrences,
}

impl Alternation {
    pub fn holds(self) -> bool {
        matches!(self, Self::Alternates | Self::VacuousPalindrome)
    }
}

/// `C(0..=|w| + 1)` of a whole word, in linear time.
pub fn full_complexity(w: &Word) -> Vec<u64> {
    SuffixAutomaton::build(w.symbols()).complexity(w.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::WordSource;

    fn word(s: &str) -> Word {
        Word::from_text(s).unwrap()
    }

    fn table(idx: &FactorIndex, n: usize) -> Vec<(String, Vec<usize>)> {
        idx.factors(n).map(|f| (idx.factor_word(&f).to_string(), f.occurrences.to_vec())).collect()
    }

    #[test]
    fn index_examples() {
        let idx = FactorIndex::build(&word("aab"), 2).unwrap();
        assert_eq!(table(&idx, 1), [("a".into(), vec![0, 1]), ("b".into(), vec![2])]);
        assert_eq!(table(&idx, 2), [("aa".into(), vec![0]), ("ab".into(), vec![1])]);

        let idx = FactorIndex::build(&word("aaaa"), 2).unwrap();
        assert_eq!(table(&idx, 1), [("a".into(), vec![0, 1, 2, 3])]);
        assert_eq!(table(&idx, 2), [("aa".into(), vec![0, 1, 2])]);

        let idx = FactorIndex::build(&word(""), 0).unwrap();
        assert_eq!(table(&idx, 0), [("".into(), vec![0])]);

        assert!(FactorIndex::build(&word("ab"), 3).is_err());
    }

    #[test]
    fn complexity_examples() {
        let c = |s: &str| FactorIndex::build(&word(s), s.len()).unwrap().complexity_profile();
        assert_eq!(c("aab"), [1, 2, 2, 1]);
        assert_eq!(c("abca"), [1, 3, 3, 2, 1]);
        assert_eq!(c("aaaa"), [1, 1, 1, 1, 1]);
        assert_eq!(full_complexity(&word("abca")), [1, 3, 3, 2, 1, 0]);
    }

    #[test]
    fn special_factor_examples() {
        let idx = FactorIndex::build(&word("aabab"), 3).unwrap();
        let r = idx.special_factors(1).unwrap();
        assert_eq!(r.right_special.iter().map(ToString::to_string).collect::<Vec<_>>(), ["a"]);
        assert_eq!(r.left_special.iter().map(ToString::to_string).collect::<Vec<_>>(), ["a"]);

        let idx = FactorIndex::build(&word("aaaaaa"), 3).unwrap();
        assert!(idx.special_factors(2).unwrap().is_empty());
        assert!(idx.special_factors(3).is_err());

        let fib = WordSource::fibonacci().prefix(100).unwrap();
        let idx = FactorIndex::build(&fib, 5).unwrap();
        let r = idx.special_factors(3).unwrap();
        assert_eq!(r.right_special.len(), 1);
        assert_eq!(r.left_special.len(), 1);
        assert_eq!(r.right_special[0].mirror(), r.left_special[0]);
    }

    #[test]
    fn return_word_examples() {
        let idx = FactorIndex::build(&word("aabaa"), 2).unwrap();
        let r = idx.complete_return_words(&word("aa"));
        assert_eq!(r.words.iter().map(ToString::to_string).collect::<Vec<_>>(), ["aabaa"]);

        let idx = FactorIndex::build(&word("aaa"), 1).unwrap();
        let r = idx.complete_return_words(&word("a"));
        assert_eq!(r.words.iter().map(ToString::to_string).collect::<Vec<_>>(), ["aa"]);

        let w = word("ababa");
        let idx = FactorIndex::build(&w, 2).unwrap();
        let r = idx.complete_return_words(&w.slice(0, 3));
        assert_eq!(r.words.iter().map(ToString::to_string).collect::<Vec<_>>(), ["ababa"]);

        let r = idx.complete_return_words(&w.slice(0, 5));
        assert!(!r.enough_occurrences && r.words.is_empty() && r.occurrences == 1);
    }

    #[test]
    fn simple_path_examples() {
        let idx = FactorIndex::build(&word("aaaa"), 2).unwrap();
        let p = idx.n_simple_paths(1).unwrap();
        assert!(p.degenerate && p.paths.is_empty());

        let idx = FactorIndex::build(&word("aabab"), 2).unwrap();
        let p = idx.n_simple_paths(1).unwrap();
        let words: Vec<String> = p.paths.iter().map(|s| s.word.to_string()).collect();
        assert_eq!(words, ["aa", "aba"]);
        assert_eq!(p.truncated, 1);
    }

    #[test]
    fn alternation_examples() {
        let w = word("abbaabba");
        let idx = FactorIndex::build(&w, 3).unwrap();
        assert_eq!(idx.alternation_check(&word("ab")), Alternation::Alternates);
        assert_eq!(idx.alternation_check(&w.slice(1, 3)), Alternation::VacuousPalindrome);

        let w = word("abcabba");
        let idx = FactorIndex::build(&w, 2).unwrap();
        assert_eq!(idx.alternation_check(&w.slice(0, 2)), Alternation::Violated { position: 3 });

        let w = word("aab");
        let idx = FactorIndex::build(&w, 2).unwrap();
        assert_eq!(idx.alternation_check(&w.slice(1, 3)), Alternation::MissingOccurrences);
    }

    #[test]
    fn occurrences_beyond_depth_fall_back_to_scan() {
        let w = word("abaababaab");
        let idx = FactorIndex::build(&w, 2).unwrap();
        assert_eq!(idx.occurrences(&word("aba")), vec![0, 3, 5]);
        assert_eq!(idx.occurrences(&w.slice(0, 2)), vec![0, 3, 5, 8]);
        assert!(idx.occurrences(&word("abc")).is_empty());
    }
}
