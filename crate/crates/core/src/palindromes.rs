//! Palindromic tree, palindromic complexity, longest palindromic suffixes and
//! the palindromic defect.
//!
//! A finite word `w` contains at most `|w| + 1` distinct palindromes, the
//! empty word included. The defect `D(w)` is the shortfall from that bound. It
//! grows by one exactly at the prefixes whose longest palindromic suffix
//! already occurred earlier, which is what the tree records as "no new node".

use serde::{Deserialize, Serialize};

use crate::words::Word;
use crate::{Error, Result};

const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

#[derive(Debug, Clone)]
struct Node {
    len: i64,
    link: u32,
    /// Prefix length at which this palindrome first appears (as a suffix).
    first_end: usize,
    next: Vec<(u8, u32)>,
}

impl Node {
    fn child(&self, c: u8) -> Option<u32> {
        self.next.iter().find(|&&(k, _)| k == c).map(|&(_, v)| v)
    }
}

/// Palindromic tree (eertree) of a word, built one letter at a time.
///
/// Besides the two roots (lengths -1 and 0) there is one node per distinct
/// nonempty palindromic factor.
#[derive(Debug, Clone)]
pub struct Eertree {
    word: Word,
    nodes: Vec<Node>,
    /// Node of the longest palindromic suffix of each prefix, indexed by
    /// prefix length.
    lps: Vec<u32>,
    /// Whether prefix `i` created a node (index 0 unused).
    created: Vec<bool>,
}

/// A nonempty palindromic factor as stored in the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PalindromeNode {
    pub id: u32,
    pub len: usize,
    pub first_end: usize,
}

impl Eertree {
    pub fn build(word: &Word) -> Self {
        let s = word.symbols();
        let mut nodes = vec![
            Node { len: -1, link: IMAGINARY, first_end: 0, next: Vec::new() },
            Node { len: 0, link: IMAGINARY, first_end: 0, next: Vec::new() },
        ];
        let mut lps = Vec::with_capacity(s.len() + 1);
        let mut created = Vec::with_capacity(s.len() + 1);
        lps.push(EMPTY);
        created.push(false);
        let mut cur = EMPTY;
        let fits = |nodes: &[Node], v: u32, i: usize, c: u8| {
            let start = i as i64 - nodes[v as usize].len - 1;
            start >= 0 && s[start as usize] == c
        };
        for (i, &c) in s.iter().enumerate() {
            let mut x = cur;
            while !fits(&nodes, x, i, c) {
                x = nodes[x as usize].link;
            }
            if let Some(existing) = nodes[x as usize].child(c) {
                cur = existing;
                created.push(false);
            } else {
                let len = nodes[x as usize].len + 2;
                let link = if len == 1 {
                    EMPTY
                } else {
                    let mut y = nodes[x as usize].link;
                    while !fits(&nodes, y, i, c) {
                        y = nodes[y as usize].link;
                    }
                    nodes[y as usize].child(c).expect("proper palindromic suffix exists")
                };
                let id = nodes.len() as u32;
                nodes.push(Node { len, link, first_end: i + 1, next: Vec::new() });
                nodes[x as usize].next.push((c, id));
                cur = id;
                created.push(true);
            }
            lps.push(cur);
        }
        Self { word: word.clone(), nodes, lps, created }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Distinct nonempty palindromic factors.
    pub fn palindrome_count(&self) -> usize {
        self.nodes.len() - 2
    }

    pub fn palindromes(&self) -> impl Iterator<Item = PalindromeNode> + '_ {
        self.nodes.iter().enumerate().skip(2).map(|(id, n)| PalindromeNode {
            id: id as u32,
            len: n.len as usize,
            first_end: n.first_end,
        })
    }

    pub fn palindrome_word(&self, node: PalindromeNode) -> Word {
        self.word.slice(node.first_end - node.len, node.first_end)
    }

    /// Length of the longest palindromic suffix of the length-`i` prefix.
    pub fn lps_len(&self, i: usize) -> usize {
        self.nodes[self.lps[i] as usize].len.max(0) as usize
    }

    /// True iff the longest palindromic suffix of the length-`i` prefix
    /// occurs only once in that prefix, i.e. prefix `i` added a node.
    pub fn is_new(&self, i: usize) -> bool {
        self.created[i]
    }

    /// `P(0..=n_max)`; lengths beyond the word get 0.
    pub fn counts_by_length(&self, n_max: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n_max + 1];
        counts[0] = 1;
        for p in self.palindromes() {
            if p.len <= n_max {
                counts[p.len] += 1;
            }
        }
        counts
    }
}

/// `P(0..=n_max)` of `w`, with `P(0) = 1` for the empty word.
pub fn palindromic_complexity_profile(w: &Word, n_max: usize) -> Result<Vec<u64>> {
    if n_max > w.len() {
        return Err(Error::LengthOutOfRange { requested: n_max, len: w.len() });
    }
    Ok(Eertree::build(w).counts_by_length(n_max))
}

/// `P(0..=|w| + 1)`.
pub fn full_palindromic_complexity(w: &Word) -> Vec<u64> {
    Eertree::build(w).counts_by_length(w.len() + 1)
}

/// Longest palindromic suffix of a prefix, with its number of occurrences in
/// that prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPalindromicSuffix {
    pub word: Word,
    pub occurrences: usize,
}

impl LongestPalindromicSuffix {
    pub fn is_unioccurrent(&self) -> bool {
        self.occurrences == 1
    }
}

/// Longest palindromic suffix of the length-`i` prefix of `w`.
pub fn lps(w: &Word, i: usize) -> Result<LongestPalindromicSuffix> {
    if i > w.len() {
        return Err(Error::LengthOutOfRange { requested: i, len: w.len() });
    }
    let prefix = &w.symbols()[..i];
    let len = (0..=i).find(|&start| crate::words::is_palindrome(&prefix[start..])).map(|start| i - start).unwrap_or(0);
    let suffix = &prefix[i - len..];
    let occurrences = if len == 0 { i + 1 } else { prefix.windows(len).filter(|win| *win == suffix).count() };
    Ok(LongestPalindromicSuffix { word: w.slice(i - len, i), occurrences })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectProfile {
    pub length: usize,
    /// `increments[i - 1]` is the defect added by the length-`i` prefix.
    pub increments: Vec<u8>,
    /// `prefix_defects[i]` is `D` of the length-`i` prefix.
    pub prefix_defects: Vec<usize>,
    pub defect: usize,
    /// Distinct palindromic factors including the empty word.
    pub palindromes: usize,
}

impl DefectProfile {
    /// `|w| + 1 - #palindromes`, the defect computed from the count alone.
    pub fn palindrome_deficit(&self) -> usize {
        self.length + 1 - self.palindromes
    }

    pub fn is_consistent(&self) -> bool {
        self.defect == self.palindrome_deficit()
    }

    /// Position (prefix length) of the last increment, 0 if there is none.
    pub fn last_increment(&self) -> usize {
        self.increments.iter().rposition(|&d| d == 1).map_or(0, |i| i + 1)
    }
}

pub fn defect_profile(w: &Word) -> DefectProfile {
    defect_profile_from(&Eertree::build(w))
}

pub fn defect_profile_from(tree: &Eertree) -> DefectProfile {
    let length = tree.word().len();
    let increments: Vec<u8> = (1..=length).map(|i| u8::from(!tree.is_new(i))).collect();
    let mut prefix_defects = Vec::with_capacity(length + 1);
    prefix_defects.push(0);
    let mut running = 0;
    for &d in &increments {
        running += d as usize;
        prefix_defects.push(running);
    }
    DefectProfile { length, increments, prefix_defects, defect: running, palindromes: tree.palindrome_count() + 1 }
}

/// Outcome of guessing the defect of an infinite word from a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectEstimate {
    /// Defect of the whole analysed prefix.
    pub candidate: usize,
    /// Shortest prefix length already attaining `candidate`.
    pub first_index: usize,
    /// Number of trailing positions that must be increment-free.
    pub window: usize,
    pub stabilized: bool,
}

impl DefectEstimate {
    pub fn stabilization_index(&self) -> Option<usize> {
        self.stabilized.then_some(self.first_index)
    }
}

/// Trailing window used by [`infinite_defect_estimate`]: half the prefix,
/// rounded up.
pub fn stabilization_window(length: usize) -> usize {
    length.div_ceil(2)
}

/// Declares the defect stable when no increment happened in the final
/// [`stabilization_window`] positions.
pub fn infinite_defect_estimate(prefix_defects: &[usize]) -> DefectEstimate {
    let length = prefix_defects.len().saturating_sub(1);
    let candidate = prefix_defects.last().copied().unwrap_or(0);
    let first_index = prefix_defects.iter().position(|&d| d == candidate).unwrap_or(0);
    let window = stabilization_window(length);
    DefectEstimate { candidate, first_index, window, stabilized: first_index + window <= length }
}

/// Constant-time palindrome test for factors of one word (Manacher radii).
pub struct PalindromeTable {
    odd: Vec<usize>,
    even: Vec<usize>,
}

impl PalindromeTable {
    pub fn new(s: &[u8]) -> Self {
        let n = s.len() as i64;
        let at = |i: i64| s[i as usize];
        // odd[i]: number of odd palindromes centred at i; even[i]: half-length
        // of the longest even palindrome whose right centre is i
        let mut odd = vec![0usize; s.len()];
        let (mut l, mut r) = (0i64, -1i64);
        for i in 0..n {
            let mut k = if i > r { 1 } else { (odd[(l + r - i) as usize] as i64).min(r - i + 1) };
            while i - k >= 0 && i + k < n && at(i - k) == at(i + k) {
                k += 1;
            }
            odd[i as usize] = k as usize;
            k -= 1;
            if i + k > r {
                l = i - k;
                r = i + k;
            }
        }
        let mut even = vec![0usize; s.len()];
        let (mut l, mut r) = (0i64, -1i64);
        for i in 0..n {
            let mut k = if i > r { 0 } else { (even[(l + r - i + 1) as usize] as i64).min(r - i + 1) };
            while i - k > 0 && i + k < n && at(i - k - 1) == at(i + k) {
                k += 1;
            }
            even[i as usize] = k as usize;
            k -= 1;
            if i + k > r {
                l = i - k - 1;
                r = i + k;
            }
        }
        Self { odd, even }
    }

    /// Is `s[start..end]` a palindrome?
    pub fn is_palindrome(&self, start: usize, end: usize) -> bool {
        let len = end - start;
        if len <= 1 {
            return true;
        }
        let centre = start + len / 2;
        if len % 2 == 1 {
            self.odd[centre] > len / 2
        } else {
            self.even[centre] >= len / 2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn word(s: &str) -> Word {
        Word::from_text(s).unwrap()
    }

    fn brute_palindromes(s: &[u8]) -> HashSet<Vec<u8>> {
        let mut set = HashSet::new();
        for i in 0..s.len() {
            for j in i + 1..=s.len() {
                if crate::words::is_palindrome(&s[i..j]) {
                    set.insert(s[i..j].to_vec());
                }
            }
        }
        set
    }

    #[test]
    fn tree_examples() {
        assert_eq!(Eertree::build(&word("")).palindrome_count(), 0);
        let t = Eertree::build(&word("aab"));
        let mut found: Vec<String> = t.palindromes().map(|p| t.palindrome_word(p).to_string()).collect();
        found.sort();
        assert_eq!(found, ["a", "aa", "b"]);
        assert_eq!(Eertree::build(&word("abca")).palindrome_count(), 3);
    }

    #[test]
    fn tree_matches_brute_force_on_all_short_binary_words() {
        let ab = crate::words::Alphabet::new(['a', 'b']).unwrap();
        let ab = std::sync::Arc::new(ab);
        for len in 0..=10 {
            for bits in 0..(1u32 << len) {
                let symbols: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                let w = Word::from_symbols(ab.clone(), symbols.clone()).unwrap();
                let t = Eertree::build(&w);
                assert_eq!(t.palindrome_count(), brute_palindromes(&symbols).len());
                for i in 1..=len {
                    let expected = lps(&w, i).unwrap();
                    assert_eq!(t.lps_len(i), expected.word.len());
                    assert_eq!(t.is_new(i), expected.is_unioccurrent());
                }
            }
        }
    }

    #[test]
    fn palindromic_complexity_examples() {
        assert_eq!(palindromic_complexity_profile(&word("aab"), 3).unwrap(), [1, 2, 1, 0]);
        assert_eq!(palindromic_complexity_profile(&word("abca"), 4).unwrap(), [1, 3, 0, 0, 0]);
        assert_eq!(palindromic_complexity_profile(&word("aaaa"), 4).unwrap(), [1, 1, 1, 1, 1]);
        assert!(palindromic_complexity_profile(&word("aa"), 3).is_err());
    }

    #[test]
    fn lps_examples() {
        assert_eq!(lps(&word("abca"), 4).unwrap().word.to_string(), "a");
        assert_eq!(lps(&word("abca"), 4).unwrap().occurrences, 2);
        assert_eq!(lps(&word("abba"), 4).unwrap().word.to_string(), "abba");
        assert_eq!(lps(&word("aab"), 3).unwrap().word.to_string(), "b");
        assert_eq!(lps(&word("aab"), 0).unwrap().word.to_string(), "");
        assert!(lps(&word("aab"), 4).is_err());
    }

    #[test]
    fn defect_examples() {
        let d = defect_profile(&word("aab"));
        assert_eq!((d.defect, d.palindromes), (0, 4));
        let d = defect_profile(&word("abca"));
        assert_eq!(d.defect, 1);
        assert_eq!(d.increments, [0, 0, 0, 1]);
        assert_eq!(d.prefix_defects, [0, 0, 0, 0, 1]);
        assert!(d.is_consistent());
        assert_eq!(defect_profile(&word("")).defect, 0);
    }

    #[test]
    fn estimate_examples() {
        let w = word(&format!("abca{}", "a".repeat(100)));
        let e = infinite_defect_estimate(&defect_profile(&w).prefix_defects);
        assert_eq!((e.candidate, e.stabilization_index()), (1, Some(4)));

        // a defect event in the second half keeps the estimate open
        let w = word(&format!("{}abca", "a".repeat(10)));
        let e = infinite_defect_estimate(&defect_profile(&w).prefix_defects);
        assert_eq!(e.stabilization_index(), None);
        assert_eq!(e.candidate, 1);

        let e = infinite_defect_estimate(&[0]);
        assert_eq!(e.stabilization_index(), Some(0));
    }

    #[test]
    fn palindrome_table_matches_naive() {
        for text in ["", "a", "abaababaabaab", "aaaa", "abcacbabba", "abbaabbaab"] {
            let w = word(text);
            let s = w.symbols();
            let t = PalindromeTable::new(s);
            for i in 0..=s.len() {
                for j in i..=s.len() {
                    assert_eq!(t.is_palindrome(i, j), crate::words::is_palindrome(&s[i..j]), "{text} {i}..{j}");
                }
            }
        }
    }
}
