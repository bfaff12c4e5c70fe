//! Brute-force oracles. Quadratic or worse; only for short words.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn is_pal(x: &[u8]) -> bool {
    x.iter().eq(x.iter().rev())
}

pub fn rev(x: &[u8]) -> Vec<u8> {
    x.iter().rev().copied().collect()
}

pub fn factors(w: &[u8], n: usize) -> BTreeSet<Vec<u8>> {
    if n > w.len() {
        return BTreeSet::new();
    }
    (0..=w.len() - n).map(|i| w[i..i + n].to_vec()).collect()
}

/// `C(0..=|w| + 1)`.
pub fn complexity(w: &[u8]) -> Vec<u64> {
    (0..=w.len() + 1).map(|n| factors(w, n).len() as u64).collect()
}

/// `P(0..=|w| + 1)`.
pub fn pal_complexity(w: &[u8]) -> Vec<u64> {
    (0..=w.len() + 1).map(|n| factors(w, n).iter().filter(|f| is_pal(f)).count() as u64).collect()
}

/// Distinct palindromic factors including the empty word.
pub fn palindromes(w: &[u8]) -> BTreeSet<Vec<u8>> {
    (0..=w.len()).flat_map(|n| factors(w, n)).filter(|f| is_pal(f)).collect()
}

pub fn defect(w: &[u8]) -> usize {
    w.len() + 1 - palindromes(w).len()
}

pub fn t(w: &[u8]) -> Vec<i64> {
    let c = complexity(w);
    let p = pal_complexity(w);
    (0..=w.len()).map(|n| c[n + 1] as i64 - c[n] as i64 + 2 - p[n + 1] as i64 - p[n] as i64).collect()
}

pub fn occurrences(w: &[u8], x: &[u8]) -> Vec<usize> {
    if x.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - x.len()).filter(|&i| &w[i..i + x.len()] == x).collect()
}

/// Longest palindromic suffix of `w[..i]`.
pub fn lps(w: &[u8], i: usize) -> Vec<u8> {
    (0..=i).map(|s| &w[s..i]).find(|x| is_pal(x)).unwrap().to_vec()
}

/// Whether the longest palindromic suffix of `w[..i]` occurs once in it.
pub fn lps_unioccurrent(w: &[u8], i: usize) -> bool {
    let x = lps(w, i);
    !x.is_empty() && occurrences(&w[..i], &x).len() == 1
}

pub fn closed_up_to(w: &[u8], n: usize) -> bool {
    (0..=n).all(|m| factors(w, m).iter().all(|f| !occurrences(w, &rev(f)).is_empty()))
}

pub fn right_ext(w: &[u8], x: &[u8]) -> BTreeSet<u8> {
    occurrences(w, x).into_iter().filter_map(|i| w.get(i + x.len()).copied()).collect()
}

pub fn left_ext(w: &[u8], x: &[u8]) -> BTreeSet<u8> {
    occurrences(w, x).into_iter().filter(|&i| i > 0).map(|i| w[i - 1]).collect()
}

pub fn special(w: &[u8], n: usize) -> (BTreeSet<Vec<u8>>, BTreeSet<Vec<u8>>) {
    let fs = factors(w, n);
    let right = fs.iter().filter(|f| right_ext(w, f).len() >= 2).cloned().collect();
    let left = fs.iter().filter(|f| left_ext(w, f).len() >= 2).cloned().collect();
    (right, left)
}

/// Factors of length `> n` whose length-`n` prefix and suffix are special and
/// whose inner length-`n` windows are not.
pub fn simple_paths(w: &[u8], n: usize) -> BTreeSet<Vec<u8>> {
    let (r, l) = special(w, n);
    let sp = |x: &[u8]| r.contains(x) || l.contains(x);
    let mut out = BTreeSet::new();
    for len in n + 1..=w.len() {
        for f in factors(w, len) {
            let inner_clean = (1..len - n).all(|k| !sp(&f[k..k + n]));
            if sp(&f[..n]) && sp(&f[len - n..]) && inner_clean {
                out.insert(f);
            }
        }
    }
    out
}

pub fn complete_returns(w: &[u8], x: &[u8]) -> BTreeSet<Vec<u8>> {
    let occ = occurrences(w, x);
    occ.windows(2).map(|p| w[p[0]..p[1] + x.len()].to_vec()).collect()
}

/// All words of length `len` over `k` letters.
pub fn all_words(k: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn text(w: &[u8]) -> String {
    w.iter().map(|&c| (b'a' + c) as char).collect()
}
