//! Suffix automaton used for whole-word complexity counts and matching
//! lengths against another word.

const NONE: u32 = u32::MAX;

struct State {
    len: u32,
    link: u32,
    next: Vec<(u8, u32)>,
}

impl State {
    fn get(&self, c: u8) -> Option<u32> {
        self.next.iter().find(|&&(k, _)| k == c).map(|&(_, v)| v)
    }

    fn set(&mut self, c: u8, to: u32) {
        match self.next.iter_mut().find(|(k, _)| *k == c) {
            Some(slot) => slot.1 = to,
            None => self.next.push((c, to)),
        }
    }
}

pub(crate) struct SuffixAutomaton {
    states: Vec<State>,
}

impl SuffixAutomaton {
    pub fn build(symbols: &[u8]) -> Self {
        let mut states = Vec::with_capacity(2 * symbols.len() + 1);
        states.push(State { len: 0, link: NONE, next: Vec::new() });
        let mut last = 0u32;
        for &c in symbols {
            let cur = states.len() as u32;
            states.push(State { len: states[last as usize].len + 1, link: 0, next: Vec::new() });
            let mut p = last;
            while p != NONE && states[p as usize].get(c).is_none() {
                states[p as usize].set(c, cur);
                p = states[p as usize].link;
            }
            if p != NONE {
                let q = states[p as usize].get(c).unwrap();
                if states[p as usize].len + 1 == states[q as usize].len {
                    states[cur as usize].link = q;
                } else {
                    let clone = states.len() as u32;
                    let cloned = State {
                        len: states[p as usize].len + 1,
                        link: states[q as usize].link,
                        next: states[q as usize].next.clone(),
                    };
                    states.push(cloned);
                    while p != NONE && states[p as usize].get(c) == Some(q) {
                        states[p as usize].set(c, clone);
                        p = states[p as usize].link;
                    }
                    states[q as usize].link = clone;
                    states[cur as usize].link = clone;
                }
            }
            last = cur;
        }
        Self { states }
    }

    /// Number of distinct factors of each length `0..=text_len + 1`.
    pub fn complexity(&self, text_len: usize) -> Vec<u64> {
        let mut diff = vec![0i64; text_len + 3];
        for s in &self.states[1..] {
            let lo = self.states[s.link as usize].len as usize + 1;
            let hi = s.len as usize;
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        let mut out = Vec::with_capacity(text_len + 2);
        out.push(1);
        let mut running = 0i64;
        for d in &diff[1..text_len + 2] {
            running += d;
            out.push(running as u64);
        }
        out
    }

    /// `out[j]` is the length of the longest suffix of `text[..j]` that is a
    /// factor of the automaton's word.
    pub fn matching_lengths(&self, text: &[u8]) -> Vec<usize> {
        let mut out = Vec::with_capacity(text.len() + 1);
        out.push(0);
        let (mut state, mut len) = (0u32, 0usize);
        for &c in text {
            loop {
                if let Some(to) = self.states[state as usize].get(c) {
                    state = to;
                    len += 1;
                    break;
                }
                if state == 0 {
                    len = 0;
                    break;
                }
                state = self.states[state as usize].link;
                len = self.states[state as usize].len as usize;
            }
            out.push(len);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute_complexity(s: &[u8]) -> Vec<u64> {
        (0..=s.len() + 1)
            .map(|n| {
                if n > s.len() {
                    return 0;
                }
                let set: HashSet<&[u8]> = (0..=s.len() - n).map(|i| &s[i..i + n]).collect();
                set.len() as u64
            })
            .collect()
    }

    #[test]
    fn complexity_matches_enumeration() {
        for s in
            [&b"\x00\x00\x01"[..], b"\x00\x01\x02\x00", b"", b"\x00\x00\x00\x00", b"\x00\x01\x00\x00\x01\x00\x01\x00"]
        {
            let sam = SuffixAutomaton::build(s);
            assert_eq!(sam.complexity(s.len()), brute_complexity(s), "{s:?}");
        }
    }

    #[test]
    fn matching_lengths_small() {
        let sam = SuffixAutomaton::build(&[0, 1, 0]);
        assert_eq!(sam.matching_lengths(&[1, 0, 0, 1]), vec![0, 1, 2, 1, 2]);
    }
}
