//! Alphabets, finite words and the sources that produce them.

mod source;
mod wordfile;

pub use source::{Morphism, WordSource};
pub use wordfile::{parse_word_file, read_word_file};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automaton::SuffixAutomaton;
use crate::{Error, Result};

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 64;

/// An ordered set of distinct single-character letters.
///
/// Letters are addressed by their position, so `index(letter)` is a bijection
/// onto `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<char>", into = "Vec<char>")]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() || letters.len() > MAX_ALPHABET {
            return Err(Error::AlphabetSize { got: letters.len() });
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::DuplicateLetter(*c));
            }
        }
        Ok(Self { letters })
    }

    /// Alphabet of the distinct characters of `text` in order of first
    /// appearance. An empty text yields the one-letter alphabet `{a}`.
    pub fn infer(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for c in text.chars() {
            if !letters.contains(&c) {
                letters.push(c);
            }
        }
        if letters.is_empty() {
            letters.push('a');
        }
        Self::new(letters)
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: u8) -> char {
        self.letters[index as usize]
    }

    pub fn index(&self, letter: char) -> Option<u8> {
        self.letters.iter().position(|&c| c == letter).map(|i| i as u8)
    }
}

impl TryFrom<Vec<char>> for Alphabet {
    type Error = Error;

    fn try_from(letters: Vec<char>) -> Result<Self> {
        Self::new(letters)
    }
}

impl From<Alphabet> for Vec<char> {
    fn from(a: Alphabet) -> Self {
        a.letters
    }
}

/// A finite word: a sequence of alphabet indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    symbols: Vec<u8>,
}

impl Word {
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let symbols =
            text.chars().map(|c| alphabet.index(c).ok_or(Error::UnknownLetter(c))).collect::<Result<Vec<_>>>()?;
        Ok(Self { alphabet: Arc::new(alphabet.clone()), symbols })
    }

    /// Parses `text` over the alphabet of its own characters.
    pub fn from_text(text: &str) -> Result<Self> {
        Self::parse(&Alphabet::infer(text)?, text)
    }

    pub fn from_symbols(alphabet: Arc<Alphabet>, symbols: Vec<u8>) -> Result<Self> {
        let size = alphabet.size();
        if let Some(&index) = symbols.iter().find(|&&s| s as usize >= size) {
            return Err(Error::SymbolOutOfRange { index, size });
        }
        Ok(Self { alphabet, symbols })
    }

    pub(crate) fn from_trusted(alphabet: Arc<Alphabet>, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet.size()));
        Self { alphabet, symbols }
    }

    pub fn empty(alphabet: &Alphabet) -> Self {
        Self { alphabet: Arc::new(alphabet.clone()), symbols: Vec::new() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn shared_alphabet(&self) -> Arc<Alphabet> {
        Arc::clone(&self.alphabet)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The factor occupying `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Self::from_trusted(self.shared_alphabet(), self.symbols[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Result<Word> {
        if len > self.len() {
            return Err(Error::LengthOutOfRange { requested: len, len: self.len() });
        }
        Ok(self.slice(0, len))
    }

    /// Word over the same alphabet built from raw symbols.
    pub fn sibling(&self, symbols: Vec<u8>) -> Word {
        Self::from_trusted(self.shared_alphabet(), symbols)
    }

    pub fn mirror(&self) -> Word {
        mirror(self)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.letter(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// The reversal (mirror image) of `w`.
pub fn mirror(w: &Word) -> Word {
    let mut symbols = w.symbols.clone();
    symbols.reverse();
    w.sibling(symbols)
}

pub(crate) fn is_palindrome(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Entry `n` (for `0 <= n <= n_max`) is true iff every length-`n` factor of
/// `w` has its mirror image among the factors of `w`.
///
/// Both factor sets have the same size, so the condition is checked as
/// `L_n(w) ⊆ L_n(mirror(w))` with matching lengths against a suffix automaton
/// of the mirror image.
pub fn reversal_closure_profile(w: &Word, n_max: usize) -> Result<Vec<bool>> {
    if n_max > w.len() {
        return Err(Error::LengthOutOfRange { requested: n_max, len: w.len() });
    }
    let reversed = mirror(w);
    let sam = SuffixAutomaton::build(reversed.symbols());
    // matched[j]: longest suffix of w[..j] that is a factor of mirror(w)
    let matched = sam.matching_lengths(w.symbols());
    // a length-n factor ending at j is mirrored iff matched[j] >= n
    let mut suffix_min = vec![usize::MAX; w.len() + 2];
    for j in (1..=w.len()).rev() {
        suffix_min[j] = suffix_min[j + 1].min(matched[j]);
    }
    Ok((0..=n_max).map(|n| n == 0 || suffix_min[n] >= n).collect())
}
