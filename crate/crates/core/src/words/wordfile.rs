//! The `key = value` word-spec file format.
//!
//! ```text
//! # Fibonacci word
//! type = morphic
//! alphabet = a,b
//! morphism = a:ab, b:a
//! seed = a
//! ```
//!
//! Recognised keys are `type`, `alphabet`, `text`, `block`, `morphism` and
//! `seed`. Blank lines and lines starting with `#` are skipped.

use std::path::Path;

use super::{Alphabet, Morphism, Word, WordSource};
use crate::{Error, Result};

const KEYS: [&str; 6] = ["type", "alphabet", "text", "block", "morphism", "seed"];

struct Entry {
    line: usize,
    value: String,
}

#[derive(Default)]
struct Entries {
    values: [Option<Entry>; 6],
}

impl Entries {
    fn get(&self, key: &str) -> Option<&Entry> {
        let i = KEYS.iter().position(|k| *k == key)?;
        self.values[i].as_ref()
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::WordFile { line, message: message.into() }
}

pub fn read_word_file(path: impl AsRef<Path>) -> Result<WordSource> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_word_file(&text)
}

pub fn parse_word_file(text: &str) -> Result<WordSource> {
    let mut entries = Entries::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once('=').ok_or_else(|| err(line, "expected `key = value`"))?;
        let key = key.trim();
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| err(line, format!("unknown key `{key}`")))?;
        if entries.values[slot].is_some() {
            return Err(err(line, format!("duplicate key `{key}`")));
        }
        entries.values[slot] = Some(Entry { line, value: value.trim().to_string() });
    }

    let kind = entries.get("type").ok_or_else(|| err(0, "missing key `type`"))?;
    let alphabet = match entries.get("alphabet") {
        Some(e) => Some(parse_alphabet(e)?),
        None => None,
    };
    let require =
        |key: &str| entries.get(key).ok_or_else(|| err(kind.line, format!("type {} requires `{key}`", kind.value)));
    let reject = |keys: &[&str]| -> Result<()> {
        for key in keys {
            if let Some(e) = entries.get(key) {
                return Err(err(e.line, format!("`{key}` is not valid for type {}", kind.value)));
            }
        }
        Ok(())
    };

    match kind.value.as_str() {
        "literal" => {
            reject(&["block", "morphism", "seed"])?;
            let text = require("text")?;
            let word = word_over(alphabet.as_ref(), text)?;
            Ok(WordSource::Literal(word))
        }
        "periodic" => {
            reject(&["text", "morphism", "seed"])?;
            let block = require("block")?;
            let word = word_over(alphabet.as_ref(), block)?;
            WordSource::periodic(word).map_err(|e| err(block.line, e.to_string()))
        }
        "morphic" => {
            reject(&["text", "block"])?;
            let rules_entry = require("morphism")?;
            let rules = parse_rules(rules_entry)?;
            let alphabet = match alphabet {
                Some(a) => a,
                None => {
                    let letters: String =
                        rules.iter().flat_map(|(c, img)| std::iter::once(*c).chain(img.chars())).collect();
                    Alphabet::infer(&letters).map_err(|e| err(rules_entry.line, e.to_string()))?
                }
            };
            let morphism = Morphism::new(&alphabet, rules.iter().map(|(c, s)| (*c, s.as_str())))
                .map_err(|e| err(rules_entry.line, e.to_string()))?;
            let seed = require("seed")?;
            let mut chars = seed.value.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(err(seed.line, "morphic seed must be a single letter")),
            };
            WordSource::morphic(morphism, letter).map_err(|e| err(seed.line, e.to_string()))
        }
        "random" => {
            reject(&["text", "block", "morphism"])?;
            let alphabet = alphabet.ok_or_else(|| err(kind.line, "type random requires `alphabet`"))?;
            let seed = require("seed")?;
            let seed_value = seed
                .value
                .parse::<u64>()
                .map_err(|_| err(seed.line, format!("invalid random seed `{}`", seed.value)))?;
            Ok(WordSource::Random { alphabet, seed: seed_value })
        }
        other => Err(err(kind.line, format!("unknown type `{other}`"))),
    }
}

fn parse_alphabet(entry: &Entry) -> Result<Alphabet> {
    let mut letters = Vec::new();
    for token in entry.value.split(',') {
        let token = token.trim();
        let mut chars = token.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => letters.push(c),
            _ => return Err(err(entry.line, format!("alphabet token `{token}` is not a single letter"))),
        }
    }
    Alphabet::new(letters).map_err(|e| err(entry.line, e.to_string()))
}

fn word_over(alphabet: Option<&Alphabet>, entry: &Entry) -> Result<Word> {
    let parsed = match alphabet {
        Some(a) => Word::parse(a, &entry.value),
        None => Word::from_text(&entry.value),
    };
    parsed.map_err(|e| err(entry.line, e.to_string()))
}

fn parse_rules(entry: &Entry) -> Result<Vec<(char, String)>> {
    entry
        .value
        .split(',')
        .map(|rule| {
            let (letter, image) = rule
                .split_once(':')
                .ok_or_else(|| err(entry.line, format!("expected `letter:image`, got `{}`", rule.trim())))?;
            let letter = letter.trim();
            let mut chars = letter.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok((c, image.trim().to_string())),
                _ => Err(err(entry.line, format!("`{letter}` is not a single letter"))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_type() {
        let fib = parse_word_file("type = morphic\nalphabet = a,b\nmorphism = a:ab, b:a\nseed = a\n").unwrap();
        assert_eq!(fib.generate(5).unwrap().to_string(), "abaab");

        let lit = parse_word_file("# comment\n\ntype=literal\ntext = abca \n").unwrap();
        assert_eq!(lit.generate(0).unwrap().to_string(), "abca");

        let per = parse_word_file("type = periodic\nblock = aabaa").unwrap();
        assert_eq!(per.generate(7).unwrap().to_string(), "aabaaaa");

        let rnd = parse_word_file("type = random\nalphabet = a, b\nseed = 12345").unwrap();
        assert_eq!(rnd.generate(30).unwrap().len(), 30);
    }

    #[test]
    fn morphic_alphabet_inferred() {
        let tm = parse_word_file("type = morphic\nmorphism = a:ab, b:ba\nseed = a").unwrap();
        assert_eq!(tm.generate(8).unwrap().to_string(), "abbabaab");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_word_file("type = literal\ncolour = red\n").unwrap_err();
        assert_eq!(e, Error::WordFile { line: 2, message: "unknown key `colour`".into() });

        let e = parse_word_file("type = morphic\nmorphism = a:ba, b:a\nseed = a").unwrap_err();
        assert!(matches!(e, Error::WordFile { line: 3, .. }), "{e}");

        let e = parse_word_file("type = literal\nalphabet = a,b\ntext = abc").unwrap_err();
        assert!(matches!(e, Error::WordFile { line: 3, .. }), "{e}");

        let e = parse_word_file("type = random\nseed = 1").unwrap_err();
        assert!(matches!(e, Error::WordFile { line: 1, .. }), "{e}");

        let e = parse_word_file("type = periodic\nblock =\n").unwrap_err();
        assert!(matches!(e, Error::WordFile { line: 2, .. }), "{e}");

        assert!(parse_word_file("text = ab").is_err());
        assert!(parse_word_file("type = literal\ntext = ab\ntext = ba").is_err());
        assert!(parse_word_file("type = literal\njunk").is_err());
    }
}
