use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Alphabet, Word};
use crate::{Error, Result};

/// A letter-to-word substitution over a single alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Vec<u8>>,
}

impl Morphism {
    /// Builds a morphism from `(letter, image)` pairs. Every letter of the
    /// alphabet needs exactly one nonempty image.
    pub fn new<'a>(alphabet: &Alphabet, rules: impl IntoIterator<Item = (char, &'a str)>) -> Result<Self> {
        let mut images: Vec<Option<Vec<u8>>> = vec![None; alphabet.size()];
        for (letter, image) in rules {
            let index = alphabet.index(letter).ok_or(Error::UnknownLetter(letter))?;
            let image = Word::parse(alphabet, image)?;
            if image.is_empty() {
                return Err(Error::EmptyImage(letter));
            }
            images[index as usize] = Some(image.symbols().to_vec());
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| img.ok_or(Error::MissingImage(alphabet.letter(i as u8))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { alphabet: Arc::new(alphabet.clone()), images })
    }

    /// Fibonacci morphism `a -> ab, b -> a`.
    pub fn fibonacci() -> Self {
        let ab = Alphabet::new(['a', 'b']).unwrap();
        Self::new(&ab, [('a', "ab"), ('b', "a")]).unwrap()
    }

    /// Thue–Morse morphism `a -> ab, b -> ba`.
    pub fn thue_morse() -> Self {
        let ab = Alphabet::new(['a', 'b']).unwrap();
        Self::new(&ab, [('a', "ab"), ('b', "ba")]).unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        &self.images[letter as usize]
    }

    pub fn is_prolongable(&self, seed: u8) -> bool {
        let image = self.image(seed);
        image.len() >= 2 && image[0] == seed
    }

    pub fn apply(&self, w: &[u8]) -> Vec<u8> {
        w.iter().flat_map(|&s| self.image(s).iter().copied()).collect()
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let image: String = img.iter().map(|&s| self.alphabet.letter(s)).collect();
                format!("{}:{}", self.alphabet.letter(i as u8), image)
            })
            .collect();
        write!(f, "{}", rules.join(", "))
    }
}

/// Where a word comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSource {
    Literal(Word),
    /// The block repeated forever.
    Periodic(Word),
    /// Fixed point of a morphism prolongable on `seed`.
    Morphic {
        morphism: Morphism,
        seed: u8,
    },
    /// Uniform letters from a seeded generator.
    Random {
        alphabet: Alphabet,
        seed: u64,
    },
}

impl WordSource {
    pub fn literal(text: &str) -> Result<Self> {
        Ok(Self::Literal(Word::from_text(text)?))
    }

    pub fn periodic(block: Word) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        Ok(Self::Periodic(block))
    }

    pub fn morphic(morphism: Morphism, seed: char) -> Result<Self> {
        let index = morphism.alphabet().index(seed).ok_or(Error::UnknownLetter(seed))?;
        if !morphism.is_prolongable(index) {
            return Err(Error::NotProlongable(seed));
        }
        Ok(Self::Morphic { morphism, seed: index })
    }

    pub fn fibonacci() -> Self {
        Self::morphic(Morphism::fibonacci(), 'a').unwrap()
    }

    pub fn thue_morse() -> Self {
        Self::morphic(Morphism::thue_morse(), 'a').unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Self::Literal(w) | Self::Periodic(w) => w.alphabet(),
            Self::Morphic { morphism, .. } => morphism.alphabet(),
            Self::Random { alphabet, .. } => alphabet,
        }
    }

    /// Short human-readable description used in reports.
    pub fn describe(&self) -> String {
        match self {
            Self::Literal(w) => format!("literal {w}"),
            Self::Periodic(w) => format!("periodic ({w})^w"),
            Self::Morphic { morphism, seed } => {
                format!("morphic {{{morphism:?}}} seed {}", morphism.alphabet().letter(*seed))
            }
            Self::Random { alphabet, seed } => {
                let letters: String = alphabet.letters().iter().collect();
                format!("random over {letters} seed {seed}")
            }
        }
    }

    /// Produces a word of (at least) `min_length` letters.
    ///
    /// Literal sources return their text; periodic and random sources return
    /// exactly `min_length` letters; morphic sources return the shortest
    /// iterate of the seed that is at least that long.
    pub fn generate(&self, min_length: usize) -> Result<Word> {
        match self {
            Self::Literal(w) => {
                if w.len() < min_length {
                    return Err(Error::LiteralTooShort { len: w.len(), requested: min_length });
                }
                Ok(w.clone())
            }
            Self::Periodic(block) => {
                if block.is_empty() {
                    return Err(Error::EmptyBlock);
                }
                let symbols = block.symbols().iter().copied().cycle().take(min_length).collect();
                Ok(block.sibling(symbols))
            }
            Self::Morphic { morphism, seed } => {
                if !morphism.is_prolongable(*seed) {
                    return Err(Error::NotProlongable(morphism.alphabet().letter(*seed)));
                }
                let mut current = vec![*seed];
                while current.len() < min_length {
                    current = morphism.apply(&current);
                }
                Ok(Word::from_trusted(Arc::clone(&morphism.alphabet), current))
            }
            Self::Random { alphabet, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let k = alphabet.size() as u8;
                let symbols = (0..min_length).map(|_| rng.gen_range(0..k)).collect();
                Ok(Word::from_trusted(Arc::new(alphabet.clone()), symbols))
            }
        }
    }

    /// Exactly `length` letters: the generated word cut to size.
    pub fn prefix(&self, length: usize) -> Result<Word> {
        self.generate(length)?.prefix(length)
    }
}
