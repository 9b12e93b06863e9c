//! Weighted automata as linear representations.
//!
//! A representation over a ring `R` is a triple `(lambda, mu, gamma)`:
//! a row vector, one square matrix per alphabet symbol, and a column
//! vector. Its behavior assigns to each word the scalar
//! `lambda * mu(w1) * ... * mu(wk) * gamma`. Dimension-zero
//! representations are legal and denote the zero series.

use std::fmt;

use thiserror::Error;

use crate::matrix::Matrix;
use crate::ring::BezoutRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("unknown symbol: {0}")]
    UnknownSymbol(String),
    #[error("alphabets do not match")]
    AlphabetMismatch,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

/// An ordered alphabet of distinct, nonempty symbol names. The order is
/// fixed and used everywhere words are compared or enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(AutomatonError::InvalidAlphabet("empty alphabet".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(AutomatonError::InvalidAlphabet("empty symbol name".into()));
            }
            if symbols[..i].contains(s) {
                return Err(AutomatonError::InvalidAlphabet(format!(
                    "duplicate symbol: {s:?}"
                )));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    fn all_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word: the empty string is the empty word; when every
    /// symbol is a single character the word is their concatenation,
    /// otherwise symbols are comma-separated.
    pub fn word_from_text(&self, text: &str) -> Result<Word, AutomatonError> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        if self.all_single_char() {
            for c in text.chars() {
                let name = c.to_string();
                let index = self
                    .index_of(&name)
                    .ok_or(AutomatonError::UnknownSymbol(name))?;
                letters.push(index);
            }
        } else {
            for name in text.split(',') {
                let index = self
                    .index_of(name)
                    .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))?;
                letters.push(index);
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Renders a word in the same syntax accepted by `word_from_text`.
    pub fn spell(&self, word: &Word) -> String {
        let names: Vec<&str> = word.letters().iter().map(|&i| self.symbol(i)).collect();
        if self.all_single_char() {
            names.concat()
        } else {
            names.join(",")
        }
    }
}

/// A word over some alphabet, stored as symbol indices. Words are ordered
/// by length first, then lexicographically by symbol index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word extended by one letter.
    pub fn child(&self, letter: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { letters }
    }

    /// Splits off the last letter, if any.
    pub fn parent(&self) -> Option<(Word, usize)> {
        let (&last, front) = self.letters.split_last()?;
        Some((Word::from_letters(front.to_vec()), last))
    }

    /// All words over `alphabet_len` symbols of length at most `max_len`,
    /// in length-lexicographic order.
    pub fn all_up_to(alphabet_len: usize, max_len: usize) -> Vec<Word> {
        let mut words = vec![Word::empty()];
        let mut level_start = 0;
        for _ in 0..max_len {
            let level_end = words.len();
            for i in level_start..level_end {
                let word = words[i].clone();
                for letter in 0..alphabet_len {
                    words.push(word.child(letter));
                }
            }
            level_start = level_end;
        }
        words
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// A linear representation `(lambda, mu, gamma)` over a Bézout ring.
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRepresentation<R> {
    alphabet: Alphabet,
    lambda: Matrix<R>,
    mu: Vec<Matrix<R>>,
    gamma: Matrix<R>,
}

impl<R: BezoutRing> LinearRepresentation<R> {
    pub fn new(
        alphabet: Alphabet,
        lambda: Matrix<R>,
        mu: Vec<Matrix<R>>,
        gamma: Matrix<R>,
    ) -> Result<Self, AutomatonError> {
        let dim = lambda.cols();
        if lambda.rows() != 1 {
            return Err(AutomatonError::InvalidShape(format!(
                "lambda must be a row vector, got {}x{}",
                lambda.rows(),
                lambda.cols()
            )));
        }
        if gamma.rows() != dim || gamma.cols() != 1 {
            return Err(AutomatonError::InvalidShape(format!(
                "gamma must be {dim}x1, got {}x{}",
                gamma.rows(),
                gamma.cols()
            )));
        }
        if mu.len() != alphabet.len() {
            return Err(AutomatonError::InvalidShape(format!(
                "expected {} transition matrices, got {}",
                alphabet.len(),
                mu.len()
            )));
        }
        for (i, m) in mu.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(AutomatonError::InvalidShape(format!(
                    "transition matrix for {:?} must be {dim}x{dim}, got {}x{}",
                    alphabet.symbol(i),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LinearRepresentation {
            alphabet,
            lambda,
            mu,
            gamma,
        })
    }

    /// The dimension-zero representation of the zero series.
    pub fn zero_rep(alphabet: Alphabet) -> Self {
        let mu = vec![Matrix::zero(0, 0); alphabet.len()];
        LinearRepresentation {
            alphabet,
            lambda: Matrix::zero(1, 0),
            mu,
            gamma: Matrix::zero(0, 1),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.lambda.cols()
    }

    pub fn lambda(&self) -> &Matrix<R> {
        &self.lambda
    }

    pub fn mu(&self, letter: usize) -> &Matrix<R> {
        &self.mu[letter]
    }

    pub fn gamma(&self) -> &Matrix<R> {
        &self.gamma
    }

    /// The coefficient of `word` in the behavior series.
    pub fn behavior(&self, word: &Word) -> Result<R, AutomatonError> {
        let mut row = self.lambda.clone();
        for &letter in word.letters() {
            if letter >= self.alphabet.len() {
                return Err(AutomatonError::UnknownSymbol(format!("#{letter}")));
            }
            row = row.mul(&self.mu[letter]);
        }
        Ok(row.mul(&self.gamma).at(0, 0).clone())
    }

    /// The Kronecker-product representation whose behavior is the
    /// pointwise product of the two behaviors.
    pub fn hadamard(&self, other: &Self) -> Result<Self, AutomatonError> {
        if self.alphabet != other.alphabet {
            return Err(AutomatonError::AlphabetMismatch);
        }
        let mu = self
            .mu
            .iter()
            .zip(&other.mu)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        Ok(LinearRepresentation {
            alphabet: self.alphabet.clone(),
            lambda: self.lambda.kronecker(&other.lambda),
            mu,
            gamma: self.gamma.kronecker(&other.gamma),
        })
    }

    /// The reversed representation `(gamma^t, mu^t, lambda^t)`: its
    /// behavior on a word is the behavior of `self` on the reversal.
    pub fn transpose(&self) -> Self {
        LinearRepresentation {
            alphabet: self.alphabet.clone(),
            lambda: self.gamma.transpose(),
            mu: self.mu.iter().map(Matrix::transpose).collect(),
            gamma: self.lambda.transpose(),
        }
    }

    /// Block-diagonal sum; the behavior is the sum of behaviors.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, AutomatonError> {
        if self.alphabet != other.alphabet {
            return Err(AutomatonError::AlphabetMismatch);
        }
        let (n1, n2) = (self.dim(), other.dim());
        let lambda = Matrix::from_fn(1, n1 + n2, |_, j| {
            if j < n1 {
                self.lambda.at(0, j).clone()
            } else {
                other.lambda.at(0, j - n1).clone()
            }
        });
        let gamma = Matrix::from_fn(n1 + n2, 1, |i, _| {
            if i < n1 {
                self.gamma.at(i, 0).clone()
            } else {
                other.gamma.at(i - n1, 0).clone()
            }
        });
        let mu = self
            .mu
            .iter()
            .zip(&other.mu)
            .map(|(a, b)| {
                Matrix::from_fn(n1 + n2, n1 + n2, |i, j| match (i < n1, j < n1) {
                    (true, true) => a.at(i, j).clone(),
                    (false, false) => b.at(i - n1, j - n1).clone(),
                    _ => R::zero(),
                })
            })
            .collect();
        Ok(LinearRepresentation {
            alphabet: self.alphabet.clone(),
            lambda,
            mu,
            gamma,
        })
    }
}
