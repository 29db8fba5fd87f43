//! Lorenz words: finite aperiodic cyclic words over {L, R}.
//!
//! A Lorenz word is the shared currency of the crate: it names a Lorenz
//! knot by its template itinerary and a PSL(2, Z) conjugacy class at the
//! same time. Words are validated at construction (length >= 2, aperiodic)
//! and immutable afterwards, so every stored word is a genuine Lorenz word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One letter of the two-symbol alphabet, ordered L < R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    /// The other letter.
    pub fn swapped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

/// A finite aperiodic word over {L, R} of length >= 2, read cyclically.
///
/// The doubly infinite periodic Lorenz sequence of a word is never
/// materialized; [`LorenzWord::letter_at`] indexes into it directly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LorenzWord {
    letters: Vec<Letter>,
}

impl LorenzWord {
    /// Validates and builds a word from text over the characters 'L' and 'R'.
    pub fn parse(text: &str) -> Result<LorenzWord> {
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match ch {
                'L' => letters.push(Letter::L),
                'R' => letters.push(Letter::R),
                other => return Err(Error::InvalidLetter(other)),
            }
        }
        LorenzWord::from_letters(letters)
    }

    /// Validates and builds a word from a letter sequence.
    pub fn from_letters(letters: Vec<Letter>) -> Result<LorenzWord> {
        if letters.len() < 2 {
            return Err(Error::WordTooShort(letters.len()));
        }
        if minimal_period(&letters) != letters.len() {
            let text: String = letters.iter().map(|l| l.as_char()).collect();
            return Err(Error::PeriodicWord(text));
        }
        Ok(LorenzWord { letters })
    }

    /// Word length m.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 2 by construction
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letter of the infinite Lorenz sequence at 1-based position `i`.
    ///
    /// Any integer index is accepted; it wraps modulo the length, so
    /// `letter_at(i) == letter_at(i + m)` for all `i`.
    pub fn letter_at(&self, i: i64) -> Letter {
        let m = self.letters.len() as i64;
        self.letters[(i - 1).rem_euclid(m) as usize]
    }

    /// Moves the first letter to the end. Applying this `len()` times
    /// returns the original word.
    pub fn single_shift(&self) -> LorenzWord {
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[1..]);
        letters.push(self.letters[0]);
        LorenzWord { letters }
    }

    /// The lexicographically least cyclic rotation (L < R).
    ///
    /// Idempotent, and equal for all rotations of the same word.
    pub fn canonical(&self) -> LorenzWord {
        let start = least_rotation_start(&self.letters);
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[start..]);
        letters.extend_from_slice(&self.letters[..start]);
        LorenzWord { letters }
    }

    /// Whether this word already is its canonical rotation.
    pub fn is_canonical(&self) -> bool {
        least_rotation_start(&self.letters) == 0
    }

    /// True iff the two words differ by a cyclic shift.
    pub fn cyclically_equivalent(&self, other: &LorenzWord) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// The word written backwards with L and R swapped.
    ///
    /// This is the word of the inverse matrix: applying it twice returns
    /// a rotation of the original word.
    pub fn inverse_word(&self) -> LorenzWord {
        let letters = self.letters.iter().rev().map(|l| l.swapped()).collect();
        // reversal + swap preserves length and aperiodicity
        LorenzWord { letters }
    }

    /// True iff the word is a cyclic shift of its own inverse word, i.e.
    /// the corresponding matrix is conjugate to its inverse.
    pub fn is_reciprocal(&self) -> bool {
        self.cyclically_equivalent(&self.inverse_word())
    }
}

impl fmt::Display for LorenzWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LorenzWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<LorenzWord> {
        LorenzWord::parse(s)
    }
}

/// Smallest d dividing the length with letters[t] == letters[t - d] for all t.
fn minimal_period(letters: &[Letter]) -> usize {
    let n = letters.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|t| letters[t] == letters[t - d]) {
            return d;
        }
    }
    n
}

/// Start index of the lexicographically least rotation (Booth-style
/// two-candidate scan, O(n)).
fn least_rotation_start(letters: &[Letter]) -> usize {
    let n = letters.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = letters[(i + k) % n];
        let b = letters[(j + k) % n];
        if a == b {
            k += 1;
        } else if a > b {
            i = i + k + 1;
            if i == j {
                i += 1;
            }
            k = 0;
        } else {
            j = j + k + 1;
            if j == i {
                j += 1;
            }
            k = 0;
        }
    }
    i.min(j)
}

/// All canonical Lorenz words of length 2 ..= `max_len`, sorted.
///
/// One representative per cyclic equivalence class: the aperiodic binary
/// strings that equal their least rotation. Counts grow like necklace
/// numbers (69 words up to length 8).
pub fn enumerate_canonical_words(max_len: usize) -> Vec<LorenzWord> {
    let mut out = Vec::new();
    for m in 2..=max_len {
        for bits in 0u64..(1u64 << m) {
            let letters: Vec<Letter> = (0..m)
                .map(|p| {
                    if bits >> (m - 1 - p) & 1 == 0 {
                        Letter::L
                    } else {
                        Letter::R
                    }
                })
                .collect();
            if minimal_period(&letters) == m && least_rotation_start(&letters) == 0 {
                out.push(LorenzWord { letters });
            }
        }
    }
    out.sort();
    out
}
