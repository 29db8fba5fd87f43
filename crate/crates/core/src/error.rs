//! Error type shared by all modules.

use std::fmt;

/// Everything that can go wrong when building or combining words,
/// matrices, and forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word character outside {L, R}.
    InvalidLetter(char),
    /// Words must have length at least 2.
    WordTooShort(usize),
    /// The word is a repetition of a strictly shorter word.
    PeriodicWord(String),
    /// Malformed matrix or form text.
    Parse(String),
    /// The integer matrix does not have determinant 1.
    NotUnimodular(String),
    /// The operation needs a hyperbolic matrix (|trace| > 2).
    NotHyperbolic(String),
    /// The operation needs an indefinite form (discriminant > 0).
    NotIndefinite(String),
    /// The discriminant is a perfect square; the form factors over Z.
    SquareDiscriminant(String),
    /// gcd(a, b, c) > 1.
    ImprimitiveForm(String),
    /// The continued fraction of the first root needs a nonzero leading
    /// coefficient.
    ZeroLeadingCoefficient(String),
    /// The operation needs a positive river form (a > 0 > c).
    NotRiverForm(String),
    /// Linking numbers are undefined for cyclically equivalent words.
    EquivalentWords(String, String),
    /// Alphabetization needs pairwise distinct words.
    DuplicateWord(String),
    /// The reciprocity identity needs at least one reciprocal word.
    NoReciprocalWord(String, String),
    /// The matrix is a proper power: conjugate to mat(word)^k with k > 1.
    NotPrimitive { word: String, power: u32 },
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLetter(ch) => {
                write!(f, "invalid letter {:?}: words use only 'L' and 'R'", ch)
            }
            Error::WordTooShort(n) => {
                write!(f, "word of length {} is too short: need length >= 2", n)
            }
            Error::PeriodicWord(w) => write!(f, "word {} is periodic: not a Lorenz word", w),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
            Error::NotUnimodular(m) => write!(f, "matrix {} does not have determinant 1", m),
            Error::NotHyperbolic(m) => write!(f, "matrix {} is not hyperbolic (|trace| <= 2)", m),
            Error::NotIndefinite(q) => {
                write!(f, "form {} is not indefinite (discriminant <= 0)", q)
            }
            Error::SquareDiscriminant(q) => write!(f, "form {} has square discriminant", q),
            Error::ImprimitiveForm(q) => {
                write!(f, "form {} is imprimitive (gcd of coefficients > 1)", q)
            }
            Error::ZeroLeadingCoefficient(q) => {
                write!(f, "form {} has zero leading coefficient", q)
            }
            Error::NotRiverForm(q) => write!(
                f,
                "form {} is not a positive river form (need a > 0 > c)",
                q
            ),
            Error::EquivalentWords(a, b) => write!(
                f,
                "words {} and {} are cyclically equivalent; linking number undefined",
                a, b
            ),
            Error::DuplicateWord(w) => write!(f, "duplicate word {} in list to alphabetize", w),
            Error::NoReciprocalWord(a, b) => write!(f, "neither {} nor {} is reciprocal", a, b),
            Error::NotPrimitive { word, power } => write!(
                f,
                "matrix is not primitive: conjugate to mat({})^{}",
                word, power
            ),
            Error::Internal(msg) => write!(f, "internal consistency error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
