//! PSL(2, Z) matrices: the word-to-matrix product map, hyperbolicity,
//! the associated quadratic form, and conjugacy through river words.
//!
//! Entries are unbounded integers: traces grow exponentially in the word
//! length, so 64-bit arithmetic overflows already around length 40.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qform::QuadForm;
use crate::words::{Letter, LorenzWord};

/// An element of PSL(2, Z): an integer matrix [[a, b], [c, d]] with
/// determinant 1, stored as its sign-normalized representative.
///
/// Normalization: trace > 0 when the trace is nonzero; at trace 0 the
/// first nonzero entry of (a, b, c) is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Psl2Matrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Psl2Matrix {
    /// Builds a PSL(2, Z) element, checking det = 1 and normalizing sign.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Psl2Matrix> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(format!(
                "[[{}, {}], [{}, {}]] (det {})",
                a, b, c, d, det
            )));
        }
        Ok(Psl2Matrix::normalized(a, b, c, d))
    }

    fn normalized(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Psl2Matrix {
        let trace = &a + &d;
        let flip = if !trace.is_zero() {
            trace.is_negative()
        } else if !a.is_zero() {
            a.is_negative()
        } else if !b.is_zero() {
            b.is_negative()
        } else {
            c.is_negative()
        };
        if flip {
            Psl2Matrix {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            Psl2Matrix { a, b, c, d }
        }
    }

    /// The generator substituted for the letter L: [[1, 1], [0, 1]].
    pub fn generator_l() -> Psl2Matrix {
        Psl2Matrix::normalized(BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::one())
    }

    /// The generator substituted for the letter R: [[1, 0], [1, 1]].
    pub fn generator_r() -> Psl2Matrix {
        Psl2Matrix::normalized(BigInt::one(), BigInt::zero(), BigInt::one(), BigInt::one())
    }

    pub fn identity() -> Psl2Matrix {
        Psl2Matrix::normalized(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// The ordered product of generators for the letters of `word`.
    ///
    /// Always hyperbolic and primitive, with nonnegative entries.
    pub fn from_word(word: &LorenzWord) -> Psl2Matrix {
        let mut m = Psl2Matrix::identity();
        for &letter in word.letters() {
            let g = match letter {
                Letter::L => Psl2Matrix::generator_l(),
                Letter::R => Psl2Matrix::generator_r(),
            };
            m = &m * &g;
        }
        m
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// |trace| > 2.
    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() > BigInt::from(2)
    }

    /// The sign-normalized inverse [[d, -b], [-c, a]].
    pub fn inverse(&self) -> Psl2Matrix {
        Psl2Matrix::normalized(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// The primitive integral form whose roots are the fixed points of the
    /// matrix: (1/g)[c, d - a, -b] with g = gcd(c, d - a, b).
    ///
    /// Requires a hyperbolic matrix; the result is indefinite with
    /// nonsquare discriminant.
    pub fn quad_form(&self) -> Result<QuadForm> {
        if !self.is_hyperbolic() {
            return Err(Error::NotHyperbolic(self.to_string()));
        }
        let qa = self.c.clone();
        let qb = &self.d - &self.a;
        let qc = -&self.b;
        let g = qa.gcd(&qb).gcd(&qc);
        // gcd is zero only for scalar matrices, which are not hyperbolic
        Ok(QuadForm::new(&qa / &g, &qb / &g, &qc / &g))
    }

    /// The canonical river word of the associated form, together with the
    /// power k >= 1 such that this matrix is conjugate to mat(word)^k.
    ///
    /// k = 1 exactly when the matrix is primitive. k is located by walking
    /// powers of mat(word) until the trace matches; a miss is an internal
    /// consistency error, not a user error.
    pub fn word_and_power(&self) -> Result<(LorenzWord, u32)> {
        let word = self.quad_form()?.river_word()?.canonical();
        let target = self.trace().abs();
        let base = Psl2Matrix::from_word(&word);
        let mut power = base.clone();
        let mut k = 1u32;
        loop {
            let t = power.trace();
            if t == target {
                return Ok((word, k));
            }
            if t > target {
                return Err(Error::Internal(format!(
                    "trace {} of {} never reached by powers of mat({})",
                    target, self, word
                )));
            }
            power = &power * &base;
            k += 1;
        }
    }

    /// True iff the two matrices are conjugate in PSL(2, Z): same canonical
    /// river word and same power.
    pub fn is_conjugate_to(&self, other: &Psl2Matrix) -> Result<bool> {
        Ok(self.word_and_power()? == other.word_and_power()?)
    }
}

impl Mul for &Psl2Matrix {
    type Output = Psl2Matrix;

    fn mul(self, rhs: &Psl2Matrix) -> Psl2Matrix {
        Psl2Matrix::normalized(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl fmt::Display for Psl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Psl2Matrix {
    type Err = Error;

    /// Parses "a,b;c,d" with optional whitespace.
    fn from_str(s: &str) -> Result<Psl2Matrix> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!(
                "matrix {:?}: expected \"a,b;c,d\"",
                s
            )));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(Error::Parse(format!(
                    "matrix {:?}: expected \"a,b;c,d\"",
                    s
                )));
            }
            for cell in cells {
                let value = BigInt::from_str(cell.trim()).map_err(|_| {
                    Error::Parse(format!("matrix {:?}: bad integer {:?}", s, cell.trim()))
                })?;
                entries.push(value);
            }
        }
        let mut it = entries.into_iter();
        Psl2Matrix::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_canonical_words;

    fn w(s: &str) -> LorenzWord {
        LorenzWord::parse(s).unwrap()
    }

    fn m(s: &str) -> Psl2Matrix {
        s.parse().unwrap()
    }

    #[test]
    fn word_products_match_known_matrices() {
        assert_eq!(Psl2Matrix::from_word(&w("LR")), m("2,1;1,1"));
        assert_eq!(Psl2Matrix::from_word(&w("LLR")), m("3,2;1,1"));
        assert_eq!(Psl2Matrix::from_word(&w("LLLLRLR")), m("14,9;3,2"));
        assert_eq!(Psl2Matrix::from_word(&w("RRLLRL")), m("3,5;7,12"));
    }

    #[test]
    fn hyperbolicity_is_a_trace_test() {
        assert!(m("2,1;1,1").is_hyperbolic());
        assert!(!m("1,1;0,1").is_hyperbolic()); // parabolic, trace 2
        assert!(!m("0,-1;1,0").is_hyperbolic()); // elliptic, trace 0
    }

    #[test]
    fn determinant_must_be_one() {
        assert!(matches!(
            Psl2Matrix::new(1, 0, 0, -1),
            Err(Error::NotUnimodular(_))
        ));
        assert!(matches!(
            Psl2Matrix::new(2, 0, 0, 2),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn sign_normalization() {
        // negative trace flips
        assert_eq!(Psl2Matrix::new(-2, -1, -1, -1).unwrap(), m("2,1;1,1"));
        // trace zero: first nonzero of (a, b, c) made positive
        let s = Psl2Matrix::new(0, -1, 1, 0).unwrap();
        let (a, b, c, _) = s.entries();
        assert!(a.is_zero());
        assert_eq!(b, &BigInt::from(1));
        assert_eq!(c, &BigInt::from(-1));
    }

    #[test]
    fn quad_form_of_known_matrices() {
        assert_eq!(m("3,5;7,12").quad_form().unwrap(), QuadForm::new(7, 9, -5));
        assert_eq!(m("2,1;1,1").quad_form().unwrap(), QuadForm::new(1, -1, -1));
        assert_eq!(m("3,2;1,1").quad_form().unwrap(), QuadForm::new(1, -2, -2));
    }

    #[test]
    fn quad_form_rejects_non_hyperbolic() {
        assert!(matches!(
            m("1,1;0,1").quad_form(),
            Err(Error::NotHyperbolic(_))
        ));
    }

    #[test]
    fn quad_form_divides_out_common_factor() {
        // square of [[2,1],[1,1]] is [[5,3],[3,2]]: raw triple (3, -3, -3)
        let q = m("5,3;3,2").quad_form().unwrap();
        assert_eq!(q, QuadForm::new(1, -1, -1));
    }

    #[test]
    fn word_and_power_examples() {
        assert_eq!(m("3,5;7,12").word_and_power().unwrap(), (w("LLRLRR"), 1));
        assert_eq!(m("2,1;1,1").word_and_power().unwrap(), (w("LR"), 1));
        assert_eq!(m("5,3;3,2").word_and_power().unwrap(), (w("LR"), 2));
        assert!(matches!(
            m("1,1;0,1").word_and_power(),
            Err(Error::NotHyperbolic(_))
        ));
    }

    #[test]
    fn conjugacy_examples() {
        let a = m("3,5;7,12");
        assert!(a
            .is_conjugate_to(&Psl2Matrix::from_word(&w("RRLLRL")))
            .unwrap());
        assert!(a.is_conjugate_to(&a.inverse()).unwrap()); // reciprocal
        let llr = Psl2Matrix::from_word(&w("LLR"));
        let lr = Psl2Matrix::from_word(&w("LR"));
        assert!(!llr.is_conjugate_to(&lr).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(m("2,1;1,1").inverse(), m("1,-1;-1,2"));
        assert_eq!(m("3,2;1,1").inverse(), m("1,-2;-1,3"));
        let inv = Psl2Matrix::from_word(&w("RRLLRL")).inverse();
        assert_eq!(inv.word_and_power().unwrap(), (w("RLRRLL").canonical(), 1));
    }

    #[test]
    fn inverse_word_matches_matrix_inverse_on_all_small_words() {
        for word in enumerate_canonical_words(10) {
            let mat = Psl2Matrix::from_word(&word);
            let (winv, k) = mat.inverse().word_and_power().unwrap();
            assert_eq!(k, 1);
            assert_eq!(winv, word.inverse_word().canonical(), "word {}", word);
        }
    }

    #[test]
    fn word_recovery_is_conjugation_invariant() {
        // conjugated matrices leave the word-product family: entries of
        // mixed sign exercise the form map and surd expansion in full
        let conjugators: Vec<Psl2Matrix> =
            vec![m("0,-1;1,0"), m("1,-3;0,1"), m("2,1;1,1"), m("1,0;-4,1")];
        for word in enumerate_canonical_words(6) {
            let mat = Psl2Matrix::from_word(&word);
            for g in &conjugators {
                let conjugate = &(g * &mat) * &g.inverse();
                assert_eq!(
                    conjugate.word_and_power().unwrap(),
                    (word.clone(), 1),
                    "word {} conjugated by {}",
                    word,
                    g
                );
            }
        }
    }

    #[test]
    fn products_and_inverses_stay_unimodular() {
        let dets_ok = |mat: &Psl2Matrix| {
            let (a, b, c, d) = mat.entries();
            (a * d - b * c).is_one()
        };
        let sample: Vec<Psl2Matrix> = ["2,1;1,1", "3,2;1,1", "3,5;7,12", "0,-1;1,0", "1,1;0,1"]
            .iter()
            .map(|s| m(s))
            .collect();
        for x in &sample {
            assert!(dets_ok(&x.inverse()));
            assert_eq!(x * &x.inverse(), Psl2Matrix::identity());
            for y in &sample {
                assert!(dets_ok(&(x * y)));
            }
        }
    }

    #[test]
    fn word_round_trip_on_all_small_words() {
        for word in enumerate_canonical_words(8) {
            let mat = Psl2Matrix::from_word(&word);
            assert!(mat.is_hyperbolic());
            assert_eq!(
                mat.word_and_power().unwrap(),
                (word.clone(), 1),
                "word {}",
                word
            );
        }
    }

    #[test]
    fn form_discriminant_is_positive_nonsquare() {
        for word in enumerate_canonical_words(8) {
            let q = Psl2Matrix::from_word(&word).quad_form().unwrap();
            let d = q.discriminant();
            assert!(d.is_positive());
            let r = d.sqrt();
            assert_ne!(&r * &r, d, "square discriminant for {}", word);
        }
    }

    #[test]
    fn conjugacy_is_an_equivalence_on_a_sample() {
        let sample: Vec<Psl2Matrix> = ["2,1;1,1", "3,2;1,1", "3,5;7,12", "5,3;3,2", "14,9;3,2"]
            .iter()
            .map(|s| m(s))
            .collect();
        for x in &sample {
            assert!(x.is_conjugate_to(x).unwrap());
            for y in &sample {
                assert_eq!(x.is_conjugate_to(y).unwrap(), y.is_conjugate_to(x).unwrap());
                for z in &sample {
                    if x.is_conjugate_to(y).unwrap() && y.is_conjugate_to(z).unwrap() {
                        assert!(x.is_conjugate_to(z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_parsing() {
        assert_eq!(m(" 3 , 5 ; 7 , 12 "), m("3,5;7,12"));
        assert!(matches!(
            "3,5,7,12".parse::<Psl2Matrix>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "3,5;7".parse::<Psl2Matrix>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "a,b;c,d".parse::<Psl2Matrix>(),
            Err(Error::Parse(_))
        ));
    }
}
