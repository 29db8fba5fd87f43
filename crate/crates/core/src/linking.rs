//! Linking numbers of modular/Lorenz knots.
//!
//! Two independent computations of the same invariant: triple counting
//! over the pair of Lorenz sequences (the river/topograph picture), and
//! a direct itinerary comparison on the Lorenz template (the doubling
//! map picture). Both return the same negative integer for every pair of
//! inequivalent words; the crate treats their agreement as a permanent
//! cross-check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Letter, LorenzWord};

/// One matched occurrence: positions (i, j) with an L in word A facing an
/// R in word B, agreeing for x further letters, then separating as R in A
/// against L in B. x is the length of the matched inner word, so the
/// sequences carry L W' R and R W' L with |W'| = x.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RsTriple {
    pub i: usize,
    pub j: usize,
    pub x: usize,
}

/// Kennedy crossing counts and the exact value of the quarter-sum formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KennedyValues {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub value_num: i64,
    pub value_den: i64,
}

impl KennedyValues {
    /// The formula value (c1 + c2 - c3) / 4 as an exact rational.
    pub fn value(&self) -> num_rational::Ratio<i64> {
        num_rational::Ratio::new(self.value_num, self.value_den)
    }

    /// True iff the value is exactly the given integer.
    pub fn equals_integer(&self, n: i64) -> bool {
        self.value_den == 1 && self.value_num == n
    }
}

/// Everything computed for one word pair: the triples, both linking
/// values, the Kennedy evaluation, the symmetrized sum when defined,
/// and the agreement flags.
#[derive(Debug, Clone)]
pub struct LinkReport {
    pub word_a: LorenzWord,
    pub word_b: LorenzWord,
    pub triples: Vec<RsTriple>,
    pub rs_link: i64,
    pub oracle_link: i64,
    pub kennedy: Option<KennedyValues>,
    pub symmetrized: Option<i64>,
    pub rs_oracle_agree: bool,
    pub kennedy_agrees: Option<bool>,
}

impl LinkReport {
    /// The report as a single JSON object with a fixed field layout:
    /// word_a, word_b, canonical_a, canonical_b, triples, rs_link,
    /// oracle_link, kennedy, symmetrized. Missing parts are null.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Rep<'a> {
            word_a: String,
            word_b: String,
            canonical_a: String,
            canonical_b: String,
            triples: &'a [RsTriple],
            rs_link: i64,
            oracle_link: i64,
            kennedy: Option<&'a KennedyValues>,
            symmetrized: Option<i64>,
        }
        let rep = Rep {
            word_a: self.word_a.to_string(),
            word_b: self.word_b.to_string(),
            canonical_a: self.word_a.canonical().to_string(),
            canonical_b: self.word_b.canonical().to_string(),
            triples: &self.triples,
            rs_link: self.rs_link,
            oracle_link: self.oracle_link,
            kennedy: self.kennedy.as_ref(),
            symmetrized: self.symmetrized,
        };
        serde_json::to_string(&rep).expect("link report serializes")
    }
}

fn scan_bound(wa: &LorenzWord, wb: &LorenzWord) -> i64 {
    num_integer::lcm(wa.len() as i64, wb.len() as i64)
}

fn require_inequivalent(wa: &LorenzWord, wb: &LorenzWord) -> Result<()> {
    if wa.cyclically_equivalent(wb) {
        Err(Error::EquivalentWords(wa.to_string(), wb.to_string()))
    } else {
        Ok(())
    }
}

/// All triples (i, j, x) over one period pair: i in 1..=m with an L, j in
/// 1..=n with an R, the sequences agreeing for x steps after (i, j) and
/// then separating as R against L.
///
/// Divergence is guaranteed within lcm(m, n) steps for inequivalent
/// words; a pair that never diverges (possible only when the words are
/// rotations of each other) contributes nothing.
pub fn rs_triples(wa: &LorenzWord, wb: &LorenzWord) -> Vec<RsTriple> {
    let m = wa.len() as i64;
    let n = wb.len() as i64;
    let bound = scan_bound(wa, wb);
    let mut triples = Vec::new();
    for i in 1..=m {
        if wa.letter_at(i) != Letter::L {
            continue;
        }
        for j in 1..=n {
            if wb.letter_at(j) != Letter::R {
                continue;
            }
            for k in 1..=bound {
                let above = wa.letter_at(i + k);
                let below = wb.letter_at(j + k);
                if above != below {
                    if above == Letter::R {
                        triples.push(RsTriple {
                            i: i as usize,
                            j: j as usize,
                            x: (k - 1) as usize,
                        });
                    }
                    break;
                }
            }
        }
    }
    triples.sort();
    triples
}

/// The linking number of the two knots: minus the number of triples.
/// Always <= -1; undefined (an error) for cyclically equivalent words.
pub fn linking_number(wa: &LorenzWord, wb: &LorenzWord) -> Result<i64> {
    require_inequivalent(wa, wb)?;
    Ok(-(rs_triples(wa, wb).len() as i64))
}

/// The itinerary of the Lorenz sequence as bits (L = 0, R = 1) over
/// `len` positions starting at 1-based position `start`.
fn itinerary_bits(w: &LorenzWord, start: i64, len: i64) -> Vec<u8> {
    (0..len)
        .map(|k| match w.letter_at(start + k) {
            Letter::L => 0,
            Letter::R => 1,
        })
        .collect()
}

/// Independent linking computation straight from the template semantics.
///
/// A strand leaving the branch line at position x (the binary fraction
/// whose digits are its forward itinerary under the doubling map) crosses
/// under a strand at position y exactly when the two wind around opposite
/// lobes and re-enter with the order swapped. Counting pairs (i, j) with
/// an L in word A, an R in word B, and the B-itinerary after j strictly
/// below the A-itinerary after i gives minus the linking number; every
/// such crossing has sign -1.
pub fn oracle_link(wa: &LorenzWord, wb: &LorenzWord) -> Result<i64> {
    require_inequivalent(wa, wb)?;
    let m = wa.len() as i64;
    let n = wb.len() as i64;
    let bound = scan_bound(wa, wb);
    let mut crossings = 0i64;
    for i in 1..=m {
        if wa.letter_at(i) != Letter::L {
            continue;
        }
        let upper = itinerary_bits(wa, i + 1, bound);
        for j in 1..=n {
            if wb.letter_at(j) != Letter::R {
                continue;
            }
            let lower = itinerary_bits(wb, j + 1, bound);
            if lower < upper {
                crossings += 1;
            }
        }
    }
    Ok(-crossings)
}

/// Transverse self-intersection count on the river side: the triple count
/// of a word against itself, with never-diverging position pairs skipped.
pub fn self_intersections(w: &LorenzWord) -> usize {
    rs_triples(w, w).len()
}

/// link(A, B) + link(A, B^-1) + link(A^-1, B) + link(A^-1, B^-1).
///
/// Defined when the words are inequivalent and inequivalent-to-inverse;
/// its negation is the unsigned geodesic intersection number.
pub fn symmetrized_link(wa: &LorenzWord, wb: &LorenzWord) -> Result<i64> {
    let inv_a = wa.inverse_word();
    let inv_b = wb.inverse_word();
    require_inequivalent(wa, wb)?;
    require_inequivalent(wa, &inv_b)?;
    Ok(linking_number(wa, wb)?
        + linking_number(wa, &inv_b)?
        + linking_number(&inv_a, wb)?
        + linking_number(&inv_a, &inv_b)?)
}

/// When at least one word is reciprocal, the plain linking number is a
/// quarter of the symmetrized one. Returns whether that identity holds.
pub fn reciprocal_identity_holds(wa: &LorenzWord, wb: &LorenzWord) -> Result<bool> {
    if !wa.is_reciprocal() && !wb.is_reciprocal() {
        return Err(Error::NoReciprocalWord(wa.to_string(), wb.to_string()));
    }
    Ok(4 * linking_number(wa, wb)? == symmetrized_link(wa, wb)?)
}
