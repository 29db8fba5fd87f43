//! Kennedy's alphabetization formula for the linking number, and the
//! harness that compares it against the triple-count and template
//! computations.
//!
//! The formula lists all shifts of both words, alphabetizes the first
//! list, the second list, and the joint list, and combines the three
//! crossing counts as (C1 + C2 - C3) / 4. The value is kept as an exact
//! rational: on some inputs the quarter-sum is not an integer and then
//! disagrees with the linking number, which the harness records rather
//! than hides.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::linking::{self, KennedyValues, LinkReport};
use crate::words::LorenzWord;

/// A permutation of {1, ..., n}, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection on {1, .., n}.
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!(
                    "{:?} is not a permutation of 1..={}",
                    images, n
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (pos, &v) in self.images.iter().enumerate() {
            images[v - 1] = pos + 1;
        }
        Permutation { images }
    }

    /// The crossing count: the sum of displacements |sigma(i) - i|.
    /// Always even, so quarter-sums have denominator 1, 2, or 4.
    pub fn crossing_count(&self) -> i64 {
        self.images
            .iter()
            .enumerate()
            .map(|(pos, &v)| (v as i64 - (pos as i64 + 1)).abs())
            .sum()
    }
}

/// The n shifts of a word in shift order, starting from the word itself.
pub fn shift_list(w: &LorenzWord) -> Vec<LorenzWord> {
    let mut out = Vec::with_capacity(w.len());
    let mut cur = w.clone();
    for _ in 0..w.len() {
        out.push(cur.clone());
        cur = cur.single_shift();
    }
    out
}

/// The permutation sending each list position to the alphabetical rank of
/// its word (L < R, and a prefix precedes its extensions).
pub fn alphabetize(words: &[LorenzWord]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by(|&x, &y| words[x].cmp(&words[y]));
    for pair in order.windows(2) {
        if words[pair[0]] == words[pair[1]] {
            return Err(Error::DuplicateWord(words[pair[0]].to_string()));
        }
    }
    let mut images = vec![0; words.len()];
    for (rank, &pos) in order.iter().enumerate() {
        images[pos] = rank + 1;
    }
    Ok(Permutation { images })
}

/// The three crossing counts and the exact quarter-sum for a word pair.
pub fn kennedy_values(wa: &LorenzWord, wb: &LorenzWord) -> Result<KennedyValues> {
    if wa.cyclically_equivalent(wb) {
        return Err(Error::EquivalentWords(wa.to_string(), wb.to_string()));
    }
    let list_a = shift_list(wa);
    let list_b = shift_list(wb);
    let mut joint = list_a.clone();
    joint.extend(list_b.iter().cloned());

    let c1 = alphabetize(&list_a)?.crossing_count();
    let c2 = alphabetize(&list_b)?.crossing_count();
    let c3 = alphabetize(&joint)?.crossing_count();
    let value = Ratio::new(c1 + c2 - c3, 4);
    Ok(KennedyValues {
        c1,
        c2,
        c3,
        value_num: *value.numer(),
        value_den: *value.denom(),
    })
}

/// Kennedy's linking value (C1 + C2 - C3) / 4 as an exact rational.
pub fn kennedy_link(wa: &LorenzWord, wb: &LorenzWord) -> Result<Ratio<i64>> {
    Ok(kennedy_values(wa, wb)?.value())
}

/// Runs every method on one pair and records agreement instead of
/// asserting it: the triple count and the template computation are
/// required to agree elsewhere, while Kennedy disagreements are data.
///
/// The symmetrized sum is filled in when defined (words inequivalent to
/// each other's inverses).
pub fn compare_methods(wa: &LorenzWord, wb: &LorenzWord) -> Result<LinkReport> {
    let triples = linking::rs_triples(wa, wb);
    let rs_link = linking::linking_number(wa, wb)?;
    let oracle_link = linking::oracle_link(wa, wb)?;
    let kennedy = kennedy_values(wa, wb)?;
    let symmetrized = if wa.cyclically_equivalent(&wb.inverse_word()) {
        None
    } else {
        Some(linking::symmetrized_link(wa, wb)?)
    };
    let kennedy_agrees = Some(kennedy.equals_integer(rs_link));
    Ok(LinkReport {
        word_a: wa.clone(),
        word_b: wb.clone(),
        triples,
        rs_link,
        oracle_link,
        kennedy: Some(kennedy),
        symmetrized,
        rs_oracle_agree: rs_link == oracle_link,
        kennedy_agrees,
    })
}
