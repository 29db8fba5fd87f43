//! Exact linking numbers of modular and Lorenz knots.
//!
//! A knot here is named in any of three interchangeable ways: a Lorenz
//! word (its itinerary on the Lorenz template), a hyperbolic matrix in
//! PSL(2, Z) (the modular-flow picture), or an indefinite binary
//! quadratic form (whose topograph river spells the word). The crate
//! converts freely between the three and computes linking numbers of a
//! pair of knots by three routes:
//!
//! * counting matched L...R / R...L occurrences across the two Lorenz
//!   sequences ([`linking::rs_triples`]),
//! * comparing branch-line itineraries on the template
//!   ([`linking::oracle_link`]), and
//! * Kennedy's alphabetization formula ([`kennedy::kennedy_link`]).
//!
//! The first two provably agree and the crate checks that they do; the
//! third is evaluated exactly (as a rational) and compared, with
//! disagreements reported as data.
//!
//! All arithmetic is exact: unbounded integers for matrices, forms, and
//! continued fractions, and exact rationals for Kennedy values.

pub mod error;
pub mod kennedy;
pub mod linking;
pub mod psl2;
pub mod qform;
pub mod words;

pub use error::{Error, Result};
pub use kennedy::{
    alphabetize, compare_methods, kennedy_link, kennedy_values, shift_list, Permutation,
};
pub use linking::{
    linking_number, oracle_link, reciprocal_identity_holds, rs_triples, self_intersections,
    symmetrized_link, KennedyValues, LinkReport, RsTriple,
};
pub use psl2::Psl2Matrix;
pub use qform::{CfExpansion, QuadForm};
pub use words::{enumerate_canonical_words, Letter, LorenzWord};
