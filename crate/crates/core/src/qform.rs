//! Indefinite binary quadratic forms: discriminants, exact periodic
//! continued fractions of quadratic surds, river words, reduction to
//! river forms, and automorphs.
//!
//! All surd arithmetic is integer-only: a quadratic irrational is carried
//! as (P + sqrt(D)) / Q with the invariant Q | D - P^2, and floors are
//! taken with an integer square root. No floating point anywhere.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::psl2::Psl2Matrix;
use crate::words::{Letter, LorenzWord};

/// An integral binary quadratic form a x^2 + b xy + c y^2, written [a, b, c].
///
/// Construction does not restrict the coefficients; the river operations
/// check their own preconditions (primitive, indefinite, nonsquare
/// discriminant) and report violations as errors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

/// The exact continued fraction of a quadratic surd: a finite preperiod
/// followed by a repeating block of even length.
///
/// `period_start_parity` is the parity of the 0-based index of the first
/// periodic term, which fixes the 0/1 symbol assignment when the word is
/// read off the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
    period_start_parity: u8,
}

impl CfExpansion {
    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    /// The repeating block; its length is always even (the minimal period
    /// is doubled when odd).
    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn period_start_parity(&self) -> u8 {
        self.period_start_parity
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.preperiod.is_empty() {
            write!(f, "[({})]", join(&self.period))
        } else {
            write!(f, "[{}; ({})]", join(&self.preperiod), join(&self.period))
        }
    }
}

impl QuadForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> QuadForm {
        QuadForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    /// b^2 - 4ac.
    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// gcd(a, b, c) = 1.
    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    /// a > 0 > c: the form of an edge on the river, positive side first.
    pub fn is_river_form(&self) -> bool {
        self.a.is_positive() && self.c.is_negative()
    }

    /// Checks that the discriminant is positive and not a perfect square,
    /// the regime in which the topograph has a river.
    fn require_river_discriminant(&self) -> Result<BigInt> {
        let d = self.discriminant();
        if !d.is_positive() {
            return Err(Error::NotIndefinite(self.to_string()));
        }
        let root = d.sqrt();
        if &root * &root == d {
            return Err(Error::SquareDiscriminant(self.to_string()));
        }
        Ok(d)
    }

    fn require_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::ImprimitiveForm(self.to_string()))
        }
    }

    /// The exact continued fraction of (-b + sqrt(D)) / (2a), the first
    /// root of the form.
    ///
    /// The preperiod is shortest possible; the period is the minimal one,
    /// doubled if its minimal length is odd.
    pub fn cf_expansion(&self) -> Result<CfExpansion> {
        let d = self.require_river_discriminant()?;
        if self.a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient(self.to_string()));
        }
        let sqrt_d = d.sqrt();

        // surd state: x_k = (P + sqrt(D)) / Q with Q | D - P^2
        let mut p = -self.b.clone();
        let mut q = BigInt::from(2) * &self.a;
        let mut quotients: Vec<BigInt> = Vec::new();
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();

        let (start, cycle_len) = loop {
            let state = (p.clone(), q.clone());
            if let Some(&first) = seen.get(&state) {
                break (first, quotients.len() - first);
            }
            seen.insert(state, quotients.len());

            // floor((P + sqrt(D)) / Q); sqrt(D) is irrational here
            let quot = if q.is_positive() {
                (&p + &sqrt_d).div_floor(&q)
            } else {
                (&p + &sqrt_d + BigInt::one()).div_floor(&q)
            };
            let next_p = &quot * &q - &p;
            let next_q = (&d - &next_p * &next_p) / &q;
            quotients.push(quot);
            p = next_p;
            q = next_q;
        };

        let preperiod = quotients[..start].to_vec();
        let mut period = quotients[start..start + cycle_len].to_vec();
        if period.len() % 2 == 1 {
            let copy = period.clone();
            period.extend(copy);
        }
        Ok(CfExpansion {
            preperiod,
            period,
            period_start_parity: (start % 2) as u8,
        })
    }

    /// A river word of the form, read off the continued fraction of the
    /// first root: the t-th period entry contributes a run of length
    /// a_{s+t} of the symbol (s + t) mod 2, then 0 becomes L and 1
    /// becomes R.
    ///
    /// The returned rotation is the raw read-off; canonicalize as needed.
    pub fn river_word(&self) -> Result<LorenzWord> {
        self.require_primitive()?;
        let cf = self.cf_expansion()?;
        let mut letters = Vec::new();
        for (offset, quot) in cf.period().iter().enumerate() {
            let symbol = (cf.period_start_parity() as usize + offset) % 2;
            let letter = if symbol == 0 { Letter::L } else { Letter::R };
            let run = quot.to_usize().ok_or_else(|| {
                Error::Internal(format!("river word of {} is too long to store", self))
            })?;
            letters.extend(std::iter::repeat_n(letter, run));
        }
        LorenzWord::from_letters(letters)
            .map_err(|e| Error::Internal(format!("river word of {} invalid: {}", self, e)))
    }

    /// The substitution action: q'(x, y) = q(ax + by, cx + dy) for the
    /// matrix [[a, b], [c, d]]. A right action preserving discriminant
    /// and primitivity.
    pub fn apply(&self, m: &Psl2Matrix) -> QuadForm {
        let (ma, mb, mc, md) = m.entries();
        let a2 = &self.a * ma * ma + &self.b * ma * mc + &self.c * mc * mc;
        let b2 = BigInt::from(2) * &self.a * ma * mb
            + &self.b * (ma * md + mb * mc)
            + BigInt::from(2) * &self.c * mc * md;
        let c2 = &self.a * mb * mb + &self.b * mb * md + &self.c * md * md;
        QuadForm {
            a: a2,
            b: b2,
            c: c2,
        }
    }

    /// Gauss-style reduction to a positive river form.
    ///
    /// Returns (q', M) with q' = q.apply(M) and a' > 0 > c'.
    pub fn reduce_to_river(&self) -> Result<(QuadForm, Psl2Matrix)> {
        self.require_primitive()?;
        let d = self.require_river_discriminant()?;
        let sqrt_d = d.sqrt();

        let mut cur = self.clone();
        let mut transform = Psl2Matrix::identity();
        // a and c get opposite signs within the classical reduction bound
        let mut guard = 64 + 2 * (self.a.bits() + self.b.bits() + self.c.bits());
        while (&cur.a * &cur.c).is_positive() {
            if guard == 0 {
                return Err(Error::Internal(format!(
                    "reduction of {} did not converge",
                    self
                )));
            }
            guard -= 1;
            // rho step: (a, b, c) -> (c, b', (b'^2 - D)/(4c)) where b' is
            // the largest value <= sqrt(D) with b' = -b (mod 2|c|)
            let two_abs_c = BigInt::from(2) * cur.c.abs();
            let t = (&sqrt_d + &cur.b).div_floor(&two_abs_c);
            let new_b = -&cur.b + &two_abs_c * &t;
            let m = if cur.c.is_positive() { t } else { -t };
            let step = Psl2Matrix::new(BigInt::zero(), BigInt::from(-1), BigInt::one(), m)
                .expect("rho step is unimodular");
            let new_c = (&new_b * &new_b - &d) / (BigInt::from(4) * &cur.c);
            cur = QuadForm {
                a: cur.c.clone(),
                b: new_b,
                c: new_c,
            };
            transform = &transform * &step;
        }
        if cur.a.is_negative() {
            // on the river but directed the wrong way: reverse the edge
            let flip = Psl2Matrix::new(0, -1, 1, 0).expect("edge reversal is unimodular");
            cur = cur.apply(&flip);
            transform = &transform * &flip;
        }
        Ok((cur, transform))
    }

    /// One river step from a positive river form: exactly one of the two
    /// edge continuations keeps a > 0 > c, and its letter is the turn
    /// taken.
    fn river_step(&self) -> Result<(Letter, QuadForm)> {
        let corner = &self.a + &self.b + &self.c;
        if corner.is_positive() {
            // keep the negative region c, turn right
            let b2 = &self.b + BigInt::from(2) * &self.c;
            Ok((
                Letter::R,
                QuadForm {
                    a: corner,
                    b: b2,
                    c: self.c.clone(),
                },
            ))
        } else if corner.is_negative() {
            // keep the positive region a, turn left
            let b2 = &self.b + BigInt::from(2) * &self.a;
            Ok((
                Letter::L,
                QuadForm {
                    a: self.a.clone(),
                    b: b2,
                    c: corner,
                },
            ))
        } else {
            Err(Error::Internal(format!(
                "form {} represents zero on the river",
                self
            )))
        }
    }

    /// The automorph: mat(W) for the river word W traversed starting at
    /// this form. Fixes the form under [`QuadForm::apply`].
    ///
    /// Requires a primitive positive river form with nonsquare
    /// discriminant.
    pub fn automorph(&self) -> Result<Psl2Matrix> {
        self.require_primitive()?;
        self.require_river_discriminant()?;
        if !self.is_river_form() {
            return Err(Error::NotRiverForm(self.to_string()));
        }
        Ok(Psl2Matrix::from_word(&self.walk_river_word()?))
    }

    /// The river word read by walking the topograph from this river form
    /// until the starting form recurs. Used as an independent cross-check
    /// of the continued-fraction route.
    pub(crate) fn walk_river_word(&self) -> Result<LorenzWord> {
        const STEP_CAP: usize = 10_000_000;
        let mut letters = Vec::new();
        let mut cur = self.clone();
        loop {
            let (letter, next) = cur.river_step()?;
            letters.push(letter);
            cur = next;
            if cur == *self {
                break;
            }
            if letters.len() >= STEP_CAP {
                return Err(Error::Internal(format!(
                    "river walk from {} did not close",
                    self
                )));
            }
        }
        LorenzWord::from_letters(letters)
            .map_err(|e| Error::Internal(format!("river walk word of {} invalid: {}", self, e)))
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl FromStr for QuadForm {
    type Err = Error;

    /// Parses "a,b,c" with optional whitespace.
    fn from_str(s: &str) -> Result<QuadForm> {
        let cells: Vec<&str> = s.split(',').collect();
        if cells.len() != 3 {
            return Err(Error::Parse(format!("form {:?}: expected \"a,b,c\"", s)));
        }
        let mut values = Vec::with_capacity(3);
        for cell in cells {
            let v = BigInt::from_str(cell.trim()).map_err(|_| {
                Error::Parse(format!("form {:?}: bad integer {:?}", s, cell.trim()))
            })?;
            values.push(v);
        }
        let mut it = values.into_iter();
        Ok(QuadForm::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}
