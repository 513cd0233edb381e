//! Noncommutative polynomials: finite Q-linear combinations of words with
//! exact arbitrary-precision rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Weight of a nonzero polynomial: either every term has the same weight or
/// the terms mix weights.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightClass {
    Homogeneous(u32),
    Inhomogeneous,
}

/// An element of `Q<x, y>`. Stored coefficients are never zero, and terms
/// iterate in canonical order (weight, then lexicographic with `x < y`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, BigRational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    /// The unit polynomial `1` (the empty word with coefficient one).
    pub fn one() -> Self {
        NcPoly::from_word(Word::one())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigRational::one());
        NcPoly { terms }
    }

    pub fn from_term(w: Word, coeff: BigRational) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, coeff);
        p
    }

    pub fn from_integer_term(w: Word, coeff: i64) -> Self {
        NcPoly::from_term(w, BigRational::from_integer(BigInt::from(coeff)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&BigRational> {
        self.terms.get(w)
    }

    /// Add `coeff * w`, collecting and pruning zero coefficients.
    pub fn add_term(&mut self, w: Word, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NcPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &NcPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, s: &BigRational) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect();
        NcPoly { terms }
    }

    pub fn scaled_int(&self, s: i64) -> NcPoly {
        self.scaled(&BigRational::from_integer(BigInt::from(s)))
    }

    /// Concatenate `prefix` on the left of every term.
    pub fn concat_word_left(&self, prefix: &Word) -> NcPoly {
        if prefix.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(w, c)| (prefix.concat(w), c.clone())).collect();
        NcPoly { terms }
    }

    /// Append one letter on the right of every term.
    pub fn push_letter(&self, l: Letter) -> NcPoly {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut w = w.clone();
                w.push(l);
                (w, c.clone())
            })
            .collect();
        NcPoly { terms }
    }

    /// Word-concatenation product, extended bilinearly.
    pub fn concat(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.add_term(u.concat(v), cu * cv);
            }
        }
        out
    }

    /// Common weight of all terms, or `Inhomogeneous`; the zero polynomial
    /// has no weight.
    pub fn weight(&self) -> Result<WeightClass> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::UndefinedWeight)?.weight();
        for w in it {
            if w.weight() != first {
                return Ok(WeightClass::Inhomogeneous);
            }
        }
        Ok(WeightClass::Homogeneous(first))
    }

    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(|w| w.in_h1())
    }

    pub fn in_h0(&self) -> bool {
        self.terms.keys().all(|w| w.in_h0())
    }

    /// First term outside `H1`, if any.
    pub fn first_outside_h1(&self) -> Option<&Word> {
        self.terms.keys().find(|w| !w.in_h1())
    }

    pub fn first_outside_h0(&self) -> Option<&Word> {
        self.terms.keys().find(|w| !w.in_h0())
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scaled_int(-1)
    }
}

impl Mul<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    /// Word-concatenation product.
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.concat(rhs)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", c.abs(), w)?;
            first = false;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt =
        num.parse().map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for NcPoly {
    type Err = Error;

    /// Parses the canonical syntax, e.g. `1 xyy + 1/2 xxy - 2 xy`, plus a
    /// few conveniences: a bare word (`xxy`), a bare rational (`-3/2`), and
    /// coefficients without the explicit space (`2xy`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(NcPoly::zero());
        }
        let mut out = NcPoly::zero();
        // Split into signed chunks at top-level +/-.
        let mut rest = s;
        let mut sign = 1i64;
        loop {
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
                continue;
            }
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
                continue;
            }
            if rest.is_empty() {
                return Err(Error::Parse("dangling sign in polynomial".into()));
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse("empty term in polynomial".into()));
            }
            // Leading numeric part (digits and at most one '/'), then a word.
            let split = term
                .find(|ch: char| !(ch.is_ascii_digit() || ch == '/'))
                .unwrap_or(term.len());
            let (numpart, wordpart) = term.split_at(split);
            let wordpart = wordpart.trim();
            let (coeff, word) = if numpart.is_empty() {
                (BigRational::one(), wordpart.parse::<Word>()?)
            } else if wordpart.is_empty() {
                // A bare number is a multiple of the empty word, so "1" on
                // its own is the unit polynomial.
                (parse_rational(numpart)?, Word::one())
            } else {
                (parse_rational(numpart)?, wordpart.parse::<Word>()?)
            };
            out.add_term(word, coeff * BigRational::from_integer(BigInt::from(sign)));
            sign = 1;
            if tail.is_empty() {
                break;
            }
            rest = tail;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{word_from_composition, Composition};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut p = NcPoly::from_integer_term(w("xy"), 2);
        p.add_term(w("xy"), BigRational::from_integer(BigInt::from(-2)));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn weight_classification() {
        assert_eq!(
            NcPoly::from_word(w("xy")).weight().unwrap(),
            WeightClass::Homogeneous(2)
        );
        let z3z1 = word_from_composition(&Composition::new(vec![3, 1]).unwrap());
        assert_eq!(NcPoly::from_word(z3z1).weight().unwrap(), WeightClass::Homogeneous(4));
        let mixed = &NcPoly::from_word(w("xy")) + &NcPoly::from_word(w("xxy"));
        assert_eq!(mixed.weight().unwrap(), WeightClass::Inhomogeneous);
        assert!(matches!(NcPoly::zero().weight(), Err(Error::UndefinedWeight)));
    }

    #[test]
    fn display_matches_canonical_form() {
        let mut p = NcPoly::from_term(w("xxy"), BigRational::new(BigInt::from(1), BigInt::from(2)));
        p.add_term(w("xyy"), BigRational::one());
        assert_eq!(p.to_string(), "1/2 xxy + 1 xyy");
        let q = &NcPoly::zero() - &p;
        assert_eq!(q.to_string(), "-1/2 xxy - 1 xyy");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1/2 xxy + 1 xyy", "-1 xy", "2 1 + 1 y", "0"] {
            let p: NcPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        // Convenience forms.
        assert_eq!("xy".parse::<NcPoly>().unwrap(), NcPoly::from_word(w("xy")));
        assert_eq!("3/2".parse::<NcPoly>().unwrap().to_string(), "3/2 1");
        assert_eq!("2xy".parse::<NcPoly>().unwrap().to_string(), "2 xy");
        assert_eq!(
            "xy - xy + y".parse::<NcPoly>().unwrap(),
            NcPoly::from_word(w("y"))
        );
    }

    #[test]
    fn concat_is_bilinear() {
        let p = &NcPoly::from_word(w("x")) + &NcPoly::from_word(w("y"));
        let q = NcPoly::from_integer_term(w("y"), 3);
        let r = p.concat(&q);
        assert_eq!(r.to_string(), "3 xy + 3 yy");
    }
}
