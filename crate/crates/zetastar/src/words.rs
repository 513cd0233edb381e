//! Words over the two-letter alphabet `{x, y}` and MZV/MZSV indices.
//!
//! A word is the syntactic atom of the algebra `H = Q<x, y>`. The two
//! subalgebras that matter are
//!
//! * `H1`: spanned by `1` and the words ending in `y` — these are in
//!   bijection with indices (compositions) via `z_l = x^{l-1} y`;
//! * `H0`: spanned by `1` and the words starting with `x` and ending in
//!   `y` — these correspond to admissible (convergent) indices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over `{x, y}`; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word `1`.
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// The generator `z_l = x^{l-1} y`.
    pub fn z(l: u32) -> Result<Self> {
        if l < 1 {
            return Err(Error::InvalidComposition);
        }
        let mut letters = vec![Letter::X; (l - 1) as usize];
        letters.push(Letter::Y);
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Weight = number of letters.
    pub fn weight(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w` is in `H1` iff `w = 1` or `w` ends with `y`.
    pub fn in_h1(&self) -> bool {
        self.letters.last().is_none_or(|&l| l == Letter::Y)
    }

    /// `w` is in `H0` iff `w = 1` or `w` starts with `x` and ends with `y`.
    pub fn in_h0(&self) -> bool {
        self.letters.first().is_none_or(|&l| l == Letter::X) && self.in_h1()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// Number of leading `y` letters.
    pub fn leading_y_run(&self) -> usize {
        self.letters.iter().take_while(|&&l| l == Letter::Y).count()
    }

    /// Reverse the word and swap `x <-> y`.
    pub fn dual_reverse(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| match l {
                Letter::X => Letter::Y,
                Letter::Y => Letter::X,
            })
            .collect();
        Word { letters }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word { letters: self.letters[..n].to_vec() }
    }

    pub fn suffix(&self, n: usize) -> Word {
        Word { letters: self.letters[n..].to_vec() }
    }
}

/// Canonical order: by weight, then lexicographic with `x < y`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::one());
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'x' => letters.push(Letter::X),
                'y' => letters.push(Letter::Y),
                _ => {
                    return Err(Error::Parse(format!(
                        "invalid letter `{ch}` in word `{s}` (expected x or y)"
                    )))
                }
            }
        }
        Ok(Word { letters })
    }
}

/// An MZV/MZSV index `(k_1, ..., k_n)`: a finite sequence of parts `>= 1`.
/// The empty composition is allowed and corresponds to the word `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p < 1) {
            return Err(Error::InvalidComposition);
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Admissible iff empty or the first part is `>= 2`.
    pub fn is_admissible(&self) -> bool {
        self.parts.first().is_none_or(|&k| k >= 2)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid composition part `{tok}`")))?;
            parts.push(p);
        }
        Composition::new(parts)
    }
}

/// `(k_1, ..., k_n) -> z_{k_1} ... z_{k_n}`; the empty composition maps to `1`.
/// The result is always in `H1`.
pub fn word_from_composition(k: &Composition) -> Word {
    let mut letters = Vec::with_capacity(k.weight() as usize);
    for &part in k.parts() {
        for _ in 0..part - 1 {
            letters.push(Letter::X);
        }
        letters.push(Letter::Y);
    }
    Word { letters }
}

/// Inverse of [`word_from_composition`]; fails for words outside `H1`.
pub fn composition_from_word(w: &Word) -> Result<Composition> {
    if !w.in_h1() {
        return Err(Error::NotInH1(w.clone()));
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for &l in w.letters() {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Ok(Composition { parts })
}

/// All words of the given exact weight, in canonical order.
pub fn words_of_weight(weight: u32) -> Vec<Word> {
    let n = weight as usize;
    (0..1usize << n)
        .map(|bits| {
            let letters = (0..n)
                .map(|i| if bits >> (n - 1 - i) & 1 == 1 { Letter::Y } else { Letter::X })
                .collect();
            Word { letters }
        })
        .collect()
}

/// All `H1` words of the given exact weight (weight 0 gives `[1]`).
pub fn h1_words_of_weight(weight: u32) -> Vec<Word> {
    if weight == 0 {
        return vec![Word::one()];
    }
    words_of_weight(weight - 1)
        .into_iter()
        .map(|mut w| {
            w.push(Letter::Y);
            w
        })
        .collect()
}

/// All `H0` words of the given exact weight (weight 0 gives `[1]`, weight 1
/// gives nothing).
pub fn h0_words_of_weight(weight: u32) -> Vec<Word> {
    match weight {
        0 => vec![Word::one()],
        1 => Vec::new(),
        _ => words_of_weight(weight - 2)
            .into_iter()
            .map(|mid| {
                let mut letters = Vec::with_capacity(weight as usize);
                letters.push(Letter::X);
                letters.extend_from_slice(mid.letters());
                letters.push(Letter::Y);
                Word { letters }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn word_from_composition_examples() {
        assert_eq!(word_from_composition(&Composition::empty()), Word::one());
        assert_eq!(word_from_composition(&comp(&[2])), "xy".parse().unwrap());
        assert_eq!(word_from_composition(&comp(&[3, 1])), "xxyy".parse().unwrap());
    }

    #[test]
    fn composition_from_word_examples() {
        assert_eq!(composition_from_word(&"xy".parse().unwrap()).unwrap(), comp(&[2]));
        assert_eq!(composition_from_word(&"xxyy".parse().unwrap()).unwrap(), comp(&[3, 1]));
        assert_eq!(composition_from_word(&Word::one()).unwrap(), Composition::empty());
    }

    #[test]
    fn composition_from_word_rejects_trailing_x() {
        let w: Word = "xyx".parse().unwrap();
        assert!(matches!(composition_from_word(&w), Err(Error::NotInH1(_))));
    }

    #[test]
    fn composition_rejects_zero_part() {
        assert!(matches!(Composition::new(vec![2, 0]), Err(Error::InvalidComposition)));
        assert!(matches!("2,0".parse::<Composition>(), Err(Error::InvalidComposition)));
    }

    #[test]
    fn round_trip_up_to_weight_twelve() {
        // Every composition of weight <= 12 survives the round trip.
        fn all_compositions(weight: u32) -> Vec<Vec<u32>> {
            if weight == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first in 1..=weight {
                for mut rest in all_compositions(weight - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for w in 0..=12 {
            for parts in all_compositions(w) {
                let k = comp(&parts);
                let round = composition_from_word(&word_from_composition(&k)).unwrap();
                assert_eq!(round, k);
            }
        }
    }

    #[test]
    fn membership_tests() {
        let one = Word::one();
        assert!(one.in_h1() && one.in_h0());
        let xy: Word = "xy".parse().unwrap();
        assert!(xy.in_h1() && xy.in_h0());
        let yxy: Word = "yxy".parse().unwrap();
        assert!(yxy.in_h1() && !yxy.in_h0());
        let xyx: Word = "xyx".parse().unwrap();
        assert!(!xyx.in_h1() && !xyx.in_h0());
    }

    #[test]
    fn canonical_order_is_weight_then_lex() {
        let mut words: Vec<Word> =
            ["yy", "xy", "1", "y", "xxy", "yx"].iter().map(|s| s.parse().unwrap()).collect();
        words.sort();
        let printed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, vec!["1", "y", "xy", "yx", "yy", "xxy"]);
    }

    #[test]
    fn word_census() {
        assert_eq!(words_of_weight(4).len(), 16);
        assert_eq!(h1_words_of_weight(4).len(), 8);
        assert_eq!(h0_words_of_weight(4).len(), 4);
        assert!(h1_words_of_weight(5).iter().all(|w| w.in_h1()));
        assert!(h0_words_of_weight(5).iter().all(|w| w.in_h0()));
    }

    #[test]
    fn dual_reverse_swaps_and_reverses() {
        let w: Word = "xxy".parse().unwrap();
        assert_eq!(w.dual_reverse(), "xyy".parse().unwrap());
        assert_eq!(w.dual_reverse().dual_reverse(), w);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Word::one().to_string(), "1");
        assert_eq!("1".parse::<Word>().unwrap(), Word::one());
        assert_eq!(comp(&[3, 1]).to_string(), "3,1");
        assert_eq!("3,1".parse::<Composition>().unwrap(), comp(&[3, 1]));
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert!("xz".parse::<Word>().is_err());
    }
}
