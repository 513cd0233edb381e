//! The automorphism `gamma` and the star-transfer map `d`.
//!
//! `gamma` is the algebra automorphism with `gamma(x) = x` and
//! `gamma(y) = x + y`. The Q-linear map `d : H1 -> H1` sends `w y` to
//! `gamma(w) y` and fixes `1`; it converts zeta-star evaluation into plain
//! zeta evaluation. A second, independent implementation of `d` unfolds the
//! prefix-sum recursion on compositions; the two must agree everywhere.

use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::words::{composition_from_word, Composition, Letter, Word};

/// The automorphism extension of `x -> x`, `y -> x + y`.
pub fn gamma(p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        out.add_assign(&gamma_word(w).scaled(c));
    }
    out
}

fn gamma_word(w: &Word) -> NcPoly {
    let mut acc = NcPoly::one();
    for &l in w.letters() {
        acc = match l {
            Letter::X => acc.push_letter(Letter::X),
            Letter::Y => &acc.push_letter(Letter::X) + &acc.push_letter(Letter::Y),
        };
    }
    acc
}

/// `d(wy) = gamma(w) y`, `d(1) = 1`, extended Q-linearly over `H1`.
pub fn dmap(p: &NcPoly) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        out.add_assign(&dmap_word(w)?.scaled(c));
    }
    Ok(out)
}

fn dmap_word(w: &Word) -> Result<NcPoly> {
    if w.is_one() {
        return Ok(NcPoly::one());
    }
    if !w.in_h1() {
        return Err(Error::NotInH1(w.clone()));
    }
    let stem = w.prefix(w.letters().len() - 1);
    Ok(gamma_word(&stem).push_letter(Letter::Y))
}

/// Independent route to `d`, by the recursion
/// `d(z_{k_1} ... z_{k_n}) = sum_i z_{k_1 + ... + k_i} d(z_{k_{i+1}} ... z_{k_n})`.
pub fn dmap_via_key_identity(p: &NcPoly) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let k = composition_from_word(w)?;
        out.add_assign(&dmap_composition(&k).scaled(c));
    }
    Ok(out)
}

fn dmap_composition(k: &Composition) -> NcPoly {
    let parts = k.parts();
    // memo[i] = d applied to the suffix starting at block i.
    let n = parts.len();
    let mut memo: Vec<NcPoly> = vec![NcPoly::zero(); n + 1];
    memo[n] = NcPoly::one();
    for start in (0..n).rev() {
        let mut acc = NcPoly::zero();
        let mut prefix_sum = 0u32;
        for i in start..n {
            prefix_sum += parts[i];
            let block = Word::z(prefix_sum).expect("parts are >= 1");
            acc.add_assign(&memo[i + 1].concat_word_left(&block));
        }
        memo[start] = acc;
    }
    memo.swap_remove(0)
}

/// `d` of a single composition, returned as a polynomial whose terms are
/// again index words. Convenience for the star evaluator.
pub fn dmap_index(k: &Composition) -> NcPoly {
    dmap_composition(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{h1_words_of_weight, word_from_composition, words_of_weight};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    fn zc(parts: &[u32]) -> Word {
        word_from_composition(&Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn gamma_on_generators() {
        assert_eq!(gamma(&NcPoly::from_word(w("y"))), poly("1 x + 1 y"));
        assert_eq!(gamma(&NcPoly::from_word(w("xy"))), poly("1 xx + 1 xy"));
        assert_eq!(gamma(&NcPoly::one()), NcPoly::one());
    }

    #[test]
    fn gamma_is_multiplicative_on_concatenation() {
        for u in words_of_weight(3) {
            for v in words_of_weight(3) {
                let lhs = gamma(&NcPoly::from_word(u.concat(&v)));
                let rhs = gamma(&NcPoly::from_word(u.clone()))
                    .concat(&gamma(&NcPoly::from_word(v.clone())));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dmap_fixes_single_blocks() {
        for k in 1..=6 {
            let zk = NcPoly::from_word(zc(&[k]));
            assert_eq!(dmap(&zk).unwrap(), zk);
        }
        assert_eq!(dmap(&NcPoly::one()).unwrap(), NcPoly::one());
    }

    #[test]
    fn dmap_on_double_blocks_adds_the_merged_block() {
        // d(z_{k1} z_{k2}) = z_{k1} z_{k2} + z_{k1+k2}, expanded by hand
        // from gamma(x^{k1-1} y x^{k2-1}) y.
        for (k1, k2) in [(2u32, 2u32), (3, 1), (2, 3), (4, 2)] {
            let input = NcPoly::from_word(zc(&[k1, k2]));
            let expected = &NcPoly::from_word(zc(&[k1, k2])) + &NcPoly::from_word(zc(&[k1 + k2]));
            assert_eq!(dmap(&input).unwrap(), expected);
            assert_eq!(dmap_via_key_identity(&input).unwrap(), expected);
        }
    }

    #[test]
    fn dmap_rejects_words_outside_h1() {
        let p = NcPoly::from_word(w("xyx"));
        assert!(matches!(dmap(&p), Err(Error::NotInH1(_))));
        assert!(matches!(dmap_via_key_identity(&p), Err(Error::NotInH1(_))));
    }

    #[test]
    fn both_d_implementations_agree_exhaustively() {
        for weight in 0..=8 {
            for word in h1_words_of_weight(weight) {
                let p = NcPoly::from_word(word);
                assert_eq!(dmap(&p).unwrap(), dmap_via_key_identity(&p).unwrap());
            }
        }
    }

    #[test]
    fn dmap_preserves_weight() {
        for weight in 1..=7 {
            for word in h1_words_of_weight(weight) {
                let image = dmap(&NcPoly::from_word(word)).unwrap();
                assert_eq!(
                    image.weight().unwrap(),
                    crate::poly::WeightClass::Homogeneous(weight)
                );
                assert!(image.in_h1());
            }
        }
    }
}
