//! The three bilinear products on words — harmonic `*`, the tilde product,
//! and the shuffle product — together with shuffle regularization.
//!
//! Harmonic and tilde act on `H1` through the block decomposition
//! `w = z_{k_1} ... z_{k_n}`:
//!
//! ```text
//! z_{k1} w * z_{k2} w' = z_{k1}(w * z_{k2} w') + z_{k2}(z_{k1} w * w')
//!                      + z_{k1+k2}(w * w')
//! ```
//!
//! and the tilde product drops the merged `z_{k1+k2}` term. The shuffle is
//! the letter-level interleaving defined on all of `H`. All three are
//! commutative and associative; each is the bilinear extension of a
//! recursion on word pairs that only ever touches suffixes, so the word-pair
//! kernels memoize on suffix index pairs.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::words::{composition_from_word, word_from_composition, Composition, Letter, Word};

/// Harmonic (stuffle) product on `H1`, extended bilinearly.
pub fn harmonic(u: &NcPoly, v: &NcPoly) -> Result<NcPoly> {
    bilinear_blocks(u, v, true)
}

/// Tilde product on `H1`: block-level shuffle without the merged term.
pub fn tilde(u: &NcPoly, v: &NcPoly) -> Result<NcPoly> {
    bilinear_blocks(u, v, false)
}

fn bilinear_blocks(u: &NcPoly, v: &NcPoly, stuff: bool) -> Result<NcPoly> {
    if let Some(w) = u.first_outside_h1().or_else(|| v.first_outside_h1()) {
        return Err(Error::NotInH1(w.clone()));
    }
    let mut out = NcPoly::zero();
    for (uw, uc) in u.terms() {
        let cu = composition_from_word(uw)?;
        for (vw, vc) in v.terms() {
            let cv = composition_from_word(vw)?;
            let prod = block_product(&cu, &cv, stuff);
            out.add_assign(&prod.scaled(&(uc * vc)));
        }
    }
    Ok(out)
}

fn block_product(u: &Composition, v: &Composition, stuff: bool) -> NcPoly {
    let mut memo: HashMap<(usize, usize), NcPoly> = HashMap::new();
    block_product_rec(u.parts(), v.parts(), 0, 0, stuff, &mut memo)
}

fn block_product_rec(
    u: &[u32],
    v: &[u32],
    i: usize,
    j: usize,
    stuff: bool,
    memo: &mut HashMap<(usize, usize), NcPoly>,
) -> NcPoly {
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let result = if i == u.len() {
        NcPoly::from_word(word_from_composition(
            &Composition::new(v[j..].to_vec()).expect("parts are >= 1"),
        ))
    } else if j == v.len() {
        NcPoly::from_word(word_from_composition(
            &Composition::new(u[i..].to_vec()).expect("parts are >= 1"),
        ))
    } else {
        let k1 = u[i];
        let k2 = v[j];
        let left = block_product_rec(u, v, i + 1, j, stuff, memo)
            .concat_word_left(&Word::z(k1).expect("k1 >= 1"));
        let right = block_product_rec(u, v, i, j + 1, stuff, memo)
            .concat_word_left(&Word::z(k2).expect("k2 >= 1"));
        let mut acc = &left + &right;
        if stuff {
            let merged = block_product_rec(u, v, i + 1, j + 1, stuff, memo)
                .concat_word_left(&Word::z(k1 + k2).expect("sum >= 2"));
            acc.add_assign(&merged);
        }
        acc
    };
    memo.insert((i, j), result.clone());
    result
}

/// Shuffle product on all of `H`, extended bilinearly.
pub fn shuffle(u: &NcPoly, v: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (uw, uc) in u.terms() {
        for (vw, vc) in v.terms() {
            out.add_assign(&shuffle_words(uw, vw).scaled(&(uc * vc)));
        }
    }
    out
}

fn shuffle_words(u: &Word, v: &Word) -> NcPoly {
    let mut memo: HashMap<(usize, usize), NcPoly> = HashMap::new();
    shuffle_rec(u.letters(), v.letters(), 0, 0, &mut memo)
}

fn shuffle_rec(
    u: &[Letter],
    v: &[Letter],
    i: usize,
    j: usize,
    memo: &mut HashMap<(usize, usize), NcPoly>,
) -> NcPoly {
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let result = if i == u.len() {
        NcPoly::from_word(Word::from_letters(v[j..].to_vec()))
    } else if j == v.len() {
        NcPoly::from_word(Word::from_letters(u[i..].to_vec()))
    } else {
        let left = shuffle_rec(u, v, i + 1, j, memo)
            .concat_word_left(&Word::from_letters(vec![u[i]]));
        let right = shuffle_rec(u, v, i, j + 1, memo)
            .concat_word_left(&Word::from_letters(vec![v[j]]));
        &left + &right
    };
    memo.insert((i, j), result.clone());
    result
}

/// Shuffle regularization: the constant term of an `H1` element under the
/// shuffle-polynomial decomposition of `H1` over `H0` in the variable `y`.
///
/// For a word `y^m u` with `u` in `H0` (or empty), the rearrangement
///
/// ```text
/// m * y^m u = y sh (y^{m-1} u) - y^{m-1} * (insertions of y into u at positions >= 1)
/// ```
///
/// kills the first term under `reg` (`reg(y) = 0` and `reg` is a shuffle
/// homomorphism), so `reg(y^m u) = -(1/m) * sum_j reg(y^{m-1} u_j)` where
/// `u_j` runs over the single-`y` insertions. The leading-`y` count strictly
/// decreases, so the recursion terminates; words already in `H0` are fixed.
pub fn reg_shuffle(p: &NcPoly) -> Result<NcPoly> {
    if let Some(w) = p.first_outside_h1() {
        return Err(Error::NotInH1(w.clone()));
    }
    let mut memo: HashMap<Word, NcPoly> = HashMap::new();
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        out.add_assign(&reg_word(w, &mut memo).scaled(c));
    }
    Ok(out)
}

fn reg_word(w: &Word, memo: &mut HashMap<Word, NcPoly>) -> NcPoly {
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let m = w.leading_y_run();
    let result = if m == 0 {
        NcPoly::from_word(w.clone())
    } else {
        let tail = w.suffix(m); // in H0 or empty
        let stem = w.suffix(1).prefix(m - 1); // y^{m-1}
        let mut acc = NcPoly::zero();
        for pos in 1..=tail.letters().len() {
            let mut letters = tail.letters().to_vec();
            letters.insert(pos, Letter::Y);
            let inserted = Word::from_letters(letters);
            acc.add_assign(&reg_word(&stem.concat(&inserted), memo));
        }
        let minus_inv_m = -BigRational::new(1.into(), (m as i64).into());
        acc.scaled(&minus_inv_m)
    };
    memo.insert(w.clone(), result.clone());
    result
}
