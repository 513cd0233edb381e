//! Fast evaluation of admissible indices through the iterated-integral
//! representation split at 1/2.
//!
//! An admissible word `w = b_1 ... b_n` (x <-> dt/t, y <-> dt/(1-t)) is the
//! iterated integral over `1 > t_1 > ... > t_n > 0`. Partitioning the
//! simplex by how many variables exceed 1/2, and mapping the upper block
//! through `t -> 1 - t` (which swaps the two forms and reverses the order),
//! gives the convolution
//!
//! ```text
//! zeta(w) = sum_{j=0}^{n} L(rev-dual of b_1..b_j) * L(b_{j+1}..b_n)
//! ```
//!
//! where `L(u)` is the iterated integral of `u` from 0 to 1/2 and
//! `L(empty) = 1`. Every word appearing on the right ends in `y`, so `L`
//! is a truncated power series with terms damped by `2^{-m}`: convergence
//! is geometric and independent of the index, which is what makes 50-digit
//! targets routine even for indices starting with 2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::fixed::BigFixed;
use crate::words::{composition_from_word, Word};

/// Number of series terms needed for `scale` decimal digits: the tail is
/// O(2^-N * polylog), so N tracks scale / log10(2) with generous slack.
pub fn series_terms(scale: u32) -> u32 {
    (scale as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 40
}

/// The series `L(u) = sum_{m_1 > ... > m_r >= 1} 2^{-m_1} prod m_i^{-c_i}`
/// for the index word `u` (must end in `y`), truncated at `terms`.
/// Returns the value and an error bound covering truncation and rounding.
pub fn li_half(word: &Word, scale: u32, terms: u32) -> (BigFixed, f64) {
    let comp = composition_from_word(word).expect("li_half argument must be an index word");
    if comp.is_empty() {
        return (BigFixed::one(scale), 0.0);
    }
    let exps = comp.parts();
    let depth = exps.len();
    let ulp = BigFixed::zero(scale).ulp();

    // inner[j] accumulates sum over m_{j+2} < ... (the DP state for the
    // suffix starting at exponent index j+1), so inner[0] is the factor
    // multiplying the outermost term. inner[depth-1] stays 1.
    let mut inner: Vec<BigFixed> = vec![BigFixed::zero(scale); depth];
    if let Some(last) = inner.last_mut() {
        *last = BigFixed::one(scale);
    }

    let mut total = BigFixed::zero(scale);
    let mut half_pow = BigFixed::one(scale);
    for m in 1..=terms as u64 {
        half_pow = half_pow.halve();
        let outer = recip_power(m, exps[0], scale);
        total = total.add(&half_pow.mul(&outer).mul(&inner[0]));
        // Advance the strict-inequality prefix sums: level j gains the
        // m-th term using the deeper level still at state m.
        for j in 0..depth.saturating_sub(1) {
            let term = recip_power(m, exps[j + 1], scale).mul(&inner[j + 1]);
            inner[j] = inner[j].add(&term);
        }
    }

    // Tail: remaining terms are bounded by 2 * 2^{-N} * (1 + ln N)^depth.
    let n = terms as f64;
    let tail = 2.0 * 0.5f64.powi(terms as i32) * (1.0 + n.ln()).powi(depth as i32);
    // Rounding: each loop iteration touches about `depth + 3` roundings.
    let rounding = (terms as f64) * (depth as f64 + 3.0) * ulp;
    (total, tail + rounding)
}

fn recip_power(m: u64, exp: u32, scale: u32) -> BigFixed {
    let denom = BigInt::from(m).pow(exp);
    BigFixed::from_rational(&BigRational::new(BigInt::one(), denom), scale)
}

/// Evaluate an admissible nonempty word by the convolution at 1/2. The
/// `li` callback supplies (and may memoize) the series values.
pub fn eval_admissible(
    word: &Word,
    scale: u32,
    mut li: impl FnMut(&Word) -> (BigFixed, f64),
) -> (BigFixed, f64) {
    let n = word.letters().len();
    let mut total = BigFixed::zero(scale);
    let mut err = 0.0f64;
    let ulp = total.ulp();
    for j in 0..=n {
        let prefix = word.prefix(j).dual_reverse();
        let suffix = word.suffix(j);
        let (left, left_err) = if prefix.is_one() {
            (BigFixed::one(scale), 0.0)
        } else {
            li(&prefix)
        };
        let (right, right_err) = if suffix.is_one() {
            (BigFixed::one(scale), 0.0)
        } else {
            li(&suffix)
        };
        total = total.add(&left.mul(&right));
        // |L| <= zeta(2)^depth-ish but a crude bound of 2 per factor is
        // plenty: each L(u) <= L(y) + ... < 1.
        err += left_err * right.to_f64().abs()
            + right_err * left.to_f64().abs()
            + left_err * right_err
            + 2.0 * ulp;
    }
    (total, err)
}
