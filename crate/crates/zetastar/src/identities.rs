//! Exact verification of the displayed word-algebra identities: the A-F
//! word families, the four tilde-product expansions, the alpha/beta pair,
//! the reduction identity for the single-block case, the two recursions for
//! `d` on block powers, the two weight-6 regularization identities, and the
//! extended double shuffle defects.
//!
//! Every check compares two exactly-computed polynomials; `holds` is true
//! iff the difference is the zero polynomial.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::maps::dmap;
use crate::poly::NcPoly;
use crate::products::{harmonic, reg_shuffle, shuffle, tilde};
use crate::words::{h0_words_of_weight, h1_words_of_weight, Word};

/// Outcome of one exact identity check.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub params: String,
    pub holds: bool,
    /// LHS - RHS; zero iff the identity holds.
    pub difference: NcPoly,
    pub elapsed: Duration,
}

impl IdentityReport {
    fn conclude(name: &str, params: String, difference: NcPoly, started: Instant) -> Self {
        IdentityReport {
            name: name.to_string(),
            params,
            holds: difference.is_zero(),
            difference,
            elapsed: started.elapsed(),
        }
    }

    /// First `max` terms of the difference, for failure reports.
    pub fn difference_head(&self, max: usize) -> String {
        let mut head = NcPoly::zero();
        for (w, c) in self.difference.terms().take(max) {
            head.add_term(w.clone(), c.clone());
        }
        let more = self.difference.num_terms().saturating_sub(max);
        if more > 0 {
            format!("{head} + ({more} more terms)")
        } else {
            head.to_string()
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {}",
            self.name,
            self.params,
            if self.holds { "holds" } else { "FAILS" }
        )?;
        if !self.holds {
            write!(f, " (difference: {})", self.difference_head(10))?;
        }
        Ok(())
    }
}

/// The six word families used by the tilde-product expansions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordFamily {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl WordFamily {
    pub const ALL: [WordFamily; 6] =
        [WordFamily::A, WordFamily::B, WordFamily::C, WordFamily::D, WordFamily::E, WordFamily::F];
}

impl std::str::FromStr for WordFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(WordFamily::A),
            "B" => Ok(WordFamily::B),
            "C" => Ok(WordFamily::C),
            "D" => Ok(WordFamily::D),
            "E" => Ok(WordFamily::E),
            "F" => Ok(WordFamily::F),
            other => Err(Error::Parse(format!("unknown word family `{other}`"))),
        }
    }
}

/// Parameters of a family word: block sizes `a, b, c >= 1` and repetition
/// counts `i, j, k >= 0` (families A and B ignore `k`).
#[derive(Clone, Copy, Debug)]
pub struct WordFamilyParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl WordFamilyParams {
    pub fn new(a: u32, b: u32, c: u32, i: u32, j: u32, k: u32) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::InvalidArgument("family block sizes must be >= 1".into()));
        }
        Ok(WordFamilyParams { a, b, c, i, j, k })
    }
}

fn z(l: u32) -> Word {
    Word::z(l).expect("block size >= 1")
}

/// `(z_a z_b)^n`.
fn ab_pow(a: u32, b: u32, n: u32) -> Word {
    let unit = z(a).concat(&z(b));
    let mut out = Word::one();
    for _ in 0..n {
        out = out.concat(&unit);
    }
    out
}

/// `(z_b z_a)^n`.
fn ba_pow(a: u32, b: u32, n: u32) -> Word {
    ab_pow(b, a, n)
}

/// `z_b (z_a z_b)^n`.
fn b_ab_pow(a: u32, b: u32, n: u32) -> Word {
    z(b).concat(&ab_pow(a, b, n))
}

/// `z_s^n` (a power of one block).
fn block_pow(s: u32, n: u32) -> Word {
    let mut out = Word::one();
    for _ in 0..n {
        out = out.concat(&z(s));
    }
    out
}

/// Build one family word.
pub fn build_family(which: WordFamily, p: &WordFamilyParams) -> Word {
    let WordFamilyParams { a, b, c, i, j, k } = *p;
    match which {
        WordFamily::A => ab_pow(a, b, i).concat(&z(c)).concat(&ab_pow(a, b, j)),
        WordFamily::B => ba_pow(a, b, i).concat(&z(c)).concat(&ba_pow(a, b, j)).concat(&z(b)),
        WordFamily::C => ab_pow(a, b, i)
            .concat(&z(c))
            .concat(&ab_pow(a, b, j))
            .concat(&z(c))
            .concat(&ab_pow(a, b, k)),
        WordFamily::D => ab_pow(a, b, i)
            .concat(&z(c))
            .concat(&ab_pow(a, b, j))
            .concat(&z(a))
            .concat(&z(c))
            .concat(&ba_pow(a, b, k))
            .concat(&z(b)),
        WordFamily::E => ba_pow(a, b, i)
            .concat(&z(c))
            .concat(&ba_pow(a, b, j))
            .concat(&z(b))
            .concat(&z(c))
            .concat(&ab_pow(a, b, k)),
        WordFamily::F => ba_pow(a, b, i)
            .concat(&z(c))
            .concat(&ba_pow(a, b, j))
            .concat(&z(c))
            .concat(&ba_pow(a, b, k))
            .concat(&z(b)),
    }
}

fn family_params(a: u32, b: u32, c: u32, i: u32, j: u32, k: u32) -> WordFamilyParams {
    WordFamilyParams::new(a, b, c, i, j, k).expect("validated by caller")
}

fn check_abc(a: u32, b: u32, c: u32) -> Result<()> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidArgument("a, b, c must be >= 1".into()));
    }
    Ok(())
}

/// Sum of family words over all splits `i + j = n`.
fn family_sum2(which: WordFamily, a: u32, b: u32, c: u32, n: i64) -> NcPoly {
    let mut out = NcPoly::zero();
    if n < 0 {
        return out;
    }
    for i in 0..=n as u32 {
        let p = family_params(a, b, c, i, n as u32 - i, 0);
        out.add_assign(&NcPoly::from_word(build_family(which, &p)));
    }
    out
}

/// Sum of family words over all splits `i + j + k = n`.
fn family_sum3(which: WordFamily, a: u32, b: u32, c: u32, n: i64) -> NcPoly {
    let mut out = NcPoly::zero();
    if n < 0 {
        return out;
    }
    let n = n as u32;
    for i in 0..=n {
        for j in 0..=n - i {
            let p = family_params(a, b, c, i, j, n - i - j);
            out.add_assign(&NcPoly::from_word(build_family(which, &p)));
        }
    }
    out
}

/// The four expansions of `z_c`-type tilde products into A-F family sums.
pub fn check_family_expansions(n: u32, a: u32, b: u32, c: u32) -> Result<[IdentityReport; 4]> {
    check_abc(a, b, c)?;
    let params = format!("n={n}, a={a}, b={b}, c={c}");
    let zc = NcPoly::from_word(z(c));
    let zcc = NcPoly::from_word(z(c).concat(&z(c)));
    let abn = NcPoly::from_word(ab_pow(a, b, n));
    let babn = NcPoly::from_word(b_ab_pow(a, b, n));
    let za = z(a);
    let zb = z(b);
    let m = n as i64;

    let started = Instant::now();
    let lhs1 = tilde(&zc, &abn)?;
    let rhs1 = &family_sum2(WordFamily::A, a, b, c, m)
        + &family_sum2(WordFamily::B, a, b, c, m - 1).concat_word_left(&za);
    let r1 = IdentityReport::conclude("tilde-expansion-1", params.clone(), &lhs1 - &rhs1, started);

    let started = Instant::now();
    let lhs2 = tilde(&zc, &babn)?;
    let rhs2 = &family_sum2(WordFamily::A, a, b, c, m).concat_word_left(&zb)
        + &family_sum2(WordFamily::B, a, b, c, m);
    let r2 = IdentityReport::conclude("tilde-expansion-2", params.clone(), &lhs2 - &rhs2, started);

    let started = Instant::now();
    let lhs3 = tilde(&zcc, &abn)?;
    let mut rhs3 = family_sum3(WordFamily::C, a, b, c, m);
    rhs3.add_assign(&family_sum3(WordFamily::D, a, b, c, m - 1));
    rhs3.add_assign(&family_sum3(WordFamily::E, a, b, c, m - 1).concat_word_left(&za));
    rhs3.add_assign(&family_sum3(WordFamily::F, a, b, c, m - 1).concat_word_left(&za));
    let r3 = IdentityReport::conclude("tilde-expansion-3", params.clone(), &lhs3 - &rhs3, started);

    let started = Instant::now();
    let lhs4 = tilde(&zcc, &babn)?;
    let mut rhs4 = family_sum3(WordFamily::C, a, b, c, m).concat_word_left(&zb);
    rhs4.add_assign(&family_sum3(WordFamily::D, a, b, c, m - 1).concat_word_left(&zb));
    rhs4.add_assign(&family_sum3(WordFamily::E, a, b, c, m));
    rhs4.add_assign(&family_sum3(WordFamily::F, a, b, c, m));
    let r4 = IdentityReport::conclude("tilde-expansion-4", params, &lhs4 - &rhs4, started);

    Ok([r1, r2, r3, r4])
}

/// Common builder for the alpha/beta right-hand sides. `tail(j)` is either
/// `(z_a z_b)^j` (alpha) or `z_b (z_a z_b)^j` (beta).
fn alpha_beta_rhs(
    n: u32,
    a: u32,
    b: u32,
    c: u32,
    tail: impl Fn(u32) -> Word,
) -> Result<NcPoly> {
    let s = a + b;
    let zc = NcPoly::from_word(z(c));
    let zcc = NcPoly::from_word(z(c).concat(&z(c)));
    let mut rhs = NcPoly::zero();

    // 2 sum_{j+k=n} d(z_c ~ tail(j)) * z_{s k + c}
    for j in 0..=n {
        let k = n - j;
        let t = tilde(&zc, &NcPoly::from_word(tail(j)))?;
        let prod = harmonic(&dmap(&t)?, &NcPoly::from_word(z(s * k + c)))?;
        rhs.add_assign(&prod.scaled_int(2));
    }
    // + sum_{j+k=n} (z_c^2 ~ tail(j)) * d(z_s^k)
    for j in 0..=n {
        let k = n - j;
        let t = tilde(&zcc, &NcPoly::from_word(tail(j)))?;
        let prod = harmonic(&t, &dmap(&NcPoly::from_word(block_pow(s, k)))?)?;
        rhs.add_assign(&prod);
    }
    // - 4 sum_{i+j+k=n} d(tail(i)) * z_{s j + c} z_{s k + c}
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            let pair = z(s * j + c).concat(&z(s * k + c));
            let prod = harmonic(&dmap(&NcPoly::from_word(tail(i)))?, &NcPoly::from_word(pair))?;
            rhs.add_assign(&prod.scaled_int(-4));
        }
    }
    // - sum_{j+k=n} d(tail(j)) * z_{s k + 2c}
    for j in 0..=n {
        let k = n - j;
        let prod =
            harmonic(&dmap(&NcPoly::from_word(tail(j)))?, &NcPoly::from_word(z(s * k + 2 * c)))?;
        rhs.add_assign(&prod.scaled_int(-1));
    }
    Ok(rhs)
}

/// The alpha identity: `d(z_c^2 ~ (z_a z_b)^n)` against its four-sum
/// harmonic expansion.
pub fn check_alpha(n: u32, a: u32, b: u32, c: u32) -> Result<IdentityReport> {
    check_abc(a, b, c)?;
    let started = Instant::now();
    let zcc = NcPoly::from_word(z(c).concat(&z(c)));
    let lhs = dmap(&tilde(&zcc, &NcPoly::from_word(ab_pow(a, b, n)))?)?;
    let rhs = alpha_beta_rhs(n, a, b, c, |j| ab_pow(a, b, j))?;
    Ok(IdentityReport::conclude(
        "alpha",
        format!("n={n}, a={a}, b={b}, c={c}"),
        &lhs - &rhs,
        started,
    ))
}

/// The beta identity: the alpha shape with `z_b (z_a z_b)^n` in place of
/// `(z_a z_b)^n`.
pub fn check_beta(n: u32, a: u32, b: u32, c: u32) -> Result<IdentityReport> {
    check_abc(a, b, c)?;
    let started = Instant::now();
    let zcc = NcPoly::from_word(z(c).concat(&z(c)));
    let lhs = dmap(&tilde(&zcc, &NcPoly::from_word(b_ab_pow(a, b, n)))?)?;
    let rhs = alpha_beta_rhs(n, a, b, c, |j| b_ab_pow(a, b, j))?;
    Ok(IdentityReport::conclude(
        "beta",
        format!("n={n}, a={a}, b={b}, c={c}"),
        &lhs - &rhs,
        started,
    ))
}

/// The single-block reduction:
/// `d(z_c ~ (z_a z_b)^n) = 2 sum d((z_a z_b)^j) * z_{s k + c}
///  - sum (z_c ~ (z_a z_b)^j) * d(z_s^k)`.
pub fn check_d_reduction(n: u32, a: u32, b: u32, c: u32) -> Result<IdentityReport> {
    check_abc(a, b, c)?;
    let started = Instant::now();
    let s = a + b;
    let zc = NcPoly::from_word(z(c));
    let lhs = dmap(&tilde(&zc, &NcPoly::from_word(ab_pow(a, b, n)))?)?;
    let mut rhs = NcPoly::zero();
    for j in 0..=n {
        let k = n - j;
        let first = harmonic(
            &dmap(&NcPoly::from_word(ab_pow(a, b, j)))?,
            &NcPoly::from_word(z(s * k + c)),
        )?;
        rhs.add_assign(&first.scaled_int(2));
        let second = harmonic(
            &tilde(&zc, &NcPoly::from_word(ab_pow(a, b, j)))?,
            &dmap(&NcPoly::from_word(block_pow(s, k)))?,
        )?;
        rhs.add_assign(&second.scaled_int(-1));
    }
    Ok(IdentityReport::conclude(
        "d-reduction",
        format!("n={n}, a={a}, b={b}, c={c}"),
        &lhs - &rhs,
        started,
    ))
}

/// `d(z_s^l) = sum_{i+k=l-1} z_{s(i+1)} d(z_s^k)` for `l >= 1`.
pub fn check_d_power_recursion(l: u32, a: u32, b: u32) -> Result<IdentityReport> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidArgument("a, b must be >= 1".into()));
    }
    if l < 1 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    let started = Instant::now();
    let s = a + b;
    let lhs = dmap(&NcPoly::from_word(block_pow(s, l)))?;
    let mut rhs = NcPoly::zero();
    for i in 0..l {
        let k = l - 1 - i;
        rhs.add_assign(
            &dmap(&NcPoly::from_word(block_pow(s, k)))?.concat_word_left(&z(s * (i + 1))),
        );
    }
    Ok(IdentityReport::conclude(
        "d-power-recursion",
        format!("l={l}, a={a}, b={b}"),
        &lhs - &rhs,
        started,
    ))
}

/// `d((z_a z_b)^l) = sum_{i+j=l-1} z_{s i + a} d(z_b (z_a z_b)^j)
///  + sum_{i+j=l-1} z_{s(i+1)} d((z_a z_b)^j)` for `l >= 1`.
pub fn check_d_block_recursion(l: u32, a: u32, b: u32) -> Result<IdentityReport> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidArgument("a, b must be >= 1".into()));
    }
    if l < 1 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    let started = Instant::now();
    let s = a + b;
    let lhs = dmap(&NcPoly::from_word(ab_pow(a, b, l)))?;
    let mut rhs = NcPoly::zero();
    for i in 0..l {
        let j = l - 1 - i;
        rhs.add_assign(
            &dmap(&NcPoly::from_word(b_ab_pow(a, b, j)))?.concat_word_left(&z(s * i + a)),
        );
        rhs.add_assign(
            &dmap(&NcPoly::from_word(ab_pow(a, b, j)))?.concat_word_left(&z(s * (i + 1))),
        );
    }
    Ok(IdentityReport::conclude(
        "d-block-recursion",
        format!("l={l}, a={a}, b={b}"),
        &lhs - &rhs,
        started,
    ))
}

/// The extended double shuffle defect `reg(w1 sh w0 - w1 * w0)`.
///
/// `w1` must lie in `H1` and `w0` in `H0`; the result is an `H0` element
/// whose numeric evaluation vanishes.
pub fn eds_defect(w1: &NcPoly, w0: &NcPoly) -> Result<NcPoly> {
    if let Some(w) = w1.first_outside_h1() {
        return Err(Error::NotInH1(w.clone()));
    }
    if let Some(w) = w0.first_outside_h0() {
        return Err(Error::NotInH0(w.clone()));
    }
    let sh = shuffle(w1, w0);
    let st = harmonic(w1, w0)?;
    reg_shuffle(&(&sh - &st))
}

pub const DEFAULT_EDS_CAP: u32 = 8;

/// All pairs `(w1, w0)` with `w1` a nonempty `H1` word, `w0` a nonempty `H0`
/// word and total weight at most `max_weight`, each with its defect.
pub fn enumerate_eds(max_weight: u32) -> Result<Vec<(Word, Word, NcPoly)>> {
    enumerate_eds_capped(max_weight, DEFAULT_EDS_CAP)
}

pub fn enumerate_eds_capped(max_weight: u32, cap: u32) -> Result<Vec<(Word, Word, NcPoly)>> {
    if max_weight > cap {
        return Err(Error::WeightCapExceeded { requested: max_weight, cap });
    }
    let mut out = Vec::new();
    for w1_weight in 1..=max_weight.saturating_sub(2) {
        for w1 in h1_words_of_weight(w1_weight) {
            for w0_weight in 2..=max_weight - w1_weight {
                for w0 in h0_words_of_weight(w0_weight) {
                    let defect =
                        eds_defect(&NcPoly::from_word(w1.clone()), &NcPoly::from_word(w0.clone()))?;
                    out.push((w1.clone(), w0.clone(), defect));
                }
            }
        }
    }
    Ok(out)
}

fn word(s: &str) -> Word {
    s.parse().expect("literal word")
}

/// One regularized combination `coef * reg(u * v - u sh v)`.
fn reg_combination(terms: &[(i64, &str, &str)]) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for &(coef, u, v) in terms {
        let pu = NcPoly::from_word(word(u));
        let pv = NcPoly::from_word(word(v));
        let mixed = &harmonic(&pu, &pv)? - &shuffle(&pu, &pv);
        out.add_assign(&reg_shuffle(&mixed)?.scaled_int(coef));
    }
    Ok(out)
}

/// The two weight-6 identities relating star-transfer values to regularized
/// double-shuffle combinations. Both sides are exact `H0` polynomials.
pub fn check_weight6_identities() -> Result<(IdentityReport, IdentityReport)> {
    let started = Instant::now();
    // d(z2 z3 z1) + d(z3 z2 z1) - d(z2 z2) * d(z2)
    let lhs1 = {
        let mut p = dmap(&NcPoly::from_word(word("xyxxyy")))?;
        p.add_assign(&dmap(&NcPoly::from_word(word("xxyxyy")))?);
        let prod = harmonic(
            &dmap(&NcPoly::from_word(word("xyxy")))?,
            &dmap(&NcPoly::from_word(word("xy")))?,
        )?;
        p.sub_assign(&prod);
        p
    };
    let rhs1 = reg_combination(&[
        (-1, "xy", "yxxy"),
        (-1, "xxy", "xxy"),
        (-1, "xxy", "xyy"),
        (4, "xxxy", "yy"),
        (2, "xxxxy", "y"),
        (-5, "xxxyy", "y"),
        (2, "xxyxy", "y"),
        (5, "xyxxy", "y"),
    ])?;
    let first = IdentityReport::conclude("weight6-1", "weight=6".into(), &lhs1 - &rhs1, started);

    let started = Instant::now();
    // 3 d(z3 z1 z2) - d(z3 z1) * d(z2) - d(z2 z2 z2)
    let lhs2 = {
        let mut p = dmap(&NcPoly::from_word(word("xxyyxy")))?.scaled_int(3);
        let prod = harmonic(
            &dmap(&NcPoly::from_word(word("xxyy")))?,
            &dmap(&NcPoly::from_word(word("xy")))?,
        )?;
        p.sub_assign(&prod);
        p.sub_assign(&dmap(&NcPoly::from_word(word("xyxyxy")))?);
        p
    };
    let rhs2 = reg_combination(&[
        (-1, "xxy", "xyy"),
        (1, "xxyy", "xy"),
        (2, "xxxy", "yy"),
        (1, "xxxxy", "y"),
        (2, "xxxyy", "y"),
        (2, "xxyxy", "y"),
        (2, "xyxxy", "y"),
    ])?;
    let second = IdentityReport::conclude("weight6-2", "weight=6".into(), &lhs2 - &rhs2, started);

    Ok((first, second))
}

/// The default parameter grid shared by the verification suites.
pub const DEFAULT_ABC_GRID: [(u32, u32, u32); 4] = [(3, 1, 2), (1, 1, 1), (2, 3, 1), (2, 2, 2)];
pub const DEFAULT_MAX_N: u32 = 4;
