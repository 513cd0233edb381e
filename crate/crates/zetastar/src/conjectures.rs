//! Star-value families built from j-vectors, symmetric-group orbit sums,
//! and the numeric check suites.
//!
//! A j-vector `(j_0, ..., j_{2n})` names the star index
//! `({2}^{j_0}, 3, {2}^{j_1}, 1, ..., 3, {2}^{j_{2n-1}}, 1, {2}^{j_{2n}})`:
//! blocks of 2s threaded through the alternating `3, 1` skeleton. Orbit
//! sums run over all permutations of the vector (literally, with repeats;
//! computed as distinct arrangements weighted by the multiplicity
//! `prod_v count(v)!`), apply one of the two append operators, and are
//! reconstructed against the asserted power of pi.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numerics::{bernoulli, zeta_even, zetastar_twos, Evaluator, HighPrecReal};
use crate::reconstruct::{reconstruct_pi_power, ReconstructionResult};
use crate::words::Composition;

/// Largest index weight the numeric suites evaluate by default.
pub const NUMERIC_WEIGHT_CAP: u32 = 16;

/// A vector of nonnegative block lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JVector {
    entries: Vec<u32>,
}

impl JVector {
    pub fn new(entries: Vec<u32>) -> Self {
        JVector { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.entries.iter().sum()
    }
}

impl fmt::Display for JVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for JVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(JVector::new(Vec::new()));
        }
        let mut entries = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidJVector(format!("invalid entry `{tok}`")))?;
            entries.push(v);
        }
        Ok(JVector::new(entries))
    }
}

/// Append a zero slot: `(j_0, ..., j_n)_+ = (j_0, ..., j_n, 0)`.
pub fn op_plus(s: &JVector) -> JVector {
    let mut entries = s.entries.clone();
    entries.push(0);
    JVector::new(entries)
}

/// Bump the last slot: `(j_0, ..., j_n)^+ = (j_0, ..., j_{n-1}, j_n + 1)`.
pub fn op_superplus(s: &JVector) -> Result<JVector> {
    let mut entries = s.entries.clone();
    match entries.last_mut() {
        Some(last) => {
            *last += 1;
            Ok(JVector::new(entries))
        }
        None => Err(Error::InvalidJVector("the bump operator needs a nonempty vector".into())),
    }
}

/// The star index named by an odd-length j-vector. A length-one vector
/// `(j_0)` is the bare block `({2}^{j_0})`.
pub fn index_from_jvector(j: &JVector) -> Result<Composition> {
    if j.len().is_multiple_of(2) {
        return Err(Error::InvalidJVector(format!(
            "index pattern needs an odd-length vector, got {}",
            j
        )));
    }
    let mut parts = Vec::new();
    parts.extend(std::iter::repeat_n(2, j.entries[0] as usize));
    for (i, &run) in j.entries.iter().enumerate().skip(1) {
        parts.push(if i % 2 == 1 { 3 } else { 1 });
        parts.extend(std::iter::repeat_n(2, run as usize));
    }
    Composition::new(parts)
}

/// `({2}^n)` as a composition.
fn twos(n: u32) -> Composition {
    Composition::new(vec![2; n as usize]).expect("twos")
}

/// `({3,1}^n)` as a composition.
fn threes_ones(n: u32) -> Composition {
    let mut parts = Vec::with_capacity(2 * n as usize);
    for _ in 0..n {
        parts.push(3);
        parts.push(1);
    }
    Composition::new(parts).expect("threes_ones")
}

/// `({2}^i, 3, {2}^j, 1)` as a composition.
fn twos_three_twos_one(i: u32, j: u32) -> Composition {
    let mut parts = vec![2; i as usize];
    parts.push(3);
    parts.extend(std::iter::repeat_n(2, j as usize));
    parts.push(1);
    Composition::new(parts).expect("twos_three_twos_one")
}

/// A composition extended by extra parts.
fn extended(base: &Composition, extra: &[u32]) -> Composition {
    let mut parts = base.parts().to_vec();
    parts.extend_from_slice(extra);
    Composition::new(parts).expect("extended")
}

/// All vectors of the given length with the given entry sum.
pub fn vectors_with_sum(len: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(len - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, total, &mut Vec::new(), &mut out);
    out
}

/// Distinct rearrangements of a multiset, lexicographically.
pub fn distinct_arrangements(s: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(sorted.clone());
        // next_permutation
        let n = sorted.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).expect("pivot exists");
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
    }
    out
}

/// Number of permutations fixing any one arrangement: `prod_v count(v)!`.
pub fn arrangement_multiplicity(s: &[u32]) -> u64 {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    let mut mult = 1u64;
    let mut run = 1u64;
    for i in 1..sorted.len() {
        if sorted[i] == sorted[i - 1] {
            run += 1;
            mult *= run;
        } else {
            run = 1;
        }
    }
    mult
}

/// Which orbit-sum statement to instantiate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitVariant {
    /// Even-length vectors, append a zero slot; power `2m + 4n`.
    AppendZero,
    /// Odd-length vectors, bump the last slot; power `2m + 4n + 2`.
    BumpLast,
}

/// Result of one orbit-sum check: the literal permutation sum, its
/// reconstruction against the asserted power of pi, and informational
/// notes about proper sub-sums that happen to reconstruct as well.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub id: String,
    pub params: String,
    pub sum: HighPrecReal,
    pub pi_power: u32,
    pub reconstruction: ReconstructionResult,
    pub accepted: bool,
    pub subsum_notes: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} vs pi^{} -> {}",
            self.id,
            self.params,
            if self.accepted { "accepted" } else { "REJECTED" },
            self.pi_power,
            self.reconstruction
        )
    }
}

/// Outcome of a two-sided numeric comparison.
#[derive(Clone, Debug)]
pub struct NumericReport {
    pub id: String,
    pub params: String,
    pub lhs: HighPrecReal,
    pub rhs: HighPrecReal,
    pub abs_diff: f64,
    pub tolerance: f64,
    /// When set, `abs_diff` is measured relative to |rhs|.
    pub relative: bool,
    pub holds: bool,
    pub elapsed: Duration,
}

impl NumericReport {
    fn conclude(
        id: &str,
        params: String,
        lhs: HighPrecReal,
        rhs: HighPrecReal,
        tolerance: f64,
        relative: bool,
        started: Instant,
    ) -> Self {
        let mut diff = lhs.abs_diff_f64(&rhs);
        if relative {
            diff /= rhs.to_f64().abs().max(f64::MIN_POSITIVE);
        }
        NumericReport {
            id: id.to_string(),
            params,
            lhs,
            rhs,
            abs_diff: diff,
            tolerance,
            relative,
            holds: diff < tolerance,
            elapsed: started.elapsed(),
        }
    }
}

impl fmt::Display for NumericReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} ({}diff {:.3e}, tol {:.1e})",
            self.id,
            self.params,
            if self.holds { "holds" } else { "FAILS" },
            if self.relative { "rel " } else { "" },
            self.abs_diff,
            self.tolerance
        )
    }
}

fn numeric_tolerance(eval: &Evaluator) -> f64 {
    let cfg = eval.config();
    10f64.powi(cfg.guard as i32 - cfg.digits as i32)
}

fn check_weight_cap(weight: u32) -> Result<()> {
    if weight > NUMERIC_WEIGHT_CAP {
        return Err(Error::WeightCapExceeded { requested: weight, cap: NUMERIC_WEIGHT_CAP });
    }
    Ok(())
}

/// Literal symmetric-group orbit sum with reconstruction.
pub fn orbit_sum(
    s: &JVector,
    variant: OrbitVariant,
    eval: &Evaluator,
    qmax: u128,
) -> Result<ConjectureReport> {
    let started = Instant::now();
    let (n, pi_power, id) = match variant {
        OrbitVariant::AppendZero => {
            if s.len() < 2 || !s.len().is_multiple_of(2) {
                return Err(Error::InvalidJVector(format!(
                    "append-zero orbit needs an even-length vector of length >= 2, got {s}"
                )));
            }
            let n = (s.len() / 2) as u32;
            (n, 2 * s.sum() + 4 * n, "4.1")
        }
        OrbitVariant::BumpLast => {
            if s.len() % 2 != 1 {
                return Err(Error::InvalidJVector(format!(
                    "bump-last orbit needs an odd-length vector, got {s}"
                )));
            }
            let n = (s.len() as u32 - 1) / 2;
            (n, 2 * s.sum() + 4 * n + 2, "4.3")
        }
    };
    let _ = n;
    check_weight_cap(pi_power)?;

    let mult = arrangement_multiplicity(s.entries());
    let arrangements = distinct_arrangements(s.entries());
    let mut terms: Vec<(Composition, HighPrecReal)> = Vec::with_capacity(arrangements.len());
    for arr in &arrangements {
        let v = JVector::new(arr.clone());
        let applied = match variant {
            OrbitVariant::AppendZero => op_plus(&v),
            OrbitVariant::BumpLast => op_superplus(&v)?,
        };
        let index = index_from_jvector(&applied)?;
        let value = eval.mzsv(&index)?;
        terms.push((index, value));
    }
    let weight = BigRational::from_integer(BigInt::from(mult));
    let mut sum = eval.exact_zero();
    for (_, v) in &terms {
        sum = sum.add(v);
    }
    let sum = sum.scaled(&weight);
    let reconstruction = reconstruct_pi_power(&sum, pi_power, eval.config(), qmax)?;
    let accepted = reconstruction.accepted;

    // Informational: reconstruct every proper nonempty sub-sum and flag the
    // ones that also land on a rational (the statements are expected to be
    // primitive, so none should).
    let mut subsum_notes = Vec::new();
    if terms.len() > 1 && terms.len() <= 12 {
        for mask in 1..(1u32 << terms.len()) - 1 {
            let mut part = eval.exact_zero();
            for (i, (_, v)) in terms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    part = part.add(v);
                }
            }
            let part = part.scaled(&weight);
            if let Ok(rec) = reconstruct_pi_power(&part, pi_power, eval.config(), qmax) {
                if rec.accepted {
                    let members: Vec<String> = terms
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, (k, _))| k.to_string())
                        .collect();
                    subsum_notes.push(format!(
                        "proper sub-sum {{{}}} also reconstructs to {}",
                        members.join("; "),
                        rec
                    ));
                }
            }
        }
    }

    Ok(ConjectureReport {
        id: id.to_string(),
        params: format!("S={s}"),
        sum,
        pi_power,
        reconstruction,
        accepted,
        subsum_notes,
        elapsed: started.elapsed(),
    })
}

/// The two-insertion star sum at a given `n`: all j-vectors of length
/// `2n + 1` with entry sum 2, mapped to star values and added. Shared by
/// the membership check and the expanded-identity check so both consume
/// identical values.
pub fn two_insertion_sum(n: u32, eval: &Evaluator) -> Result<HighPrecReal> {
    let mut sum = eval.exact_zero();
    for v in vectors_with_sum(2 * n as usize + 1, 2) {
        let index = index_from_jvector(&JVector::new(v))?;
        sum = sum.add(&eval.mzsv(&index)?);
    }
    Ok(sum)
}

/// Membership of the two-insertion sum in `Q * pi^{4n+4}`.
pub fn check_two_insertion_membership(n: u32, eval: &Evaluator, qmax: u128) -> Result<ConjectureReport> {
    let started = Instant::now();
    let pi_power = 4 * n + 4;
    check_weight_cap(pi_power)?;
    let sum = two_insertion_sum(n, eval)?;
    let reconstruction = reconstruct_pi_power(&sum, pi_power, eval.config(), qmax)?;
    let accepted = reconstruction.accepted;
    Ok(ConjectureReport {
        id: "thm11".to_string(),
        params: format!("n={n}"),
        sum,
        pi_power,
        reconstruction,
        accepted,
        subsum_notes: Vec::new(),
        elapsed: started.elapsed(),
    })
}

/// Exact `zeta(2k)` as a tracked value.
fn even_zeta(eval: &Evaluator, two_k: u32) -> Result<HighPrecReal> {
    if two_k == 0 {
        return Ok(eval.exact_one());
    }
    Ok(eval.rational_pi_multiple(&zeta_even(two_k)?, two_k))
}

/// The expanded form of the two-insertion sum: checks the four-line
/// harmonic expansion against the literal sum.
pub fn check_two_insertion_expansion(n: u32, eval: &Evaluator) -> Result<NumericReport> {
    let started = Instant::now();
    check_weight_cap(4 * n + 4)?;
    let lhs = two_insertion_sum(n, eval)?;

    let mut rhs = eval.exact_zero();
    // 2 sum_i (one-insertion sum at i) * zeta(4(n-i)+2)
    for i in 0..=n {
        let mut inner = eval.exact_zero();
        for v in vectors_with_sum(2 * i as usize + 1, 1) {
            inner = inner.add(&eval.mzsv(&index_from_jvector(&JVector::new(v))?)?);
        }
        let z = even_zeta(eval, 4 * (n - i) + 2)?;
        rhs = rhs.add(&inner.mul(&z).scaled(&BigRational::from_integer(2.into())));
    }
    // + sum_i (plain two-insertion sum at i) * zeta*({4}^{n-i})
    for i in 0..=n {
        let mut inner = eval.exact_zero();
        for v in vectors_with_sum(2 * i as usize + 1, 2) {
            inner = inner.add(&eval.mzv(&index_from_jvector(&JVector::new(v))?)?);
        }
        let star4 = eval.mzsv(&Composition::new(vec![4; (n - i) as usize])?)?;
        rhs = rhs.add(&inner.mul(&star4));
    }
    // - 2 sum_{i+j+k=n} zeta*({3,1}^i) (zeta(4j+2) zeta(4k+2) - zeta(4j+4k+4))
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            let star31 = eval.mzsv(&threes_ones(i))?;
            let q = zeta_even(4 * j + 2)? * zeta_even(4 * k + 2)? - zeta_even(4 * j + 4 * k + 4)?;
            let inner = eval.rational_pi_multiple(&q, 4 * j + 4 * k + 4);
            rhs = rhs.add(&star31.mul(&inner).scaled(&BigRational::from_integer((-2).into())));
        }
    }
    // - sum_{j+k=n} zeta*({3,1}^j) zeta(4k+4); the merged-block argument is
    // 4k + 2c with c = 2, which is also what keeps every term weight 4n+4.
    for j in 0..=n {
        let k = n - j;
        let star31 = eval.mzsv(&threes_ones(j))?;
        let z = even_zeta(eval, 4 * k + 4)?;
        rhs = rhs.add(&star31.mul(&z).neg());
    }

    Ok(NumericReport::conclude(
        "eq6",
        format!("n={n}"),
        lhs,
        rhs,
        numeric_tolerance(eval),
        false,
        started,
    ))
}

/// The closed-form insertion identity for plain values: the sum of
/// `zeta({2}^{j_0}, 3, ..., 1, {2}^{j_{2n}})` over all vectors summing to
/// `m` equals `C(m+2n, m) pi^{2m+4n} / ((2n+1)(2m+4n+1)!)`.
pub fn check_insertion_closed_form(n: u32, m: u32, eval: &Evaluator) -> Result<NumericReport> {
    let started = Instant::now();
    if n + m == 0 {
        return Err(Error::InvalidArgument("n + m must be positive".into()));
    }
    check_weight_cap(4 * n + 2 * m)?;
    let mut lhs = eval.exact_zero();
    for v in vectors_with_sum(2 * n as usize + 1, m) {
        lhs = lhs.add(&eval.mzv(&index_from_jvector(&JVector::new(v))?)?);
    }
    let mut fact = BigInt::one();
    for t in 2..=(2 * m + 4 * n + 1) {
        fact *= BigInt::from(t);
    }
    let q = BigRational::new(
        binomial(BigInt::from(m + 2 * n), BigInt::from(m)),
        BigInt::from(2 * n + 1) * fact,
    );
    let rhs = eval.rational_pi_multiple(&q, 2 * m + 4 * n);
    Ok(NumericReport::conclude(
        "eq1",
        format!("n={n}, m={m}"),
        lhs,
        rhs,
        numeric_tolerance(eval),
        true,
        started,
    ))
}

/// Which part of the product-form conjecture family to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductFormPart {
    A,
    B,
    C,
}

/// The product-form star identities.
///
/// * A(n, m): `zeta*({2}^n,3,{2}^m,1) + zeta*({2}^m,3,{2}^n,1)
///            = zeta*({2}^{n+1}) zeta*({2}^{m+1})`.
/// * B(n): `(2n+1) zeta*({3,1}^n, 2) = sum_{j+k=n} zeta*({3,1}^j) zeta*({2}^{2k+1})`.
/// * C(n >= 1): the one-insertion sum over patterns ending in `1` equals
///   `sum_{j+k=n-1} zeta*({3,1}^j, 2) zeta*({2}^{2k+2})`. The left side is
///   read literally off the displayed sum: vectors `(j_0, ..., j_{2n-1})`
///   with no trailing block slot, i.e. `index(v ++ [0])`.
pub fn check_product_form(part: ProductFormPart, n: u32, m: u32, eval: &Evaluator) -> Result<NumericReport> {
    let started = Instant::now();
    match part {
        ProductFormPart::A => {
            check_weight_cap(2 * n + 2 * m + 4)?;
            let lhs = eval
                .mzsv(&twos_three_twos_one(n, m))?
                .add(&eval.mzsv(&twos_three_twos_one(m, n))?);
            let rhs = eval.mzsv(&twos(n + 1))?.mul(&eval.mzsv(&twos(m + 1))?);
            Ok(NumericReport::conclude(
                "4.5a",
                format!("n={n}, m={m}"),
                lhs,
                rhs,
                numeric_tolerance(eval),
                false,
                started,
            ))
        }
        ProductFormPart::B => {
            check_weight_cap(4 * n + 2)?;
            let lhs = eval
                .mzsv(&extended(&threes_ones(n), &[2]))?
                .scaled(&BigRational::from_integer((2 * n as i64 + 1).into()));
            let mut rhs = eval.exact_zero();
            for j in 0..=n {
                let k = n - j;
                let term = eval.mzsv(&threes_ones(j))?.mul(&eval.mzsv(&twos(2 * k + 1))?);
                rhs = rhs.add(&term);
            }
            Ok(NumericReport::conclude(
                "4.5b",
                format!("n={n}"),
                lhs,
                rhs,
                numeric_tolerance(eval),
                false,
                started,
            ))
        }
        ProductFormPart::C => {
            if n < 1 {
                return Err(Error::InvalidArgument("part C needs n >= 1".into()));
            }
            check_weight_cap(4 * n + 2)?;
            let mut lhs = eval.exact_zero();
            for mut v in vectors_with_sum(2 * n as usize, 1) {
                v.push(0);
                lhs = lhs.add(&eval.mzsv(&index_from_jvector(&JVector::new(v))?)?);
            }
            let mut rhs = eval.exact_zero();
            for j in 0..=n - 1 {
                let k = n - 1 - j;
                let term = eval
                    .mzsv(&extended(&threes_ones(j), &[2]))?
                    .mul(&eval.mzsv(&twos(2 * k + 2))?);
                rhs = rhs.add(&term);
            }
            Ok(NumericReport::conclude(
                "4.5c",
                format!("n={n}"),
                lhs,
                rhs,
                numeric_tolerance(eval),
                false,
                started,
            ))
        }
    }
}

/// Outcome of the averaged product identity: the exact Bernoulli
/// convolution and, optionally, the numeric star statement.
#[derive(Clone, Debug)]
pub struct SymmetrizedProductReport {
    pub n: u32,
    pub exact_holds: bool,
    pub numeric: Option<NumericReport>,
    pub elapsed: Duration,
}

/// `(1 - 2n) B_{2n} / (2n)!` against the convolution
/// `sum_{i+j=n} (1 - 2^{1-2i})(1 - 2^{1-2j}) B_{2i} B_{2j} / ((2i)! (2j)!)`,
/// exactly; and for small `n` the star form
/// `2 sum_{i+j=n} zeta*({2}^i,3,{2}^j,1) = sum_{i+j=n} zeta*({2}^{i+1}) zeta*({2}^{j+1})`.
pub fn check_symmetrized_product(n: u32, eval: Option<&Evaluator>) -> Result<SymmetrizedProductReport> {
    let started = Instant::now();
    if n < 1 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let exact_holds = bernoulli_convolution_exact(n);
    let numeric = match eval {
        Some(eval) => {
            check_weight_cap(2 * n + 4)?;
            let inner_started = Instant::now();
            let mut lhs = eval.exact_zero();
            for i in 0..=n {
                lhs = lhs.add(&eval.mzsv(&twos_three_twos_one(i, n - i))?);
            }
            let lhs = lhs.scaled(&BigRational::from_integer(2.into()));
            let mut rhs = eval.exact_zero();
            for i in 0..=n {
                let term = eval.mzsv(&twos(i + 1))?.mul(&eval.mzsv(&twos(n - i + 1))?);
                rhs = rhs.add(&term);
            }
            Some(NumericReport::conclude(
                "prop51",
                format!("n={n}"),
                lhs,
                rhs,
                1e-30,
                false,
                inner_started,
            ))
        }
        None => None,
    };
    Ok(SymmetrizedProductReport { n, exact_holds, numeric, elapsed: started.elapsed() })
}

fn half_power_factor(i: u32) -> BigRational {
    // 1 - 2^{1-2i}
    BigRational::one() - BigRational::new(BigInt::from(2), BigInt::from(2u32).pow(2 * i))
}

fn factorial_rat(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= BigInt::from(t);
    }
    BigRational::from_integer(acc)
}

/// The exact Bernoulli convolution identity at one `n`.
pub fn bernoulli_convolution_exact(n: u32) -> bool {
    let lhs = BigRational::from_integer(BigInt::from(1 - 2 * n as i64)) * bernoulli(2 * n)
        / factorial_rat(2 * n);
    let mut rhs = BigRational::from_integer(0.into());
    for i in 0..=n {
        let j = n - i;
        rhs += half_power_factor(i) * half_power_factor(j) * bernoulli(2 * i) * bernoulli(2 * j)
            / (factorial_rat(2 * i) * factorial_rat(2 * j));
    }
    lhs == rhs
}

/// The cyclic-sum instance
/// `sum_{i+j=n-2} zeta*({2}^i,3,{2}^j,1) + zeta*({2}^n) = (2n-1) zeta(2n)`.
pub fn check_cyclic_sum_instance(n: u32, eval: &Evaluator) -> Result<NumericReport> {
    let started = Instant::now();
    if !(2..=6).contains(&n) {
        return Err(Error::InvalidArgument("cyclic-sum instance needs 2 <= n <= 6".into()));
    }
    let mut lhs = eval.exact_zero();
    for i in 0..=n - 2 {
        lhs = lhs.add(&eval.mzsv(&twos_three_twos_one(i, n - 2 - i))?);
    }
    lhs = lhs.add(&eval.rational_pi_multiple(&zetastar_twos(n)?, 2 * n));
    let rhs = eval.rational_pi_multiple(
        &(zeta_even(2 * n)? * BigRational::from_integer((2 * n as i64 - 1).into())),
        2 * n,
    );
    Ok(NumericReport::conclude(
        "cyclic",
        format!("n={n}"),
        lhs,
        rhs,
        1e-30,
        false,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PrecisionConfig;
    use crate::reconstruct::DEFAULT_QMAX;

    fn jv(entries: &[u32]) -> JVector {
        JVector::new(entries.to_vec())
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn evaluator() -> Evaluator {
        Evaluator::new(PrecisionConfig::default()).unwrap()
    }

    #[test]
    fn index_from_jvector_examples() {
        assert_eq!(index_from_jvector(&jv(&[0, 0, 0])).unwrap(), comp(&[3, 1]));
        assert_eq!(index_from_jvector(&jv(&[1, 0, 2])).unwrap(), comp(&[2, 3, 1, 2, 2]));
        assert_eq!(index_from_jvector(&jv(&[2])).unwrap(), comp(&[2, 2]));
        assert!(matches!(
            index_from_jvector(&jv(&[1, 0])),
            Err(Error::InvalidJVector(_))
        ));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(op_plus(&jv(&[1, 0])), jv(&[1, 0, 0]));
        assert_eq!(op_superplus(&jv(&[0])).unwrap(), jv(&[1]));
        assert_eq!(op_plus(&jv(&[])), jv(&[0]));
        assert!(op_superplus(&jv(&[])).is_err());
    }

    #[test]
    fn arrangement_bookkeeping() {
        let arrs = distinct_arrangements(&[1, 0, 0]);
        assert_eq!(arrs, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(arrangement_multiplicity(&[1, 0, 0]), 2);
        assert_eq!(arrangement_multiplicity(&[0, 0]), 2);
        assert_eq!(arrangement_multiplicity(&[2, 1, 0]), 1);
        assert_eq!(arrangement_multiplicity(&[1, 1, 1]), 6);
    }

    #[test]
    fn weighted_orbit_equals_literal_permutation_sum() {
        // For every vector up to length 4: the multiset of indices from
        // sigma-enumeration equals the weighted distinct-arrangement set.
        fn all_permutations(v: &[u32]) -> Vec<Vec<u32>> {
            if v.len() <= 1 {
                return vec![v.to_vec()];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.to_vec();
                let first = rest.remove(i);
                for mut tail in all_permutations(&rest) {
                    tail.insert(0, first);
                    out.push(tail);
                }
            }
            out
        }
        for s in [vec![0u32, 0], vec![1, 0], vec![1, 0, 0], vec![2, 1, 0, 0]] {
            let mut literal = all_permutations(&s);
            literal.sort();
            let mut weighted = Vec::new();
            let mult = arrangement_multiplicity(&s);
            for arr in distinct_arrangements(&s) {
                for _ in 0..mult {
                    weighted.push(arr.clone());
                }
            }
            weighted.sort();
            assert_eq!(literal, weighted, "vector {s:?}");
        }
    }

    #[test]
    fn vectors_with_sum_counts() {
        assert_eq!(vectors_with_sum(3, 2).len(), 6); // C(4,2)
        assert_eq!(vectors_with_sum(5, 2).len(), 15); // C(6,2)
        assert_eq!(vectors_with_sum(1, 2), vec![vec![2]]);
    }

    #[test]
    fn orbit_sum_reproduces_displayed_examples() {
        let eval = evaluator();
        // S = (0,0): 2! * zeta*(3,1) against pi^4 -> 2/72 = 1/36.
        let report = orbit_sum(&jv(&[0, 0]), OrbitVariant::AppendZero, &eval, DEFAULT_QMAX)
            .unwrap();
        assert!(report.accepted);
        assert_eq!(report.pi_power, 4);
        assert_eq!(
            report.reconstruction.rational(),
            BigRational::new(BigInt::from(1), BigInt::from(36))
        );
        // S = (0): zeta*(2) against pi^2 -> 1/6.
        let report =
            orbit_sum(&jv(&[0]), OrbitVariant::BumpLast, &eval, DEFAULT_QMAX).unwrap();
        assert!(report.accepted);
        assert_eq!(report.pi_power, 2);
        assert_eq!(
            report.reconstruction.rational(),
            BigRational::new(BigInt::from(1), BigInt::from(6))
        );
        // S = (0,0,0): 3! * zeta*(3,1,2) against pi^6.
        let report =
            orbit_sum(&jv(&[0, 0, 0]), OrbitVariant::BumpLast, &eval, DEFAULT_QMAX).unwrap();
        assert!(report.accepted);
        assert_eq!(report.pi_power, 6);
    }

    #[test]
    fn orbit_sum_validates_vector_shape() {
        let eval = evaluator();
        assert!(matches!(
            orbit_sum(&jv(&[0, 0, 0]), OrbitVariant::AppendZero, &eval, DEFAULT_QMAX),
            Err(Error::InvalidJVector(_))
        ));
        assert!(matches!(
            orbit_sum(&jv(&[0, 0]), OrbitVariant::BumpLast, &eval, DEFAULT_QMAX),
            Err(Error::InvalidJVector(_))
        ));
    }

    #[test]
    fn thm11_base_case_is_seven_over_360() {
        let eval = evaluator();
        let report = check_two_insertion_membership(0, &eval, DEFAULT_QMAX).unwrap();
        assert!(report.accepted);
        assert_eq!(report.pi_power, 4);
        assert_eq!(
            report.reconstruction.rational(),
            BigRational::new(BigInt::from(7), BigInt::from(360))
        );
    }

    #[test]
    fn eq6_degenerate_case() {
        let eval = evaluator();
        let report = check_two_insertion_expansion(0, &eval).unwrap();
        assert!(report.holds, "{report}");
    }

    #[test]
    fn two_insertion_rationals_are_stable() {
        // Frozen from runs where the literal sum, the four-term expansion,
        // and the reconstruction agreed independently.
        let eval = evaluator();
        for (n, num, den) in [
            (0u32, 7i64, 360i64),
            (1, 131, 129_600),
            (2, 5_388_413, 217_945_728_000),
        ] {
            let report = check_two_insertion_membership(n, &eval, DEFAULT_QMAX).unwrap();
            assert!(report.accepted);
            assert_eq!(
                report.reconstruction.rational(),
                BigRational::new(BigInt::from(num), BigInt::from(den)),
                "two-insertion sum at n={n}"
            );
        }
    }

    #[test]
    fn eq1_examples() {
        let eval = evaluator();
        // (n, m) = (1, 0): zeta(3,1) = pi^4/360.
        let r = check_insertion_closed_form(1, 0, &eval).unwrap();
        assert!(r.holds, "{r}");
        // (n, m) = (0, 1): zeta(2) = pi^2/6.
        let r = check_insertion_closed_form(0, 1, &eval).unwrap();
        assert!(r.holds, "{r}");
        // (n, m) = (1, 1): three-term sum equals pi^6/5040.
        let r = check_insertion_closed_form(1, 1, &eval).unwrap();
        assert!(r.holds, "{r}");
        let expected = eval
            .rational_pi_multiple(&BigRational::new(BigInt::one(), BigInt::from(5040)), 6);
        assert!(r.lhs.abs_diff_f64(&expected) < 1e-40);
        assert!(check_insertion_closed_form(0, 0, &eval).is_err());
    }

    #[test]
    fn conj45_base_cases() {
        let eval = evaluator();
        // A(0,0): 2 zeta*(3,1) = zeta*(2)^2.
        let r = check_product_form(ProductFormPart::A, 0, 0, &eval).unwrap();
        assert!(r.holds, "{r}");
        // B(0): zeta*(2) = zeta*(2), definitional.
        let r = check_product_form(ProductFormPart::B, 0, 0, &eval).unwrap();
        assert!(r.holds, "{r}");
        // C(1): zeta*(2,3,1) + zeta*(3,2,1) = zeta*(2) zeta*(2,2).
        let r = check_product_form(ProductFormPart::C, 1, 0, &eval).unwrap();
        assert!(r.holds, "{r}");
        assert!(check_product_form(ProductFormPart::C, 0, 0, &eval).is_err());
    }

    #[test]
    fn bernoulli_convolution_exact_small_cases() {
        // n = 1: both sides equal -1/12.
        assert!(bernoulli_convolution_exact(1));
        assert!(bernoulli_convolution_exact(2));
        for n in 3..=10 {
            assert!(bernoulli_convolution_exact(n), "exact convolution fails at n={n}");
        }
    }

    #[test]
    fn prop51_numeric_small_case() {
        let eval = evaluator();
        let report = check_symmetrized_product(1, Some(&eval)).unwrap();
        assert!(report.exact_holds);
        let numeric = report.numeric.unwrap();
        assert!(numeric.holds, "{numeric}");
    }

    #[test]
    fn cyclic_sum_closed_form_case() {
        let eval = evaluator();
        // n = 2: zeta*(3,1) + zeta*(2,2) = 3 zeta(4).
        let report = check_cyclic_sum_instance(2, &eval).unwrap();
        assert!(report.holds, "{report}");
        assert!(check_cyclic_sum_instance(1, &eval).is_err());
        assert!(check_cyclic_sum_instance(7, &eval).is_err());
    }
}
