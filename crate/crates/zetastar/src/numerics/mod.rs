//! High-precision numerical evaluation of admissible indices.
//!
//! Two independent evaluation routes: [`Evaluator::mzv`] uses the
//! geometric-convergence convolution at 1/2 over decimal fixed-point
//! arithmetic, while [`mzv_oracle`] sums the defining series directly in
//! compensated `f64` with a tail correction. The fast route is validated
//! against the oracle, never trusted alone. Star values go through the
//! transfer map `d` (a sum of at most `2^{n-1}` plain values), with the
//! direct star series available as a low-precision spot check.

pub mod cache;
pub mod fixed;
mod holder;
mod oracle;

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::maps::dmap_index;
use crate::poly::NcPoly;
use crate::words::{composition_from_word, Composition, Word};
use cache::{ValueCache, ValueCacheEntry};
use fixed::BigFixed;

/// Decimal-digit budget for evaluations.
///
/// `digits` is the published target, `guard` the extra working digits, and
/// `oracle_digits` the (low) target for the direct-series oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionConfig {
    pub digits: u32,
    pub guard: u32,
    pub oracle_digits: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig { digits: 50, guard: 10, oracle_digits: 8 }
    }
}

impl PrecisionConfig {
    pub fn with_digits(digits: u32) -> Self {
        PrecisionConfig { digits, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.digits < 15 {
            return Err(Error::InvalidArgument("digits must be >= 15".into()));
        }
        // Error bounds are tracked in f64; past ~250 digits they would
        // underflow, so the budget is capped there.
        if self.digits > 250 {
            return Err(Error::InvalidArgument("digits must be <= 250".into()));
        }
        if self.guard < 5 || self.guard > 50 {
            return Err(Error::InvalidArgument("guard must be in 5..=50".into()));
        }
        if self.oracle_digits < 5 || self.oracle_digits > 10 {
            return Err(Error::InvalidArgument("oracle_digits must be in 5..=10".into()));
        }
        Ok(())
    }

    /// Working precision: digits + guard.
    pub fn working_scale(&self) -> u32 {
        self.digits + self.guard
    }
}

/// A high-precision value together with an upper bound on its absolute
/// error. Arithmetic propagates the bound conservatively.
#[derive(Clone, Debug)]
pub struct HighPrecReal {
    value: BigFixed,
    err: f64,
}

impl HighPrecReal {
    pub fn new(value: BigFixed, err: f64) -> Self {
        debug_assert!(err >= 0.0 && err.is_finite());
        HighPrecReal { value, err }
    }

    pub fn exact_i64(v: i64, scale: u32) -> Self {
        HighPrecReal { value: BigFixed::from_i64(v, scale), err: 0.0 }
    }

    pub fn from_rational(q: &BigRational, scale: u32) -> Self {
        let value = BigFixed::from_rational(q, scale);
        HighPrecReal { err: 0.5 * value.ulp(), value }
    }

    pub fn value(&self) -> &BigFixed {
        &self.value
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn scale(&self) -> u32 {
        self.value.scale()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn add(&self, other: &Self) -> Self {
        HighPrecReal { value: self.value.add(&other.value), err: self.err + other.err }
    }

    pub fn sub(&self, other: &Self) -> Self {
        HighPrecReal { value: self.value.sub(&other.value), err: self.err + other.err }
    }

    pub fn neg(&self) -> Self {
        HighPrecReal { value: self.value.neg(), err: self.err }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let value = self.value.mul(&other.value);
        let err = self.err * other.value.to_f64().abs()
            + other.err * self.value.to_f64().abs()
            + self.err * other.err
            + value.ulp();
        HighPrecReal { value, err }
    }

    pub fn scaled(&self, q: &BigRational) -> Self {
        let factor = BigFixed::from_rational(q, self.value.scale());
        let value = self.value.mul(&factor);
        // The rounding of the factor scales with |self|.
        let err = self.err * q.to_f64().unwrap_or(f64::INFINITY).abs()
            + (0.5 * self.value.to_f64().abs() + 2.0) * value.ulp();
        HighPrecReal { value, err }
    }

    /// |self - other| as f64, for tolerance checks.
    pub fn abs_diff_f64(&self, other: &Self) -> f64 {
        self.value.sub(&other.value).to_f64().abs()
    }

    /// Value rounded to `digits` decimals together with the published error
    /// (the internal bound plus the final rounding).
    pub fn published(&self, digits: u32) -> (String, f64) {
        let rounded = self.value.rescale(digits.min(self.value.scale()));
        (rounded.to_decimal_string(), self.err + 0.5 * rounded.ulp())
    }
}

static PI_CACHE: OnceLock<Mutex<HashMap<u32, BigFixed>>> = OnceLock::new();

/// Pi at the given scale, by the arithmetic-geometric-mean iteration
/// (quadratically convergent); computed once per scale and cached.
pub fn pi(scale: u32) -> BigFixed {
    let cache = PI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("pi cache poisoned").get(&scale) {
        return hit.clone();
    }
    let work = scale + 15;
    let one = BigFixed::one(work);
    let mut a = one.clone();
    let mut b = BigFixed::from_rational(&BigRational::new(1.into(), 2.into()), work).sqrt();
    let mut t = BigFixed::from_rational(&BigRational::new(1.into(), 4.into()), work);
    let mut p = one.clone();
    for _ in 0..64 {
        let an = a.add(&b).halve();
        let diff = a.sub(&an);
        if diff.abs().to_f64() < 10f64.powi(-(work as i32)) * 4.0 {
            a = an;
            break;
        }
        b = a.mul(&b).sqrt();
        t = t.sub(&p.mul(&diff).mul(&diff));
        p = p.mul_i64(2);
        a = an;
    }
    let sum = a.add(&b);
    let value = sum.mul(&sum).div(&t.mul_i64(4)).rescale(scale);
    cache.lock().expect("pi cache poisoned").insert(scale, value.clone());
    value
}

static BERNOULLI_CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// Exact Bernoulli number `B_n` (convention `B_1 = -1/2`), by the
/// recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli(n: u32) -> BigRational {
    let cache = BERNOULLI_CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut values = cache.lock().expect("bernoulli cache poisoned");
    while values.len() <= n as usize {
        let m = values.len() as u32;
        let mut acc = BigRational::zero();
        for (k, b) in values.iter().enumerate() {
            let c = binomial(BigInt::from(m + 1), BigInt::from(k as u32));
            acc += BigRational::from_integer(c) * b;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(m + 1));
        values.push(next);
    }
    values[n as usize].clone()
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact rational `q` with `zeta(2n) = q * pi^{2n}`:
/// `q = (-1)^{n+1} B_{2n} 2^{2n} / (2 (2n)!)`.
pub fn zeta_even(two_n: u32) -> Result<BigRational> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "zeta_even needs an even argument >= 2, got {two_n}"
        )));
    }
    let n = two_n / 2;
    let sign = if n % 2 == 1 { BigRational::one() } else { -BigRational::one() };
    let num = sign * bernoulli(two_n) * BigRational::from_integer(BigInt::from(2u32).pow(two_n));
    Ok(num / BigRational::from_integer(factorial(two_n) * 2))
}

/// Exact rational `q` with `zeta*({2}^n) = q * pi^{2n}`:
/// the closed form `2 (1 - 2^{1-2n}) zeta(2n)`.
pub fn zetastar_twos(n: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::InvalidArgument("zetastar_twos needs n >= 1".into()));
    }
    let factor = BigRational::from_integer(BigInt::from(2))
        - BigRational::new(BigInt::from(4), BigInt::from(2u32).pow(2 * n));
    Ok(factor * zeta_even(2 * n)?)
}

/// Exact rational `q` with `zeta({2}^m) = q * pi^{2m}`: `1 / (2m+1)!`.
pub fn zeta_twos(m: u32) -> BigRational {
    BigRational::new(BigInt::one(), factorial(2 * m + 1))
}

/// Direct-series oracle value of an admissible index.
pub fn mzv_oracle(k: &Composition, cfg: &PrecisionConfig) -> Result<HighPrecReal> {
    cfg.validate()?;
    let (value, err) = oracle::mzv_oracle_f64(k, cfg.oracle_digits)?;
    Ok(real_from_f64(value, err, cfg.working_scale()))
}

/// Direct-series oracle value of an admissible star index.
pub fn mzsv_oracle(k: &Composition, cfg: &PrecisionConfig) -> Result<HighPrecReal> {
    cfg.validate()?;
    let (value, err) = oracle::mzsv_oracle_f64(k, cfg.oracle_digits)?;
    Ok(real_from_f64(value, err, cfg.working_scale()))
}

fn real_from_f64(value: f64, err: f64, scale: u32) -> HighPrecReal {
    let q = BigRational::from_float(value).unwrap_or_else(BigRational::zero);
    HighPrecReal::new(BigFixed::from_rational(&q, scale), err + 10f64.powi(-(scale as i32)))
}

/// Shared evaluation engine: holds the precision budget, the per-word
/// series memo, per-index memos, and (optionally) the persistent cache.
/// All interior state is mutex-guarded, so a shared reference can be used
/// from several threads.
#[derive(Debug)]
pub struct Evaluator {
    cfg: PrecisionConfig,
    li_memo: Mutex<HashMap<Word, (BigFixed, f64)>>,
    mzv_memo: Mutex<HashMap<Composition, HighPrecReal>>,
    mzsv_memo: Mutex<HashMap<Composition, HighPrecReal>>,
    store: Option<Mutex<ValueCache>>,
}

impl Evaluator {
    pub fn new(cfg: PrecisionConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Evaluator {
            cfg,
            li_memo: Mutex::new(HashMap::new()),
            mzv_memo: Mutex::new(HashMap::new()),
            mzsv_memo: Mutex::new(HashMap::new()),
            store: None,
        })
    }

    /// Engine backed by the persistent cache in `dir`.
    pub fn with_cache_dir(cfg: PrecisionConfig, dir: &Path) -> Result<Self> {
        let mut eval = Evaluator::new(cfg)?;
        eval.store = Some(Mutex::new(ValueCache::open(dir)?));
        Ok(eval)
    }

    pub fn config(&self) -> &PrecisionConfig {
        &self.cfg
    }

    pub fn working_scale(&self) -> u32 {
        self.cfg.working_scale()
    }

    pub fn pi(&self) -> BigFixed {
        pi(self.cfg.working_scale())
    }

    pub fn pi_power(&self, w: u32) -> BigFixed {
        if w == 0 {
            return BigFixed::one(self.cfg.working_scale());
        }
        pi(self.cfg.working_scale()).pow(w)
    }

    /// Exact rational multiple of a power of pi, as a tracked value.
    pub fn rational_pi_multiple(&self, q: &BigRational, w: u32) -> HighPrecReal {
        let p = self.pi_power(w);
        let factor = BigFixed::from_rational(q, self.cfg.working_scale());
        let value = p.mul(&factor);
        // The power chain amplifies each rounding by the running magnitude,
        // so the bound carries a factor of pi^w (values exceed one).
        let q_abs = q.to_f64().unwrap_or(0.0).abs();
        let err = (2.0 * w as f64 + 4.0) * value.ulp() * (p.to_f64() * (1.0 + q_abs) + 1.0);
        HighPrecReal::new(value, err)
    }

    pub fn exact_one(&self) -> HighPrecReal {
        HighPrecReal::exact_i64(1, self.cfg.working_scale())
    }

    pub fn exact_zero(&self) -> HighPrecReal {
        HighPrecReal::exact_i64(0, self.cfg.working_scale())
    }

    /// Fast evaluation of an admissible index.
    pub fn mzv(&self, k: &Composition) -> Result<HighPrecReal> {
        if !k.is_admissible() {
            return Err(Error::Inadmissible(k.clone()));
        }
        if k.is_empty() {
            return Ok(self.exact_one());
        }
        if let Some(hit) = self.mzv_memo.lock().expect("mzv memo").get(k) {
            return Ok(hit.clone());
        }
        if let Some(hit) = self.store_get(false, k) {
            self.mzv_memo.lock().expect("mzv memo").insert(k.clone(), hit.clone());
            return Ok(hit);
        }
        let scale = self.cfg.working_scale();
        let word = crate::words::word_from_composition(k);
        let terms = holder::series_terms(scale);
        let (value, err) = holder::eval_admissible(&word, scale, |w| {
            if let Some(hit) = self.li_memo.lock().expect("li memo").get(w) {
                return hit.clone();
            }
            let computed = holder::li_half(w, scale, terms);
            self.li_memo.lock().expect("li memo").insert(w.clone(), computed.clone());
            computed
        });
        let out = HighPrecReal::new(value, err);
        self.store_put(false, k, &out);
        self.mzv_memo.lock().expect("mzv memo").insert(k.clone(), out.clone());
        Ok(out)
    }

    /// Star evaluation through the transfer map: `d` expands the index
    /// into at most `2^{n-1}` plain indices, which are summed.
    pub fn mzsv(&self, k: &Composition) -> Result<HighPrecReal> {
        if !k.is_admissible() {
            return Err(Error::Inadmissible(k.clone()));
        }
        if k.is_empty() {
            return Ok(self.exact_one());
        }
        if let Some(hit) = self.mzsv_memo.lock().expect("mzsv memo").get(k) {
            return Ok(hit.clone());
        }
        if let Some(hit) = self.store_get(true, k) {
            self.mzsv_memo.lock().expect("mzsv memo").insert(k.clone(), hit.clone());
            return Ok(hit);
        }
        let expansion = dmap_index(k);
        let mut acc = self.exact_zero();
        for (word, coeff) in expansion.terms() {
            let index = composition_from_word(word).expect("d preserves H0");
            let value = self.mzv(&index)?;
            acc = acc.add(&value.scaled(coeff));
        }
        self.store_put(true, k, &acc);
        self.mzsv_memo.lock().expect("mzsv memo").insert(k.clone(), acc.clone());
        Ok(acc)
    }

    /// Q-linear evaluation of an `H0` polynomial.
    pub fn eval_poly(&self, p: &NcPoly) -> Result<HighPrecReal> {
        let mut acc = self.exact_zero();
        for (word, coeff) in p.terms() {
            if !word.in_h0() {
                return Err(Error::DivergentEvaluation(word.clone()));
            }
            let index = composition_from_word(word).expect("H0 words are index words");
            let value = self.mzv(&index)?;
            acc = acc.add(&value.scaled(coeff));
        }
        Ok(acc)
    }

    fn store_get(&self, star: bool, k: &Composition) -> Option<HighPrecReal> {
        let store = self.store.as_ref()?;
        let entry = store.lock().expect("value cache").get(star, k, self.cfg.digits)?;
        let parsed = BigFixed::parse_decimal(&entry.value, entry.digits).ok()?;
        let value = parsed.rescale(self.cfg.working_scale());
        Some(HighPrecReal::new(value, 0.6 * 10f64.powi(-(entry.digits as i32))))
    }

    fn store_put(&self, star: bool, k: &Composition, value: &HighPrecReal) {
        if let Some(store) = &self.store {
            let entry = ValueCacheEntry {
                star,
                index: k.clone(),
                digits: self.cfg.digits,
                value: value.value().rescale(self.cfg.digits).to_decimal_string(),
            };
            if let Err(err) = store.lock().expect("value cache").put(entry) {
                eprintln!("warning: failed to update value cache: {err}");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{harmonic, shuffle};
    use crate::words::h0_words_of_weight;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_to_fifty_digits() {
        let p = pi(50);
        assert_eq!(
            p.to_decimal_string(),
            "3.14159265358979323846264338327950288419716939937511"
        );
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), BigRational::one());
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), BigRational::zero());
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn zeta_even_values() {
        assert_eq!(zeta_even(2).unwrap(), rat(1, 6));
        assert_eq!(zeta_even(4).unwrap(), rat(1, 90));
        assert_eq!(zeta_even(6).unwrap(), rat(1, 945));
        assert_eq!(zeta_even(8).unwrap(), rat(1, 9450));
        assert!(zeta_even(3).is_err());
        assert!(zeta_even(0).is_err());
    }

    #[test]
    fn zetastar_twos_values() {
        assert_eq!(zetastar_twos(1).unwrap(), rat(1, 6));
        assert_eq!(zetastar_twos(2).unwrap(), rat(7, 360));
        assert_eq!(zetastar_twos(3).unwrap(), rat(31, 15120));
        assert!(zetastar_twos(0).is_err());
    }

    #[test]
    fn mzv_fast_matches_closed_forms() {
        let eval = Evaluator::new(PrecisionConfig::default()).unwrap();
        // zeta({2}^2) = pi^4 / 120.
        let got = eval.mzv(&comp(&[2, 2])).unwrap();
        let expected = eval.rational_pi_multiple(&rat(1, 120), 4);
        assert!(got.abs_diff_f64(&expected) < 1e-45);
        // zeta(4) = pi^4 / 90.
        let got = eval.mzv(&comp(&[4])).unwrap();
        let expected = eval.rational_pi_multiple(&rat(1, 90), 4);
        assert!(got.abs_diff_f64(&expected) < 1e-45);
        // zeta({3,1}^2) = 2 pi^8 / 10!.
        let got = eval.mzv(&comp(&[3, 1, 3, 1])).unwrap();
        let expected = eval.rational_pi_multiple(&rat(2, 3628800), 8);
        assert!(got.abs_diff_f64(&expected) < 1e-45);
    }

    #[test]
    fn mzsv_through_transfer_map() {
        let eval = Evaluator::new(PrecisionConfig::default()).unwrap();
        // zeta*(3,1) = pi^4 / 72.
        let got = eval.mzsv(&comp(&[3, 1])).unwrap();
        let expected = eval.rational_pi_multiple(&rat(1, 72), 4);
        assert!(got.abs_diff_f64(&expected) < 1e-45);
        // zeta*(2,2) = 7 pi^4 / 360 (closed form route).
        let got = eval.mzsv(&comp(&[2, 2])).unwrap();
        let expected = eval.rational_pi_multiple(&zetastar_twos(2).unwrap(), 4);
        assert!(got.abs_diff_f64(&expected) < 1e-45);
        // zeta*(k1, k2) = zeta(k1, k2) + zeta(k1+k2).
        let lhs = eval.mzsv(&comp(&[4, 3])).unwrap();
        let rhs = eval.mzv(&comp(&[4, 3])).unwrap().add(&eval.mzv(&comp(&[7])).unwrap());
        assert!(lhs.abs_diff_f64(&rhs) < 1e-50);
    }

    #[test]
    fn mzsv_agrees_with_direct_star_series() {
        let cfg = PrecisionConfig::default();
        let eval = Evaluator::new(cfg).unwrap();
        for parts in [vec![2u32, 2], vec![3, 1], vec![2, 1, 2], vec![4, 1, 1]] {
            let k = comp(&parts);
            let fast = eval.mzsv(&k).unwrap();
            let spot = mzsv_oracle(&k, &cfg).unwrap();
            assert!(
                fast.abs_diff_f64(&spot) < 1e-6,
                "star index {k}: fast {} vs series {}",
                fast.to_f64(),
                spot.to_f64()
            );
        }
    }

    #[test]
    fn eval_poly_is_a_harmonic_homomorphism() {
        let eval = Evaluator::new(PrecisionConfig::default()).unwrap();
        let u = NcPoly::from_word(crate::words::word_from_composition(&comp(&[2])));
        let product = harmonic(&u, &u).unwrap();
        let lhs = eval.eval_poly(&product).unwrap();
        let z2 = eval.mzv(&comp(&[2])).unwrap();
        let rhs = z2.mul(&z2);
        assert!(lhs.abs_diff_f64(&rhs) < 1e-50);
        // And the shuffle is multiplicative on H0 as well.
        let w = NcPoly::from_word(crate::words::word_from_composition(&comp(&[2, 1])));
        let sh = shuffle(&u, &w);
        let lhs = eval.eval_poly(&sh).unwrap();
        let rhs = eval.mzv(&comp(&[2])).unwrap().mul(&eval.mzv(&comp(&[2, 1])).unwrap());
        assert!(lhs.abs_diff_f64(&rhs) < 1e-50);
    }

    #[test]
    fn eval_poly_rejects_divergent_terms() {
        let eval = Evaluator::new(PrecisionConfig::default()).unwrap();
        let bad = NcPoly::from_word("yxy".parse().unwrap());
        assert!(matches!(eval.eval_poly(&bad), Err(Error::DivergentEvaluation(_))));
    }

    #[test]
    fn fast_evaluator_validated_against_oracle_spot() {
        let cfg = PrecisionConfig::default();
        let eval = Evaluator::new(cfg).unwrap();
        for weight in 2..=5 {
            for word in h0_words_of_weight(weight) {
                let k = composition_from_word(&word).unwrap();
                let fast = eval.mzv(&k).unwrap();
                let slow = mzv_oracle(&k, &cfg).unwrap();
                assert!(
                    fast.abs_diff_f64(&slow) < 1e-7,
                    "index {k}: fast {} vs oracle {}",
                    fast.to_f64(),
                    slow.to_f64()
                );
            }
        }
    }

    #[test]
    fn error_bounds_are_honest_under_digit_increase() {
        let base = Evaluator::new(PrecisionConfig::default()).unwrap();
        let more = Evaluator::new(PrecisionConfig {
            digits: 70,
            ..PrecisionConfig::default()
        })
        .unwrap();
        for parts in [vec![2u32], vec![2, 1], vec![3, 1, 2]] {
            let k = comp(&parts);
            let a = base.mzv(&k).unwrap();
            let b = more.mzv(&k).unwrap();
            // Compare exactly at the lower working scale: the re-rounded
            // difference must sit inside the reported bound.
            let b_down = b.value().rescale(a.scale());
            let diff = a.value().sub(&b_down).to_f64().abs();
            assert!(
                diff < a.err() + 0.5 * b_down.ulp(),
                "index {k}: diff {diff:e} vs err {:e}",
                a.err()
            );
        }
    }

    #[test]
    fn evaluator_is_shareable_across_threads() {
        fn assert_sync<T: Sync + Send>() {}
        assert_sync::<Evaluator>();
        let eval = Evaluator::new(PrecisionConfig::default()).unwrap();
        std::thread::scope(|scope| {
            for parts in [vec![2u32], vec![2, 1], vec![3, 1]] {
                let eval = &eval;
                scope.spawn(move || {
                    eval.mzv(&comp(&parts)).unwrap();
                });
            }
        });
        assert!(eval.mzv(&comp(&[2])).unwrap().err() < 1e-50);
    }

    #[test]
    fn persistent_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = PrecisionConfig::default();
        let k = comp(&[3, 1]);
        let first = {
            let eval = Evaluator::with_cache_dir(cfg, dir.path()).unwrap();
            eval.mzv(&k).unwrap()
        };
        let second = {
            let eval = Evaluator::with_cache_dir(cfg, dir.path()).unwrap();
            eval.mzv(&k).unwrap()
        };
        assert_eq!(first.published(50).0, second.published(50).0);
        // A higher-digit engine must recompute rather than trust the entry.
        let eval80 = Evaluator::with_cache_dir(
            PrecisionConfig { digits: 80, ..PrecisionConfig::default() },
            dir.path(),
        )
        .unwrap();
        let third = eval80.mzv(&k).unwrap();
        assert_eq!(third.published(50).0, first.published(50).0);
        assert!(third.err() < 1e-60);
    }
}
