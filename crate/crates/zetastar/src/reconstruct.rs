//! Deciding membership in `Q * pi^w` from a high-precision value.
//!
//! The candidate ratio `v / pi^w` is held as an exact rational (the value
//! is decimal fixed-point), and its continued-fraction convergents are
//! walked until one is close enough to accept or the denominator budget is
//! exhausted. The acceptance band couples to the evaluator's reported
//! error, so imprecise inputs are refused rather than over-interpreted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::{pi, HighPrecReal, PrecisionConfig};

/// Default denominator budget: covers factorial-scale denominators at desk
/// weights while keeping 50-digit false positives improbable (acceptance
/// band ~1e-40 against convergent spacing ~1/q^2).
pub const DEFAULT_QMAX: u128 = 1_000_000_000_000_000_000;

#[derive(Clone, Debug)]
pub struct ReconstructionResult {
    pub numerator: BigInt,
    pub denominator: BigInt,
    /// |v / pi^w - p/q|, converted from the exact residual.
    pub residual: f64,
    pub accepted: bool,
    pub qmax_used: u128,
}

impl ReconstructionResult {
    pub fn rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator.clone())
    }
}

impl std::fmt::Display for ReconstructionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{} (residual {:.3e}, {})",
            self.numerator,
            self.denominator,
            self.residual,
            if self.accepted { "accepted" } else { "rejected" }
        )
    }
}

/// Recover `p/q` with `v ~= (p/q) * pi^w`.
///
/// Accepts the first continued-fraction convergent `p/q` of `v / pi^w`
/// with `q <= qmax` and residual within
/// `max(10^(guard - digits), 2 * v.err / pi^w)`. A rejection still reports
/// the best convergent seen, for inspection only.
pub fn reconstruct_pi_power(
    v: &HighPrecReal,
    w: u32,
    cfg: &PrecisionConfig,
    qmax: u128,
) -> Result<ReconstructionResult> {
    cfg.validate()?;
    if qmax == 0 {
        return Err(Error::InvalidArgument("qmax must be positive".into()));
    }
    let scale = cfg.working_scale();
    if v.scale() != scale {
        return Err(Error::InvalidArgument(format!(
            "value scale {} does not match configured working scale {scale}",
            v.scale()
        )));
    }
    let pi_w = if w == 0 { crate::numerics::fixed::BigFixed::one(scale) } else { pi(scale).pow(w) };
    let pi_w_f64 = pi_w.to_f64();
    // Non-finite error bounds are refused along with oversized ones.
    if !v.err().is_finite() || v.err() >= 10f64.powi(-(cfg.guard as i32)) * pi_w_f64 {
        return Err(Error::PrecisionInsufficient(format!(
            "value error {:.3e} is too large against pi^{w}",
            v.err()
        )));
    }

    let ratio = v.value().div(&pi_w).to_rational();
    let threshold_f64 =
        (10f64.powi(cfg.guard as i32 - cfg.digits as i32)).max(2.0 * v.err() / pi_w_f64);
    let threshold = BigRational::from_float(threshold_f64)
        .unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(10u32).pow(scale)));
    let qmax_int = BigInt::from(qmax);

    let mut best: Option<(BigInt, BigInt, BigRational)> = None;
    for (p, q) in Convergents::new(ratio.clone()) {
        if q > qmax_int {
            break;
        }
        let residual = (&ratio - BigRational::new(p.clone(), q.clone())).abs();
        let is_better = best.as_ref().is_none_or(|(_, _, r)| residual < *r);
        if is_better {
            best = Some((p.clone(), q.clone(), residual.clone()));
        }
        if residual <= threshold {
            return Ok(ReconstructionResult {
                numerator: p,
                denominator: q,
                residual: residual.to_f64().unwrap_or(0.0),
                accepted: true,
                qmax_used: qmax,
            });
        }
    }
    let (numerator, denominator, residual) =
        best.expect("continued fraction yields at least one convergent");
    Ok(ReconstructionResult {
        numerator,
        denominator,
        residual: residual.to_f64().unwrap_or(0.0),
        accepted: false,
        qmax_used: qmax,
    })
}

/// Continued-fraction convergents of an exact rational, in lowest terms.
struct Convergents {
    // Euclid state: remainder pair.
    num: BigInt,
    den: BigInt,
    // Convergent recurrence state.
    p_prev: BigInt,
    p_curr: BigInt,
    q_prev: BigInt,
    q_curr: BigInt,
    done: bool,
}

impl Convergents {
    fn new(r: BigRational) -> Self {
        // Seeds p_{-2}/q_{-2} = 0/1 and p_{-1}/q_{-1} = 1/0.
        Convergents {
            num: r.numer().clone(),
            den: r.denom().clone(),
            p_prev: BigInt::zero(),
            p_curr: BigInt::one(),
            q_prev: BigInt::one(),
            q_curr: BigInt::zero(),
            done: false,
        }
    }
}

impl Iterator for Convergents {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<(BigInt, BigInt)> {
        if self.done || self.den.is_zero() {
            return None;
        }
        let (a, r) = self.num.div_mod_floor(&self.den);
        let p_next = &a * &self.p_curr + &self.p_prev;
        let q_next = &a * &self.q_curr + &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p_curr, p_next);
        self.q_prev = std::mem::replace(&mut self.q_curr, q_next);
        self.num = std::mem::replace(&mut self.den, r);
        if self.den.is_zero() {
            self.done = true;
        }
        Some((self.p_curr.clone(), self.q_curr.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::fixed::BigFixed;
    use crate::numerics::Evaluator;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn convergents_of_simple_rationals() {
        let r = BigRational::new(BigInt::from(355), BigInt::from(113));
        let all: Vec<(BigInt, BigInt)> = Convergents::new(r).collect();
        assert_eq!(all.last().unwrap(), &(BigInt::from(355), BigInt::from(113)));
        let r = BigRational::new(BigInt::from(-7), BigInt::from(3));
        let all: Vec<(BigInt, BigInt)> = Convergents::new(r.clone()).collect();
        let (p, q) = all.last().unwrap();
        assert_eq!(BigRational::new(p.clone(), q.clone()), r);
    }

    #[test]
    fn recovers_zetastar_three_one() {
        // zeta*(3,1) = pi^4 / 72.
        let eval = Evaluator::new(cfg()).unwrap();
        let v = eval.mzsv(&crate::words::Composition::new(vec![3, 1]).unwrap()).unwrap();
        let rec = reconstruct_pi_power(&v, 4, &cfg(), DEFAULT_QMAX).unwrap();
        assert!(rec.accepted);
        assert_eq!(rec.numerator, BigInt::one());
        assert_eq!(rec.denominator, BigInt::from(72));
        assert!(rec.residual < 1e-40);
    }

    #[test]
    fn recovers_euler_value() {
        let eval = Evaluator::new(cfg()).unwrap();
        let q = crate::numerics::zeta_even(4).unwrap();
        let v = eval.rational_pi_multiple(&q, 4);
        let rec = reconstruct_pi_power(&v, 4, &cfg(), DEFAULT_QMAX).unwrap();
        assert!(rec.accepted);
        assert_eq!(rec.rational(), q);
    }

    #[test]
    fn zero_reconstructs_to_zero() {
        let scale = cfg().working_scale();
        let v = HighPrecReal::new(BigFixed::zero(scale), 1e-40);
        let rec = reconstruct_pi_power(&v, 6, &cfg(), DEFAULT_QMAX).unwrap();
        assert!(rec.accepted);
        assert!(rec.numerator.is_zero());
        assert_eq!(rec.denominator, BigInt::one());
    }

    #[test]
    fn imprecise_input_is_refused() {
        let scale = cfg().working_scale();
        let v = HighPrecReal::new(BigFixed::from_i64(3, scale), 1.0);
        assert!(matches!(
            reconstruct_pi_power(&v, 2, &cfg(), DEFAULT_QMAX),
            Err(Error::PrecisionInsufficient(_))
        ));
    }

    #[test]
    fn rejection_reports_best_convergent_without_fabricating() {
        // sqrt(2) is not a rational multiple of pi^0 within tiny qmax.
        let scale = cfg().working_scale();
        let v = HighPrecReal::new(BigFixed::from_i64(2, scale).sqrt(), 1e-55);
        let rec = reconstruct_pi_power(&v, 0, &cfg(), 1000).unwrap();
        assert!(!rec.accepted);
        assert!(rec.denominator <= BigInt::from(1000));
        assert!(rec.residual > 1e-9); // far outside the acceptance band
    }

    #[test]
    fn perturbation_within_band_does_not_change_result() {
        let eval = Evaluator::new(cfg()).unwrap();
        let q = BigRational::new(BigInt::from(7), BigInt::from(360));
        let v = eval.rational_pi_multiple(&q, 4);
        let bump = BigFixed::from_rational(
            &BigRational::new(BigInt::one(), BigInt::from(10u32).pow(42)),
            cfg().working_scale(),
        );
        let perturbed = HighPrecReal::new(v.value().add(&bump), v.err() + 1e-42);
        let rec = reconstruct_pi_power(&perturbed, 4, &cfg(), DEFAULT_QMAX).unwrap();
        assert!(rec.accepted);
        assert_eq!(rec.rational(), q);
    }
}
