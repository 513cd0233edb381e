//! Slow, direct-series oracle for low-precision cross-checks.
//!
//! The nested sum is evaluated literally: the outer variable runs to a
//! cutoff `M` while the inner partial sums are maintained incrementally.
//! The neglected outer tail `sum_{m > M} m^{-k_1} S(m)` is corrected by
//! fitting the inner partial sum `S` with a polynomial in `ln m` through
//! checkpoints recorded at `M/2^t` (inner sums grow at most like a power
//! of `ln m`), then summing each `ln^d(m) m^{-k_1}` tail in closed form
//! with Euler-Maclaurin corrections. Everything runs in compensated `f64`;
//! this route is independent of the fixed-point convolution evaluator it
//! validates.

use crate::error::{Error, Result};
use crate::words::Composition;

/// Largest weight the oracle is intended for.
pub const ORACLE_WEIGHT_CAP: u32 = 8;

/// Neumaier compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn cutoff(oracle_digits: u32) -> u64 {
    let m = 10f64.powi(oracle_digits as i32 - 1);
    m.clamp(1e5, 3e7) as u64
}

/// Direct-series value of an admissible index (strict inequalities), with
/// an error estimate. Intended for weights up to [`ORACLE_WEIGHT_CAP`].
pub fn mzv_oracle_f64(k: &Composition, oracle_digits: u32) -> Result<(f64, f64)> {
    oracle_series(k, oracle_digits, false)
}

/// Direct-series value of an admissible zeta-star index (weak
/// inequalities), for spot checks of the transfer-map route.
pub fn mzsv_oracle_f64(k: &Composition, oracle_digits: u32) -> Result<(f64, f64)> {
    oracle_series(k, oracle_digits, true)
}

fn oracle_series(k: &Composition, oracle_digits: u32, star: bool) -> Result<(f64, f64)> {
    if !k.is_admissible() {
        return Err(Error::Inadmissible(k.clone()));
    }
    if k.weight() > ORACLE_WEIGHT_CAP {
        return Err(Error::WeightCapExceeded { requested: k.weight(), cap: ORACLE_WEIGHT_CAP });
    }
    if k.is_empty() {
        return Ok((1.0, 0.0));
    }
    let exps: Vec<i32> = k.parts().iter().map(|&p| p as i32).collect();
    let depth = exps.len();
    let m_max = cutoff(oracle_digits);

    // Fit degree: the inner partial sum grows like ln^r with r the number
    // of inner exponents equal to one (weak inequalities behave the same).
    let inner_ones = exps[1..].iter().filter(|&&e| e == 1).count();
    let degree = (inner_ones + 1).min(7);
    let checkpoints: Vec<u64> = (0..=degree as u32).rev().map(|t| m_max >> t).collect();

    let mut inner: Vec<Compensated> = vec![Compensated::default(); depth];
    let mut outer = Compensated::default();
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(checkpoints.len());
    let mut cp_iter = checkpoints.iter().copied().peekable();

    for m in 1..=m_max {
        let mf = m as f64;
        if star {
            // Weak inequalities: deeper levels update first so level t sees
            // the inclusive state of level t+1.
            for t in (1..depth).rev() {
                let deeper = if t + 1 < depth { inner[t].value() } else { 1.0 };
                inner[t - 1].add(mf.powi(-exps[t]) * deeper);
            }
            // With depth 1 there is no inner level; the factor is 1.
            let s = if depth > 1 { inner[0].value() } else { 1.0 };
            outer.add(mf.powi(-exps[0]) * s);
            if cp_iter.peek() == Some(&m) {
                cp_iter.next();
                samples.push((mf.ln(), s));
            }
        } else {
            // Strict inequalities: consume the exclusive state, then update
            // shallow-to-deep so each level sees the previous state of the
            // deeper one.
            let s = if depth > 1 { inner[0].value() } else { 1.0 };
            outer.add(mf.powi(-exps[0]) * s);
            if cp_iter.peek() == Some(&m) {
                cp_iter.next();
                samples.push((mf.ln(), s));
            }
            for t in 0..depth.saturating_sub(1) {
                let deeper = if t + 2 < depth { inner[t + 1].value() } else { 1.0 };
                inner[t].add(mf.powi(-exps[t + 1]) * deeper);
            }
        }
    }

    // For the star series the tail factor is S(m) inclusive of m; for the
    // strict series it is S(m) exclusive. Both are sampled consistently
    // with how the outer term consumed them.
    let (tail, tail_err) = tail_correction(&samples, exps[0], m_max as f64, star);
    let value = outer.value() + tail;
    let roundoff = 1e-14 * value.abs() + 1e-15;
    Ok((value, tail_err + roundoff))
}

/// Fit the sampled inner sums with a Newton polynomial in `ln m` and sum
/// the fitted tail in closed form. Returns (tail, error estimate).
fn tail_correction(samples: &[(f64, f64)], k1: i32, m: f64, star: bool) -> (f64, f64) {
    // Newton divided differences.
    let n = samples.len();
    let mut coeffs: Vec<f64> = samples.iter().map(|&(_, s)| s).collect();
    let us: Vec<f64> = samples.iter().map(|&(u, _)| u).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (us[i] - us[i - level]);
        }
    }
    // Expand to the power basis in u = ln m.
    let power = newton_to_power(&coeffs, &us);
    let full = fitted_tail(&power, k1, m, star);
    // Error estimate: redo the fit without the highest-order node.
    let est = if n >= 2 {
        let mut reduced: Vec<f64> = samples[1..].iter().map(|&(_, s)| s).collect();
        let rus: Vec<f64> = samples[1..].iter().map(|&(u, _)| u).collect();
        for level in 1..reduced.len() {
            for i in (level..reduced.len()).rev() {
                reduced[i] = (reduced[i] - reduced[i - 1]) / (rus[i] - rus[i - level]);
            }
        }
        let rp = newton_to_power(&reduced, &rus);
        let alt = fitted_tail(&rp, k1, m, star);
        (full - alt).abs() * 4.0 + 1e-13 * full.abs()
    } else {
        1e-13 * full.abs()
    };
    (full, est)
}

fn newton_to_power(coeffs: &[f64], us: &[f64]) -> Vec<f64> {
    let mut power = vec![0.0; coeffs.len()];
    let mut basis = vec![0.0; coeffs.len() + 1];
    basis[0] = 1.0; // running product prod (u - u_i) in power form
    for (i, &c) in coeffs.iter().enumerate() {
        for (p, b) in power.iter_mut().zip(basis.iter()) {
            *p += c * b;
        }
        // basis *= (u - us[i])
        if i + 1 < coeffs.len() {
            let mut next = vec![0.0; basis.len()];
            for d in 0..=i {
                next[d + 1] += basis[d];
                next[d] -= us[i] * basis[d];
            }
            basis = next;
        }
    }
    power
}

fn fitted_tail(power: &[f64], k1: i32, m: f64, star: bool) -> f64 {
    // Tail of sum_{m' > M} ln^d(m') m'^{-k1} weighted by the fit; the star
    // variant consumed S inclusively so its tail uses the same form (the
    // distinction is already encoded in the samples).
    let _ = star;
    power
        .iter()
        .enumerate()
        .map(|(d, &c)| c * log_power_tail(k1, d as i32, m))
        .sum()
}

/// `sum_{m > M} ln^d(m) / m^k` via Euler-Maclaurin with three correction
/// terms; `k >= 2`.
fn log_power_tail(k: i32, d: i32, m: f64) -> f64 {
    let integral = log_power_integral(k, d, m);
    let base: Symbolic = vec![(1.0, d, k)];
    let g = eval_symbolic(&base, m);
    let d1 = differentiate(&base);
    let g1 = eval_symbolic(&d1, m);
    let g3 = eval_symbolic(&differentiate(&differentiate(&d1)), m);
    integral - g / 2.0 - g1 / 12.0 + g3 / 720.0
}

/// `int_M^inf ln^d(t) t^{-k} dt` in closed form for `k >= 2`.
fn log_power_integral(k: i32, d: i32, m: f64) -> f64 {
    let km1 = (k - 1) as f64;
    let l = m.ln();
    let mut factor = 1.0; // d! / (d - i)!
    let mut sum = 0.0;
    for i in 0..=d {
        sum += factor * l.powi(d - i) / km1.powi(i);
        factor *= (d - i) as f64;
    }
    m.powf(1.0 - k as f64) / km1 * sum
}

/// Terms `coef * ln^dpow(t) * t^{-kpow}`.
type Symbolic = Vec<(f64, i32, i32)>;

fn differentiate(terms: &Symbolic) -> Symbolic {
    let mut out: Symbolic = Vec::with_capacity(terms.len() * 2);
    for &(c, d, k) in terms {
        if d > 0 {
            out.push((c * d as f64, d - 1, k + 1));
        }
        out.push((-c * k as f64, d, k + 1));
    }
    out
}

fn eval_symbolic(terms: &Symbolic, m: f64) -> f64 {
    let l = m.ln();
    terms.iter().map(|&(c, d, k)| c * l.powi(d) * m.powf(-k as f64)).sum()
}
