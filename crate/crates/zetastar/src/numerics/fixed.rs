//! Decimal fixed-point arithmetic over big integers.
//!
//! A `BigFixed` stores `mantissa * 10^{-scale}` with the scale fixed per
//! computation (working precision = digits + guard). Each rounding
//! operation is off by at most one unit in the last place, which the
//! callers account for in their error budgets. Decimal scaling keeps
//! printing, parsing and the cache format exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigFixed {
    mant: BigInt,
    scale: u32,
}

pub fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

/// Round `n / d` to the nearest integer (ties away from zero). `d > 0`.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_rem(d);
    if &r.abs() * 2 >= *d {
        if n.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl BigFixed {
    pub fn zero(scale: u32) -> Self {
        BigFixed { mant: BigInt::zero(), scale }
    }

    pub fn one(scale: u32) -> Self {
        BigFixed { mant: pow10(scale), scale }
    }

    pub fn from_i64(v: i64, scale: u32) -> Self {
        BigFixed { mant: BigInt::from(v) * pow10(scale), scale }
    }

    pub fn from_rational(q: &BigRational, scale: u32) -> Self {
        let mant = div_round(&(q.numer() * pow10(scale)), q.denom());
        BigFixed { mant, scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFixed { mant: self.mant.abs(), scale: self.scale }
    }

    pub fn neg(&self) -> Self {
        BigFixed { mant: -&self.mant, scale: self.scale }
    }

    fn check_scale(&self, other: &Self) {
        assert_eq!(self.scale, other.scale, "mixed fixed-point scales");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_scale(other);
        BigFixed { mant: &self.mant + &other.mant, scale: self.scale }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_scale(other);
        BigFixed { mant: &self.mant - &other.mant, scale: self.scale }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_scale(other);
        let mant = div_round(&(&self.mant * &other.mant), &pow10(self.scale));
        BigFixed { mant, scale: self.scale }
    }

    /// Division; the divisor must be nonzero.
    pub fn div(&self, other: &Self) -> Self {
        self.check_scale(other);
        assert!(!other.mant.is_zero(), "fixed-point division by zero");
        let num = &self.mant * pow10(self.scale);
        let mant = if other.mant.is_negative() {
            div_round(&-num, &-&other.mant)
        } else {
            div_round(&num, &other.mant)
        };
        BigFixed { mant, scale: self.scale }
    }

    pub fn halve(&self) -> Self {
        BigFixed { mant: div_round(&self.mant, &BigInt::from(2)), scale: self.scale }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigFixed { mant: &self.mant * BigInt::from(k), scale: self.scale }
    }

    /// Floor square root in the last place; requires a nonnegative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of a negative value");
        let mant = (&self.mant * pow10(self.scale)).sqrt();
        BigFixed { mant, scale: self.scale }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BigFixed::one(self.scale);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Change the scale, rounding when shrinking.
    pub fn rescale(&self, new_scale: u32) -> Self {
        match new_scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => BigFixed {
                mant: &self.mant * pow10(new_scale - self.scale),
                scale: new_scale,
            },
            Ordering::Less => BigFixed {
                mant: div_round(&self.mant, &pow10(self.scale - new_scale)),
                scale: new_scale,
            },
        }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.check_scale(other);
        self.mant.cmp(&other.mant)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        // Split the exponent so huge mantissas stay inside f64 range.
        let digits = self.mant.to_string().trim_start_matches('-').len() as i64;
        if digits <= 300 {
            self.mant.to_f64().unwrap_or(f64::INFINITY) * 10f64.powi(-(self.scale as i32))
        } else {
            let drop = (digits - 300) as u32;
            let reduced = &self.mant / pow10(drop);
            reduced.to_f64().unwrap_or(f64::INFINITY)
                * 10f64.powi(drop as i32 - self.scale as i32)
        }
    }

    /// One unit in the last place as an `f64` (clamped away from zero so
    /// error bounds never collapse by underflow).
    pub fn ulp(&self) -> f64 {
        10f64.powi(-(self.scale as i32)).max(f64::MIN_POSITIVE)
    }

    /// Plain decimal string with exactly `scale` fractional digits.
    pub fn to_decimal_string(&self) -> String {
        let sign = if self.mant.is_negative() { "-" } else { "" };
        let abs = self.mant.abs();
        let s = pow10(self.scale);
        let (int, frac) = abs.div_rem(&s);
        if self.scale == 0 {
            return format!("{sign}{int}");
        }
        format!("{sign}{int}.{frac:0>width$}", width = self.scale as usize)
    }

    /// Parse a plain decimal string (`[-]ddd[.ddd]`) at the given scale,
    /// rounding extra fractional digits.
    pub fn parse_decimal(s: &str, scale: u32) -> Result<Self> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::Parse(format!("invalid decimal `{s}`")));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::Parse(format!("invalid decimal `{s}`")));
        }
        let int: BigInt = if int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| Error::Parse(format!("invalid decimal `{s}`")))?
        };
        let mut mant = int * pow10(scale);
        if !frac_part.is_empty() {
            let flen = frac_part.len() as u32;
            let frac: BigInt =
                frac_part.parse().map_err(|_| Error::Parse(format!("invalid decimal `{s}`")))?;
            if flen <= scale {
                mant += frac * pow10(scale - flen);
            } else {
                mant += div_round(&frac, &pow10(flen - scale));
            }
        }
        if neg {
            mant = -mant;
        }
        Ok(BigFixed { mant, scale })
    }
}
