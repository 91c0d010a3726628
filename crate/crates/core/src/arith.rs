//! Exact arithmetic primitives.
//!
//! Every fractional quantity in the crate is a [`Rational`], an always
//! normalized arbitrary-precision fraction. Floors are taken toward negative
//! infinity, so the sawtooth functions below behave correctly on negative
//! arguments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// `num / den` as a normalized rational. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Same as [`rational`] for wide numerators and denominators.
pub fn rational_wide(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn half() -> Rational {
    rational(1, 2)
}

/// Greatest common divisor by Euclid's algorithm; `gcd(u, 0) = u`.
pub fn gcd(mut u: u64, mut v: u64) -> u64 {
    while v != 0 {
        let r = u % v;
        u = v;
        v = r;
    }
    u
}

pub(crate) fn gcd_i64(u: i64, v: i64) -> i64 {
    gcd(u.unsigned_abs(), v.unsigned_abs()) as i64
}

pub(crate) fn require_coprime(a: i64, b: i64) -> Result<()> {
    let g = gcd_i64(a, b);
    if g == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime { a, b, gcd: g })
    }
}

/// Least nonnegative residue of `a` modulo `m`. Panics if `m < 1`.
pub fn least_nonneg_residue(a: i64, m: i64) -> i64 {
    assert!(m >= 1, "modulus must be positive, got {m}");
    a.rem_euclid(m)
}

/// The inverse of `a` modulo `m`, in `[0, m)`. For `m = 1` the inverse is 0.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::invalid("m", format!("modulus must be positive, got {m}")));
    }
    if m == 1 {
        return Ok(0);
    }
    let (mut old_r, mut r) = (i128::from(a.rem_euclid(m)), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NoInverse { a, m });
    }
    Ok(old_s.rem_euclid(i128::from(m)) as i64)
}

/// An integer reduced into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: i64,
    modulus: i64,
}

impl Residue {
    pub fn new(a: i64, modulus: i64) -> Self {
        Residue {
            value: least_nonneg_residue(a, modulus),
            modulus,
        }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }
}

/// Fractional part `x - floor(x)`, in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}

/// `st(x) = x - floor(x) - 1/2`.
pub fn sawtooth_st(x: &Rational) -> Rational {
    fract(x) - half()
}

/// `sts(x)`: equal to [`sawtooth_st`] off the integers and 0 on them.
pub fn sawtooth_sts(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        sawtooth_st(x)
    }
}

/// Periodic second Bernoulli function `{x}^2 - {x} + 1/6`.
pub fn bernoulli_psi2(x: &Rational) -> Rational {
    let f = fract(x);
    &f * &f - &f + rational(1, 6)
}

/// `2·den·st(num/den)` as an integer, for `den > 0`.
#[inline]
pub(crate) fn st_scaled(num: i128, den: i128) -> i128 {
    2 * num.rem_euclid(den) - den
}

/// `2·den·sts(num/den)` as an integer, for `den > 0`.
#[inline]
pub(crate) fn sts_scaled(num: i128, den: i128) -> i128 {
    let r = num.rem_euclid(den);
    if r == 0 {
        0
    } else {
        2 * r - den
    }
}

pub(crate) fn big_to_i128(x: &BigInt) -> Option<i128> {
    num_traits::ToPrimitive::to_i128(x)
}
