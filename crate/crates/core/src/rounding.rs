//! Directed conversions from exact rationals to `f64`.
//!
//! Square roots are the only inexact step in the bound pipeline. Callers pick
//! the rounding direction that keeps their bound valid: upward for anything
//! feeding an upper bound on the Frobenius number, downward for lower bounds.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::Rational;

fn exact(f: f64) -> Rational {
    Rational::from_float(f).expect("finite float")
}

/// Largest `f64` that does not exceed `x`.
pub fn to_f64_down(x: &Rational) -> f64 {
    let mut f = x.to_f64().unwrap_or(f64::NAN);
    if !f.is_finite() {
        return f;
    }
    while exact(f) > *x {
        f = f.next_down();
    }
    f
}

/// Smallest `f64` that is not below `x`.
pub fn to_f64_up(x: &Rational) -> f64 {
    let mut f = x.to_f64().unwrap_or(f64::NAN);
    if !f.is_finite() {
        return f;
    }
    while exact(f) < *x {
        f = f.next_up();
    }
    f
}

/// An `f64` that is at least `sqrt(x)`, for `x >= 0`.
pub fn sqrt_up(x: &Rational) -> f64 {
    assert!(!x.is_negative(), "sqrt of negative rational {x}");
    if x.is_zero() {
        return 0.0;
    }
    let mut s = to_f64_up(x).sqrt();
    loop {
        let e = exact(s);
        if &e * &e >= *x {
            return s;
        }
        s = s.next_up();
    }
}

/// An `f64` that is at most `sqrt(x)`, for `x >= 0`.
pub fn sqrt_down(x: &Rational) -> f64 {
    assert!(!x.is_negative(), "sqrt of negative rational {x}");
    if x.is_zero() {
        return 0.0;
    }
    let mut s = to_f64_down(x).max(0.0).sqrt();
    loop {
        let e = exact(s);
        if &e * &e <= *x {
            return s;
        }
        s = s.next_down();
    }
}
