//! Dedekind–Rademacher sums and Fourier–Dedekind sums.
//!
//! `S(a,b;x,y) = Σ_{k=0}^{b-1} sts(a(k+y)/b + x) · sts((k+y)/b)` is evaluated
//! either term by term or through the reciprocity law, which turns the
//! evaluation into a Euclidean descent on `(a, b)`.

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{
    bernoulli_psi2, big_to_i128, fract, integer, least_nonneg_residue, mod_inverse,
    rational, rational_wide, require_coprime, sawtooth_sts, st_scaled, sts_scaled, Rational,
};
use crate::error::{Error, Result};

/// Arguments of `S(a, b; x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RademacherArgs {
    pub a: i64,
    pub b: i64,
    pub x: Rational,
    pub y: Rational,
}

impl RademacherArgs {
    pub fn new(a: i64, b: i64, x: Rational, y: Rational) -> Result<Self> {
        if b < 1 {
            return Err(Error::invalid("b", format!("must be positive, got {b}")));
        }
        Ok(RademacherArgs { a, b, x, y })
    }

    /// `S(a, b; 0, 0)`, the classical Dedekind sum.
    pub fn classical(a: i64, b: i64) -> Result<Self> {
        Self::new(a, b, Rational::zero(), Rational::zero())
    }
}

/// Arguments of `σ_t(a, b; c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaArgs {
    pub t: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl SigmaArgs {
    pub fn new(t: i64, a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::invalid("a", format!("must be positive, got {a}")));
        }
        if b < 1 {
            return Err(Error::invalid("b", format!("must be positive, got {b}")));
        }
        if c < 1 {
            return Err(Error::invalid("c", format!("must be positive, got {c}")));
        }
        require_coprime(a, c)?;
        require_coprime(b, c)?;
        Ok(SigmaArgs { t, a, b, c })
    }
}

/// Integer form of the naive sum when every quantity fits comfortably in
/// `i128`. Returns `None` when it might overflow.
fn rademacher_naive_small(args: &RademacherArgs) -> Option<Rational> {
    let p = big_to_i128(args.x.numer())?;
    let q = big_to_i128(args.x.denom())?;
    let r = big_to_i128(args.y.numer())?;
    let s = big_to_i128(args.y.denom())?;
    let a = i128::from(args.a);
    let b = i128::from(args.b);

    const LIMIT: i128 = 1 << 100;
    let den_inner = b.checked_mul(s)?;
    let den_outer = den_inner.checked_mul(q)?;
    let num_span = a
        .checked_abs()?
        .checked_mul(q)?
        .checked_mul(den_inner.checked_add(r.checked_abs()?)?)?
        .checked_add(p.checked_abs()?.checked_mul(den_inner)?)?;
    let sum_span = b.checked_mul(den_outer)?.checked_mul(den_inner)?;
    if num_span > LIMIT || sum_span > LIMIT {
        return None;
    }

    let mut acc: i128 = 0;
    for k in 0..b {
        let inner = k * s + r;
        let right = sts_scaled(inner, den_inner);
        if right == 0 {
            continue;
        }
        let outer = a * q * inner + p * den_inner;
        acc += sts_scaled(outer, den_outer) * right;
    }
    Some(rational_wide(acc, 4 * den_outer * den_inner))
}

/// Term-by-term evaluation of `S(a, b; x, y)`.
pub fn rademacher_sum_naive(args: &RademacherArgs) -> Rational {
    if let Some(v) = rademacher_naive_small(args) {
        return v;
    }
    let a = integer(args.a);
    let b = integer(args.b);
    let mut acc = Rational::zero();
    for k in 0..args.b {
        let shifted = integer(k) + &args.y;
        let right = sawtooth_sts(&(&shifted / &b));
        if right.is_zero() {
            continue;
        }
        let left = sawtooth_sts(&(&a * &shifted / &b + &args.x));
        acc += left * right;
    }
    acc
}

/// Right-hand side `Q(a, b; x, y)` of the reciprocity law
/// `S(a,b;x,y) + S(b,a;y,x) = Q(a,b;x,y)`.
pub fn reciprocity_rhs_q(args: &RademacherArgs) -> Result<Rational> {
    if args.a < 1 {
        return Err(Error::invalid(
            "a",
            format!("must be positive, got {}", args.a),
        ));
    }
    require_coprime(args.a, args.b)?;
    Ok(reciprocity_q_unchecked(args.a, args.b, &args.x, &args.y))
}

fn reciprocity_q_unchecked(a: i64, b: i64, x: &Rational, y: &Rational) -> Rational {
    let a_over_b = rational(a, b);
    let b_over_a = rational(b, a);
    let inv_ab = Rational::new(1.into(), num_bigint::BigInt::from(a) * b);
    if x.is_integer() && y.is_integer() {
        rational(-1, 4) + (a_over_b + inv_ab + b_over_a) * rational(1, 12)
    } else {
        let mixed = integer(a) * y + integer(b) * x;
        sawtooth_sts(x) * sawtooth_sts(y)
            + (a_over_b * bernoulli_psi2(y)
                + inv_ab * bernoulli_psi2(&mixed)
                + b_over_a * bernoulli_psi2(x))
                * rational(1, 2)
    }
}

/// Evaluates `S(a, b; x, y)` by alternating first-argument reduction with the
/// reciprocity law. Takes `O(log b)` steps.
///
/// Reducing `a = q·b + r` shifts the second sawtooth argument:
/// `S(a, b; x, y) = S(r, b; x + q·y, y)`, which collapses to plain periodicity
/// when `y` is an integer.
pub fn rademacher_sum_fast(args: &RademacherArgs) -> Result<Rational> {
    require_coprime(args.a, args.b)?;
    let (mut a, mut b) = (args.a, args.b);
    let (mut x, mut y) = (fract(&args.x), args.y.clone());
    let mut acc = Rational::zero();
    let mut negate = false;
    loop {
        let (q, r) = a.div_mod_floor(&b);
        if q != 0 {
            x = fract(&(x + integer(q) * &y));
        }
        a = r;
        let step = if b == 1 {
            // single term k = 0
            sawtooth_sts(&(integer(a) * &y + &x)) * sawtooth_sts(&y)
        } else {
            reciprocity_q_unchecked(a, b, &x, &y)
        };
        if negate {
            acc -= step;
        } else {
            acc += step;
        }
        if b == 1 {
            return Ok(acc);
        }
        negate = !negate;
        (a, b) = (b, a);
        std::mem::swap(&mut x, &mut y);
    }
}

/// The pair `(b/12 + 1/(6b), b/12 - 1/4 + 1/(6b))` whose product bounds
/// `S(a, b; x, 0)^2` for `a` coprime to `b`.
pub fn cauchy_schwarz_bound(b: i64) -> (Rational, Rational) {
    assert!(b >= 1, "b must be positive, got {b}");
    let first = rational(b, 12) + rational(1, 6 * b);
    let second = &first - rational(1, 4);
    (first, second)
}

/// Product of the [`cauchy_schwarz_bound`] factors.
pub fn cauchy_schwarz_radicand(b: i64) -> Rational {
    let (u, v) = cauchy_schwarz_bound(b);
    u * v
}

/// Term-by-term evaluation of
/// `σ_t(a, b; c) = Σ_{m=0}^{c-1} st(-a⁻¹(bm + t)/c) · st(m/c)`.
pub fn sigma_naive(args: &SigmaArgs) -> Result<Rational> {
    let scaled = sigma_scaled(args)?;
    let c = i128::from(args.c);
    Ok(rational_wide(scaled, 4 * c * c))
}

/// `4c²·σ_t(a, b; c)`, which is always an integer.
pub(crate) fn sigma_scaled(args: &SigmaArgs) -> Result<i128> {
    let SigmaArgs { t, a, b, c } = *args;
    require_coprime(a, c)?;
    require_coprime(b, c)?;
    let a_inv = i128::from(mod_inverse(a, c)?);
    let (b, t, c) = (i128::from(b), i128::from(t), i128::from(c));
    // the left argument's numerator steps by -a⁻¹·b per m
    let step = (-a_inv * b).rem_euclid(c);
    let mut num = (-a_inv * t).rem_euclid(c);
    let mut acc: i128 = 0;
    for m in 0..c {
        acc += st_scaled(num, c) * st_scaled(m, c);
        num += step;
        if num >= c {
            num -= c;
        }
    }
    Ok(acc)
}

/// `S(-a⁻¹b, c; -a⁻¹t/c, 0)`, the Dedekind–Rademacher part of `σ_t(a, b; c)`.
pub fn sigma_dedekind_part(args: &SigmaArgs) -> Result<Rational> {
    let SigmaArgs { t, a, b, c } = *args;
    let a_inv = mod_inverse(a, c)?;
    mod_inverse(b, c)?;
    let first = -(i128::from(a_inv) * i128::from(b));
    let first = i64::try_from(first).map_err(|_| Error::invalid("b", "product overflows"))?;
    let shift = rational_wide(-(i128::from(a_inv) * i128::from(t)), i128::from(c));
    rademacher_sum_fast(&RademacherArgs::new(first, c, shift, Rational::zero())?)
}

/// `σ_t(a, b; c)` through a single Dedekind–Rademacher sum plus the boundary
/// corrections from the integer points of the sawtooth.
pub fn sigma_via_rademacher(args: &SigmaArgs) -> Result<Rational> {
    let SigmaArgs { t, a, b, c } = *args;
    require_coprime(a, c)?;
    require_coprime(b, c)?;
    let main = sigma_dedekind_part(args)?;
    if least_nonneg_residue(t, c) == 0 {
        return Ok(main + rational(1, 4));
    }
    let a_inv = i128::from(mod_inverse(a, c)?);
    let b_inv = i128::from(mod_inverse(b, c)?);
    let (t, c) = (i128::from(t), i128::from(c));
    let half = rational(1, 2);
    let corr_a = sawtooth_sts(&rational_wide(-a_inv * t, c));
    let corr_b = sawtooth_sts(&rational_wide(-b_inv * t, c));
    Ok(main - &half * corr_a - half * corr_b)
}

#[cfg(test)]
pub(crate) fn coprime(a: i64, b: i64) -> bool {
    crate::arith::gcd_i64(a, b) == 1
}
