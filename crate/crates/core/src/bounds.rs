//! Upper and lower bounds for Frobenius numbers.
//!
//! Besides the classical closed-form bounds, this module bounds the
//! Fourier–Dedekind sums `σ_t(a,b;c)` from below uniformly in `t`, by
//! unrolling the reciprocity law a few times and bounding the leftover
//! reciprocity terms and the final Dedekind–Rademacher sum. Three such lower
//! bounds, plugged into the closed-form partition count, give an upper bound
//! for `g(a,b,c)` through the quadratic formula.
//!
//! All bound components are exact rationals. The only inexact steps are
//! square roots, which are rounded downward when they feed a lower bound and
//! upward when they feed an upper bound.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{integer, least_nonneg_residue, mod_inverse, rational, require_coprime, Rational};
use crate::dedekind::cauchy_schwarz_radicand;
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_exact, PartList, Triple};
use crate::rounding::{sqrt_down, sqrt_up, to_f64_down, to_f64_up};

/// `2·a_d·⌊a₁/d⌋ - a₁`.
pub fn bound_erdos_graham(parts: &PartList) -> i64 {
    let d = parts.len() as i64;
    2 * parts.largest() * (parts.smallest() / d) - parts.smallest()
}

/// `2·a_{d-1}·⌊a_d/d⌋ - a_d`.
pub fn bound_selmer(parts: &PartList) -> i64 {
    let v = parts.values();
    let d = v.len() as i64;
    2 * v[v.len() - 2] * (parts.largest() / d) - parts.largest()
}

/// `⌊(a₂ - 1)(a_d - 2)/2⌋ - 1`.
pub fn bound_vitek(parts: &PartList) -> i64 {
    let v = parts.values();
    ((v[1] - 1) * (parts.largest() - 2)).div_euclid(2) - 1
}

/// Minimum of the three classical bounds (on the `g` scale).
pub fn bound_known_combined(t: &Triple) -> i64 {
    let p = t.parts();
    bound_erdos_graham(&p).min(bound_selmer(&p)).min(bound_vitek(&p))
}

/// Davison's lower bound `√(3abc) - a - b - c`, rounded down.
pub fn bound_davison_lower(t: &Triple) -> f64 {
    let root = sqrt_down(&integer(3 * t.product()));
    (root - t.sum() as f64).next_down()
}

/// `(√(abc(a+b+c)) - a - b - c) / 2`, rounded up.
pub fn bound_bdr_sqrt(t: &Triple) -> f64 {
    let root = sqrt_up(&integer(t.product() * t.sum()));
    ((root - t.sum() as f64) / 2.0).next_up()
}

/// Lower bound for `Q(c₁, c; x, 0)` over all `x = -a⁻¹t/c`:
/// `-1/4 + c₁/(12c) + 1/(12c₁c) - c/(24c₁)`.
pub fn q_low(c1: i64, c: i64) -> Rational {
    rational(-1, 4) + rational(c1, 12 * c) + rational(1, 12 * c1 * c) - rational(c, 24 * c1)
}

/// Upper bound for `Q(c₂, c₁; 0, y)`: `c₂/(12c₁) + 1/(12c₂c₁) + c₁/(12c₂)`.
pub fn q_up(c2: i64, c1: i64) -> Rational {
    rational(c2, 12 * c1) + rational(1, 12 * c2 * c1) + rational(c1, 12 * c2)
}

/// Which reduction produced a [`SigmaLowerBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundCase {
    /// `c₁ = 1`: one reciprocity step leaves nothing to bound.
    C1IsOne,
    /// `c₁ ≠ 1, c₂ = 1`: two steps leave nothing to bound.
    C2IsOne,
    /// Two steps followed by the Cauchy–Schwarz bound.
    General,
    /// The iterated reduction.
    Algorithm,
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundCase::C1IsOne => "c1=1",
            BoundCase::C2IsOne => "c2=1",
            BoundCase::General => "general",
            BoundCase::Algorithm => "algorithm",
        })
    }
}

/// A lower bound for `σ_t(a, b; c)` valid for every integer `t`, of the form
/// `rational - √radicand` (the square root term is optional).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaLowerBound {
    pub rational_part: Rational,
    pub sqrt_radicand: Option<Rational>,
    pub case: BoundCase,
    /// `c₁` at termination.
    pub c1: i64,
    /// `c₂` at termination.
    pub c2: i64,
    pub iterations_used: u32,
}

impl SigmaLowerBound {
    /// The bound as a float, rounded toward negative infinity.
    pub fn value(&self) -> f64 {
        match &self.sqrt_radicand {
            None => to_f64_down(&self.rational_part),
            Some(r) => {
                let root = Rational::from_float(sqrt_up(r)).expect("finite sqrt");
                to_f64_down(&(&self.rational_part - root))
            }
        }
    }

    /// Exact check of `bound <= sigma`.
    pub fn is_at_most(&self, sigma: &Rational) -> bool {
        let gap = &self.rational_part - sigma;
        if !gap.is_positive() {
            return true;
        }
        match &self.sqrt_radicand {
            None => false,
            Some(r) => &gap * &gap <= *r,
        }
    }

    fn sqrt_term_up(&self) -> f64 {
        self.sqrt_radicand.as_ref().map_or(0.0, sqrt_up)
    }
}

/// Post-loop condition for the Cauchy–Schwarz step of the iterated bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CauchySchwarzGate {
    /// Apply the step when `c₁ > 1` and `c₂ > 1`, which matches the general
    /// case of the single-pass bound.
    #[default]
    Consistent,
    /// Apply the step when `c₁ > 1` and `c₂ > 2`. Since the Cauchy–Schwarz
    /// radicand vanishes at `c₂ = 2`, both gates give the same value.
    Literal,
}

fn reduced_residue(a: i64, b: i64, c: i64) -> Result<i64> {
    if c < 2 {
        return Err(Error::invalid("c", format!("modulus must be at least 2, got {c}")));
    }
    require_coprime(a, c)?;
    require_coprime(b, c)?;
    let a_inv = mod_inverse(a, c)?;
    Ok(least_nonneg_residue(-((i128::from(a_inv) * i128::from(b)) % i128::from(c)) as i64, c))
}

/// Single-pass lower bound for `σ_t(a, b; c)` with the three-way case split on
/// `c₁ = -a⁻¹b mod c` and `c₂ = c mod c₁`.
pub fn sigma_lower_proposition(a: i64, b: i64, c: i64) -> Result<SigmaLowerBound> {
    let c1 = reduced_residue(a, b, c)?;
    let half = rational(1, 2);
    if c1 == 1 {
        return Ok(SigmaLowerBound {
            rational_part: rational(-c, 24) + rational(1, 6 * c) - rational(3, 4),
            sqrt_radicand: None,
            case: BoundCase::C1IsOne,
            c1,
            c2: 0,
            iterations_used: 1,
        });
    }
    let c2 = c % c1;
    let base = q_low(c1, c) - q_up(c2, c1) - half;
    let (sqrt_radicand, case) = if c2 == 1 {
        (None, BoundCase::C2IsOne)
    } else {
        (Some(cauchy_schwarz_radicand(c2)), BoundCase::General)
    };
    Ok(SigmaLowerBound {
        rational_part: base,
        sqrt_radicand,
        case,
        c1,
        c2,
        iterations_used: 1,
    })
}

/// Iterated lower bound for `σ_t(a, b; c)` with at most `iterations`
/// reciprocity rounds.
pub fn sigma_lower_algorithm(a: i64, b: i64, c: i64, iterations: u32) -> Result<SigmaLowerBound> {
    sigma_lower_algorithm_with(a, b, c, iterations, CauchySchwarzGate::default())
}

pub fn sigma_lower_algorithm_with(
    a: i64,
    b: i64,
    c: i64,
    iterations: u32,
    gate: CauchySchwarzGate,
) -> Result<SigmaLowerBound> {
    if iterations < 1 {
        return Err(Error::invalid("iterations", "must be at least 1"));
    }
    let mut c1 = reduced_residue(a, b, c)?;
    let mut modulus = c;
    let mut acc = Rational::zero();
    let mut n = 1;
    let c2 = loop {
        let c2 = modulus % c1;
        let with_low = acc + q_low(c1, modulus);
        acc = if c1 == 1 {
            with_low
        } else {
            with_low - q_up(c2, c1)
        };
        if c1 == 1 || c2 == 1 || n == iterations {
            break c2;
        }
        modulus = c2;
        c1 %= c2;
        n += 1;
    };
    let threshold = match gate {
        CauchySchwarzGate::Consistent => 1,
        CauchySchwarzGate::Literal => 2,
    };
    let sqrt_radicand = (c1 > 1 && c2 > threshold).then(|| cauchy_schwarz_radicand(c2));
    Ok(SigmaLowerBound {
        rational_part: acc - rational(1, 2),
        sqrt_radicand,
        case: BoundCase::Algorithm,
        c1,
        c2,
        iterations_used: n,
    })
}

/// How the single-pass and iterated σ bounds are merged per arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Combine {
    /// The smaller (weaker) of the two lower bounds.
    #[default]
    Min,
    /// The larger (tighter) of the two lower bounds.
    Max,
}

impl std::str::FromStr for Combine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Combine::Min),
            "max" => Ok(Combine::Max),
            other => Err(Error::invalid("combine", format!("expected min or max, got {other}"))),
        }
    }
}

impl fmt::Display for Combine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Combine::Min => "min",
            Combine::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundOptions {
    pub iterations: u32,
    pub combine: Combine,
    pub gate: CauchySchwarzGate,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            iterations: 2,
            combine: Combine::Min,
            gate: CauchySchwarzGate::Consistent,
        }
    }
}

/// Lower bound for `σ_t(a, b; c)` merging the single-pass and iterated forms.
pub fn sigma_lower_combined(a: i64, b: i64, c: i64, opts: &BoundOptions) -> Result<SigmaLowerBound> {
    let single = sigma_lower_proposition(a, b, c)?;
    let iterated = sigma_lower_algorithm_with(a, b, c, opts.iterations, opts.gate)?;
    let take_iterated = match opts.combine {
        Combine::Min => iterated.value() < single.value(),
        Combine::Max => iterated.value() > single.value(),
    };
    Ok(if take_iterated { iterated } else { single })
}

/// Upper bound for `g(a, b, c)` together with the σ bounds it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct NewUpperBound {
    /// Bound on the `g` scale, rounded up.
    pub g_upper: f64,
    /// Bound for `σ_t(b, c; a)`.
    pub alpha: SigmaLowerBound,
    /// Bound for `σ_t(c, a; b)`.
    pub beta: SigmaLowerBound,
    /// Bound for `σ_t(a, b; c)`.
    pub gamma: SigmaLowerBound,
}

impl NewUpperBound {
    /// Same bound on the `f = g + a + b + c` scale.
    pub fn f_upper(&self, t: &Triple) -> f64 {
        (self.g_upper + t.sum() as f64).next_up()
    }

    /// Largest integer the bound allows for `g`.
    pub fn g_upper_floor(&self) -> i64 {
        self.g_upper.floor() as i64
    }

    pub fn sigma_sum(&self) -> f64 {
        self.alpha.value() + self.beta.value() + self.gamma.value()
    }

    /// Whether `α + β + γ < 0`, checked on an upward-rounded sum.
    pub fn sigma_sum_is_negative(&self) -> bool {
        let parts = [&self.alpha, &self.beta, &self.gamma];
        let exact: Rational = parts.iter().map(|s| &s.rational_part).sum();
        if parts.iter().all(|s| s.sqrt_radicand.is_none()) {
            return exact.is_negative();
        }
        let roots: f64 = parts
            .iter()
            .filter_map(|s| s.sqrt_radicand.as_ref().map(sqrt_down))
            .sum();
        (to_f64_up(&exact) - roots.next_down()).next_up() < 0.0
    }
}

/// Upper bound for `g(a, b, c)` via the quadratic formula:
/// `√((a+b+c)²/4 - (a²+b²+c²)/6 - 2abc(α+β+γ)) - (a+b+c)/2`.
pub fn frobenius_upper_new(t: &Triple, iterations: u32, combine: Combine) -> Result<NewUpperBound> {
    frobenius_upper_new_with(
        t,
        &BoundOptions {
            iterations,
            combine,
            ..BoundOptions::default()
        },
    )
}

pub fn frobenius_upper_new_with(t: &Triple, opts: &BoundOptions) -> Result<NewUpperBound> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let alpha = sigma_lower_combined(b, c, a, opts)?;
    let beta = sigma_lower_combined(c, a, b, opts)?;
    let gamma = sigma_lower_combined(a, b, c, opts)?;

    let s = t.sum();
    let abc2 = integer(2 * t.product());
    let rational_sum = &alpha.rational_part + &beta.rational_part + &gamma.rational_part;
    let exact_part = rational(s * s, 4) - rational(a * a + b * b + c * c, 6) - &abc2 * rational_sum;
    let sqrt_sum = [&alpha, &beta, &gamma]
        .iter()
        .map(|s| s.sqrt_term_up())
        .fold(0.0, |acc: f64, v| (acc + v).next_up());
    let sqrt_part = if sqrt_sum == 0.0 {
        0.0
    } else {
        (to_f64_up(&abc2) * sqrt_sum).next_up()
    };

    let radicand = if sqrt_part == 0.0 {
        if exact_part.is_negative() {
            return Err(Error::NegativeRadicand { a, b, c });
        }
        to_f64_up(&exact_part)
    } else {
        (to_f64_up(&exact_part) + sqrt_part).next_up()
    };
    if radicand < 0.0 {
        return Err(Error::NegativeRadicand { a, b, c });
    }
    let root = radicand.sqrt().next_up();
    let g_upper = (root - s as f64 / 2.0).next_up();
    Ok(NewUpperBound {
        g_upper,
        alpha,
        beta,
        gamma,
    })
}

/// Every bound for one triple, next to the exact Frobenius number.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub triple: Triple,
    pub g_exact: i64,
    pub g_new_upper: f64,
    pub g_known_upper: i64,
    pub g_davison_lower: f64,
    pub g_bdr_upper: f64,
    pub erdos_graham: i64,
    pub selmer: i64,
    pub vitek: i64,
    pub sigma_bounds: [SigmaLowerBound; 3],
}

impl BoundReport {
    pub fn new(t: &Triple, opts: &BoundOptions) -> Result<Self> {
        let parts = t.parts();
        let new = frobenius_upper_new_with(t, opts)?;
        Ok(BoundReport {
            triple: *t,
            g_exact: frobenius_exact(&parts),
            g_new_upper: new.g_upper,
            g_known_upper: bound_known_combined(t),
            g_davison_lower: bound_davison_lower(t),
            g_bdr_upper: bound_bdr_sqrt(t),
            erdos_graham: bound_erdos_graham(&parts),
            selmer: bound_selmer(&parts),
            vitek: bound_vitek(&parts),
            sigma_bounds: [new.alpha, new.beta, new.gamma],
        })
    }

    /// `davison ≤ g ≤ min(new, known, bdr)`.
    pub fn is_bracketed(&self) -> bool {
        let g = self.g_exact as f64;
        self.g_davison_lower <= g
            && g <= self.g_new_upper
            && self.g_exact <= self.g_known_upper
            && g <= self.g_bdr_upper
    }
}
