//! Restricted partition function `p_A(n)`: the number of ways to write `n` as
//! a nonnegative integer combination of the parts in `A`.

use num_traits::{Signed, ToPrimitive};

use crate::arith::{rational_wide, require_coprime, Rational};
use crate::dedekind::{sigma_scaled, SigmaArgs};
use crate::error::{Error, Result};

/// Counting problem `p_parts(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    pub n: u64,
    pub parts: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(n: u64, parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("parts", "at least one part is required"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("parts", "parts must be positive"));
        }
        Ok(PartitionInstance { n, parts })
    }

    pub fn count_bruteforce(&self) -> u64 {
        partition_count_bruteforce(self.n, &self.parts)
    }
}

/// Counts solutions by nested enumeration over every part but the first,
/// whose multiplicity is then forced by divisibility.
pub fn partition_count_bruteforce(n: u64, parts: &[u64]) -> u64 {
    match parts.split_last() {
        None => u64::from(n == 0),
        Some((&only, [])) => u64::from(n.is_multiple_of(only)),
        Some((&last, rest)) => (0..=n / last)
            .map(|m| partition_count_bruteforce(n - m * last, rest))
            .sum(),
    }
}

/// `p_parts(n)` for every `n` in `0..=limit`, by the same enumeration as
/// [`partition_count_bruteforce`]: each combination of the later parts marks
/// a starting point, and the multiples of the first part are swept with a
/// strided prefix sum.
pub fn partition_counts_bruteforce(limit: u64, parts: &[u64]) -> Vec<u64> {
    let len = limit as usize + 1;
    let Some((&first, rest)) = parts.split_first() else {
        let mut out = vec![0; len];
        out[0] = 1;
        return out;
    };
    let mut counts = vec![0u64; len];
    mark_sums(0, limit, rest, &mut counts);
    let step = first as usize;
    for i in step..len {
        counts[i] += counts[i - step];
    }
    counts
}

fn mark_sums(base: u64, limit: u64, parts: &[u64], counts: &mut [u64]) {
    match parts.split_last() {
        None => counts[base as usize] += 1,
        Some((&last, rest)) => {
            let mut s = base;
            while s <= limit {
                mark_sums(s, limit, rest, counts);
                s += last;
            }
        }
    }
}

/// Closed-form `p_{a,b,c}(n)` for pairwise coprime `a, b, c`:
/// a quadratic polynomial in `n` plus the three Fourier–Dedekind sums
/// `σ_{-n}(b,c;a) + σ_{-n}(c,a;b) + σ_{-n}(a,b;c)`.
///
/// The exact value must be a nonnegative integer; anything else is reported
/// as [`Error::NonIntegralPartition`].
pub fn partition_count_closed(n: u64, a: i64, b: i64, c: i64) -> Result<u64> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if v < 1 {
            return Err(Error::invalid(name, format!("must be positive, got {v}")));
        }
    }
    require_coprime(a, b)?;
    require_coprime(a, c)?;
    require_coprime(b, c)?;
    let t = -i64::try_from(n).map_err(|_| Error::invalid("n", "too large"))?;

    let (ni, ai, bi, ci) = (i128::from(n), i128::from(a), i128::from(b), i128::from(c));
    let poly_num = 6 * ni * ni + 6 * ni * (ai + bi + ci) + ai * ai + bi * bi + ci * ci;
    let sigmas = [
        SigmaArgs { t, a: b, b: c, c: a },
        SigmaArgs { t, a: c, b: a, c: b },
        SigmaArgs { t, a, b, c },
    ];
    let scaled = [
        sigma_scaled(&sigmas[0])?,
        sigma_scaled(&sigmas[1])?,
        sigma_scaled(&sigmas[2])?,
    ];
    if let Some(count) = closed_in_i128(poly_num, [ai, bi, ci], scaled) {
        return u64::try_from(count).map_err(|_| non_integral(n, &rational_wide(count, 1)));
    }

    let value: Rational = rational_wide(poly_num, 12 * ai * bi * ci)
        + rational_wide(scaled[0], 4 * ai * ai)
        + rational_wide(scaled[1], 4 * bi * bi)
        + rational_wide(scaled[2], 4 * ci * ci);
    if !value.is_integer() || value.is_negative() {
        return Err(non_integral(n, &value));
    }
    value.to_integer().to_u64().ok_or_else(|| non_integral(n, &value))
}

fn non_integral(n: u64, value: &Rational) -> Error {
    Error::NonIntegralPartition {
        n,
        value: value.to_string(),
    }
}

/// The closed form over the common denominator `12a²b²c²`. `None` on
/// overflow or a non-integral value, which the rational path then reports.
fn closed_in_i128(poly_num: i128, [a, b, c]: [i128; 3], [sa, sb, sc]: [i128; 3]) -> Option<i128> {
    let (a2, b2, c2) = (a.checked_mul(a)?, b.checked_mul(b)?, c.checked_mul(c)?);
    let den = a2.checked_mul(b2)?.checked_mul(c2)?.checked_mul(12)?;
    let terms = [
        poly_num.checked_mul(a * b)?.checked_mul(c)?,
        sa.checked_mul(3 * b2)?.checked_mul(c2)?,
        sb.checked_mul(3 * a2)?.checked_mul(c2)?,
        sc.checked_mul(3 * a2)?.checked_mul(b2)?,
    ];
    let num = terms.iter().try_fold(0i128, |acc, &v| acc.checked_add(v))?;
    (num >= 0 && num % den == 0).then_some(num / den)
}
