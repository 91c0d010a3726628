//! Exact Frobenius numbers.
//!
//! The solver works on residue classes modulo the smallest part: for each
//! class it finds the least representable integer in that class using the
//! remaining parts (a shortest-path problem on a circulant graph), and the
//! Frobenius number is the largest of those minima minus the modulus.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd_i64;
use crate::error::{Error, Result};

/// Sorted, duplicate-free list of at least two positive parts with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartList {
    values: Vec<i64>,
}

impl PartList {
    pub fn new(mut values: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&v| v < 1) {
            return Err(Error::invalid("parts", format!("parts must be positive, got {bad}")));
        }
        values.sort_unstable();
        values.dedup();
        if values.len() < 2 {
            return Err(Error::invalid(
                "parts",
                format!("need at least two distinct parts, got {values:?}"),
            ));
        }
        let g = values.iter().fold(0, |acc, &v| gcd_i64(acc, v));
        if g != 1 {
            return Err(Error::GcdNotOne { values, gcd: g });
        }
        Ok(PartList { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn smallest(&self) -> i64 {
        self.values[0]
    }

    pub fn largest(&self) -> i64 {
        self.values[self.values.len() - 1]
    }
}

/// Pairwise coprime `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    a: i64,
    b: i64,
    c: i64,
}

impl Triple {
    /// Sorts the arguments and checks that they are distinct, positive and
    /// pairwise coprime.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let [a, b, c] = v;
        if a < 1 {
            return Err(Error::invalid("a", format!("must be positive, got {a}")));
        }
        if a == b || b == c {
            return Err(Error::invalid("triple", format!("values must be distinct, got ({a}, {b}, {c})")));
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let g = gcd_i64(x, y);
            if g != 1 {
                return Err(Error::NotCoprime { a: x, b: y, gcd: g });
            }
        }
        Ok(Triple { a, b, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn sum(&self) -> i64 {
        self.a + self.b + self.c
    }

    pub fn product(&self) -> i64 {
        self.a * self.b * self.c
    }

    pub fn parts(&self) -> PartList {
        PartList {
            values: vec![self.a, self.b, self.c],
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Representability of every integer in `0..=limit`, by forward sieving.
pub fn representable_table(parts: &PartList, limit: i64) -> Vec<bool> {
    let len = usize::try_from(limit.max(-1) + 1).unwrap_or(0);
    let mut table = vec![false; len];
    if len == 0 {
        return table;
    }
    table[0] = true;
    for n in 0..len {
        if !table[n] {
            continue;
        }
        for &p in parts.values() {
            if let Some(slot) = table.get_mut(n + p as usize) {
                *slot = true;
            }
        }
    }
    table
}

/// Whether `n` is a nonnegative integer combination of the parts.
pub fn is_representable(n: i64, parts: &PartList) -> bool {
    if n < 0 {
        return false;
    }
    representable_table(parts, n)[n as usize]
}

/// Least representable integer in each residue class modulo the smallest
/// part (the Apéry set with respect to that part).
pub fn apery_set(parts: &PartList) -> Vec<i64> {
    let modulus = parts.smallest();
    let m = modulus as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &p in &parts.values()[1..] {
            let next = (r + p as usize) % m;
            let nd = d + p;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

/// The Frobenius number `g(a₁, …, a_d)`; `-1` when a part equals 1.
pub fn frobenius_exact(parts: &PartList) -> i64 {
    if parts.smallest() == 1 {
        return -1;
    }
    let max = apery_set(parts).into_iter().max().expect("nonempty residue set");
    max - parts.smallest()
}

/// [`frobenius_exact`] on an unvalidated slice.
pub fn frobenius(values: &[i64]) -> Result<i64> {
    Ok(frobenius_exact(&PartList::new(values.to_vec())?))
}

/// Sylvester's `g(a, b) = ab - a - b` for coprime `a, b`.
pub fn frobenius_two(a: i64, b: i64) -> Result<i64> {
    for (name, v) in [("a", a), ("b", b)] {
        if v < 1 {
            return Err(Error::invalid(name, format!("must be positive, got {v}")));
        }
    }
    let g = gcd_i64(a, b);
    if g != 1 {
        return Err(Error::NotCoprime { a, b, gcd: g });
    }
    Ok(a * b - a - b)
}

/// Scan oracle: sieve representability up to a proven ceiling and return the
/// largest gap. The ceiling is Vitek's bound for three or more parts and
/// `(a₁ - 1)(a_d - 1) - 1` for two.
pub fn frobenius_scan(parts: &PartList) -> i64 {
    let v = parts.values();
    let ceiling = if v.len() >= 3 {
        (v[1] - 1) * (parts.largest() - 2) / 2 - 1
    } else {
        (v[0] - 1) * (v[1] - 1) - 1
    };
    let horizon = ceiling.max(0) + parts.smallest();
    let table = representable_table(parts, horizon);
    assert!(
        table[(ceiling.max(-1) + 1) as usize..].iter().all(|&r| r),
        "scan ceiling {ceiling} is not an upper bound for {v:?}"
    );
    table
        .iter()
        .rposition(|&r| !r)
        .map_or(-1, |i| i as i64)
}

fn check_overall_gcd(values: &[i64]) -> Result<()> {
    let g = values.iter().fold(0, |acc, &v| gcd_i64(acc, v));
    if g == 1 {
        Ok(())
    } else {
        Err(Error::GcdNotOne {
            values: values.to_vec(),
            gcd: g,
        })
    }
}

/// `g(a, b, c)` through Johnson's reduction
/// `g(a,b,c) = n·g(a/n, b/n, c) + (n-1)·c` with `n = gcd(a, b)`, applied to
/// any non-coprime pair until the core is pairwise coprime.
pub fn reduce_johnson(a: i64, b: i64, c: i64) -> Result<i64> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if v < 1 {
            return Err(Error::invalid(name, format!("must be positive, got {v}")));
        }
    }
    check_overall_gcd(&[a, b, c])?;
    Ok(johnson_inner(a, b, c))
}

fn johnson_inner(a: i64, b: i64, c: i64) -> i64 {
    for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
        let n = gcd_i64(x, y);
        if n > 1 {
            return n * johnson_inner(x / n, y / n, z) + (n - 1) * z;
        }
    }
    if a == 1 || b == 1 || c == 1 {
        return -1;
    }
    let parts = PartList::new(vec![a, b, c]).expect("pairwise coprime core");
    frobenius_exact(&parts)
}

/// Brauer–Shockley: with `n = gcd(a₁, …, a_{d-1})`,
/// `g(a₁, …, a_d) = n·g(a₁/n, …, a_{d-1}/n, a_d) + (n-1)·a_d`.
pub fn reduce_brauer_shockley(parts: &PartList) -> i64 {
    let v = parts.values();
    let (last, head) = v.split_last().expect("at least two parts");
    let n = head.iter().fold(0, |acc, &x| gcd_i64(acc, x));
    if n == 1 {
        return frobenius_exact(parts);
    }
    let mut reduced: Vec<i64> = head.iter().map(|x| x / n).collect();
    reduced.push(*last);
    let inner = PartList::new(reduced).expect("gcd(n, a_d) = 1 keeps the reduced list valid");
    n * frobenius_exact(&inner) + (n - 1) * last
}

/// `f(a, b, c) = g(a, b, c) + a + b + c`.
pub fn f_value(t: &Triple) -> i64 {
    frobenius_exact(&t.parts()) + t.sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parts(v: &[i64]) -> PartList {
        PartList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn part_list_validation() {
        assert_eq!(parts(&[7, 3, 5]).values(), &[3, 5, 7]);
        assert!(matches!(PartList::new(vec![4, 6]), Err(Error::GcdNotOne { gcd: 2, .. })));
        assert!(PartList::new(vec![5]).is_err());
        assert!(PartList::new(vec![5, 5]).is_err());
        assert!(PartList::new(vec![0, 5]).is_err());
    }

    #[test]
    fn triple_validation() {
        let t = Triple::new(7, 3, 5).unwrap();
        assert_eq!((t.a(), t.b(), t.c()), (3, 5, 7));
        assert!(Triple::new(3, 6, 7).is_err());
        assert!(Triple::new(3, 3, 7).is_err());
        assert!(Triple::new(0, 3, 7).is_err());
    }

    #[test]
    fn representability_examples() {
        let p = parts(&[3, 5, 7]);
        assert!(is_representable(8, &p));
        assert!(!is_representable(4, &p));
        assert!(is_representable(0, &p));
        assert!(!is_representable(-1, &p));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(frobenius(&[2, 3]), Ok(1));
        assert_eq!(frobenius(&[3, 5, 7]), Ok(4));
        assert_eq!(frobenius(&[6, 9, 20]), Ok(43));
        assert_eq!(frobenius(&[1, 4, 9]), Ok(-1));
        assert!(frobenius(&[4, 6]).is_err());
        assert_eq!(frobenius_scan(&parts(&[6, 9, 20])), 43);
        assert_eq!(frobenius_scan(&parts(&[1, 5])), -1);
    }

    #[test]
    fn two_argument_examples() {
        assert_eq!(frobenius_two(2, 3), Ok(1));
        assert_eq!(frobenius_two(1, 9), Ok(-1));
        assert_eq!(frobenius_two(5, 7), Ok(23));
        assert!(frobenius_two(4, 6).is_err());
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce_johnson(6, 9, 20), Ok(43));
        assert_eq!(reduce_johnson(4, 6, 9), Ok(11));
        assert_eq!(reduce_johnson(3, 5, 7), Ok(4));
        assert!(reduce_johnson(4, 6, 8).is_err());
        assert_eq!(reduce_brauer_shockley(&parts(&[6, 9, 20])), 43);
        assert_eq!(reduce_brauer_shockley(&parts(&[4, 6, 7])), 9);
        assert_eq!(reduce_brauer_shockley(&parts(&[3, 5, 7])), 4);
    }

    #[test]
    fn f_values() {
        let t = Triple::new(3, 5, 7).unwrap();
        assert_eq!(f_value(&t), 19);
        assert!(19.0 >= (315f64).sqrt());
        for c in [5, 7, 11, 13, 25, 101] {
            assert_eq!(f_value(&Triple::new(2, 3, c).unwrap()), 1 + 5 + c);
        }
    }

    #[test]
    fn definition_soundness() {
        for v in [[3, 5, 7], [4, 9, 11], [10, 13, 17], [5, 6, 7]] {
            let p = parts(&v);
            let g = frobenius_exact(&p);
            let table = representable_table(&p, g + 5 * v[2]);
            assert!(!table[g as usize]);
            assert!(table[g as usize + 1..].iter().all(|&r| r));
        }
    }

    #[test]
    fn apery_minima_are_in_their_classes() {
        let p = parts(&[7, 10, 12]);
        for (r, &m) in apery_set(&p).iter().enumerate() {
            assert_eq!(m % 7, r as i64);
            assert!(is_representable(m, &p));
            assert!(m < 7 || !is_representable(m - 7, &p));
        }
    }

    proptest! {
        #[test]
        fn two_parts_match_formula(a in 1i64..400, b in 1i64..400) {
            prop_assume!(a != b && gcd_i64(a, b) == 1);
            prop_assert_eq!(frobenius(&[a, b]).unwrap(), frobenius_two(a, b).unwrap());
        }

        #[test]
        fn four_parts_match_scan(v in proptest::collection::vec(2i64..80, 4)) {
            let Ok(p) = PartList::new(v) else { return Ok(()); };
            prop_assert_eq!(frobenius_exact(&p), frobenius_scan(&p));
            prop_assert_eq!(reduce_brauer_shockley(&p), frobenius_exact(&p));
        }

        #[test]
        fn adding_parts_never_increases_g(a in 2i64..60, b in 2i64..60, c in 2i64..60, extra in 2i64..200) {
            let Ok(t) = Triple::new(a, b, c) else { return Ok(()); };
            let Ok(more) = PartList::new(vec![a, b, c, extra]) else { return Ok(()); };
            prop_assert!(frobenius_exact(&more) <= frobenius_exact(&t.parts()));
        }
    }
}
