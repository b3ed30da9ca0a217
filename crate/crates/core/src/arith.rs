//! Exact integer utilities: gcd, pairwise coprimality, perfect-square and
//! perfect-power detection, squarefree decomposition.
//!
//! All functions are pure and never round; values are [`BigInt`] throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Default trial-division bound for [`squarefree_part`]: inputs with absolute
/// value above this are refused rather than approximated.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// True iff every pair of values has gcd 1. A single value is vacuously
/// pairwise coprime.
pub fn pairwise_coprime(values: &[BigInt]) -> bool {
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            if !a.gcd(b).is_one() {
                return false;
            }
        }
    }
    true
}

/// The nonnegative square root of `a`, when `a` is a perfect square.
/// Negative inputs always return `None`; callers that want |a| take the
/// absolute value explicitly.
pub fn is_perfect_square(a: &BigInt) -> Option<BigInt> {
    if a.is_negative() {
        return None;
    }
    let r = a.sqrt();
    if &r * &r == *a {
        Some(r)
    } else {
        None
    }
}

/// The exact integer nth root of `a`, if one exists: `x` with `x^n = a`.
/// Negative bases are admitted for odd `n`.
pub fn power_certificate(a: &BigInt, n: u32) -> Option<BigInt> {
    assert!(n >= 1, "power_certificate requires n >= 1");
    if a.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root = if a.is_negative() {
        -(a.abs().nth_root(n))
    } else {
        a.nth_root(n)
    };
    if root.pow(n) == *a {
        Some(root)
    } else {
        None
    }
}

/// Squarefree decomposition `a = s * f^2` with `s` squarefree, `sign(s) =
/// sign(a)` and `f > 0`, using the default trial-division bound.
pub fn squarefree_part(a: &BigInt) -> Result<(BigInt, BigInt)> {
    squarefree_part_with_bound(a, DEFAULT_FACTOR_BOUND)
}

/// [`squarefree_part`] with an explicit bound. Errors when `|a| > bound`,
/// since trial division past that point is not guaranteed complete.
pub fn squarefree_part_with_bound(a: &BigInt, bound: u64) -> Result<(BigInt, BigInt)> {
    assert!(!a.is_zero(), "squarefree_part requires a != 0");
    if a.abs() > BigInt::from(bound) {
        return Err(Error::FactorizationLimitExceeded {
            value: a.clone(),
            bound,
        });
    }
    // |a| <= bound <= u64::MAX, so native arithmetic is exact here.
    let mut n: u64 = a.abs().try_into().expect("bounded above by u64");
    let mut squarefree: u64 = 1;
    let mut square: u64 = 1;
    let mut d: u64 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0u32;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            if e % 2 == 1 {
                squarefree *= d;
            }
            square *= d.pow(e / 2);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    squarefree *= n; // leftover cofactor is prime
    let s = BigInt::from(squarefree) * a.signum();
    Ok((s, BigInt::from(square)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&b(12), &b(18)), b(6));
        assert_eq!(gcd(&b(0), &b(5)), b(5));
        assert_eq!(gcd(&b(7), &b(16)), b(1));
        assert_eq!(gcd(&b(0), &b(0)), b(0));
        assert_eq!(gcd(&b(-12), &b(18)), b(6));
    }

    #[test]
    fn pairwise_coprime_examples() {
        assert!(pairwise_coprime(&[b(7), b(9), b(16)]));
        assert!(!pairwise_coprime(&[b(2), b(4), b(9)]));
        assert!(pairwise_coprime(&[b(1)]));
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&b(625)), Some(b(25)));
        assert_eq!(is_perfect_square(&b(-9)), None);
        assert_eq!(is_perfect_square(&b(256)), Some(b(16)));
        assert_eq!(is_perfect_square(&b(0)), Some(b(0)));
        assert_eq!(is_perfect_square(&b(2)), None);
    }

    #[test]
    fn power_certificate_examples() {
        assert_eq!(power_certificate(&b(-64), 3), Some(b(-4)));
        assert_eq!(power_certificate(&b(16), 4), Some(b(2)));
        assert_eq!(power_certificate(&b(7), 3), None);
        assert_eq!(power_certificate(&b(-16), 4), None);
        assert_eq!(power_certificate(&b(-5), 1), Some(b(-5)));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&b(48)).unwrap(), (b(3), b(4)));
        assert_eq!(squarefree_part(&b(-50)).unwrap(), (b(-2), b(5)));
        assert_eq!(squarefree_part(&b(12544)).unwrap(), (b(1), b(112)));
        assert_eq!(squarefree_part(&b(1)).unwrap(), (b(1), b(1)));
        assert_eq!(squarefree_part(&b(30)).unwrap(), (b(30), b(1)));
    }

    #[test]
    fn squarefree_bound_enforced() {
        let big = BigInt::from(DEFAULT_FACTOR_BOUND) + 1;
        assert!(matches!(
            squarefree_part(&big),
            Err(Error::FactorizationLimitExceeded { .. })
        ));
        assert!(squarefree_part_with_bound(&big, DEFAULT_FACTOR_BOUND + 10).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn square_of_anything_is_detected(a in -1_000_000i64..=1_000_000) {
                let sq = b(a) * b(a);
                prop_assert_eq!(is_perfect_square(&sq), Some(b(a).abs()));
            }

            #[test]
            fn power_roundtrip(x in -50i64..=50, n in 1u32..=7) {
                prop_assume!(x >= 0 || n % 2 == 1);
                prop_assume!(x != 0);
                let a = b(x).pow(n);
                prop_assert_eq!(power_certificate(&a, n), Some(b(x)));
            }

            #[test]
            fn squarefree_recomposes(a in -1_000_000i64..=1_000_000) {
                prop_assume!(a != 0);
                let (s, f) = squarefree_part(&b(a)).unwrap();
                prop_assert_eq!(&s * &f * &f, b(a));
                prop_assert!(f.is_positive());
                prop_assert_eq!(s.signum(), b(a).signum());
                // no square divisor > 1 in s
                let limit = s.abs().sqrt();
                let mut d = BigInt::from(2);
                while d <= limit {
                    prop_assert!(!(&s % (&d * &d)).is_zero());
                    d += 1;
                }
            }

            #[test]
            fn gcd_laws(a in -10_000i64..=10_000, c in -10_000i64..=10_000, e in -10_000i64..=10_000) {
                let (a, c, e) = (b(a), b(c), b(e));
                prop_assert_eq!(gcd(&a, &c), gcd(&c, &a));
                prop_assert_eq!(gcd(&gcd(&a, &c), &e), gcd(&a, &gcd(&c, &e)));
                let g = gcd(&a, &c);
                if !g.is_zero() {
                    prop_assert!((&a % &g).is_zero());
                    prop_assert!((&c % &g).is_zero());
                }
            }
        }
    }
}
