//! Pythagorean triple generation from the `(p, q, k)` parametrization, plus
//! the two finite searches built on it: triangles with square area and
//! three squares in arithmetic progression.
//!
//! Canonical orientation puts the even leg first (`W = 2pq` even, `T` odd);
//! consumers that want the swap request it explicitly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::is_perfect_square;
use crate::{Error, Result};

/// A triple `W = k·2pq`, `T = k·(p^2 - q^2)`, `V = k·(p^2 + q^2)` with
/// `W^2 + T^2 = V^2`. `k = 1` with `p > q > 0` coprime of opposite parity
/// gives exactly the primitive triples, even leg first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PythagoreanTriple {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub q: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub k: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub w: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub t: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub v: BigInt,
}

/// Builds the triple for `(p, q, k)`. Requires `p > q > 0`, `k >= 1`; for
/// `k = 1` the parameters must generate a primitive triple (`gcd(p, q) = 1`,
/// opposite parity).
pub fn triple_from(p: &BigInt, q: &BigInt, k: &BigInt) -> Result<PythagoreanTriple> {
    if !(p > q && q.is_positive()) {
        return Err(Error::InvalidParameters(format!(
            "need p > q > 0, got p = {p}, q = {q}"
        )));
    }
    if k < &BigInt::one() {
        return Err(Error::InvalidParameters(format!("need k >= 1, got {k}")));
    }
    if k.is_one() {
        if !p.gcd(q).is_one() {
            return Err(Error::InvalidParameters(format!(
                "primitive triple needs gcd(p, q) = 1, got p = {p}, q = {q}"
            )));
        }
        if (p + q).is_even() {
            return Err(Error::InvalidParameters(format!(
                "primitive triple needs p, q of opposite parity, got p = {p}, q = {q}"
            )));
        }
    }
    let w = k * BigInt::from(2) * p * q;
    let t = k * (p * p - q * q);
    let v = k * (p * p + q * q);
    debug_assert_eq!(&w * &w + &t * &t, &v * &v);
    Ok(PythagoreanTriple {
        p: p.clone(),
        q: q.clone(),
        k: k.clone(),
        w,
        t,
        v,
    })
}

/// Iterates primitive parameter pairs `(p, q)` with `p <= p_bound`.
pub(crate) fn primitive_parameters(p_bound: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=p_bound).flat_map(|p| {
        (1..p)
            .filter(move |q| (p + q) % 2 == 1 && gcd_u64(p, *q) == 1)
            .map(move |q| (p, q))
    })
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All primitive triples with `V <= bound_v`, even leg first, sorted by
/// `(V, W)`; each triple appears exactly once.
pub fn enumerate_primitive(bound_v: &BigInt) -> Vec<PythagoreanTriple> {
    let mut out = Vec::new();
    if bound_v < &BigInt::from(5) {
        return out;
    }
    // p^2 + 1 <= bound_v caps p
    let p_bound: u64 = (bound_v - 1u32)
        .sqrt()
        .try_into()
        .expect("desk-scale bound");
    for (p, q) in primitive_parameters(p_bound) {
        let t = triple_from(&p.into(), &q.into(), &BigInt::one()).expect("parameters are valid");
        if &t.v <= bound_v {
            out.push(t);
        }
    }
    out.sort_by(|x, y| (&x.v, &x.w).cmp(&(&y.v, &y.w)));
    out
}

/// Every triple (primitive or scaled) with `V <= bound_v` whose area
/// `W·T/2` is a perfect square. No such triangle exists; a nonempty result
/// would falsify the classical theorem at this scale.
pub fn square_area_search(bound_v: &BigInt) -> Vec<PythagoreanTriple> {
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * 5 <= *bound_v {
        let inner = bound_v / &k;
        for prim in enumerate_primitive(&inner) {
            let scaled = triple_from(&prim.p, &prim.q, &k).expect("valid scale");
            let area = (&scaled.w * &scaled.t) / BigInt::from(2);
            if is_perfect_square(&area).is_some() {
                out.push(scaled);
            }
        }
        k += 1;
    }
    out.sort_by(|x, y| (&x.v, &x.w, &x.k).cmp(&(&y.v, &y.w, &y.k)));
    out
}

/// Three squares `r^2 < s^2 < t^2` in arithmetic progression with common
/// difference `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquaresInProgression {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub first: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub middle: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub last: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub difference: BigInt,
    pub difference_is_square: bool,
}

/// All progressions of squares `r^2, s^2, t^2` with `0 < r < s < t <= bound`,
/// flagging those whose common difference is itself a perfect square
/// (none exists with `d > 0`).
pub fn squares_in_ap_search(bound: &BigInt) -> Vec<SquaresInProgression> {
    let mut out = Vec::new();
    let bound: u64 = bound.max(&BigInt::zero()).try_into().unwrap_or(u64::MAX);
    for r in 1..=bound {
        for s in (r + 1)..=bound {
            let d = (s * s - r * r) as u128;
            let t2 = (s as u128) * (s as u128) + d;
            let t = t2.isqrt();
            if t * t != t2 || t > bound as u128 {
                continue;
            }
            let d = BigInt::from(d);
            out.push(SquaresInProgression {
                first: BigInt::from(r * r),
                middle: BigInt::from(s * s),
                last: BigInt::from(t * t),
                difference_is_square: is_perfect_square(&d).is_some(),
                difference: d,
            });
        }
    }
    out.sort_by(|x, y| (&x.middle, &x.first).cmp(&(&y.middle, &y.first)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn wtv(t: &PythagoreanTriple) -> (i64, i64, i64) {
        (
            (&t.w).try_into().unwrap(),
            (&t.t).try_into().unwrap(),
            (&t.v).try_into().unwrap(),
        )
    }

    #[test]
    fn triple_from_examples() {
        assert_eq!(wtv(&triple_from(&b(2), &b(1), &b(1)).unwrap()), (4, 3, 5));
        assert_eq!(wtv(&triple_from(&b(3), &b(2), &b(1)).unwrap()), (12, 5, 13));
        assert_eq!(wtv(&triple_from(&b(2), &b(1), &b(3)).unwrap()), (12, 9, 15));
    }

    #[test]
    fn triple_from_rejects() {
        assert!(triple_from(&b(1), &b(2), &b(1)).is_err()); // p < q
        assert!(triple_from(&b(2), &b(1), &b(0)).is_err()); // k < 1
        assert!(triple_from(&b(3), &b(1), &b(1)).is_err()); // same parity
        assert!(triple_from(&b(4), &b(2), &b(1)).is_err()); // gcd > 1
        assert!(triple_from(&b(4), &b(2), &b(2)).is_ok()); // non-primitive scale
    }

    #[test]
    fn enumerate_primitive_examples() {
        let small = enumerate_primitive(&b(5));
        assert_eq!(small.len(), 1);
        assert_eq!(wtv(&small[0]), (4, 3, 5));

        let upto30: Vec<_> = enumerate_primitive(&b(30)).iter().map(wtv).collect();
        assert_eq!(
            upto30,
            vec![(4, 3, 5), (12, 5, 13), (8, 15, 17), (24, 7, 25), (20, 21, 29)]
        );

        assert!(enumerate_primitive(&b(4)).is_empty());
        assert_eq!(enumerate_primitive(&b(100)).len(), 16);
        assert_eq!(enumerate_primitive(&b(500)).len(), 80);
    }

    #[test]
    fn square_area_empty() {
        assert!(square_area_search(&b(5)).is_empty());
        assert!(square_area_search(&b(100)).is_empty());
    }

    #[test]
    fn squares_in_ap_examples() {
        let hits = squares_in_ap_search(&b(7));
        assert_eq!(hits.len(), 1);
        assert_eq!(
            (&hits[0].first, &hits[0].middle, &hits[0].last, &hits[0].difference),
            (&b(1), &b(25), &b(49), &b(24))
        );
        assert!(!hits[0].difference_is_square);

        assert!(squares_in_ap_search(&b(1)).is_empty());

        let upto50 = squares_in_ap_search(&b(50));
        assert_eq!(upto50.len(), 15);
        assert!(upto50.iter().all(|ap| !ap.difference_is_square));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn primitive_triples_are_primitive(bound in 5i64..=400) {
                for t in enumerate_primitive(&b(bound)) {
                    prop_assert_eq!(&t.w * &t.w + &t.t * &t.t, &t.v * &t.v);
                    prop_assert!(t.w.gcd(&t.t).gcd(&t.v).is_one());
                    prop_assert!((&t.w % 2i32).is_zero());
                    prop_assert!(t.v <= b(bound));
                }
            }

            #[test]
            fn enumeration_is_prefix_monotone(b1 in 5i64..=200, extra in 0i64..=200) {
                let small = enumerate_primitive(&b(b1));
                let large = enumerate_primitive(&b(b1 + extra));
                prop_assert!(large.len() >= small.len());
                prop_assert_eq!(&large[..small.len()], &small[..]);
            }

            #[test]
            fn ap_differences_never_square(bound in 1i64..=120) {
                for ap in squares_in_ap_search(&b(bound)) {
                    prop_assert!(!ap.difference_is_square);
                    prop_assert_eq!(&ap.middle - &ap.first, ap.difference.clone());
                    prop_assert_eq!(&ap.last - &ap.middle, ap.difference.clone());
                }
            }
        }
    }
}
