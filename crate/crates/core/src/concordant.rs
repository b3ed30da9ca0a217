//! Simultaneous-square form pairs `X^2 + mY^2`, `X^2 + nY^2`, the double
//! equation `P^2 + bQ^2 = V^2`, `P^2 - aQ^2 = T^2` attached to a coefficient
//! triple, its product map onto the Frey-type curve, and the primitive-case
//! square analysis.
//!
//! The concordance search scans `X, Y` independently up to its bound rather
//! than parametrizing; bounds are desk scale and exactness is the priority.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::is_perfect_square;
use crate::curves::{frey_curve, CoefficientTriple};
use crate::systems::ClaimResult;
use crate::{Error, Result};

/// Parameters of the two forms `X^2 + mY^2` and `X^2 + nY^2`; the pair is
/// concordant if both can be made squares with `X, Y` nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcordantPair {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub m: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub n: BigInt,
}

impl ConcordantPair {
    pub fn new(m: BigInt, n: BigInt) -> Result<Self> {
        if m == n {
            return Err(Error::InvalidParameters(
                "form parameters must differ".into(),
            ));
        }
        if m.is_zero() || n.is_zero() {
            return Err(Error::InvalidParameters(
                "form parameters must be nonzero".into(),
            ));
        }
        Ok(Self { m, n })
    }
}

/// A witness `(x, y, z, t)` with `x^2 + m y^2 = z^2` and `x^2 + n y^2 = t^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ConcordantSolution {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub x: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub y: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub z: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub t: BigInt,
}

/// All `0 < x, y <= bound` making both forms perfect squares, sorted by
/// `(x, y)`. The scan runs in native 128-bit arithmetic when the bound and
/// parameters allow it (they always do at desk scale) and in big integers
/// otherwise; results are identical.
pub fn search_concordant(pair: &ConcordantPair, bound: u64) -> Vec<ConcordantSolution> {
    let fits = |v: &BigInt| i64::try_from(v).is_ok();
    let mut out = if bound <= 1 << 30 && fits(&pair.m) && fits(&pair.n) {
        let m = i128::try_from(&pair.m).expect("checked");
        let n = i128::try_from(&pair.n).expect("checked");
        search_native(m, n, bound)
    } else {
        search_big(&pair.m, &pair.n, bound)
    };
    out.sort();
    out
}

fn square_root_i128(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = (v as u128).isqrt() as i128;
    (r * r == v).then_some(r)
}

fn search_native(m: i128, n: i128, bound: u64) -> Vec<ConcordantSolution> {
    // partitioned by x; the caller's final sort makes the output independent
    // of the partitioning
    (1..bound as usize + 1)
        .into_par_iter()
        .with_min_len(256)
        .map(|x| {
            let x = x as i128;
            let x2 = x * x;
            let mut hits = Vec::new();
            for y in 1..=bound as i128 {
                let s1 = x2 + m * y * y;
                if s1 <= 0 {
                    continue;
                }
                let Some(z) = square_root_i128(s1) else {
                    continue;
                };
                let s2 = x2 + n * y * y;
                if s2 <= 0 {
                    continue;
                }
                if let Some(t) = square_root_i128(s2) {
                    hits.push(ConcordantSolution {
                        x: x.into(),
                        y: y.into(),
                        z: z.into(),
                        t: t.into(),
                    });
                }
            }
            hits
        })
        .flatten()
        .collect()
}

fn search_big(m: &BigInt, n: &BigInt, bound: u64) -> Vec<ConcordantSolution> {
    let mut hits = Vec::new();
    for x in 1..=bound {
        let x2 = BigInt::from(x) * BigInt::from(x);
        for y in 1..=bound {
            let y2 = BigInt::from(y) * BigInt::from(y);
            let s1 = &x2 + m * &y2;
            if !s1.is_positive() {
                continue;
            }
            let Some(z) = is_perfect_square(&s1) else {
                continue;
            };
            let s2 = &x2 + n * &y2;
            if !s2.is_positive() {
                continue;
            }
            if let Some(t) = is_perfect_square(&s2) {
                hits.push(ConcordantSolution {
                    x: x.into(),
                    y: y.into(),
                    z,
                    t,
                });
            }
        }
    }
    hits
}

/// A solution of the double pair `P^2 + bQ^2 = V^2`, `P^2 - aQ^2 = T^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EulerDoubleSolution {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub q: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub v: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub t: BigInt,
}

impl EulerDoubleSolution {
    pub fn new(p: BigInt, q: BigInt, v: BigInt, t: BigInt) -> Self {
        Self { p, q, v, t }
    }

    fn describe(&self) -> String {
        format!(
            "P = {}, Q = {}, V = {}, T = {}",
            self.p, self.q, self.v, self.t
        )
    }
}

/// Evaluates the two equations of the double pair exactly, one result each.
pub fn double_equation_check(
    t: &CoefficientTriple,
    sol: &EulerDoubleSolution,
) -> [ClaimResult; 2] {
    let p2 = &sol.p * &sol.p;
    let q2 = &sol.q * &sol.q;
    let plus_lhs = &p2 + t.b() * &q2;
    let plus_rhs = &sol.v * &sol.v;
    let minus_lhs = &p2 - t.a() * &q2;
    let minus_rhs = &sol.t * &sol.t;
    [
        ClaimResult {
            claim_id: "double-plus".into(),
            triple: t.clone(),
            solution: None,
            holds: plus_lhs == plus_rhs,
            lhs: plus_lhs,
            rhs: plus_rhs,
            note: format!("P^2 + b*Q^2 = V^2 at {}", sol.describe()),
        },
        ClaimResult {
            claim_id: "double-minus".into(),
            triple: t.clone(),
            solution: None,
            holds: minus_lhs == minus_rhs,
            lhs: minus_lhs,
            rhs: minus_rhs,
            note: format!("P^2 - a*Q^2 = T^2 at {}", sol.describe()),
        },
    ]
}

/// Multiplies the two equations of the double pair and rescales:
/// `X = P^2/Q^2`, `Y = P V T / Q^3`. The image always lies on the Frey-type
/// curve of the triple; scaling `(P, Q, V, T)` by a common factor does not
/// move it.
pub fn double_to_frey_point(
    t: &CoefficientTriple,
    sol: &EulerDoubleSolution,
) -> Result<(BigRational, BigRational)> {
    if sol.q.is_zero() {
        return Err(Error::InvalidParameters("Q must be nonzero".into()));
    }
    if double_equation_check(t, sol).iter().any(|r| !r.holds) {
        return Err(Error::NotOnDoubleEquation);
    }
    let q2 = &sol.q * &sol.q;
    let x = BigRational::new(&sol.p * &sol.p, q2.clone());
    let y = BigRational::new(&sol.p * &sol.v * &sol.t, &q2 * &sol.q);
    debug_assert!(frey_curve(t).contains(&x, &y));
    Ok((x, y))
}

/// Scan bound used by [`primitive_square_analysis`] when it looks for small
/// solutions of the double pair.
pub const PRIMITIVE_SCAN_BOUND: u64 = 50;

/// Outcome of the primitive-case analysis: whether `c` is a perfect square,
/// the candidate `(P0, Q0) = (sqrt(c), 1)` if so, the square checks that
/// candidate passes or fails, and the identities `V^2 = 2cb`,
/// `T^2 = c(b - a)` evaluated on every small solution of the double pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimitiveSquareReport {
    pub triple: CoefficientTriple,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub c_root: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<EulerDoubleSolution>,
    pub candidate_claims: Vec<ClaimResult>,
    pub scan_bound: u64,
    pub scan_solutions: Vec<EulerDoubleSolution>,
    pub scan_claims: Vec<ClaimResult>,
}

/// Tests the primitive-case deduction on a triple: if `c` is a perfect
/// square, the candidate `(P0, Q0) = (sqrt(c), 1)` is reported together with
/// exact checks of both forms; all small solutions of the double pair are
/// scanned and the common-divisor-case identities evaluated on each.
pub fn primitive_square_analysis(t: &CoefficientTriple) -> PrimitiveSquareReport {
    let c_root = is_perfect_square(t.c());
    let mut candidate = None;
    let mut candidate_claims = Vec::new();
    if let Some(p0) = &c_root {
        let plus = p0 * p0 + t.b();
        let minus = p0 * p0 - t.a();
        let v = if plus.is_positive() {
            is_perfect_square(&plus)
        } else {
            None
        };
        let tt = if minus.is_positive() {
            is_perfect_square(&minus)
        } else {
            None
        };
        candidate_claims.push(ClaimResult {
            claim_id: "candidate-plus".into(),
            triple: t.clone(),
            solution: None,
            holds: v.is_some(),
            lhs: plus.clone(),
            rhs: v.as_ref().map(|r| r * r).unwrap_or_else(BigInt::zero),
            note: format!("P0^2 + b = {plus} at P0 = {p0}, Q0 = 1"),
        });
        candidate_claims.push(ClaimResult {
            claim_id: "candidate-minus".into(),
            triple: t.clone(),
            solution: None,
            holds: tt.is_some(),
            lhs: minus.clone(),
            rhs: tt.as_ref().map(|r| r * r).unwrap_or_else(BigInt::zero),
            note: format!("P0^2 - a = {minus} at P0 = {p0}, Q0 = 1"),
        });
        if let (Some(v), Some(tt)) = (v, tt) {
            candidate = Some(EulerDoubleSolution::new(p0.clone(), BigInt::one(), v, tt));
        }
    }

    // small solutions of the double pair are exactly the concordant hits of
    // the pair (m, n) = (b, -a)
    let scan_solutions: Vec<EulerDoubleSolution> =
        match ConcordantPair::new(t.b().clone(), -t.a()) {
            Ok(pair) => search_concordant(&pair, PRIMITIVE_SCAN_BOUND)
                .into_iter()
                .map(|s| EulerDoubleSolution::new(s.x, s.y, s.z, s.t))
                .collect(),
            Err(_) => Vec::new(),
        };
    let mut scan_claims = Vec::new();
    for sol in &scan_solutions {
        let v2 = &sol.v * &sol.v;
        let rhs_v = BigInt::from(2) * t.c() * t.b();
        scan_claims.push(ClaimResult {
            claim_id: "product-v".into(),
            triple: t.clone(),
            solution: None,
            holds: v2 == rhs_v,
            lhs: v2,
            rhs: rhs_v,
            note: format!("V^2 = 2*c*b at {}", sol.describe()),
        });
        let t2 = &sol.t * &sol.t;
        let rhs_t = t.c() * (t.b() - t.a());
        scan_claims.push(ClaimResult {
            claim_id: "product-t".into(),
            triple: t.clone(),
            solution: None,
            holds: t2 == rhs_t,
            lhs: t2,
            rhs: rhs_t,
            note: format!("T^2 = c*(b - a) at {}", sol.describe()),
        });
    }

    PrimitiveSquareReport {
        triple: t.clone(),
        c_root,
        candidate,
        candidate_claims,
        scan_bound: PRIMITIVE_SCAN_BOUND,
        scan_solutions,
        scan_claims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn triple(a: i64, bb: i64) -> CoefficientTriple {
        CoefficientTriple::new(a.into(), bb.into()).unwrap()
    }

    fn pair(m: i64, n: i64) -> ConcordantPair {
        ConcordantPair::new(m.into(), n.into()).unwrap()
    }

    fn xyzt(s: &ConcordantSolution) -> (i64, i64, i64, i64) {
        (
            (&s.x).try_into().unwrap(),
            (&s.y).try_into().unwrap(),
            (&s.z).try_into().unwrap(),
            (&s.t).try_into().unwrap(),
        )
    }

    #[test]
    fn pair_validation() {
        assert!(ConcordantPair::new(1.into(), 1.into()).is_err());
        assert!(ConcordantPair::new(0.into(), 3.into()).is_err());
        assert!(ConcordantPair::new(1.into(), (-1).into()).is_ok());
    }

    #[test]
    fn concordant_one_seven() {
        let hits = search_concordant(&pair(1, 7), 100);
        // every hit is a multiple of (3, 4, 5, 11)
        assert_eq!(hits.len(), 25);
        assert_eq!(xyzt(&hits[0]), (3, 4, 5, 11));
        for (i, h) in hits.iter().enumerate() {
            let k = (i + 1) as i64;
            assert_eq!(xyzt(h), (3 * k, 4 * k, 5 * k, 11 * k));
        }
    }

    #[test]
    fn discordant_pairs_small() {
        assert!(search_concordant(&pair(1, 3), 2000).is_empty());
        assert!(search_concordant(&pair(1, 4), 2000).is_empty());
        // the scans agree between native and big-integer paths
        let native = search_concordant(&pair(1, 7), 60);
        let big = search_big(&b(1), &b(7), 60);
        let mut big = big;
        big.sort();
        assert_eq!(native, big);
    }

    #[test]
    fn double_equation_examples() {
        let t = triple(7, 9);
        let sol = EulerDoubleSolution::new(b(4), b(1), b(5), b(3));
        let [plus, minus] = double_equation_check(&t, &sol);
        assert!(plus.holds && minus.holds);
        assert_eq!((plus.lhs, plus.rhs), (b(25), b(25)));
        assert_eq!((minus.lhs, minus.rhs), (b(9), b(9)));

        let bad = EulerDoubleSolution::new(b(4), b(1), b(5), b(4));
        let [plus, minus] = double_equation_check(&t, &bad);
        assert!(plus.holds);
        assert!(!minus.holds);
        assert_eq!((minus.lhs, minus.rhs), (b(9), b(16)));

        // no small solution for the unit triple
        assert!(primitive_square_analysis(&triple(1, 1))
            .scan_solutions
            .is_empty());
    }

    #[test]
    fn map_to_frey_examples() {
        let t = triple(7, 9);
        let sol = EulerDoubleSolution::new(b(4), b(1), b(5), b(3));
        let (x, y) = double_to_frey_point(&t, &sol).unwrap();
        assert_eq!(x, BigRational::from_integer(b(16)));
        assert_eq!(y, BigRational::from_integer(b(60)));
        assert!(frey_curve(&t).contains(&x, &y));

        // scale invariance
        let scaled = EulerDoubleSolution::new(b(8), b(2), b(10), b(6));
        assert_eq!(double_to_frey_point(&t, &scaled).unwrap(), (x, y));

        let invalid = EulerDoubleSolution::new(b(4), b(1), b(5), b(4));
        assert_eq!(
            double_to_frey_point(&t, &invalid),
            Err(Error::NotOnDoubleEquation)
        );
        let zero_q = EulerDoubleSolution::new(b(4), b(0), b(4), b(4));
        assert!(matches!(
            double_to_frey_point(&t, &zero_q),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn primitive_analysis_examples() {
        // c = 16 is a square and the candidate solves both forms
        let report = primitive_square_analysis(&triple(7, 9));
        assert_eq!(report.c_root, Some(b(4)));
        assert!(report.candidate_claims.iter().all(|c| c.holds));
        let cand = report.candidate.expect("candidate exists");
        assert_eq!(
            (cand.p, cand.q, cand.v, cand.t),
            (b(4), b(1), b(5), b(3))
        );

        // c = 25 is a square but 25 + 16 = 41 is not
        let report = primitive_square_analysis(&triple(9, 16));
        assert_eq!(report.c_root, Some(b(5)));
        assert!(report.candidate.is_none());
        let plus = &report.candidate_claims[0];
        assert!(!plus.holds);
        assert_eq!(plus.lhs, b(41));
        let minus = &report.candidate_claims[1];
        assert!(minus.holds);
        assert_eq!(minus.lhs, b(16));

        // c = 2 is not a square: no candidate at all
        let report = primitive_square_analysis(&triple(1, 1));
        assert_eq!(report.c_root, None);
        assert!(report.candidate.is_none());
        assert!(report.candidate_claims.is_empty());
    }

    #[test]
    fn primitive_analysis_scan_claims() {
        // the double pair of (7, 9, 16) has small solutions k*(4, 1, 5, 3);
        // the common-divisor identities fail on them, descriptively
        let report = primitive_square_analysis(&triple(7, 9));
        assert_eq!(report.scan_solutions.len(), 12);
        assert_eq!(report.scan_solutions[0].p, b(4));
        assert!(report.scan_claims.iter().all(|c| !c.holds));
        // V^2 = 25 vs 2*c*b = 288 on the first solution
        assert_eq!(report.scan_claims[0].lhs, b(25));
        assert_eq!(report.scan_claims[0].rhs, b(288));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            /// Every hit verifies exactly, and the scan is monotone in the bound.
            #[test]
            fn hits_verify_and_scan_is_monotone(m in -6i64..=6, n in -6i64..=6, bound in 1u64..=60, extra in 0u64..=40) {
                prop_assume!(m != n && m != 0 && n != 0);
                let p = pair(m, n);
                let small = search_concordant(&p, bound);
                for h in &small {
                    prop_assert_eq!(&h.x * &h.x + b(m) * &h.y * &h.y, &h.z * &h.z);
                    prop_assert_eq!(&h.x * &h.x + b(n) * &h.y * &h.y, &h.t * &h.t);
                    prop_assert!(h.x.is_positive() && h.y.is_positive());
                }
                let large = search_concordant(&p, bound + extra);
                for h in &small {
                    prop_assert!(large.contains(h));
                }
            }

            /// The frey image never depends on the common scale of the solution.
            #[test]
            fn frey_image_is_scale_invariant(k in 1i64..=9) {
                let t = triple(7, 9);
                let base = EulerDoubleSolution::new(b(4), b(1), b(5), b(3));
                let scaled = EulerDoubleSolution::new(b(4 * k), b(k), b(5 * k), b(3 * k));
                prop_assert_eq!(
                    double_to_frey_point(&t, &base).unwrap(),
                    double_to_frey_point(&t, &scaled).unwrap()
                );
            }
        }
    }
}
