//! Coefficient triples, double equations, and the cubic curves they map to.
//!
//! A [`CoefficientTriple`] holds integers `(a, b, c)` with `a + b = c`,
//! pairwise coprime and all nonzero. The nth-power structure the entries may
//! carry is optional metadata: every construction here manipulates the three
//! integers directly, so the whole pipeline is testable on concrete values
//! like `(7, 9, 16)` or `(9, 16, 25)`.
//!
//! Curves are stored as dense coefficient vectors (never as factored roots),
//! so the reflection transform is a plain coefficient substitution; factored
//! forms are reconstructed only for display.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{is_perfect_square, pairwise_coprime, power_certificate};
use crate::{Error, Result};

/// Integers `(a, b, c)` with `a + b = c`, pairwise coprime, all nonzero.
/// Optionally carries bases `(x, y, z)` and an exponent `n` certifying
/// `a = x^n`, `b = y^n`, `c = z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientTriple {
    #[serde(serialize_with = "crate::ser::bigint")]
    a: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    b: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    c: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<u32>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "crate::ser::opt_bigint_triple"
    )]
    bases: Option<(BigInt, BigInt, BigInt)>,
}

impl CoefficientTriple {
    /// Builds the triple `(a, b, a + b)`, so the additive identity holds by
    /// construction. Fails when any entry is zero or two entries share a
    /// factor.
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        let c = &a + &b;
        Self::from_parts(a, b, c)
    }

    fn from_parts(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if &a + &b != c {
            return Err(Error::InvalidTriple(format!("{a} + {b} != {c}")));
        }
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::InvalidTriple("all entries must be nonzero".into()));
        }
        if !pairwise_coprime(&[a.clone(), b.clone(), c.clone()]) {
            return Err(Error::InvalidTriple(format!(
                "({a}, {b}, {c}) is not pairwise coprime"
            )));
        }
        Ok(Self {
            a,
            b,
            c,
            exponent: None,
            bases: None,
        })
    }

    /// Builds the triple `(x^n, y^n, z^n)` and records the power certificates.
    /// The additive identity must hold for the powers themselves.
    pub fn with_bases(x: BigInt, y: BigInt, z: BigInt, n: u32) -> Result<Self> {
        let (a, b, c) = (x.pow(n), y.pow(n), z.pow(n));
        if &a + &b != c {
            return Err(Error::InvalidTriple(format!(
                "{x}^{n} + {y}^{n} != {z}^{n}"
            )));
        }
        let mut t = Self::from_parts(a, b, c)?;
        debug_assert_eq!(power_certificate(&t.a, n), Some(x.clone()));
        t.exponent = Some(n);
        t.bases = Some((x, y, z));
        Ok(t)
    }

    /// Bypasses every invariant. Exists so tests can probe how the identities
    /// fail on non-triples; never use it to build real inputs.
    #[doc(hidden)]
    pub fn from_raw_parts(a: BigInt, b: BigInt, c: BigInt) -> Self {
        Self {
            a,
            b,
            c,
            exponent: None,
            bases: None,
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn exponent(&self) -> Option<u32> {
        self.exponent
    }

    pub fn bases(&self) -> Option<&(BigInt, BigInt, BigInt)> {
        self.bases.as_ref()
    }
}

impl fmt::Display for CoefficientTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Coefficients of the simultaneous pair
/// `a x^2 + 2 b x y + c y^2 = z^2` and `a' x^2 + 2 b' x y + c' y^2 = t^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleEquation {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub c: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub a_prime: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub b_prime: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub c_prime: BigInt,
}

impl DoubleEquation {
    pub fn new(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        a_prime: BigInt,
        b_prime: BigInt,
        c_prime: BigInt,
    ) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::InvalidParameters(
                "first form is identically zero".into(),
            ));
        }
        if a_prime.is_zero() && b_prime.is_zero() && c_prime.is_zero() {
            return Err(Error::InvalidParameters(
                "second form is identically zero".into(),
            ));
        }
        Ok(Self {
            a,
            b,
            c,
            a_prime,
            b_prime,
            c_prime,
        })
    }
}

/// A plane curve `Y^2 = c3 X^3 + c2 X^2 + c1 X + c0` with exact rational
/// coefficients and `c3 != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicCurve {
    #[serde(serialize_with = "crate::ser::rational")]
    c3: BigRational,
    #[serde(serialize_with = "crate::ser::rational")]
    c2: BigRational,
    #[serde(serialize_with = "crate::ser::rational")]
    c1: BigRational,
    #[serde(serialize_with = "crate::ser::rational")]
    c0: BigRational,
}

impl CubicCurve {
    pub fn new(c3: BigRational, c2: BigRational, c1: BigRational, c0: BigRational) -> Result<Self> {
        if c3.is_zero() {
            return Err(Error::DegenerateCurve);
        }
        Ok(Self { c3, c2, c1, c0 })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(c3: i64, c2: i64, c1: i64, c0: i64) -> Result<Self> {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Self::new(r(c3), r(c2), r(c1), r(c0))
    }

    /// Coefficients in degree-descending order `[c3, c2, c1, c0]`.
    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.c3, &self.c2, &self.c1, &self.c0]
    }

    /// The right-hand side `c3 x^3 + c2 x^2 + c1 x + c0` at `x`.
    pub fn rhs_at(&self, x: &BigRational) -> BigRational {
        ((&self.c3 * x + &self.c2) * x + &self.c1) * x + &self.c0
    }

    /// Exact membership: `y^2 = rhs(x)`.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        y * y == self.rhs_at(x)
    }
}

impl fmt::Display for CubicCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 =")?;
        let mut first = true;
        for (coeff, power) in [
            (&self.c3, 3u32),
            (&self.c2, 2),
            (&self.c1, 1),
            (&self.c0, 0),
        ] {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { "-" } else { "+" };
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, " -")?;
                } else {
                    write!(f, " ")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if power == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{power}")?;
                    }
                }
            }
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

/// True iff `a` and `a'` are both perfect squares, or `c` and `c'` are.
pub fn condition_star(d: &DoubleEquation) -> bool {
    (is_perfect_square(&d.a).is_some() && is_perfect_square(&d.a_prime).is_some())
        || (is_perfect_square(&d.c).is_some() && is_perfect_square(&d.c_prime).is_some())
}

/// Maps a double equation onto its cubic image
/// `Y^2 = X [(b'^2 - a'c') X^2 + (ca' + ac' - 2bb') X + (b^2 - ac)]`.
pub fn double_to_cubic(d: &DoubleEquation) -> Result<CubicCurve> {
    let lead = &d.b_prime * &d.b_prime - &d.a_prime * &d.c_prime;
    if lead.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let linear = &d.c * &d.a_prime + &d.a * &d.c_prime - BigInt::from(2) * &d.b * &d.b_prime;
    let constant = &d.b * &d.b - &d.a * &d.c;
    CubicCurve::new(
        BigRational::from_integer(lead),
        BigRational::from_integer(linear),
        BigRational::from_integer(constant),
        BigRational::zero(),
    )
}

/// The Frey-type curve `Y^2 = X (X - a)(X + b)` attached to a triple.
pub fn frey_curve(t: &CoefficientTriple) -> CubicCurve {
    // X^3 + (b - a) X^2 - a b X
    CubicCurve::new(
        BigRational::one(),
        BigRational::from_integer(t.b() - t.a()),
        BigRational::from_integer(-(t.a() * t.b())),
        BigRational::zero(),
    )
    .expect("leading coefficient is 1")
}

/// The companion curve `Y^2 = -X (X - a)(X - c)`.
pub fn curve_ac(t: &CoefficientTriple) -> CubicCurve {
    // -X^3 + (a + c) X^2 - a c X
    CubicCurve::new(
        -BigRational::one(),
        BigRational::from_integer(t.a() + t.c()),
        BigRational::from_integer(-(t.a() * t.c())),
        BigRational::zero(),
    )
    .expect("leading coefficient is -1")
}

/// The companion curve `Y^2 = X (X - b)(X - c)`.
pub fn curve_bc(t: &CoefficientTriple) -> CubicCurve {
    // X^3 - (b + c) X^2 + b c X
    CubicCurve::new(
        BigRational::one(),
        BigRational::from_integer(-(t.b() + t.c())),
        BigRational::from_integer(t.b() * t.c()),
        BigRational::zero(),
    )
    .expect("leading coefficient is 1")
}

/// Substitutes `X -> -X + s` into the right-hand side (Y unchanged).
///
/// Applying the same `s` twice returns the original curve.
pub fn reflect_transform(curve: &CubicCurve, s: &BigInt) -> CubicCurve {
    let s = BigRational::from_integer(s.clone());
    let [c3, c2, c1, c0] = curve.coefficients();
    let three = BigRational::from_integer(3.into());
    let two = BigRational::from_integer(2.into());
    let n3 = -c3;
    let n2 = &three * &s * c3 + c2;
    let n1 = -(&three * &s * &s * c3) - &two * &s * c2 - c1;
    let n0 = c3 * &s * &s * &s + c2 * &s * &s + c1 * &s + c0;
    CubicCurve::new(n3, n2, n1, n0).expect("reflection preserves degree")
}

/// The square root of `(b - a)^2 + 4ab`; always `|c|` since the radicand is
/// `(a + b)^2`.
pub fn discriminant_quantity(t: &CoefficientTriple) -> BigInt {
    let radicand = (t.b() - t.a()).pow(2) + BigInt::from(4) * t.a() * t.b();
    is_perfect_square(&radicand).expect("(b - a)^2 + 4ab = (a + b)^2 is always a square")
}

/// True iff the Frey-type curve and the `-X (X - a)(X - c)` companion agree
/// at `X = a/2`; this happens exactly when `a + b = c`.
pub fn midpoint_identity_check(t: &CoefficientTriple) -> bool {
    midpoint_identity_raw(t.a(), t.b(), t.c())
}

pub(crate) fn midpoint_identity_raw(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let half_a = BigRational::new(a.clone(), 2.into());
    let lhs = &half_a * (&half_a - BigRational::from_integer(a.clone()))
        * (&half_a + BigRational::from_integer(b.clone()));
    let rhs = -(&half_a * (&half_a - BigRational::from_integer(a.clone()))
        * (&half_a - BigRational::from_integer(c.clone())));
    lhs == rhs
}

/// The unique double equation with `b = 0`, `c = t.b`, `b'^2 - a'c' = 1`
/// whose cubic image is the Frey-type curve of `t`: coefficients
/// `(a, 0, b, 1, 0, -1)`.
pub fn matching_double_equation(t: &CoefficientTriple) -> DoubleEquation {
    DoubleEquation {
        a: t.a().clone(),
        b: BigInt::zero(),
        c: t.b().clone(),
        a_prime: BigInt::one(),
        b_prime: BigInt::zero(),
        c_prime: -BigInt::one(),
    }
}
