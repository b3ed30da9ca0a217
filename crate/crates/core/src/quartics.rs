//! Oblique space quartics `A u^2 + alpha = B v^2 + beta = C w^2 + gamma`,
//! their homogeneous membership equation, the pair of quadrics whose common
//! zero locus carves them out of projective 3-space, and the exact mapping
//! onto the cubic with roots `alpha, beta, gamma`.
//!
//! The mapping needs `A*B*C` to be a perfect square; everything else here
//! works for arbitrary nonzero scale coefficients. The squarefree requirement
//! sometimes imposed on `A, B, C` is not enforced, since a square factor in a
//! coefficient does not affect solvability; [`crate::arith::squarefree_part`]
//! is available for diagnostics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::is_perfect_square;
use crate::curves::{CoefficientTriple, CubicCurve};
use crate::{Error, Result};

/// An oblique quartic with scale coefficients `(a, b, c)` (all nonzero) and
/// shifts `(alpha, beta, gamma)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticOmega {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub c: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub alpha: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub beta: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub gamma: BigInt,
}

impl QuarticOmega {
    pub fn new(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        alpha: BigInt,
        beta: BigInt,
        gamma: BigInt,
    ) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::InvalidParameters(
                "scale coefficients must be nonzero".into(),
            ));
        }
        Ok(Self {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    }

    /// `delta = (beta - gamma)(gamma - alpha)(alpha - beta)`.
    pub fn delta(&self) -> BigInt {
        (&self.beta - &self.gamma) * (&self.gamma - &self.alpha) * (&self.alpha - &self.beta)
    }

    /// Exact square root of `a*b*c` when it exists; the mapping onto the
    /// cubic requires it.
    pub fn sqrt_abc(&self) -> Option<BigInt> {
        is_perfect_square(&(&self.a * &self.b * &self.c))
    }
}

/// A point in homogeneous coordinates `(U, V, W, T)`. The default
/// constructor divides out the gcd; `scaled` marks points kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticPoint {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub u: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub v: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub w: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub t: BigInt,
    pub scaled: bool,
}

impl QuarticPoint {
    /// Primitive representative: divides all coordinates by their gcd.
    pub fn new(u: BigInt, v: BigInt, w: BigInt, t: BigInt) -> Self {
        let g = u.gcd(&v).gcd(&w).gcd(&t);
        if g.is_zero() || g.is_one() {
            return Self {
                u,
                v,
                w,
                t,
                scaled: false,
            };
        }
        Self {
            u: u / &g,
            v: v / &g,
            w: w / &g,
            t: t / &g,
            scaled: false,
        }
    }

    /// Keeps the coordinates exactly as given.
    pub fn new_scaled(u: BigInt, v: BigInt, w: BigInt, t: BigInt) -> Self {
        Self {
            u,
            v,
            w,
            t,
            scaled: true,
        }
    }
}

/// True iff `A U^2 + alpha T^2 = B V^2 + beta T^2 = C W^2 + gamma T^2`
/// holds exactly.
pub fn omega_membership(q: &QuarticOmega, pt: &QuarticPoint) -> bool {
    let t2 = &pt.t * &pt.t;
    let first = &q.a * &pt.u * &pt.u + &q.alpha * &t2;
    let second = &q.b * &pt.v * &pt.v + &q.beta * &t2;
    let third = &q.c * &pt.w * &pt.w + &q.gamma * &t2;
    first == second && second == third
}

/// The quadric pair
/// `Phi = alpha(beta-gamma) A U^2 + beta(gamma-alpha) B V^2 + gamma(alpha-beta) C W^2 - delta T^2`
/// and
/// `Psi = (beta-gamma) A U^2 + (gamma-alpha) B V^2 + (alpha-beta) C W^2`.
/// Both vanish on every point of the quartic.
pub fn phi_psi(q: &QuarticOmega, pt: &QuarticPoint) -> (BigInt, BigInt) {
    let u2 = &pt.u * &pt.u;
    let v2 = &pt.v * &pt.v;
    let w2 = &pt.w * &pt.w;
    let t2 = &pt.t * &pt.t;
    let bg = &q.beta - &q.gamma;
    let ga = &q.gamma - &q.alpha;
    let ab = &q.alpha - &q.beta;
    let phi = &q.alpha * &bg * &q.a * &u2
        + &q.beta * &ga * &q.b * &v2
        + &q.gamma * &ab * &q.c * &w2
        - q.delta() * &t2;
    let psi = bg * &q.a * u2 + ga * &q.b * v2 + ab * &q.c * w2;
    (phi, psi)
}

/// The monic cubic `Y^2 = (X - alpha)(X - beta)(X - gamma)`.
pub fn cubic_from_roots(alpha: &BigInt, beta: &BigInt, gamma: &BigInt) -> CubicCurve {
    let e1 = alpha + beta + gamma;
    let e2 = alpha * beta + alpha * gamma + beta * gamma;
    let e3 = alpha * beta * gamma;
    CubicCurve::new(
        BigRational::one(),
        BigRational::from_integer(-e1),
        BigRational::from_integer(e2),
        BigRational::from_integer(-e3),
    )
    .expect("monic cubic")
}

/// Maps a point of the quartic into the affine chart `u = U/T, ...` and then
/// onto the cubic with roots `(alpha, beta, gamma)`:
/// `x = A u^2 + alpha`, `y = sqrt(ABC) u v w`.
pub fn map_to_cubic(q: &QuarticOmega, pt: &QuarticPoint) -> Result<(BigRational, BigRational)> {
    let scale = q.sqrt_abc().ok_or(Error::BadScale)?;
    if !omega_membership(q, pt) {
        return Err(Error::NotOnQuartic);
    }
    if pt.t.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let u = BigRational::new(pt.u.clone(), pt.t.clone());
    let v = BigRational::new(pt.v.clone(), pt.t.clone());
    let w = BigRational::new(pt.w.clone(), pt.t.clone());
    let x = BigRational::from_integer(q.a.clone()) * &u * &u
        + BigRational::from_integer(q.alpha.clone());
    let y = BigRational::from_integer(scale) * u * v * w;
    debug_assert!(cubic_from_roots(&q.alpha, &q.beta, &q.gamma).contains(&x, &y));
    Ok((x, y))
}

/// The quartic attached to the first system of a triple:
/// `Omega(c^2, a, a; 0, b, c)`. Its membership equation is
/// `c^2 U^2 = a V^2 + b T^2 = a W^2 + c T^2`, and `A*B*C = (c*a)^2` is
/// always a perfect square.
pub fn omega_for_system9(t: &CoefficientTriple) -> QuarticOmega {
    QuarticOmega::new(
        t.c() * t.c(),
        t.a().clone(),
        t.a().clone(),
        BigInt::zero(),
        t.b().clone(),
        t.c().clone(),
    )
    .expect("triple entries are nonzero")
}

/// The quartic attached to the second system: `Omega(a^2, c, c; 0, -b, a)`.
pub fn omega_for_system10(t: &CoefficientTriple) -> QuarticOmega {
    QuarticOmega::new(
        t.a() * t.a(),
        t.c().clone(),
        t.c().clone(),
        BigInt::zero(),
        -t.b(),
        t.a().clone(),
    )
    .expect("triple entries are nonzero")
}

/// The distinguished rational point on `Y^2 = X(X - b)(X - c)` obtained from
/// the homogeneous assignment `U = 1, V = sqrt(c + b), W = sqrt(c),
/// T = sqrt(b)`: requires `c + b`, `c`, `b` all perfect squares and returns
/// `x = c^2/b`, `y = (a c / b^2) sqrt(c+b) sqrt(c) sqrt(b)`.
pub fn canonical_rational_point(t: &CoefficientTriple) -> Result<(BigRational, BigRational)> {
    let mut failing = Vec::new();
    let vb = is_perfect_square(&(t.c() + t.b()));
    if vb.is_none() {
        failing.push(format!("c + b = {}", t.c() + t.b()));
    }
    let wc = is_perfect_square(t.c());
    if wc.is_none() {
        failing.push(format!("c = {}", t.c()));
    }
    let tb = is_perfect_square(t.b());
    if tb.is_none() {
        failing.push(format!("b = {}", t.b()));
    }
    if !failing.is_empty() {
        return Err(Error::PreconditionNotSquare { failing });
    }
    let (rv, rw, rt) = (vb.unwrap(), wc.unwrap(), tb.unwrap());
    let x = BigRational::new(t.c() * t.c(), t.b().clone());
    let y = BigRational::new(t.a() * t.c(), t.b() * t.b()) * (rv * rw * rt);
    debug_assert!(crate::curves::curve_bc(t).contains(&x, &y));
    Ok((x, y))
}
