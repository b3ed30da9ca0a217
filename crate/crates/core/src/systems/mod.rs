//! The three-equation Diophantine systems attached to a coefficient triple,
//! the eight oblique quartic variants, bounded solution enumeration over the
//! Pythagorean parametrization, and the joint-solvability report.
//!
//! Solutions are sought over primitive Pythagorean `(W, T, V)` only (plus the
//! explicit orientation swap of `W` and `T`); scaled triangles sit behind the
//! `scaled` flag and are never produced by the enumerators here. An empty
//! enumeration therefore never claims unsolvability beyond its bound.

pub mod claims;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::is_perfect_square;
use crate::curves::CoefficientTriple;
use crate::pythagoras::primitive_parameters;
pub use claims::{claims_audit, registry, run_claim, ClaimResult, ClaimSpec};

/// Which system or quartic variant a [`DiophantineSystem`] instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    System9,
    System10,
    Quartic1,
    Quartic2,
    Quartic3,
    Quartic4,
    Quartic5,
    Quartic6,
    Quartic7,
    Quartic8,
}

impl SystemKind {
    pub const ALL: [SystemKind; 10] = [
        SystemKind::System9,
        SystemKind::System10,
        SystemKind::Quartic1,
        SystemKind::Quartic2,
        SystemKind::Quartic3,
        SystemKind::Quartic4,
        SystemKind::Quartic5,
        SystemKind::Quartic6,
        SystemKind::Quartic7,
        SystemKind::Quartic8,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            SystemKind::System9 => "system9",
            SystemKind::System10 => "system10",
            SystemKind::Quartic1 => "quartic1",
            SystemKind::Quartic2 => "quartic2",
            SystemKind::Quartic3 => "quartic3",
            SystemKind::Quartic4 => "quartic4",
            SystemKind::Quartic5 => "quartic5",
            SystemKind::Quartic6 => "quartic6",
            SystemKind::Quartic7 => "quartic7",
            SystemKind::Quartic8 => "quartic8",
        }
    }

    pub fn is_quartic(self) -> bool {
        !matches!(self, SystemKind::System9 | SystemKind::System10)
    }
}

/// One indeterminate of the systems. The triple- and quadruple-primed
/// variables of the second system share storage with `U'` and `U''` in
/// [`SystemSolution`]; they are distinguished only for display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Indeterminate {
    UPrime,
    USecond,
    UTriple,
    UQuad,
    U,
    W,
    T,
    V,
}

impl Indeterminate {
    fn symbol(self) -> &'static str {
        match self {
            Indeterminate::UPrime => "U'",
            Indeterminate::USecond => "U''",
            Indeterminate::UTriple => "U'''",
            Indeterminate::UQuad => "U''''",
            Indeterminate::U => "U",
            Indeterminate::W => "W",
            Indeterminate::T => "T",
            Indeterminate::V => "V",
        }
    }

    fn value(self, sol: &SystemSolution) -> Option<BigInt> {
        match self {
            Indeterminate::UPrime | Indeterminate::UTriple => Some(sol.u_prime.clone()),
            Indeterminate::USecond | Indeterminate::UQuad => Some(sol.u_second.clone()),
            Indeterminate::U => sol.u.clone(),
            Indeterminate::W => Some(sol.w.clone()),
            Indeterminate::T => Some(sol.t.clone()),
            Indeterminate::V => Some(sol.v.clone()),
        }
    }
}

/// `coeff * var^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareTerm {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub coeff: BigInt,
    pub var: Indeterminate,
}

fn term(coeff: BigInt, var: Indeterminate) -> SquareTerm {
    SquareTerm { coeff, var }
}

/// A homogeneous quadratic equation: sum of square terms on each side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormEquation {
    pub lhs: Vec<SquareTerm>,
    pub rhs: Vec<SquareTerm>,
}

impl FormEquation {
    fn eval_side(side: &[SquareTerm], sol: &SystemSolution) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for t in side {
            let v = t.var.value(sol)?;
            acc += &t.coeff * &v * &v;
        }
        Some(acc)
    }

    /// Evaluates both sides exactly; `None` when the solution lacks a
    /// variable the equation uses (the normalized `U`).
    pub fn evaluate(&self, sol: &SystemSolution) -> Option<(BigInt, BigInt)> {
        Some((
            Self::eval_side(&self.lhs, sol)?,
            Self::eval_side(&self.rhs, sol)?,
        ))
    }
}

fn fmt_side(side: &[SquareTerm], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, t) in side.iter().enumerate() {
        let mag = t.coeff.abs();
        if i == 0 {
            if t.coeff.is_negative() {
                write!(f, "-")?;
            }
        } else if t.coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "{}^2", t.var.symbol())?;
    }
    Ok(())
}

impl fmt::Display for FormEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_side(&self.lhs, f)?;
        write!(f, " = ")?;
        fmt_side(&self.rhs, f)
    }
}

/// A concrete system instance: kind, coefficient triple, and the equations
/// with their exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiophantineSystem {
    pub kind: SystemKind,
    pub triple: CoefficientTriple,
    pub equations: Vec<FormEquation>,
}

/// One assignment of the indeterminates. `u` is the normalized factor when
/// it exists: for the first system `U' = |c| U`, for the second `U''' = |a| U''`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SystemSolution {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub u_prime: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub u_second: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub w: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub t: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub v: BigInt,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub u: Option<BigInt>,
    pub scaled: bool,
}

impl SystemSolution {
    pub fn new(u_prime: BigInt, u_second: BigInt, w: BigInt, t: BigInt, v: BigInt) -> Self {
        Self {
            u_prime,
            u_second,
            w,
            t,
            v,
            u: None,
            scaled: false,
        }
    }

    pub fn with_u(mut self, u: BigInt) -> Self {
        self.u = Some(u);
        self
    }
}

impl fmt::Display for SystemSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.u_prime, self.u_second, self.w, self.t, self.v
        )
    }
}

/// Instantiates the coefficient matrices of the chosen variant for a triple.
pub fn build_system(kind: SystemKind, triple: &CoefficientTriple) -> DiophantineSystem {
    use Indeterminate::*;
    let (a, b, c) = (triple.a(), triple.b(), triple.c());
    let one = BigInt::one;
    let pythagoras = FormEquation {
        lhs: vec![term(one(), W), term(one(), T)],
        rhs: vec![term(one(), V)],
    };
    let equations = match kind {
        SystemKind::System9 => vec![
            FormEquation {
                lhs: vec![term(a.clone(), V), term(b.clone(), T)],
                rhs: vec![term(one(), UPrime)],
            },
            FormEquation {
                lhs: vec![term(a.clone(), W), term(c.clone(), T)],
                rhs: vec![term(one(), USecond)],
            },
            pythagoras,
        ],
        SystemKind::System10 => vec![
            FormEquation {
                lhs: vec![term(c.clone(), V), term(-b, T)],
                rhs: vec![term(one(), UTriple)],
            },
            FormEquation {
                lhs: vec![term(c.clone(), W), term(a.clone(), T)],
                rhs: vec![term(one(), UQuad)],
            },
            pythagoras,
        ],
        quartic => {
            let (lead, mid, right) = quartic_forms(quartic, a, b, c);
            vec![
                FormEquation {
                    lhs: vec![term(lead.clone(), U)],
                    rhs: mid,
                },
                FormEquation {
                    lhs: vec![term(lead, U)],
                    rhs: right,
                },
            ]
        }
    };
    DiophantineSystem {
        kind,
        triple: triple.clone(),
        equations,
    }
}

/// Coefficients of one quartic variant: the square lead on `U^2` and the two
/// two-term forms it must equal.
fn quartic_forms(
    kind: SystemKind,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
) -> (BigInt, Vec<SquareTerm>, Vec<SquareTerm>) {
    use Indeterminate::*;
    let sq = |x: &BigInt| x * x;
    let pair = |cv: BigInt, ct: BigInt, cw: BigInt, ct2: BigInt| {
        (
            vec![term(cv, V), term(ct, T)],
            vec![term(cw, W), term(ct2, T)],
        )
    };
    let (lead, (mid, right)) = match kind {
        SystemKind::Quartic1 => (sq(c), pair(a.clone(), b.clone(), a.clone(), c.clone())),
        SystemKind::Quartic2 => (sq(a), pair(c.clone(), -b, c.clone(), a.clone())),
        SystemKind::Quartic3 => (sq(c), pair(b.clone(), a.clone(), b.clone(), c.clone())),
        SystemKind::Quartic4 => (sq(b), pair(c.clone(), -a, c.clone(), b.clone())),
        SystemKind::Quartic5 => (sq(b), pair(-a, c.clone(), -a, b.clone())),
        SystemKind::Quartic6 => (sq(a), pair(-b, c.clone(), -b, a.clone())),
        SystemKind::Quartic7 => (sq(a), pair(b.clone(), -c, b.clone(), -a)),
        SystemKind::Quartic8 => (sq(b), pair(a.clone(), -c, a.clone(), -b)),
        _ => unreachable!("quartic_forms is only called for quartic kinds"),
    };
    (lead, mid, right)
}

/// Evaluates every equation of the system on a solution, one result per
/// equation plus one for the nonzero/coprimality side conditions.
pub fn check_solution(system: &DiophantineSystem, sol: &SystemSolution) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    for (i, eq) in system.equations.iter().enumerate() {
        let id = format!("{}:eq{}", system.kind.slug(), i + 1);
        match eq.evaluate(sol) {
            Some((lhs, rhs)) => {
                let holds = lhs == rhs;
                out.push(ClaimResult {
                    claim_id: id,
                    triple: system.triple.clone(),
                    solution: Some(sol.clone()),
                    holds,
                    lhs,
                    rhs,
                    note: format!("{eq}"),
                });
            }
            None => out.push(ClaimResult {
                claim_id: id,
                triple: system.triple.clone(),
                solution: Some(sol.clone()),
                holds: false,
                lhs: BigInt::zero(),
                rhs: BigInt::zero(),
                note: format!("{eq}; normalized factor U not available"),
            }),
        }
    }
    let mut side_ok = !sol.w.is_zero() && !sol.t.is_zero() && !sol.v.is_zero();
    let mut notes = Vec::new();
    if !side_ok {
        notes.push("an indeterminate is zero".to_string());
    }
    if system.kind.is_quartic() {
        match &sol.u {
            Some(u) if !u.is_zero() => {}
            _ => {
                side_ok = false;
                notes.push("U must be a nonzero integer".to_string());
            }
        }
    } else if sol.u_prime.is_zero() || sol.u_second.is_zero() {
        side_ok = false;
        notes.push("U', U'' must be nonzero".to_string());
    }
    if !sol.scaled {
        let g = sol.w.gcd(&sol.t).gcd(&sol.v);
        if !g.is_one() {
            side_ok = false;
            notes.push(format!("gcd(W, T, V) = {g} != 1"));
        }
    }
    out.push(ClaimResult {
        claim_id: format!("{}:side", system.kind.slug()),
        triple: system.triple.clone(),
        solution: Some(sol.clone()),
        holds: side_ok,
        lhs: BigInt::zero(),
        rhs: BigInt::zero(),
        note: if notes.is_empty() {
            "all indeterminates nonzero, gcd(W, T, V) = 1".to_string()
        } else {
            notes.join("; ")
        },
    });
    out
}

/// Scans primitive Pythagorean `(W, T, V)` with `p <= pq_bound` (optionally
/// with the swapped orientation as well) and keeps the assignments where
/// every quadratic form evaluates to a positive perfect square. Output is
/// sorted by `(V, W, T)` and deterministic; it grows monotonically with the
/// bound.
pub fn enumerate_solutions(
    system: &DiophantineSystem,
    pq_bound: u64,
    allow_swap: bool,
) -> Vec<SystemSolution> {
    let triple = &system.triple;
    let (a, b, c) = (triple.a(), triple.b(), triple.c());
    let mut out = Vec::new();
    for (p, q) in primitive_parameters(pq_bound) {
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let w0 = BigInt::from(2) * &p * &q;
        let t0 = &p * &p - &q * &q;
        let v = &p * &p + &q * &q;
        let mut orientations = vec![(w0.clone(), t0.clone())];
        if allow_swap {
            orientations.push((t0, w0));
        }
        for (w, t) in orientations {
            let sol = match system.kind {
                SystemKind::System9 => {
                    let s1 = a * &v * &v + b * &t * &t;
                    let s2 = a * &w * &w + c * &t * &t;
                    match (positive_root(&s1), positive_root(&s2)) {
                        (Some(u_prime), Some(u_second)) => {
                            let u = exact_quotient(&u_prime, &c.abs());
                            Some(SystemSolution {
                                u_prime,
                                u_second,
                                w: w.clone(),
                                t: t.clone(),
                                v: v.clone(),
                                u,
                                scaled: false,
                            })
                        }
                        _ => None,
                    }
                }
                SystemKind::System10 => {
                    let s1 = c * &v * &v - b * &t * &t;
                    let s2 = c * &w * &w + a * &t * &t;
                    match (positive_root(&s1), positive_root(&s2)) {
                        (Some(u_prime), Some(u_second)) => {
                            let u = exact_quotient(&u_prime, &a.abs());
                            Some(SystemSolution {
                                u_prime,
                                u_second,
                                w: w.clone(),
                                t: t.clone(),
                                v: v.clone(),
                                u,
                                scaled: false,
                            })
                        }
                        _ => None,
                    }
                }
                quartic => {
                    let (lead, mid, right) = quartic_forms(quartic, a, b, c);
                    let probe = SystemSolution::new(
                        BigInt::zero(),
                        BigInt::zero(),
                        w.clone(),
                        t.clone(),
                        v.clone(),
                    );
                    let m = FormEquation::eval_side(&mid, &probe).expect("no U on this side");
                    let r = FormEquation::eval_side(&right, &probe).expect("no U on this side");
                    if m == r && m.is_positive() && (&m % &lead).is_zero() {
                        is_perfect_square(&(&m / &lead)).and_then(|u| {
                            if u.is_zero() {
                                return None;
                            }
                            let root = positive_root(&m)?;
                            Some(SystemSolution {
                                u_prime: root.clone(),
                                u_second: root,
                                w: w.clone(),
                                t: t.clone(),
                                v: v.clone(),
                                u: Some(u),
                                scaled: false,
                            })
                        })
                    } else {
                        None
                    }
                }
            };
            if let Some(sol) = sol {
                out.push(sol);
            }
        }
    }
    out.sort_by(|x, y| (&x.v, &x.w, &x.t).cmp(&(&y.v, &y.w, &y.t)));
    out
}

fn positive_root(value: &BigInt) -> Option<BigInt> {
    if value.is_positive() {
        is_perfect_square(value)
    } else {
        None
    }
}

fn exact_quotient(value: &BigInt, divisor: &BigInt) -> Option<BigInt> {
    if divisor.is_zero() || !(value % divisor).is_zero() {
        None
    } else {
        Some(value / divisor)
    }
}

/// Joint-solvability report for the two systems of one triple, within the
/// search bound. "Shared" mode requires one triangle (up to the orientation
/// swap) to solve both systems; "independent" mode only asks that each
/// system has some solution. Nothing here speaks beyond the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointSolvabilityReport {
    pub triple: CoefficientTriple,
    pub pq_bound: u64,
    pub shared_wtv: bool,
    pub system9_solutions: Vec<SystemSolution>,
    pub system10_solutions: Vec<SystemSolution>,
    /// Canonical (even leg, odd leg, hypotenuse) triangles solving both.
    pub shared_triangles: Vec<SharedTriangle>,
    pub jointly_solvable_within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SharedTriangle {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub even_leg: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub odd_leg: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub hypotenuse: BigInt,
}

fn canonical_triangle(sol: &SystemSolution) -> SharedTriangle {
    let (even, odd) = if sol.w.is_even() {
        (sol.w.clone(), sol.t.clone())
    } else {
        (sol.t.clone(), sol.w.clone())
    };
    SharedTriangle {
        even_leg: even,
        odd_leg: odd,
        hypotenuse: sol.v.clone(),
    }
}

/// Enumerates both systems (orientation swap allowed) and reports whether
/// they are jointly solvable within the bound under the chosen reading.
pub fn joint_solvability(
    triple: &CoefficientTriple,
    pq_bound: u64,
    shared_wtv: bool,
) -> JointSolvabilityReport {
    let s9 = enumerate_solutions(&build_system(SystemKind::System9, triple), pq_bound, true);
    let s10 = enumerate_solutions(&build_system(SystemKind::System10, triple), pq_bound, true);
    let mut shared: Vec<SharedTriangle> = s9
        .iter()
        .map(canonical_triangle)
        .filter(|tri| s10.iter().any(|s| canonical_triangle(s) == *tri))
        .collect();
    shared.sort();
    shared.dedup();
    let jointly = if shared_wtv {
        !shared.is_empty()
    } else {
        !s9.is_empty() && !s10.is_empty()
    };
    JointSolvabilityReport {
        triple: triple.clone(),
        pq_bound,
        shared_wtv,
        system9_solutions: s9,
        system10_solutions: s10,
        shared_triangles: shared,
        jointly_solvable_within_bound: jointly,
    }
}
