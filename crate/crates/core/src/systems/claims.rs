//! The claims registry: every step of the deduction chain around the two
//! systems, packaged as an exact executable check on a concrete triple and
//! solution.
//!
//! The audit is descriptive. A claim that fails on an instance is recorded
//! with `holds = false`, never as an error; distinguishing assertions that
//! hold from those that do not is the whole point of running the registry.
//! Claims that require the normalized factor `U` (or `U''`) recompute it from
//! the triangle: `U = sqrt((aV^2 + bT^2) / c^2)` and
//! `U'' = sqrt((cV^2 - bT^2) / a^2)` when those are integers; when no such
//! integer exists the claim fails with an explanatory note.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::is_perfect_square;
use crate::curves::CoefficientTriple;
use crate::systems::{build_system, enumerate_solutions, SystemKind, SystemSolution};
use crate::{Error, Result};

/// Outcome of evaluating one registered claim on a concrete instance.
/// `holds` is true iff `lhs == rhs` together with the claim's stated side
/// predicate (integrality, squareness).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub triple: CoefficientTriple,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<SystemSolution>,
    pub holds: bool,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub rhs: BigInt,
    pub note: String,
}

/// One registry entry: stable id, human-readable formula over the triple
/// `(a, b, c)` and the indeterminates, and a one-line description.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub formula: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    eval: EvalFn,
}

struct Eval {
    holds: bool,
    lhs: BigInt,
    rhs: BigInt,
    note: String,
}

type EvalFn = fn(&CoefficientTriple, &SystemSolution) -> Eval;

fn sq(x: &BigInt) -> BigInt {
    x * x
}

fn fourth(x: &BigInt) -> BigInt {
    let s = sq(x);
    sq(&s)
}

/// Square of the integer square root of `max(x, 0)`; equals `x` exactly when
/// `x` is a perfect square, so predicate claims can keep `holds <=> lhs == rhs`.
fn nearest_square_below(x: &BigInt) -> BigInt {
    if x.is_negative() {
        BigInt::zero()
    } else {
        sq(&x.sqrt())
    }
}

/// Normalized factor of the first system: integer `U` with `c^2 U^2 = aV^2 + bT^2`.
fn norm_u(t: &CoefficientTriple, sol: &SystemSolution) -> Option<BigInt> {
    let s1 = t.a() * sq(&sol.v) + t.b() * sq(&sol.t);
    scaled_root(&s1, &sq(t.c()))
}

/// Normalized factor of the second system: integer `U''` with `a^2 U''^2 = cV^2 - bT^2`.
fn norm_u2(t: &CoefficientTriple, sol: &SystemSolution) -> Option<BigInt> {
    let s1 = t.c() * sq(&sol.v) - t.b() * sq(&sol.t);
    scaled_root(&s1, &sq(t.a()))
}

fn scaled_root(value: &BigInt, square_divisor: &BigInt) -> Option<BigInt> {
    if !value.is_positive() || !(value % square_divisor).is_zero() {
        return None;
    }
    is_perfect_square(&(value / square_divisor))
}

fn missing_u() -> Eval {
    Eval {
        holds: false,
        lhs: BigInt::zero(),
        rhs: BigInt::zero(),
        note: "no integer U with c^2*U^2 = a*V^2 + b*T^2".into(),
    }
}

fn missing_u2() -> Eval {
    Eval {
        holds: false,
        lhs: BigInt::zero(),
        rhs: BigInt::zero(),
        note: "no integer U'' with a^2*U''^2 = c*V^2 - b*T^2".into(),
    }
}

fn equality(lhs: BigInt, rhs: BigInt, note: impl Into<String>) -> Eval {
    Eval {
        holds: lhs == rhs,
        lhs,
        rhs,
        note: note.into(),
    }
}

fn square_predicate(lhs: BigInt, note: impl Into<String>) -> Eval {
    let rhs = nearest_square_below(&lhs);
    Eval {
        holds: lhs == rhs,
        lhs,
        rhs,
        note: note.into(),
    }
}

fn eval_c11(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    equality(
        t.a() * sq(&s.v) + t.b() * sq(&s.t),
        t.a() * sq(&s.w) + t.c() * sq(&s.t),
        "",
    )
}

fn eval_c12(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    equality(
        t.c() * sq(&s.v) - t.b() * sq(&s.t),
        t.c() * sq(&s.w) + t.a() * sq(&s.t),
        "",
    )
}

fn eval_c13(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    equality(
        t.a() * (sq(&s.v) - sq(&s.w)),
        (t.c() - t.b()) * sq(&s.t),
        "",
    )
}

fn eval_c14(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    equality(
        t.c() * (sq(&s.v) - sq(&s.w)),
        (t.a() + t.b()) * sq(&s.t),
        "",
    )
}

fn eval_c16(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.a() * sq(&s.v) + t.b() * sq(&s.t);
    let rhs = t.a() * sq(&s.w) + t.c() * sq(&s.t);
    match norm_u(t, s) {
        Some(u) => Eval {
            holds: lhs == rhs,
            lhs,
            rhs,
            note: format!("U = {u}"),
        },
        None => Eval {
            holds: false,
            note: missing_u().note,
            lhs,
            rhs,
        },
    }
}

fn eval_c16p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.c() * sq(&s.v) - t.b() * sq(&s.t);
    let rhs = t.c() * sq(&s.w) + t.a() * sq(&s.t);
    match norm_u2(t, s) {
        Some(u2) => Eval {
            holds: lhs == rhs,
            lhs,
            rhs,
            note: format!("U'' = {u2}"),
        },
        None => Eval {
            holds: false,
            note: missing_u2().note,
            lhs,
            rhs,
        },
    }
}

fn eval_c18(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let cu2 = t.c() * sq(&u);
    equality(
        t.a() * (sq(&s.v) - &cu2),
        t.b() * (&cu2 - sq(&s.t)),
        format!("U = {u}"),
    )
}

fn eval_c18p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let au2 = t.a() * sq(&u2);
    equality(
        t.c() * (sq(&s.v) - &au2),
        t.b() * (sq(&s.t) - &au2),
        format!("U'' = {u2}"),
    )
}

fn eval_c19(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let d1 = t.c() * sq(&u) - sq(&s.t); // m * a
    let d2 = sq(&s.v) - t.c() * sq(&u); // m * b
    let lhs = t.b() * &d1;
    let rhs = t.a() * &d2;
    let integral = (&d1 % t.a()).is_zero();
    let holds = lhs == rhs && integral;
    let note = if integral {
        format!("m = {}", &d1 / t.a())
    } else {
        format!("no integer m with m*a = {d1}")
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c19p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let d1 = sq(&s.t) - t.a() * sq(&u2); // m * c
    let d2 = sq(&s.v) - t.a() * sq(&u2); // m * b
    let lhs = t.b() * &d1;
    let rhs = t.c() * &d2;
    let integral = (&d1 % t.c()).is_zero();
    let holds = lhs == rhs && integral;
    let note = if integral {
        format!("m = {}", &d1 / t.c())
    } else {
        format!("no integer m with m*c = {d1}")
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c20(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = sq(&s.v) - sq(&s.t);
    let rhs = sq(&s.w);
    let integral = (&rhs % t.c()).is_zero();
    let holds = lhs == rhs && integral;
    let note = if integral {
        format!("m = {}", &rhs / t.c())
    } else {
        format!("no integer m with m*c = {rhs}")
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c20p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = sq(&s.t) - sq(&s.v);
    let rhs = -sq(&s.w);
    let integral = (&rhs % t.a()).is_zero();
    let holds = lhs == rhs && integral;
    let note = if integral {
        format!("m = {}", &rhs / t.a())
    } else {
        format!("no integer m with m*a = {rhs}")
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c21(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.c() + t.b();
    let rhs = sq(&s.v);
    let pythagorean = sq(&s.w) + sq(&s.t) == rhs;
    Eval {
        holds: lhs == rhs && pythagorean,
        lhs,
        rhs,
        note: String::new(),
    }
}

fn eval_c21p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.c() + t.a();
    let rhs = sq(&s.v) - sq(&s.w);
    let matches_t = rhs == sq(&s.t);
    Eval {
        holds: lhs == rhs && matches_t,
        lhs,
        rhs,
        note: String::new(),
    }
}

fn eval_c22(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.c() - t.b();
    let rhs = sq(&s.w) - sq(&s.t);
    let root = is_perfect_square(&-t.a());
    let holds = lhs == rhs && root.is_some();
    let note = match root {
        Some(r) => format!("a = -R^2 with R = {r}"),
        None => format!("{} is not the negative of a perfect square", t.a()),
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c22p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let lhs = t.b().clone();
    let rhs = sq(&s.v) + sq(&s.w);
    let root = is_perfect_square(t.b());
    let holds = t.c() - t.a() == lhs && lhs == rhs && root.is_some();
    let note = match root {
        Some(r) => format!("b = S^2 with S = {r}"),
        None => format!("{} is not a perfect square", t.b()),
    };
    Eval {
        holds,
        lhs,
        rhs,
        note,
    }
}

fn eval_c23(_t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    square_predicate(fourth(&s.t) - fourth(&s.w), "")
}

fn eval_c23p(_t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    square_predicate(fourth(&s.v) - fourth(&s.w), "")
}

fn eval_c25(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let lhs = sq(&u) * sq(t.c()) - sq(&s.v) * t.c() + sq(&s.w) * t.b();
    equality(lhs, BigInt::zero(), format!("U = {u}"))
}

fn eval_c25p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let lhs = sq(&u2) * sq(t.a()) - sq(&s.t) * t.a() - sq(&s.w) * t.c();
    equality(lhs, BigInt::zero(), format!("U'' = {u2}"))
}

fn eval_c26(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let disc = fourth(&s.v) - BigInt::from(4) * sq(&u) * sq(&s.w) * t.b();
    let rhs = nearest_square_below(&disc);
    let mut holds = disc == rhs && !disc.is_negative();
    let mut note = String::new();
    if holds {
        let n = disc.sqrt();
        let den = BigInt::from(2) * sq(&u);
        let hi = sq(&s.v) + &n;
        let lo = sq(&s.v) - &n;
        if (&hi % &den).is_zero() && (&lo % &den).is_zero() {
            note = format!("roots {} and {}", hi / &den, lo / &den);
        } else {
            holds = false;
            note = "discriminant is square but the roots are not integers".into();
        }
    }
    Eval {
        holds,
        lhs: disc,
        rhs,
        note,
    }
}

fn eval_c26p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let disc = fourth(&s.t) + BigInt::from(4) * sq(&u2) * sq(&s.w) * t.c();
    let rhs = nearest_square_below(&disc);
    let mut holds = disc == rhs && !disc.is_negative();
    let mut note = String::new();
    if holds {
        let n = disc.sqrt();
        let den = BigInt::from(2) * sq(&u2);
        let hi = sq(&s.t) + &n;
        let lo = sq(&s.t) - &n;
        if (&hi % &den).is_zero() && (&lo % &den).is_zero() {
            note = format!("roots {} and {}", hi / &den, lo / &den);
        } else {
            holds = false;
            note = "discriminant is square but the roots are not integers".into();
        }
    }
    Eval {
        holds,
        lhs: disc,
        rhs,
        note,
    }
}

fn eval_c27(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let radicand = fourth(&s.v) - BigInt::from(4) * sq(&u) * sq(&s.w) * t.b();
    let note = match is_perfect_square(&radicand) {
        Some(n) => format!("N = {n}"),
        None => "no integer N".into(),
    };
    square_predicate(radicand, note)
}

fn eval_c27p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let radicand = fourth(&s.t) + BigInt::from(4) * sq(&u2) * sq(&s.w) * t.c();
    let note = match is_perfect_square(&radicand) {
        Some(n) => format!("N = {n}"),
        None => "no integer N".into(),
    };
    square_predicate(radicand, note)
}

fn eval_c28(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let Some(n) = is_perfect_square(&(fourth(&s.v) - BigInt::from(4) * sq(&u) * sq(&s.w) * t.b()))
    else {
        return Eval {
            holds: false,
            lhs: BigInt::zero(),
            rhs: fourth(&s.v),
            note: "no integer N".into(),
        };
    };
    let Some(sb) = is_perfect_square(t.b()) else {
        return Eval {
            holds: false,
            lhs: sq(&n),
            rhs: fourth(&s.v),
            note: format!("b = {} is not a perfect square", t.b()),
        };
    };
    let y = BigInt::from(2) * &u * &s.w * &sb;
    equality(
        sq(&n) + sq(&y),
        fourth(&s.v),
        format!("instance x = {n}, y = {y}, z = {}", s.v.abs()),
    )
}

fn eval_c28p(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u2) = norm_u2(t, s) else {
        return missing_u2();
    };
    let Some(n) = is_perfect_square(&(fourth(&s.t) + BigInt::from(4) * sq(&u2) * sq(&s.w) * t.c()))
    else {
        return Eval {
            holds: false,
            lhs: BigInt::zero(),
            rhs: fourth(&s.t),
            note: "no integer N".into(),
        };
    };
    let Some(sc) = is_perfect_square(t.c()) else {
        return Eval {
            holds: false,
            lhs: sq(&n),
            rhs: fourth(&s.t),
            note: format!("c = {} is not a perfect square", t.c()),
        };
    };
    let y = BigInt::from(2) * &u2 * &s.w * &sc;
    equality(
        sq(&n) - sq(&y),
        fourth(&s.t),
        format!("instance x = {n}, y = {y}, z = {}", s.t.abs()),
    )
}

fn root_pair(sum_part: BigInt, diff_part: BigInt) -> Option<(BigInt, BigInt)> {
    let two = BigInt::from(2);
    let hi = &sum_part + &diff_part;
    let lo = &sum_part - &diff_part;
    if (&hi % &two).is_zero() && (&lo % &two).is_zero() {
        Some((hi / &two, lo / &two))
    } else {
        None
    }
}

fn eval_c29(_t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    // roots of the quadratic at U = 1: (V^2 +- (T^2 - W^2)) / 2
    match root_pair(sq(&s.v), sq(&s.t) - sq(&s.w)) {
        Some((r1, r2)) => {
            let mut roots = [r1.clone(), r2.clone()];
            roots.sort();
            let mut expected = [sq(&s.t), sq(&s.w)];
            expected.sort();
            Eval {
                holds: roots == expected,
                lhs: &r1 * &r2,
                rhs: sq(&s.t) * sq(&s.w),
                note: format!("roots {{{r1}, {r2}}}"),
            }
        }
        None => Eval {
            holds: false,
            lhs: BigInt::zero(),
            rhs: BigInt::zero(),
            note: "roots are not integral".into(),
        },
    }
}

fn eval_c29p(_t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    // roots at U'' = 1: (T^2 +- (V^2 + W^2)) / 2
    match root_pair(sq(&s.t), sq(&s.v) + sq(&s.w)) {
        Some((r1, r2)) => {
            let mut roots = [r1.clone(), r2.clone()];
            roots.sort();
            let mut expected = [sq(&s.v), -sq(&s.w)];
            expected.sort();
            Eval {
                holds: roots == expected,
                lhs: &r1 * &r2,
                rhs: sq(&s.v) * -sq(&s.w),
                note: format!("roots {{{r1}, {r2}}}"),
            }
        }
        None => Eval {
            holds: false,
            lhs: BigInt::zero(),
            rhs: BigInt::zero(),
            note: "roots are not integral".into(),
        },
    }
}

fn eval_c36(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    equality(
        (sq(&s.v) - sq(&s.w)) * t.a(),
        (t.c() - t.b()) * sq(&s.t),
        "",
    )
}

fn eval_c37(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    equality(
        (t.c() - t.b()) * sq(t.c()) * sq(&u),
        t.a() * (t.c() * sq(&s.v) - t.b() * sq(&s.w)),
        format!("U = {u}"),
    )
}

fn eval_c39(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    equality(
        sq(t.c()) * sq(&u),
        t.c() * sq(&s.v) - t.b() * sq(&s.w),
        format!("U = {u}"),
    )
}

fn eval_cm1(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    equality(t.b().clone(), sq(&u) * t.c(), format!("U = {u}"))
}

fn eval_cm2(t: &CoefficientTriple, s: &SystemSolution) -> Eval {
    let Some(u) = norm_u(t, s) else {
        return missing_u();
    };
    let b_is_u2 = *t.b() == sq(&u);
    let c_is_w = sq(t.c()) == sq(&s.w);
    Eval {
        holds: b_is_u2 && c_is_w,
        lhs: t.b().clone(),
        rhs: sq(&u),
        note: format!("c^2 = {} vs W^2 = {}", sq(t.c()), sq(&s.w)),
    }
}

static REGISTRY: &[ClaimSpec] = &[
    ClaimSpec {
        id: "C11",
        formula: "a*V^2 + b*T^2 = a*W^2 + c*T^2",
        description: "the first two forms of the first system agree",
        eval: eval_c11,
    },
    ClaimSpec {
        id: "C12",
        formula: "c*V^2 - b*T^2 = c*W^2 + a*T^2",
        description: "the first two forms of the second system agree",
        eval: eval_c12,
    },
    ClaimSpec {
        id: "C13",
        formula: "a*(V^2 - W^2) = (c - b)*T^2",
        description: "leg-difference proportionality, first system",
        eval: eval_c13,
    },
    ClaimSpec {
        id: "C14",
        formula: "c*(V^2 - W^2) = (a + b)*T^2",
        description: "leg-difference proportionality, second system",
        eval: eval_c14,
    },
    ClaimSpec {
        id: "C16",
        formula: "c^2*U^2 = a*V^2 + b*T^2 = a*W^2 + c*T^2, U integer",
        description: "triple equality with the normalized square factor",
        eval: eval_c16,
    },
    ClaimSpec {
        id: "C16p",
        formula: "a^2*U''^2 = c*V^2 - b*T^2 = c*W^2 + a*T^2, U'' integer",
        description: "triple equality with the second normalized factor",
        eval: eval_c16p,
    },
    ClaimSpec {
        id: "C18",
        formula: "a*(V^2 - c*U^2) = b*(c*U^2 - T^2)",
        description: "factor-collection identity, first system",
        eval: eval_c18,
    },
    ClaimSpec {
        id: "C18p",
        formula: "c*(V^2 - a*U''^2) = b*(T^2 - a*U''^2)",
        description: "factor-collection identity, second system",
        eval: eval_c18p,
    },
    ClaimSpec {
        id: "C19",
        formula: "m*a = c*U^2 - T^2 and m*b = V^2 - c*U^2 for one integer m",
        description: "proportionality factor exists, first system",
        eval: eval_c19,
    },
    ClaimSpec {
        id: "C19p",
        formula: "m*c = T^2 - a*U''^2 and m*b = V^2 - a*U''^2 for one integer m",
        description: "proportionality factor exists, second system",
        eval: eval_c19p,
    },
    ClaimSpec {
        id: "C20",
        formula: "m*c = V^2 - T^2 = W^2 with integer m",
        description: "summed proportionality forces c to divide W^2",
        eval: eval_c20,
    },
    ClaimSpec {
        id: "C20p",
        formula: "m*a = T^2 - V^2 = -W^2 with integer m",
        description: "subtracted proportionality forces a to divide W^2",
        eval: eval_c20p,
    },
    ClaimSpec {
        id: "C21",
        formula: "c + b = W^2 + T^2 = V^2",
        description: "sum decomposition against the hypotenuse",
        eval: eval_c21,
    },
    ClaimSpec {
        id: "C21p",
        formula: "c + a = V^2 - W^2 = T^2",
        description: "sum decomposition against the odd leg",
        eval: eval_c21p,
    },
    ClaimSpec {
        id: "C22",
        formula: "c - b = W^2 - T^2 = a = -R^2",
        description: "difference decomposition; a as a negated square",
        eval: eval_c22,
    },
    ClaimSpec {
        id: "C22p",
        formula: "c - a = b = V^2 + W^2 = S^2",
        description: "difference decomposition; b as a square",
        eval: eval_c22p,
    },
    ClaimSpec {
        id: "C23",
        formula: "T^4 - W^4 is a perfect square",
        description: "difference of fourth powers reached by the chain",
        eval: eval_c23,
    },
    ClaimSpec {
        id: "C23p",
        formula: "V^4 - W^4 is a perfect square",
        description: "difference of fourth powers, second chain",
        eval: eval_c23p,
    },
    ClaimSpec {
        id: "C25",
        formula: "U^2*c^2 - V^2*c + W^2*b = 0",
        description: "c is a root of the derived quadratic",
        eval: eval_c25,
    },
    ClaimSpec {
        id: "C25p",
        formula: "U''^2*a^2 - T^2*a - W^2*c = 0",
        description: "a is a root of the derived quadratic",
        eval: eval_c25p,
    },
    ClaimSpec {
        id: "C26",
        formula: "V^4 - 4*U^2*W^2*b = N^2 with integer roots (V^2 +- N)/(2*U^2)",
        description: "quadratic in c has a square discriminant and integer roots",
        eval: eval_c26,
    },
    ClaimSpec {
        id: "C26p",
        formula: "T^4 + 4*U''^2*W^2*c = N^2 with integer roots (T^2 +- N)/(2*U''^2)",
        description: "quadratic in a has a square discriminant and integer roots",
        eval: eval_c26p,
    },
    ClaimSpec {
        id: "C27",
        formula: "N^2 + 4*U^2*W^2*b = V^4",
        description: "discriminant-square relation, first system",
        eval: eval_c27,
    },
    ClaimSpec {
        id: "C27p",
        formula: "N^2 - 4*U''^2*W^2*c = T^4",
        description: "discriminant-square relation, second system",
        eval: eval_c27p,
    },
    ClaimSpec {
        id: "C28",
        formula: "N^2 + (2*U*W*sqrt(b))^2 = V^4, an x^2 + y^2 = z^4 instance",
        description: "extracts a sum-to-fourth-power instance",
        eval: eval_c28,
    },
    ClaimSpec {
        id: "C28p",
        formula: "N^2 - (2*U''*W*sqrt(c))^2 = T^4, an x^2 - y^2 = z^4 instance",
        description: "extracts a difference-to-fourth-power instance",
        eval: eval_c28p,
    },
    ClaimSpec {
        id: "C29",
        formula: "roots at U = 1 are {T^2, W^2}",
        description: "explicit root pair of the quadratic in c",
        eval: eval_c29,
    },
    ClaimSpec {
        id: "C29p",
        formula: "roots at U'' = 1 are {V^2, -W^2}",
        description: "explicit root pair of the quadratic in a",
        eval: eval_c29p,
    },
    ClaimSpec {
        id: "C36",
        formula: "(V^2 - W^2)*a = (c - b)*T^2",
        description: "first vanishing-quadric identity (same as C13)",
        eval: eval_c36,
    },
    ClaimSpec {
        id: "C37",
        formula: "(c - b)*c^2*U^2 = a*(c*V^2 - b*W^2)",
        description: "second vanishing-quadric identity",
        eval: eval_c37,
    },
    ClaimSpec {
        id: "C39",
        formula: "c^2*U^2 = c*V^2 - b*W^2",
        description: "quadric combination reproducing the derived quadratic",
        eval: eval_c39,
    },
    ClaimSpec {
        id: "CM1",
        formula: "b = U^2*c",
        description: "contradiction equation of the no-common-divisor branch",
        eval: eval_cm1,
    },
    ClaimSpec {
        id: "CM2",
        formula: "b = U^2 and c^2 = W^2",
        description: "contradiction equations of the common-divisor branch",
        eval: eval_cm2,
    },
];

/// The full claims table, in fixed registry order.
pub fn registry() -> &'static [ClaimSpec] {
    REGISTRY
}

/// Evaluates one claim by id on a concrete triple and solution.
pub fn run_claim(claim_id: &str, t: &CoefficientTriple, sol: &SystemSolution) -> Result<ClaimResult> {
    let spec = REGISTRY
        .iter()
        .find(|s| s.id == claim_id)
        .ok_or_else(|| Error::UnknownClaim(claim_id.to_string()))?;
    let eval = (spec.eval)(t, sol);
    Ok(ClaimResult {
        claim_id: spec.id.to_string(),
        triple: t.clone(),
        solution: Some(sol.clone()),
        holds: eval.holds,
        lhs: eval.lhs,
        rhs: eval.rhs,
        note: eval.note,
    })
}

/// Enumerates the solutions of both systems up to the bound (orientation
/// swap allowed) and evaluates every registry claim on every solution, in
/// deterministic order: first-system solutions first, then second-system,
/// claims in registry order within each.
pub fn claims_audit(t: &CoefficientTriple, pq_bound: u64) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    for kind in [SystemKind::System9, SystemKind::System10] {
        let system = build_system(kind, t);
        for sol in enumerate_solutions(&system, pq_bound, true) {
            for spec in REGISTRY {
                out.push(run_claim(spec.id, t, &sol).expect("registry ids are known"));
            }
        }
    }
    out
}
