//! One builder per subcommand: validate flags, call into the library,
//! assemble the report.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use diolab_core::arith::{squarefree_part_with_bound, DEFAULT_FACTOR_BOUND};
use diolab_core::concordant::{search_concordant, ConcordantPair};
use diolab_core::curves::{
    curve_ac, curve_bc, discriminant_quantity, frey_curve, midpoint_identity_check,
    reflect_transform, CoefficientTriple, CubicCurve,
};
use diolab_core::descent::{exhaustive_search, EquationFamily};
use diolab_core::quartics::{
    cubic_from_roots, map_to_cubic, omega_membership, phi_psi, QuarticOmega, QuarticPoint,
};
use diolab_core::systems::{
    build_system, check_solution, claims_audit, enumerate_solutions, joint_solvability, registry,
    SystemKind,
};
use diolab_core::Error;

use crate::report::RunReport;
use crate::{CliError, Command, FamilyName};

pub fn run(cmd: &Command) -> Result<RunReport, CliError> {
    match cmd {
        Command::Frey { a, b } => frey(a, b),
        Command::Audit { a, b, pq_bound } => audit(a, b, *pq_bound),
        Command::Enumerate {
            system,
            a,
            b,
            pq_bound,
            allow_swap,
            joint,
            shared_wtv,
        } => enumerate(*system, a, b, *pq_bound, *allow_swap, *joint, *shared_wtv),
        Command::Descent { family, bound, n } => descent(*family, *bound, *n),
        Command::Concordant { m, n, bound } => concordant(m, n, *bound),
        Command::Quartic {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
            point,
        } => quartic(a, b, c, alpha, beta, gamma, point),
        Command::Claims => claims(),
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn make_triple(a: &BigInt, b: &BigInt) -> Result<CoefficientTriple, CliError> {
    CoefficientTriple::new(a.clone(), b.clone()).map_err(usage)
}

#[derive(Serialize)]
struct CurveRecord {
    name: &'static str,
    display: String,
    factored: String,
    coefficients: [String; 4],
}

impl CurveRecord {
    fn new(name: &'static str, curve: &CubicCurve, factored: String) -> Self {
        let [c3, c2, c1, c0] = curve.coefficients();
        Self {
            name,
            display: curve.to_string(),
            factored,
            coefficients: [c3.to_string(), c2.to_string(), c1.to_string(), c0.to_string()],
        }
    }
}

#[derive(Serialize)]
struct CheckRecord {
    check: &'static str,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

/// `(X - k)` with the sign folded in.
fn linear_factor(k: &BigInt) -> String {
    if k.is_negative() {
        format!("(X + {})", -k)
    } else {
        format!("(X - {k})")
    }
}

fn frey(a: &BigInt, b: &BigInt) -> Result<RunReport, CliError> {
    let t = make_triple(a, b)?;
    let mut report = RunReport::new("frey");
    report.input("a", t.a());
    report.input("b", t.b());
    report.input("c", t.c());

    let frey = frey_curve(&t);
    let middle = curve_ac(&t);
    let far = curve_bc(&t);
    report.push_result(CurveRecord::new(
        "frey",
        &frey,
        format!("Y^2 = X{}{}", linear_factor(t.a()), linear_factor(&-t.b())),
    ));
    report.push_result(CurveRecord::new(
        "companion-ac",
        &middle,
        format!("Y^2 = -X{}{}", linear_factor(t.a()), linear_factor(t.c())),
    ));
    report.push_result(CurveRecord::new(
        "companion-bc",
        &far,
        format!("Y^2 = X{}{}", linear_factor(t.b()), linear_factor(t.c())),
    ));

    let disc = discriminant_quantity(&t);
    report.push_result(CheckRecord {
        check: "discriminant-equals-abs-c",
        holds: disc == t.c().abs(),
        value: Some(disc.to_string()),
    });
    report.push_result(CheckRecord {
        check: "reflection-bc-to-ac",
        holds: reflect_transform(&far, t.c()) == middle,
        value: None,
    });
    report.push_result(CheckRecord {
        check: "reflection-ac-to-frey",
        holds: reflect_transform(&middle, t.a()) == frey,
        value: None,
    });
    report.push_result(CheckRecord {
        check: "midpoint-identity",
        holds: midpoint_identity_check(&t),
        value: None,
    });
    Ok(report)
}

fn audit(a: &BigInt, b: &BigInt, pq_bound: u64) -> Result<RunReport, CliError> {
    if pq_bound < 2 {
        return Err(usage("--pq-bound must be at least 2"));
    }
    let t = make_triple(a, b)?;
    let mut report = RunReport::new("audit");
    report.input("a", t.a());
    report.input("b", t.b());
    report.input("c", t.c());
    report.input("pq_bound", pq_bound);

    // hard invariant: everything the enumerator returns must satisfy the
    // system equations; a violation here is exit code 2, not a finding
    for kind in [SystemKind::System9, SystemKind::System10] {
        let system = build_system(kind, &t);
        for sol in enumerate_solutions(&system, pq_bound, true) {
            for check in check_solution(&system, &sol) {
                if !check.holds {
                    return Err(CliError::Invariant(format!(
                        "enumerated solution {sol} violates {}: {} != {}",
                        check.claim_id, check.lhs, check.rhs
                    )));
                }
            }
        }
    }

    for result in claims_audit(&t, pq_bound) {
        if !result.holds {
            report.push_finding(&result);
        }
        report.push_result(result);
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    kind: SystemKind,
    a: &BigInt,
    b: &BigInt,
    pq_bound: u64,
    allow_swap: bool,
    joint: bool,
    shared_wtv: bool,
) -> Result<RunReport, CliError> {
    if pq_bound < 2 {
        return Err(usage("--pq-bound must be at least 2"));
    }
    let t = make_triple(a, b)?;
    let mut report = RunReport::new("enumerate");
    report.input("a", t.a());
    report.input("b", t.b());
    report.input("c", t.c());
    report.input("system", kind.slug());
    report.input("pq_bound", pq_bound);
    report.input("allow_swap", allow_swap);

    if joint {
        report.input("shared_wtv", shared_wtv);
        report.push_result(joint_solvability(&t, pq_bound, shared_wtv));
        return Ok(report);
    }

    let system = build_system(kind, &t);
    let equations: Vec<String> = system.equations.iter().map(|e| e.to_string()).collect();
    report.input("equations", equations.join("; "));
    for sol in enumerate_solutions(&system, pq_bound, allow_swap) {
        report.push_result(sol);
    }
    Ok(report)
}

fn descent(family: FamilyName, bound: u64, n: Option<u32>) -> Result<RunReport, CliError> {
    if bound < 1 {
        return Err(usage("--bound must be at least 1"));
    }
    let family = match (family, n) {
        (FamilyName::Lebesgue, Some(n)) if n >= 3 => EquationFamily::Lebesgue(n),
        (FamilyName::Lebesgue, Some(_)) => {
            return Err(usage("the lebesgue family needs --n at least 3"))
        }
        (FamilyName::Lebesgue, None) => {
            return Err(usage("the lebesgue family needs --n"))
        }
        (_, Some(_)) => return Err(usage("--n only applies to the lebesgue family")),
        (FamilyName::QuarticSum, None) => EquationFamily::QuarticSum,
        (FamilyName::QuarticDiff, None) => EquationFamily::QuarticDiff,
        (FamilyName::SumToFourth, None) => EquationFamily::SumToFourth,
        (FamilyName::DiffToFourth, None) => EquationFamily::DiffToFourth,
    };
    let mut report = RunReport::new("descent");
    report.input("family", family.slug());
    report.input("bound", bound);
    for sol in exhaustive_search(family, bound) {
        report.push_result(sol);
    }
    Ok(report)
}

fn concordant(m: &BigInt, n: &BigInt, bound: u64) -> Result<RunReport, CliError> {
    if bound < 1 {
        return Err(usage("--bound must be at least 1"));
    }
    let pair = ConcordantPair::new(m.clone(), n.clone()).map_err(usage)?;
    let mut report = RunReport::new("concordant");
    report.input("m", &pair.m);
    report.input("n", &pair.n);
    report.input("bound", bound);
    for sol in search_concordant(&pair, bound) {
        report.push_result(sol);
    }
    Ok(report)
}

#[derive(Serialize)]
struct QuarticRecord {
    membership: bool,
    phi: String,
    psi: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_error: Option<String>,
    image_on_cubic: bool,
    cubic: String,
    squarefree_a: String,
    squarefree_b: String,
    squarefree_c: String,
}

fn factor_bound_from_env() -> Result<u64, CliError> {
    match std::env::var("DIOLAB_FACTOR_BOUND") {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| usage(format!("DIOLAB_FACTOR_BOUND must be an integer, got '{raw}'"))),
        Err(_) => Ok(DEFAULT_FACTOR_BOUND),
    }
}

fn squarefree_display(v: &BigInt, bound: u64) -> String {
    match squarefree_part_with_bound(v, bound) {
        Ok((s, f)) => format!("{s} * {f}^2"),
        Err(Error::FactorizationLimitExceeded { bound, .. }) => {
            format!("|{v}| exceeds factorization bound {bound}")
        }
        Err(e) => e.to_string(),
    }
}

#[allow(clippy::too_many_arguments)]
fn quartic(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    alpha: &BigInt,
    beta: &BigInt,
    gamma: &BigInt,
    point: &str,
) -> Result<RunReport, CliError> {
    let omega = QuarticOmega::new(
        a.clone(),
        b.clone(),
        c.clone(),
        alpha.clone(),
        beta.clone(),
        gamma.clone(),
    )
    .map_err(usage)?;
    let coords: Vec<BigInt> = point
        .split(',')
        .map(|s| s.trim().parse::<BigInt>())
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("--point must be U,V,W,T: {e}")))?;
    let [u, v, w, t] = <[BigInt; 4]>::try_from(coords)
        .map_err(|_| usage("--point must have exactly four coordinates"))?;
    let pt = QuarticPoint::new(u, v, w, t);

    let factor_bound = factor_bound_from_env()?;
    let mut report = RunReport::new("quartic");
    report.input("A", &omega.a);
    report.input("B", &omega.b);
    report.input("C", &omega.c);
    report.input("alpha", &omega.alpha);
    report.input("beta", &omega.beta);
    report.input("gamma", &omega.gamma);
    report.input("point", format!("{},{},{},{}", pt.u, pt.v, pt.w, pt.t));

    let membership = omega_membership(&omega, &pt);
    let (phi, psi) = phi_psi(&omega, &pt);
    let cubic = cubic_from_roots(&omega.alpha, &omega.beta, &omega.gamma);
    let (image_x, image_y, image_error, on_cubic) = match map_to_cubic(&omega, &pt) {
        Ok((x, y)) => {
            let on = cubic.contains(&x, &y);
            (Some(x.to_string()), Some(y.to_string()), None, on)
        }
        Err(e) => (None, None, Some(e.to_string()), false),
    };
    report.push_result(QuarticRecord {
        membership,
        phi: phi.to_string(),
        psi: psi.to_string(),
        image_x,
        image_y,
        image_error,
        image_on_cubic: on_cubic,
        cubic: cubic.to_string(),
        squarefree_a: squarefree_display(&omega.a, factor_bound),
        squarefree_b: squarefree_display(&omega.b, factor_bound),
        squarefree_c: squarefree_display(&omega.c, factor_bound),
    });
    Ok(report)
}

fn claims() -> Result<RunReport, CliError> {
    let mut report = RunReport::new("claims");
    report.input("count", registry().len());
    for spec in registry() {
        report.push_result(spec);
    }
    Ok(report)
}
