//! Exact-arithmetic laboratory for double equations of Diophantus–Fermat
//! type, the cubic (Frey-type) curves they map to, and the bounded searches
//! that probe the classical impossibility results around them.
//!
//! Everything here is exact: arbitrary-precision integers ([`num_bigint::BigInt`])
//! and rationals ([`num_rational::BigRational`]), no floating point anywhere.
//! Searches are deterministic and bounded; emptiness of a search never claims
//! anything beyond its bound.
//!
//! Module map:
//! - [`arith`] — gcd, coprimality, perfect squares/powers, squarefree parts.
//! - [`curves`] — coefficient triples, double equations and their cubic images,
//!   reflection transforms, discriminant identity.
//! - [`pythagoras`] — primitive triple generation, square-area and
//!   squares-in-arithmetic-progression searches.
//! - [`systems`] — the three-equation Diophantine systems, bounded solution
//!   enumeration, joint solvability, and the executable claims registry.
//! - [`quartics`] — oblique space quartics, the quadric pair, and the mapping
//!   onto a rational cubic.
//! - [`descent`] — the quartic descent chain, parametric solution families,
//!   and exhaustive no-solution scans.
//! - [`concordant`] — simultaneous-square form pairs and their map back to the
//!   cubic.

pub mod arith;
pub mod concordant;
pub mod curves;
pub mod descent;
pub mod pythagoras;
pub mod quartics;
pub(crate) mod ser;
pub mod systems;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Trial-division factorization refused an input above the configured bound.
    #[error("|{value}| exceeds the factorization bound {bound}")]
    FactorizationLimitExceeded { value: BigInt, bound: u64 },

    /// The leading coefficient of the mapped cubic vanished.
    #[error("double equation maps to a degenerate (non-cubic) curve")]
    DegenerateCurve,

    /// Coefficient-triple invariants do not hold.
    #[error("invalid coefficient triple: {0}")]
    InvalidTriple(String),

    /// A search or constructor was given parameters outside its domain.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// No claim with this id exists in the registry.
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),

    /// The point does not satisfy the quartic membership equation.
    #[error("point is not on the quartic")]
    NotOnQuartic,

    /// The product of the quartic scale coefficients is not a perfect square,
    /// so the mapping onto the cubic has no exact scalar.
    #[error("product of scale coefficients is not a perfect square")]
    BadScale,

    /// Affine coordinates are undefined at T = 0.
    #[error("point lies in the plane at infinity (T = 0)")]
    PointAtInfinity,

    /// Quantities that must be perfect squares are not; lists the offenders.
    #[error("not perfect squares: {}", failing.join(", "))]
    PreconditionNotSquare { failing: Vec<String> },

    /// The state fed to the descent step does not solve its defining equation.
    #[error("not a solution: {0}")]
    NotASolution(String),

    /// One of the descent certificates (square or coprimality) failed.
    #[error("descent decomposition failed at: {stage}")]
    DecompositionFailed { stage: String },

    /// The alleged solution does not satisfy both equations of the double pair.
    #[error("values do not solve the double equation pair")]
    NotOnDoubleEquation,
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
