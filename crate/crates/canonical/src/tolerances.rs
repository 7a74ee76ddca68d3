//! Numerical tolerances used across the crate and its verification suites.
//!
//! Exact-integer and exact-rational checks use no tolerance at all; the
//! constants here cover the floating-point paths only.

/// Element validation at construction (pseudo-unitarity, |det| = 1).
pub const ELEMENT_VALIDATION: f64 = 1e-12;

/// Inverse / identity round trips in the group.
pub const GROUP_ROUNDTRIP: f64 = 1e-12;

/// Associativity and pseudo-unitarity preservation over random products.
pub const GROUP_PRODUCTS: f64 = 1e-11;

/// Polar factor reassembly Q·R = U and re-split idempotence.
pub const POLAR_REASSEMBLY: f64 = 1e-11;

/// Off-block norm of a Wigner factor that must land in the little group.
pub const WIGNER_BLOCK: f64 = 1e-10;

/// Pointwise representation homomorphism residuals.
pub const REP_HOMOMORPHISM: f64 = 1e-10;

/// Heisenberg position-space evaluator homomorphism (exact cocycle).
pub const REP_HEISENBERG_POSITION: f64 = 1e-12;

/// Monomial orthonormality under quadrature.
pub const ORTHONORMALITY: f64 = 1e-12;

/// Gram matrix of transformed basis functions vs identity.
pub const TRANSFORM_GRAM: f64 = 1e-6;

/// Pointwise transform round trips.
pub const TRANSFORM_ROUNDTRIP: f64 = 1e-6;

/// Pointwise ground-state transform vs closed-form Gaussian.
pub const TRANSFORM_POINTWISE: f64 = 1e-8;

/// Bargmann-transform conjugation of the position evaluator.
pub const TRANSFORM_INTERTWINE: f64 = 1e-6;

/// Closed-form boost vs matrix-exponential oracle.
pub const BOOST_EXPM: f64 = 1e-12;

/// Quadratic-form and symplectic residuals of boosts.
pub const BOOST_INVARIANTS: f64 = 1e-10;

/// Default light-cone tie-breaking tolerance for orbit classification.
pub const CLASSIFY_DEFAULT: f64 = 1e-9;
