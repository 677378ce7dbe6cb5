//! Exact verification of Catalan triangle identities, congruences, and their
//! q-analogues.
//!
//! Everything here is computed with unbounded integers and integer-coefficient
//! (Laurent) polynomials in `q`; a verdict of [`Status::Holds`] is always backed
//! by an exact certificate, either a zero difference or an exact quotient.
//!
//! Layering, bottom up:
//!
//! - [`arith`]: integers, rationals, [`Poly`] and [`Laurent`].
//! - [`qkit`]: q-integers, q-Pochhammer symbols, q-binomials, cyclotomic
//!   polynomials and the factored-form gcd calculus.
//! - [`triangle`]: the number families `C_n`, `B(n,k)`, `C(n,k)`, `A(n,k)` and
//!   the q-polynomials `B(n,k;q)`, `A(n,k;q)`.
//! - [`verifier`]: one check per identity, recurrence, or divisibility claim.
//! - [`explorer`]: grid sweeps, conjecture probes, and the result cache.
//! - [`report`]: json/csv/markdown rendering.

pub mod arith;
pub mod error;
pub mod explorer;
pub mod qkit;
pub mod report;
pub mod triangle;
pub mod verifier;

pub use arith::{eval_at, laurent_quotient, poly_reverse, Integer, Laurent, Poly, Rational};
pub use error::{Error, Result};
pub use qkit::FactorForm;
pub use triangle::TriangleKind;
pub use explorer::{ConjectureRecord, SweepSpec};
pub use verifier::{CheckResult, MultiIndexSpec, Params, Status, Witness};

/// Version string stamped into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
