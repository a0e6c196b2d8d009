//! Exact-arithmetic toolkit for polynomial families and certified
//! log-behavior of P-recursive sequences.
//!
//! The crate is organized around five stages:
//!
//! - [`polycore`] — arbitrary-precision rationals and dense polynomials;
//!   the ambient arithmetic for everything else.
//! - [`combinat`] — generators for the Baxter, Hoggatt, and (q,t)-Hoggatt
//!   families, plus a brute-force pattern-avoidance enumerator used as an
//!   independent oracle.
//! - [`realroots`] — exact real-root isolation (classical Sturm chains) and
//!   certified interlacing verdicts between real-rooted polynomials,
//!   including family-level chain checks.
//! - [`precursive`] — polynomial-coefficient linear recurrences: exact term
//!   extension, recurrence verification, the L operator, initial-segment
//!   r-log-convexity checks, and Hankel leading principal minors.
//! - [`asymptotics`] — ratio-ansatz asymptotic expansions, the asymptotic
//!   r-log-convexity criterion, and machine-checkable certificates built
//!   from inductive ratio enclosures.
//!
//! All computation is exact (big integers and rationals); decimal output
//! appears only in explicitly diagnostic estimates.

pub mod asymptotics;
pub mod combinat;
pub mod error;
pub mod polycore;
pub mod precursive;
pub mod realroots;

pub use error::{Error, Result};
pub use polycore::{Int, Poly, Rat};
