//! Exact twisted Alexander invariants of knot groups over number fields, and
//! the free 2-periodicity test built on them: does `T(-t^2)` split as
//! `f(t) f(-t)` over the trace field?
//!
//! Everything is exact: rationals are arbitrary precision, number-field
//! elements live in `Q[z]/(m(z))`, and verdicts are algebraic facts rather
//! than numerical estimates.

pub mod arith;
pub mod cli;
pub mod error;
pub mod factor;
pub mod group;
pub mod obstruction;
pub mod parse;
pub mod poly;
pub mod rep;
pub mod torsion;

pub use arith::{FieldElement, NumberField, Rational};
pub use error::{Error, Result};
pub use factor::{FactorOptions, Factorization};
pub use group::{Abelianization, GroupPresentation, Word};
pub use obstruction::{ObstructionReport, Verdict};
pub use poly::{Polynomial, UnitNormalForm};
pub use rep::{Matrix2, Representation};
pub use torsion::TorsionValue;
