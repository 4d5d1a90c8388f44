//! Exact computation of signatures of symmetric and hermitian forms, Sturm
//! root counting, Witt classes over ℚ, F_p and ℚ(X), linking forms, Maslov
//! and Meyer cocycles, Dedekind sums, and knot signature invariants.

pub mod accept;
pub mod arith;
pub mod cli;
pub mod error;
pub mod exact;
pub mod forms;
pub mod knots;
pub mod linalg;
pub mod maslov;
pub mod sturm;
pub mod witt;

pub use error::{Error, Result};
