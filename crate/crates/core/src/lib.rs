//! Exact symbolic engine for derangement characters of `GL(n, q)`.
//!
//! Everything is computed over `ℤ[q]` or `ℚ(q)` with `q` a formal variable;
//! "positive" always means positive for every real `q > 1`.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod budget;
pub mod characters;
pub mod cone;
pub mod error;
pub mod oracle;
pub mod partition;

pub use algebra::{IntPoly, RatFunc, SignVerdict};
pub use budget::{Budget, Unlimited};
pub use characters::{BlockVector, CoeffTable, DerangementValues, PsiCoeffs};
pub use error::{Error, Result};
pub use partition::Partition;
