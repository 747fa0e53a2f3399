use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polynomial division that must be exact left a remainder.
    InexactDivision,
    DivisionByZero,
    PreconditionViolation(String),
    /// The elimination step `(k, j)` found no ratio that is minimal for every
    /// `q > 1` simultaneously.
    NoUniformMinimizer {
        k: usize,
        j: usize,
        candidates: Vec<Partition>,
    },
    /// A block vector is not in the span of the `psi_k`.
    NotDerangement,
    SizeGuard {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    BudgetExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InexactDivision => f.write_str("polynomial division is not exact"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::PreconditionViolation(msg) => write!(f, "precondition violated: {msg}"),
            Error::NoUniformMinimizer { k, j, candidates } => {
                write!(f, "no uniform minimizer at elimination step k={k}, j={j}; candidates:")?;
                for c in candidates {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            Error::NotDerangement => f.write_str("block vector is not a derangement function"),
            Error::SizeGuard { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds guard {limit}")
            }
            Error::BudgetExceeded => f.write_str("time budget exceeded"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
