//! File formats, cache, rendering and verification suites for the
//! `derangement` command-line tool.

pub mod budget;
pub mod cache;
pub mod error;
pub mod json;
pub mod render;
pub mod table;
pub mod verify;

pub use budget::WallClock;
pub use cache::Cache;
pub use error::{CliError, Result};
pub use table::{Basis, BasisTable};
