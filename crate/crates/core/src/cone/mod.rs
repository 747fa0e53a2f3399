//! The cone of derangement characters: elimination, extremality, the
//! stable range and the search for extreme rays beyond the `τ` list.

pub mod analyze;
pub mod dd;
pub mod eliminate;
pub mod extreme;
pub mod lp;
pub mod stable;
pub mod tau_star;

pub use analyze::{analyze, analyze_basis, unipotent_conjecture_probe, ConeReport, ProbeRow};
pub use eliminate::{eliminate, eliminate_with_budget, ConeBasis};
pub use extreme::{eigendiagram_sets, eigendiagrams, is_extreme, is_extreme_in_table, rank_blocks};
pub use lp::Certificate;
pub use stable::{branch_tau_check, stable_mismatch, stable_tau, stable_transition};
pub use tau_star::{tau_star_7, tau_star_7_coords, tau_star_a1, tau_star_a2};
