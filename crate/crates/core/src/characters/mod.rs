//! Dimensions, block decompositions and value forms of derangement
//! functions.

pub mod block;
pub mod coeffs;
pub mod dims;
pub mod fz;
pub mod hat_tau;
pub mod psi;
pub mod values;

pub use block::BlockVector;
pub use coeffs::{coeff_c, psi_block, CoeffTable};
pub use dims::{block_dim, dim_rho, group_order, unipotent_dim};
pub use fz::{fz_coeffs, fz_positivity, steinberg_threshold, FzReport};
pub use hat_tau::{hat_tau_blocks, hat_tau_closed_form, hat_tau_psi, kirillov_identity_residual};
pub use psi::{psi_in_sigma, sigma_coords_to_psi, sigma_in_psi, PsiCoeffs};
pub use values::{dimension_check, psi_values, restrict, sigma_values, DerangementValues};
