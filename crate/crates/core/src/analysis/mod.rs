//! Desk-scale checks of the zero, vanishing and spectral statements built on
//! the numeric evaluators.

mod spectral;
mod vanishing;
mod zeros;

pub use spectral::{ft_spectral_density, lattice_sum, spectral_density, LatticeSum, SpectralParams};
pub use vanishing::{
    default_a_grid, grid_max_abs, nonvanishing_witness, vanishing_check, Witness, WitnessKind,
};
pub use zeros::{expected_zeros, find_a0, scan_real_zeros, A0, Verdict, ZeroLocation, ZeroReport};
