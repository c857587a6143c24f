//! Stationary scattering for the Dirac operator `mβ + α·p + V(r)` with a
//! Hermitian 4×4 matrix potential.
//!
//! The pipeline: factor the potential as `V = V₁W₁V₁`, discretize the
//! symmetrized Lippmann–Schwinger equation on a volume quadrature grid, solve it
//! densely, and read off amplitudes, the on-shell T-kernel and the unitary
//! energetic S-matrix on the direction sphere. A separate radial solver gives
//! partial-wave phase shifts for spherically symmetric potentials.

pub mod amplitude;
pub mod dirac_algebra;
pub mod discretization;
pub mod error;
pub mod kernels;
mod lebedev_data;
pub mod linalg;
pub mod partial_wave;
pub mod potentials;
pub mod rls_solver;
pub mod s_matrix;

pub use error::{Error, Result};
pub use num_complex::Complex64;
