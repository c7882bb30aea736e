//! Exact simulation of identical bosons in arrays of tunneling-coupled
//! potential wells.
//!
//! The crate is organised bottom-up:
//!
//! * [`fock`] enumerates occupation-number bases and holds state vectors.
//! * [`lattice`] describes well geometries and assembles Bose-Hubbard
//!   Hamiltonians and diagonal observables.
//! * [`dynamics`] propagates states exactly by eigendecomposition, with a
//!   fixed-step integrator kept as an independent cross-check.
//! * [`experiments`] runs the interferometry protocols (Hong-Ou-Mandel,
//!   multi-well interferometers, the CHSH parity test).
//! * [`meanfield`] holds the two-mode mean-field equations, the Jacobi
//!   elliptic closed form and the exact-vs-mean-field comparisons.
//! * [`report`] is the tabular result type consumed by the command line.
//!
//! Hamiltonians are stored as `H/ħ` (frequency units) and all times are
//! dimensionless, measured as `λ·t` for a reference tunneling rate `λ = 1`.

// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod fock;
pub mod lattice;
pub mod meanfield;
mod optimize;
pub mod report;

pub use dynamics::{diagonalize, evolve, evolve_ode_oracle, single_particle_matrix, Propagator};
pub use error::{Error, Result};
pub use experiments::{BellSpec, ChshOptimum, Distribution, HomSpec};
pub use fock::{Configuration, FockBasis, QuantumState};
pub use lattice::{build_hamiltonian, parity_operator, HermitianOperator, HoppingSign, WellGraph};
pub use meanfield::MeanFieldSpec;
pub use report::{ExperimentResult, Value};

/// Complex scalar used for all amplitudes and operator entries.
pub type C64 = num_complex::Complex64;
