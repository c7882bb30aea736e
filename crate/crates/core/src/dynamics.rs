//! Exact time evolution by Hermitian eigendecomposition, plus a fixed-step
//! RK4 integrator that serves as an independent check.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::fock::{FockBasis, QuantumState};
use crate::lattice::{HermitianOperator, HoppingSign, WellGraph};
use crate::C64;

/// Spectral decomposition `H = V diag(E) V†`.
#[derive(Debug, Clone)]
pub struct Propagator {
    basis: Arc<FockBasis>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<C64>,
}

impl Propagator {
    pub fn new(h: &HermitianOperator) -> Self {
        let eig = SymmetricEigen::new(h.matrix().clone());
        Propagator {
            basis: h.basis().clone(),
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        }
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<C64> {
        &self.eigenvectors
    }

    /// `max |V diag(E) V† − H|`.
    pub fn reconstruction_error(&self, h: &HermitianOperator) -> f64 {
        let v = &self.eigenvectors;
        let e = DMatrix::from_diagonal(&self.eigenvalues.map(C64::from));
        let r = v * e * v.adjoint() - h.matrix();
        r.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |V†V − I|`.
    pub fn unitarity_error(&self) -> f64 {
        let d = self.eigenvectors.nrows();
        let r = self.eigenvectors.adjoint() * &self.eigenvectors - DMatrix::<C64>::identity(d, d);
        r.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `exp(−iHt)|ψ⟩`.
    pub fn evolve(&self, state: &QuantumState, t: f64) -> Result<QuantumState> {
        self.basis.check_same(state.basis())?;
        let coeffs = self.eigenvectors.ad_mul(state.amplitudes());
        Ok(self.rotate(&coeffs, t))
    }

    /// Evolves one initial state to each of `times`, sharing the projection
    /// onto the eigenbasis.
    pub fn evolve_many(&self, state: &QuantumState, times: &[f64]) -> Result<Vec<QuantumState>> {
        self.basis.check_same(state.basis())?;
        let coeffs = self.eigenvectors.ad_mul(state.amplitudes());
        Ok(times.iter().map(|&t| self.rotate(&coeffs, t)).collect())
    }

    fn rotate(&self, coeffs: &DVector<C64>, t: f64) -> QuantumState {
        let phased = DVector::from_iterator(
            coeffs.len(),
            coeffs
                .iter()
                .zip(self.eigenvalues.iter())
                .map(|(c, &e)| c * C64::from_polar(1.0, -e * t)),
        );
        QuantumState::from_unitary_image(self.basis.clone(), &self.eigenvectors * phased)
    }
}

pub fn diagonalize(h: &HermitianOperator) -> Propagator {
    Propagator::new(h)
}

pub fn evolve(prop: &Propagator, state: &QuantumState, t: f64) -> Result<QuantumState> {
    prop.evolve(state, t)
}

/// Classical fixed-step RK4 on `i dc/dt = H c`, with the step shrunk so an
/// integer number of steps lands on `t` (negative `t` integrates backwards).
///
/// The output is not renormalized: its norm carries the integrator's
/// truncation error.
pub fn evolve_ode_oracle(h: &HermitianOperator, state: &QuantumState, t: f64, step: f64) -> Result<QuantumState> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "integration step must be positive, got {step}"
        )));
    }
    h.basis().check_same(state.basis())?;
    let n_steps = (t.abs() / step).ceil() as usize;
    let mut c = state.amplitudes().clone();
    if n_steps > 0 {
        let dt = t / n_steps as f64;
        let minus_i = C64::new(0.0, -1.0);
        let m = h.matrix();
        let f = |v: &DVector<C64>| (m * v) * minus_i;
        let half = C64::from(dt / 2.0);
        let full = C64::from(dt);
        let sixth = C64::from(dt / 6.0);
        for _ in 0..n_steps {
            let k1 = f(&c);
            let k2 = f(&(&c + &k1 * half));
            let k3 = f(&(&c + &k2 * half));
            let k4 = f(&(&c + &k3 * full));
            c += (k1 + k2 * C64::from(2.0) + k3 * C64::from(2.0) + k4) * sixth;
        }
    }
    Ok(QuantumState::from_unitary_image(state.basis().clone(), c))
}

/// One-body mode transformation `U = exp(−i h t)` for a non-interacting
/// graph, where `h` is [`WellGraph::one_body_matrix`]. Annihilation
/// operators evolve as `a_i(t) = Σ_j U_ij a_j(0)`.
///
/// With the negative hopping sign this is `exp(+iλAt)` for adjacency `A`;
/// a double well at `t = π/(4λ)` gives the 50-50 beam splitter
/// `(1/√2)[[1, i], [i, 1]]`.
pub fn single_particle_matrix(graph: &WellGraph, sign: HoppingSign, t: f64) -> Result<DMatrix<C64>> {
    if graph.interaction() != 0.0 {
        return Err(Error::Interacting(graph.interaction()));
    }
    let eig = SymmetricEigen::new(graph.one_body_matrix(sign));
    let v = eig.eigenvectors.map(C64::from);
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|e| C64::from_polar(1.0, -e * t)));
    Ok(&v * phases * v.transpose())
}
