//! Two-mode mean-field dynamics of a double well and its comparison with
//! the exact many-body evolution.
//!
//! The mean-field state is a pair of mode amplitudes `(k₁, k₂)` with
//! `|k₁|² + |k₂|² = 1`, evolving as
//!
//! ```text
//! i dk₁/dt = −k₂ + γN |k₁|² k₁
//! i dk₂/dt = −k₁ + γN |k₂|² k₂
//! ```
//!
//! with `N_A = N |k₁|²`. Starting from `N_A(0) = N` the population is
//! `N_A(t) = (N/2) [1 + cn(2t | N²γ²/16)]`, so the elliptic parameter
//! reaches 1 exactly at `γ_c = 4/N`, the onset of self-trapping.

mod elliptic;

pub use elliptic::{jacobi_cn, jacobi_dn, jacobi_elliptic, jacobi_sn};

use serde::{Deserialize, Serialize};

use crate::dynamics::Propagator;
use crate::error::{Error, Result};
use crate::experiments::sample_times;
use crate::fock::{enumerate_basis, Configuration, QuantumState};
use crate::lattice::{build_hamiltonian, HoppingSign, WellGraph};
use crate::C64;

/// Default mean-field integration step.
pub const DEFAULT_STEP: f64 = 1e-4;
/// Norm drift beyond which the integration is reported as failed.
pub const NORM_DRIFT_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanFieldSpec {
    pub n: usize,
    pub gamma: f64,
    pub n_a0: usize,
    pub t_max: f64,
    pub num_points: usize,
    pub step: f64,
}

impl MeanFieldSpec {
    pub fn new(n: usize, gamma: f64, n_a0: usize, t_max: f64, num_points: usize) -> Self {
        MeanFieldSpec {
            n,
            gamma,
            n_a0,
            t_max,
            num_points,
            step: DEFAULT_STEP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("need at least one particle".into()));
        }
        if self.n_a0 > self.n {
            return Err(Error::InvalidParameter(format!(
                "initial occupation {} exceeds N = {}",
                self.n_a0, self.n
            )));
        }
        if !(self.step > 0.0) {
            return Err(Error::InvalidParameter("integration step must be positive".into()));
        }
        if !self.gamma.is_finite() {
            return Err(Error::InvalidParameter("gamma must be finite".into()));
        }
        sample_times(self.t_max, self.num_points).map(|_| ())
    }
}

/// Mode amplitudes at one sample time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanFieldPoint {
    pub t: f64,
    pub k1: C64,
    pub k2: C64,
}

impl MeanFieldPoint {
    pub fn norm_sqr(&self) -> f64 {
        self.k1.norm_sqr() + self.k2.norm_sqr()
    }
}

/// RK4 integration of the amplitude equations, sampled on the spec's grid.
pub fn integrate_mean_field(spec: &MeanFieldSpec) -> Result<Vec<MeanFieldPoint>> {
    spec.validate()?;
    let times = sample_times(spec.t_max, spec.num_points)?;
    let g = spec.gamma * spec.n as f64;
    let minus_i = C64::new(0.0, -1.0);
    let rhs = |k1: C64, k2: C64| -> (C64, C64) {
        (
            minus_i * (-k2 + k1 * (g * k1.norm_sqr())),
            minus_i * (-k1 + k2 * (g * k2.norm_sqr())),
        )
    };

    let frac = spec.n_a0 as f64 / spec.n as f64;
    let mut k1 = C64::from(frac.sqrt());
    let mut k2 = C64::from((1.0 - frac).sqrt());
    let mut t = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in &times {
        let span = target - t;
        let steps = (span / spec.step).ceil() as usize;
        if steps > 0 {
            let h = span / steps as f64;
            for _ in 0..steps {
                let (a1, a2) = rhs(k1, k2);
                let (b1, b2) = rhs(k1 + a1 * (h / 2.0), k2 + a2 * (h / 2.0));
                let (c1, c2) = rhs(k1 + b1 * (h / 2.0), k2 + b2 * (h / 2.0));
                let (d1, d2) = rhs(k1 + c1 * h, k2 + c2 * h);
                k1 += (a1 + b1 * 2.0 + c1 * 2.0 + d1) * (h / 6.0);
                k2 += (a2 + b2 * 2.0 + c2 * 2.0 + d2) * (h / 6.0);
            }
        }
        t = target;
        let p = MeanFieldPoint { t, k1, k2 };
        let drift = (p.norm_sqr() - 1.0).abs();
        if !(drift <= NORM_DRIFT_LIMIT) {
            return Err(Error::Numerical(format!(
                "mean-field norm drifted by {drift:e} at t = {t}; reduce the step"
            )));
        }
        out.push(p);
    }
    Ok(out)
}

/// `(t, N_A(t))` from the mean-field equations.
pub fn mean_field_trace(spec: &MeanFieldSpec) -> Result<Vec<(f64, f64)>> {
    let n = spec.n as f64;
    Ok(integrate_mean_field(spec)?
        .into_iter()
        .map(|p| (p.t, n * p.k1.norm_sqr()))
        .collect())
}

/// Elliptic parameter `m = N²γ²/16` of the closed-form solution.
pub fn elliptic_parameter(n: usize, gamma: f64) -> f64 {
    let ng = n as f64 * gamma;
    ng * ng / 16.0
}

/// `N_A(t) = (N/2) [1 + cn(2t | N²γ²/16)]`; valid for `N_A(0) = N`.
pub fn closed_form_na(t: f64, n: usize, gamma: f64) -> f64 {
    0.5 * n as f64 * (1.0 + jacobi_cn(2.0 * t, elliptic_parameter(n, gamma)))
}

/// Self-trapping threshold `γ_c = 4/N`.
pub fn critical_gamma(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("critical coupling needs N >= 1".into()));
    }
    Ok(4.0 / n as f64)
}

fn exact_states(spec: &MeanFieldSpec) -> Result<(Vec<f64>, Vec<QuantumState>)> {
    spec.validate()?;
    let times = sample_times(spec.t_max, spec.num_points)?;
    let basis = enumerate_basis(2, spec.n)?;
    let graph = WellGraph::double_well(1.0).with_interaction(spec.gamma);
    let h = build_hamiltonian(&graph, &basis, HoppingSign::Negative)?;
    let psi0 = QuantumState::fock(basis, &Configuration::from([spec.n_a0, spec.n - spec.n_a0]))?;
    let states = Propagator::new(&h).evolve_many(&psi0, &times)?;
    Ok((times, states))
}

/// `(t, ⟨a†a⟩(t))` from the exact many-body evolution of `|N_A0, N − N_A0⟩`.
pub fn exact_na_trace(spec: &MeanFieldSpec) -> Result<Vec<(f64, f64)>> {
    let (times, states) = exact_states(spec)?;
    times
        .into_iter()
        .zip(states)
        .map(|(t, s)| s.number_expectation(0).map(|na| (t, na)))
        .collect()
}

/// `(t, [|c_0|², …, |c_N|²])` with `c_n` the amplitude of `n` particles in
/// well A.
pub fn configuration_trapping_trace(spec: &MeanFieldSpec) -> Result<Vec<(f64, Vec<f64>)>> {
    let (times, states) = exact_states(spec)?;
    let n = spec.n;
    Ok(times
        .into_iter()
        .zip(states)
        .map(|(t, s)| {
            let probs = (0..=n)
                .map(|k| s.probability(&Configuration::from([k, n - k])))
                .collect();
            (t, probs)
        })
        .collect())
}
