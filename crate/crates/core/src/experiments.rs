//! Interferometry protocols built on the exact propagator.
//!
//! Times are dimensionless (`λt`) with the reference tunneling rate set to
//! one, so the interaction parameter `γ = W/λ` is just `W`.

use std::f64::consts::{PI, SQRT_2};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dynamics::Propagator;
use crate::error::{Error, Result};
use crate::fock::{enumerate_basis, Configuration, FockBasis, QuantumState};
use crate::lattice::{build_hamiltonian, HoppingSign, WellGraph};
use crate::optimize::{bisect, golden_section_max};

/// 50-50 beam-splitter time of a double well, `π/4`.
pub const HOM_TIME: f64 = PI / 4.0;
/// Half-revival of the three-well line, `π/(2√2)`.
pub const THREE_WELL_HALF_TIME: f64 = PI / (2.0 * SQRT_2);
/// Revival of the three-well line, `π/√2`.
pub const THREE_WELL_REVIVAL_TIME: f64 = PI / SQRT_2;
/// Half-revival of the four-well square, `π/4`.
pub const FOUR_WELL_HALF_TIME: f64 = PI / 4.0;
/// Revival of the four-well square, `π/2`.
pub const FOUR_WELL_REVIVAL_TIME: f64 = PI / 2.0;

/// Probability distribution over Fock configurations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub labels: Vec<Configuration>,
    pub probabilities: Vec<f64>,
}

impl Distribution {
    pub fn from_state(state: &QuantumState) -> Self {
        Distribution {
            labels: state.basis().configurations().to_vec(),
            probabilities: state.probabilities(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn probability(&self, cfg: &Configuration) -> f64 {
        self.labels
            .iter()
            .position(|c| c == cfg)
            .map_or(0.0, |i| self.probabilities[i])
    }

    /// Probability of finding `n` particles in `well`, indexed by `n`.
    ///
    /// For a double well and `well = 0` this is the `p_n` of the HOM
    /// protocol.
    pub fn occupation_probabilities(&self, well: usize) -> Vec<f64> {
        let max = self.labels.iter().map(|c| c.occupation(well)).max().unwrap_or(0);
        let mut out = vec![0.0; max + 1];
        for (c, p) in self.labels.iter().zip(&self.probabilities) {
            out[c.occupation(well)] += p;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Configuration, f64)> {
        self.labels.iter().zip(self.probabilities.iter().copied())
    }
}

/// Double-well HOM run: `|N_A, N_B⟩` evolved under interaction `γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HomSpec {
    pub n_a: usize,
    pub n_b: usize,
    pub gamma: f64,
    pub measure_time: f64,
}

impl HomSpec {
    pub fn new(n_a: usize, n_b: usize, gamma: f64) -> Self {
        HomSpec {
            n_a,
            n_b,
            gamma,
            measure_time: HOM_TIME,
        }
    }

    pub fn at_time(mut self, t: f64) -> Self {
        self.measure_time = t;
        self
    }

    pub fn total(&self) -> usize {
        self.n_a + self.n_b
    }

    pub fn validate(&self) -> Result<()> {
        if self.total() == 0 {
            return Err(Error::InvalidParameter("HOM run needs at least one particle".into()));
        }
        if !self.gamma.is_finite() || !self.measure_time.is_finite() {
            return Err(Error::InvalidParameter("gamma and measure time must be finite".into()));
        }
        Ok(())
    }

    fn setup(&self) -> Result<(Propagator, QuantumState)> {
        self.validate()?;
        let basis = enumerate_basis(2, self.total())?;
        let graph = WellGraph::double_well(1.0).with_interaction(self.gamma);
        let h = build_hamiltonian(&graph, &basis, HoppingSign::Negative)?;
        let psi0 = QuantumState::fock(basis, &Configuration::from([self.n_a, self.n_b]))?;
        Ok((Propagator::new(&h), psi0))
    }
}

/// Occupation distribution at `spec.measure_time`; `p_n` is
/// `occupation_probabilities(0)[n]`.
pub fn run_hom(spec: &HomSpec) -> Result<Distribution> {
    let (prop, psi0) = spec.setup()?;
    Ok(Distribution::from_state(&prop.evolve(&psi0, spec.measure_time)?))
}

/// `num_points` samples evenly spaced on `[0, t_max]`, endpoints included.
pub fn sample_times(t_max: f64, num_points: usize) -> Result<Vec<f64>> {
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::InvalidParameter(format!("t_max must be positive, got {t_max}")));
    }
    if num_points == 0 {
        return Err(Error::InvalidParameter("need at least one sample point".into()));
    }
    if num_points == 1 {
        return Ok(vec![0.0]);
    }
    let dt = t_max / (num_points - 1) as f64;
    Ok((0..num_points).map(|k| k as f64 * dt).collect())
}

pub fn hom_time_series(spec: &HomSpec, t_max: f64, num_points: usize) -> Result<Vec<(f64, Distribution)>> {
    let times = sample_times(t_max, num_points)?;
    let (prop, psi0) = spec.setup()?;
    let states = prop.evolve_many(&psi0, &times)?;
    Ok(times
        .into_iter()
        .zip(states.iter().map(Distribution::from_state))
        .collect())
}

/// Interaction strength where `p₀ = p₁` (and by mirror symmetry `= p₂`) for
/// `|1,1⟩` at the HOM time, located by a 0.01 scan of `[0, 6]` and bisection.
pub fn find_equal_probability_gamma() -> Result<f64> {
    find_equal_probability_gamma_in(0.0, 6.0)
}

pub fn find_equal_probability_gamma_in(lo: f64, hi: f64) -> Result<f64> {
    let gap = |gamma: f64| -> f64 {
        let p = run_hom(&HomSpec::new(1, 1, gamma))
            .expect("valid HOM spec")
            .occupation_probabilities(0);
        p[0] - p[1]
    };
    let steps = ((hi - lo) / 0.01).round().max(1.0) as usize;
    let grid: Vec<f64> = (0..=steps).map(|k| lo + (hi - lo) * k as f64 / steps as f64).collect();
    let mut prev = (grid[0], gap(grid[0]));
    for &g in &grid[1..] {
        let cur = gap(g);
        if prev.1 == 0.0 {
            return Ok(prev.0);
        }
        if prev.1 * cur <= 0.0 {
            return Ok(bisect(gap, prev.0, g, 1e-12));
        }
        prev = (g, cur);
    }
    Err(Error::Numerical(format!(
        "p0 - p1 has no sign change for gamma in [{lo}, {hi}]"
    )))
}

fn fixed_protocol(graph: &WellGraph, sign: HoppingSign, initial: &[usize], t: f64) -> Result<QuantumState> {
    let basis: Arc<FockBasis> = enumerate_basis(graph.num_wells(), initial.iter().sum())?;
    let h = build_hamiltonian(graph, &basis, sign)?;
    let psi0 = QuantumState::fock(basis, &Configuration::new(initial.to_vec()))?;
    Propagator::new(&h).evolve(&psi0, t)
}

/// Three wells in a line, one particle in each outer well, under
/// `H = +λ(a†b + ab† + b†c + bc†)`.
pub fn three_well_state(t: f64) -> Result<QuantumState> {
    fixed_protocol(&WellGraph::chain(3, 1.0), HoppingSign::Positive, &[1, 0, 1], t)
}

pub fn run_three_well(t: f64) -> Result<Distribution> {
    three_well_state(t).map(|s| Distribution::from_state(&s))
}

/// Four wells on a square with equal rates, starting from `|1,0,1,0⟩`.
pub fn four_well_state(t: f64) -> Result<QuantumState> {
    fixed_protocol(&WellGraph::square(1.0), HoppingSign::Negative, &[1, 0, 1, 0], t)
}

pub fn run_four_well(t: f64) -> Result<Distribution> {
    four_well_state(t).map(|s| Distribution::from_state(&s))
}

/// `⟨(−1)^{n_a} (−1)^{n_b}⟩`.
pub fn parity_expectation(state: &QuantumState, well_a: usize, well_b: usize) -> Result<f64> {
    let basis = state.basis();
    basis.check_well(well_a)?;
    basis.check_well(well_b)?;
    Ok(basis
        .configurations()
        .iter()
        .zip(state.probabilities())
        .map(|(c, p)| {
            if (c.occupation(well_a) + c.occupation(well_b)) % 2 == 0 {
                p
            } else {
                -p
            }
        })
        .sum())
}

/// Well indices of the four-well Bell geometry.
pub mod bell_wells {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
}

/// Settings and search window for the CHSH parity test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellSpec {
    pub xi_min: f64,
    pub xi_max: f64,
    pub xi_step: f64,
    pub gamma: f64,
    pub measure_time: f64,
    /// Width of the final golden-section bracket.
    pub tolerance: f64,
}

impl Default for BellSpec {
    fn default() -> Self {
        BellSpec {
            xi_min: 0.0,
            xi_max: 5.0,
            xi_step: 0.01,
            gamma: 0.0,
            measure_time: PI / 4.0,
            tolerance: 1e-4,
        }
    }
}

impl BellSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.measure_time > 0.0) {
            return Err(Error::InvalidParameter("Bell measure time must be positive".into()));
        }
        if !(self.xi_step > 0.0) || !(self.xi_max > self.xi_min) {
            return Err(Error::InvalidParameter(format!(
                "invalid xi grid [{}, {}] step {}",
                self.xi_min, self.xi_max, self.xi_step
            )));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParameter("tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Parity correlation `E(r1, r2)` for this spec's interaction and time.
    pub fn correlation(&self, r1: f64, r2: f64) -> Result<f64> {
        use bell_wells::*;
        // sides AB, BC, CD, DA
        let graph = WellGraph::square_with_rates(r1, 1.0, r2, 1.0).with_interaction(self.gamma);
        let state = fixed_protocol(&graph, HoppingSign::Negative, &[1, 0, 1, 0], self.measure_time)?;
        // P_alpha from n_B, P_beta from n_D
        parity_expectation(&state, B, D)
    }

    /// `Q(ξ) = E(1,1) + E(1+ξ,1) + E(1,1−ξ) − E(1+ξ,1−ξ)`.
    pub fn chsh(&self, xi: f64) -> Result<f64> {
        Ok(
            self.correlation(1.0, 1.0)? + self.correlation(1.0 + xi, 1.0)? + self.correlation(1.0, 1.0 - xi)?
                - self.correlation(1.0 + xi, 1.0 - xi)?,
        )
    }
}

/// `E(λ₁/λ, λ₂/λ)` with no interaction, measured at `π/(4λ)`.
pub fn bell_correlation(r1: f64, r2: f64) -> Result<f64> {
    BellSpec::default().correlation(r1, r2)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChshOptimum {
    pub q_max: f64,
    pub xi_star: f64,
    /// Every `(ξ, Q)` evaluated on the coarse grid.
    pub scan: Vec<(f64, f64)>,
}

/// Grid scan of `Q(ξ)` followed by golden-section refinement around the
/// best grid point.
pub fn maximize_chsh(spec: &BellSpec) -> Result<ChshOptimum> {
    spec.validate()?;
    let steps = ((spec.xi_max - spec.xi_min) / spec.xi_step).round() as usize;
    let e11 = spec.correlation(1.0, 1.0)?;
    let q = |xi: f64| -> Result<f64> {
        Ok(
            e11 + spec.correlation(1.0 + xi, 1.0)? + spec.correlation(1.0, 1.0 - xi)?
                - spec.correlation(1.0 + xi, 1.0 - xi)?,
        )
    };
    let scan = (0..=steps)
        .map(|k| {
            let xi = (spec.xi_min + k as f64 * spec.xi_step).min(spec.xi_max);
            q(xi).map(|v| (xi, v))
        })
        .collect::<Result<Vec<_>>>()?;

    let (best_k, &(xi_grid, q_grid)) = scan
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .expect("grid is non-empty");
    let q_min = scan.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    if q_grid - q_min < 1e-12 {
        return Err(Error::Numerical("Q(xi) is flat over the scan grid; no optimum".into()));
    }

    let lo = scan[best_k.saturating_sub(1)].0;
    let hi = scan[(best_k + 1).min(scan.len() - 1)].0;
    let (xi_ref, q_ref) = if hi > lo {
        golden_section_max(|x| q(x).unwrap_or(f64::NEG_INFINITY), lo, hi, spec.tolerance)
    } else {
        (xi_grid, q_grid)
    };
    let (xi_star, q_max) = if q_ref >= q_grid {
        (xi_ref, q_ref)
    } else {
        (xi_grid, q_grid)
    };
    Ok(ChshOptimum { q_max, xi_star, scan })
}
