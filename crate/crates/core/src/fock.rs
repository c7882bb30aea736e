//! Occupation-number (Fock) bases for `N` bosons in `M` wells.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::C64;

/// Particle count in each well.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration(Vec<usize>);

impl Configuration {
    pub fn new(occupations: Vec<usize>) -> Self {
        Configuration(occupations)
    }

    pub fn occupations(&self) -> &[usize] {
        &self.0
    }

    pub fn num_wells(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn occupation(&self, well: usize) -> usize {
        self.0[well]
    }

    /// Action of `a†_to a_from`: the configuration with one particle moved
    /// from `from` to `to`, and the matrix element `√(n_from (n_to + 1))`.
    ///
    /// Returns `None` when the source well is empty or `from == to`.
    pub fn hop(&self, from: usize, to: usize) -> Option<(Configuration, f64)> {
        if from == to || self.0[from] == 0 {
            return None;
        }
        let n_from = self.0[from];
        let n_to = self.0[to];
        let mut occ = self.0.clone();
        occ[from] -= 1;
        occ[to] += 1;
        Some((Configuration(occ), ((n_from * (n_to + 1)) as f64).sqrt()))
    }
}

impl From<Vec<usize>> for Configuration {
    fn from(v: Vec<usize>) -> Self {
        Configuration(v)
    }
}

impl<const K: usize> From<[usize; K]> for Configuration {
    fn from(v: [usize; K]) -> Self {
        Configuration(v.to_vec())
    }
}

/// Compact label: `101` when every well holds fewer than ten particles,
/// `10-0-1` otherwise.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&n| n < 10);
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str("-")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Same as [`Configuration::hop`], as a free function.
pub fn hop_element(cfg: &Configuration, from_well: usize, to_well: usize) -> Option<(Configuration, f64)> {
    cfg.hop(from_well, to_well)
}

/// All configurations of `total_particles` bosons over `num_wells` wells,
/// ordered lexicographically descending on the occupation tuple.
///
/// For two wells the basis index `i` therefore holds `N - i` particles in
/// well A; use [`FockBasis::index_of`] rather than relying on that.
#[derive(Debug, Clone, PartialEq)]
pub struct FockBasis {
    num_wells: usize,
    total_particles: usize,
    configurations: Vec<Configuration>,
    index: HashMap<Configuration, usize>,
}

impl FockBasis {
    pub fn new(num_wells: usize, total_particles: usize) -> Result<Self> {
        if num_wells == 0 {
            return Err(Error::NoWells);
        }
        let mut configurations = Vec::new();
        let mut prefix = Vec::with_capacity(num_wells);
        fill_descending(&mut configurations, &mut prefix, num_wells, total_particles);
        let index = configurations.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(FockBasis {
            num_wells,
            total_particles,
            configurations,
            index,
        })
    }

    pub fn num_wells(&self) -> usize {
        self.num_wells
    }

    pub fn total_particles(&self) -> usize {
        self.total_particles
    }

    pub fn dim(&self) -> usize {
        self.configurations.len()
    }

    pub fn configurations(&self) -> &[Configuration] {
        &self.configurations
    }

    pub fn configuration(&self, index: usize) -> &Configuration {
        &self.configurations[index]
    }

    pub fn index_of(&self, cfg: &Configuration) -> Option<usize> {
        self.index.get(cfg).copied()
    }

    pub fn same_space(&self, other: &FockBasis) -> bool {
        self.num_wells == other.num_wells && self.total_particles == other.total_particles
    }

    pub(crate) fn check_well(&self, well: usize) -> Result<()> {
        if well >= self.num_wells {
            Err(Error::WellOutOfRange {
                index: well,
                num_wells: self.num_wells,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_same(&self, other: &FockBasis) -> Result<()> {
        if self.same_space(other) {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected_wells: self.num_wells,
                expected_particles: self.total_particles,
                found_wells: other.num_wells,
                found_particles: other.total_particles,
            })
        }
    }
}

fn fill_descending(out: &mut Vec<Configuration>, prefix: &mut Vec<usize>, wells_left: usize, remaining: usize) {
    if wells_left == 1 {
        prefix.push(remaining);
        out.push(Configuration(prefix.clone()));
        prefix.pop();
        return;
    }
    for n in (0..=remaining).rev() {
        prefix.push(n);
        fill_descending(out, prefix, wells_left - 1, remaining - n);
        prefix.pop();
    }
}

/// Shared-basis constructor.
pub fn enumerate_basis(num_wells: usize, total_particles: usize) -> Result<Arc<FockBasis>> {
    FockBasis::new(num_wells, total_particles).map(Arc::new)
}

/// Normalized amplitude vector over a Fock basis.
#[derive(Debug, Clone)]
pub struct QuantumState {
    basis: Arc<FockBasis>,
    amplitudes: DVector<C64>,
}

impl QuantumState {
    /// Normalizes `amplitudes`; fails on a length mismatch or a zero vector.
    pub fn new(basis: Arc<FockBasis>, amplitudes: DVector<C64>) -> Result<Self> {
        if amplitudes.len() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidParameter(
                "state vector has zero or non-finite norm".into(),
            ));
        }
        Ok(QuantumState {
            basis,
            amplitudes: amplitudes / C64::from(norm),
        })
    }

    /// A single Fock state `|cfg⟩`.
    pub fn fock(basis: Arc<FockBasis>, cfg: &Configuration) -> Result<Self> {
        let idx = basis.index_of(cfg).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "configuration {cfg} is not in the {}-well, {}-particle basis",
                basis.num_wells(),
                basis.total_particles()
            ))
        })?;
        let mut amplitudes = DVector::zeros(basis.dim());
        amplitudes[idx] = C64::new(1.0, 0.0);
        Ok(QuantumState { basis, amplitudes })
    }

    /// Wraps an already-normalized vector produced by a unitary map.
    pub(crate) fn from_unitary_image(basis: Arc<FockBasis>, amplitudes: DVector<C64>) -> Self {
        debug_assert_eq!(basis.dim(), amplitudes.len());
        QuantumState { basis, amplitudes }
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, cfg: &Configuration) -> Option<C64> {
        self.basis.index_of(cfg).map(|i| self.amplitudes[i])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// `|c_i|²` in basis order.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.norm_sqr()).collect()
    }

    pub fn probability(&self, cfg: &Configuration) -> f64 {
        self.amplitude(cfg).map_or(0.0, |c| c.norm_sqr())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuantumState) -> Result<C64> {
        self.basis.check_same(&other.basis)?;
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// `|⟨self|other⟩|`, insensitive to global phase.
    pub fn fidelity(&self, other: &QuantumState) -> Result<f64> {
        self.inner(other).map(|z| z.norm())
    }

    /// `⟨a†_well a_well⟩`.
    pub fn number_expectation(&self, well: usize) -> Result<f64> {
        self.basis.check_well(well)?;
        Ok(self
            .basis
            .configurations()
            .iter()
            .zip(self.amplitudes.iter())
            .map(|(cfg, c)| c.norm_sqr() * cfg.occupation(well) as f64)
            .sum())
    }
}

pub fn number_expectation(state: &QuantumState, well: usize) -> Result<f64> {
    state.number_expectation(well)
}
