//! Well geometries and Bose-Hubbard operators in a Fock basis.

use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{FockBasis, QuantumState};
use crate::C64;

/// Entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Tunneling link between two wells with rate `rate` (frequency units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub rate: f64,
}

/// Sign in front of the hopping term, `∓λ(a†b + b†a)`.
///
/// The two choices are gauge-equivalent on bipartite graphs, so occupation
/// probabilities agree; amplitudes differ by per-configuration signs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoppingSign {
    #[default]
    Negative,
    Positive,
}

impl HoppingSign {
    pub fn factor(self) -> f64 {
        match self {
            HoppingSign::Negative => -1.0,
            HoppingSign::Positive => 1.0,
        }
    }
}

impl FromStr for HoppingSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "negative" | "-" => Ok(HoppingSign::Negative),
            "positive" | "+" => Ok(HoppingSign::Positive),
            other => Err(Error::InvalidParameter(format!("unknown hopping sign `{other}`"))),
        }
    }
}

/// Wells joined by tunneling edges, with on-site interaction `W` and
/// on-site energy `E₀`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WellGraph {
    num_wells: usize,
    edges: Vec<Edge>,
    #[serde(default)]
    interaction: f64,
    #[serde(default)]
    onsite_energy: f64,
}

impl WellGraph {
    pub fn new(num_wells: usize) -> Result<Self> {
        if num_wells == 0 {
            return Err(Error::NoWells);
        }
        Ok(WellGraph {
            num_wells,
            edges: Vec::new(),
            interaction: 0.0,
            onsite_energy: 0.0,
        })
    }

    /// Builds a graph from parts, checking every edge.
    pub fn from_edges(num_wells: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = WellGraph::new(num_wells)?;
        for e in edges {
            g.add_edge(e.a, e.b, e.rate)?;
        }
        Ok(g)
    }

    /// Two wells A, B at tunneling rate `rate`.
    pub fn double_well(rate: f64) -> Self {
        WellGraph::chain(2, rate)
    }

    /// Open chain 0 — 1 — … — (m−1) with uniform rate.
    pub fn chain(num_wells: usize, rate: f64) -> Self {
        assert!(num_wells >= 1);
        WellGraph {
            num_wells,
            edges: (1..num_wells).map(|i| Edge { a: i - 1, b: i, rate }).collect(),
            interaction: 0.0,
            onsite_energy: 0.0,
        }
    }

    /// Four wells A, B, C, D on a square with tunneling only along the sides.
    pub fn square(rate: f64) -> Self {
        WellGraph::square_with_rates(rate, rate, rate, rate)
    }

    /// Square A–B–C–D–A with rates for sides AB, BC, CD, DA.
    pub fn square_with_rates(ab: f64, bc: f64, cd: f64, da: f64) -> Self {
        WellGraph {
            num_wells: 4,
            edges: vec![
                Edge { a: 0, b: 1, rate: ab },
                Edge { a: 1, b: 2, rate: bc },
                Edge { a: 2, b: 3, rate: cd },
                Edge { a: 3, b: 0, rate: da },
            ],
            interaction: 0.0,
            onsite_energy: 0.0,
        }
    }

    pub fn with_interaction(mut self, w: f64) -> Self {
        self.interaction = w;
        self
    }

    pub fn with_onsite_energy(mut self, e0: f64) -> Self {
        self.onsite_energy = e0;
        self
    }

    pub fn add_edge(&mut self, a: usize, b: usize, rate: f64) -> Result<()> {
        for w in [a, b] {
            if w >= self.num_wells {
                return Err(Error::WellOutOfRange {
                    index: w,
                    num_wells: self.num_wells,
                });
            }
        }
        if a == b {
            return Err(Error::InvalidGraph(format!("self-edge on well {a}")));
        }
        if !rate.is_finite() {
            return Err(Error::InvalidGraph(format!("non-finite rate on edge {a}-{b}")));
        }
        if self.edges.iter().any(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a)) {
            return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
        }
        self.edges.push(Edge { a, b, rate });
        Ok(())
    }

    /// Re-checks the invariants; needed after deserializing.
    pub fn validate(&self) -> Result<()> {
        WellGraph::from_edges(self.num_wells, self.edges.iter().copied()).map(|_| ())
    }

    pub fn num_wells(&self) -> usize {
        self.num_wells
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn interaction(&self) -> f64 {
        self.interaction
    }

    pub fn onsite_energy(&self) -> f64 {
        self.onsite_energy
    }

    /// One-body Hamiltonian `h` (M×M) such that the hopping part of `H` is
    /// `Σ h_ij a†_i a_j`, with `E₀` on the diagonal.
    pub fn one_body_matrix(&self, sign: HoppingSign) -> DMatrix<f64> {
        let mut h = DMatrix::from_diagonal_element(self.num_wells, self.num_wells, self.onsite_energy);
        for e in &self.edges {
            h[(e.a, e.b)] += sign.factor() * e.rate;
            h[(e.b, e.a)] += sign.factor() * e.rate;
        }
        h
    }
}

/// Dense Hermitian matrix acting on a Fock basis.
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    basis: Arc<FockBasis>,
    matrix: DMatrix<C64>,
}

impl HermitianOperator {
    /// Fails unless `matrix` is square of the basis dimension and Hermitian
    /// within [`HERMITIAN_TOL`].
    pub fn new(basis: Arc<FockBasis>, matrix: DMatrix<C64>) -> Result<Self> {
        let d = basis.dim();
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        let dev = hermitian_deviation(&matrix);
        if !(dev <= HERMITIAN_TOL) {
            return Err(Error::NotHermitian(dev));
        }
        Ok(HermitianOperator { basis, matrix })
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `⟨ψ|O|ψ⟩` (real for Hermitian `O`).
    pub fn expectation(&self, state: &QuantumState) -> Result<f64> {
        self.basis.check_same(state.basis())?;
        let psi = state.amplitudes();
        Ok(psi.dotc(&(&self.matrix * psi)).re)
    }

    /// Largest entry of `[self, other]`.
    pub fn commutator_max(&self, other: &HermitianOperator) -> Result<f64> {
        self.basis.check_same(&other.basis)?;
        let c = &self.matrix * &other.matrix - &other.matrix * &self.matrix;
        Ok(c.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }

    pub fn product(&self, other: &HermitianOperator) -> Result<DMatrix<C64>> {
        self.basis.check_same(&other.basis)?;
        Ok(&self.matrix * &other.matrix)
    }
}

pub(crate) fn hermitian_deviation(m: &DMatrix<C64>) -> f64 {
    let n = m.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Bose-Hubbard Hamiltonian `H/ħ` of `graph` on `basis`:
///
/// ```text
/// H = E₀ N  ∓  Σ_edges λ_ij (a†_i a_j + a†_j a_i)  +  (W/2) Σ_i n_i (n_i − 1)
/// ```
pub fn build_hamiltonian(graph: &WellGraph, basis: &Arc<FockBasis>, sign: HoppingSign) -> Result<HermitianOperator> {
    if graph.num_wells() != basis.num_wells() {
        return Err(Error::DimensionMismatch {
            expected: basis.num_wells(),
            found: graph.num_wells(),
        });
    }
    let d = basis.dim();
    let n_total = basis.total_particles() as f64;
    let mut m = DMatrix::<C64>::zeros(d, d);
    for (col, cfg) in basis.configurations().iter().enumerate() {
        let pairs: usize = cfg.occupations().iter().map(|&n| n * n.saturating_sub(1)).sum();
        m[(col, col)] = C64::from(graph.onsite_energy() * n_total + 0.5 * graph.interaction() * pairs as f64);
        for e in graph.edges() {
            let amp = sign.factor() * e.rate;
            for (from, to) in [(e.a, e.b), (e.b, e.a)] {
                if let Some((target, f)) = cfg.hop(from, to) {
                    let row = basis.index_of(&target).expect("hop stays in the basis");
                    m[(row, col)] += C64::from(amp * f);
                }
            }
        }
    }
    HermitianOperator::new(basis.clone(), m)
}

/// Diagonal operator `(−1)^{n_well}`.
pub fn parity_operator(basis: &Arc<FockBasis>, well: usize) -> Result<HermitianOperator> {
    diagonal_operator(basis, well, |n| if n % 2 == 0 { 1.0 } else { -1.0 })
}

/// Diagonal operator `n_well = a†a`.
pub fn number_operator(basis: &Arc<FockBasis>, well: usize) -> Result<HermitianOperator> {
    diagonal_operator(basis, well, |n| n as f64)
}

/// `Σ_i n_i`.
pub fn total_number_operator(basis: &Arc<FockBasis>) -> HermitianOperator {
    let diag = basis.configurations().iter().map(|c| C64::from(c.total() as f64));
    HermitianOperator {
        basis: basis.clone(),
        matrix: DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(basis.dim(), diag)),
    }
}

fn diagonal_operator(basis: &Arc<FockBasis>, well: usize, f: impl Fn(usize) -> f64) -> Result<HermitianOperator> {
    basis.check_well(well)?;
    let diag = basis.configurations().iter().map(|c| C64::from(f(c.occupation(well))));
    Ok(HermitianOperator {
        basis: basis.clone(),
        matrix: DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(basis.dim(), diag)),
    })
}
