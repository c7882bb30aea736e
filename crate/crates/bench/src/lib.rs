//! Fixtures shared by the benchmarks.

use wellsim_core::fock::enumerate_basis;
use wellsim_core::{build_hamiltonian, Configuration, HermitianOperator, HoppingSign, QuantumState, WellGraph};

/// Hamiltonian and initial Fock state for `occupations` on `graph`.
pub fn fixture(graph: &WellGraph, sign: HoppingSign, occupations: &[usize]) -> (HermitianOperator, QuantumState) {
    let basis = enumerate_basis(graph.num_wells(), occupations.iter().sum()).expect("non-empty graph");
    let h = build_hamiltonian(graph, &basis, sign).expect("valid graph");
    let psi = QuantumState::fock(basis, &Configuration::new(occupations.to_vec())).expect("state in basis");
    (h, psi)
}

/// `|4,4⟩` in a double well with interaction `gamma` (dimension 9).
pub fn double_well(gamma: f64) -> (HermitianOperator, QuantumState) {
    fixture(
        &WellGraph::double_well(1.0).with_interaction(gamma),
        HoppingSign::Negative,
        &[4, 4],
    )
}

/// Eight bosons on a three-well chain (dimension 45).
pub fn three_well_chain() -> (HermitianOperator, QuantumState) {
    fixture(
        &WellGraph::chain(3, 1.0).with_interaction(0.5),
        HoppingSign::Negative,
        &[4, 0, 4],
    )
}

/// Eight bosons on the four-well square (dimension 165).
pub fn square() -> (HermitianOperator, QuantumState) {
    fixture(
        &WellGraph::square(1.0).with_interaction(0.5),
        HoppingSign::Negative,
        &[2, 2, 2, 2],
    )
}
