"""Genetic search for expressible parameterized quantum circuits, with VQE
benchmarking and trainability diagnostics."""

__version__ = "0.1.0"

from .analysis import (
    GateCount,
    GradientStats,
    LandscapeGrid,
    gate_counts,
    gradient_variance,
    landscape_scan,
)
from .errors import (
    CapacityError,
    ContractError,
    ConvergenceError,
    EvoansatzError,
    ParseError,
    StructuralError,
)
from .express import (
    ExpressibilityScore,
    FidelityHistogram,
    expressibility,
    fidelity_histogram,
    haar_bin_probs,
    jsd,
    sample_fidelities,
    score_fidelities,
)
from .ga import GAConfig, GARunReport, evaluate_population, evolve, select_parents
from .genome import (
    GATE_SETS,
    CircuitGenome,
    GateSet,
    crossover,
    mutate,
    random_genome,
    validate_genome,
)
from .hamiltonians import (
    PauliHamiltonian,
    PauliTerm,
    apply_hamiltonian,
    dense_matrix,
    expectation,
    expectation_batch,
    ground_energy,
    ground_energy_dense,
    load_hamiltonian,
    save_hamiltonian,
    tfim,
)
from .serialize import dumps_circuit, load_circuit, save_circuit
from .sim import (
    Gate,
    StateVector,
    apply_gate,
    fidelity,
    fidelity_pairs,
    new_zero_state,
    run_circuit,
    run_circuit_batch,
)
from .vqe import VQEConfig, VQETrace, energy, energy_batch, gradient, run_vqe
