import numpy as np
import pytest

from evoansatz import (
    ContractError,
    GATE_SETS,
    VQEConfig,
    energy,
    energy_batch,
    gradient,
    ground_energy,
    random_genome,
    run_vqe,
    tfim,
)
from evoansatz.vqe import PLATEAU_WINDOW, initial_params
from .conftest import rotation_genome


def finite_difference(genome, params, h, step=1e-6):
    params = np.asarray(params, dtype=float)
    grad = np.empty_like(params)
    for i in range(len(params)):
        hi = params.copy()
        lo = params.copy()
        hi[i] += step
        lo[i] -= step
        grad[i] = (energy(genome, hi, h) - energy(genome, lo, h)) / (2 * step)
    return grad


def test_energy_batch_matches_scalar(rng):
    h = tfim(3)
    genome = random_genome(GATE_SETS["G"], 3, 3, rng)
    thetas = rng.uniform(0, 2 * np.pi, size=(4, genome.n_params))
    batch = energy_batch(genome, thetas, h)
    for i in range(4):
        assert batch[i] == pytest.approx(energy(genome, thetas[i], h))


def test_parameter_shift_matches_finite_difference(rng):
    h = tfim(3)
    for _ in range(5):
        genome = random_genome(GATE_SETS["G"], 3, 4, rng)
        if genome.n_params == 0:
            continue
        theta = rng.uniform(0, 2 * np.pi, size=genome.n_params)
        assert np.allclose(
            gradient(genome, theta, h), finite_difference(genome, theta, h), atol=1e-7
        )


def test_initial_params_modes(rng):
    from evoansatz import CircuitGenome

    base = rotation_genome(("RX", "RY"), n_qubits=2)
    genome = CircuitGenome(base.n_qubits, base.gate_set, base.layers, np.array([0.3, 0.7]))
    assert np.array_equal(
        initial_params(genome, VQEConfig(init_mode="stored")), [0.3, 0.7]
    )
    assert np.array_equal(
        initial_params(genome, VQEConfig(init_mode="zeros")), [0.0, 0.0]
    )
    r1 = initial_params(genome, VQEConfig(init_mode="random", seed=3))
    r2 = initial_params(genome, VQEConfig(init_mode="random", seed=3))
    assert np.array_equal(r1, r2)
    assert np.all((0 <= r1) & (r1 < 2 * np.pi))


def test_config_validation():
    with pytest.raises(ContractError):
        VQEConfig(learning_rate=-1.0).validate()
    with pytest.raises(ContractError):
        VQEConfig(init_mode="warm").validate()
    with pytest.raises(ContractError):
        VQEConfig(adam_beta1=1.5).validate()


def test_vqe_single_qubit_field_reaches_exact():
    # H = -X on one qubit: a single RY can reach the exact -1 ground state.
    from evoansatz import PauliHamiltonian

    h = PauliHamiltonian(1, [(-1.0, "X")], {"name": "minus-X"})
    genome = rotation_genome(("RY",), n_qubits=1)
    trace = run_vqe(genome, h, VQEConfig(max_iters=200, init_mode="zeros"))
    assert trace.final_energy == pytest.approx(-1.0, abs=1e-3)
    assert trace.energies[0] > trace.final_energy


def test_vqe_trace_shapes_and_monotone_trend(rng):
    h = tfim(2)
    genome = random_genome(GATE_SETS["E"], 2, 4, rng)
    trace = run_vqe(genome, h, VQEConfig(max_iters=50, init_mode="random", seed=1))
    assert len(trace.energies) == trace.iterations_used + 1
    assert len(trace.grad_norms) == trace.iterations_used
    assert trace.final_energy <= trace.energies[0] + 1e-9
    assert trace.final_energy >= ground_energy(h) - 1e-9


def test_vqe_plateau_stop():
    # A circuit with no effect on the energy plateaus immediately.
    from evoansatz import PauliHamiltonian

    h = PauliHamiltonian(1, [(1.0, "Z")])
    genome = rotation_genome(("RZ",), n_qubits=1)  # RZ leaves |0> energy fixed
    trace = run_vqe(genome, h, VQEConfig(max_iters=300, init_mode="zeros"))
    assert trace.iterations_used <= PLATEAU_WINDOW + 1
    assert trace.final_energy == pytest.approx(1.0)


def test_vqe_determinism(rng):
    h = tfim(2)
    genome = random_genome(GATE_SETS["E"], 2, 3, rng)
    cfg = VQEConfig(max_iters=30, init_mode="random", seed=9)
    t1 = run_vqe(genome, h, cfg)
    t2 = run_vqe(genome, h, cfg)
    assert np.array_equal(t1.energies, t2.energies)
    assert np.array_equal(t1.final_params, t2.final_params)


def test_vqe_error_vs_reference(tmp_path):
    from evoansatz import PauliHamiltonian

    h = PauliHamiltonian(
        1, [(-1.0, "X")], {"reference_ground_energy": -1.0, "name": "minus-X"}
    )
    genome = rotation_genome(("RY",), n_qubits=1)
    trace = run_vqe(genome, h, VQEConfig(max_iters=150, init_mode="zeros"))
    assert trace.error_vs_reference == pytest.approx(
        abs(trace.final_energy + 1.0), abs=1e-12
    )
