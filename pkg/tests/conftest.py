import numpy as np
import pytest

from evoansatz import GATE_SETS, CircuitGenome, Gate

DATA_DIR = "data/hamiltonians"


def bell_genome():
    """H on qubit 0 then CNOT 0->1: a fixed, parameter-free 2-qubit circuit."""
    layers = (
        (Gate("H", target=0), Gate("I", target=1)),
        (Gate("CNOT", target=1, control=0),),
    )
    return CircuitGenome(2, GATE_SETS["C"], layers, np.zeros(0))


def rotation_genome(kinds=("RX", "RY"), n_qubits=2):
    """One layer of rotations, slot per qubit, stored angles zero."""
    layer = tuple(
        Gate(kinds[q % len(kinds)], target=q, param_slot=q) for q in range(n_qubits)
    )
    return CircuitGenome(
        n_qubits, GATE_SETS["G"], (layer,), np.zeros(n_qubits)
    )


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
