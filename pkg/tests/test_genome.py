import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evoansatz import (
    CircuitGenome,
    ContractError,
    GATE_SETS,
    Gate,
    StructuralError,
    crossover,
    mutate,
    random_genome,
    validate_genome,
)


def test_gate_set_table():
    assert GATE_SETS["A"].single_qubit_gates == ("RX", "RY", "H")
    assert GATE_SETS["A"].cnot_adjacent_only
    assert not GATE_SETS["A"].initial_h_layer
    assert GATE_SETS["B"].single_qubit_gates == ("RX", "RY", "H", "I")
    assert not GATE_SETS["C"].cnot_adjacent_only
    assert GATE_SETS["E"].single_qubit_gates == ("RY", "RZ", "I")
    assert GATE_SETS["F"].initial_h_layer
    assert GATE_SETS["G"].single_qubit_gates == ("RX", "RY", "RZ", "H", "I")
    assert GATE_SETS["H"].initial_h_layer and GATE_SETS["H"].cnot_adjacent_only
    assert GATE_SETS["I"].single_qubit_gates == ("RX", "RY", "RZ", "I")
    assert len(GATE_SETS) == 9


def test_random_genome_is_valid(rng):
    for set_id in GATE_SETS:
        g = random_genome(GATE_SETS[set_id], 4, 6, rng)
        validate_genome(g)
        assert g.depth == 6
        assert len(g.params) == g.n_params


def test_random_genome_fills_every_qubit(rng):
    g = random_genome(GATE_SETS["A"], 5, 3, rng)
    for layer in g.layers:
        covered = sorted(q for gate in layer for q in gate.qubits)
        assert covered == list(range(5))


def test_validate_genome_catches_violations():
    gs = GATE_SETS["A"]
    # qubit used twice within a layer
    bad = CircuitGenome(
        2, gs, ((Gate("H", 0), Gate("H", 0)),), np.zeros(0)
    )
    with pytest.raises(StructuralError):
        validate_genome(bad)
    # non-adjacent CNOT under an adjacency-restricted set
    bad = CircuitGenome(
        3, gs, ((Gate("CNOT", target=2, control=0), Gate("H", 1)),), np.zeros(0)
    )
    with pytest.raises(StructuralError):
        validate_genome(bad)
    # gate kind outside the set (RZ not in A)
    bad = CircuitGenome(1, gs, ((Gate("RZ", 0, param_slot=0),),), np.zeros(1))
    with pytest.raises(StructuralError):
        validate_genome(bad)
    # slot numbering out of order
    bad = CircuitGenome(
        2,
        gs,
        ((Gate("RX", 0, param_slot=1), Gate("RY", 1, param_slot=0)),),
        np.zeros(2),
    )
    with pytest.raises(StructuralError):
        validate_genome(bad)
    # params length mismatch
    bad = CircuitGenome(1, gs, ((Gate("RX", 0, param_slot=0),),), np.zeros(2))
    with pytest.raises(StructuralError):
        validate_genome(bad)


def test_crossover_mixes_layers(rng):
    gs = GATE_SETS["B"]
    p1 = random_genome(gs, 3, 8, rng)
    p2 = random_genome(gs, 3, 8, rng)
    child = crossover(p1, p2, points=1, rng=rng)
    validate_genome(child)
    assert child.depth == 8
    # each child layer is structurally one of the parents' layers at that index
    for i, layer in enumerate(child.layers):
        stripped = tuple(
            (g.kind, g.target, g.control) for g in layer
        )
        candidates = [
            tuple((g.kind, g.target, g.control) for g in p.layers[i])
            for p in (p1, p2)
        ]
        assert stripped in candidates


def test_crossover_depth_one_copies_a_parent(rng):
    gs = GATE_SETS["B"]
    p1 = random_genome(gs, 3, 1, rng)
    p2 = random_genome(gs, 3, 1, rng)
    child = crossover(p1, p2, points=1, rng=rng)
    validate_genome(child)
    assert child.structurally_equal(p1) or child.structurally_equal(p2)


def test_crossover_rejects_mismatched_parents(rng):
    p1 = random_genome(GATE_SETS["A"], 3, 4, rng)
    p2 = random_genome(GATE_SETS["A"], 4, 4, rng)
    with pytest.raises(ContractError):
        crossover(p1, p2, 1, rng)
    p3 = random_genome(GATE_SETS["B"], 3, 4, rng)
    with pytest.raises(ContractError):
        crossover(p1, p3, 1, rng)


def test_mutate_zero_prob_is_identity(rng):
    g = random_genome(GATE_SETS["D"], 4, 5, rng)
    m = mutate(g, 0.0, rng)
    assert m.structurally_equal(g)
    assert np.array_equal(m.params, g.params)


def test_mutate_preserves_untouched_angles(rng):
    g = random_genome(GATE_SETS["I"], 3, 6, rng)
    m = mutate(g, 0.3, rng)
    validate_genome(m)
    # walk both genomes; where the gate is unchanged and parameterized,
    # the stored angle must carry over
    for la, lb in zip(g.layers, m.layers):
        for ga, gb in zip(la, lb):
            if ga.is_parameterized and gb.kind == ga.kind and gb.target == ga.target:
                assert g.params[ga.param_slot] == m.params[gb.param_slot]


def test_mutate_prob_one_swaps_every_cnot(rng):
    gs = GATE_SETS["A"]
    g = random_genome(gs, 4, 5, rng)
    m = mutate(g, 1.0, rng)
    validate_genome(m)
    for la, lb in zip(g.layers, m.layers):
        for ga, gb in zip(la, lb):
            if ga.kind == "CNOT":
                assert (gb.control, gb.target) == (ga.target, ga.control)
            else:
                assert gb.kind != ga.kind  # single-qubit gates must change


@settings(deadline=None, max_examples=50)
@given(
    seed=st.integers(0, 2**31 - 1),
    set_id=st.sampled_from(sorted(GATE_SETS)),
    depth=st.integers(1, 8),
    n_qubits=st.integers(2, 5),
)
def test_variation_closure_property(seed, set_id, depth, n_qubits):
    rng = np.random.default_rng(seed)
    gs = GATE_SETS[set_id]
    a = random_genome(gs, n_qubits, depth, rng)
    b = random_genome(gs, n_qubits, depth, rng)
    child = mutate(crossover(a, b, points=1, rng=rng), 0.1, rng)
    validate_genome(child)
