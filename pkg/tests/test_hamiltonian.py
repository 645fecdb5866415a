import json

import numpy as np
import pytest

from evoansatz import (
    ContractError,
    GATE_SETS,
    ParseError,
    PauliHamiltonian,
    PauliTerm,
    StructuralError,
    apply_hamiltonian,
    dense_matrix,
    expectation,
    expectation_batch,
    ground_energy,
    ground_energy_dense,
    load_hamiltonian,
    new_zero_state,
    random_genome,
    run_circuit_batch,
    save_hamiltonian,
    tfim,
)

PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1.0 + 0j, -1.0]),
}


def kron_matrix(h: PauliHamiltonian) -> np.ndarray:
    """Independent dense construction by explicit Kronecker products."""
    dim = 1 << h.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for term in h.terms:
        mat = np.eye(1)
        for op in term.ops:  # qubit 0 is the most significant factor
            mat = np.kron(mat, PAULI_MATS[op])
        out += term.coefficient * mat
    return out


def random_hamiltonian(n, n_terms, rng) -> PauliHamiltonian:
    terms = []
    for _ in range(n_terms):
        ops = "".join(rng.choice(list("IXYZ")) for _ in range(n))
        terms.append(PauliTerm(float(rng.uniform(-2, 2)), ops))
    return PauliHamiltonian(n, terms)


def test_term_merging_and_dropping():
    h = PauliHamiltonian(2, [(1.0, "XZ"), (0.5, "XZ"), (1e-13, "YY"), (2.0, "ZI")])
    strings = {t.ops: t.coefficient for t in h.terms}
    assert strings == {"XZ": pytest.approx(1.5), "ZI": pytest.approx(2.0)}


def test_term_validation():
    with pytest.raises(StructuralError):
        PauliTerm(np.nan, "XX")
    with pytest.raises(StructuralError):
        PauliTerm(1.0, "XQ")
    with pytest.raises(StructuralError):
        PauliHamiltonian(3, [(1.0, "XX")])  # wrong length


def test_tfim_structure():
    h = tfim(3)
    strings = {t.ops: t.coefficient for t in h.terms}
    assert strings == {
        "ZZI": pytest.approx(-1.0),
        "IZZ": pytest.approx(-1.0),
        "XII": pytest.approx(0.5),
        "IXI": pytest.approx(0.5),
        "IIX": pytest.approx(0.5),
    }
    with pytest.raises(ContractError):
        tfim(1)


def test_dense_matrix_matches_kron_oracle(rng):
    for n in (1, 2, 3, 4):
        h = random_hamiltonian(n, 6, rng)
        assert np.allclose(dense_matrix(h), kron_matrix(h), atol=1e-12)


def test_apply_and_expectation_match_dense(rng):
    for n in (2, 3, 4):
        h = random_hamiltonian(n, 8, rng)
        mat = kron_matrix(h)
        amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        amps /= np.linalg.norm(amps)
        state = type(new_zero_state(n))(n, amps)
        applied = apply_hamiltonian(h, state)
        assert np.allclose(applied.amplitudes, mat @ amps, atol=1e-12)
        assert expectation(state, h) == pytest.approx(
            float((amps.conj() @ mat @ amps).real)
        )


def test_expectation_batch_matches_scalar(rng):
    h = tfim(3)
    genome = random_genome(GATE_SETS["G"], 3, 4, rng)
    thetas = rng.uniform(0, 2 * np.pi, size=(6, max(genome.n_params, 1)))
    states = run_circuit_batch(genome, thetas[:, : genome.n_params])
    batch = expectation_batch(states, h)
    for i in range(6):
        s = type(new_zero_state(3))(3, states[i])
        assert batch[i] == pytest.approx(expectation(s, h))


def test_ground_energy_two_qubit_tfim_closed_form():
    # -ZZ + 0.5(XI + IX): the 4x4 diagonalizes by hand to a -sqrt(2) ground level
    assert ground_energy(tfim(2)) == pytest.approx(-np.sqrt(2.0), abs=1e-10)


def test_lanczos_matches_dense_random(rng):
    for n in (2, 3, 5, 6):
        h = random_hamiltonian(n, 10, rng)
        if not h.terms:
            continue
        assert ground_energy(h) == pytest.approx(ground_energy_dense(h), abs=1e-8)


def test_ground_energy_empty():
    h = PauliHamiltonian(2, [])
    assert ground_energy(h) == 0.0


def test_save_load_roundtrip(tmp_path, rng):
    h = random_hamiltonian(3, 5, rng)
    h.metadata.update({"name": "random-3", "reference_ground_energy": -1.25})
    path = tmp_path / "h.json"
    save_hamiltonian(h, path)
    h2 = load_hamiltonian(path)
    assert h2.n_qubits == 3
    assert {t.ops: t.coefficient for t in h2.terms} == {
        t.ops: pytest.approx(t.coefficient) for t in h.terms
    }
    assert h2.reference_ground_energy == pytest.approx(-1.25)


def test_load_rejects_malformed(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("not json")
    with pytest.raises(ParseError):
        load_hamiltonian(p)
    p.write_text(json.dumps({"terms": []}))
    with pytest.raises(ParseError):
        load_hamiltonian(p)
    p.write_text(json.dumps({"n_qubits": 2, "terms": [{"coeff": 1.0, "pauli": "XXX"}]}))
    with pytest.raises(ParseError):
        load_hamiltonian(p)
    p.write_text(json.dumps({"n_qubits": 2, "terms": [{"coeff": 1.0, "pauli": "XQ"}]}))
    with pytest.raises(ParseError):
        load_hamiltonian(p)
    with pytest.raises(ParseError):
        load_hamiltonian(tmp_path / "missing.json")
