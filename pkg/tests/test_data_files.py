"""Checks over the committed molecular Hamiltonian data files.

These run purely against the JSON files in data/hamiltonians; nothing here
invokes the generator that produced them.
"""
from pathlib import Path

import pytest

from evoansatz import ground_energy, load_hamiltonian

DATA = Path(__file__).resolve().parent.parent / "data" / "hamiltonians"

EXPECTED = {
    "h2.json": (4, -1.1372, 1e-3),
    "lih.json": (12, -7.8824, 1e-3),
    "beh2.json": (14, -15.5952, 1e-3),
    "h2o.json": (14, -75.0124, 1e-3),
}


@pytest.mark.parametrize("filename", sorted(EXPECTED))
def test_files_load_and_describe_themselves(filename):
    n_qubits, e_ref, tol = EXPECTED[filename]
    h = load_hamiltonian(DATA / filename)
    assert h.n_qubits == n_qubits
    assert len(h.terms) > 0
    assert h.metadata["name"]
    assert h.reference_ground_energy == pytest.approx(e_ref, abs=tol)
    # every string is Hermitian-real by construction; spot-check the identity
    # offset exists (nuclear repulsion + core terms)
    assert any(t.ops == "I" * n_qubits for t in h.terms)


def test_h2_reference_matches_exact_diagonalization():
    h = load_hamiltonian(DATA / "h2.json")
    assert ground_energy(h) == pytest.approx(
        h.reference_ground_energy, abs=1e-6
    )
