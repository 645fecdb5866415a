"""Benchmark molecular qubit-Hamiltonian generator (STO-3G / RHF / Jordan-Wigner)."""

from .generate import MOLECULES, MoleculeSpec, generate, write_payload
from .jordan_wigner import ground_energy, qubit_hamiltonian
from .scf import SCFError, mo_integrals, rhf

__version__ = "0.1.0"

__all__ = [
    "MOLECULES",
    "MoleculeSpec",
    "SCFError",
    "generate",
    "ground_energy",
    "mo_integrals",
    "qubit_hamiltonian",
    "rhf",
    "write_payload",
    "__version__",
]
