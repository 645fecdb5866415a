"""End-to-end pipeline: geometry -> integrals -> RHF -> Jordan-Wigner ->
qubit-Hamiltonian JSON payload.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass

import numpy as np

from .basis import ANGSTROM_TO_BOHR
from .integrals import integrals
from .jordan_wigner import ground_energy, qubit_hamiltonian
from .scf import mo_integrals, rhf


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    atoms: tuple  # ((symbol, (x, y, z) in angstrom), ...)
    n_electrons: int


def _h2o_geometry(r_oh=0.9572, angle_deg=104.52):
    half = np.radians(angle_deg) / 2.0
    return (
        ("O", (0.0, 0.0, 0.0)),
        ("H", (r_oh * np.sin(half), 0.0, r_oh * np.cos(half))),
        ("H", (-r_oh * np.sin(half), 0.0, r_oh * np.cos(half))),
    )


MOLECULES = {
    "H2": MoleculeSpec("H2", (("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 0.7414))), 2),
    "LiH": MoleculeSpec("LiH", (("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 1.5949))), 4),
    "BeH2": MoleculeSpec(
        "BeH2",
        (("H", (0.0, 0.0, -1.3264)), ("Be", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, 1.3264))),
        6,
    ),
    "H2O": MoleculeSpec("H2O", _h2o_geometry(), 10),
}


def generate(name: str, with_reference: bool = True) -> dict:
    """Build the qubit-Hamiltonian payload for one benchmark molecule."""
    spec = MOLECULES[name]
    atoms = [
        (symbol, np.asarray(xyz, dtype=float) * ANGSTROM_TO_BOHR)
        for symbol, xyz in spec.atoms
    ]
    s_mat, t_mat, v_mat, eri, e_nuc = integrals(atoms)
    e_hf, c, h_core, eri = rhf(s_mat, t_mat, v_mat, eri, e_nuc, spec.n_electrons)
    h_mo, eri_mo = mo_integrals(c, h_core, eri)
    terms = qubit_hamiltonian(h_mo, eri_mo, e_nuc)
    n_qubits = 2 * h_mo.shape[0]
    reference = ground_energy(terms, n_qubits) if with_reference else None
    return {
        "n_qubits": n_qubits,
        "terms": [
            {"coeff": coeff, "pauli": pauli}
            for pauli, coeff in sorted(terms.items())
        ],
        "metadata": {
            "name": spec.name,
            "reference_ground_energy": reference,
            "source": (
                f"ham-gen: STO-3G / RHF (E_HF={e_hf:.8f} Ha) / Jordan-Wigner, "
                "interleaved spin orbitals"
            ),
        },
    }


def write_payload(payload: dict, path: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    os.replace(tmp, path)
