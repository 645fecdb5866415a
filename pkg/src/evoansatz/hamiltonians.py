"""Pauli-sum observables: TFIM construction, file loading, matrix-free
application, expectation values, and exact ground-state energies.

Pauli strings are written qubit-0-first (``ops[q]`` acts on qubit q).  The
matrix-free kernels never materialize a 2^n x 2^n matrix: a Pauli string is a
bit-flip permutation plus a diagonal sign pattern and a global i^(#Y) phase.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ContractError, ConvergenceError, ParseError, StructuralError
from .sim import StateVector

_PAULI_CHARS = frozenset("IXYZ")


@dataclass(frozen=True)
class PauliTerm:
    """One real-coefficient Pauli string, e.g. ``-1.0 * 'ZZI'``."""

    coefficient: float
    ops: str

    def __post_init__(self):
        if not np.isfinite(self.coefficient):
            raise StructuralError("Pauli coefficient must be finite")
        if not set(self.ops) <= _PAULI_CHARS:
            raise StructuralError(f"invalid Pauli string {self.ops!r}")


class PauliHamiltonian:
    """Sum of real-weighted Pauli strings on a fixed qubit count.

    Terms with identical strings are merged at construction, and terms whose
    merged coefficient is below 1e-12 are dropped.  Instances are immutable
    after construction and safe to share across threads.
    """

    def __init__(self, n_qubits: int, terms, metadata: Optional[dict] = None):
        merged: dict[str, float] = {}
        for t in terms:
            if not isinstance(t, PauliTerm):
                t = PauliTerm(float(t[0]), str(t[1]))
            if len(t.ops) != n_qubits:
                raise StructuralError(
                    f"Pauli string {t.ops!r} does not match {n_qubits} qubits"
                )
            merged[t.ops] = merged.get(t.ops, 0.0) + t.coefficient
        self.n_qubits = int(n_qubits)
        self.terms = tuple(
            PauliTerm(c, ops) for ops, c in merged.items() if abs(c) >= 1e-12
        )
        self.metadata = dict(metadata or {})
        self._masks = None  # lazy (coeff * i^nY, flip_mask, sign_mask) per term

    @property
    def reference_ground_energy(self) -> Optional[float]:
        val = self.metadata.get("reference_ground_energy")
        return None if val is None else float(val)

    def _term_masks(self):
        if self._masks is None:
            masks = []
            n = self.n_qubits
            for t in self.terms:
                flip = 0
                sign = 0
                n_y = 0
                for q, op in enumerate(t.ops):
                    bit = 1 << (n - 1 - q)
                    if op in "XY":
                        flip |= bit
                    if op in "ZY":
                        sign |= bit
                    if op == "Y":
                        n_y += 1
                masks.append((t.coefficient * (1j**n_y), flip, sign))
            self._masks = tuple(masks)
        return self._masks


def _parity(values: np.ndarray) -> np.ndarray:
    """Parity of the popcount of each entry (0 or 1)."""
    out = values.copy()
    shift = 1
    while shift < 32:
        out ^= out >> shift
        shift <<= 1
    return out & 1


def tfim(n_qubits: int, coupling: float = 1.0, field_strength: float = -0.5) -> PauliHamiltonian:
    """Open-boundary transverse-field Ising chain -J sum ZZ - h sum X."""
    if n_qubits < 2:
        raise ContractError("TFIM needs at least 2 qubits")
    terms = []
    for i in range(n_qubits - 1):
        ops = ["I"] * n_qubits
        ops[i] = ops[i + 1] = "Z"
        terms.append(PauliTerm(-coupling, "".join(ops)))
    for i in range(n_qubits):
        ops = ["I"] * n_qubits
        ops[i] = "X"
        terms.append(PauliTerm(-field_strength, "".join(ops)))
    meta = {"name": f"TFIM-{n_qubits}", "source": f"tfim(J={coupling}, h={field_strength})"}
    return PauliHamiltonian(n_qubits, terms, meta)


def load_hamiltonian(path) -> PauliHamiltonian:
    """Read the Hamiltonian JSON format; duplicates merge, zeros drop."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        n = int(raw["n_qubits"])
        entries = raw["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: missing or malformed n_qubits/terms") from exc
    terms = []
    for i, entry in enumerate(entries):
        try:
            coeff = float(entry["coeff"])
            pauli = str(entry["pauli"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: bad term at index {i}: {entry!r}") from exc
        if len(pauli) != n:
            raise ParseError(
                f"{path}: term {i} string {pauli!r} has length {len(pauli)}, expected {n}"
            )
        if not set(pauli) <= _PAULI_CHARS:
            raise ParseError(f"{path}: term {i} has non-Pauli characters: {pauli!r}")
        terms.append(PauliTerm(coeff, pauli))
    return PauliHamiltonian(n, terms, raw.get("metadata"))


def save_hamiltonian(h: PauliHamiltonian, path) -> None:
    """Write the JSON format read by :func:`load_hamiltonian`."""
    doc = {
        "n_qubits": h.n_qubits,
        "terms": [{"coeff": t.coefficient, "pauli": t.ops} for t in h.terms],
        "metadata": h.metadata,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def _apply_terms(h: PauliHamiltonian, amps: np.ndarray) -> np.ndarray:
    """H @ amps for a flat 2^n amplitude array."""
    dim = amps.shape[-1]
    idx = np.arange(dim, dtype=np.int64)
    out = np.zeros_like(amps)
    for pref, flip, sign in h._term_masks():
        signs = 1.0 - 2.0 * _parity(idx & sign)
        contrib = (pref * signs) * amps
        if flip:
            out[idx ^ flip] += contrib
        else:
            out += contrib
    return out


def apply_hamiltonian(h: PauliHamiltonian, state: StateVector) -> StateVector:
    """Matrix-free H|state>; result is generally unnormalized."""
    if state.n_qubits != h.n_qubits:
        raise StructuralError("state and Hamiltonian qubit counts differ")
    out = StateVector.__new__(StateVector)
    out.n_qubits = h.n_qubits
    out.amplitudes = _apply_terms(h, state.amplitudes)
    return out


def expectation(state: StateVector, h: PauliHamiltonian) -> float:
    """<state| H |state>; the (tiny) imaginary residue is discarded."""
    if state.n_qubits != h.n_qubits:
        raise StructuralError("state and Hamiltonian qubit counts differ")
    val = np.vdot(state.amplitudes, _apply_terms(h, state.amplitudes))
    return float(val.real)


def expectation_batch(states: np.ndarray, h: PauliHamiltonian) -> np.ndarray:
    """Row-wise <psi|H|psi> for a (batch, 2^n) amplitude block."""
    if states.shape[1] != 1 << h.n_qubits:
        raise StructuralError("batch dimension does not match Hamiltonian")
    idx = np.arange(states.shape[1], dtype=np.int64)
    total = np.zeros(states.shape[0], dtype=np.complex128)
    for pref, flip, sign in h._term_masks():
        signs = 1.0 - 2.0 * _parity(idx & sign)
        permuted = states[:, idx ^ flip] if flip else states
        total += pref * np.einsum("bi,i,bi->b", np.conj(permuted), signs, states)
    return total.real


def dense_matrix(h: PauliHamiltonian) -> np.ndarray:
    """Explicit 2^n x 2^n matrix; oracle/cross-check path, n <= 12 or so."""
    dim = 1 << h.n_qubits
    idx = np.arange(dim, dtype=np.int64)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for pref, flip, sign in h._term_masks():
        signs = 1.0 - 2.0 * _parity(idx & sign)
        mat[idx ^ flip, idx] += pref * signs
    return mat


def ground_energy_dense(h: PauliHamiltonian) -> float:
    """Lowest eigenvalue by full dense diagonalization."""
    return float(np.linalg.eigvalsh(dense_matrix(h)).min())


def ground_energy(h: PauliHamiltonian, tol: float = 1e-8, max_iter: int = 400) -> float:
    """Lowest eigenvalue via matrix-free Lanczos with full reorthogonalization.

    Deterministic: the start vector comes from a fixed-seed RNG.  Raises
    :class:`ConvergenceError` (carrying the best estimate) if the residual
    never drops below ``tol``.
    """
    if h.n_qubits > 16:
        raise ContractError("ground_energy supports up to 16 qubits")
    if not h.terms:
        return 0.0
    dim = 1 << h.n_qubits
    rng = np.random.default_rng(0x5EED)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    basis = [v]
    alphas: list[float] = []
    betas: list[float] = []
    best = None
    m_cap = min(max_iter, dim)
    for _ in range(m_cap):
        w = _apply_terms(h, basis[-1])
        alpha = float(np.vdot(basis[-1], w).real)
        alphas.append(alpha)
        w -= alpha * basis[-1]
        if len(basis) > 1:
            w -= betas[-1] * basis[-2]
        for b in basis:  # full reorthogonalization
            w -= np.vdot(b, w) * b
        beta = float(np.linalg.norm(w))
        tri_vals, tri_vecs = np.linalg.eigh(_tridiag(alphas, betas))
        best = float(tri_vals[0])
        residual = beta * abs(tri_vecs[-1, 0])
        if residual < tol or beta < 1e-14:
            return best
        betas.append(beta)
        basis.append(w / beta)
    raise ConvergenceError(
        f"Lanczos did not converge within {m_cap} iterations", best_estimate=best
    )


def _tridiag(alphas, betas) -> np.ndarray:
    m = len(alphas)
    t = np.diag(np.asarray(alphas, dtype=float))
    if m > 1:
        off = np.asarray(betas[: m - 1], dtype=float)
        t += np.diag(off, 1) + np.diag(off, -1)
    return t
