"""Dense statevector simulation of the RX/RY/RZ/H/I/CNOT gate alphabet.

Amplitude ordering: qubit 0 is the most significant bit of the basis index,
so ``|q0 q1 ... q_{n-1}>`` sits at index ``sum(q_k * 2**(n-1-k))``.  Rotation
convention is ``RX(t) = exp(-i t X / 2)`` (likewise RY, RZ).

All operations are pure: inputs are never mutated as observed by callers.
The batched entry points carry one statevector per row and one parameter
vector per row, which is what makes fidelity sampling and parameter-shift
gradients cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import CapacityError, StructuralError

MAX_QUBITS = 20

SINGLE_QUBIT_KINDS = ("RX", "RY", "RZ", "H", "I")
PARAMETERIZED_KINDS = ("RX", "RY", "RZ")
GATE_KINDS = SINGLE_QUBIT_KINDS + ("CNOT",)

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class Gate:
    """One placed gate: kind, acted qubits, and (for rotations) a parameter slot."""

    kind: str
    target: int
    control: Optional[int] = None
    param_slot: Optional[int] = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise StructuralError(f"unknown gate kind {self.kind!r}")
        if (self.control is not None) != (self.kind == "CNOT"):
            raise StructuralError("control must be present exactly for CNOT gates")
        if self.control is not None and self.control == self.target:
            raise StructuralError("CNOT control and target must differ")
        if (self.param_slot is not None) != (self.kind in PARAMETERIZED_KINDS):
            raise StructuralError("param_slot must be present exactly for RX/RY/RZ")

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)

    @property
    def is_parameterized(self) -> bool:
        return self.param_slot is not None


@dataclass
class StateVector:
    """2^n complex amplitudes with unit norm."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise StructuralError(
                f"expected {1 << self.n_qubits} amplitudes, got {self.amplitudes.shape}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def new_zero_state(n_qubits: int) -> StateVector:
    """All-zeros computational basis state |0...0>."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n_qubits, amps)


def _check_gate_indices(gate: Gate, n_qubits: int) -> None:
    for q in gate.qubits:
        if not 0 <= q < n_qubits:
            raise StructuralError(f"gate qubit {q} out of range for {n_qubits} qubits")


def _apply_gate_batch(
    amps: np.ndarray, n_qubits: int, gate: Gate, params: Optional[np.ndarray]
) -> np.ndarray:
    """Apply one gate to a (batch, 2^n) amplitude block; angles vary per row."""
    batch = amps.shape[0]
    if gate.kind == "I":
        return amps
    if gate.kind == "CNOT":
        cmask = 1 << (n_qubits - 1 - gate.control)
        tmask = 1 << (n_qubits - 1 - gate.target)
        idx = np.arange(amps.shape[1])
        perm = np.where(idx & cmask, idx ^ tmask, idx)
        return amps[:, perm]

    # Single-qubit gates: expose the target qubit as its own axis.
    q = gate.target
    shaped = amps.reshape(batch, 1 << q, 2, 1 << (n_qubits - 1 - q))
    a0 = shaped[:, :, 0, :]
    a1 = shaped[:, :, 1, :]
    out = np.empty_like(shaped)
    if gate.kind == "H":
        out[:, :, 0, :] = (a0 + a1) * _INV_SQRT2
        out[:, :, 1, :] = (a0 - a1) * _INV_SQRT2
    else:
        if params is None:
            raise StructuralError(f"gate {gate.kind} needs a parameter vector")
        if gate.param_slot >= params.shape[1]:
            raise StructuralError(
                f"param_slot {gate.param_slot} out of range for "
                f"{params.shape[1]} parameters"
            )
        half = 0.5 * params[:, gate.param_slot]
        c = np.cos(half)[:, None, None]
        s = np.sin(half)[:, None, None]
        if gate.kind == "RX":
            out[:, :, 0, :] = c * a0 - 1j * s * a1
            out[:, :, 1, :] = -1j * s * a0 + c * a1
        elif gate.kind == "RY":
            out[:, :, 0, :] = c * a0 - s * a1
            out[:, :, 1, :] = s * a0 + c * a1
        else:  # RZ
            phase = (c - 1j * s).astype(np.complex128)
            out[:, :, 0, :] = phase[:, :, :] * a0
            out[:, :, 1, :] = np.conj(phase)[:, :, :] * a1
    return out.reshape(batch, amps.shape[1])


def apply_gate(state: StateVector, gate: Gate, params: Sequence[float] = ()) -> StateVector:
    """Return the state transformed by one gate; the input is untouched."""
    _check_gate_indices(gate, state.n_qubits)
    p = np.asarray(params, dtype=float).reshape(1, -1)
    amps = _apply_gate_batch(state.amplitudes[None, :].copy(), state.n_qubits, gate, p)
    return StateVector(state.n_qubits, amps[0])


def run_circuit_batch(genome, params: np.ndarray) -> np.ndarray:
    """Run one genome over a (batch, n_params) matrix of angles.

    Returns a (batch, 2^n) array of final amplitudes.  Layers are applied in
    order; gates inside a layer act on disjoint qubits so their order is
    immaterial.  A full layer of Hadamards is prepended when the genome's gate
    set asks for one; it is not counted toward the configured depth.
    """
    params = np.atleast_2d(np.asarray(params, dtype=float))
    n = genome.n_qubits
    needed = genome.n_params
    if params.shape[1] < needed:
        raise StructuralError(
            f"genome uses {needed} parameters but only {params.shape[1]} supplied"
        )
    if not np.all(np.isfinite(params)):
        raise StructuralError("parameters must be finite")
    amps = np.zeros((params.shape[0], 1 << n), dtype=np.complex128)
    amps[:, 0] = 1.0
    if genome.gate_set.initial_h_layer:
        for q in range(n):
            amps = _apply_gate_batch(amps, n, Gate("H", q), None)
    for layer in genome.layers:
        for gate in layer:
            _check_gate_indices(gate, n)
            amps = _apply_gate_batch(amps, n, gate, params)
    return amps


def run_circuit(genome, params: Sequence[float]) -> StateVector:
    """Run a genome on |0...0> with one parameter vector."""
    amps = run_circuit_batch(genome, np.asarray(params, dtype=float).reshape(1, -1))
    return StateVector(genome.n_qubits, amps[0])


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, clamped to [0, 1] against rounding."""
    if a.n_qubits != b.n_qubits:
        raise StructuralError("fidelity needs states on the same qubit count")
    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return float(min(1.0, max(0.0, abs(overlap) ** 2)))


def fidelity_pairs(states_a: np.ndarray, states_b: np.ndarray) -> np.ndarray:
    """Row-wise |<a_i|b_i>|^2 for two (batch, 2^n) blocks."""
    if states_a.shape != states_b.shape:
        raise StructuralError("fidelity_pairs needs equal-shape batches")
    overlaps = np.einsum("ij,ij->i", np.conj(states_a), states_b)
    return np.clip(np.abs(overlaps) ** 2, 0.0, 1.0)
