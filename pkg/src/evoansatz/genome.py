"""Circuit genomes and the variation operators that evolve them.

A genome is a fixed number of layers; each layer assigns disjoint qubits to
gates (a CNOT occupies both of its qubits).  Parameter slots are numbered
0..P-1 in first-appearance order, scanning layers front to back.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import ContractError, StructuralError
from .sim import Gate, PARAMETERIZED_KINDS, SINGLE_QUBIT_KINDS

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class GateSet:
    """Allowed gate alphabet plus structural flags.

    CNOT is always available; ``cnot_adjacent_only`` restricts it to
    nearest-neighbor pairs, and ``initial_h_layer`` prepends a full layer of
    Hadamards at execution time (not counted toward the depth budget).
    """

    id: str
    single_qubit_gates: tuple[str, ...]
    cnot_adjacent_only: bool = False
    initial_h_layer: bool = False

    def __post_init__(self):
        for g in self.single_qubit_gates:
            if g not in SINGLE_QUBIT_KINDS:
                raise ContractError(f"unknown single-qubit gate {g!r}")
        if not self.single_qubit_gates:
            raise ContractError("gate set needs at least one single-qubit gate")


GATE_SETS: dict[str, GateSet] = {
    "A": GateSet("A", ("RX", "RY", "H"), cnot_adjacent_only=True),
    "B": GateSet("B", ("RX", "RY", "H", "I"), cnot_adjacent_only=True),
    "C": GateSet("C", ("RX", "RY", "H", "I")),
    "D": GateSet("D", ("RY", "RZ", "H", "I")),
    "E": GateSet("E", ("RY", "RZ", "I")),
    "F": GateSet("F", ("RX", "RY", "RZ", "I"), initial_h_layer=True),
    "G": GateSet("G", ("RX", "RY", "RZ", "H", "I")),
    "H": GateSet("H", ("RX", "RY", "H"), cnot_adjacent_only=True, initial_h_layer=True),
    "I": GateSet("I", ("RX", "RY", "RZ", "I")),
}


@dataclass(frozen=True)
class CircuitGenome:
    """A layered gate sequence plus stored parameter values (the GA individual)."""

    n_qubits: int
    gate_set: GateSet
    layers: tuple[tuple[Gate, ...], ...]
    params: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "params", np.asarray(self.params, dtype=float).reshape(-1)
        )

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def n_params(self) -> int:
        return len(self.params)

    @property
    def gates(self) -> tuple[Gate, ...]:
        return tuple(g for layer in self.layers for g in layer)

    def structurally_equal(self, other: "CircuitGenome") -> bool:
        return (
            self.n_qubits == other.n_qubits
            and self.gate_set == other.gate_set
            and self.layers == other.layers
        )


def validate_genome(genome: CircuitGenome) -> None:
    """Raise StructuralError on any genome invariant violation."""
    n = genome.n_qubits
    next_slot = 0
    for li, layer in enumerate(genome.layers):
        used: set[int] = set()
        for gate in layer:
            for q in gate.qubits:
                if not 0 <= q < n:
                    raise StructuralError(f"layer {li}: qubit {q} out of range")
                if q in used:
                    raise StructuralError(f"layer {li}: qubit {q} used twice")
                used.add(q)
            if gate.kind == "CNOT":
                if genome.gate_set.cnot_adjacent_only and abs(gate.control - gate.target) != 1:
                    raise StructuralError(
                        f"layer {li}: non-adjacent CNOT {gate.control}->{gate.target}"
                    )
            elif gate.kind not in genome.gate_set.single_qubit_gates:
                raise StructuralError(f"layer {li}: gate {gate.kind} not in set {genome.gate_set.id}")
            if gate.is_parameterized:
                if gate.param_slot != next_slot:
                    raise StructuralError(
                        f"layer {li}: param_slot {gate.param_slot}, expected {next_slot}"
                    )
                next_slot += 1
    if genome.n_params != next_slot:
        raise StructuralError(
            f"stored params length {genome.n_params} != {next_slot} slots"
        )
    if not np.all(np.isfinite(genome.params)):
        raise StructuralError("stored params must be finite")


def _cnot_partners(q: int, free: set[int], n: int, adjacent_only: bool) -> list[int]:
    if adjacent_only:
        return [p for p in (q - 1, q + 1) if 0 <= p < n and p in free]
    return sorted(p for p in free if p != q)


def random_genome(
    gate_set: GateSet, n_qubits: int, depth: int, rng: np.random.Generator
) -> CircuitGenome:
    """Build a random genome: per layer, scan free qubits in ascending order
    and draw uniformly from the gates eligible at that qubit."""
    if depth < 1:
        raise ContractError("depth must be >= 1")
    layers = []
    values: list[float] = []
    slot = 0
    for _ in range(depth):
        free = set(range(n_qubits))
        layer: list[Gate] = []
        for q in range(n_qubits):
            if q not in free:
                continue
            partners = _cnot_partners(q, free - {q}, n_qubits, gate_set.cnot_adjacent_only)
            options = list(gate_set.single_qubit_gates) + (["CNOT"] if partners else [])
            kind = options[rng.integers(len(options))]
            free.discard(q)
            if kind == "CNOT":
                partner = partners[rng.integers(len(partners))]
                free.discard(partner)
                control, target = (q, partner) if rng.random() < 0.5 else (partner, q)
                layer.append(Gate("CNOT", target=target, control=control))
            elif kind in PARAMETERIZED_KINDS:
                layer.append(Gate(kind, target=q, param_slot=slot))
                values.append(rng.uniform(0.0, TWO_PI))
                slot += 1
            else:
                layer.append(Gate(kind, target=q))
        layers.append(tuple(layer))
    return CircuitGenome(n_qubits, gate_set, tuple(layers), np.array(values))


def renumber_slots(
    layers: tuple[tuple[Gate, ...], ...]
) -> tuple[tuple[tuple[Gate, ...], ...], int]:
    """Rewrite param slots to 0..P-1 in first-appearance order."""
    slot = 0
    out = []
    for layer in layers:
        new_layer = []
        for gate in layer:
            if gate.is_parameterized:
                new_layer.append(replace(gate, param_slot=slot))
                slot += 1
            else:
                new_layer.append(gate)
        out.append(tuple(new_layer))
    return tuple(out), slot


def crossover(
    p1: CircuitGenome,
    p2: CircuitGenome,
    points: int,
    rng: np.random.Generator,
) -> CircuitGenome:
    """N-point layer crossover: alternate parent segments at random cut layers.

    Child parameter slots are renumbered and its stored parameters are
    resampled uniformly.  At depth 1 there is no legal cut, so the child
    copies one parent's layer (still with fresh parameters).
    """
    if (
        p1.n_qubits != p2.n_qubits
        or p1.gate_set != p2.gate_set
        or p1.depth != p2.depth
    ):
        raise ContractError("crossover parents must share qubits, depth, and gate set")
    if points < 1:
        raise ContractError("crossover needs at least one point")
    depth = p1.depth
    n_cuts = min(points, depth - 1)
    if n_cuts == 0:
        source = p1 if rng.random() < 0.5 else p2
        layers = source.layers
    else:
        cuts = np.sort(rng.choice(np.arange(1, depth), size=n_cuts, replace=False))
        bounds = [0, *cuts.tolist(), depth]
        layers_list: list[tuple[Gate, ...]] = []
        for seg, (lo, hi) in enumerate(zip(bounds[:-1], bounds[1:])):
            parent = p1 if seg % 2 == 0 else p2
            layers_list.extend(parent.layers[lo:hi])
        layers = tuple(layers_list)
    layers, n_slots = renumber_slots(layers)
    params = rng.uniform(0.0, TWO_PI, size=n_slots)
    return CircuitGenome(p1.n_qubits, p1.gate_set, layers, params)


def mutate(genome: CircuitGenome, prob: float, rng: np.random.Generator) -> CircuitGenome:
    """Mutate each gate independently with probability ``prob``.

    Single-qubit gates are replaced by a different member of the gate set
    (fresh angle when the replacement is parameterized); a mutated CNOT has
    its control and target swapped.  Untouched rotation gates keep their
    stored angles.
    """
    if not 0.0 <= prob <= 1.0:
        raise ContractError("mutation probability must be in [0, 1]")
    single = genome.gate_set.single_qubit_gates
    new_layers = []
    values: list[float] = []
    for layer in genome.layers:
        new_layer = []
        for gate in layer:
            mutated = rng.random() < prob
            if not mutated:
                if gate.is_parameterized:
                    values.append(float(genome.params[gate.param_slot]))
                new_layer.append(gate)
                continue
            if gate.kind == "CNOT":
                new_layer.append(
                    Gate("CNOT", target=gate.control, control=gate.target)
                )
                continue
            alternatives = [k for k in single if k != gate.kind]
            if not alternatives:
                if gate.is_parameterized:
                    values.append(float(genome.params[gate.param_slot]))
                new_layer.append(gate)
                continue
            kind = alternatives[rng.integers(len(alternatives))]
            if kind in PARAMETERIZED_KINDS:
                new_layer.append(Gate(kind, target=gate.target, param_slot=0))
                values.append(rng.uniform(0.0, TWO_PI))
            else:
                new_layer.append(Gate(kind, target=gate.target))
        new_layers.append(tuple(new_layer))
    layers, n_slots = renumber_slots(tuple(new_layers))
    assert n_slots == len(values)
    return CircuitGenome(genome.n_qubits, genome.gate_set, layers, np.array(values))
