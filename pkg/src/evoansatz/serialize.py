"""Circuit file format (JSON) and canonical round-trip serialization.

The format is self-describing: it carries the gate-set flags, the layered
gate list, the stored parameters, and optional provenance (seed, generation,
score).  Canonical files produced by :func:`save_circuit` survive a
load/save round trip byte-identically.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ContractError, ParseError, StructuralError
from .genome import CircuitGenome, GateSet, validate_genome
from .sim import Gate

FORMAT_VERSION = 1


def _gate_to_dict(gate: Gate) -> dict:
    d = {"kind": gate.kind, "target": gate.target}
    if gate.control is not None:
        d["control"] = gate.control
    if gate.param_slot is not None:
        d["param_slot"] = gate.param_slot
    return d


def genome_to_dict(genome: CircuitGenome, provenance: Optional[dict] = None) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "n_qubits": genome.n_qubits,
        "gate_set": {
            "id": genome.gate_set.id,
            "single_qubit_gates": list(genome.gate_set.single_qubit_gates),
            "cnot_adjacent_only": genome.gate_set.cnot_adjacent_only,
            "initial_h_layer": genome.gate_set.initial_h_layer,
        },
        "layers": [[_gate_to_dict(g) for g in layer] for layer in genome.layers],
        "params": [float(v) for v in genome.params],
        "provenance": provenance or {},
    }


def genome_from_dict(doc: dict) -> CircuitGenome:
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported circuit format_version {version!r}")
    try:
        gs_doc = doc["gate_set"]
        gate_set = GateSet(
            id=str(gs_doc["id"]),
            single_qubit_gates=tuple(gs_doc["single_qubit_gates"]),
            cnot_adjacent_only=bool(gs_doc["cnot_adjacent_only"]),
            initial_h_layer=bool(gs_doc["initial_h_layer"]),
        )
        layers = tuple(
            tuple(
                Gate(
                    kind=str(g["kind"]),
                    target=int(g["target"]),
                    control=int(g["control"]) if "control" in g else None,
                    param_slot=int(g["param_slot"]) if "param_slot" in g else None,
                )
                for g in layer
            )
            for layer in doc["layers"]
        )
        genome = CircuitGenome(
            n_qubits=int(doc["n_qubits"]),
            gate_set=gate_set,
            layers=layers,
            params=np.asarray(doc["params"], dtype=float),
        )
        validate_genome(genome)
    except (KeyError, TypeError, ValueError, StructuralError, ContractError) as exc:
        raise ParseError(f"malformed circuit document: {exc}") from exc
    return genome


def dumps_circuit(genome: CircuitGenome, provenance: Optional[dict] = None) -> str:
    return json.dumps(genome_to_dict(genome, provenance), indent=2) + "\n"


def save_circuit(genome: CircuitGenome, path, provenance: Optional[dict] = None) -> None:
    Path(path).write_text(dumps_circuit(genome, provenance))


def load_circuit(path) -> CircuitGenome:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return genome_from_dict(doc)


def load_circuit_provenance(path) -> dict:
    try:
        return dict(json.loads(Path(path).read_text()).get("provenance", {}))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
