import json

import numpy as np
import pytest

from evoansatz import (
    GATE_SETS,
    ParseError,
    dumps_circuit,
    load_circuit,
    random_genome,
    save_circuit,
)
from evoansatz.serialize import FORMAT_VERSION, load_circuit_provenance
from .conftest import bell_genome


def test_roundtrip_preserves_everything(tmp_path, rng):
    for set_id in ("A", "E", "F", "G"):
        genome = random_genome(GATE_SETS[set_id], 3, 5, rng)
        path = tmp_path / f"{set_id}.json"
        save_circuit(genome, path, provenance={"seed": 1})
        loaded = load_circuit(path)
        assert loaded.structurally_equal(genome)
        assert np.array_equal(loaded.params, genome.params)
        assert loaded.gate_set == genome.gate_set


def test_dumps_is_canonical(rng):
    genome = random_genome(GATE_SETS["B"], 2, 3, rng)
    assert dumps_circuit(genome) == dumps_circuit(genome)
    doc = json.loads(dumps_circuit(genome))
    assert doc["format_version"] == FORMAT_VERSION
    assert doc["n_qubits"] == 2
    assert doc["gate_set"]["id"] == "B"
    assert len(doc["layers"]) == 3


def test_provenance_roundtrip(tmp_path):
    path = tmp_path / "c.json"
    save_circuit(bell_genome(), path, provenance={"seed": 7, "jsd": 0.01})
    assert load_circuit_provenance(path) == {"seed": 7, "jsd": 0.01}


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(ParseError):
        load_circuit(path)

    good = json.loads(dumps_circuit(bell_genome()))

    bad = dict(good)
    del bad["layers"]
    path.write_text(json.dumps(bad))
    with pytest.raises(ParseError):
        load_circuit(path)

    bad = json.loads(dumps_circuit(bell_genome()))
    bad["format_version"] = 999
    path.write_text(json.dumps(bad))
    with pytest.raises(ParseError):
        load_circuit(path)

    # a structurally invalid circuit must not load
    bad = json.loads(dumps_circuit(bell_genome()))
    bad["layers"][0].append({"kind": "H", "target": 0})
    path.write_text(json.dumps(bad))
    with pytest.raises(ParseError):
        load_circuit(path)


def test_load_rejects_unknown_gate_kind(tmp_path):
    doc = json.loads(dumps_circuit(bell_genome()))
    doc["layers"][0][0]["kind"] = "TOFFOLI"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ParseError):
        load_circuit(path)
