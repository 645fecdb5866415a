"""Command-line surface: evolve, express, vqe, landscape, gradvar, ground, counts.

Every command writes its artifacts atomically (temp file + rename) into
--out-dir and finishes with a manifest.json listing them; the manifest is the
commit marker.  Exit codes: 0 success, 1 runtime failure, 2 usage/config
error.  Numeric CSV cells carry 17 significant digits.
"""
from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import gate_counts, gradient_variance, landscape_scan
from .errors import ContractError, EvoansatzError, ParseError
from .express import expressibility
from .ga import GAConfig, evolve
from .genome import GATE_SETS
from .hamiltonians import ground_energy, load_hamiltonian, tfim
from .serialize import dumps_circuit, load_circuit, load_circuit_provenance
from .vqe import VQEConfig, run_vqe


class UsageError(Exception):
    """Bad flags or config; maps to exit code 2."""


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


class _Run:
    """Collects artifacts for one command and writes the manifest last."""

    def __init__(self, command: str, out_dir: Path, seed: int, config: dict):
        self.command = command
        self.out_dir = out_dir
        self.seed = seed
        self.config = config
        self.artifacts: list[str] = []
        self.t0 = time.perf_counter()
        out_dir.mkdir(parents=True, exist_ok=True)

    def write(self, name: str, text: str) -> Path:
        path = self.out_dir / name
        _atomic_write(path, text)
        self.artifacts.append(name)
        return path

    def write_json(self, name: str, obj) -> Path:
        return self.write(name, json.dumps(obj, indent=2) + "\n")

    def write_csv(self, name: str, header: list[str], rows) -> Path:
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(c if isinstance(c, str) else _fmt(c) for c in row))
        return self.write(name, "\n".join(lines) + "\n")

    def finish(self) -> None:
        manifest = {
            "command": self.command,
            "config": self.config,
            "master_seed": self.seed,
            "artifacts": self.artifacts,
            "tool_version": __version__,
            "wall_time_s": time.perf_counter() - self.t0,
        }
        _atomic_write(self.out_dir / "manifest.json", json.dumps(manifest, indent=2) + "\n")


def _resolve_seed(args) -> int:
    return secrets.randbits(32) if args.seed is None else args.seed


def _resolve_gate_set(name: str):
    if name.upper() in GATE_SETS:
        return GATE_SETS[name.upper()]
    raise UsageError(f"unknown gate set {name!r}; choose one of {sorted(GATE_SETS)}")


def _resolve_hamiltonian(args):
    if getattr(args, "hamiltonian", None):
        path = Path(args.hamiltonian)
        if not path.exists():
            raise UsageError(f"Hamiltonian file not found: {path}")
        return load_hamiltonian(path)
    if getattr(args, "tfim", False):
        if args.qubits is None:
            raise UsageError("--tfim requires --qubits")
        return tfim(args.qubits, coupling=args.coupling, field_strength=args.field)
    raise UsageError("specify --hamiltonian FILE or --tfim")


def _add_hamiltonian_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hamiltonian", help="Hamiltonian JSON file")
    p.add_argument("--tfim", action="store_true", help="use a transverse-field Ising chain")
    p.add_argument("--qubits", type=int, help="qubit count for --tfim")
    p.add_argument("--J", dest="coupling", type=float, default=1.0, help="TFIM coupling")
    p.add_argument("--h", dest="field", type=float, default=-0.5, help="TFIM field")


def _parse_depths(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        depths = list(range(int(lo), int(hi) + 1))
    else:
        depths = [int(spec)]
    if not depths or min(depths) < 1:
        raise UsageError("depth must be >= 1")
    return depths


def cmd_evolve(args) -> None:
    gate_set = _resolve_gate_set(args.gate_set)
    depths = _parse_depths(args.depth)
    seed = _resolve_seed(args)
    base_cfg = dict(
        n_qubits=args.qubits,
        population=args.population,
        generations=args.generations,
        parent_count=args.parents,
        mutation_prob=args.mutation_prob,
        samples=args.samples,
        bins=args.bins,
        crossover_points=args.crossover_points,
        master_seed=seed,
        threads=args.threads,
    )
    run = _Run("evolve", Path(args.out_dir), seed,
               {**base_cfg, "gate_set": gate_set.id, "depth": args.depth})
    sweep_rows = []
    for depth in depths:
        cfg = GAConfig(depth=depth, **base_cfg)
        try:
            cfg.validate()
        except ContractError as exc:
            raise UsageError(str(exc)) from exc
        report = evolve(cfg, gate_set)
        provenance = {
            "seed": seed,
            "generation": report.best_generation,
            "jsd": report.best_overall_score,
            "evaluation_seed": report.best_seed,
        }
        circuit_name = "circuit.json" if len(depths) == 1 else f"circuit_depth_{depth}.json"
        run.write(circuit_name, dumps_circuit(report.best_genome, provenance))
        trace_name = "trace.csv" if len(depths) == 1 else f"trace_depth_{depth}.csv"
        run.write_csv(
            trace_name,
            ["generation", "best_jsd", "mean_jsd", "wall_ms"],
            [
                (str(g + 1), b, m, w * 1000.0)
                for g, (b, m, w) in enumerate(
                    zip(
                        report.best_score_per_generation,
                        report.mean_score_per_generation,
                        report.wall_time_per_generation,
                    )
                )
            ],
        )
        sweep_rows.append((str(depth), report.best_overall_score))
        print(f"depth {depth}: best jsd {report.best_overall_score:.5f}")
    if len(depths) > 1:
        run.write_csv("sweep.csv", ["depth", "best_jsd"], sweep_rows)
    run.finish()


def cmd_express(args) -> None:
    genome = load_circuit(args.circuit)
    seed = _resolve_seed(args)
    run = _Run("express", Path(args.out_dir), seed,
               {"circuit": str(args.circuit), "samples": args.samples, "bins": args.bins})
    score = expressibility(genome, args.samples, args.bins, seed)
    run.write_json(
        "express.json",
        {
            "circuit": str(args.circuit),
            "jsd": score.jsd,
            "sample_count": score.sample_count,
            "bin_count": score.bin_count,
            "seed": score.seed,
        },
    )
    run.finish()
    print(f"jsd {score.jsd:.6f} (S={score.sample_count}, B={score.bin_count})")


def cmd_vqe(args) -> None:
    genome = load_circuit(args.circuit)
    h = _resolve_hamiltonian(args)
    if genome.n_qubits != h.n_qubits:
        raise UsageError(
            f"circuit has {genome.n_qubits} qubits but Hamiltonian has {h.n_qubits}"
        )
    seed = _resolve_seed(args)
    cfg = VQEConfig(
        max_iters=args.iters,
        learning_rate=args.learning_rate,
        init_mode=args.init,
        seed=seed,
        convergence_tol=args.tol,
    )
    try:
        cfg.validate()
    except ContractError as exc:
        raise UsageError(str(exc)) from exc
    run = _Run("vqe", Path(args.out_dir), seed, {
        "circuit": str(args.circuit),
        "iters": args.iters,
        "learning_rate": args.learning_rate,
        "init": args.init,
        "tol": args.tol,
        "hamiltonian": h.metadata.get("name", "file"),
    })
    trace = run_vqe(genome, h, cfg)
    rows = []
    for i, e in enumerate(trace.energies):
        g = _fmt(trace.grad_norms[i - 1]) if 1 <= i <= len(trace.grad_norms) else ""
        rows.append((str(i), _fmt(e), g))
    run.write_csv("vqe_trace.csv", ["iteration", "energy", "grad_norm"], rows)
    run.write_json(
        "vqe_summary.json",
        {
            "final_energy": trace.final_energy,
            "error_vs_reference": trace.error_vs_reference,
            "reference_ground_energy": h.reference_ground_energy,
            "iterations_used": trace.iterations_used,
        },
    )
    run.finish()
    msg = f"final energy {trace.final_energy:.6f}"
    if trace.error_vs_reference is not None:
        msg += f" (error vs reference {trace.error_vs_reference:.2e})"
    print(msg)


def cmd_landscape(args) -> None:
    genome = load_circuit(args.circuit)
    h = _resolve_hamiltonian(args)
    try:
        i_str, j_str = args.pair.split(",")
        pair = (int(i_str), int(j_str))
    except ValueError as exc:
        raise UsageError("--pair expects i,j") from exc
    seed = _resolve_seed(args)
    run = _Run("landscape", Path(args.out_dir), seed, {
        "circuit": str(args.circuit),
        "pair": list(pair),
        "resolution": args.resolution,
    })
    try:
        grid = landscape_scan(genome, h, pair[0], pair[1], args.resolution)
    except ContractError as exc:
        raise UsageError(str(exc)) from exc
    run.write_csv(
        f"landscape_{pair[0]}_{pair[1]}.csv",
        [_fmt(v) for v in grid.axis],
        grid.energies,
    )
    run.write_json(
        "landscape_manifest.json",
        {
            "pair": list(pair),
            "resolution": args.resolution,
            "base_params": [float(v) for v in grid.base_params],
        },
    )
    run.finish()


def cmd_gradvar(args) -> None:
    genome = load_circuit(args.circuit)
    h = _resolve_hamiltonian(args)
    seed = _resolve_seed(args)
    run = _Run("gradvar", Path(args.out_dir), seed, {
        "circuit": str(args.circuit),
        "samples": args.samples,
    })
    stats = gradient_variance(genome, h, args.samples, np.random.default_rng(seed))
    run.write_json(
        "gradvar.json",
        {
            "per_param_variance": [float(v) for v in stats.per_param_variance],
            "sample_count": stats.sample_count,
            "flat_slots": list(stats.flat_slots),
        },
    )
    run.finish()
    print(f"{len(stats.flat_slots)} of {genome.n_params} slots flat")


def cmd_ground(args) -> None:
    h = _resolve_hamiltonian(args)
    seed = _resolve_seed(args)
    run = _Run("ground", Path(args.out_dir), seed, {
        "hamiltonian": h.metadata.get("name", "file"),
        "tol": args.tol,
    })
    value = ground_energy(h, tol=args.tol)
    run.write_json(
        "ground.json",
        {"ground_energy": value, "n_qubits": h.n_qubits, "n_terms": len(h.terms)},
    )
    run.finish()
    print(f"ground energy {value:.8f}")


def cmd_counts(args) -> None:
    genome = load_circuit(args.circuit)
    seed = _resolve_seed(args)
    run = _Run("counts", Path(args.out_dir), seed, {"circuit": str(args.circuit)})
    counts = gate_counts(genome)
    run.write_json(
        "counts.json",
        {
            "parameterized": counts.parameterized,
            "non_parameterized": counts.non_parameterized,
            "total": counts.total,
            "provenance": load_circuit_provenance(args.circuit),
        },
    )
    run.finish()
    print(f"P={counts.parameterized} NP={counts.non_parameterized} T={counts.total}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoansatz",
        description="Evolve expressible quantum circuits and benchmark them as VQE ansatze.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help="master RNG seed")
        p.add_argument("--threads", type=int, default=1, help="worker cap")
        p.add_argument("--out-dir", default=".", help="artifact directory")

    p = sub.add_parser("evolve", help="run the genetic search")
    common(p)
    p.add_argument("--gate-set", required=True, help="gate set id A-I")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--depth", required=True, help="layer count, or a..b for a sweep")
    p.add_argument("--generations", type=int, default=10)
    p.add_argument("--population", type=int, default=30)
    p.add_argument("--parents", type=int, default=5)
    p.add_argument("--mutation-prob", type=float, default=0.1)
    p.add_argument("--samples", type=int, default=5000)
    p.add_argument("--bins", type=int, default=75)
    p.add_argument("--crossover-points", type=int, default=1)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("express", help="score a circuit file")
    common(p)
    p.add_argument("circuit")
    p.add_argument("--samples", type=int, default=5000)
    p.add_argument("--bins", type=int, default=75)
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("vqe", help="optimize a circuit's parameters for a Hamiltonian")
    common(p)
    p.add_argument("circuit")
    _add_hamiltonian_args(p)
    p.add_argument("--iters", type=int, default=300)
    p.add_argument("--learning-rate", type=float, default=0.05)
    p.add_argument("--init", choices=("stored", "random", "zeros"), default="stored")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_vqe)

    p = sub.add_parser("landscape", help="2-parameter energy landscape scan")
    common(p)
    p.add_argument("circuit")
    _add_hamiltonian_args(p)
    p.add_argument("--pair", required=True, help="slot indices i,j")
    p.add_argument("--resolution", type=int, default=50)
    p.set_defaults(func=cmd_landscape)

    p = sub.add_parser("gradvar", help="gradient-variance barren-plateau probe")
    common(p)
    p.add_argument("circuit")
    _add_hamiltonian_args(p)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_gradvar)

    p = sub.add_parser("ground", help="exact ground-state energy")
    common(p)
    _add_hamiltonian_args(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("counts", help="gate-count report for a circuit file")
    common(p)
    p.add_argument("circuit")
    p.set_defaults(func=cmd_counts)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        args.func(args)
    except (UsageError, ContractError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EvoansatzError as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
