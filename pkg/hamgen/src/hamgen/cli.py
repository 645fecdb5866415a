"""Command line entry point: ham-gen --molecule H2 --out h2.json"""
from __future__ import annotations

import argparse
import sys

from .generate import MOLECULES, generate, write_payload


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ham-gen",
        description="Generate benchmark molecular qubit-Hamiltonian JSON files "
        "(STO-3G, restricted Hartree-Fock, Jordan-Wigner).",
    )
    parser.add_argument("--molecule", required=True, choices=sorted(MOLECULES))
    parser.add_argument("--out", required=True, help="output JSON path")
    parser.add_argument(
        "--no-reference",
        action="store_true",
        help="skip the exact ground-energy computation (metadata field becomes null)",
    )
    args = parser.parse_args(argv)
    try:
        payload = generate(args.molecule, with_reference=not args.no_reference)
    except Exception as exc:  # pragma: no cover - defensive
        print(f"ham-gen: {exc}", file=sys.stderr)
        return 1
    write_payload(payload, args.out)
    ref = payload["metadata"]["reference_ground_energy"]
    ref_txt = "n/a" if ref is None else f"{ref:.8f} Ha"
    print(
        f"{args.molecule}: {payload['n_qubits']} qubits, "
        f"{len(payload['terms'])} terms, ground energy {ref_txt} -> {args.out}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
