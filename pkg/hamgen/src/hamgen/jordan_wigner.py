"""Jordan-Wigner mapping of the second-quantized electronic Hamiltonian to a
real-coefficient Pauli-string sum.

Spin orbitals are interleaved: qubit 2p is (spatial p, alpha), qubit 2p+1 is
(spatial p, beta).  Pauli strings are written qubit-0-first.  Internally a
string is a symplectic pair (xmask, zmask) with the convention that the basis
element is the ordered product X^x Z^z per qubit, so Y carries an extra -i
when converting to letters.
"""
from __future__ import annotations

import numpy as np

IMAG_TOLERANCE = 1e-10


def _multiply(op1: dict, op2: dict) -> dict:
    """Product of two {(xmask, zmask): coeff} operators."""
    out: dict[tuple[int, int], complex] = {}
    for (x1, z1), c1 in op1.items():
        for (x2, z2), c2 in op2.items():
            sign = -1.0 if bin(z1 & x2).count("1") % 2 else 1.0
            key = (x1 ^ x2, z1 ^ z2)
            out[key] = out.get(key, 0.0) + sign * c1 * c2
    return out


def _ladder(j: int, creation: bool) -> dict:
    """a_j or a_j^dagger under Jordan-Wigner, in symplectic form."""
    zstring = (1 << j) - 1  # Z on qubits 0..j-1
    xbit = 1 << j
    sign = 1.0 if creation else -1.0
    # (X -/+ iY)/2 with Y = i * (X Z): the XZ basis element enters with -/+ 1/2.
    return {
        (xbit, zstring): 0.5,
        (xbit, zstring | xbit): 0.5 * sign,
    }


def _accumulate(total: dict, op: dict, scale: float) -> None:
    for key, coeff in op.items():
        total[key] = total.get(key, 0.0) + scale * coeff


def qubit_hamiltonian(h_mo, eri_mo, e_nuc: float) -> dict[str, float]:
    """Map MO-basis integrals to {pauli_string: real_coefficient}.

    Builds sum_pq h_pq a+_p a_q + 1/2 sum_pqrs (pq|rs) a+_p a+_r a_s a_q over
    spin orbitals, plus the nuclear repulsion as an identity term.
    """
    n_spatial = h_mo.shape[0]
    n_so = 2 * n_spatial
    ann = [_ladder(j, False) for j in range(n_so)]
    cre = [_ladder(j, True) for j in range(n_so)]
    total: dict[tuple[int, int], complex] = {(0, 0): complex(e_nuc)}

    for p in range(n_spatial):
        for q in range(n_spatial):
            coeff = float(h_mo[p, q])
            if abs(coeff) < 1e-12:
                continue
            for spin in (0, 1):
                _accumulate(total, _multiply(cre[2 * p + spin], ann[2 * q + spin]), coeff)

    for p in range(n_spatial):
        for q in range(n_spatial):
            for r in range(n_spatial):
                for s in range(n_spatial):
                    coeff = 0.5 * float(eri_mo[p, q, r, s])
                    if abs(coeff) < 1e-12:
                        continue
                    for s1 in (0, 1):
                        for s2 in (0, 1):
                            i_p = 2 * p + s1
                            i_q = 2 * q + s1
                            i_r = 2 * r + s2
                            i_s = 2 * s + s2
                            op = _multiply(
                                _multiply(cre[i_p], _multiply(cre[i_r], ann[i_s])),
                                ann[i_q],
                            )
                            _accumulate(total, op, coeff)

    terms: dict[str, float] = {}
    for (x, z), coeff in total.items():
        both = x & z
        n_y = bin(both).count("1")
        value = coeff * (-1j) ** n_y
        if abs(value) < 1e-12:
            continue
        if abs(value.imag) > IMAG_TOLERANCE:
            raise ValueError(f"non-Hermitian residue {value.imag:.2e} on term {x:b},{z:b}")
        ops = []
        for qbit in range(n_so):
            bit = 1 << qbit
            if bit & both:
                ops.append("Y")
            elif bit & x:
                ops.append("X")
            elif bit & z:
                ops.append("Z")
            else:
                ops.append("I")
        terms["".join(ops)] = terms.get("".join(ops), 0.0) + value.real
    return {ops: c for ops, c in terms.items() if abs(c) >= 1e-12}


def ground_energy(terms: dict[str, float], n_qubits: int) -> float:
    """Lowest eigenvalue of the Pauli sum; sparse Lanczos via ARPACK for
    larger systems, dense diagonalization below 2^6."""
    from scipy.sparse.linalg import LinearOperator, eigsh

    dim = 1 << n_qubits
    idx = np.arange(dim, dtype=np.int64)
    compiled = []
    for ops, coeff in terms.items():
        flip = 0
        sign = 0
        n_y = 0
        for q, op in enumerate(ops):
            bit = 1 << q
            if op in "XY":
                flip |= bit
            if op in "ZY":
                sign |= bit
            if op == "Y":
                n_y += 1
        par = idx & sign
        shift = 1
        while shift < 32:
            par ^= par >> shift
            shift <<= 1
        signs = 1.0 - 2.0 * (par & 1)
        compiled.append((coeff * (1j**n_y), idx ^ flip, signs))

    def matvec(vec):
        vec = np.asarray(vec).reshape(-1)
        out = np.zeros(dim, dtype=np.complex128)
        for pref, perm, signs in compiled:
            out[perm] += (pref * signs) * vec
        return out

    if dim <= 64:
        mat = np.zeros((dim, dim), dtype=np.complex128)
        for pref, perm, signs in compiled:
            mat[perm, idx] += pref * signs
        return float(np.linalg.eigvalsh(mat).min())
    op = LinearOperator((dim, dim), matvec=matvec, dtype=np.complex128)
    vals = eigsh(op, k=1, which="SA", return_eigenvectors=False, maxiter=5000)
    return float(vals[0])
