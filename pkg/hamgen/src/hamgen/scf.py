"""Restricted Hartree-Fock with DIIS acceleration."""
from __future__ import annotations

import numpy as np
from scipy.linalg import eigh


class SCFError(RuntimeError):
    pass


def rhf(s_mat, t_mat, v_mat, eri, e_nuc, n_electrons, max_cycles=200, tol=1e-10):
    """Closed-shell SCF; returns (E_total, C, h_core, eri) in the AO basis."""
    if n_electrons % 2:
        raise SCFError("restricted HF needs an even electron count")
    n_occ = n_electrons // 2
    h_core = t_mat + v_mat
    # Symmetric orthogonalization.
    s_vals, s_vecs = np.linalg.eigh(s_mat)
    if s_vals.min() < 1e-8:
        raise SCFError("near-singular overlap matrix")
    x = s_vecs @ np.diag(s_vals**-0.5) @ s_vecs.T

    def fock(dm):
        j = np.einsum("pqrs,rs->pq", eri, dm)
        k = np.einsum("prqs,rs->pq", eri, dm)
        return h_core + j - 0.5 * k

    def density(f):
        _, c = eigh(f, s_mat)
        c_occ = c[:, :n_occ]
        return 2.0 * c_occ @ c_occ.T, c

    dm, c = density(h_core)
    energy = 0.0
    errors: list[np.ndarray] = []
    focks: list[np.ndarray] = []
    for _ in range(max_cycles):
        f = fock(dm)
        # DIIS on the orthogonalized gradient FDS - SDF.
        grad = x.T @ (f @ dm @ s_mat - s_mat @ dm @ f) @ x
        errors.append(grad)
        focks.append(f)
        if len(errors) > 8:
            errors.pop(0)
            focks.pop(0)
        if len(errors) > 1:
            m = len(errors)
            b = -np.ones((m + 1, m + 1))
            b[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    b[i, j] = np.sum(errors[i] * errors[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                weights = np.linalg.solve(b, rhs)[:m]
                f = sum(w * fk for w, fk in zip(weights, focks))
            except np.linalg.LinAlgError:
                pass
        dm, c = density(f)
        new_energy = 0.5 * np.sum(dm * (h_core + fock(dm))) + e_nuc
        if abs(new_energy - energy) < tol and np.max(np.abs(grad)) < 1e-6:
            return new_energy, c, h_core, eri
        energy = new_energy
    raise SCFError(f"SCF did not converge in {max_cycles} cycles (last E={energy:.8f})")


def mo_integrals(c, h_core, eri):
    """Transform to the MO basis; returns (h_mo, eri_mo) with chemist (pq|rs)."""
    h_mo = c.T @ h_core @ c
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", eri, c, c, c, c, optimize=True)
    return h_mo, eri_mo
