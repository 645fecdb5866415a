"""Molecular integrals over contracted cartesian Gaussians (s and p shells)
via the McMurchie-Davidson scheme: Hermite expansion coefficients plus
Hermite Coulomb integrals built on the Boys function.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import hyp1f1

from .basis import ATOMIC_NUMBER, STO3G


def boys(n: int, x: float) -> float:
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_e(i: int, j: int, t: int, qx: float, a: float, b: float) -> float:
    """Expansion coefficient of G_i(a, x-A) G_j(b, x-B) in Hermite Gaussians."""
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return float(np.exp(-mu * qx * qx))
    if j == 0:
        return (
            hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
            - (mu * qx / a) * hermite_e(i - 1, j, t, qx, a, b)
            + (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b)
        )
    return (
        hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
        + (mu * qx / b) * hermite_e(i, j - 1, t, qx, a, b)
        + (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b)
    )


def hermite_coulomb(t: int, u: int, v: int, n: int, p: float, pc: np.ndarray) -> float:
    """Auxiliary Hermite Coulomb integral R^n_{tuv}."""
    if t == u == v == 0:
        dist2 = float(pc @ pc)
        return (-2.0 * p) ** n * boys(n, p * dist2)
    if t > 0:
        val = pc[0] * hermite_coulomb(t - 1, u, v, n + 1, p, pc)
        if t > 1:
            val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, pc)
        return val
    if u > 0:
        val = pc[1] * hermite_coulomb(t, u - 1, v, n + 1, p, pc)
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, pc)
        return val
    val = pc[2] * hermite_coulomb(t, u, v - 1, n + 1, p, pc)
    if v > 1:
        val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, pc)
    return val


def _primitive_norm(alpha: float, lmn: tuple[int, int, int]) -> float:
    l, m, n = lmn
    df = lambda k: 1.0 if k < 1 else float(np.prod(np.arange(2 * k - 1, 0, -2)))
    return (
        (2.0 * alpha / np.pi) ** 0.75
        * (4.0 * alpha) ** ((l + m + n) / 2.0)
        / np.sqrt(df(l) * df(m) * df(n))
    )


@dataclass
class BasisFunction:
    """One contracted cartesian Gaussian AO."""

    center: np.ndarray
    lmn: tuple[int, int, int]
    exps: np.ndarray
    coefs: np.ndarray  # includes primitive norms and contraction normalization

    @classmethod
    def build(cls, center, lmn, exps, coefs) -> "BasisFunction":
        center = np.asarray(center, dtype=float)
        exps = np.asarray(exps, dtype=float)
        coefs = np.asarray(coefs, dtype=float) * np.array(
            [_primitive_norm(a, lmn) for a in exps]
        )
        bf = cls(center, tuple(lmn), exps, coefs)
        bf.coefs = bf.coefs / np.sqrt(_overlap_contracted(bf, bf))
        return bf


def _overlap_primitive(a, lmn1, ra, b, lmn2, rb) -> float:
    p = a + b
    q = ra - rb
    s = 1.0
    for ax in range(3):
        s *= hermite_e(lmn1[ax], lmn2[ax], 0, q[ax], a, b)
    return s * (np.pi / p) ** 1.5


def _overlap_contracted(f1: BasisFunction, f2: BasisFunction) -> float:
    total = 0.0
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            total += ca * cb * _overlap_primitive(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return total


def _kinetic_primitive(a, lmn1, ra, b, lmn2, rb) -> float:
    l2, m2, n2 = lmn2

    def ov(d0, d1, d2):
        return _overlap_primitive(a, lmn1, ra, b, (l2 + d0, m2 + d1, n2 + d2), rb)

    term0 = b * (2 * (l2 + m2 + n2) + 3) * ov(0, 0, 0)
    term1 = -2.0 * b * b * (ov(2, 0, 0) + ov(0, 2, 0) + ov(0, 0, 2))
    term2 = -0.5 * (
        l2 * (l2 - 1) * (ov(-2, 0, 0) if l2 > 1 else 0.0)
        + m2 * (m2 - 1) * (ov(0, -2, 0) if m2 > 1 else 0.0)
        + n2 * (n2 - 1) * (ov(0, 0, -2) if n2 > 1 else 0.0)
    )
    return term0 + term1 + term2


def _nuclear_primitive(a, lmn1, ra, b, lmn2, rb, rc) -> float:
    p = a + b
    rp = (a * ra + b * rb) / p
    q = ra - rb
    pc = rp - rc
    total = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        et = hermite_e(lmn1[0], lmn2[0], t, q[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            eu = hermite_e(lmn1[1], lmn2[1], u, q[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                ev = hermite_e(lmn1[2], lmn2[2], v, q[2], a, b)
                total += et * eu * ev * hermite_coulomb(t, u, v, 0, p, pc)
    return 2.0 * np.pi / p * total


def _eri_primitive(a, lmn1, ra, b, lmn2, rb, c, lmn3, rc, d, lmn4, rd) -> float:
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq = rp - rq
    q1 = ra - rb
    q2 = rc - rd
    total = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        e1t = hermite_e(lmn1[0], lmn2[0], t, q1[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            e1u = hermite_e(lmn1[1], lmn2[1], u, q1[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                e1v = hermite_e(lmn1[2], lmn2[2], v, q1[2], a, b)
                pre1 = e1t * e1u * e1v
                if pre1 == 0.0:
                    continue
                for tt in range(lmn3[0] + lmn4[0] + 1):
                    e2t = hermite_e(lmn3[0], lmn4[0], tt, q2[0], c, d)
                    for uu in range(lmn3[1] + lmn4[1] + 1):
                        e2u = hermite_e(lmn3[1], lmn4[1], uu, q2[1], c, d)
                        for vv in range(lmn3[2] + lmn4[2] + 1):
                            e2v = hermite_e(lmn3[2], lmn4[2], vv, q2[2], c, d)
                            pre2 = e2t * e2u * e2v
                            if pre2 == 0.0:
                                continue
                            total += (
                                pre1
                                * pre2
                                * (-1.0) ** (tt + uu + vv)
                                * hermite_coulomb(t + tt, u + uu, v + vv, 0, alpha, pq)
                            )
    return total * 2.0 * np.pi**2.5 / (p * q * np.sqrt(p + q))


def _contract2(prim, f1: BasisFunction, f2: BasisFunction) -> float:
    total = 0.0
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            total += ca * cb * prim(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return total


def build_basis(atoms) -> list[BasisFunction]:
    """AO list for [(symbol, xyz_bohr), ...] in STO-3G order (s before p)."""
    basis = []
    for symbol, xyz in atoms:
        for kind, exps, coefs in STO3G[symbol]:
            if kind == "s":
                basis.append(BasisFunction.build(xyz, (0, 0, 0), exps, coefs))
            else:
                for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    basis.append(BasisFunction.build(xyz, lmn, exps, coefs))
    return basis


def integrals(atoms):
    """Return (S, T, V, ERI, E_nuc) in the AO basis; ERI is chemist (pq|rs)."""
    basis = build_basis(atoms)
    nb = len(basis)
    s_mat = np.zeros((nb, nb))
    t_mat = np.zeros((nb, nb))
    v_mat = np.zeros((nb, nb))
    for i in range(nb):
        for j in range(i + 1):
            s_mat[i, j] = s_mat[j, i] = _overlap_contracted(basis[i], basis[j])
            t_mat[i, j] = t_mat[j, i] = _contract2(_kinetic_primitive, basis[i], basis[j])
            v = 0.0
            for symbol, xyz in atoms:
                charge = ATOMIC_NUMBER[symbol]
                v -= charge * _contract2(
                    lambda a, l1, r1, b, l2, r2: _nuclear_primitive(a, l1, r1, b, l2, r2, xyz),
                    basis[i],
                    basis[j],
                )
            v_mat[i, j] = v_mat[j, i] = v

    eri = np.zeros((nb, nb, nb, nb))
    for i in range(nb):
        for j in range(i + 1):
            for k in range(nb):
                for l in range(k + 1):
                    if (i * (i + 1) // 2 + j) < (k * (k + 1) // 2 + l):
                        continue
                    val = 0.0
                    f1, f2, f3, f4 = basis[i], basis[j], basis[k], basis[l]
                    for a, ca in zip(f1.exps, f1.coefs):
                        for b, cb in zip(f2.exps, f2.coefs):
                            for c, cc in zip(f3.exps, f3.coefs):
                                for d, cd in zip(f4.exps, f4.coefs):
                                    val += ca * cb * cc * cd * _eri_primitive(
                                        a, f1.lmn, f1.center,
                                        b, f2.lmn, f2.center,
                                        c, f3.lmn, f3.center,
                                        d, f4.lmn, f4.center,
                                    )
                    for p, q, r, s in (
                        (i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
                        (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i),
                    ):
                        eri[p, q, r, s] = val

    e_nuc = 0.0
    for a in range(len(atoms)):
        for b in range(a):
            za = ATOMIC_NUMBER[atoms[a][0]]
            zb = ATOMIC_NUMBER[atoms[b][0]]
            e_nuc += za * zb / np.linalg.norm(np.asarray(atoms[a][1]) - np.asarray(atoms[b][1]))
    return s_mat, t_mat, v_mat, eri, e_nuc
