"""STO-3G basis data for the benchmark elements (H, Li, Be, O).

Exponents are the standard scaled values; contraction coefficients apply to
primitive-normalized Gaussians.  Shells are given as (angular momentum label,
exponents, coefficients); SP shells share exponents between the 2s and 2p
contractions.
"""
from __future__ import annotations

# 1s contraction coefficients are shared by every element in STO-3G.
_C_1S = (0.15432897, 0.53532814, 0.44463454)
_C_2S = (-0.09996723, 0.39951283, 0.70011547)
_C_2P = (0.15591627, 0.60768372, 0.39195739)

STO3G = {
    "H": [
        ("s", (3.42525091, 0.62391373, 0.16885540), _C_1S),
    ],
    "Li": [
        ("s", (16.1195750, 2.9362007, 0.7946505), _C_1S),
        ("s", (0.6362897, 0.1478601, 0.0480887), _C_2S),
        ("p", (0.6362897, 0.1478601, 0.0480887), _C_2P),
    ],
    "Be": [
        ("s", (30.1678710, 5.4951153, 1.4871927), _C_1S),
        ("s", (1.3148331, 0.3055389, 0.0993707), _C_2S),
        ("p", (1.3148331, 0.3055389, 0.0993707), _C_2P),
    ],
    "O": [
        ("s", (130.7093200, 23.8088610, 6.4436083), _C_1S),
        ("s", (5.0331513, 1.1695961, 0.3803890), _C_2S),
        ("p", (5.0331513, 1.1695961, 0.3803890), _C_2P),
    ],
}

ATOMIC_NUMBER = {"H": 1, "Li": 3, "Be": 4, "O": 8}

ANGSTROM_TO_BOHR = 1.8897259886
