"""Trainability and resource diagnostics for evolved circuits."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .hamiltonians import PauliHamiltonian
from .vqe import energy_batch, gradient

FLAT_VARIANCE_THRESHOLD = 1e-6


@dataclass
class LandscapeGrid:
    """Energy over a 2D scan of two parameter slots, the rest held fixed."""

    param_i: int
    param_j: int
    axis: np.ndarray
    energies: np.ndarray  # energies[a, b] at (theta_i=axis[a], theta_j=axis[b])
    base_params: np.ndarray


@dataclass
class GradientStats:
    per_param_variance: np.ndarray
    sample_count: int
    flat_slots: tuple[int, ...]


@dataclass(frozen=True)
class GateCount:
    parameterized: int
    non_parameterized: int

    @property
    def total(self) -> int:
        return self.parameterized + self.non_parameterized


def landscape_scan(
    genome,
    h: PauliHamiltonian,
    param_i: int,
    param_j: int,
    resolution: int = 50,
    base_params=None,
) -> LandscapeGrid:
    """Energy grid varying slots i and j over [0, 2pi], others at base_params."""
    p = genome.n_params
    if param_i == param_j or not (0 <= param_i < p and 0 <= param_j < p):
        raise ContractError(f"need two distinct valid slots, got ({param_i}, {param_j})")
    if resolution < 2:
        raise ContractError("resolution must be >= 2")
    base = np.array(genome.params if base_params is None else base_params, dtype=float)
    if base.shape != (p,):
        raise ContractError(f"base_params must have length {p}")
    axis = np.linspace(0.0, 2.0 * np.pi, resolution)
    grid_i, grid_j = np.meshgrid(axis, axis, indexing="ij")
    batch = np.repeat(base[None, :], resolution * resolution, axis=0)
    batch[:, param_i] = grid_i.ravel()
    batch[:, param_j] = grid_j.ravel()
    energies = energy_batch(genome, batch, h).reshape(resolution, resolution)
    return LandscapeGrid(param_i, param_j, axis, energies, base)


def gradient_variance(
    genome, h: PauliHamiltonian, samples: int, rng: np.random.Generator
) -> GradientStats:
    """Per-slot sample variance of parameter-shift gradients at uniform draws.

    Slots whose variance falls below 1e-6 are flagged flat; on a parameter-free
    genome the stats are empty.
    """
    if samples < 2:
        raise ContractError("need at least 2 samples for a variance")
    p = genome.n_params
    if p == 0:
        return GradientStats(np.zeros(0), samples, ())
    grads = np.empty((samples, p))
    for s in range(samples):
        theta = rng.uniform(0.0, 2.0 * np.pi, size=p)
        grads[s] = gradient(genome, theta, h)
    variances = grads.var(axis=0, ddof=1)
    flat = tuple(int(i) for i in np.nonzero(variances < FLAT_VARIANCE_THRESHOLD)[0])
    return GradientStats(variances, samples, flat)


def gate_counts(genome) -> GateCount:
    """Placed-gate tally: identities count, a CNOT counts once."""
    parameterized = sum(1 for g in genome.gates if g.is_parameterized)
    total = len(genome.gates)
    return GateCount(parameterized, total - parameterized)
