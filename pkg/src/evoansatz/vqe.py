"""Variational energy minimization: parameter-shift gradients plus Adam.

The parameter-shift rule dE/dt_j = (E(t_j + pi/2) - E(t_j - pi/2)) / 2 is
exact for RX/RY/RZ generators, so the gradient needs 2P shifted circuit runs;
they are evaluated as a single batch.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ContractError, EvoansatzError
from .hamiltonians import PauliHamiltonian, expectation_batch
from .sim import run_circuit_batch

INIT_MODES = ("stored", "random", "zeros")
PLATEAU_WINDOW = 10  # consecutive small-|dE| iterations before stopping


@dataclass
class VQEConfig:
    max_iters: int = 300
    learning_rate: float = 0.05
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    init_mode: str = "stored"
    seed: int = 0
    convergence_tol: float = 1e-6
    record_trace: bool = True

    def validate(self) -> None:
        if self.learning_rate <= 0:
            raise ContractError("learning_rate must be > 0")
        if not (0 < self.adam_beta1 < 1 and 0 < self.adam_beta2 < 1):
            raise ContractError("Adam betas must lie in (0, 1)")
        if self.init_mode not in INIT_MODES:
            raise ContractError(f"init_mode must be one of {INIT_MODES}")
        if self.max_iters < 0:
            raise ContractError("max_iters must be >= 0")


@dataclass
class VQETrace:
    energies: np.ndarray
    grad_norms: np.ndarray
    final_params: np.ndarray
    final_energy: float
    iterations_used: int
    error_vs_reference: Optional[float] = None


def energy(genome, params, h: PauliHamiltonian) -> float:
    """<psi(params)| H |psi(params)> for one parameter vector."""
    if genome.n_qubits != h.n_qubits:
        raise ContractError("genome and Hamiltonian qubit counts differ")
    states = run_circuit_batch(genome, np.asarray(params, dtype=float).reshape(1, -1))
    return float(expectation_batch(states, h)[0])


def energy_batch(genome, params: np.ndarray, h: PauliHamiltonian) -> np.ndarray:
    """Energies for a (batch, P) matrix of parameter vectors."""
    if genome.n_qubits != h.n_qubits:
        raise ContractError("genome and Hamiltonian qubit counts differ")
    return expectation_batch(run_circuit_batch(genome, params), h)


def gradient(genome, params, h: PauliHamiltonian) -> np.ndarray:
    """Exact parameter-shift gradient of the energy."""
    params = np.asarray(params, dtype=float).reshape(-1)
    p = params.size
    if p == 0:
        return np.zeros(0)
    shifted = np.repeat(params[None, :], 2 * p, axis=0)
    rows = np.arange(p)
    shifted[rows, rows] += 0.5 * np.pi
    shifted[p + rows, rows] -= 0.5 * np.pi
    energies = energy_batch(genome, shifted, h)
    return 0.5 * (energies[:p] - energies[p:])


def initial_params(genome, cfg: VQEConfig) -> np.ndarray:
    if cfg.init_mode == "stored":
        return np.array(genome.params, dtype=float)
    if cfg.init_mode == "zeros":
        return np.zeros(genome.n_params)
    rng = np.random.default_rng(cfg.seed)
    return rng.uniform(0.0, 2.0 * np.pi, size=genome.n_params)


def run_vqe(genome, h: PauliHamiltonian, cfg: Optional[VQEConfig] = None) -> VQETrace:
    """Adam descent on parameter-shift gradients.

    Stops at max_iters, or once |dE| stays below convergence_tol for
    PLATEAU_WINDOW consecutive iterations.  Aborts on non-finite energy.
    """
    cfg = cfg or VQEConfig()
    cfg.validate()
    params = initial_params(genome, cfg)
    energies = [energy(genome, params, h)]
    grad_norms: list[float] = []
    m = np.zeros_like(params)
    v = np.zeros_like(params)
    flat_streak = 0
    iterations = 0
    for t in range(1, cfg.max_iters + 1):
        g = gradient(genome, params, h)
        grad_norms.append(float(np.linalg.norm(g)))
        m = cfg.adam_beta1 * m + (1 - cfg.adam_beta1) * g
        v = cfg.adam_beta2 * v + (1 - cfg.adam_beta2) * g * g
        m_hat = m / (1 - cfg.adam_beta1**t)
        v_hat = v / (1 - cfg.adam_beta2**t)
        params = params - cfg.learning_rate * m_hat / (np.sqrt(v_hat) + cfg.adam_eps)
        e = energy(genome, params, h)
        if not np.isfinite(e):
            raise EvoansatzError(f"non-finite energy at iteration {t}: {e}")
        delta = abs(e - energies[-1])
        energies.append(e)
        iterations = t
        flat_streak = flat_streak + 1 if delta < cfg.convergence_tol else 0
        if flat_streak >= PLATEAU_WINDOW:
            break
    final = float(energies[-1])
    ref = h.reference_ground_energy
    return VQETrace(
        energies=np.asarray(energies),
        grad_norms=np.asarray(grad_norms),
        final_params=params,
        final_energy=final,
        iterations_used=iterations,
        error_vs_reference=None if ref is None else abs(final - ref),
    )
