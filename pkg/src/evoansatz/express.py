"""Expressibility scoring: fidelity sampling against the analytic Haar
fidelity distribution, compared through Jensen-Shannon divergence.

The score is a structural property of the circuit: stored genome parameters
are ignored and both parameter vectors of every fidelity pair are drawn
fresh, i.i.d. uniform over [0, 2pi).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .sim import fidelity_pairs, run_circuit_batch

LN2 = float(np.log(2.0))


@dataclass
class FidelityHistogram:
    """Binned empirical fidelities next to the Haar probabilities on the same bins."""

    bin_count: int
    bin_edges: np.ndarray
    empirical_prob: np.ndarray
    haar_prob: np.ndarray


@dataclass(frozen=True)
class ExpressibilityScore:
    jsd: float
    sample_count: int
    bin_count: int
    seed: int


def sample_fidelities(genome, samples: int, rng: np.random.Generator) -> np.ndarray:
    """S fidelities between state pairs at independent uniform parameter draws."""
    if samples < 1:
        raise ContractError("samples must be >= 1")
    p = genome.n_params
    thetas = rng.uniform(0.0, 2.0 * np.pi, size=(2 * samples, max(p, 1)))
    states = run_circuit_batch(genome, thetas[:, :p] if p else thetas[:, :0])
    return fidelity_pairs(states[:samples], states[samples:])


def haar_bin_probs(n_qubits: int, bin_count: int) -> np.ndarray:
    """Haar fidelity mass per uniform bin of [0, 1].

    The Haar fidelity PDF is (N-1)(1-F)^(N-2) with N = 2^n, so the mass in
    [lo, hi] is (1-lo)^(N-1) - (1-hi)^(N-1) in closed form.
    """
    if n_qubits < 1:
        raise ContractError("n_qubits must be >= 1")
    if bin_count < 2:
        raise ContractError("bin_count must be >= 2")
    edges = np.linspace(0.0, 1.0, bin_count + 1)
    big_n = 1 << n_qubits
    cdf_tail = (1.0 - edges) ** (big_n - 1)
    return cdf_tail[:-1] - cdf_tail[1:]


def jsd(p: np.ndarray, q: np.ndarray) -> float:
    """Jensen-Shannon divergence in nats, with 0*log(0/x) taken as 0."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape or p.ndim != 1:
        raise ContractError("jsd needs two equal-length probability vectors")
    if np.any(p < 0) or np.any(q < 0):
        raise ContractError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > 1e-9 or abs(q.sum() - 1.0) > 1e-9:
        raise ContractError("probability vectors must sum to 1")
    m = 0.5 * (p + q)
    with np.errstate(divide="ignore", invalid="ignore"):
        kl_pm = np.where(p > 0, p * np.log(p / m), 0.0).sum()
        kl_qm = np.where(q > 0, q * np.log(q / m), 0.0).sum()
    return float(min(max(0.5 * kl_pm + 0.5 * kl_qm, 0.0), LN2))


def fidelity_histogram(fids: np.ndarray, n_qubits: int, bin_count: int) -> FidelityHistogram:
    """Histogram fidelities on uniform bins of [0, 1] (F == 1 lands in the last bin)."""
    counts, edges = np.histogram(fids, bins=bin_count, range=(0.0, 1.0))
    return FidelityHistogram(
        bin_count=bin_count,
        bin_edges=edges,
        empirical_prob=counts / counts.sum(),
        haar_prob=haar_bin_probs(n_qubits, bin_count),
    )


def score_fidelities(fids: np.ndarray, n_qubits: int, bin_count: int) -> float:
    """JSD of a fidelity sample against the Haar bins."""
    hist = fidelity_histogram(fids, n_qubits, bin_count)
    return jsd(hist.empirical_prob, hist.haar_prob)


def expressibility(
    genome, samples: int = 5000, bins: int = 75, seed: int = 0
) -> ExpressibilityScore:
    """Full pipeline: sample fidelities, histogram, JSD against Haar.

    Deterministic given (genome, samples, bins, seed).
    """
    if samples < bins:
        raise ContractError("need at least as many samples as bins")
    seed = int(seed)
    rng = np.random.default_rng(seed)
    fids = sample_fidelities(genome, samples, rng)
    return ExpressibilityScore(
        jsd=score_fidelities(fids, genome.n_qubits, bins),
        sample_count=samples,
        bin_count=bins,
        seed=seed,
    )
