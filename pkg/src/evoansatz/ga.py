"""Generational genetic search over circuit genomes, minimizing the
expressibility score at fixed qubit count and depth.

Replacement is wholesale (no elitism); the best circuit ever evaluated is
tracked separately, so per-generation scores may regress while the running
best is monotone.  All randomness derives from the master seed: structural
choices (initialization, pairing, cuts, mutations) use one stream, and each
fitness evaluation gets its own integer seed keyed by (master seed,
generation, position), so evaluations are order- and thread-independent.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ContractError
from .express import expressibility
from .genome import CircuitGenome, GateSet, crossover, mutate, random_genome


@dataclass
class GAConfig:
    n_qubits: int
    depth: int
    population: int = 30
    generations: int = 10
    parent_count: int = 5
    mutation_prob: float = 0.1
    samples: int = 5000
    bins: int = 75
    crossover_points: int = 1
    master_seed: int = 0
    threads: int = 1

    def validate(self) -> None:
        if self.n_qubits < 1:
            raise ContractError("n_qubits must be >= 1")
        if self.depth < 1:
            raise ContractError("depth must be >= 1")
        if self.population < 1:
            raise ContractError("population must be >= 1")
        if self.generations < 0:
            raise ContractError("generations must be >= 0")
        if not 1 <= self.parent_count <= self.population:
            raise ContractError("parent_count must be in [1, population]")
        if not 0.0 <= self.mutation_prob <= 1.0:
            raise ContractError("mutation_prob must be in [0, 1]")
        if self.samples < self.bins:
            raise ContractError("samples must be >= bins")
        if self.crossover_points < 1:
            raise ContractError("crossover_points must be >= 1")


@dataclass
class GARunReport:
    best_genome: CircuitGenome
    best_overall_score: float
    best_generation: int  # 0 = initial population
    best_seed: int
    best_score_per_generation: list[float] = field(default_factory=list)
    mean_score_per_generation: list[float] = field(default_factory=list)
    running_best_per_generation: list[float] = field(default_factory=list)
    wall_time_per_generation: list[float] = field(default_factory=list)
    initial_best_score: float = float("nan")


def evaluation_seed(master_seed: int, generation: int, index: int) -> int:
    """Deterministic per-evaluation RNG seed, safe across parallel workers."""
    ss = np.random.SeedSequence([int(master_seed), int(generation), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def evaluate_population(
    pop: list[CircuitGenome], cfg: GAConfig, generation: int = 0
) -> list[float]:
    """Score every genome; order preserved, one derived seed per position."""
    if not pop:
        raise ContractError("population must be non-empty")

    def score(item):
        index, genome = item
        seed = evaluation_seed(cfg.master_seed, generation, index)
        return expressibility(genome, cfg.samples, cfg.bins, seed).jsd

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            return list(pool.map(score, enumerate(pop)))
    return [score(item) for item in enumerate(pop)]


def select_parents(
    pop: list[CircuitGenome], scores: list[float], k: int
) -> list[CircuitGenome]:
    """The k lowest-scoring genomes, ascending; ties broken by population index."""
    if k > len(pop):
        raise ContractError("cannot select more parents than the population holds")
    order = np.argsort(np.asarray(scores), kind="stable")[:k]
    return [pop[i] for i in order]


def _offspring(parents, cfg: GAConfig, rng: np.random.Generator) -> CircuitGenome:
    if len(parents) >= 2:
        i, j = rng.choice(len(parents), size=2, replace=False)
    else:
        i = j = 0
    child = crossover(parents[i], parents[j], cfg.crossover_points, rng)
    return mutate(child, cfg.mutation_prob, rng)


def evolve(cfg: GAConfig, gate_set: GateSet) -> GARunReport:
    """Run the full loop: init, evaluate, select, crossover+mutate, replace."""
    cfg.validate()
    rng = np.random.default_rng(
        np.random.SeedSequence([int(cfg.master_seed), 0x57A6])
    )
    pop = [
        random_genome(gate_set, cfg.n_qubits, cfg.depth, rng)
        for _ in range(cfg.population)
    ]
    scores = evaluate_population(pop, cfg, generation=0)
    best_idx = int(np.argmin(scores))
    report = GARunReport(
        best_genome=pop[best_idx],
        best_overall_score=scores[best_idx],
        best_generation=0,
        best_seed=evaluation_seed(cfg.master_seed, 0, best_idx),
        initial_best_score=scores[best_idx],
    )

    for gen in range(1, cfg.generations + 1):
        t0 = time.perf_counter()
        parents = select_parents(pop, scores, cfg.parent_count)
        pop = [_offspring(parents, cfg, rng) for _ in range(cfg.population)]
        scores = evaluate_population(pop, cfg, generation=gen)
        gen_best = int(np.argmin(scores))
        if scores[gen_best] < report.best_overall_score:
            report.best_overall_score = scores[gen_best]
            report.best_genome = pop[gen_best]
            report.best_generation = gen
            report.best_seed = evaluation_seed(cfg.master_seed, gen, gen_best)
        report.best_score_per_generation.append(scores[gen_best])
        report.mean_score_per_generation.append(float(np.mean(scores)))
        report.running_best_per_generation.append(report.best_overall_score)
        report.wall_time_per_generation.append(time.perf_counter() - t0)
    return report
