"""NSGA-II over the one-gene-per-category integer encoding.

Defaults follow the published configuration: population 200, 300
generations, single-point crossover at 0.9, flip mutation at 0.125, binary
tournament selection, (mu + lambda) elitist survival by non-dominated rank
and crowding distance.  The per-catalog alternative mutation rate 1/N is
available through :func:`per_gene_mutation_rate`.

Randomness comes from numpy's PCG64 generator; identical inputs and seed
give identical fronts (determinism is per-implementation, not promised
across languages).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CutOutOfRange
from .exhaustive import ParetoFront, Provenance, build_front
from .model import CategoryCatalog, InstanceSpec
from .objectives import ObjectiveVector, category_matrices, evaluate_batch, orientation_signs
from .pareto import reduce_search_space, search_space_size


@dataclass(frozen=True)
class Nsga2Params:
    population_size: int = 200
    generations: int = 300
    crossover_prob: float = 0.9
    mutation_prob: float = 0.125
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 4 or self.population_size % 2:
            raise ValueError("population_size must be even and >= 4")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")

    def as_dict(self) -> dict:
        return {
            "population_size": self.population_size,
            "generations": self.generations,
            "crossover_prob": self.crossover_prob,
            "mutation_prob": self.mutation_prob,
            "seed": self.seed,
        }


def per_gene_mutation_rate(catalog: CategoryCatalog) -> float:
    """Alternative mutation rate of one expected flip per solution (1/N)."""
    return 1.0 / catalog.n_categories


@dataclass
class Individual:
    genes: tuple[int, ...]
    objectives: ObjectiveVector | None = None
    rank: int = 0
    crowding: float = 0.0


# --- variation operators ----------------------------------------------------

def single_point_crossover(p1, p2, cut: int, apply: bool = True):
    """Swap gene suffixes from ``cut`` onward; no-op copies when not applied."""
    n = len(p1)
    if len(p2) != n:
        raise CutOutOfRange("parents have different lengths")
    if not apply:
        return tuple(p1), tuple(p2)
    if not 1 <= cut <= n - 1:
        raise CutOutOfRange(f"cut {cut} outside [1, {n - 1}]")
    c1 = tuple(p1[:cut]) + tuple(p2[cut:])
    c2 = tuple(p2[:cut]) + tuple(p1[cut:])
    return c1, c2


def flip_mutation(genes, category_sizes, mutation_prob: float, rng: np.random.Generator):
    """Resample each gene uniformly within its category with prob ``mutation_prob``."""
    out = list(genes)
    for i, size in enumerate(category_sizes):
        if rng.random() < mutation_prob:
            out[i] = int(rng.integers(0, size))
    return tuple(out)


def binary_tournament(population: list[Individual], rng: np.random.Generator) -> Individual:
    """Draw two individuals; lower rank wins, then higher crowding, else a coin."""
    i, j = rng.integers(0, len(population), size=2)
    a, b = population[int(i)], population[int(j)]
    if a.rank != b.rank:
        return a if a.rank < b.rank else b
    if a.crowding != b.crowding:
        return a if a.crowding > b.crowding else b
    return a if rng.random() < 0.5 else b


# --- ranking ----------------------------------------------------------------

def fast_nondominated_sort(oriented_values: np.ndarray) -> np.ndarray:
    """Ranks over minimize-oriented objective rows (0 = non-dominated set)."""
    return kernels.nondominated_rank(np.ascontiguousarray(oriented_values))


def crowding_distance(oriented_values: np.ndarray) -> np.ndarray:
    """Crowding of one front slice: extremes get +inf, interiors sum
    range-normalized neighbor gaps; zero-range objectives contribute 0."""
    vals = np.asarray(oriented_values, dtype=np.float64)
    k, m = vals.shape
    dist = np.zeros(k)
    if k <= 2:
        return np.full(k, np.inf)
    for j in range(m):
        order = np.argsort(vals[:, j], kind="stable")
        v = vals[order, j]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        span = v[-1] - v[0]
        if span > 0:
            interior = order[1:-1]
            finite = ~np.isinf(dist[interior])
            dist[interior[finite]] += ((v[2:] - v[:-2]) / span)[finite]
    return dist


def _rank_and_crowd(oriented: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ranks = fast_nondominated_sort(oriented)
    crowd = np.zeros(len(oriented))
    for r in range(int(ranks.max()) + 1):
        idx = np.flatnonzero(ranks == r)
        crowd[idx] = crowding_distance(oriented[idx])
    return ranks, crowd


# --- solver -----------------------------------------------------------------

def _tournament_indices(
    ranks: np.ndarray, crowd: np.ndarray, count: int, rng: np.random.Generator
) -> np.ndarray:
    pairs = rng.integers(0, len(ranks), size=(count, 2))
    coins = rng.random(count)
    a, b = pairs[:, 0], pairs[:, 1]
    a_wins = (ranks[a] < ranks[b]) | (
        (ranks[a] == ranks[b]) & (crowd[a] > crowd[b])
    )
    tie = (ranks[a] == ranks[b]) & (crowd[a] == crowd[b])
    return np.where(a_wins | (tie & (coins < 0.5)), a, b)


def nsga2_solve(
    catalog: CategoryCatalog,
    instance: InstanceSpec,
    params: Nsga2Params | None = None,
    trace=None,
) -> ParetoFront:
    """Evolve over the reduced catalog and return the final rank-0 front.

    ``trace``, when given, receives one JSON line per generation with the
    generation index, rank-0 size, and best value per objective.
    """
    from .catalog_io import catalog_fingerprint

    params = params or Nsga2Params()
    rng = np.random.Generator(np.random.PCG64(params.seed))

    reduced = reduce_search_space(catalog, instance)
    sizes = np.array(reduced.sizes, dtype=np.int64)
    n_cat = catalog.n_categories
    mats = category_matrices(catalog, instance)
    red_mats = [
        mats[i][list(reduced.survivors[i])] for i in range(n_cat)
    ]
    signs = orientation_signs(instance)

    mu = params.population_size
    lam = params.population_size

    genes = np.floor(rng.random((mu, n_cat)) * sizes).astype(np.int64)
    values = evaluate_batch(red_mats, genes)
    ranks, crowd = _rank_and_crowd(values * signs)

    for gen in range(params.generations):
        parent_idx = _tournament_indices(ranks, crowd, lam, rng)
        p1 = genes[parent_idx[0::2]]
        p2 = genes[parent_idx[1::2]]
        offspring = np.empty((lam, n_cat), dtype=np.int64)
        if n_cat >= 2:
            apply_x = rng.random(lam // 2) < params.crossover_prob
            cuts = rng.integers(1, n_cat, size=lam // 2)
            cols = np.arange(n_cat)
            swap = (cols[None, :] >= cuts[:, None]) & apply_x[:, None]
            offspring[0::2] = np.where(swap, p2, p1)
            offspring[1::2] = np.where(swap, p1, p2)
        else:
            offspring[0::2] = p1
            offspring[1::2] = p2

        mut_mask = rng.random((lam, n_cat)) < params.mutation_prob
        mut_vals = np.floor(rng.random((lam, n_cat)) * sizes).astype(np.int64)
        offspring = np.where(mut_mask, mut_vals, offspring)

        off_values = evaluate_batch(red_mats, offspring)
        pool_genes = np.concatenate([genes, offspring])
        pool_values = np.concatenate([values, off_values])
        pool_oriented = pool_values * signs
        pool_ranks, pool_crowd = _rank_and_crowd(pool_oriented)

        order = np.lexsort((-pool_crowd, pool_ranks))[:mu]
        genes = pool_genes[order]
        values = pool_values[order]
        ranks = pool_ranks[order]
        crowd = pool_crowd[order]

        if trace is not None:
            best = (values * signs).min(axis=0) * signs
            trace.write(
                json.dumps(
                    {
                        "generation": gen,
                        "rank0_size": int((ranks == 0).sum()),
                        "best": [float(b) for b in best],
                    }
                )
                + "\n"
            )

    # final front: rank-0 of the last population, deduplicated by objectives
    final_mask = kernels.nondominated_mask(values * signs)
    front_genes = genes[final_mask]
    orig_choices = [reduced.to_original(row) for row in front_genes]
    full_genes = np.asarray([list(c) for c in orig_choices], dtype=np.int64)
    front_values = evaluate_batch(mats, full_genes) if len(full_genes) else np.empty((0, instance.m))

    # dedup: keep the canonically-first entry per distinct objective vector
    tagged = sorted(
        zip(orig_choices, front_values.tolist()),
        key=lambda t: (t[1], tuple(catalog.apps(i)[c].app_id for i, c in enumerate(t[0]))),
    )
    seen: set[tuple] = set()
    kept_choices, kept_values = [], []
    for choices, vals in tagged:
        key = tuple(vals)
        if key not in seen:
            seen.add(key)
            kept_choices.append(choices)
            kept_values.append(vals)

    stats = {
        "space_before": search_space_size(catalog),
        "space_after": search_space_size(reduced),
        "evaluated": mu + lam * params.generations,
    }
    return build_front(
        catalog,
        instance,
        kept_choices,
        np.asarray(kept_values, dtype=np.float64),
        Provenance("nsga2", seed=params.seed, params=params.as_dict()),
        catalog_fingerprint(catalog),
        stats,
    )
