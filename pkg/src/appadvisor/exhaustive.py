"""Exhaustive solver: enumerate every combination of the reduced catalog and
keep the exact Pareto-optimal front."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InstanceMismatch, SearchSpaceTooLarge
from .model import CategoryCatalog, InstanceSpec
from .objectives import ObjectiveVector, category_matrices, evaluate_batch, orientation_signs
from .pareto import ReducedCatalog, reduce_search_space, search_space_size

DEFAULT_ENUM_CAP = 50_000_000


def enum_cap() -> int:
    """Enumeration cap; overridable through the ASP_ENUM_CAP env var."""
    raw = os.environ.get("ASP_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class Provenance:
    method: str  # "exhaustive" | "nsga2"
    seed: int | None = None
    params: dict | None = None


@dataclass(frozen=True)
class FrontEntry:
    """One Pareto-optimal solution: original app indices, ids, and objectives."""

    choices: tuple[int, ...]
    app_ids: tuple[str, ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class ParetoFront:
    instance: InstanceSpec
    entries: tuple[FrontEntry, ...]
    provenance: Provenance
    catalog_fingerprint: str
    stats: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def objective_vectors(self) -> list[ObjectiveVector]:
        return [
            ObjectiveVector(self.instance.instance_id, self.instance.metrics, e.values)
            for e in self.entries
        ]


def build_front(
    catalog: CategoryCatalog,
    instance: InstanceSpec,
    choices_list: list[tuple[int, ...]],
    values: np.ndarray,
    provenance: Provenance,
    fingerprint: str,
    stats: dict,
) -> ParetoFront:
    """Assemble and canonically sort front entries (values, then app ids)."""
    entries = []
    for choices, vals in zip(choices_list, values):
        app_ids = tuple(
            catalog.apps(i)[c].app_id for i, c in enumerate(choices)
        )
        entries.append(FrontEntry(tuple(int(c) for c in choices), app_ids, tuple(float(v) for v in vals)))
    entries.sort(key=lambda e: (e.values, e.app_ids))
    return ParetoFront(instance, tuple(entries), provenance, fingerprint, stats)


def solve_exhaustive(
    catalog: CategoryCatalog,
    instance: InstanceSpec,
    cap: int | None = None,
    workers: int = 1,
) -> ParetoFront:
    """Reduce, enumerate all combinations, and filter to the exact front.

    Output is independent of ``workers``: partitions are keyed by the first
    category's index and the merged archive gets a final dominance pass.
    """
    from .catalog_io import catalog_fingerprint

    cap = enum_cap() if cap is None else cap
    reduced = reduce_search_space(catalog, instance)
    size = search_space_size(reduced)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)

    mats = category_matrices(catalog, instance)
    signs = orientation_signs(instance)
    red_mats = [
        np.ascontiguousarray(mats[i][list(reduced.survivors[i])] * signs)
        for i in range(catalog.n_categories)
    ]

    first_size = red_mats[0].shape[0]
    workers = max(1, min(workers, first_size))
    bounds = np.linspace(0, first_size, workers + 1).astype(int)
    parts = [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if lo < hi]

    def run(part):
        lo, hi = part
        sub = [np.ascontiguousarray(red_mats[0][lo:hi])] + red_mats[1:]
        choices, sums = kernels.enumerate_front(sub)
        if len(choices):
            choices = choices.copy()
            choices[:, 0] += lo
        return choices, sums

    if len(parts) == 1:
        results = [run(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            results = list(pool.map(run, parts))

    all_choices = np.concatenate([c for c, _ in results])
    all_sums = np.concatenate([s for _, s in results])
    keep = kernels.nondominated_mask(all_sums)
    winners = all_choices[keep]

    orig_choices = [reduced.to_original(row) for row in winners]
    genes = np.asarray([list(c) for c in orig_choices], dtype=np.int64)
    values = evaluate_batch(mats, genes)

    stats = {
        "space_before": search_space_size(catalog),
        "space_after": size,
        "evaluated": size,
    }
    return build_front(
        catalog,
        instance,
        orig_choices,
        values,
        Provenance("exhaustive"),
        catalog_fingerprint(catalog),
        stats,
    )


def front_equal(f1: ParetoFront, f2: ParetoFront, tol: float = 0.0) -> bool:
    """True iff the two fronts' objective multisets match within ``tol``."""
    if f1.instance.instance_id != f2.instance.instance_id:
        raise InstanceMismatch(
            f"fronts solve different instances: {f1.instance.instance_id} vs "
            f"{f2.instance.instance_id}"
        )
    a = sorted(e.values for e in f1.entries)
    b = sorted(e.values for e in f2.entries)
    if len(a) != len(b):
        return False
    for va, vb in zip(a, b):
        if any(abs(x - y) > tol for x, y in zip(va, vb)):
            return False
    return True
