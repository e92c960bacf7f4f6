"""Pareto dominance, non-dominated filtering, and per-category reduction.

Comparisons are exact (no epsilon) by default: inputs are measured means and
relaxing the comparison would change which apps survive.  An optional
epsilon is available for callers that want slack.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyInput, ShapeMismatch
from .model import CategoryCatalog, InstanceSpec, MetricDirection
from .objectives import category_matrices, orientation_signs


@dataclass(frozen=True)
class DirectedPoint:
    """An objective vector with per-coordinate optimization directions."""

    values: tuple[float, ...]
    directions: tuple[MetricDirection, ...]

    def oriented(self) -> tuple[float, ...]:
        """Values flipped so that smaller is always better."""
        return tuple(
            v if d is MetricDirection.MINIMIZE else -v
            for v, d in zip(self.values, self.directions)
        )


def dominates(a: DirectedPoint, b: DirectedPoint, eps: float = 0.0) -> bool:
    """True iff ``a`` is no worse than ``b`` everywhere and better somewhere."""
    if len(a.values) != len(b.values) or a.directions != b.directions:
        raise ShapeMismatch("points have different shapes or directions")
    strict = False
    for va, vb in zip(a.oriented(), b.oriented()):
        if va > vb + eps:
            return False
        if va < vb - eps:
            strict = True
    return strict


def nondominated_filter(points: list[DirectedPoint], eps: float = 0.0) -> list[int]:
    """Indices of points not dominated by any other point.

    Points with identical values are all retained: dominance needs a strict
    inequality.
    """
    if not points:
        raise EmptyInput("no points to filter")
    shape = (len(points[0].values), points[0].directions)
    for p in points:
        if (len(p.values), p.directions) != shape:
            raise ShapeMismatch("points have inconsistent shapes")
    if eps == 0.0:
        oriented = np.asarray([p.oriented() for p in points], dtype=np.float64)
        mask = kernels.nondominated_mask(oriented)
        return [i for i in range(len(points)) if mask[i]]
    return [
        i
        for i, p in enumerate(points)
        if not any(dominates(q, p, eps) for j, q in enumerate(points) if j != i)
    ]


@dataclass(frozen=True)
class ReducedCatalog:
    """Per-category survivors of the dominance reduction, for one instance.

    ``survivors[i]`` holds original app indices within category ``i``, in
    their original relative order.
    """

    catalog: CategoryCatalog
    instance: InstanceSpec
    survivors: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.survivors)

    def to_original(self, choices) -> tuple[int, ...]:
        """Map reduced per-category indices back to original catalog indices."""
        return tuple(self.survivors[i][c] for i, c in enumerate(choices))


def reduce_search_space(
    catalog: CategoryCatalog, instance: InstanceSpec
) -> ReducedCatalog:
    """Drop, per category, every app dominated within that category.

    Objectives are additive means over categories, so swapping a dominated
    app for its dominator can only improve a solution; the front over the
    reduced catalog equals the front over the full one.
    """
    signs = orientation_signs(instance)
    survivors = []
    for mat in category_matrices(catalog, instance):
        mask = kernels.nondominated_mask(mat * signs)
        survivors.append(tuple(int(i) for i in np.flatnonzero(mask)))
    return ReducedCatalog(catalog, instance, tuple(survivors))


def search_space_size(obj) -> int:
    """Number of one-app-per-category combinations (exact integer)."""
    if isinstance(obj, ReducedCatalog):
        sizes = obj.sizes
    elif isinstance(obj, CategoryCatalog):
        sizes = tuple(len(apps) for _, apps in obj.categories)
    else:
        sizes = tuple(int(s) for s in obj)
    total = 1
    for s in sizes:
        total *= s
    return total
