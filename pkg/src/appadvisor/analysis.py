"""A-posteriori decision support over a computed front.

Trade-off of a solution and objective = |display value - best display value|
/ max display value x 100, so the front's best solution per objective scores
0 and everything is in [0, 100].  Improvement against a baseline normalizes
by the baseline (positive = candidate better under the metric's direction).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyFront, InstanceMismatch, UnknownCategory, UnknownObjective
from .exhaustive import FrontEntry, ParetoFront
from .model import (
    DIRECTIONS,
    AppRecord,
    CategoryCatalog,
    MetricDirection,
    MetricId,
)
from .objectives import DisplayTransform, ObjectiveVector


@dataclass(frozen=True)
class TradeoffRow:
    solution_index: int  # 1-based, after table ordering
    entry: FrontEntry
    display_values: tuple[float, ...]  # instance metric order, post-transform
    tradeoff_pct: tuple[float, ...]


def tradeoff_table(
    front: ParetoFront, transforms: DisplayTransform | None = None
) -> list[TradeoffRow]:
    """Per-solution trade-off percentages over display values.

    Rows are ordered along the first objective, best first, matching how the
    fronts are presented to the user.
    """
    if not front.entries:
        raise EmptyFront("cannot tabulate an empty front")
    transforms = transforms or DisplayTransform()
    metrics = front.instance.metrics

    display = [
        tuple(transforms.display_value(m, v) for m, v in zip(metrics, e.values))
        for e in front.entries
    ]
    best, maxes = [], []
    for j, m in enumerate(metrics):
        col = [row[j] for row in display]
        maxes.append(max(col))
        if transforms.display_direction(m) is MetricDirection.MAXIMIZE:
            best.append(max(col))
        else:
            best.append(min(col))

    rows = []
    for entry, disp in zip(front.entries, display):
        pct = tuple(
            0.0 if maxes[j] == 0 else abs(disp[j] - best[j]) / maxes[j] * 100.0
            for j in range(len(metrics))
        )
        rows.append((entry, disp, pct))

    first_max = transforms.display_direction(metrics[0]) is MetricDirection.MAXIMIZE
    rows.sort(key=lambda r: (-r[1][0] if first_max else r[1][0], r[0].app_ids))
    return [
        TradeoffRow(i + 1, entry, disp, pct)
        for i, (entry, disp, pct) in enumerate(rows)
    ]


@dataclass(frozen=True)
class Constraint:
    """Bound on an objective's raw value, display value, or trade-off %."""

    metric: MetricId
    field: str  # "value" | "display" | "tradeoff"
    op: str  # "<=" | ">="
    bound: float

    def satisfied(self, x: float) -> bool:
        return x <= self.bound if self.op == "<=" else x >= self.bound


@dataclass(frozen=True)
class FilterResult:
    front: ParetoFront
    empty_selection: bool


def filter_front(
    front: ParetoFront,
    constraints: list[Constraint],
    transforms: DisplayTransform | None = None,
) -> FilterResult:
    """Subset of the front satisfying every constraint (still non-dominated)."""
    transforms = transforms or DisplayTransform()
    metrics = front.instance.metrics
    for c in constraints:
        if c.metric not in metrics:
            raise UnknownObjective(
                f"metric {c.metric.name} is not an objective of instance "
                f"{front.instance.instance_id}"
            )
        if c.field not in ("value", "display", "tradeoff"):
            raise UnknownObjective(f"unknown constraint field {c.field!r}")

    rows = tradeoff_table(front, transforms)
    kept = []
    for row in rows:
        ok = True
        for c in constraints:
            j = metrics.index(c.metric)
            x = {
                "value": row.entry.values[j],
                "display": row.display_values[j],
                "tradeoff": row.tradeoff_pct[j],
            }[c.field]
            if not c.satisfied(x):
                ok = False
                break
        if ok:
            kept.append(row.entry)
    kept.sort(key=lambda e: (e.values, e.app_ids))
    filtered = ParetoFront(
        front.instance,
        tuple(kept),
        front.provenance,
        front.catalog_fingerprint,
        dict(front.stats),
    )
    return FilterResult(filtered, empty_selection=not kept)


# --- baseline comparison -----------------------------------------------------

def user_solution(catalog: CategoryCatalog) -> tuple[int, ...]:
    """Max-rating app per category; ties go to the smallest app_id."""
    choices = []
    for _, apps in catalog.categories:
        best = min(range(len(apps)), key=lambda i: (-apps[i].rating, apps[i].app_id))
        choices.append(best)
    return tuple(choices)


@dataclass(frozen=True)
class ImprovementReport:
    baseline: ObjectiveVector
    candidate: ObjectiveVector
    # None where the baseline is 0 (improvement undefined for that metric)
    improvement_pct: tuple[float | None, ...]


def improvement_report(
    baseline: ObjectiveVector, candidate: ObjectiveVector
) -> ImprovementReport:
    """Percent improvement per metric; positive = candidate better."""
    if baseline.instance_id != candidate.instance_id:
        raise InstanceMismatch("baseline and candidate solve different instances")
    pcts: list[float | None] = []
    for m, base, cand in zip(baseline.metrics, baseline.values, candidate.values):
        if base == 0:
            pcts.append(None)
        elif DIRECTIONS[m] is MetricDirection.MINIMIZE:
            pcts.append((base - cand) / base * 100.0)
        else:
            pcts.append((cand - base) / base * 100.0)
    return ImprovementReport(baseline, candidate, tuple(pcts))


# --- developer assistance ----------------------------------------------------

@dataclass(frozen=True)
class ReferenceValues:
    """Per (category, metric): best, median, and worst values under the
    metric's direction.  Even-sized categories use the midpoint median."""

    table: dict[tuple[str, MetricId], tuple[float, float, float]]

    def get(self, category_id: str, metric: MetricId) -> tuple[float, float, float]:
        return self.table[(category_id, metric)]


def _median(sorted_vals: list[float]) -> float:
    n = len(sorted_vals)
    mid = n // 2
    if n % 2:
        return sorted_vals[mid]
    return (sorted_vals[mid - 1] + sorted_vals[mid]) / 2.0


def reference_values(catalog: CategoryCatalog) -> ReferenceValues:
    table = {}
    for cid, apps in catalog.categories:
        for m in MetricId:
            vals = sorted(app.metric(m) for app in apps)
            if DIRECTIONS[m] is MetricDirection.MINIMIZE:
                optimal, worst = vals[0], vals[-1]
            else:
                optimal, worst = vals[-1], vals[0]
            table[(cid, m)] = (optimal, _median(vals), worst)
    return ReferenceValues(table)


@dataclass(frozen=True)
class MetricPosition:
    rank: int  # 1-based among category members plus the new app
    out_of: int
    bin_edges: tuple[float, ...]
    bin_counts: tuple[int, ...]  # incumbents only
    new_app_bin: int


@dataclass(frozen=True)
class PositionReport:
    category_id: str
    positions: dict[MetricId, MetricPosition] = field(default_factory=dict)


HISTOGRAM_BINS = 10


def position_app(new_app: AppRecord, catalog: CategoryCatalog) -> PositionReport:
    """Rank the new app per metric within its category and bin the field.

    Ties share the better rank (rank = 1 + number of strictly better
    incumbents).  Histograms use 10 equal-width bins over the combined range.
    """
    new_app.validate()
    try:
        ci = catalog.category_index(new_app.category_id)
    except KeyError:
        raise UnknownCategory(
            f"category {new_app.category_id!r} not in catalog"
        ) from None
    incumbents = catalog.apps(ci)

    positions = {}
    for m in MetricId:
        vals = [app.metric(m) for app in incumbents]
        new_val = new_app.metric(m)
        if DIRECTIONS[m] is MetricDirection.MINIMIZE:
            better = sum(1 for v in vals if v < new_val)
        else:
            better = sum(1 for v in vals if v > new_val)
        rank = better + 1

        lo = min(vals + [new_val])
        hi = max(vals + [new_val])
        width = (hi - lo) / HISTOGRAM_BINS
        edges = tuple(lo + k * width for k in range(HISTOGRAM_BINS + 1))

        def bin_of(v: float) -> int:
            if width == 0:
                return 0
            b = int((v - lo) / width)
            return min(b, HISTOGRAM_BINS - 1)

        counts = [0] * HISTOGRAM_BINS
        for v in vals:
            counts[bin_of(v)] += 1
        positions[m] = MetricPosition(
            rank=rank,
            out_of=len(vals) + 1,
            bin_edges=edges,
            bin_counts=tuple(counts),
            new_app_bin=bin_of(new_val),
        )
    return PositionReport(new_app.category_id, positions)
