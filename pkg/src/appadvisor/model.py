"""Catalog, metric, instance, and solution types.

The optimization works over five metrics: four performance metrics that are
minimized (average power in W, CPU load in %, memory in MB, network traffic
in MB) and the marketplace rating in [1, 5], which is maximized.  Every
non-empty subset of the five metrics is a numbered problem instance (31 in
total), and four named contexts of use map to specific instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import (
    DuplicateAppId,
    EmptyInput,
    EmptySubset,
    MetricOutOfRange,
    UnknownContext,
)


class MetricId(IntEnum):
    """The five optimizable metrics, in canonical column order."""

    POWER = 0
    CPU = 1
    MEMORY = 2
    NETWORK = 3
    RATING = 4


class MetricDirection(Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


#: Optimization direction of each metric. Rating is the only maximized one.
DIRECTIONS: dict[MetricId, MetricDirection] = {
    MetricId.POWER: MetricDirection.MINIMIZE,
    MetricId.CPU: MetricDirection.MINIMIZE,
    MetricId.MEMORY: MetricDirection.MINIMIZE,
    MetricId.NETWORK: MetricDirection.MINIMIZE,
    MetricId.RATING: MetricDirection.MAXIMIZE,
}

#: Units used for display / serialization.
METRIC_UNITS: dict[MetricId, str] = {
    MetricId.POWER: "W",
    MetricId.CPU: "%",
    MetricId.MEMORY: "MB",
    MetricId.NETWORK: "MB",
    MetricId.RATING: "",
}

METRIC_NAMES: dict[MetricId, str] = {
    MetricId.POWER: "power",
    MetricId.CPU: "cpu",
    MetricId.MEMORY: "memory",
    MetricId.NETWORK: "network",
    MetricId.RATING: "rating",
}

METRIC_BY_NAME: dict[str, MetricId] = {v: k for k, v in METRIC_NAMES.items()}


@dataclass(frozen=True)
class AppRecord:
    """One catalog item: an app and its measured metrics."""

    app_id: str
    category_id: str
    rating: float
    power_w: float
    cpu_pct: float
    mem_mb: float
    net_mb: float

    def metric(self, m: MetricId) -> float:
        return (self.power_w, self.cpu_pct, self.mem_mb, self.net_mb, self.rating)[m]

    def validate(self) -> None:
        import math

        if not self.app_id:
            raise MetricOutOfRange("app_id must be non-empty")
        fields = {
            "rating": self.rating,
            "power_w": self.power_w,
            "cpu_pct": self.cpu_pct,
            "mem_mb": self.mem_mb,
            "net_mb": self.net_mb,
        }
        for name, value in fields.items():
            if not math.isfinite(value):
                raise MetricOutOfRange(f"app {self.app_id!r}: {name} is not finite")
        if not 1.0 <= self.rating <= 5.0:
            raise MetricOutOfRange(
                f"app {self.app_id!r}: rating {self.rating} outside [1, 5]"
            )
        for name in ("power_w", "cpu_pct", "mem_mb", "net_mb"):
            if fields[name] < 0:
                raise MetricOutOfRange(f"app {self.app_id!r}: {name} is negative")
        if self.cpu_pct > 100:
            raise MetricOutOfRange(
                f"app {self.app_id!r}: cpu_pct {self.cpu_pct} above 100"
            )


class CategoryCatalog:
    """Apps grouped by category, in deterministic (source) order.

    A solution picks exactly one app per category, so every category must be
    non-empty and app ids must be unique across the whole catalog.
    """

    def __init__(self, categories: list[tuple[str, list[AppRecord]]]):
        self.categories: tuple[tuple[str, tuple[AppRecord, ...]], ...] = tuple(
            (cid, tuple(apps)) for cid, apps in categories
        )

    @property
    def n_categories(self) -> int:
        return len(self.categories)

    @property
    def category_ids(self) -> tuple[str, ...]:
        return tuple(cid for cid, _ in self.categories)

    def apps(self, i: int) -> tuple[AppRecord, ...]:
        return self.categories[i][1]

    def category_index(self, category_id: str) -> int:
        for i, (cid, _) in enumerate(self.categories):
            if cid == category_id:
                return i
        raise KeyError(category_id)

    def all_records(self) -> list[AppRecord]:
        return [app for _, apps in self.categories for app in apps]

    def __eq__(self, other) -> bool:
        return isinstance(other, CategoryCatalog) and self.categories == other.categories

    def __repr__(self) -> str:
        sizes = ",".join(str(len(apps)) for _, apps in self.categories)
        return f"CategoryCatalog(N={self.n_categories}, sizes=[{sizes}])"


def validate_catalog(raw_records: list[AppRecord]) -> CategoryCatalog:
    """Group records by category (first-seen order) after checking invariants."""
    if not raw_records:
        raise EmptyInput("catalog has no records")
    seen_ids: set[str] = set()
    grouped: dict[str, list[AppRecord]] = {}
    for rec in raw_records:
        rec.validate()
        if rec.app_id in seen_ids:
            raise DuplicateAppId(f"duplicate app_id {rec.app_id!r}")
        seen_ids.add(rec.app_id)
        grouped.setdefault(rec.category_id, []).append(rec)
    return CategoryCatalog(list(grouped.items()))


# --- instances -------------------------------------------------------------

def _canonical_subsets() -> list[tuple[MetricId, ...]]:
    # All non-empty subsets, by cardinality then lexicographic metric order.
    out: list[tuple[MetricId, ...]] = []
    for k in range(1, 6):
        out.extend(itertools.combinations(list(MetricId), k))
    return out


_SUBSETS: list[tuple[MetricId, ...]] = _canonical_subsets()
_SUBSET_TO_ID: dict[frozenset, int] = {
    frozenset(s): i + 1 for i, s in enumerate(_SUBSETS)
}


@dataclass(frozen=True)
class InstanceSpec:
    """One of the 31 canonical problem instances: a metric subset."""

    instance_id: int
    metrics: tuple[MetricId, ...]  # canonical metric order

    @property
    def m(self) -> int:
        return len(self.metrics)

    def directions(self) -> tuple[MetricDirection, ...]:
        return tuple(DIRECTIONS[m] for m in self.metrics)


def instance_from_metrics(metrics) -> InstanceSpec:
    """Map a metric subset to its canonical instance number (1..31)."""
    mset = frozenset(MetricId(m) for m in metrics)
    if not mset:
        raise EmptySubset("instance needs at least one metric")
    iid = _SUBSET_TO_ID[mset]
    return InstanceSpec(iid, tuple(sorted(mset)))


def instance_from_id(instance_id: int) -> InstanceSpec:
    if not 1 <= instance_id <= 31:
        raise EmptySubset(f"instance id {instance_id} outside [1, 31]")
    return InstanceSpec(instance_id, _SUBSETS[instance_id - 1])


def all_instances() -> list[InstanceSpec]:
    return [instance_from_id(i) for i in range(1, 32)]


#: Named contexts of use and the instance each one maps to.
CONTEXTS: dict[str, int] = {
    "travel-abroad": 8,
    "old-devices": 10,
    "driving-unplugged": 1,
    "driving-plugged": 22,
}


def context_preset(name: str) -> InstanceSpec:
    try:
        return instance_from_id(CONTEXTS[name])
    except KeyError:
        known = ", ".join(sorted(CONTEXTS))
        raise UnknownContext(f"unknown context {name!r}; expected one of: {known}") from None


# --- solutions and battery ------------------------------------------------

SolutionVector = tuple  # one app index per category


@dataclass(frozen=True)
class BatteryParams:
    """Battery charge (Ah) and voltage (V) used to turn power into hours."""

    capacity_ah: float = 2.10
    voltage_v: float = 3.8

    def __post_init__(self):
        if self.capacity_ah <= 0 or self.voltage_v <= 0:
            raise MetricOutOfRange("battery parameters must be strictly positive")


DEFAULT_BATTERY = BatteryParams()
