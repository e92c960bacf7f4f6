"""Objective evaluation: per-instance averages plus display conversions.

Each objective of a solution is the arithmetic mean of the chosen apps'
metric values.  Power is optimized in Watts (minimize) and converted to
battery life in hours only for display.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveLoad
from .model import (
    DEFAULT_BATTERY,
    BatteryParams,
    CategoryCatalog,
    InstanceSpec,
    MetricDirection,
    MetricId,
)


@dataclass(frozen=True)
class ObjectiveVector:
    """Objective values of one solution, in the instance's metric order."""

    instance_id: int
    metrics: tuple[MetricId, ...]
    values: tuple[float, ...]

    def value(self, m: MetricId) -> float:
        return self.values[self.metrics.index(m)]


def evaluate_solution(
    solution, catalog: CategoryCatalog, instance: InstanceSpec
) -> ObjectiveVector:
    """Mean of each instance metric over the chosen apps (one per category)."""
    n = catalog.n_categories
    if len(solution) != n:
        raise IndexError(f"solution length {len(solution)} != {n} categories")
    apps = [catalog.apps(i)[solution[i]] for i in range(n)]
    values = []
    for m in instance.metrics:
        total = 0.0
        for app in apps:
            total += app.metric(m)
        values.append(total / n)
    return ObjectiveVector(instance.instance_id, instance.metrics, tuple(values))


def category_matrices(
    catalog: CategoryCatalog, instance: InstanceSpec
) -> list[np.ndarray]:
    """Per-category (n_apps, m) metric matrices in the instance's metric order."""
    mats = []
    for i in range(catalog.n_categories):
        rows = [[app.metric(m) for m in instance.metrics] for app in catalog.apps(i)]
        mats.append(np.asarray(rows, dtype=np.float64))
    return mats


def orientation_signs(instance: InstanceSpec) -> np.ndarray:
    """+1 for minimized metrics, -1 for maximized ones (rating)."""
    return np.asarray(
        [1.0 if d is MetricDirection.MINIMIZE else -1.0 for d in instance.directions()]
    )


def evaluate_batch(mats: list[np.ndarray], genes: np.ndarray) -> np.ndarray:
    """Vectorized evaluate_solution over a (k, N) gene matrix.

    Accumulates categories left to right, matching the scalar path bit for bit.
    """
    acc = mats[0][genes[:, 0]].astype(np.float64, copy=True)
    for i in range(1, len(mats)):
        acc += mats[i][genes[:, i]]
    acc /= len(mats)
    return acc


def battery_life_hours(load_w: float, params: BatteryParams = DEFAULT_BATTERY) -> float:
    """Hours of battery at a given average load: charge x voltage / load."""
    if load_w <= 0:
        raise NonPositiveLoad(f"load must be positive, got {load_w}")
    return (params.capacity_ah * params.voltage_v) / load_w


def energy_joules(power_w: float, seconds: float) -> float:
    """Energy consumed at constant power over a time span."""
    return power_w * seconds


@dataclass(frozen=True)
class DisplayTransform:
    """How objectives are shown to the user.

    When ``battery`` is set, the power objective is displayed as battery life
    in hours, which flips its direction to maximize for presentation.
    """

    battery: BatteryParams | None = field(default_factory=BatteryParams)

    def display_value(self, m: MetricId, raw: float) -> float:
        if m is MetricId.POWER and self.battery is not None:
            return battery_life_hours(raw, self.battery)
        return raw

    def display_direction(self, m: MetricId) -> MetricDirection:
        from .model import DIRECTIONS

        if m is MetricId.POWER and self.battery is not None:
            return MetricDirection.MAXIMIZE
        return DIRECTIONS[m]

    def display_name(self, m: MetricId) -> str:
        from .model import METRIC_NAMES

        if m is MetricId.POWER and self.battery is not None:
            return "battery_h"
        return METRIC_NAMES[m]


RAW_DISPLAY = DisplayTransform(battery=None)
