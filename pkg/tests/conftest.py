import numpy as np
import pytest

from appadvisor import AppRecord, validate_catalog


def make_record(app_id, category, rating=4.0, power=1.0, cpu=10.0, mem=50.0, net=0.5):
    return AppRecord(
        app_id=app_id,
        category_id=category,
        rating=rating,
        power_w=power,
        cpu_pct=cpu,
        mem_mb=mem,
        net_mb=net,
    )


def random_catalog(rng: np.random.Generator, n_categories: int, max_apps: int,
                   min_apps: int = 1):
    """Seeded random catalog with plausible metric ranges."""
    records = []
    for c in range(n_categories):
        n_apps = int(rng.integers(min_apps, max_apps + 1))
        for a in range(n_apps):
            records.append(
                AppRecord(
                    app_id=f"app-{c}-{a}",
                    category_id=f"cat-{c}",
                    rating=float(np.round(1.0 + 4.0 * rng.random(), 2)),
                    power_w=float(np.round(rng.random() * 5.0, 3)),
                    cpu_pct=float(np.round(rng.random() * 100.0, 2)),
                    mem_mb=float(np.round(rng.random() * 200.0, 2)),
                    net_mb=float(np.round(rng.random() * 3.0, 3)),
                )
            )
    return validate_catalog(records)


@pytest.fixture
def small_catalog():
    rng = np.random.default_rng(12345)
    return random_catalog(rng, n_categories=3, max_apps=4, min_apps=2)


@pytest.fixture
def seven_by_three_catalog():
    rng = np.random.default_rng(777)
    return random_catalog(rng, n_categories=7, max_apps=3, min_apps=3)
