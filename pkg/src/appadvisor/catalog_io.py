"""CSV catalog ingestion and result serialization.

Catalog schema (exact header, UTF-8, ``.`` decimals, no thousands
separators)::

    app_id,category,rating,power_w,cpu_pct,mem_mb,net_mb

Machine outputs use shortest round-trip float formatting; 2-decimal rounding
happens only in the human-readable table view.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json

from .analysis import TradeoffRow, tradeoff_table
from .errors import AdvisorError, ParseError, ValidationError
from .exhaustive import ParetoFront
from .model import AppRecord, CategoryCatalog, METRIC_NAMES, validate_catalog
from .objectives import DisplayTransform

CSV_HEADER = ["app_id", "category", "rating", "power_w", "cpu_pct", "mem_mb", "net_mb"]

_FLOAT_COLUMNS = ["rating", "power_w", "cpu_pct", "mem_mb", "net_mb"]


def parse_catalog_text(text: str) -> CategoryCatalog:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty catalog file") from None
    if header != CSV_HEADER:
        raise ParseError(
            f"bad header {header!r}, expected {','.join(CSV_HEADER)}",
            row=1,
            column="header",
        )
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise ParseError(f"expected {len(CSV_HEADER)} fields, got {len(row)}", row=lineno)
        fields = dict(zip(CSV_HEADER, row))
        parsed: dict[str, float] = {}
        for col in _FLOAT_COLUMNS:
            try:
                parsed[col] = float(fields[col])
            except ValueError:
                raise ParseError(
                    f"cannot parse {fields[col]!r} as a number", row=lineno, column=col
                ) from None
        records.append(
            AppRecord(
                app_id=fields["app_id"],
                category_id=fields["category"],
                rating=parsed["rating"],
                power_w=parsed["power_w"],
                cpu_pct=parsed["cpu_pct"],
                mem_mb=parsed["mem_mb"],
                net_mb=parsed["net_mb"],
            )
        )
    try:
        return validate_catalog(records)
    except AdvisorError as exc:
        raise ValidationError(str(exc)) from exc


def load_catalog(path) -> CategoryCatalog:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog_text(fh.read())


def serialize_catalog_csv(catalog: CategoryCatalog) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for _, apps in catalog.categories:
        for a in apps:
            writer.writerow(
                [
                    a.app_id,
                    a.category_id,
                    repr(a.rating),
                    repr(a.power_w),
                    repr(a.cpu_pct),
                    repr(a.mem_mb),
                    repr(a.net_mb),
                ]
            )
    return out.getvalue()


def catalog_fingerprint(catalog: CategoryCatalog) -> str:
    """Content hash of the catalog (canonical CSV serialization)."""
    return hashlib.sha256(serialize_catalog_csv(catalog).encode()).hexdigest()


# --- front serialization ----------------------------------------------------

def front_to_dict(
    front: ParetoFront, transforms: DisplayTransform | None = None
) -> dict:
    """JSON envelope: instance, solver, fingerprint, rows, and stats."""
    transforms = transforms or DisplayTransform()
    metrics = front.instance.metrics
    names = [METRIC_NAMES[m] for m in metrics]
    display_names = [transforms.display_name(m) for m in metrics]
    rows = tradeoff_table(front, transforms) if front.entries else []
    doc = {
        "instance": front.instance.instance_id,
        "metrics": names,
        "solver": front.provenance.method,
        "catalog_fingerprint": front.catalog_fingerprint,
        "front": [
            {
                "solution": r.solution_index,
                "apps": list(r.entry.app_ids),
                "objectives": dict(zip(names, r.entry.values)),
                "display": dict(zip(display_names, r.display_values)),
                "tradeoff_pct": dict(zip(names, r.tradeoff_pct)),
            }
            for r in rows
        ],
        "stats": {k: v for k, v in front.stats.items()},
    }
    if front.provenance.seed is not None:
        doc["seed"] = front.provenance.seed
    if front.provenance.params is not None:
        doc["params"] = front.provenance.params
    return doc


def front_to_json(front: ParetoFront, transforms: DisplayTransform | None = None) -> str:
    return json.dumps(front_to_dict(front, transforms), indent=2) + "\n"


def front_to_csv(front: ParetoFront, transforms: DisplayTransform | None = None) -> str:
    transforms = transforms or DisplayTransform()
    metrics = front.instance.metrics
    names = [METRIC_NAMES[m] for m in metrics]
    rows = tradeoff_table(front, transforms) if front.entries else []
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["solution", "apps"]
    for m, name in zip(metrics, names):
        header += [name, f"{transforms.display_name(m)}_display", f"{name}_tradeoff_pct"]
    writer.writerow(header)
    for r in rows:
        row = [r.solution_index, ";".join(r.entry.app_ids)]
        for j in range(len(metrics)):
            row += [repr(r.entry.values[j]), repr(r.display_values[j]), repr(r.tradeoff_pct[j])]
        writer.writerow(row)
    return out.getvalue()


def stacked_bar_data(rows: list[TradeoffRow], metric_names: list[str]) -> list[dict]:
    """Per solution, the (objective, tradeoff_pct) series behind the stacked
    bar chart."""
    return [
        {
            "solution": r.solution_index,
            "segments": [
                {"objective": name, "tradeoff_pct": pct}
                for name, pct in zip(metric_names, r.tradeoff_pct)
            ],
        }
        for r in rows
    ]
