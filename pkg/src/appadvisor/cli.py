"""Command-line surface.

Exit codes: 0 success, 2 usage error, 3 data error, 4 search space above the
enumeration cap.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import (
    improvement_report,
    position_app,
    reference_values,
    tradeoff_table,
    user_solution,
)
from .catalog_io import front_to_csv, front_to_json, load_catalog
from .errors import AdvisorError, SearchSpaceTooLarge
from .exhaustive import solve_exhaustive
from .model import (
    CONTEXTS,
    AppRecord,
    BatteryParams,
    METRIC_BY_NAME,
    METRIC_NAMES,
    context_preset,
    instance_from_id,
    instance_from_metrics,
)
from .nsga2 import Nsga2Params, nsga2_solve
from .objectives import DisplayTransform, battery_life_hours, evaluate_solution
from .pareto import reduce_search_space, search_space_size

EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_CAPACITY = 4


def _instance_from_args(args) -> "InstanceSpec":
    selectors = [args.instance is not None, args.metrics is not None, args.context is not None]
    if sum(selectors) != 1:
        raise UsageError("exactly one of --instance, --metrics, --context is required")
    if args.instance is not None:
        if not 1 <= args.instance <= 31:
            raise UsageError(f"--instance must be in [1, 31], got {args.instance}")
        return instance_from_id(args.instance)
    if args.metrics is not None:
        names = [n.strip() for n in args.metrics.split(",") if n.strip()]
        unknown = [n for n in names if n not in METRIC_BY_NAME]
        if unknown:
            raise UsageError(f"unknown metrics: {', '.join(unknown)}")
        return instance_from_metrics({METRIC_BY_NAME[n] for n in names})
    return context_preset(args.context)


class UsageError(Exception):
    pass


def _battery(args) -> BatteryParams:
    return BatteryParams(args.battery_ah, args.battery_v)


def cmd_solve(args) -> int:
    catalog = load_catalog(args.catalog)
    instance = _instance_from_args(args)
    transforms = DisplayTransform(battery=_battery(args))
    if args.solver == "exhaustive":
        front = solve_exhaustive(catalog, instance, workers=args.workers)
    else:
        params = Nsga2Params(
            population_size=args.pop,
            generations=args.gens,
            crossover_prob=args.pc,
            mutation_prob=args.pm,
            seed=args.seed,
        )
        front = nsga2_solve(catalog, instance, params)
    text = (
        front_to_json(front, transforms)
        if args.format == "json"
        else front_to_csv(front, transforms)
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_reduce(args) -> int:
    catalog = load_catalog(args.catalog)
    instance = instance_from_id(args.instance)
    reduced = reduce_search_space(catalog, instance)
    print(f"instance {instance.instance_id} "
          f"({','.join(METRIC_NAMES[m] for m in instance.metrics)})")
    for (cid, apps), kept in zip(catalog.categories, reduced.sizes):
        print(f"  {cid}: {kept} of {len(apps)}")
    print(f"search space: {search_space_size(catalog):,} -> "
          f"{search_space_size(reduced):,}")
    return 0


def cmd_contexts(_args) -> int:
    for name, iid in sorted(CONTEXTS.items()):
        inst = instance_from_id(iid)
        metrics = ",".join(METRIC_NAMES[m] for m in inst.metrics)
        print(f"{name}: instance {iid} ({metrics})")
    return 0


def cmd_compare(args) -> int:
    catalog = load_catalog(args.catalog)
    instance = instance_from_id(args.instance)
    baseline_choices = user_solution(catalog)
    if args.solution:
        wanted = args.solution.split(",")
        if len(wanted) != catalog.n_categories:
            raise UsageError(
                f"--solution needs {catalog.n_categories} app ids, got {len(wanted)}"
            )
        baseline_choices = tuple(
            next(i for i, a in enumerate(catalog.apps(c)) if a.app_id == aid)
            for c, aid in enumerate(wanted)
        )
    baseline = evaluate_solution(baseline_choices, catalog, instance)
    front = solve_exhaustive(catalog, instance)
    print("baseline:", " ".join(
        f"{METRIC_NAMES[m]}={v:.2f}" for m, v in zip(instance.metrics, baseline.values)
    ))
    for row in tradeoff_table(front):
        candidate = evaluate_solution(row.entry.choices, catalog, instance)
        report = improvement_report(baseline, candidate)
        pcts = " ".join(
            f"{METRIC_NAMES[m]}={'n/a' if p is None else format(p, '.2f')}"
            for m, p in zip(instance.metrics, report.improvement_pct)
        )
        print(f"solution {row.solution_index}: {pcts}")
    return 0


def _parse_new_app_row(row: str) -> AppRecord:
    parts = row.split(",")
    if len(parts) != 7:
        raise UsageError("--new-app needs app_id,category,rating,power_w,cpu_pct,mem_mb,net_mb")
    return AppRecord(
        app_id=parts[0],
        category_id=parts[1],
        rating=float(parts[2]),
        power_w=float(parts[3]),
        cpu_pct=float(parts[4]),
        mem_mb=float(parts[5]),
        net_mb=float(parts[6]),
    )


def cmd_reference(args) -> int:
    catalog = load_catalog(args.catalog)
    battery = _battery(args)
    refs = reference_values(catalog)
    from .model import MetricId

    for cid, _ in catalog.categories:
        print(cid)
        for m in MetricId:
            opt, med, worst = refs.get(cid, m)
            line = f"  {METRIC_NAMES[m]}: optimal={opt:.2f} median={med:.2f} worst={worst:.2f}"
            if m is MetricId.POWER:
                line += (
                    f"  (battery life: optimal={battery_life_hours(opt, battery):.2f}h"
                    f" median={battery_life_hours(med, battery):.2f}h"
                    f" worst={battery_life_hours(worst, battery):.2f}h)"
                    if opt > 0 and med > 0 and worst > 0
                    else ""
                )
            print(line)
    if args.new_app:
        new_app = _parse_new_app_row(args.new_app)
        report = position_app(new_app, catalog)
        print(f"new app {new_app.app_id!r} in {new_app.category_id!r}:")
        for m, pos in report.positions.items():
            print(
                f"  {METRIC_NAMES[m]}: rank {pos.rank} of {pos.out_of}; "
                f"bins={list(pos.bin_counts)} new_app_bin={pos.new_app_bin}"
            )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    catalog = load_catalog(args.catalog) if args.catalog else None
    app = create_app(preloaded_catalog=catalog)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="appadvisor",
        description="Pareto-optimal app-set advisor over per-category catalogs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_battery(p):
        p.add_argument("--battery-ah", type=float, default=2.10)
        p.add_argument("--battery-v", type=float, default=3.8)

    p = sub.add_parser("solve", help="compute a Pareto front and trade-off table")
    p.add_argument("--catalog", required=True)
    p.add_argument("--instance", type=int)
    p.add_argument("--metrics", help="comma-separated: power,cpu,memory,network,rating")
    p.add_argument("--context", choices=sorted(CONTEXTS))
    p.add_argument("--solver", choices=["exhaustive", "nsga2"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pop", type=int, default=200)
    p.add_argument("--gens", type=int, default=300)
    p.add_argument("--pc", type=float, default=0.9)
    p.add_argument("--pm", type=float, default=0.125)
    p.add_argument("--workers", type=int, default=1)
    add_battery(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="per-category survivor counts and space sizes")
    p.add_argument("--catalog", required=True)
    p.add_argument("--instance", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("contexts", help="list context presets")
    p.set_defaults(func=cmd_contexts)

    p = sub.add_parser("compare", help="improvement of front picks vs the max-rating baseline")
    p.add_argument("--catalog", required=True)
    p.add_argument("--instance", type=int, required=True)
    p.add_argument("--solution", help="comma-separated app ids, one per category")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("reference", help="per-category reference values (and new-app position)")
    p.add_argument("--catalog", required=True)
    p.add_argument("--new-app", help="CSV row: app_id,category,rating,power_w,cpu_pct,mem_mb,net_mb")
    add_battery(p)
    p.set_defaults(func=cmd_reference)

    p = sub.add_parser("serve", help="start the advisor HTTP service")
    p.add_argument("--catalog")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (AdvisorError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
