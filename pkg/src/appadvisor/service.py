"""HTTP facade for interactive front navigation.

All state is in-memory and keyed by opaque ids; restarting the service
invalidates them.  Fronts are serialized once when a job completes, so
repeated GETs return byte-identical bodies.
"""

from __future__ import annotations

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .analysis import (
    Constraint,
    filter_front,
    improvement_report,
    position_app,
    tradeoff_table,
    user_solution,
)
from .catalog_io import catalog_fingerprint, front_to_dict, parse_catalog_text
from .errors import AdvisorError, ParseError, SearchSpaceTooLarge, ValidationError
from .exhaustive import enum_cap, solve_exhaustive
from .model import (
    CONTEXTS,
    AppRecord,
    BatteryParams,
    METRIC_BY_NAME,
    METRIC_NAMES,
    all_instances,
    context_preset,
    instance_from_id,
)
from .nsga2 import Nsga2Params, nsga2_solve
from .objectives import DisplayTransform, evaluate_solution
from .pareto import reduce_search_space, search_space_size


@dataclass
class SolveJob:
    job_id: str
    request: dict
    status: str = "pending"  # pending | running | done | failed
    front_id: str | None = None
    error: str | None = None


@dataclass
class _State:
    catalogs: dict = field(default_factory=dict)
    jobs: dict = field(default_factory=dict)
    fronts: dict = field(default_factory=dict)  # front_id -> (front, transforms, body)
    lock: threading.Lock = field(default_factory=threading.Lock)
    pool: ThreadPoolExecutor = field(default_factory=lambda: ThreadPoolExecutor(max_workers=2))


def _battery_from(payload: dict) -> BatteryParams:
    b = payload.get("battery") or {}
    return BatteryParams(b.get("capacity_ah", 2.10), b.get("voltage_v", 3.8))


def _constraints_from(payload) -> list[Constraint]:
    out = []
    for item in payload:
        try:
            metric = METRIC_BY_NAME[item["metric"]]
            fieldname = item.get("field", "tradeoff")
            op = item["op"]
            bound = float(item["bound"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed constraint {item!r}: {exc}") from exc
        if op not in ("<=", ">="):
            raise ValueError(f"constraint op must be <= or >=, got {op!r}")
        out.append(Constraint(metric, fieldname, op, bound))
    return out


def create_app(preloaded_catalog=None) -> FastAPI:
    app = FastAPI(title="appadvisor")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    state = _State()
    if preloaded_catalog is not None:
        cid = str(uuid.uuid4())
        state.catalogs[cid] = preloaded_catalog

    @app.exception_handler(AdvisorError)
    async def _domain_error(_req: Request, exc: AdvisorError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/catalog")
    async def upload_catalog(request: Request):
        body = (await request.body()).decode("utf-8")
        try:
            catalog = parse_catalog_text(body)
        except (ParseError, ValidationError) as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        cid = str(uuid.uuid4())
        with state.lock:
            state.catalogs[cid] = catalog
        return {
            "catalog_id": cid,
            "categories": [
                {"id": c, "count": len(apps)} for c, apps in catalog.categories
            ],
            "fingerprint": catalog_fingerprint(catalog),
        }

    @app.get("/contexts")
    async def contexts():
        return [
            {
                "name": name,
                "instance": iid,
                "metrics": [METRIC_NAMES[m] for m in instance_from_id(iid).metrics],
            }
            for name, iid in sorted(CONTEXTS.items())
        ]

    @app.get("/instances")
    async def instances():
        return [
            {"instance": inst.instance_id, "metrics": [METRIC_NAMES[m] for m in inst.metrics]}
            for inst in all_instances()
        ]

    def _run_job(job: SolveJob, catalog, instance, payload):
        with state.lock:
            job.status = "running"
        try:
            solver = payload.get("solver", "exhaustive")
            transforms = DisplayTransform(battery=_battery_from(payload))
            if solver == "exhaustive":
                front = solve_exhaustive(catalog, instance)
            else:
                params = payload.get("params") or {}
                front = nsga2_solve(
                    catalog,
                    instance,
                    Nsga2Params(
                        population_size=params.get("population_size", 200),
                        generations=params.get("generations", 300),
                        crossover_prob=params.get("crossover_prob", 0.9),
                        mutation_prob=params.get("mutation_prob", 0.125),
                        seed=params.get("seed", 0),
                    ),
                )
            front_id = str(uuid.uuid4())
            body = json.dumps(front_to_dict(front, transforms)).encode()
            with state.lock:
                state.fronts[front_id] = (front, transforms, body)
                job.front_id = front_id
                job.status = "done"
        except Exception as exc:  # job must record any failure
            with state.lock:
                job.status = "failed"
                job.error = str(exc)

    @app.post("/solve", status_code=202)
    async def solve(payload: dict):
        cid = payload.get("catalog_id")
        with state.lock:
            catalog = state.catalogs.get(cid)
        if catalog is None:
            return JSONResponse(status_code=404, content={"detail": "unknown catalog_id"})
        try:
            if "context" in payload:
                instance = context_preset(payload["context"])
            elif "instance" in payload:
                instance = instance_from_id(int(payload["instance"]))
            else:
                return JSONResponse(
                    status_code=422, content={"detail": "instance or context required"}
                )
        except AdvisorError as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc)})

        if payload.get("solver", "exhaustive") == "exhaustive":
            size = search_space_size(reduce_search_space(catalog, instance))
            cap = enum_cap()
            if size > cap:
                return JSONResponse(
                    status_code=409,
                    content={"detail": "search space above cap", "size": size, "cap": cap},
                )

        job = SolveJob(job_id=str(uuid.uuid4()), request=payload)
        with state.lock:
            state.jobs[job.job_id] = job
        state.pool.submit(_run_job, job, catalog, instance, payload)
        return {"job_id": job.job_id, "status": job.status}

    @app.get("/jobs/{job_id}")
    async def job_status(job_id: str):
        with state.lock:
            job = state.jobs.get(job_id)
        if job is None:
            return JSONResponse(status_code=404, content={"detail": "unknown job id"})
        doc = {"job_id": job.job_id, "status": job.status}
        if job.front_id:
            doc["front_id"] = job.front_id
        if job.error:
            doc["error"] = job.error
        return doc

    @app.get("/fronts/{front_id}")
    async def get_front(front_id: str):
        with state.lock:
            stored = state.fronts.get(front_id)
        if stored is None:
            return JSONResponse(status_code=404, content={"detail": "unknown front id"})
        _front, _transforms, body = stored
        return Response(content=body, media_type="application/json")

    @app.post("/fronts/{front_id}/filter")
    async def filter_view(front_id: str, payload: dict):
        with state.lock:
            stored = state.fronts.get(front_id)
        if stored is None:
            return JSONResponse(status_code=404, content={"detail": "unknown front id"})
        front, transforms, _body = stored
        try:
            constraints = _constraints_from(payload.get("constraints", []))
            result = filter_front(front, constraints, transforms)
        except (ValueError, AdvisorError) as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc)})
        doc = front_to_dict(result.front, transforms)
        doc["empty_selection"] = result.empty_selection
        return doc

    @app.post("/catalogs/{catalog_id}/compare")
    async def compare(catalog_id: str, payload: dict):
        with state.lock:
            catalog = state.catalogs.get(catalog_id)
        if catalog is None:
            return JSONResponse(status_code=404, content={"detail": "unknown catalog_id"})
        instance = instance_from_id(int(payload["instance"]))
        baseline_choices = user_solution(catalog)
        if payload.get("solution"):
            ids = payload["solution"]
            baseline_choices = tuple(
                next(i for i, a in enumerate(catalog.apps(c)) if a.app_id == aid)
                for c, aid in enumerate(ids)
            )
        baseline = evaluate_solution(baseline_choices, catalog, instance)
        front = solve_exhaustive(catalog, instance)
        names = [METRIC_NAMES[m] for m in instance.metrics]
        rows = []
        for row in tradeoff_table(front):
            candidate = evaluate_solution(row.entry.choices, catalog, instance)
            rep = improvement_report(baseline, candidate)
            rows.append(
                {
                    "solution": row.solution_index,
                    "apps": list(row.entry.app_ids),
                    "improvement_pct": dict(zip(names, rep.improvement_pct)),
                }
            )
        return {
            "instance": instance.instance_id,
            "baseline": {
                "apps": [
                    catalog.apps(i)[c].app_id for i, c in enumerate(baseline_choices)
                ],
                "objectives": dict(zip(names, baseline.values)),
            },
            "solutions": rows,
        }

    @app.post("/catalogs/{catalog_id}/position")
    async def position(catalog_id: str, payload: dict):
        with state.lock:
            catalog = state.catalogs.get(catalog_id)
        if catalog is None:
            return JSONResponse(status_code=404, content={"detail": "unknown catalog_id"})
        row = payload["new_app"]
        try:
            new_app = AppRecord(
                app_id=row["app_id"],
                category_id=row["category"],
                rating=float(row["rating"]),
                power_w=float(row["power_w"]),
                cpu_pct=float(row["cpu_pct"]),
                mem_mb=float(row["mem_mb"]),
                net_mb=float(row["net_mb"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            return JSONResponse(status_code=422, content={"detail": f"malformed new_app: {exc}"})
        report = position_app(new_app, catalog)
        return {
            "category": report.category_id,
            "positions": {
                METRIC_NAMES[m]: {
                    "rank": p.rank,
                    "out_of": p.out_of,
                    "bin_edges": list(p.bin_edges),
                    "bin_counts": list(p.bin_counts),
                    "new_app_bin": p.new_app_bin,
                }
                for m, p in report.positions.items()
            },
        }

    return app
