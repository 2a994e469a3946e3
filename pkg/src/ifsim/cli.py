"""Command-line client for the compile/simulate/verify service.

Subcommands build the same request models the HTTP endpoints accept and, by
default, call the handlers in process; pass --server URL to talk to a
running instance instead.  Exit codes: 0 success, 1 a verification
threshold failed, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

import httpx
import pydantic

from .scenario import ScenarioError
from .service import models
from .verify import CheckRow, cost_comparison_csv, rows_to_csv

USAGE_ERROR = 2
THRESHOLD_ERROR = 1


def _fail(message: str, code: int = USAGE_ERROR) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class Client:
    """Dispatches requests in process or to a remote server."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def post(self, route: str, request: pydantic.BaseModel,
             response_model: type[pydantic.BaseModel]) -> pydantic.BaseModel:
        if self.server is None:
            from fastapi import HTTPException

            from .service.app import compile_gate, simulate, sweep, verify
            handler = {
                "/compile": compile_gate,
                "/simulate": simulate,
                "/verify": verify,
                "/trotter-sweep": sweep,
            }[route]
            try:
                return handler(request)
            except HTTPException as exc:
                raise ScenarioError(str(exc.detail)) from None
        reply = httpx.post(f"{self.server}{route}",
                           json=request.model_dump(mode="json"), timeout=600.0)
        if reply.status_code != 200:
            raise ScenarioError(f"server returned {reply.status_code}: {reply.text}")
        return response_model.model_validate(reply.json())


def _load_config(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read config {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: config must be a JSON object")
    return doc


def _scenario_spec(doc: dict) -> models.ScenarioSpec:
    try:
        return models.ScenarioSpec.model_validate(doc)
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ScenarioError(f"{where}: {first['msg']}") from None


def cmd_compile(args, client: Client) -> int:
    doc = _load_config(args.config)
    spec = _scenario_spec(doc)
    if len(spec.program) != 1:
        raise ScenarioError("compile expects a config whose program holds "
                            f"exactly one gate, got {len(spec.program)}")
    request = models.CompileRequest(architecture=spec.architecture,
                                    gate=spec.program[0],
                                    synthesis=spec.synthesis)
    reply = client.post("/compile", request, models.CompileResponse)
    out_dir = Path(args.out)
    target = out_dir / f"{Path(args.config).stem}.schedule.json"
    _write_atomic(target, _dump(reply.schedule))
    print(_dump({"schedule_file": str(target),
                 "cost": reply.cost.model_dump()}), end="")
    return 0


def cmd_simulate(args, client: Client) -> int:
    doc = _load_config(args.config)
    if args.seed is not None:
        doc["seed"] = args.seed
    request = models.SimulateRequest(scenario=_scenario_spec(doc))
    reply = client.post("/simulate", request, models.SimulateResponse)
    text = _dump(reply.model_dump(exclude_none=True))
    if args.out:
        _write_atomic(Path(args.out) / f"{Path(args.config).stem}.result.json", text)
    print(text, end="")
    return 0


def _emit_rows(rows: list[CheckRow], args, stem: str) -> int:
    csv_text = rows_to_csv(rows)
    json_text = _dump({
        "rows": [r.__dict__ for r in rows],
        "passed": all(r.passed for r in rows),
    })
    if args.out:
        _write_atomic(Path(args.out) / f"{stem}.csv", csv_text)
        _write_atomic(Path(args.out) / f"{stem}.json", json_text)
    print(csv_text if args.format == "csv" else json_text, end="")
    failed = [r for r in rows if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(rows)} checks failed", file=sys.stderr)
        return THRESHOLD_ERROR
    return 0


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ScenarioError(f"{flag}: expected a comma-separated number list, "
                            f"got {text!r}") from None


def _parse_int_list(text: str, flag: str) -> list[int]:
    values = _parse_float_list(text, flag)
    if any(v != int(v) for v in values):
        raise ScenarioError(f"{flag}: expected integers, got {text!r}")
    return [int(v) for v in values]


def cmd_verify(args, client: Client) -> int:
    request = models.VerifyRequest(
        suite=args.suite,
        ns=_parse_int_list(args.n, "--n") if args.n else None,
        jz_factors=_parse_float_list(args.jz, "--jz") if args.jz else None,
    )
    reply = client.post("/verify", request, models.VerifyResponse)
    rows = [CheckRow(r.suite, r.case, r.metric, r.value, r.threshold, r.passed)
            for r in reply.rows]
    if args.suite in ("costs", "all") and args.format == "csv":
        print(cost_comparison_csv(), end="")
    return _emit_rows(rows, args, f"verify_{args.suite}")


def cmd_trotter_sweep(args, client: Client) -> int:
    request = models.TrotterSweepRequest(
        jxy=args.jxy,
        ns=_parse_int_list(args.n, "--n") if args.n else [8, 16, 32, 64],
        jz_values=_parse_float_list(args.jz, "--jz") if args.jz else [0.0, 0.5, 1.0],
    )
    reply = client.post("/trotter-sweep", request, models.TrotterSweepResponse)
    if args.format == "json":
        text = _dump(reply.model_dump())
    else:
        lines = ["jz,n_reps,error,leakage,total_evolve_time,slope"]
        for sweep in reply.sweeps:
            for row in sweep.rows:
                lines.append(f"{sweep.jz!r},{row.n_reps},{row.error!r},"
                             f"{row.leakage!r},{row.total_evolve_time!r},"
                             f"{sweep.slope!r}")
        text = "\n".join(lines) + "\n"
    if args.out:
        ext = "json" if args.format == "json" else "csv"
        _write_atomic(Path(args.out) / f"trotter_sweep.{ext}", text)
    print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsim",
        description="Compile, simulate and verify pulse schedules for chains "
                    "with fixed, always-on couplings.",
    )
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="lower one logical gate to a schedule file")
    p.add_argument("--config", required=True, help="scenario JSON (program of one gate)")
    p.add_argument("--out", default=".", help="directory for the schedule document")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("simulate", help="run a scenario and report the logical state")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    p.add_argument("--out", default=None, help="also write the report here")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["diagonal", "exchange", "trotter", "costs", "all"])
    p.add_argument("--n", default=None, help="repetition counts, e.g. 8,16,32,64")
    p.add_argument("--jz", default=None, help="jz/jxy factors, e.g. 0,0.5,1")
    p.add_argument("--out", default=None, help="directory for CSV/JSON reports")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trotter-sweep", help="swap-synthesis error against N")
    p.add_argument("--jxy", type=float, default=1.0)
    p.add_argument("--n", default=None, help="repetition counts, e.g. 8,16,32,64")
    p.add_argument("--jz", default=None, help="jz values, e.g. 0,0.5,1")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_trotter_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    client = Client(args.server)
    try:
        return args.func(args, client)
    except ScenarioError as exc:
        return _fail(str(exc))
    except httpx.HTTPError as exc:
        return _fail(f"cannot reach server: {exc}")


if __name__ == "__main__":
    sys.exit(main())
