"""Command line entry point: ``forestpart <subcommand> ...``.

Exit codes: 0 everything passed, 1 input errors only, 2 a proof-level
problem (PROOF_VIOLATION, an unsound partition, solver/oracle
disagreement, or an infeasible instance of a theorem-backed spec).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import configs
from .classify import classify
from .corpus import CorpusSpec, enumerate_exhaustive, generate_gadget, parse_mix
from .discharging import PendentMode, Verdict, audit
from .errors import ForestPartError, InternalInconsistency, NoTemplateApplied
from .formats import dumps_rotgraph, ingest, write_planar_code
from .partition import DEFAULT_CAP, F3F4, PartSpec, count_or_enumerate, parse_specs, solve, verify
from .planegraph import PlaneGraph, class_membership, from_rotation
from .reducer import FALLBACK_MODES, partition_constructively

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2

# spec pairs every class member is known to admit
THEOREM_SPECS = {"F3,F4", "D4,D4", "D3,D5", "D2,D6"}
ORACLE_N = 12


def _specs_key(specs: Sequence[PartSpec]) -> str:
    return ",".join(str(s) for s in specs)


# -- batch runner -------------------------------------------------------------


@dataclass
class RunReport:
    tasks: list[str]
    records: list[dict] = field(default_factory=list)

    def counters(self) -> dict:
        c = {
            "graphs": len(self.records),
            "input_errors": 0,
            "in_class": 0,
            "proof_violations": 0,
            "verifier_failures": 0,
            "oracle_disagreements": 0,
            "theorem_infeasible": 0,
            "reducer_fallbacks": 0,
        }
        for r in self.records:
            for key in c:
                if key != "graphs":
                    c[key] += r["flags"].get(key, 0)
        return c

    @property
    def exit_code(self) -> int:
        c = self.counters()
        if c["proof_violations"] or c["verifier_failures"] or c["oracle_disagreements"] or c["theorem_infeasible"]:
            return EXIT_VIOLATION
        return EXIT_INPUT if c["input_errors"] else EXIT_OK

    def to_dict(self, timings: bool = False) -> dict:
        records = []
        for r in self.records:
            r = dict(r)
            if not timings:
                r.pop("timings", None)
            records.append(r)
        return {"tasks": self.tasks, "records": records, "counters": self.counters()}

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=1)


def _run_one(job: tuple[int, list[list[int]], tuple[str, ...], int]) -> dict:
    gid, rotation, tasks, cap = job
    rec: dict = {"id": gid, "flags": {}, "timings": {}}
    flags, timings = rec["flags"], rec["timings"]
    try:
        g = from_rotation(rotation)
    except ForestPartError as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
        flags["input_errors"] = 1
        return rec
    rec["n"], rec["m"] = g.n, g.m
    report = class_membership(g)
    rec["class"] = report.to_dict()
    in_class = report.in_class
    flags["in_class"] = int(in_class)
    errors = {}
    for task in tasks:
        t0 = time.perf_counter()
        try:
            if task == "classify":
                rec["classify"] = classify(g).to_dict()
            elif task == "detect":
                cls = classify(g)
                rec["configs"] = {k: len(configs.detect(g, cls, k)) for k in configs.KINDS}
            elif task == "audit":
                ar = audit(g)
                rec["audit"] = ar.to_dict(include_ledger=False)
                if ar.verdict is not Verdict.PASS:
                    flags["proof_violations"] = 1
            elif task.startswith("solve:"):
                specs = parse_specs(task[len("solve:"):])
                part = solve(g, specs, cap=cap)
                key = _specs_key(specs)
                rec.setdefault("solve", {})[key] = part.to_line() if part else None
                if part is not None and verify(g, part) is not None:
                    flags["verifier_failures"] = 1
                if part is None and in_class and key in THEOREM_SPECS:
                    flags["theorem_infeasible"] = 1
            elif task == "oracle":
                if g.n <= ORACLE_N:
                    feasible = solve(g, F3F4, cap=cap) is not None
                    count, _ = count_or_enumerate(g, F3F4)
                    rec["oracle"] = {"feasible": feasible, "count": count}
                    if feasible != (count > 0):
                        flags["oracle_disagreements"] = 1
            elif task == "partition":
                part, trace = partition_constructively(g, cap=cap)
                ok = verify(g, part) is None
                rec["partition"] = {"line": part.to_line(), "valid": ok, "trace": trace.summary()}
                flags["reducer_fallbacks"] = trace.fallbacks
                if not ok:
                    flags["verifier_failures"] = 1
            else:
                raise ValueError(f"unknown task {task!r}")
        except NoTemplateApplied as exc:
            errors[task] = f"{type(exc).__name__}: {exc}"
            flags["verifier_failures"] = 1
        except ForestPartError as exc:
            if isinstance(exc, InternalInconsistency):
                flags["proof_violations"] = 1
            else:
                flags["input_errors"] = 1
            errors[task] = f"{type(exc).__name__}: {exc}"
        timings[task] = round(time.perf_counter() - t0, 6)
    if errors:
        rec["errors"] = errors
    return rec


def job_count(jobs: int | None) -> int:
    env = os.environ.get("FP_JOBS")
    if env:
        return max(1, int(env))
    return max(1, jobs or 1)


def run_batch(
    corpus: Iterable[PlaneGraph],
    tasks: Sequence[str],
    jobs: int | None = 1,
    cap: int = DEFAULT_CAP,
) -> RunReport:
    """Run ``tasks`` on every graph; records come back ordered by graph id."""
    tasks = tuple(tasks)
    work = [(i, [list(r) for r in g.rotation], tasks, cap) for i, g in enumerate(corpus)]
    n_jobs = job_count(jobs)
    if n_jobs == 1 or len(work) < 2:
        records = [_run_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            records = list(pool.map(_run_one, work, chunksize=max(1, len(work) // (4 * n_jobs))))
    records.sort(key=lambda r: r["id"])
    return RunReport(list(tasks), records)


# -- subcommands --------------------------------------------------------------


def _load(path: str) -> list[PlaneGraph]:
    return list(ingest(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_graphs(graphs: Iterable[PlaneGraph], fmt: str, out: str | None) -> None:
    if fmt == "planar_code":
        data = write_planar_code(graphs)
        if out:
            Path(out).write_bytes(data)
        else:
            sys.stdout.buffer.write(data)
    else:
        _emit(dumps_rotgraph(graphs), out)


def _read_partitions(path: str) -> list[list[int]]:
    text = Path(path).read_text().strip()
    if text.startswith(("{", "[")):
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        out = []
        for item in items:
            n = len(item["part0"]) + len(item["part1"])
            a = [-1] * n
            for p in (0, 1):
                for v in item[f"part{p}"]:
                    a[v] = p
            out.append(a)
        return out
    return [[int(c) for c in line.strip()] for line in text.splitlines() if line.strip()]


def cmd_verify(args) -> int:
    graphs = _load(args.graph)
    parts = _read_partitions(args.partition)
    if len(parts) != len(graphs):
        print(f"error: {len(graphs)} graphs but {len(parts)} partitions", file=sys.stderr)
        return EXIT_INPUT
    specs = parse_specs(args.specs)
    code = EXIT_OK
    for i, (g, a) in enumerate(zip(graphs, parts)):
        bad = verify(g, a, specs)
        print(f"{i} {'valid' if bad is None else 'invalid: ' + str(bad)}")
        if bad is not None:
            code = EXIT_VIOLATION
    return code


def cmd_solve(args) -> int:
    specs = parse_specs(args.specs)
    results = []
    for g in _load(args.graph):
        part = solve(g, specs, cap=args.cap)
        results.append(part.to_dict() if part else None)
        print(part.to_line() if part else "infeasible")
    if args.json:
        Path(args.json).write_text(json.dumps(results, indent=1) + "\n")
    return EXIT_OK


def cmd_partition(args) -> int:
    traces = []
    for g in _load(args.graph):
        part, trace = partition_constructively(g, base_case=args.base_case, fallback=args.fallback, cap=args.cap)
        print(part.to_line())
        traces.append({"partition": part.to_dict(), "trace": trace.to_dict()})
    if args.trace:
        Path(args.trace).write_text(json.dumps(traces, indent=1) + "\n")
    return EXIT_OK


def cmd_audit(args) -> int:
    reports = []
    code = EXIT_OK
    for i, g in enumerate(_load(args.graph)):
        rep = audit(g, args.pendent_mode)
        reports.append(rep.to_dict())
        print(f"{i} {rep.verdict.value}")
        if rep.verdict is not Verdict.PASS:
            code = EXIT_VIOLATION
    if args.json:
        Path(args.json).write_text(json.dumps(reports if len(reports) != 1 else reports[0], indent=1) + "\n")
    return code


def cmd_detect(args) -> int:
    kinds = args.kinds.split(",") if args.kinds else list(configs.KINDS)
    for k in kinds:
        if k not in configs.DETECTORS:
            raise ValueError(f"unknown configuration kind {k!r}")
    out = []
    for i, g in enumerate(_load(args.graph)):
        cls = classify(g)
        found = {k: [w.to_dict() for w in configs.detect(g, cls, k)] for k in kinds}
        out.append({"classification": cls.to_dict(), "witnesses": found})
        summary = " ".join(f"{k}={len(v)}" for k, v in found.items() if v) or "none"
        print(f"{i} {summary}")
    if args.json:
        Path(args.json).write_text(json.dumps(out if len(out) != 1 else out[0], indent=1) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _write_graphs(enumerate_exhaustive(args.n), args.format, args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = CorpusSpec(mode="gadget", n_max=args.n_max, seed=args.seed, count=args.count)
    if args.mix:
        spec.block_mix = parse_mix(args.mix)
        spec.__post_init__()
    _write_graphs(generate_gadget(spec), args.format, args.out)
    return EXIT_OK


def cmd_ingest(args) -> int:
    graphs = _load(args.file)
    kept = []
    for i, g in enumerate(graphs):
        in_class = class_membership(g).in_class
        # keep stdout clean when the graphs themselves go there
        log = sys.stderr if args.emit and args.out is None else sys.stdout
        print(f"{i} n={g.n} m={g.m} in_class={str(in_class).lower()}", file=log)
        if in_class or not args.in_class_only:
            kept.append(g)
    if args.emit:
        _write_graphs(kept, args.format, args.out)
    return EXIT_OK


def cmd_batch(args) -> int:
    report = run_batch(_load(args.corpus), args.tasks, jobs=args.jobs, cap=args.cap)
    if args.json:
        Path(args.json).write_text(report.to_json(timings=args.timings) + "\n")
    c = report.counters()
    print(" ".join(f"{k}={v}" for k, v in c.items()))
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="forestpart", description="Forest partitions of planar graphs without 4- and 5-cycles.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check partitions (0/1 lines or JSON) against graphs")
    s.add_argument("graph")
    s.add_argument("partition")
    s.add_argument("--specs", default="F3,F4")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact partition search")
    s.add_argument("graph")
    s.add_argument("--specs", default="F3,F4")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--json")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("partition", help="constructive (F3,F4)-partition by reduction")
    s.add_argument("graph")
    s.add_argument("--trace")
    s.add_argument("--base-case", type=int, default=8)
    s.add_argument("--fallback", choices=FALLBACK_MODES, default="full")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("audit", help="discharging audit")
    s.add_argument("graph")
    s.add_argument("--json")
    s.add_argument("--pendent-mode", choices=[m.value for m in PendentMode], default=PendentMode.PER_RECORD.value)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("detect", help="classification and configuration witnesses")
    s.add_argument("graph")
    s.add_argument("--kinds")
    s.add_argument("--json")
    s.set_defaults(func=cmd_detect)

    fmt = dict(choices=("rotgraph", "planar_code"), default="rotgraph")
    s = sub.add_parser("enumerate", help="all connected class members up to n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", **fmt)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("generate", help="random gadget assemblies")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--mix")
    s.add_argument("--n-max", type=int, default=20)
    s.add_argument("--format", **fmt)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("ingest", help="read planar_code or rotgraph and report class membership")
    s.add_argument("file")
    s.add_argument("--in-class-only", action="store_true")
    s.add_argument("--emit", action="store_true", help="re-emit the graphs")
    s.add_argument("--format", **fmt)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("batch", help="run tasks over a corpus file")
    s.add_argument("corpus")
    s.add_argument("--tasks", nargs="+", default=["audit", "solve:F3,F4", "partition"],
                   help="classify detect audit oracle partition solve:SPEC")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--json")
    s.add_argument("--timings", action="store_true", help="keep per-task timings in the JSON")
    s.set_defaults(func=cmd_batch)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ForestPartError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
