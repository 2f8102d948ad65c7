"""Audit and reduce harder instances than the gadget corpus: greedy
4-/5-cycle-free subgraphs of Delaunay triangulations, and graphs found by
local search that avoid the cheapest configurations.

    python3 scripts/stress_discharging.py --greedy 200 --points 80 --hunt-steps 4000
"""

import argparse
import collections
import time

from forestpart.classify import classify
from forestpart.configs import find_any
from forestpart.corpus import generate_greedy, hunt
from forestpart.discharging import Verdict, audit
from forestpart.partition import verify
from forestpart.reducer import partition_constructively


def run(label, graphs):
    verdicts = collections.Counter()
    first_kind = collections.Counter()
    steps = fallbacks = unsound = 0
    t0 = time.perf_counter()
    count = 0
    for g in graphs:
        count += 1
        rep = audit(g)
        verdicts[rep.verdict.value] += 1
        w = find_any(g, classify(g))
        first_kind[w.kind if w else None] += 1
        p, trace = partition_constructively(g, cap=22)
        unsound += verify(g, p) is not None
        steps += len(trace.steps)
        fallbacks += trace.fallbacks
    print(f"[{label}] {count} graphs, {time.perf_counter() - t0:.1f}s")
    print(f"  verdicts     {dict(verdicts)}")
    print(f"  first config {dict(first_kind)}")
    print(f"  reducer      steps={steps} fallbacks={fallbacks} unsound={unsound}")
    return verdicts.get(Verdict.PROOF_VIOLATION.value, 0) + unsound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--greedy", type=int, default=100)
    ap.add_argument("--points", type=int, default=60)
    ap.add_argument("--hunt-steps", type=int, default=3000)
    ap.add_argument("--avoid", default="C1,C2,C3")
    args = ap.parse_args()

    bad = run("greedy", generate_greedy(args.greedy, args.points, args.seed))
    bad += run("greedy, leaves stripped", generate_greedy(args.greedy, args.points, args.seed, strip=1))
    bad += run(f"hunt avoiding {args.avoid}", hunt(args.avoid.split(","), seed=args.seed, steps=args.hunt_steps))
    raise SystemExit(2 if bad else 0)


if __name__ == "__main__":
    main()
