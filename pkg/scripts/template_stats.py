"""How often each extension step is needed.

For every constructed configuration instance, every valid partition of
the instance minus the deletion vertex is extended; the table counts
which stage (direct placement, generic flip, scripted template) placed
the vertex and how many sub-partitions needed the exact fallback.

    python3 scripts/template_stats.py
"""

import collections

from forestpart.classify import classify
from forestpart.configs import detect
from forestpart.corpus import config_examples
from forestpart.errors import NoTemplateApplied
from forestpart.partition import count_or_enumerate, verify
from forestpart.reducer import UNASSIGNED, extend


def stage(name):
    if name.startswith("place"):
        return "place"
    if name.startswith("flip"):
        return "generic"
    return f"scripted:{name}"


def main():
    for kind, g in config_examples().items():
        for w in detect(g, classify(g), kind, limit=3):
            x = w.delete_vertex
            sub, keep = g.delete_vertex(x)
            _, parts = count_or_enumerate(sub, limit=10**7)
            stats = collections.Counter()
            for p in parts:
                a = [UNASSIGNED] * g.n
                for i, old in enumerate(keep):
                    a[old] = p.assignment[i]
                try:
                    out, name = extend(g, x, a, w)
                    assert verify(g, out) is None
                    stats[stage(name)] += 1
                except NoTemplateApplied:
                    stats["needs fallback"] += 1
            print(f"{kind:4s} n={g.n:2d} delete={x:2d} sub-partitions={len(parts):6d} {dict(stats)}")


if __name__ == "__main__":
    main()
