"""Acceptance suite: one printed PASS/FAIL line per criterion."""

import time

import pytest

from forestpart.classify import classify, is_bad, is_terrible
from forestpart.cli import run_batch
from forestpart.configs import find_any
from forestpart.corpus import TEMPLATES, Assembly, CorpusSpec, bad_vertex_gadget, enumerate_exhaustive, generate_gadget, terrible_gadget
from forestpart.discharging import HALF, Verdict, apply_rules, audit
from forestpart.errors import InternalInconsistency
from forestpart.partition import F3F4, count_or_enumerate, parse_specs, solve, verify
from forestpart.planegraph import class_membership
from forestpart.reducer import partition_constructively

SEED = 42
GADGETS = 1000


def build_corpus():
    graphs = list(enumerate_exhaustive(7))
    graphs += list(generate_gadget(CorpusSpec(mode="gadget", n_max=20, seed=SEED, count=GADGETS)))
    return graphs


@pytest.fixture(scope="module")
def corpus():
    return build_corpus()


@pytest.fixture(scope="module")
def members(corpus):
    return [g for g in corpus if class_membership(g).in_class and g.n <= 20]


def report(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {title}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


def test_1_charge_conservation(corpus, capsys):
    t0 = time.perf_counter()
    bad = []
    for i, g in enumerate(corpus):
        led = apply_rules(g)
        if led.total_initial() != -12 * HALF or led.total_final() != led.total_initial():
            bad.append(i)
    dt = time.perf_counter() - t0
    report(capsys, 1, "Euler/charge conservation", not bad and dt < 120,
           f"{len(corpus)} graphs, {len(bad)} failures, {dt:.1f}s")


def test_2_f3_f4_feasible(members, capsys):
    t0 = time.perf_counter()
    infeasible = [i for i, g in enumerate(members) if (p := solve(g, F3F4)) is None or verify(g, p) is not None]
    dt = time.perf_counter() - t0
    report(capsys, 2, "(F3,F4) feasibility", not infeasible and dt < 600,
           f"{len(members)} members, {len(infeasible)} infeasible, {dt:.1f}s")


def test_3_bounded_degree_feasible(members, capsys):
    failures = {}
    for spec in ("D4,D4", "D3,D5", "D2,D6"):
        specs = parse_specs(spec)
        failures[spec] = sum(1 for g in members if (p := solve(g, specs)) is None or verify(g, p) is not None)
    report(capsys, 3, "(D4,D4) (D3,D5) (D2,D6) feasibility", not any(failures.values()),
           f"{len(members)} members, infeasible per spec {failures}")


def test_4_discharging_contrapositive(members, capsys):
    negative = violations = 0
    for g in members:
        rep = audit(g)
        if rep.negative_elements:
            negative += 1
            if find_any(g, classify(g)) is None:
                violations += 1
        if rep.verdict is Verdict.PROOF_VIOLATION:
            violations += 1
    report(capsys, 4, "discharging contrapositive", violations == 0,
           f"{negative} graphs with negative charge, {violations} PROOF_VIOLATION")


def test_5_constructive_soundness(members, capsys):
    unsound = inconsistent = steps = fallbacks = 0
    for g in members:
        try:
            p, trace = partition_constructively(g)
        except InternalInconsistency:
            inconsistent += 1
            continue
        unsound += verify(g, p) is not None
        steps += len(trace.steps)
        fallbacks += trace.fallbacks
    rate = fallbacks / steps if steps else 0.0
    report(capsys, 5, "constructive soundness", unsound == 0 and inconsistent == 0,
           f"{len(members)} members, {unsound} unsound, {inconsistent} InternalInconsistency, "
           f"fallback rate {fallbacks}/{steps} = {rate:.4f}")


def test_6_oracle_equivalence(corpus, capsys):
    small = [g for g in corpus if g.n <= 12]
    disagree = sum(1 for g in small if (solve(g, F3F4) is not None) != (count_or_enumerate(g, F3F4)[0] > 0))
    report(capsys, 6, "solver/enumeration oracle equivalence", disagree == 0,
           f"{len(small)} graphs with n <= 12, {disagree} disagreements")


def test_7_structural_spot_checks(capsys):
    g = terrible_gadget()
    fig1 = all(is_terrible(g, f) for f in g.triangles) and len(g.triangles) == 1
    fig2 = {}
    for d in (6, 7, 8):
        h, v, _ = bad_vertex_gadget(d)
        fig2[d] = is_bad(h, v) and v in classify(h).bad
    a = Assembly(TEMPLATES["triangle"])
    for v in (0, 1):
        for _ in range(4):
            a.glue(TEMPLATES["edge"], v)
    h = a.graph
    (f,) = h.triangles
    cls = classify(h)
    face_final = apply_rules(h, cls).final[("f", f)]
    shape = sorted(h.deg(u) for u in h.faces[f]) == [2, 6, 6] and f not in cls.f2_star
    ok = fig1 and all(fig2.values()) and shape and face_final == 0
    report(capsys, 7, "structural spot-checks", ok,
           f"terrible gadget {fig1}, bad 6/7/8 {fig2}, (2,6,6)-face final {face_final / HALF}")


def test_8_determinism(capsys):
    tasks = ["detect", "audit", "solve:F3,F4", "partition"]
    first = run_batch(build_corpus(), tasks).to_json()
    second = run_batch(build_corpus(), tasks).to_json()
    report(capsys, 8, "determinism", first == second,
           f"{len(first)} bytes of JSON, identical={first == second}")
