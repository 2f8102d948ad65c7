import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from forestpart.corpus import CorpusSpec, generate_gadget
from forestpart.planegraph import PlaneGraph, build, edge_class_membership

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def random_edge_graphs(draw, n_max=9, p_max=0.6):
    """Arbitrary simple graphs (not necessarily planar or connected)."""
    n = draw(st.integers(1, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return n, [e for e, keep in zip(pairs, mask) if keep]


@st.composite
def class_members(draw, n_max=9):
    """Planar graphs without 4- and 5-cycles, grown edge by edge in random order."""
    n = draw(st.integers(1, n_max))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges = []
    for e in pairs:
        if edge_class_membership(n, edges + [e]).in_class:
            edges.append(e)
    return build(edges, n=n)


@st.composite
def gadget_graphs(draw, n_max=20):
    seed = draw(st.integers(0, 2**32 - 1))
    return next(generate_gadget(CorpusSpec(count=1, seed=seed, n_max=n_max)))


def connected(g: PlaneGraph) -> bool:
    return g.is_connected


@pytest.fixture
def k3():
    return build([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c6():
    return build([(i, (i + 1) % 6) for i in range(6)])


@st.composite
def connected_class_members(draw, n_max=9):
    g = draw(class_members(n_max))
    comp = max(g.components, key=len)
    return g.induced(comp)[0]
