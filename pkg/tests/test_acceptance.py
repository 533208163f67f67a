"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python tests/test_acceptance.py`` for the lines alone.
"""

import functools
import random
import time

import networkx as nx

from clustercolor import bounds
from clustercolor.cli import dispatch
from clustercolor.generators import (
    gk_family, random_cycle_with_stable_set, random_near_triangulation, random_path_with_stable_set,
    random_plane_graph, triangle_free_family, triangular_grid,
)
from clustercolor.induction import color_planar
from clustercolor.lemma_engine import (
    canonical_rotations, color_cycle_instance, color_path_instance, make_cycle_instance,
    make_path_instance, normalize_cycle_instance, replay_plan, reverse_plan,
)
from clustercolor.oracle import SearchBudget, Status, enumerate_min_max, feasible, min_max_component
from clustercolor.triangulate import is_near_triangulated, near_triangulate
from clustercolor.verify import check_corollary_properties, check_lemma_postconditions


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                print(f"FAIL criterion {number}: {title} ({type(exc).__name__}: {exc})")
                raise
            print(f"PASS criterion {number}: {title}")
        return run
    return wrap


def timed(fn, limit):
    t = time.monotonic()
    out = fn()
    took = time.monotonic() - t
    assert took <= limit, f"{took:.1f}s over the {limit}s limit"
    return out


def check_colored(G, limit):
    col = timed(lambda: color_planar(G), limit)
    rep = check_corollary_properties(G, col, max(G.max_degree, 1))
    assert rep.passed, rep.to_dict()


@criterion(1, "colorings of random and grid plane graphs satisfy the guarantees")
def test_criterion_1_coloring():
    rng = random.Random(1)
    for seed in range(200):
        check_colored(random_near_triangulation(rng.randint(3, 300), seed), 5)
    for seed in range(100):
        check_colored(random_plane_graph(rng.randint(3, 200), seed, 0.3), 5)
    for k in range(3, 11):
        check_colored(triangular_grid(k), 5)


@criterion(2, "path plus stable set instances meet the lemma guarantees")
def test_criterion_2_path_lemma():
    rng = random.Random(2)
    for seed in range(500):
        G, P, r = random_path_with_stable_set(rng.randint(3, 40), rng.randint(0, 40), seed)
        inst = make_path_instance(G, P, set(range(len(P), G.n)), r)
        col = color_path_instance(inst)
        assert check_lemma_postconditions(inst, col).passed, seed


@criterion(3, "cycle plus stable set instances meet the lemma guarantees and normalization reverses")
def test_criterion_3_cycle_lemma():
    rng = random.Random(3)
    for seed in range(500):
        G = random_cycle_with_stable_set(rng.randint(3, 30), rng.randint(0, 30), seed)
        cyc = make_cycle_instance(G)
        inst, plan = normalize_cycle_instance(cyc)
        assert replay_plan(cyc, plan) == inst.graph, seed
        assert canonical_rotations(reverse_plan(inst.graph, plan)) == canonical_rotations(G.rotations), seed
        assert check_lemma_postconditions(cyc, color_cycle_instance(cyc)).passed, seed


@criterion(4, "two colors on triangular grids force large components")
def test_criterion_4_grid_lower_bounds():
    b3 = timed(lambda: min_max_component(triangular_grid(3), 2)[0], 10)
    assert b3 is not None and b3 >= 3
    b4 = timed(lambda: min_max_component(triangular_grid(4), 2, SearchBudget(time_limit=120))[0], 120)
    assert b4 is not None and b4 >= 4


@criterion(5, "the k=3 lower-bound graph has no 3-coloring with components of size 2")
def test_criterion_5_gk3():
    res = timed(lambda: feasible(gk_family(3), 3, 2, SearchBudget(time_limit=120)), 120)
    assert res.status is Status.INFEASIBLE


@criterion(6, "the k=3 triangle-free graph needs components of size 3 with two colors")
def test_criterion_6_triangle_free():
    assert timed(lambda: enumerate_min_max(triangle_free_family(3), 2), 5) == 3


@criterion(7, "the search agrees with plain enumeration on small graphs")
def test_criterion_7_oracle_agreement():
    rng = random.Random(7)
    for seed in range(100):
        n = rng.randint(1, 7)
        g = nx.gnp_random_graph(n, rng.random(), seed=seed)
        adj = [sorted(g[v]) for v in range(n)]
        for colors in (1, 2, 3):
            assert min_max_component(adj, colors)[0] == enumerate_min_max(adj, colors), (seed, colors)


@criterion(8, "near-triangulation keeps the graph induced and degrees small")
def test_criterion_8_near_triangulate():
    rng = random.Random(8)
    for seed in range(100):
        G = random_plane_graph(rng.randint(3, 120), seed, rng.uniform(0.1, 0.7))
        aug = near_triangulate(G)
        H = aug.graph
        assert is_near_triangulated(H), seed
        assert all(H.has_edge(u, v) for u, v in G.edges()), seed
        assert all(w >= G.n or G.has_edge(u, w) for u in range(G.n) for w in H.rotations[u]), seed
        assert all(H.degree(v) <= 6 for v in aug.added), seed
        assert all(H.degree(v) <= 3 * G.degree(v) for v in range(G.n)), seed
        assert H.outer_walk() == G.outer_walk(), seed


@criterion(9, "bound values are exact and monotone")
def test_criterion_9_bounds():
    assert bounds.f1(3) == 11
    assert bounds.final_bound(3) == 45 ** 104
    assert bounds.final_bound(1) == 15 ** 40
    rng = random.Random(9)
    for _ in range(1000):
        d, D = rng.randint(0, 60), rng.randint(1, 60)
        assert bounds.f1(d) < bounds.f1(d + 1)
        assert bounds.f2(d, D) <= bounds.f2(d + 1, D) and bounds.f2(d, D) <= bounds.f2(d, D + 1)
        assert bounds.final_bound(D) < bounds.final_bound(D + 1)


@criterion(10, "command-line outputs are byte-identical across runs")
def test_criterion_10_determinism(tmp_path):
    runs = []
    for tag in ("a", "b"):
        d = tmp_path / tag
        d.mkdir()
        g, c, v, r, o = (d / name for name in ("g.json", "c.json", "v.json", "r.json", "o.json"))
        assert dispatch(["gen", "--family", "plane", "--n", "80", "--seed", "10", "-o", str(g)]) == 0
        assert dispatch(["color", str(g), "-o", str(c), "--report", str(r)]) == 0
        assert dispatch(["verify", str(g), str(c), "-o", str(v)]) == 0
        assert dispatch(["oracle", str(g), "--colors", "3", "--bound", "1", "--node-limit", "2000", "-o", str(o)]) in (0, 3)
        runs.append([p.read_bytes() for p in (g, c, v, r, o)])
    assert runs[0] == runs[1]


if __name__ == "__main__":
    import pathlib
    import sys
    import tempfile

    failed = 0
    tests = [fn for name, fn in globals().items() if name.startswith("test_criterion_")]
    for fn in sorted(tests, key=lambda f: int(f.__name__.split("_")[2])):
        try:
            if fn.__name__.endswith("determinism"):
                with tempfile.TemporaryDirectory() as tmp:
                    fn(pathlib.Path(tmp))
            else:
                fn()
        except BaseException:
            failed += 1
    sys.exit(1 if failed else 0)
