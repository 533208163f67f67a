import itertools
import random

import pytest

from clustercolor.errors import PartialColoring
from clustercolor.generators import random_plane_graph, triangular_grid
from clustercolor.induction import color_planar
from clustercolor.verify import (
    check_corollary_properties, check_theorem_properties, components_of,
    monochromatic_components,
)

from conftest import cycle, k4, triangle


def dsu_census(G, col):
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in G.edges():
        if col[u] == col[v]:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
    groups = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((col[g[0]], len(g)) for g in groups.values())


def test_constant_coloring():
    G = triangular_grid(4)
    rep = monochromatic_components(G, [1] * G.n)
    assert rep.by_color[1].count == 1 and rep.by_color[1].max_size == 16


def test_proper_c6():
    rep = monochromatic_components(cycle(6), [1, 2] * 3)
    assert rep.by_color[1].count == 3 and rep.by_color[2].count == 3
    assert rep.max_size() == 1


def test_c5_census_against_brute_force():
    rep = monochromatic_components(cycle(5), [1, 2, 1, 2, 1])
    assert rep.by_color[1].histogram == {1: 1, 2: 1}
    assert rep.by_color[2].histogram == {1: 2}
    assert rep.by_color[1].largest == [[0, 4]]


def test_census_sums_match_color_counts():
    G = random_plane_graph(40, 2, 0.3)
    rng = random.Random(1)
    col = [rng.randint(1, 3) for _ in range(G.n)]
    rep = monochromatic_components(G, col)
    for c, cc in rep.by_color.items():
        assert sum(k * v for k, v in cc.histogram.items()) == col.count(c)


@pytest.mark.parametrize("seed", range(25))
def test_census_matches_independent_dsu(seed):
    G = random_plane_graph(30, seed, 0.4)
    rng = random.Random(seed)
    col = [rng.randint(1, 3) for _ in range(G.n)]
    mine = sorted((c, len(s)) for c, s in components_of(G.rotations, col))
    assert mine == dsu_census(G, col)


def test_partial_coloring_rejected():
    with pytest.raises(PartialColoring):
        monochromatic_components(triangle(), [1, 2])
    with pytest.raises(PartialColoring):
        check_theorem_properties(triangle(), {0: 1, 1: 2}, 2)


def test_triangle_passes():
    rep = check_theorem_properties(triangle(), [1, 2, 1], 2)
    assert rep.passed
    assert rep.max_component == 2


def test_k4_apex_color_one_fails_ii():
    rep = check_theorem_properties(k4(), [1, 2, 1, 1], 3)
    assert not rep["(ii) no color 1 on O2"].passed
    assert rep["(ii) no color 1 on O2"].witness == [3]
    rep = check_theorem_properties(k4(), [3, 2, 1, 2], 3)
    assert not rep["(i) no color 3 on O"].passed
    assert rep["(i) no color 3 on O"].witness == [0]


def test_failure_witness_recomputes():
    G = triangular_grid(3)
    rep = check_theorem_properties(G, [1] * G.n, 6)
    failed = rep.failures()
    assert failed and all(f.witness for f in failed)
    for f in failed:
        if f.observed is not None and f.bound is not None:
            assert len(f.witness) == f.observed > f.bound


def test_case3_checks():
    G = triangle()
    good = check_theorem_properties(G, [1, 2, 2], 2, case3=(0, 1, 1, 2))
    assert good.passed
    bad = check_theorem_properties(G, [1, 2, 1], 2, case3=(0, 1, 1, 2))
    assert not bad["(3) prescribed colors at u, v"].passed


def test_degree_parameter_must_cover_max_degree():
    with pytest.raises(ValueError):
        check_theorem_properties(k4(), [1, 1, 2, 2], 2)


def test_grid6_end_to_end():
    G = triangular_grid(6)
    col = color_planar(G)
    rep = check_corollary_properties(G, col, 6)
    assert rep.passed
    assert all(col[v] != 3 for v in G.outer_walk())


def test_small_degree_means_proper():
    assert check_corollary_properties(cycle(5), [1, 2, 1, 2, 3], 2).passed
    assert not check_corollary_properties(cycle(5), [1, 2, 1, 2, 1], 2).passed


def test_report_is_deterministic():
    G = triangular_grid(5)
    col = color_planar(G)
    a = check_corollary_properties(G, col, 6).to_dict()
    b = check_corollary_properties(G, col, 6).to_dict()
    assert a == b
