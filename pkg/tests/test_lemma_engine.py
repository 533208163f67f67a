import random

import pytest
from hypothesis import given, settings, strategies as st

from clustercolor.errors import HypothesisViolation, InvalidColor
from clustercolor.generators import (
    _from_coordinates, random_cycle_with_stable_set, random_path_with_stable_set,
)
from clustercolor.lemma_engine import (
    alternate_coloring, build_face_tree, canonical_rotations, color_cycle_instance,
    color_path_instance, make_cycle_instance, make_path_instance,
    normalize_cycle_instance, one_paths, replay_plan, reverse_plan,
)
from clustercolor.plane import PlaneGraph
from clustercolor.verify import check_lemma_postconditions

from conftest import cycle, wheel


# -- alternate coloring

def test_alternate_examples():
    assert alternate_coloring("ab", 1, 1) == [1, 1]
    assert alternate_coloring("axb", 1, 1) == [1, 2, 1]
    assert alternate_coloring("axb", 2, 1) == [2, 1, 1]
    assert alternate_coloring("axyzb", 2, 2) == [2, 1, 2, 1, 2]


def test_alternate_rejects_colors():
    with pytest.raises(InvalidColor):
        alternate_coloring("axb", 3, 1)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 12), st.sampled_from([1, 2]), st.sampled_from([1, 2]))
def test_alternate_invariants(k, ca, cb):
    out = alternate_coloring(list(range(k + 2)), ca, cb)
    assert out[0] == ca and out[-1] == cb
    assert not any(out[i] == out[i + 1] == out[i + 2] for i in range(len(out) - 2))
    if k >= 1:
        assert ca != 2 or out[1] == 1
        assert cb != 2 or out[-2] == 1


# -- path instances built by hand

def hub_instance():
    """P = x,w,y (0,1,2); r = 3 above everything; s = 4 joined to x, w, y."""
    G = _from_coordinates([(0, 0), (1, 0), (2, 0), (1, 3), (1, 1)],
                          [(0, 1), (1, 2), (0, 3), (2, 3), (4, 0), (4, 1), (4, 2)])
    return make_path_instance(G, (0, 1, 2), {3, 4}, 3)


def test_two_leaf_instance_violates_hypotheses():
    # s1 ~ {x, w}, s2 ~ {w, y}: degree-2 stable vertices with adjacent neighbours
    G = _from_coordinates([(0, 0), (1, 0), (2, 0), (1, 3), (0.5, 1), (1.5, 1)],
                          [(0, 1), (1, 2), (0, 3), (2, 3), (4, 0), (4, 1), (5, 1), (5, 2)])
    with pytest.raises(HypothesisViolation):
        make_path_instance(G, (0, 1, 2), {3, 4, 5}, 3)


def test_hub_face_tree():
    inst = hub_instance()
    tree = build_face_tree(inst)
    root = tree.nodes[tree.root]
    assert (root.a, root.s, root.b) == (0, 3, 2)
    assert root.corners == () and root.pivots == (1,)
    assert root.isolated == {1}
    kids = [tree.nodes[c] for c in root.children]
    assert [(k.a, k.s, k.b) for k in kids] == [(0, 4, 1), (1, 4, 2)]
    assert all(k.depth == 1 and not k.children for k in kids)


def test_hub_coloring():
    inst = hub_instance()
    col = color_path_instance(inst)
    assert col == [2, 2, 2, 2, 2]
    assert check_lemma_postconditions(inst, col).passed


def test_degree_one_stable_vertex_rejected():
    G = _from_coordinates([(0, 0), (1, 0), (2, 0), (1, 3), (1, 1)],
                          [(0, 1), (1, 2), (0, 3), (2, 3), (4, 1)])
    with pytest.raises(HypothesisViolation):
        make_path_instance(G, (0, 1, 2), {3, 4}, 3)


def test_postcondition_checker_catches_bad_colorings():
    inst = hub_instance()
    rep = check_lemma_postconditions(inst, [2, 2, 2, 2, 1])
    assert not rep["prescribed vertices colored 2"].passed
    assert rep["prescribed vertices colored 2"].witness == [4]


def test_long_one_path_fails_cap():
    # a path of 2d+2 vertices colored 1 breaks the 2d+1 cap
    G, P, r = random_path_with_stable_set(12, 0, 0)
    inst = make_path_instance(G, P, set(range(len(P), G.n)), r)
    col = color_path_instance(inst)
    cap = 2 * inst.d + 1
    if len(P) - 2 >= cap + 1:
        bad = list(col)
        for v in P[1:cap + 2]:
            bad[v] = 1
        assert not check_lemma_postconditions(inst, bad)["1-components <= 2d+1"].passed


def random_path_instance(seed):
    rng = random.Random(seed)
    G, P, r = random_path_with_stable_set(rng.randint(3, 30), rng.randint(0, 40), seed)
    return make_path_instance(G, P, set(range(len(P), G.n)), r)


def tree_is_path(tree, faces):
    fs = set(faces)
    links = [(f, tree.nodes[f].parent) for f in fs if tree.nodes[f].parent in fs]
    deg = {f: 0 for f in fs}
    for a, b in links:
        deg[a] += 1
        deg[b] += 1
    return len(links) == len(fs) - 1 and max(deg.values()) <= 2


@pytest.mark.parametrize("seed", range(60))
def test_face_tree_invariants(seed):
    inst = random_path_instance(seed)
    tree = build_face_tree(inst)
    G = inst.graph
    F = G.faces
    outer = set(F.outer)
    leaves = {f for f, n in tree.nodes.items() if not n.children}
    boundary_triangles = {f for f in F.bounded() if len(F.faces[f]) == 3
                          and any((b, a) in outer for a, b in F.faces[f])}
    assert leaves == boundary_triangles
    for f, node in tree.nodes.items():
        if node.parent is not None:
            assert node.depth == tree.nodes[node.parent].depth + 1
            shared = set(F.vertices(f)) & set(F.vertices(node.parent)) & inst.stable
            assert shared == {node.s}
    assert sorted(tree.owner) == sorted(inst.path[1:-1])
    for w in inst.path[1:-1]:
        around = tree.faces_at(inst, w)
        own = tree.nodes[tree.owner[w]].depth
        # a pivot's own face is not incident to it, but joins the path
        assert tree_is_path(tree, set(around) | {tree.owner[w]})
        assert 0 <= max(tree.nodes[f].depth for f in around) - own <= inst.d - 2


@pytest.mark.parametrize("seed", range(60))
def test_path_lemma_random(seed):
    inst = random_path_instance(seed)
    col = color_path_instance(inst)
    assert check_lemma_postconditions(inst, col).passed
    assert all(len(p) <= 2 * inst.d + 1 for p in one_paths(inst, col))
    assert col.count(2) >= len(inst.stable) + 2


# -- cycle instances

def test_c4_with_hub_needs_only_split():
    cyc = make_cycle_instance(wheel(4))
    inst, plan = normalize_cycle_instance(cyc)
    assert not plan.removed and not plan.apexes and not plan.edges
    assert plan.split[:2] == (0, 1) or set(plan.split[:2]) == {0, 1}
    col = color_cycle_instance(cyc)
    assert col[4] == 2
    assert cyc.d == 3
    assert check_lemma_postconditions(cyc, col).passed


def test_bare_c5():
    cyc = make_cycle_instance(cycle(5))
    inst, plan = normalize_cycle_instance(cyc)
    assert len(plan.apexes) == 2
    assert replay_plan(cyc, plan) == inst.graph
    col = color_cycle_instance(cyc)
    assert set(col) <= {1, 2}
    assert check_lemma_postconditions(cyc, col).passed


def test_low_degree_stable_vertex_is_removed_and_restored():
    G = random_cycle_with_stable_set(6, 0, 0)
    # pendant inside the hexagon at vertex 0
    from clustercolor.plane import add_apex_in_face
    inner = next(f for f in G.faces.bounded())
    G = add_apex_in_face(G, inner, [0])
    cyc = make_cycle_instance(G)
    inst, plan = normalize_cycle_instance(cyc)
    assert plan.removed_Sstar == {6}
    col = color_cycle_instance(cyc)
    assert col[6] == 2


def test_cycle_with_chord_rejected():
    G = PlaneGraph(4, [[1, 2, 3], [2, 0], [3, 0, 1], [0, 2]], (1, 0))
    with pytest.raises(HypothesisViolation):
        make_cycle_instance(G, (0, 1, 2, 3))


def test_cycle_bounding_inner_face_is_reembedded():
    G = wheel(5)
    inner_cycle = G.faces.vertices(next(f for f in G.faces.bounded()))
    with pytest.raises(HypothesisViolation):
        make_cycle_instance(G, inner_cycle)  # the rim is adjacent to the hub: not stable
    C = cycle(6)
    inner = next(f for f in C.faces.bounded())
    cyc = make_cycle_instance(C, C.faces.vertices(inner))
    assert set(cyc.graph.outer_walk()) == set(range(6))


@pytest.mark.parametrize("seed", range(60))
def test_cycle_lemma_random(seed):
    rng = random.Random(seed)
    G = random_cycle_with_stable_set(rng.randint(3, 25), rng.randint(0, 30), seed)
    cyc = make_cycle_instance(G)
    inst, plan = normalize_cycle_instance(cyc)
    assert replay_plan(cyc, plan) == inst.graph
    assert canonical_rotations(reverse_plan(inst.graph, plan)) == canonical_rotations(G.rotations)
    assert max(inst.graph.degree(v) for v in inst.path) <= cyc.d + 2
    assert inst.Delta <= 2 * max(cyc.Delta, 2)
    col = color_cycle_instance(cyc)
    assert check_lemma_postconditions(cyc, col).passed
