import pytest

from clustercolor.generators import random_plane_graph, triangle_free_family
from clustercolor.triangulate import is_near_triangulated, near_triangulate, zigzag_chords

from conftest import cycle, k4


def test_zigzag_chords():
    assert zigzag_chords(3) == []
    assert zigzag_chords(4) == [(1, 3)]
    assert zigzag_chords(5) == [(1, 4), (2, 4)]
    assert zigzag_chords(6) == [(1, 5), (2, 4), (2, 5)]


@pytest.mark.parametrize("k", range(3, 12))
def test_zigzag_triangulates_polygon(k):
    # a k-gon needs k - 3 chords
    assert len(zigzag_chords(k)) == k - 3


def test_square_gadget():
    aug = near_triangulate(cycle(4))
    G = aug.graph
    assert (G.n, G.num_edges) == (8, 17)
    assert len(G.faces.bounded()) == 10
    assert is_near_triangulated(G)
    assert aug.added == frozenset(range(4, 8))


def test_already_triangulated_is_unchanged():
    G = k4()
    assert near_triangulate(G).graph is G


def check_augmentation(G):
    aug = near_triangulate(G)
    H = aug.graph
    assert is_near_triangulated(H)
    for u, v in G.edges():
        assert H.has_edge(u, v)
    for u in range(G.n):
        for w in H.rotations[u]:
            if w < G.n:
                assert G.has_edge(u, w), "original vertices stay induced"
    assert H.max_degree <= max(6, 3 * G.max_degree)
    assert all(H.degree(v) <= 6 for v in aug.added)
    assert all(H.degree(v) <= 3 * G.degree(v) for v in range(G.n))
    assert H.outer_walk() == G.outer_walk()


@pytest.mark.parametrize("seed", range(30))
def test_random_plane_graphs(seed):
    check_augmentation(random_plane_graph(60, seed, 0.5))


def test_triangle_free_family():
    check_augmentation(triangle_free_family(3))
