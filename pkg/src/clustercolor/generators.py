"""Graph families with explicit rotation systems.

Straight-line families are built from coordinates: neighbours are sorted
by increasing angle and the outer face is the face walk with negative
signed area.  Random families are built combinatorially.
"""

from __future__ import annotations

import math
import random

from .plane import PlaneGraph, components


def _from_coordinates(coords: list[tuple[float, float]], edges) -> PlaneGraph:
    n = len(coords)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rots = []
    for v in range(n):
        x0, y0 = coords[v]
        rots.append(sorted(adj[v], key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0)))
    first = next(v for v in range(n) if rots[v])
    G = PlaneGraph(n, rots, (first, rots[first][0]))
    for walk in G.faces.faces:
        area = sum(coords[u][0] * coords[v][1] - coords[v][0] * coords[u][1] for u, v in walk)
        if area < 0:
            return G.with_outer(walk[0])
    raise AssertionError("no clockwise face found")


def triangular_grid(k: int) -> PlaneGraph:
    """k x k grid with right, down and down-right diagonal edges.

    Vertex ``(i, j)`` (row i, column j) has id ``i * k + j``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    coords = [(j, -i) for i in range(k) for j in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            v = i * k + j
            if j + 1 < k:
                edges.append((v, v + 1))
            if i + 1 < k:
                edges.append((v, v + k))
            if i + 1 < k and j + 1 < k:
                edges.append((v, v + k + 1))
    return _from_coordinates(coords, edges)


def gk_family(k: int) -> PlaneGraph:
    """Path v_1..v_k plus, for each consecutive pair, a path of k(2k-3)
    vertices all joined to both members of the pair.

    Ids: ``v_i`` is ``i - 1``; the block for pair (v_{i-1}, v_i) follows.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    m = k * (2 * k - 3)
    coords = [(float(i), 0.0) for i in range(k)]
    edges = [(i, i + 1) for i in range(k - 1)]
    for i in range(1, k):
        block = []
        for t in range(m):
            block.append(len(coords))
            coords.append((i - 0.5, float(t + 1)))
        for t, w in enumerate(block):
            edges.append((i - 1, w))
            edges.append((i, w))
            if t:
                edges.append((block[t - 1], w))
    return _from_coordinates(coords, edges)


def triangle_free_family(k: int) -> PlaneGraph:
    """Path x_1..x_k, a set of 2k-3 private neighbours for each x_i, and one
    vertex u adjacent to every private neighbour.  ``u`` is the last id."""
    if k < 2:
        raise ValueError("k must be at least 2")
    s = 2 * k - 3
    width = s + 1
    coords = [(float(i * width), 0.0) for i in range(k)]
    edges = [(i, i + 1) for i in range(k - 1)]
    leaves = []
    for i in range(k):
        for t in range(s):
            leaves.append(len(coords))
            coords.append((i * width - (s - 1) / 2 + t, 1.0))
            edges.append((i, leaves[-1]))
    u = len(coords)
    coords.append(((k - 1) * width / 2, 10.0 * k))
    edges.extend((u, w) for w in leaves)
    return _from_coordinates(coords, edges)


def _stacked(n: int, rng: random.Random) -> tuple[list[list[int]], list[tuple[int, int, int]]]:
    rots = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2)]
    for z in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        for x, q, p in ((a, b, c), (b, c, a), (c, a, b)):
            r = rots[x]
            j = next(j for j in range(len(r)) if r[j] == q and r[(j + 1) % len(r)] == p)
            r.insert(j + 1, z)
        rots.append([a, b, c])
        faces.extend([(a, b, z), (b, c, z), (c, a, z)])
    return rots, faces


def random_near_triangulation(n: int, seed: int) -> PlaneGraph:
    """Stacked triangulation: start from a triangle and repeatedly put a new
    vertex into a uniformly chosen bounded face, joined to its corners."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rots, _ = _stacked(n, random.Random(seed))
    return PlaneGraph(n, rots, (1, 0))


def random_plane_graph(n: int, seed: int, deletion_rate: float) -> PlaneGraph:
    """Stacked triangulation with a fraction of its inner edges deleted.

    Outer-triangle edges and edges whose removal would disconnect the
    graph are never deleted.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if not 0 <= deletion_rate < 1:
        raise ValueError("deletion_rate must lie in [0, 1)")
    rng = random.Random(seed)
    rots, _ = _stacked(n, rng)
    if deletion_rate == 0:
        return PlaneGraph(n, rots, (1, 0))
    outer = {frozenset(e) for e in ((0, 1), (1, 2), (0, 2))}
    candidates = [(u, v) for u in range(n) for v in rots[u] if u < v and frozenset((u, v)) not in outer]
    rng.shuffle(candidates)
    target = round(deletion_rate * (len(candidates) + 3))
    deleted = 0
    for u, v in candidates:
        if deleted >= target:
            break
        saved = list(rots[u]), list(rots[v])
        rots[u].remove(v)
        rots[v].remove(u)
        if len(components(rots, range(n))) == 1:
            deleted += 1
        else:
            rots[u], rots[v] = saved
    return PlaneGraph(n, rots, (1, 0))


def _random_attachments(rng: random.Random, G: PlaneGraph, allowed, max_size: int, ok) -> PlaneGraph | None:
    """Put one new vertex into a random bounded face, joined to a random
    set of distinct ``allowed`` vertices of that face accepted by ``ok``."""
    F = G.faces
    f = rng.choice(F.bounded())
    walk = F.vertices(f)
    first: dict[int, int] = {}
    for i, v in enumerate(walk):
        if v in allowed and v not in first:
            first[v] = i
    if not first:
        return None
    k = rng.randint(1, min(max_size, len(first)))
    picked = sorted(rng.sample(sorted(first.values()), k))
    if not ok([walk[i] for i in picked]):
        return None
    from .plane import add_apex_at_positions
    return add_apex_at_positions(G, f, picked)


def _polygon(m: int) -> PlaneGraph:
    return PlaneGraph(m, [[(i + 1) % m, (i - 1) % m] for i in range(m)], (1, 0))


def random_cycle_with_stable_set(m: int, extra: int, seed: int) -> PlaneGraph:
    """Chordless cycle ``0..m-1`` bounding the outer face, plus ``extra``
    pairwise non-adjacent vertices inside, each joined to cycle vertices of
    the face it lands in (degree 1 and degree 2 attachments included)."""
    if m < 3:
        raise ValueError("m must be at least 3")
    rng = random.Random(seed)
    G = _polygon(m)
    cyc = set(range(m))
    added = 0
    while added < extra:
        H = _random_attachments(rng, G, cyc, 5, lambda a: True)
        if H is not None:
            G = H
            added += 1
    return G


def random_path_with_stable_set(length: int, extra: int, seed: int) -> tuple[PlaneGraph, tuple[int, ...], int]:
    """Induced path ``0..length-1`` plus a stable set whose vertex ``length``
    (the root) is joined to both path ends and bounds the outer face with
    the path.  Every other stable vertex has degree >= 3 or two non-adjacent
    neighbours, and consecutive path vertices share a stable neighbour.

    Returns ``(graph, path, root)``.
    """
    if length < 3:
        raise ValueError("length must be at least 3")
    rng = random.Random(seed)
    r = length
    rots = [[1, r]] + [[i + 1, i - 1] for i in range(1, length - 1)] + [[r, length - 2], [0, length - 1]]
    G = PlaneGraph(length + 1, rots, (1, 0))
    if G.faces.dart_face[(r, 0)] != G.faces.outer_index:
        G = G.with_outer((0, r))
    path = set(range(length))

    def ok(a):
        return len(a) >= 3 or (len(a) == 2 and abs(a[0] - a[1]) > 1)

    added = 0
    tries = 0
    while added < extra and tries < 50 * (extra + 1):
        tries += 1
        H = _random_attachments(rng, G, path, 5, ok)
        if H is not None:
            G = H
            added += 1
    for i in range(length - 1):
        S = set(range(length, G.n))
        if set(G.rotations[i]) & set(G.rotations[i + 1]) & S:
            continue
        from .plane import add_apex_at_positions
        F = G.faces
        f = F.dart_face[(i, i + 1)]
        if f == F.outer_index:
            f = F.dart_face[(i + 1, i)]
        walk = F.vertices(f)
        p = walk.index(i)
        q = walk.index(i + 1)
        others = [j for j, v in enumerate(walk) if v in path and v not in (i, i + 1)]
        picked = sorted({p, q, others[0]}) if others else sorted({p, q})
        G = add_apex_at_positions(G, f, picked)
    return G, tuple(range(length)), r


def random_eroded_near_triangulation(n: int, seed: int, erosion: float = 0.3) -> PlaneGraph:
    """Stacked triangulation whose outer face eats a fraction of the edges.

    An edge with the outer face on exactly one side is deleted when that
    keeps the graph connected, merging its inner triangle into the outer
    face.  Bounded faces stay triangles while the outer skeleton gains
    chords, cut vertices and bridges.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    rots, _ = _stacked(n, rng)
    G = PlaneGraph(n, rots, (1, 0))
    steps = round(erosion * G.num_edges)
    for _ in range(steps):
        outer = G.faces.outer
        on_outer = set(outer)
        cand = sorted({tuple(sorted(d)) for d in outer if (d[1], d[0]) not in on_outer})
        rng.shuffle(cand)
        for u, v in cand:
            rots = [list(r) for r in G.rotations]
            rots[u].remove(v)
            rots[v].remove(u)
            if len(components(rots, range(n))) != 1:
                continue
            keep = next(d for d in outer if set(d) != {u, v})
            G = PlaneGraph(n, rots, keep)
            break
        else:
            break
    return G
