"""Near-triangulation of a plane graph by nested-cycle gadgets.

Every bounded face that is not already a triangle receives a new cycle
``u_1..u_k`` (k = length of the face walk), ``u_i`` joined to walk vertices
``x_{i-1}`` and ``x_i``, and a zig-zag of chords triangulating the inner
k-gon.  The input stays an induced subgraph on its original ids, every new
vertex has degree at most 6 and an original vertex of degree ``deg``
ends with degree at most ``3 * deg``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plane import PlaneGraph


@dataclass(frozen=True)
class Augmentation:
    graph: PlaneGraph
    added: frozenset[int]
    face_of: dict[int, int]


def zigzag_chords(k: int) -> list[tuple[int, int]]:
    """Chords (1-based cycle indices) triangulating a k-gon ``u_1..u_k``.

    Edges already on the cycle are skipped.
    """
    chords = []
    for i in range(1, (k + 1) // 2):
        for j in (k - i, k - i + 1):
            a, b = min(i, j), max(i, j)
            if b - a in (0, 1) or (a == 1 and b == k):
                continue
            if (a, b) not in chords:
                chords.append((a, b))
    return chords


def is_near_triangulated(G: PlaneGraph) -> bool:
    F = G.faces
    for f in F.bounded():
        walk = F.faces[f]
        if len(walk) != 3 or len({d[0] for d in walk}) != 3:
            return False
    return True


def near_triangulate(G: PlaneGraph) -> Augmentation:
    F = G.faces
    rots = [list(r) for r in G.rotations]
    # insertions[v][j] = new neighbours going into the corner that follows
    # rotation slot j of v
    insertions: dict[int, dict[int, list[int]]] = {}
    new_rots: list[list[int]] = []
    face_of: dict[int, int] = {}
    nxt = G.n
    for f in F.bounded():
        walk = F.faces[f]
        k = len(walk)
        if k == 3:
            continue
        xs = [d[0] for d in walk]
        us = list(range(nxt, nxt + k))
        nxt += k
        chords: dict[int, list[int]] = {i: [] for i in range(k)}
        for a, b in zigzag_chords(k):
            chords[a - 1].append(b - 1)
            chords[b - 1].append(a - 1)
        for i in range(k):
            # u_i sits at the walk edge x_{i-1} x_i
            u = us[i]
            inner = sorted(chords[i], key=lambda j: (j - i) % k)
            new_rots.append([us[i - 1], xs[i - 1], xs[i], us[(i + 1) % k]] + [us[j] for j in inner])
            face_of[u] = f
            # corner of x_i: between its next walk vertex and its previous one
            x, q, p = xs[i], xs[(i + 1) % k], xs[i - 1]
            r = rots[x]
            m = len(r)
            slot = next(j for j in range(m) if r[j] == q and r[(j + 1) % m] == p)
            insertions.setdefault(x, {})[slot] = [us[(i + 1) % k], us[i]]
    if nxt == G.n:
        return Augmentation(G, frozenset(), {})
    for x, by_slot in insertions.items():
        r = rots[x]
        out = []
        for j, w in enumerate(r):
            out.append(w)
            out.extend(by_slot.get(j, ()))
        rots[x] = out
    H = PlaneGraph(nxt, rots + new_rots, G.outer_dart)
    return Augmentation(H, frozenset(range(G.n, nxt)), face_of)
