"""Plane graphs given by rotation systems.

Conventions
-----------
``rotations[v]`` lists the neighbours of ``v`` in one fixed cyclic order
(called clockwise throughout the package).  A dart is an ordered pair
``(u, v)`` for an edge ``uv``.  Faces are traced with the rule

    successor(u -> v) = (v -> w),  w = the neighbour preceding u in rotations[v]

and the face *of* a dart is the walk containing it; ``outer_dart`` names a
dart of the outer face.  The generators in :mod:`clustercolor.generators`
list neighbours by increasing angle in standard axes (clockwise on a
y-down screen), which makes the face of a dart the region on its left and
bounded-face walks counterclockwise.

All graphs here are simple and connected; disconnected inputs are split
with :func:`split_components` before anything else touches them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AsymmetricRotation,
    Disconnected,
    EdgeExists,
    EmptySelection,
    GenusPositive,
    InvalidDart,
    LoopOrMultiEdge,
    NoSuchEdge,
    NotConnectedSet,
    VerticesNotOnFace,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class FaceSet:
    """Closed dart walks of a plane graph, one per face."""

    faces: tuple[tuple[Dart, ...], ...]
    outer_index: int
    dart_face: dict[Dart, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.faces)

    def vertices(self, face: int) -> tuple[int, ...]:
        """Vertex sequence of a face walk (tails of its darts)."""
        return tuple(d[0] for d in self.faces[face])

    @property
    def outer(self) -> tuple[Dart, ...]:
        return self.faces[self.outer_index]

    def bounded(self) -> list[int]:
        return [i for i in range(len(self.faces)) if i != self.outer_index]


@dataclass(frozen=True)
class VertexMap:
    """Correspondence between the vertices of an old and a new graph.

    ``forward`` maps old ids to new ids (absent when a vertex was dropped);
    ``origin`` maps every new id to the set of old ids it stands for
    (empty for freshly created vertices).
    """

    forward: dict[int, int]
    origin: dict[int, frozenset[int]]

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls({v: v for v in range(n)}, {v: frozenset((v,)) for v in range(n)})

    def lift(self, coloring: Sequence[int] | dict[int, int]) -> dict[int, int]:
        """Pull a coloring of the new graph back to the old ids."""
        out: dict[int, int] = {}
        items = coloring.items() if isinstance(coloring, dict) else enumerate(coloring)
        for new, c in items:
            for old in self.origin.get(new, ()):
                out[old] = c
        return out

    def check(self) -> None:
        for old, new in self.forward.items():
            assert old in self.origin[new], (old, new)
        for new, olds in self.origin.items():
            for old in olds:
                assert self.forward[old] == new, (old, new)


class PlaneGraph:
    """Connected simple graph with a rotation system and an outer face.

    Instances are immutable; every surgery function returns a new graph.
    Construction validates the rotation system (symmetric, simple,
    connected, genus zero) and traces the faces once.
    """

    __slots__ = ("n", "rotations", "outer_dart", "_pos", "_faces", "_m")

    def __init__(self, n: int, rotations: Sequence[Sequence[int]],
                 outer_dart: Dart | Sequence[int] | None = None):
        rotations = tuple(tuple(int(w) for w in r) for r in rotations)
        if len(rotations) != n:
            raise AsymmetricRotation(f"expected {n} rotation lists, got {len(rotations)}")
        if n < 1:
            raise Disconnected("a plane graph needs at least one vertex")
        pos = []
        for v, rot in enumerate(rotations):
            p = {}
            for i, w in enumerate(rot):
                if not 0 <= w < n:
                    raise AsymmetricRotation(f"vertex {v} lists unknown neighbour {w}")
                if w == v:
                    raise LoopOrMultiEdge(f"loop at vertex {v}")
                if w in p:
                    raise LoopOrMultiEdge(f"parallel edges {v}-{w}")
                p[w] = i
            pos.append(p)
        m2 = 0
        for v, rot in enumerate(rotations):
            m2 += len(rot)
            for w in rot:
                if v not in pos[w]:
                    raise AsymmetricRotation(f"{w} in rotation of {v} but not vice versa")
        self.n = n
        self.rotations = rotations
        self._pos = tuple(pos)
        self._m = m2 // 2
        if outer_dart is None:
            if self._m:
                raise InvalidDart("outer_dart is required when the graph has edges")
        else:
            outer_dart = (int(outer_dart[0]), int(outer_dart[1]))
            u, v = outer_dart
            if not (0 <= u < n and v in pos[u]):
                raise InvalidDart(f"outer dart {outer_dart} is not a dart")
        self.outer_dart = outer_dart
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in rotations[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != n:
            raise Disconnected(f"only {len(seen)} of {n} vertices reachable from 0")
        self._faces = self._trace()
        if n - self._m + len(self._faces) != 2:
            raise GenusPositive(
                f"V - E + F = {n} - {self._m} + {len(self._faces)} != 2")

    # -- basic queries -------------------------------------------------
    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self._m}, outer_dart={self.outer_dart})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (self.n, self.rotations, self.outer_dart) == (other.n, other.rotations, other.outer_dart)

    def __hash__(self) -> int:
        return hash((self.n, self.rotations, self.outer_dart))

    @property
    def num_edges(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @property
    def max_degree(self) -> int:
        return max(len(r) for r in self.rotations)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rotations[u] if u < v]

    def position(self, v: int, w: int) -> int:
        return self._pos[v][w]

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        rot = self.rotations[v]
        return (v, rot[(self._pos[v][u] - 1) % len(rot)])

    def _trace(self) -> FaceSet:
        if self._m == 0:
            return FaceSet(((),), 0, {})
        darts = sorted((u, v) for u in range(self.n) for v in self.rotations[u])
        dart_face: dict[Dart, int] = {}
        walks = []
        for d in darts:
            if d in dart_face:
                continue
            fid = len(walks)
            walk = []
            cur = d
            while cur not in dart_face:
                dart_face[cur] = fid
                walk.append(cur)
                cur = self.next_dart(cur)
            walks.append(tuple(walk))
        return FaceSet(tuple(walks), dart_face[self.outer_dart], dart_face)

    @property
    def faces(self) -> FaceSet:
        return self._faces

    def outer_walk(self) -> tuple[int, ...]:
        """Vertices of the outer face walk, in walk order (with repeats)."""
        if self._m == 0:
            return (0,)
        f = self._faces
        walk = f.outer
        i = walk.index(self.outer_dart)
        return tuple(d[0] for d in walk[i:] + walk[:i])

    def with_outer(self, dart: Dart) -> "PlaneGraph":
        return PlaneGraph(self.n, self.rotations, dart)

    def to_dict(self) -> dict:
        return {"n": self.n, "rotations": [list(r) for r in self.rotations],
                "outer": None if self.outer_dart is None else list(self.outer_dart)}


def build_plane_graph(n: int, rotations: Sequence[Sequence[int]],
                      outer_dart: Dart | Sequence[int] | None) -> PlaneGraph:
    return PlaneGraph(n, rotations, outer_dart)


def trace_faces(G: PlaneGraph) -> FaceSet:
    return G.faces


def boundary_layers(G: PlaneGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(O, O2)``: outer-face vertices and their outside neighbours."""
    outer = frozenset(G.outer_walk())
    second = set()
    for v in outer:
        for w in G.rotations[v]:
            if w not in outer:
                second.add(w)
    return outer, frozenset(second)


def peel(G: PlaneGraph) -> list[frozenset[int]]:
    """Onion layers: repeatedly strip the outer-face vertices."""
    layers = []
    remaining = set(range(G.n))
    while remaining:
        layer = set()
        for H, vm in induced_plane_subgraph(G, remaining):
            for v in H.outer_walk():
                layer |= vm.origin[v]
        layers.append(frozenset(layer))
        remaining -= layer
    return layers


# -- internal multigraph machinery ------------------------------------------
#
# Surgery that may create loops or parallel edges (contraction) or that
# needs to know which region of the old outer face survives (vertex
# deletion) runs on a half-edge structure: edge e has darts 2e and 2e+1,
# dart 2e runs from ends[e][0] to ends[e][1].

class _HalfEdges:
    def __init__(self, G: PlaneGraph):
        self.ends: list[tuple[int, int]] = []
        eid = {}
        for u, v in G.edges():
            eid[(u, v)] = len(self.ends)
            self.ends.append((u, v))
        self.tail: dict[int, int] = {}
        self.rot: dict[int, list[int]] = {}
        for u in range(G.n):
            lst = []
            for w in G.rotations[u]:
                d = 2 * eid[(u, w)] if u < w else 2 * eid[(w, u)] + 1
                lst.append(d)
                self.tail[d] = u
            self.rot[u] = lst
        self.outer_darts = set()
        if G.outer_dart is not None:
            for u, w in G.faces.outer:
                self.outer_darts.add(2 * eid[(u, w)] if u < w else 2 * eid[(w, u)] + 1)

    def contract(self, e: int, survivor: int) -> None:
        """Merge the ends of non-loop edge ``e`` into ``survivor``."""
        da = 2 * e if self.tail[2 * e] == survivor else 2 * e + 1
        a, b = self.tail[da], self.tail[da ^ 1]
        ra, rb = self.rot[a], self.rot[b]
        i, j = ra.index(da), rb.index(da ^ 1)
        ra = ra[i + 1:] + ra[:i]
        rb = rb[j + 1:] + rb[:j]
        for d in rb:
            self.tail[d] = a
        self.rot[a] = ra + rb
        del self.rot[b]
        del self.tail[2 * e], self.tail[2 * e + 1]
        self.outer_darts.discard(2 * e)
        self.outer_darts.discard(2 * e + 1)

    def head(self, d: int) -> int:
        return self.tail[d ^ 1]

    def faces(self) -> dict[int, int]:
        """Map every live dart to a face id."""
        pos = {}
        for v, lst in self.rot.items():
            for i, d in enumerate(lst):
                pos[d] = i
        face: dict[int, int] = {}
        nxt = 0
        for d0 in sorted(pos):
            if d0 in face:
                continue
            d = d0
            while d not in face:
                face[d] = nxt
                t = d ^ 1
                lst = self.rot[self.tail[t]]
                d = lst[(pos[t] - 1) % len(lst)]
            nxt += 1
        return face

    def extract(self, keep_edges: set[int], vertices: Iterable[int]):
        """Build one simple plane graph per component of the kept edges.

        Deleted edges merge the faces on their two sides; the outer face of
        each piece is the merged region containing the old outer face.
        Returns a list of ``(rotations_by_old_id, outer_dart_old_ids)``.
        """
        face = self.faces()
        parent = list(range(max(face.values(), default=-1) + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d, f in face.items():
            if d // 2 not in keep_edges:
                a, b = find(f), find(face[d ^ 1])
                if a != b:
                    parent[a] = b
        outer_face = None
        for d in self.outer_darts:
            if d in face:
                outer_face = find(face[d])
                break
        vertices = sorted(set(vertices))
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for e in keep_edges:
            a, b = self.tail[2 * e], self.tail[2 * e + 1]
            adj[a].append(b)
            adj[b].append(a)
        seen = set()
        pieces = []
        for s in vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            k = 0
            while k < len(comp):
                for w in adj[comp[k]]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                k += 1
            comp_set = set(comp)
            rots = {}
            outer = None
            for v in sorted(comp):
                lst = []
                for d in self.rot[v]:
                    if d // 2 in keep_edges:
                        lst.append(self.head(d))
                        if outer is None and outer_face is not None and find(face[d]) == outer_face:
                            outer = (v, self.head(d))
                rots[v] = lst
            if outer is None and any(rots.values()):
                # the old outer region is not adjacent to this piece from any
                # side we can see; fall back on its longest face
                outer = _longest_face_dart(rots)
            assert comp_set == set(rots)
            pieces.append((rots, outer))
        return pieces


def _longest_face_dart(rots: dict[int, list[int]]) -> Dart:
    ids = sorted(rots)
    idx = {v: i for i, v in enumerate(ids)}
    G = PlaneGraph(len(ids), [[idx[w] for w in rots[v]] for v in ids], (0, idx[rots[ids[0]][0]]))
    best = max(range(len(G.faces)), key=lambda f: (len(G.faces.faces[f]), -f))
    u, v = G.faces.faces[best][0]
    return (ids[u], ids[v])


def _relabel(rots: dict[int, list[int]], outer: Dart | None,
             origin_of: dict[int, frozenset[int]] | None = None) -> tuple[PlaneGraph, VertexMap]:
    ids = sorted(rots)
    idx = {v: i for i, v in enumerate(ids)}
    G = PlaneGraph(len(ids), [[idx[w] for w in rots[v]] for v in ids],
                   None if outer is None else (idx[outer[0]], idx[outer[1]]))
    if origin_of is None:
        origin = {idx[v]: frozenset((v,)) for v in ids}
    else:
        origin = {idx[v]: origin_of[v] for v in ids}
    forward = {old: new for new, olds in origin.items() for old in olds}
    return G, VertexMap(forward, origin)


def induced_plane_subgraph(G: PlaneGraph, keep: Iterable[int]) -> list[tuple[PlaneGraph, VertexMap]]:
    """One plane graph per connected component of ``G[keep]``.

    Rotations are restricted in order; each piece's outer face is the face
    containing the region of ``G``'s outer face.  Pieces are ordered by
    their smallest original vertex id.
    """
    keep = set(keep)
    if not keep:
        raise EmptySelection("keep set is empty")
    if len(keep) == G.n:
        return [(G, VertexMap.identity(G.n))]
    he = _HalfEdges(G)
    kept = {e for e, (a, b) in enumerate(he.ends) if a in keep and b in keep}
    out = []
    for rots, outer in he.extract(kept, keep):
        out.append(_relabel(rots, outer))
    return out


def split_components(n: int, rotations: Sequence[Sequence[int]],
                     outer_darts: Sequence[Dart] | Dart | None = None) -> list[tuple[PlaneGraph, VertexMap]]:
    """Split a possibly disconnected rotation system into plane graphs.

    A component containing one of ``outer_darts`` uses that dart's face as
    its outer face; any other component uses its longest face.
    """
    if outer_darts is None:
        outer_darts = []
    elif len(outer_darts) == 2 and all(isinstance(x, int) for x in outer_darts):
        outer_darts = [tuple(outer_darts)]
    outer_darts = [tuple(d) for d in outer_darts]
    adj = [list(r) for r in rotations]
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        k = 0
        while k < len(comp):
            for w in adj[comp[k]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            k += 1
        comp.sort()
        rots = {v: list(adj[v]) for v in comp}
        cs = set(comp)
        outer = next((d for d in outer_darts if d[0] in cs), None)
        if outer is None and len(comp) > 1:
            outer = _longest_face_dart(rots)
        out.append(_relabel(rots, outer))
    return out


def contract_connected_sets(G: PlaneGraph, groups: Sequence[Iterable[int]]) -> tuple[PlaneGraph, VertexMap]:
    """Contract each (connected, pairwise disjoint) vertex set to one vertex.

    Edges inside a set disappear, parallel edges created by the contraction
    are merged into one.  The merged vertex takes the smallest id of its
    group before relabelling.
    """
    groups = [set(g) for g in groups]
    owner = {}
    for gi, g in enumerate(groups):
        if not g:
            raise NotConnectedSet("empty set")
        for v in g:
            if v in owner:
                raise NotConnectedSet(f"vertex {v} in two sets")
            owner[v] = gi
    he = _HalfEdges(G)
    eid = {frozenset(ab): e for e, ab in enumerate(he.ends)}
    tree_edges = []
    for g in groups:
        root = min(g)
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in G.rotations[v]:
                if w in g and w not in seen:
                    seen.add(w)
                    queue.append(w)
                    tree_edges.append(eid[frozenset((v, w))])
        if seen != g:
            raise NotConnectedSet(f"set {sorted(g)} does not induce a connected subgraph")
    for e in tree_edges:
        he.contract(e, min(he.tail[2 * e], he.tail[2 * e + 1]))
    tree = set(tree_edges)
    keep = set()
    seen_pairs = set()
    for e in range(len(he.ends)):
        if e in tree:
            continue
        a, b = he.tail[2 * e], he.tail[2 * e + 1]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in seen_pairs:
            continue
        seen_pairs.add(key)
        keep.add(e)
    pieces = he.extract(keep, he.rot.keys())
    assert len(pieces) == 1
    rots, outer = pieces[0]
    origin_of = {}
    for v in rots:
        if v in owner:
            origin_of[v] = frozenset(groups[owner[v]])
        else:
            origin_of[v] = frozenset((v,))
    return _relabel(rots, outer, origin_of)


def contract_connected_set(G: PlaneGraph, X: Iterable[int]) -> tuple[PlaneGraph, VertexMap]:
    return contract_connected_sets(G, [X])


# -- face-local insertions ------------------------------------------------------

def _corner(G: PlaneGraph, face: int, i: int) -> tuple[int, int, int]:
    """``(vertex, q, p)`` for walk position ``i``: the corner sits between
    ``q`` (next walk vertex) and ``p`` (previous) in the vertex's rotation."""
    walk = G.faces.faces[face]
    u, q = walk[i]
    p = walk[i - 1][0]
    return u, q, p


def _insert(rot: list[int], q: int, p: int, items: Sequence[int]) -> list[int]:
    m = len(rot)
    if m == 0:
        return list(items)
    for j in range(m):
        if rot[j] == q and rot[(j + 1) % m] == p:
            return rot[:j + 1] + list(items) + rot[j + 1:]
    raise VerticesNotOnFace(f"no corner between {q} and {p}")


def _positions_in_walk(G: PlaneGraph, face: int, attach: Sequence[int]) -> list[int]:
    walk = G.faces.vertices(face)
    L = len(walk)
    if L == 0:
        raise VerticesNotOnFace("face has no boundary")
    for start in range(L):
        if walk[start] != attach[0]:
            continue
        out = [start]
        off = 0
        ok = True
        for a in attach[1:]:
            off += 1
            while off < L and walk[(start + off) % L] != a:
                off += 1
            if off >= L:
                ok = False
                break
            out.append((start + off) % L)
        if ok:
            return out
    raise VerticesNotOnFace(f"{list(attach)} not found in walk order on face {face}")


def add_apex_at_positions(G: PlaneGraph, face: int, positions: Sequence[int]) -> PlaneGraph:
    """Add a vertex inside ``face`` joined to the corners at ``positions``
    (walk indices, cyclically increasing)."""
    z = G.n
    rots = [list(r) for r in G.rotations]
    attach = []
    for i in positions:
        u, q, p = _corner(G, face, i)
        rots[u] = _insert(rots[u], q, p, [z])
        attach.append(u)
    if len(set(attach)) != len(attach):
        raise VerticesNotOnFace("attachment vertices must be distinct")
    rots.append(attach)
    outer = G.outer_dart if G.outer_dart is not None else (z, attach[0])
    return PlaneGraph(G.n + 1, rots, outer)


def add_apex_in_face(G: PlaneGraph, face: int, attach: Sequence[int]) -> PlaneGraph:
    if not attach:
        raise VerticesNotOnFace("empty attachment")
    if len(set(attach)) != len(attach):
        raise VerticesNotOnFace("attachment vertices must be distinct")
    if G.num_edges == 0:
        if list(attach) != [0]:
            raise VerticesNotOnFace(f"{list(attach)} not on the face")
        return PlaneGraph(2, [[1], [0]], (0, 1))
    return add_apex_at_positions(G, face, _positions_in_walk(G, face, attach))


def add_edge_at_positions(G: PlaneGraph, face: int, i: int, j: int) -> PlaneGraph:
    u, qu, pu = _corner(G, face, i)
    v, qv, pv = _corner(G, face, j)
    if u == v:
        raise VerticesNotOnFace("endpoints must differ")
    if G.has_edge(u, v):
        raise EdgeExists(f"edge {u}-{v} already present")
    rots = [list(r) for r in G.rotations]
    rots[u] = _insert(rots[u], qu, pu, [v])
    rots[v] = _insert(rots[v], qv, pv, [u])
    return PlaneGraph(G.n, rots, G.outer_dart)


def add_edge_in_face(G: PlaneGraph, face: int, u: int, v: int) -> PlaneGraph:
    if u == v:
        raise VerticesNotOnFace("endpoints must differ")
    if G.has_edge(u, v):
        raise EdgeExists(f"edge {u}-{v} already present")
    walk = G.faces.vertices(face)
    if u not in walk or v not in walk:
        raise VerticesNotOnFace(f"{u} or {v} not on face {face}")
    return add_edge_at_positions(G, face, walk.index(u), walk.index(v))


def subdivide_edge(G: PlaneGraph, u: int, v: int) -> tuple[PlaneGraph, int]:
    if not (0 <= u < G.n and 0 <= v < G.n and G.has_edge(u, v)):
        raise NoSuchEdge(f"no edge {u}-{v}")
    r = G.n
    rots = [list(x) for x in G.rotations]
    rots[u][G.position(u, v)] = r
    rots[v][G.position(v, u)] = r
    rots.append([u, v])
    outer = G.outer_dart
    if outer == (u, v):
        outer = (u, r)
    elif outer == (v, u):
        outer = (v, r)
    return PlaneGraph(G.n + 1, rots, outer), r


def remove_edges(G: PlaneGraph, edges: Iterable[tuple[int, int]]) -> PlaneGraph:
    """Delete edges whose removal keeps the graph connected and keeps the
    outer face's darts (callers guarantee both)."""
    rots = [list(r) for r in G.rotations]
    for u, v in edges:
        if not G.has_edge(u, v):
            raise NoSuchEdge(f"no edge {u}-{v}")
        rots[u].remove(v)
        rots[v].remove(u)
    return PlaneGraph(G.n, rots, G.outer_dart)


def face_of_dart(G: PlaneGraph, d: Dart) -> int:
    try:
        return G.faces.dart_face[(d[0], d[1])]
    except KeyError:
        raise InvalidDart(f"{d} is not a dart") from None


def components(adj: dict[int, Iterable[int]] | Sequence[Iterable[int]], vertices: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced by ``vertices``."""
    vs = set(vertices)
    seen = set()
    out = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        k = 0
        while k < len(comp):
            for w in adj[comp[k]]:
                if w in vs and w not in seen:
                    seen.add(w)
                    comp.append(w)
            k += 1
        out.append(comp)
    return out
