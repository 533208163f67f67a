"""3-coloring of near-triangulated plane graphs with bounded monochromatic
components, by induction on the outer-face structure.

Let ``O`` be the outer-face vertices and ``J = G[O]`` the outer skeleton.
The dispatcher picks the first matching case:

* Base: a single vertex.
* DegreeOne: strip pendant vertices, color the rest, put them back.
* ChordlessCycle: ``J`` is a cycle.  Color the interior recursively in a
  rotated frame, contract its 2-components touching the second layer and
  2-color the cycle with the cycle lemma.
* TriangulatedSkeleton: every bounded face of ``J`` is a triangle.  Color
  each interior recursively (rotated, outer layer recolored 3) and ``J`` by
  distance parity from a prescribed outer edge.
* Composite: split along the tree of ``J``'s bounded faces at a deepest
  good face.

Colorings are lists indexed by vertex id.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx

from . import verify
from .errors import (
    AttachmentShapeViolation,
    InteriorDisconnected,
    InternalInvariantViolation,
    NonUniqueNeighborInX0,
    NotNearTriangulated,
    PrescribedEdgeNotOuter,
)
from .lemma_engine import color_cycle_instance, make_cycle_instance, opposite
from .plane import (
    PlaneGraph,
    VertexMap,
    boundary_layers,
    components,
    contract_connected_sets,
    induced_plane_subgraph,
    split_components,
)
from .triangulate import is_near_triangulated, near_triangulate


@dataclass(frozen=True)
class ColorFrame:
    """A permutation of the colors, ``perm[c - 1]`` is the image of ``c``."""

    perm: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.perm}")

    def __call__(self, c: int) -> int:
        return self.perm[c - 1]

    def apply(self, coloring):
        return [self.perm[c - 1] for c in coloring]

    def then(self, other: "ColorFrame") -> "ColorFrame":
        return ColorFrame(tuple(other(self(c)) for c in (1, 2, 3)))


CANONICAL = ColorFrame()
SHIFT = ColorFrame((2, 3, 1))
assert SHIFT.then(SHIFT).then(SHIFT) == CANONICAL


class Case(Enum):
    BASE = "Base"
    DEGREE_ONE = "DegreeOne"
    CHORDLESS_CYCLE = "ChordlessCycle"
    TRIANGULATED_SKELETON = "TriangulatedSkeleton"
    COMPOSITE = "Composite"


@dataclass(frozen=True)
class CaseTag:
    case: Case
    witness: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.case.value


# -- helpers ----------------------------------------------------------------

def _piece(G: PlaneGraph, keep) -> tuple[PlaneGraph, VertexMap]:
    pieces = induced_plane_subgraph(G, keep)
    if len(pieces) != 1:
        raise InternalInvariantViolation(f"expected a connected subgraph, got {len(pieces)} pieces")
    return pieces[0]


def _lift(vm: VertexMap, coloring, into: dict[int, int]) -> None:
    for new, c in enumerate(coloring):
        for old in vm.origin[new]:
            into[old] = c


def _skeleton(G: PlaneGraph) -> tuple[PlaneGraph, VertexMap]:
    O = set(G.outer_walk())
    return _piece(G, O)


def _faces_of_skeleton(J: PlaneGraph, vm: VertexMap) -> list[tuple[int, ...]]:
    """Bounded face walks of ``J`` in the ids of ``G``."""
    back = {new: next(iter(olds)) for new, olds in vm.origin.items()}
    return [tuple(back[v] for v in J.faces.vertices(f)) for f in J.faces.bounded()]


def _is_cycle(J: PlaneGraph) -> bool:
    return J.n >= 3 and J.num_edges == J.n and all(J.degree(v) == 2 for v in range(J.n))


def _ensure_near_triangulated(G: PlaneGraph) -> None:
    if not is_near_triangulated(G):
        raise NotNearTriangulated("some bounded face is not a triangle")


# -- case analysis ------------------------------------------------------------

def classify_case(G: PlaneGraph) -> CaseTag:
    _ensure_near_triangulated(G)
    if G.n == 1:
        return CaseTag(Case.BASE, {"vertex": 0})
    leaf = next((v for v in range(G.n) if G.degree(v) == 1), None)
    if leaf is not None:
        return CaseTag(Case.DEGREE_ONE, {"vertex": leaf})
    J, vm = _skeleton(G)
    if _is_cycle(J):
        return CaseTag(Case.CHORDLESS_CYCLE, {"cycle": G.outer_walk()})
    faces = _faces_of_skeleton(J, vm)
    if all(len(f) == 3 for f in faces):
        return CaseTag(Case.TRIANGULATED_SKELETON, {"faces": faces})
    return CaseTag(Case.COMPOSITE, {"faces": faces})


@dataclass
class TreeNode:
    index: int
    kind: str  # "face" or "bridge"
    boundary: tuple[int, ...]
    parent: int | None = None
    depth: int = 0
    attachment: frozenset[int] = frozenset()
    children: list[int] = field(default_factory=list)
    interior: frozenset[int] = frozenset()

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @property
    def good(self) -> bool:
        if self.kind == "bridge":
            return False
        return not (len(self.boundary) == 3 and len(self.attachment) == 2)


@dataclass
class OuterTree:
    nodes: list[TreeNode]
    root: int

    def subtree(self, i: int) -> list[int]:
        out, stack = [], [i]
        while stack:
            j = stack.pop()
            out.append(j)
            stack.extend(self.nodes[j].children)
        return out

    def span(self, ids) -> set[int]:
        vs: set[int] = set()
        for i in ids:
            vs |= self.nodes[i].vertices | self.nodes[i].interior
        return vs


def build_outer_tree(G: PlaneGraph, J: PlaneGraph | None = None, vm: VertexMap | None = None) -> OuterTree:
    """Tree over the bounded faces (and bridges) of the outer skeleton.

    Faces sharing an edge are linked; at a cut vertex, one node per block
    is linked to one node of the block seen first.  The root is the
    non-triangular face with the smallest vertex ids.  Every tree edge is
    checked to separate its two sides in ``G``.
    """
    if J is None:
        J, vm = _skeleton(G)
    O = set(G.outer_walk())
    nodes: list[TreeNode] = [TreeNode(i, "face", f) for i, f in enumerate(_faces_of_skeleton(J, vm))]
    if not nodes:
        raise AttachmentShapeViolation("skeleton has no bounded face")
    Jx = nx.Graph()
    Jx.add_nodes_from(O)
    Jx.add_edges_from((u, w) for u in O for w in G.rotations[u] if w in O)
    bridges = sorted(tuple(sorted(e)) for e in nx.bridges(Jx))
    for a, b in bridges:
        nodes.append(TreeNode(len(nodes), "bridge", (a, b)))

    # interiors: each component of G - O lies in the face on the left of a skeleton dart
    comp_of: dict[int, int] = {}
    comps = components(G.rotations, set(range(G.n)) - O)
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    owner: dict[int, int] = {}
    F = G.faces
    for node in nodes:
        if node.kind != "face":
            continue
        walk = node.boundary
        found = set()
        for i in range(len(walk)):
            a, b = walk[i], walk[(i + 1) % len(walk)]
            for w in F.vertices(F.dart_face[(a, b)]):
                if w not in O:
                    found.add(comp_of[w])
        for ci in found:
            if ci in owner:
                raise InternalInvariantViolation(f"interior component {ci} inside two skeleton faces")
            owner[ci] = node.index
        node.interior = frozenset(v for ci in found for v in comps[ci])
    if len(owner) != len(comps):
        raise InternalInvariantViolation("interior component outside every skeleton face")

    # links
    edge_faces: dict[frozenset, list[int]] = {}
    for node in nodes:
        if node.kind == "face":
            w = node.boundary
            for i in range(len(w)):
                edge_faces.setdefault(frozenset((w[i], w[(i + 1) % len(w)])), []).append(node.index)
    adj: dict[int, set[int]] = {i: set() for i in range(len(nodes))}
    for fs in edge_faces.values():
        for x in fs:
            for y in fs:
                if x != y:
                    adj[x].add(y)
    block_of_node: dict[int, int] = {}
    blocks = [frozenset(b) for b in nx.biconnected_components(Jx)]
    block_index = {}
    for bi, b in enumerate(blocks):
        for u in b:
            for w in b:
                if u < w and Jx.has_edge(u, w):
                    block_index[(u, w)] = bi
    for node in nodes:
        a, b = sorted(node.boundary[:2])
        block_of_node[node.index] = block_index[(a, b)]
    for cut in sorted(nx.articulation_points(Jx)):
        reps: dict[int, int] = {}
        for node in nodes:
            if cut in node.vertices:
                bi = block_of_node[node.index]
                if bi not in reps or node.index < reps[bi]:
                    reps[bi] = node.index
        rs = sorted(reps.values())
        for x in rs:
            for y in rs:
                if x != y:
                    adj[x].add(y)

    def key(i):
        return (min(nodes[i].boundary), tuple(sorted(nodes[i].boundary)), i)

    cands = [n.index for n in nodes if n.kind == "face" and len(n.boundary) > 3]
    if not cands:
        cands = [n.index for n in nodes if n.kind == "face"]
    root = min(cands, key=key)
    seen = {root}
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for j in sorted(adj[i], key=key):
            if j in seen:
                continue
            # a node reached across a cut vertex must be in another block
            seen.add(j)
            nodes[j].parent = i
            nodes[j].depth = nodes[i].depth + 1
            nodes[i].children.append(j)
            queue.append(j)
    if len(seen) != len(nodes):
        raise AttachmentShapeViolation("skeleton faces do not form a connected tree")
    tree = OuterTree(nodes, root)
    for node in nodes:
        if node.parent is None:
            continue
        p = nodes[node.parent]
        X = p.vertices & node.vertices
        if not (len(X) == 1 or (len(X) == 2 and G.has_edge(*sorted(X)))):
            raise AttachmentShapeViolation(
                f"faces {p.boundary} and {node.boundary} meet in {sorted(X)}")
        node.attachment = frozenset(X)
        _check_separation(G, X, (p.vertices | p.interior) - X, (node.vertices | node.interior) - X)
    return tree


def _check_separation(G: PlaneGraph, X, A, B) -> None:
    if not A or not B:
        return
    seen = set(A)
    queue = deque(A)
    while queue:
        v = queue.popleft()
        for w in G.rotations[v]:
            if w in X or w in seen:
                continue
            if w in B:
                raise AttachmentShapeViolation(f"{sorted(X)} does not separate the two sides")
            seen.add(w)
            queue.append(w)


# -- the cases --------------------------------------------------------------------

class _Ctx:
    def __init__(self, D: int, debug: bool):
        self.D = D
        self.debug = debug


def color_near_triangulated(G: PlaneGraph, D: int | None = None, *, debug: bool = False) -> list[int]:
    """3-coloring of a connected near-triangulated graph satisfying
    properties (i)-(v) for maximum degree ``D`` (default: that of ``G``).

    The result is checked before it is returned.
    """
    _ensure_near_triangulated(G)
    if D is None:
        D = max(G.max_degree, 1)
    if D < G.max_degree:
        raise ValueError(f"D={D} is below the maximum degree {G.max_degree}")
    ctx = _Ctx(D, debug)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        col = _color(G, ctx)
    finally:
        sys.setrecursionlimit(old)
    _assert_report(verify.check_theorem_properties(G, col, D), "theorem properties")
    return col


def _assert_report(report, what: str) -> None:
    if not report.passed:
        f = report.failures()[0]
        raise InternalInvariantViolation(f"{what}: {f.name} failed (bound {f.bound}, observed {f.observed}, witness {f.witness})")


def _color(G: PlaneGraph, ctx: _Ctx) -> list[int]:
    tag = classify_case(G)
    if tag.case is Case.BASE:
        col = [1]
    elif tag.case is Case.DEGREE_ONE:
        col = _color_strip_leaves(G, ctx)
    elif tag.case is Case.CHORDLESS_CYCLE:
        col = _case2(G, ctx)
    elif tag.case is Case.TRIANGULATED_SKELETON:
        col = _case3(G, ctx)
    else:
        col = _case4(G, ctx)
    O, O2 = boundary_layers(G)
    if any(col[v] == 3 for v in O) or any(col[v] == 1 for v in O2):
        raise InternalInvariantViolation(f"{tag.name}: layer colors violated")
    if ctx.debug:
        extra = {}
        if tag.case is Case.CHORDLESS_CYCLE:
            extra["case2"] = True
        elif tag.case is Case.TRIANGULATED_SKELETON:
            extra["case3"] = default_outer_edge(G) + (1, 2)
        _assert_report(verify.check_theorem_properties(G, col, ctx.D, **extra), tag.name)
    return col


def _color_strip_leaves(G: PlaneGraph, ctx: _Ctx) -> list[int]:
    import heapq
    rots = {v: set(G.rotations[v]) for v in range(G.n)}
    heap = [v for v in range(G.n) if len(rots[v]) == 1]
    heapq.heapify(heap)
    removed: list[tuple[int, int]] = []
    alive = set(range(G.n))
    while heap and len(alive) > 1:
        v = heapq.heappop(heap)
        if v not in alive or len(rots[v]) != 1:
            continue
        (u,) = rots[v]
        removed.append((v, u))
        alive.discard(v)
        rots[u].discard(v)
        if len(rots[u]) == 1:
            heapq.heappush(heap, u)
    core, vm = _piece(G, alive)
    out: dict[int, int] = {}
    _lift(vm, _color(core, ctx), out)
    for v, u in reversed(removed):
        out[v] = 1 if out[u] == 2 else 2
    return [out[v] for v in range(G.n)]


def color_case2(G: PlaneGraph, D: int | None = None, *, debug: bool = False) -> list[int]:
    """Chordless outer cycle: coloring with (i)-(v) and the extras (a)-(c)."""
    _ensure_near_triangulated(G)
    J, _ = _skeleton(G)
    if not _is_cycle(J):
        raise InternalInvariantViolation("outer skeleton is not a chordless cycle")
    D = max(G.max_degree, 1) if D is None else D
    col = _case2(G, _Ctx(D, debug))
    _assert_report(verify.check_theorem_properties(G, col, D, case2=True), "chordless cycle case")
    return col


def _case2(G: PlaneGraph, ctx: _Ctx) -> list[int]:
    cycle = G.outer_walk()
    O = set(cycle)
    inner = set(range(G.n)) - O
    col: dict[int, int] = {}
    if not inner:
        start = cycle.index(min(cycle))
        for t in range(len(cycle)):
            col[cycle[(start + t) % len(cycle)]] = 1 if t % 2 == 0 else 2
        return [col[v] for v in range(G.n)]
    pieces = induced_plane_subgraph(G, inner)
    if len(pieces) != 1:
        raise InteriorDisconnected(f"interior has {len(pieces)} components")
    H, vm = pieces[0]
    _lift(vm, SHIFT.apply(_color(H, ctx)), col)
    second = {next(iter(vm.origin[v])) for v in H.outer_walk()}
    twos = [s for c, s in verify.components_of(G.rotations, _full(col, G.n), inner) if c == 2 and s & second]
    keep = O.union(*twos)
    G1, vm1 = _piece(G, keep)
    groups = [[vm1.forward[v] for v in s] for s in twos]
    Gc, vm2 = contract_connected_sets(G1, groups) if groups else (G1, VertexMap.identity(G1.n))
    cyc = make_cycle_instance(Gc, [vm2.forward[vm1.forward[v]] for v in cycle])
    c2 = color_cycle_instance(cyc)
    for v in cycle:
        col[v] = c2[vm2.forward[vm1.forward[v]]]
    for s in twos:
        if c2[vm2.forward[vm1.forward[min(s)]]] != 2:
            raise InternalInvariantViolation("contracted component not colored 2 by the cycle lemma")
    return [col[v] for v in range(G.n)]


def _full(col: dict[int, int], n: int) -> list[int]:
    return [col.get(v, 0) for v in range(n)]


def default_outer_edge(G: PlaneGraph) -> tuple[int, int]:
    return min(tuple(sorted(d)) for d in G.faces.outer)


def color_case3(G: PlaneGraph, u: int | None = None, v: int | None = None,
                phi_u: int = 1, phi_v: int = 2, D: int | None = None, *,
                debug: bool = False) -> list[int]:
    """Triangulated skeleton: coloring with (i)-(v) and the extras (1)-(3)
    for the outer edge ``uv`` and prescribed colors ``phi_u``, ``phi_v``."""
    _ensure_near_triangulated(G)
    if u is None or v is None:
        u, v = default_outer_edge(G)
    D = max(G.max_degree, 1) if D is None else D
    col = _case3(G, _Ctx(D, debug), u, v, phi_u, phi_v)
    _assert_report(verify.check_theorem_properties(G, col, D, case3=(u, v, phi_u, phi_v)),
                   "triangulated skeleton case")
    return col


def _case3(G: PlaneGraph, ctx: _Ctx, u=None, v=None, phi_u=1, phi_v=2) -> list[int]:
    if u is None or v is None:
        u, v = default_outer_edge(G)
    if phi_u not in (1, 2) or phi_v not in (1, 2):
        raise ValueError("prescribed colors must be 1 or 2")
    outer = G.faces.outer
    if (u, v) not in outer and (v, u) not in outer:
        raise PrescribedEdgeNotOuter(f"{u}-{v} is not an outer edge")
    J, vm = _skeleton(G)
    if any(len(f) != 3 for f in _faces_of_skeleton(J, vm)):
        raise InternalInvariantViolation("skeleton has a non-triangular bounded face")
    O = set(G.outer_walk())
    col: dict[int, int] = {}
    for comp in components(G.rotations, set(range(G.n)) - O):
        H, hvm = _piece(G, comp)
        _lift(hvm, SHIFT.apply(_color(H, ctx)), col)
        for w in H.outer_walk():
            for old in hvm.origin[w]:
                col[old] = 3
    dist = {u: 0, v: 0}
    queue = deque([u, v])
    while queue:
        a = queue.popleft()
        for b in G.rotations[a]:
            if b in O and b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    for w in O:
        col[w] = phi_u if dist[w] % 2 == 0 else opposite(phi_u)
    col[u], col[v] = phi_u, phi_v
    return [col[w] for w in range(G.n)]


def color_case4(G: PlaneGraph, D: int | None = None, *, debug: bool = False) -> list[int]:
    _ensure_near_triangulated(G)
    D = max(G.max_degree, 1) if D is None else D
    col = _case4(G, _Ctx(D, debug))
    _assert_report(verify.check_theorem_properties(G, col, D), "composite case")
    return col


def deepest_good(tree: OuterTree) -> int:
    good = [n for n in tree.nodes if n.good]
    return min(good, key=lambda n: (-n.depth, min(n.boundary), tuple(sorted(n.boundary)))).index


def _case4(G: PlaneGraph, ctx: _Ctx) -> list[int]:
    tree = build_outer_tree(G)
    fi = deepest_good(tree)
    f = tree.nodes[fi]
    X0 = f.attachment
    Vf = f.vertices | f.interior
    below = set(tree.subtree(fi))
    V0 = tree.span(i for i in range(len(tree.nodes)) if i not in below)

    col0: dict[int, int] = {}
    if V0:
        G0, vm0 = _piece(G, V0)
        _lift(vm0, _color(G0, ctx), col0)
    Gf, vmf = _piece(G, Vf)
    colf: dict[int, int] = {}
    _lift(vmf, _case2(Gf, ctx), colf)
    if ctx.debug:
        _assert_report(verify.check_theorem_properties(Gf, [colf[next(iter(vmf.origin[w]))] for w in range(Gf.n)],
                                                       ctx.D, case2=True), "composite: chosen face")

    # step 2
    for x in X0:
        colf[x] = col0[x]
    for w in f.boundary:
        if w in X0:
            continue
        nbs = [x for x in G.rotations[w] if x in X0]
        if not nbs:
            continue
        if len(nbs) != 1:
            raise NonUniqueNeighborInX0(f"vertex {w} has neighbours {nbs} in the attachment")
        colf[w] = opposite(col0[nbs[0]])
    for w in f.interior:
        if any(x in X0 for x in G.rotations[w]):
            colf[w] = 3

    # step 3
    parts = [col0, colf]
    for ci in f.children:
        child = tree.nodes[ci]
        Xi = child.attachment
        Vi = tree.span(tree.subtree(ci))
        if child.kind == "bridge":
            (ui,) = Xi
            vi = next(w for w in child.boundary if w != ui)
            pu, pv = colf[ui], opposite(colf[ui])
        else:
            if len(Xi) != 2:
                raise InternalInvariantViolation(f"child face {child.boundary} of the chosen face is good")
            a, b = sorted(Xi)
            ui, vi = (b, a) if b in X0 and a not in X0 else (a, b)
            pu, pv = colf[ui], colf[vi]
        Gi, vmi = _piece(G, Vi)
        ci_col = _case3(Gi, ctx, vmi.forward[ui], vmi.forward[vi], pu, pv)
        if ctx.debug:
            _assert_report(verify.check_theorem_properties(
                Gi, ci_col, ctx.D, case3=(vmi.forward[ui], vmi.forward[vi], pu, pv)), "composite: child side")
        part: dict[int, int] = {}
        _lift(vmi, ci_col, part)
        parts.append(part)

    out: dict[int, int] = {}
    for part in parts:
        for w, c in part.items():
            if out.setdefault(w, c) != c:
                raise InternalInvariantViolation(f"colorings disagree at vertex {w}")
    if len(out) != G.n:
        raise InternalInvariantViolation("composite case left vertices uncolored")
    return [out[w] for w in range(G.n)]


# -- arbitrary plane graphs ----------------------------------------------------------

def _proper_small(G: PlaneGraph) -> list[int]:
    """Proper coloring of a graph of maximum degree <= 2 (paths and cycles)."""
    col = [0] * G.n
    for comp in components(G.rotations, range(G.n)):
        start = min(comp, key=lambda v: (G.degree(v) != 1, v))
        order = [start]
        seen = {start}
        while True:
            nxt = [w for w in G.rotations[order[-1]] if w not in seen]
            if not nxt:
                break
            order.append(min(nxt))
            seen.add(order[-1])
        for i, v in enumerate(order):
            col[v] = 1 + i % 2
        last = order[-1]
        if len(order) > 2 and G.has_edge(order[0], last) and col[last] == col[order[0]]:
            col[last] = 3
    return col


def color_planar(G, D: int | None = None, *, debug: bool = False) -> list[int]:
    """3-coloring of any plane graph (``PlaneGraph`` or a list of
    ``(PlaneGraph, VertexMap)`` pieces of a larger vertex set).

    Maximum degree <= 2 gives a proper coloring.  Otherwise each component
    is near-triangulated, colored with degree parameter ``3 * D`` and
    restricted back.
    """
    pieces = [(G, VertexMap.identity(G.n))] if isinstance(G, PlaneGraph) else list(G)
    n = sum(len(vm.forward) for _, vm in pieces)
    if D is None:
        D = max((P.max_degree for P, _ in pieces), default=0)
    out: dict[int, int] = {}
    for P, vm in pieces:
        if D <= 2:
            _lift(vm, _proper_small(P), out)
            continue
        aug = near_triangulate(P)
        T = aug.graph
        col = color_near_triangulated(T, max(3 * D, T.max_degree), debug=debug)
        _lift(vm, col[:P.n], out)
    return [out[v] for v in range(n)]


def color_rotation_system(n: int, rotations, outer_darts=None, *, debug: bool = False) -> list[int]:
    """Entry point for possibly disconnected inputs."""
    pieces = split_components(n, rotations, outer_darts)
    D = max((P.max_degree for P, _ in pieces), default=0)
    return color_planar(pieces, D, debug=debug)
