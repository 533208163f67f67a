"""Two-colorings of "path or cycle plus stable set" plane graphs.

Path instances
    The vertex set splits into an induced path ``P`` (x ... y, left to right)
    and a stable set ``S`` holding a root vertex ``r`` adjacent to x and y
    only, with the outer face bounded by ``P + r``.  Bounded faces are
    organised in a rooted tree (each face hangs below the stable vertex it
    shares with its parent); internal path vertices are *corners* (on the
    face itself) or *pivots* (reached through a stable vertex of the face).
    Corners get an alternating coloring between the face's two anchors,
    pivots are coloured by the depth of their face modulo ``2d``.

Cycle instances
    A chordless cycle ``C`` bounding a face plus a stable set.  They are
    normalised into path instances (drop low-degree stable vertices, add
    apexes at degree-2 cycle vertices, add edges so consecutive cycle
    vertices share a stable neighbour, subdivide one cycle edge by ``r``),
    coloured, and the coloring is restricted back.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolation, InternalInvariantViolation, InvalidColor
from .plane import (
    PlaneGraph,
    VertexMap,
    add_apex_at_positions,
    add_edge_at_positions,
    induced_plane_subgraph,
    subdivide_edge,
    _corner,
)

ONE, TWO = 1, 2


def opposite(c: int) -> int:
    return TWO if c == ONE else ONE


# -- alternate coloring ---------------------------------------------------

def alternate_coloring(chain, color_a: int, color_b: int) -> list[int]:
    """Colors for ``chain = (a, x_1, ..., x_k, b)`` keeping the end colors.

    One inner vertex gets 2 exactly when both ends are 1; otherwise the
    first and last inner vertices take the color opposite to their end and
    the ones in between alternate starting from the first.
    """
    if color_a not in (ONE, TWO) or color_b not in (ONE, TWO):
        raise InvalidColor(f"end colors must be 1 or 2, got {color_a}, {color_b}")
    k = len(chain) - 2
    if k < 0:
        raise ValueError("chain needs two ends")
    inner: list[int] = []
    if k == 1:
        inner = [TWO if color_a == color_b == ONE else ONE]
    elif k >= 2:
        inner = [opposite(color_a)]
        for _ in range(2, k):
            inner.append(opposite(inner[-1]))
        inner.append(opposite(color_b))
    out = [color_a] + inner + [color_b]
    for i in range(len(out) - 2):
        if out[i] == out[i + 1] == out[i + 2]:
            raise InternalInvariantViolation(f"three consecutive equal colors in {out}")
    if k >= 1 and ((color_a == TWO and out[1] != ONE) or (color_b == TWO and out[-2] != ONE)):
        raise InternalInvariantViolation(f"end colored 2 next to inner 2 in {out}")
    return out


# -- path instances ---------------------------------------------------------

@dataclass(frozen=True)
class LemmaInstance:
    graph: PlaneGraph
    path: tuple[int, ...]
    stable: frozenset[int]
    root_vertex: int
    d: int
    Delta: int


def make_path_instance(graph: PlaneGraph, path, stable, root_vertex: int) -> LemmaInstance:
    path = tuple(path)
    d = max(graph.degree(v) for v in path) if path else 0
    inst = LemmaInstance(graph, path, frozenset(stable), root_vertex, d, graph.max_degree)
    validate_path_instance(inst)
    return inst


def validate_path_instance(inst: LemmaInstance) -> None:
    G, P, S, r = inst.graph, inst.path, inst.stable, inst.root_vertex
    pos = {v: i for i, v in enumerate(P)}
    if len(P) < 3:
        raise HypothesisViolation("path has at least 3 vertices", f"|P| = {len(P)}")
    if len(pos) != len(P) or set(P) & S or len(P) + len(S) != G.n:
        raise HypothesisViolation("V = P + S partition")
    for i in range(len(P) - 1):
        if not G.has_edge(P[i], P[i + 1]):
            raise HypothesisViolation("P is a path", f"{P[i]}-{P[i + 1]} missing")
    if sum(1 for u in P for w in G.rotations[u] if w in pos) != 2 * (len(P) - 1):
        raise HypothesisViolation("P is induced")
    for s in S:
        if any(w in S for w in G.rotations[s]):
            raise HypothesisViolation("S is stable", f"vertex {s}")
    if r not in S or sorted(G.rotations[r]) != sorted((P[0], P[-1])):
        raise HypothesisViolation("r adjacent to exactly the two endpoints of P")
    walk = G.outer_walk()
    if len(walk) != len(P) + 1 or set(walk) != set(P) | {r}:
        raise HypothesisViolation("outer face bounded by P + r")
    for s in S:
        nb = G.rotations[s]
        if len(nb) < 2:
            raise HypothesisViolation("stable vertices have degree >= 2", f"vertex {s}")
        if len(nb) == 2 and G.has_edge(nb[0], nb[1]):
            raise HypothesisViolation("degree-2 stable vertices have non-adjacent neighbours", f"vertex {s}")
    for i in range(len(P) - 1):
        if not (set(G.rotations[P[i]]) & set(G.rotations[P[i + 1]]) & S):
            raise HypothesisViolation("consecutive path vertices share a stable neighbour",
                                      f"{P[i]}, {P[i + 1]}")
    if inst.d < 2:
        raise HypothesisViolation("d >= 2")


@dataclass
class FaceNode:
    face: int
    a: int
    s: int
    b: int
    parent: int | None
    depth: int
    stable: frozenset[int]
    corners: tuple[int, ...]
    pivots: tuple[int, ...]
    psi: dict[int, int]
    isolated: frozenset[int]
    children: list[int] = field(default_factory=list)


@dataclass
class FaceTree:
    nodes: dict[int, FaceNode]
    root: int
    order: list[int]
    owner: dict[int, int]

    def faces_at(self, inst: LemmaInstance, w: int) -> list[int]:
        """Bounded faces around path vertex ``w``."""
        G = inst.graph
        F = G.faces
        return sorted({F.dart_face[(w, u)] for u in G.rotations[w]} - {F.outer_index})


def build_face_tree(inst: LemmaInstance) -> FaceTree:
    validate_path_instance(inst)
    G, P, S, r = inst.graph, inst.path, inst.stable, inst.root_vertex
    F = G.faces
    pos = {v: i for i, v in enumerate(P)}
    x, y = P[0], P[-1]
    fverts = {f: set(F.vertices(f)) for f in F.bounded()}
    faces_of: dict[int, list[int]] = {}
    for s in S:
        faces_of[s] = sorted({F.dart_face[(s, w)] for w in G.rotations[s]} - {F.outer_index})
    roots = faces_of[r]
    if len(roots) != 1:
        raise HypothesisViolation("r lies on exactly one bounded face")
    rho = roots[0]

    def triplet(f: int, s: int) -> tuple[int, int]:
        walk = F.vertices(f)
        if walk.count(s) != 1:
            raise HypothesisViolation("face tree", f"{s} appears {walk.count(s)} times on face {f}")
        i = walk.index(s)
        a, b = walk[i - 1], walk[(i + 1) % len(walk)]
        if a not in pos or b not in pos:
            raise HypothesisViolation("face tree", f"neighbours of {s} on face {f} not on P")
        return (a, b) if pos[a] < pos[b] else (b, a)

    def leftmost(s: int) -> int:
        return min(pos[w] for w in G.rotations[s])

    nodes: dict[int, FaceNode] = {}
    pending = {rho: (x, r, y, None, 0)}
    queue = [rho]
    head = 0
    while head < len(queue):
        f = queue[head]
        head += 1
        a, s, b, parent, depth = pending[f]
        if parent is not None:
            shared = fverts[f] & fverts[parent] & S
            if shared != {s}:
                raise HypothesisViolation("face tree", f"face {f} shares {sorted(shared)} with its parent")
        Sf = frozenset((fverts[f] & S) - {s})
        corners = tuple(sorted((fverts[f] - S) - {a, b}, key=pos.__getitem__))
        if corners and not pos[a] < pos[corners[0]] <= pos[corners[-1]] < pos[b]:
            raise HypothesisViolation("face tree", f"corners of face {f} not between its anchors")
        nbrs = {w for t in Sf for w in G.rotations[t]}
        pivots = tuple(sorted(nbrs - set(corners) - {a, b}, key=pos.__getitem__))
        psi = {}
        for v in pivots:
            cand = [t for t in Sf if G.has_edge(v, t)]
            if len(cand) != 1:
                raise HypothesisViolation("face tree", f"pivot {v} of face {f} has {len(cand)} stable neighbours on it")
            psi[v] = cand[0]
        isolated = frozenset(v for v in pivots if _is_isolated(G, v))
        nodes[f] = FaceNode(f, a, s, b, parent, depth, Sf, corners, pivots, psi, isolated)
        kids = []
        for t in Sf:
            for g in faces_of[t]:
                if g == f:
                    continue
                if g in pending:
                    raise HypothesisViolation("face tree", f"face {g} reached twice")
                ga, gb = triplet(g, t)
                pending[g] = (ga, t, gb, f, depth + 1)
                kids.append((leftmost(t), pos[ga], g))
        kids.sort()
        nodes[f].children = [g for _, _, g in kids]
        queue.extend(nodes[f].children)
    if set(nodes) != set(F.bounded()):
        raise HypothesisViolation("face tree", "some bounded faces are not reached")
    owner: dict[int, int] = {}
    for f, node in nodes.items():
        for v in node.corners + node.pivots:
            if v in owner:
                raise HypothesisViolation("face tree", f"path vertex {v} owned by faces {owner[v]} and {f}")
            owner[v] = f
    if set(owner) != set(P[1:-1]):
        raise HypothesisViolation("face tree", "corners and pivots do not cover the inner path")
    order = []
    stack = [rho]
    while stack:
        f = stack.pop()
        order.append(f)
        stack.extend(reversed(nodes[f].children))
    return FaceTree(nodes, rho, order, owner)


def _is_isolated(G: PlaneGraph, v: int) -> bool:
    if G.degree(v) != 3:
        return False
    F = G.faces
    faces = {F.dart_face[(v, w)] for w in G.rotations[v]} - {F.outer_index}
    return len(faces) == 2 and all(len(F.faces[f]) == 3 for f in faces)


def color_path_instance(inst: LemmaInstance, tree: FaceTree | None = None) -> list[int]:
    """2-coloring with x, y and all of S colored 2, small 1-components and
    bounded 2-components."""
    if tree is None:
        tree = build_face_tree(inst)
    G, P, d = inst.graph, inst.path, inst.d
    pos = {v: i for i, v in enumerate(P)}
    color: dict[int, int] = {s: TWO for s in inst.stable}
    for f in tree.order:
        node = tree.nodes[f]
        if f == tree.root:
            color[P[0]] = color[P[-1]] = TWO
        a, b = node.a, node.b
        if a not in color or b not in color:
            raise InternalInvariantViolation(f"anchors of face {f} uncolored")
        chain = (a,) + node.corners + (b,)
        for v, c in zip(chain, alternate_coloring(chain, color[a], color[b])):
            color[v] = c
        low = node.depth % (2 * d) < d
        for v in node.pivots:
            color[v] = TWO if v in node.isolated or not low else ONE
    if len(color) != G.n:
        raise InternalInvariantViolation("path lemma left vertices uncolored")
    del pos
    return [color[v] for v in range(G.n)]


def one_paths(inst: LemmaInstance, coloring) -> list[tuple[int, ...]]:
    """Maximal runs of color 1 along the path."""
    runs, cur = [], []
    for v in inst.path:
        if coloring[v] == ONE:
            cur.append(v)
        elif cur:
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


# -- cycle instances -----------------------------------------------------

@dataclass(frozen=True)
class CycleInstance:
    graph: PlaneGraph
    cycle: tuple[int, ...]
    stable: frozenset[int]
    d: int
    Delta: int


def make_cycle_instance(graph: PlaneGraph, cycle=None) -> CycleInstance:
    """Validate and normalise: afterwards the cycle bounds the outer face
    and is listed in outer-walk order."""
    if cycle is None:
        cycle = graph.outer_walk()
    cycle = tuple(cycle)
    cs = set(cycle)
    if len(cycle) < 3 or len(cs) != len(cycle):
        raise HypothesisViolation("C is a cycle")
    for i in range(len(cycle)):
        if not graph.has_edge(cycle[i - 1], cycle[i]):
            raise HypothesisViolation("C is a cycle", f"{cycle[i - 1]}-{cycle[i]} missing")
    if sum(1 for u in cycle for w in graph.rotations[u] if w in cs) != 2 * len(cycle):
        raise HypothesisViolation("C is chordless")
    stable = frozenset(range(graph.n)) - cs
    for s in stable:
        if any(w in stable for w in graph.rotations[s]):
            raise HypothesisViolation("S is stable", f"vertex {s}")
    F = graph.faces
    target = None
    for f in range(len(F)):
        if set(F.vertices(f)) == cs and len(F.faces[f]) == len(cycle):
            target = f
            if f == F.outer_index:
                break
    if target is None:
        raise HypothesisViolation("C bounds a face")
    if target != F.outer_index:
        graph = graph.with_outer(F.faces[target][0])
    cycle = graph.outer_walk()
    d = max(graph.degree(v) for v in cycle)
    return CycleInstance(graph, cycle, stable, d, graph.max_degree)


@dataclass(frozen=True)
class NormalizationPlan:
    """Everything needed to rebuild the path instance from the cycle
    instance (``replay``) and to undo it (``reverse``).

    ``removed``: stable vertices of low degree, in removal order, each with
    its own rotation and, per neighbour, the neighbour's rotation entry
    preceding it at removal time.  ``vertex_map`` relabels the survivors.
    ``apexes``: ``(new id, [(vertex, q, p), ...])`` corners used.
    ``edges``: ``((s, q, p), (v, q, p))`` corners used.
    ``split``: ``(x, y, r)``.
    """

    removed: tuple[tuple[int, tuple[int, ...], tuple[tuple[int, int], ...]], ...]
    vertex_map: VertexMap
    apexes: tuple[tuple[int, tuple[tuple[int, int, int], ...]], ...]
    edges: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]
    split: tuple[int, int, int]

    @property
    def removed_Sstar(self) -> frozenset[int]:
        return frozenset(s for s, _, _ in self.removed)

    @property
    def added_apexes(self) -> tuple[int, ...]:
        return tuple(z for z, _ in self.apexes)

    @property
    def added_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((e[0][0], e[1][0]) for e in self.edges)


def low_stable_vertices(cyc: CycleInstance) -> frozenset[int]:
    G = cyc.graph
    out = set()
    for s in cyc.stable:
        nb = G.rotations[s]
        if len(nb) <= 1 or (len(nb) == 2 and G.has_edge(nb[0], nb[1])):
            out.add(s)
    return frozenset(out)


def _removal_record(rots: dict[int, list[int]], order) -> list:
    rec = []
    for s in order:
        entries = []
        for w in rots[s]:
            lst = rots[w]
            i = lst.index(s)
            entries.append((w, lst[i - 1]))
            lst.pop(i)
        rec.append((s, tuple(rots[s]), tuple(entries)))
        del rots[s]
    return rec


def normalize_cycle_instance(cyc: CycleInstance) -> tuple[LemmaInstance, NormalizationPlan]:
    G = cyc.graph
    sstar = sorted(low_stable_vertices(cyc))
    rots = {v: list(r) for v, r in enumerate(G.rotations)}
    removed = _removal_record(rots, sstar)
    keep = sorted(rots)
    if sstar:
        (Gs, vm), = induced_plane_subgraph(G, keep)
        c0, c1 = cyc.cycle[0], cyc.cycle[1]
        Gs = Gs.with_outer((vm.forward[c0], vm.forward[c1]))
    else:
        Gs, vm = G, VertexMap.identity(G.n)
    C = [vm.forward[c] for c in cyc.cycle]
    m = len(C)
    stable = {vm.forward[s] for s in cyc.stable if s not in set(sstar)}

    # step 1: apexes on a maximal stable set of degree-2 cycle vertices
    start = min(range(m), key=lambda i: cyc.cycle[i])
    Z: list[int] = []
    for t in range(m):
        i = (start + t) % m
        if Gs.degree(C[i]) != 2:
            continue
        if any(abs(i - j) in (1, m - 1) for j in Z):
            continue
        Z.append(i)
    cur = Gs
    apexes = []
    for i in Z:
        nxt_, v, prv = C[(i + 1) % m], C[i], C[i - 1]
        f = cur.faces.dart_face[(nxt_, v)]
        walk = cur.faces.faces[f]
        p = walk.index((nxt_, v))
        positions = [p, (p + 1) % len(walk), (p + 2) % len(walk)]
        if [walk[q][0] for q in positions] != [nxt_, v, prv]:
            raise InternalInvariantViolation(f"cycle vertex {v} is not of degree 2 on its inner face")
        corners = tuple(_corner(cur, f, q) for q in positions)
        z = cur.n
        cur = add_apex_at_positions(cur, f, positions)
        stable.add(z)
        apexes.append((z, corners))

    # step 2: consecutive cycle vertices (anticlockwise) get a common stable neighbour
    edges = []
    anti = [C[0]] + C[:0:-1]
    for j in range(m):
        u, v = anti[j], anti[(j + 1) % m]
        if set(cur.rotations[u]) & set(cur.rotations[v]) & stable:
            continue
        f = cur.faces.dart_face[(u, v)]
        walk = cur.faces.faces[f]
        p = walk.index((u, v))
        s = walk[p - 1][0]
        if s not in stable:
            raise InternalInvariantViolation(f"inner face at {u}-{v} has no stable vertex before {u}")
        ps, pv = (p - 1) % len(walk), (p + 1) % len(walk)
        rec = (_corner(cur, f, ps), _corner(cur, f, pv))
        cur = add_edge_at_positions(cur, f, ps, pv)
        edges.append(rec)

    # split the smallest cycle edge with r
    i = min(range(m), key=lambda i: tuple(sorted((C[i], C[(i + 1) % m]))))
    x, y = C[i], C[(i + 1) % m]
    cur, r = subdivide_edge(cur, x, y)
    cur = cur.with_outer((x, r))
    path = tuple(C[(i - t) % m] for t in range(m))
    assert path[0] == x and path[-1] == y
    stable.add(r)
    inst = make_path_instance(cur, path, stable, r)
    plan = NormalizationPlan(tuple(removed), vm, tuple(apexes), tuple(edges), (x, y, r))
    return inst, plan


def _insert_after(lst: list[int], q: int, p: int, item: int) -> None:
    m = len(lst)
    for j in range(m):
        if lst[j] == q and lst[(j + 1) % m] == p:
            lst.insert(j + 1, item)
            return
    raise InternalInvariantViolation(f"corner {q}->{p} not found")


def replay_plan(cyc: CycleInstance, plan: NormalizationPlan) -> PlaneGraph:
    """Rebuild the path-instance graph from the cycle instance using only
    the recorded plan (no face tracing, no choices)."""
    rots = {v: list(r) for v, r in enumerate(cyc.graph.rotations)}
    for s, _, _ in plan.removed:
        for w in rots.pop(s):
            rots[w].remove(s)
    fw = plan.vertex_map.forward
    cur = [None] * len(fw)
    for old, lst in rots.items():
        cur[fw[old]] = [fw[w] for w in lst]
    for z, corners in plan.apexes:
        for v, q, p in corners:
            _insert_after(cur[v], q, p, z)
        cur.append([v for v, _, _ in corners])
    for (s, qs, ps), (v, qv, pv) in plan.edges:
        _insert_after(cur[s], qs, ps, v)
        _insert_after(cur[v], qv, pv, s)
    x, y, r = plan.split
    cur[x][cur[x].index(y)] = r
    cur[y][cur[y].index(x)] = r
    cur.append([x, y])
    return PlaneGraph(len(cur), cur, (x, r))


def reverse_plan(graph: PlaneGraph, plan: NormalizationPlan) -> dict[int, list[int]]:
    """Undo the normalisation on the path-instance graph; returns rotations
    keyed by the original cycle-instance ids."""
    cur = {v: list(r) for v, r in enumerate(graph.rotations)}
    x, y, r = plan.split
    del cur[r]
    cur[x][cur[x].index(r)] = y
    cur[y][cur[y].index(r)] = x
    for (s, _, _), (v, _, _) in reversed(plan.edges):
        cur[s].remove(v)
        cur[v].remove(s)
    for z, corners in reversed(plan.apexes):
        del cur[z]
        for v, _, _ in corners:
            cur[v].remove(z)
    origin = plan.vertex_map.origin
    back = {new: next(iter(olds)) for new, olds in origin.items()}
    out = {back[v]: [back[w] for w in lst] for v, lst in cur.items()}
    for s, own, entries in reversed(plan.removed):
        for w, pred in entries:
            lst = out[w]
            lst.insert(lst.index(pred) + 1, s)
        out[s] = list(own)
    return out


def canonical_rotations(rots) -> dict[int, tuple[int, ...]]:
    """Rotations rotated to start at their smallest entry."""
    items = rots.items() if isinstance(rots, dict) else enumerate(rots)
    out = {}
    for v, lst in items:
        lst = list(lst)
        if lst:
            i = lst.index(min(lst))
            lst = lst[i:] + lst[:i]
        out[v] = tuple(lst)
    return out


def color_cycle_instance(cyc: CycleInstance) -> list[int]:
    """2-coloring with all of S colored 2, 1-components at most 2d+5 and
    2-components at most d(6 Delta)^(3d+2)."""
    inst, plan = normalize_cycle_instance(cyc)
    inner = color_path_instance(inst)
    col: list[int | None] = [None] * cyc.graph.n
    for new, olds in plan.vertex_map.origin.items():
        for old in olds:
            col[old] = inner[new]
    for s in plan.removed_Sstar:
        col[s] = TWO
    if any(c is None for c in col):
        raise InternalInvariantViolation("cycle lemma left vertices uncolored")
    return col
