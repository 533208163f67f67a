"""Monochromatic component census and property checks.

The checker never trusts the colorer: layers ``O`` and ``O2`` and every
bound are recomputed from the graph.  A failed property carries one
offending component or vertex as its witness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import bounds
from .errors import PartialColoring
from .plane import PlaneGraph, boundary_layers

Coloring = Sequence[int]


@dataclass
class ColorCensus:
    count: int
    histogram: dict[int, int]
    max_size: int
    largest: list[list[int]]


@dataclass
class ComponentReport:
    by_color: dict[int, ColorCensus]
    components: list[tuple[int, frozenset[int]]] = field(repr=False)

    def max_size(self) -> int:
        return max((c.max_size for c in self.by_color.values()), default=0)

    def to_dict(self) -> dict:
        return {
            str(c): {"count": cc.count,
                     "histogram": {str(k): v for k, v in sorted(cc.histogram.items())},
                     "max_size": cc.max_size,
                     "largest": cc.largest}
            for c, cc in sorted(self.by_color.items())
        }


@dataclass
class PropertyResult:
    name: str
    passed: bool
    bound: int | None = None
    observed: int | None = None
    witness: list[int] | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "bound": None if self.bound is None else str(self.bound),
                "observed": self.observed, "witness": self.witness}


@dataclass
class PropertyReport:
    results: list[PropertyResult]
    max_component: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "max_component": self.max_component,
                "properties": [r.to_dict() for r in self.results]}


def _as_list(G: PlaneGraph, coloring) -> list[int]:
    if isinstance(coloring, Mapping):
        missing = [v for v in range(G.n) if v not in coloring]
        if missing:
            raise PartialColoring(f"uncolored vertices {missing[:10]}")
        return [coloring[v] for v in range(G.n)]
    coloring = list(coloring)
    if len(coloring) != G.n or any(c is None for c in coloring):
        raise PartialColoring("coloring does not cover every vertex")
    return coloring


def components_of(adj, coloring: Sequence[int], vertices=None) -> list[tuple[int, frozenset[int]]]:
    """Monochromatic components as ``(color, vertex set)`` pairs."""
    vs = range(len(coloring)) if vertices is None else vertices
    seen = set()
    out = []
    for s in vs:
        if s in seen:
            continue
        c = coloring[s]
        comp = [s]
        seen.add(s)
        k = 0
        while k < len(comp):
            for w in adj[comp[k]]:
                if w not in seen and coloring[w] == c:
                    seen.add(w)
                    comp.append(w)
            k += 1
        out.append((c, frozenset(comp)))
    return out


def monochromatic_components(G: PlaneGraph, coloring) -> ComponentReport:
    col = _as_list(G, coloring)
    comps = components_of(G.rotations, col)
    by_color = {}
    for c in sorted(set(col)):
        mine = [s for cc, s in comps if cc == c]
        sizes = Counter(len(s) for s in mine)
        mx = max(sizes)
        largest = sorted(sorted(s) for s in mine if len(s) == mx)
        by_color[c] = ColorCensus(len(mine), dict(sorted(sizes.items())), mx, largest)
    return ComponentReport(by_color, comps)


def _worst(comps, color, touching, bound, name) -> PropertyResult:
    worst = None
    for c, s in comps:
        if c == color and (touching is None or s & touching):
            if worst is None or len(s) > len(worst):
                worst = s
    size = 0 if worst is None else len(worst)
    ok = size <= bound
    return PropertyResult(name, ok, bound, size, None if ok else sorted(worst))


def _no_color(vertices, col, color, name) -> PropertyResult:
    bad = sorted(v for v in vertices if col[v] == color)
    return PropertyResult(name, not bad, None, len(bad), bad[:1] or None)


def check_theorem_properties(G: PlaneGraph, coloring, D: int, *,
                             case2: bool = False,
                             case3: tuple[int, int, int, int] | None = None) -> PropertyReport:
    """Properties (i)-(v) of the near-triangulated coloring, with the
    barred constants; optionally the chordless-cycle extras (a)-(c) or the
    triangulated-skeleton extras (1)-(3) given ``case3 = (u, v, phi_u, phi_v)``.
    """
    col = _as_list(G, coloring)
    if D < G.max_degree:
        raise ValueError(f"D={D} is below the maximum degree {G.max_degree}")
    D = max(D, 1)
    O, O2 = boundary_layers(G)
    comps = components_of(G.rotations, col)
    g1, g2 = bounds.barred_bounds(D)
    res = [
        _no_color(O, col, 3, "(i) no color 3 on O"),
        _no_color(O2, col, 1, "(ii) no color 1 on O2"),
        _worst(comps, 1, O, g1, "(iii) 1-components meeting O"),
        _worst(comps, 2, O | O2, g2, "(iv) 2-components meeting O+O2"),
        _max_all(comps, bounds.global_bound(D), "(v) all components"),
    ]
    if case2:
        t1, t2 = bounds.tight_bounds(D)
        res += [
            _worst(comps, 1, O, t1, "(a) 1-components meeting O"),
            _worst(comps, 2, O | O2, t2, "(b) 2-components meeting O+O2"),
            _worst(comps, 3, O2, g2, "(c) 3-components meeting O2"),
        ]
    if case3 is not None:
        u, v, pu, pv = case3
        res += _case3_checks(G, col, comps, O, O2, D, u, v, pu, pv)
    return PropertyReport(res, max(len(s) for _, s in comps))


def _max_all(comps, bound, name) -> PropertyResult:
    c, s = max(comps, key=lambda cs: len(cs[1]))
    ok = len(s) <= bound
    return PropertyResult(name, ok, bound, len(s), None if ok else sorted(s))


def _case3_checks(G, col, comps, O, O2, D, u, v, pu, pv) -> list[PropertyResult]:
    worst = None
    escaped = None
    for c, s in comps:
        if s & O:
            if not s <= O and escaped is None:
                escaped = s
            if worst is None or len(s) > len(worst):
                worst = s
    size = len(worst) if worst else 0
    ok1 = escaped is None and size <= 2 * D
    wit1 = None if ok1 else sorted(escaped if escaped is not None else worst)
    bad2 = sorted(w for w in O2 if col[w] != 3)
    bad3 = [w for w in G.rotations[u] if w != v and col[w] == pu]
    ok3 = col[u] == pu and col[v] == pv and not bad3
    return [
        PropertyResult("(1) components meeting O stay in O, size <= 2D", ok1, 2 * D, size, wit1),
        PropertyResult("(2) O2 colored 3", not bad2, None, len(bad2), bad2[:1] or None),
        PropertyResult("(3) prescribed colors at u, v", ok3, None, len(bad3),
                       None if ok3 else ([u] if not bad3 else bad3[:1])),
    ]


def check_corollary_properties(G: PlaneGraph, coloring, D: int) -> PropertyReport:
    """Guarantees for an arbitrary plane graph of maximum degree <= D.

    For ``D <= 2`` the guarantee is a proper 3-coloring instead.
    """
    col = _as_list(G, coloring)
    if D < G.max_degree:
        raise ValueError(f"D={D} is below the maximum degree {G.max_degree}")
    comps = components_of(G.rotations, col)
    mx = max(len(s) for _, s in comps)
    if any(c not in (1, 2, 3) for c in col):
        bad = next(v for v, c in enumerate(col) if c not in (1, 2, 3))
        return PropertyReport([PropertyResult("colors in {1,2,3}", False, None, None, [bad])], mx)
    if D <= 2:
        return PropertyReport([_max_all(comps, 1, "proper 3-coloring")], mx)
    O, _ = boundary_layers(G)
    res = [_max_all(comps, bounds.final_bound(D), "(i) all components <= (15D)^(32D+8)"),
           _no_color(O, col, 3, "(ii) only colors 1, 2 on the outer face")]
    escaped = next((s for c, s in comps if c == 1 and s & O and not s <= O), None)
    r3 = _worst(comps, 1, O, bounds.outer_one_component_bound(D), "(iii) 1-components meeting O")
    if escaped is not None:
        r3 = PropertyResult(r3.name, False, r3.bound, r3.observed, sorted(escaped))
    res.append(r3)
    return PropertyReport(res, mx)


def check_lemma_postconditions(inst, coloring) -> PropertyReport:
    """Check a 2-coloring against the path lemma (instance with ``path``)
    or the cycle lemma (instance with ``cycle``)."""
    G = inst.graph
    col = _as_list(G, coloring)
    comps = components_of(G.rotations, col)
    must_be_two = set(inst.stable)
    if hasattr(inst, "path"):
        must_be_two |= {inst.path[0], inst.path[-1]}
        c1, c2 = bounds.path_lemma_caps(inst.d, inst.Delta)
        label = "2d+1"
    else:
        c1, c2 = bounds.f1(inst.d), bounds.f2(inst.d, inst.Delta)
        label = "2d+5"
    bad = sorted(v for v in must_be_two if col[v] != 2)
    other = sorted(v for v in range(G.n) if col[v] not in (1, 2))
    res = [
        PropertyResult("only colors 1, 2", not other, None, len(other), other[:1] or None),
        PropertyResult("prescribed vertices colored 2", not bad, None, len(bad), bad[:1] or None),
        _worst(comps, 1, None, c1, f"1-components <= {label}"),
        _worst(comps, 2, None, c2, "2-component cap"),
    ]
    return PropertyReport(res, max(len(s) for _, s in comps))
