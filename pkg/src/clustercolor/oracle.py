"""Exact search for colorings with small monochromatic components.

``feasible`` decides whether a graph has a ``colors``-coloring whose
monochromatic components all have at most ``bound`` vertices.  It is a
depth-first search (vertices by decreasing degree) that keeps component
sizes in a disjoint-set structure with rollback, never opens a color
beyond the largest used one plus one, and checks after every step that
each uncolored neighbour still has some admissible color.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .plane import PlaneGraph


class Status(Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = None
    time_limit: float | None = None


@dataclass
class OracleResult:
    status: Status
    witness: list[int] | None
    nodes: int

    def to_dict(self) -> dict:
        return {"status": self.status.value, "witness": self.witness, "nodes": self.nodes}


class _OutOfBudget(Exception):
    pass


def _adjacency(G) -> list[list[int]]:
    if isinstance(G, PlaneGraph):
        return [list(r) for r in G.rotations]
    return [list(r) for r in G]


class _RollbackDSU:
    """Union by size, no path compression, so every union can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        a, b = self.find(a), self.find(b)
        if a == b:
            return self.size[a]
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.history.append((a, b))
        return self.size[a]

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            a, b = self.history.pop()
            self.parent[b] = b
            self.size[a] -= self.size[b]


class _Search:
    def __init__(self, adj, colors: int, bound: int, budget: SearchBudget):
        self.adj = adj
        self.n = len(adj)
        self.colors = colors
        self.bound = bound
        self.budget = budget
        self.order = sorted(range(self.n), key=lambda v: (-len(adj[v]), v))
        self.col = [0] * self.n
        self.dsu = _RollbackDSU(self.n)
        self.nodes = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget.node_limit is not None and self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def _joined_size(self, v: int, c: int) -> int:
        roots = {self.dsu.find(w) for w in self.adj[v] if self.col[w] == c}
        return 1 + sum(self.dsu.size[r] for r in roots)

    def _admissible(self, v: int, max_used: int) -> bool:
        top = min(self.colors, max_used + 1)
        return any(self._joined_size(v, c) <= self.bound for c in range(1, top + 1))

    def _place(self, v: int, c: int) -> bool:
        self.col[v] = c
        for w in self.adj[v]:
            if self.col[w] == c and self.dsu.union(v, w) > self.bound:
                return False
        return True

    def run(self, prefix=()) -> bool:
        max_used = 0
        for i, c in enumerate(prefix):
            v = self.order[i]
            if c > max_used + 1 or not self._place(v, c):
                return False
            max_used = max(max_used, c)
        return self._dfs(len(prefix), max_used)

    def _dfs(self, i: int, max_used: int) -> bool:
        if i == self.n:
            return True
        self._tick()
        v = self.order[i]
        for c in range(1, min(self.colors, max_used + 1) + 1):
            mark = self.dsu.mark()
            ok = self._place(v, c)
            if ok:
                nu = max(max_used, c)
                ok = all(self.col[w] or self._admissible(w, nu) for w in self.adj[v])
                if ok and self._dfs(i + 1, nu):
                    return True
            self.dsu.rollback(mark)
            self.col[v] = 0
        return False


def _prefixes(colors: int, depth: int):
    """Color prefixes for the first ``depth`` vertices of the search order,
    with the same first-use symmetry breaking as the search."""
    out = [((), 0)]
    for _ in range(depth):
        nxt = []
        for p, m in out:
            for c in range(1, min(colors, m + 1) + 1):
                nxt.append((p + (c,), max(m, c)))
        out = nxt
    return [p for p, _ in out]


def _run_branch(args):
    adj, colors, bound, budget, prefix = args
    s = _Search(adj, colors, bound, budget)
    try:
        ok = s.run(prefix)
    except _OutOfBudget:
        return Status.UNKNOWN, None, s.nodes
    return (Status.FEASIBLE if ok else Status.INFEASIBLE), (list(s.col) if ok else None), s.nodes


def feasible(G, colors: int, bound: int, budget: SearchBudget | None = None, *, jobs: int = 1) -> OracleResult:
    """Is there a ``colors``-coloring with every monochromatic component of
    size at most ``bound``?  ``Unknown`` when the budget runs out."""
    if colors < 1 or bound < 1:
        raise ValueError("colors and bound must be at least 1")
    budget = budget or SearchBudget()
    adj = _adjacency(G)
    if not adj:
        return OracleResult(Status.FEASIBLE, [], 0)
    if jobs <= 1 or len(adj) < 4:
        status, witness, nodes = _run_branch((adj, colors, bound, budget, ()))
        return OracleResult(status, witness, nodes)
    prefixes = _prefixes(colors, min(3, len(adj)))
    tasks = [(adj, colors, bound, budget, p) for p in prefixes]
    total = 0
    unknown = False
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for status, witness, nodes in pool.map(_run_branch, tasks):
            total += nodes
            if status is Status.FEASIBLE:
                return OracleResult(status, witness, total)
            unknown |= status is Status.UNKNOWN
    return OracleResult(Status.UNKNOWN if unknown else Status.INFEASIBLE, None, total)


def max_component(adj, coloring) -> int:
    """Largest monochromatic component (union-find over same-colored edges)."""
    n = len(adj)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for w in adj[u]:
            if u < w and coloring[u] == coloring[w]:
                a, b = find(u), find(w)
                if a != b:
                    parent[a] = b
    sizes: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return max(sizes.values(), default=0)


def min_max_component(G, colors: int, budget: SearchBudget | None = None, *, jobs: int = 1):
    """Least ``b`` with a feasible coloring, and a witness.

    Returns ``(b, witness, nodes)``, or ``(None, None, nodes)`` when the
    budget runs out first.  A shared budget covers the whole linear search.
    """
    adj = _adjacency(G)
    n = len(adj)
    if n == 0:
        return 0, [], 0
    budget = budget or SearchBudget()
    start = time.monotonic()
    nodes = 0
    for b in range(1, n + 1):
        left = None if budget.time_limit is None else budget.time_limit - (time.monotonic() - start)
        if left is not None and left <= 0:
            return None, None, nodes
        nl = None if budget.node_limit is None else budget.node_limit - nodes
        res = feasible(adj, colors, b, SearchBudget(nl, left), jobs=jobs)
        nodes += res.nodes
        if res.status is Status.UNKNOWN:
            return None, None, nodes
        if res.status is Status.FEASIBLE:
            got = max_component(adj, res.witness)
            # b - 1 was infeasible, so the witness is tight
            assert got == b, (got, b)
            assert feasible(adj, colors, b + 1).status is Status.FEASIBLE if b < n else True
            return b, res.witness, nodes
    raise AssertionError("the all-in-one-component bound n is always feasible")


def enumerate_min_max(G, colors: int) -> int:
    """Minimum over all colorings of the largest monochromatic component,
    by plain enumeration of every coloring."""
    adj = _adjacency(G)
    if not adj:
        return 0
    return min(max_component(adj, col) for col in itertools.product(range(1, colors + 1), repeat=len(adj)))


def enumerate_feasible(G, colors: int, bound: int) -> bool:
    adj = _adjacency(G)
    return any(max_component(adj, col) <= bound
               for col in itertools.product(range(1, colors + 1), repeat=len(adj)))
