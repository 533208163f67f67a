"""Command-line front end: gen | color | verify | oracle | bounds.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bounds, generators, oracle, verify
from .errors import ClusterColorError, PlaneGraphError
from .induction import color_rotation_system
from .plane import PlaneGraph, split_components

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("tri-grid", "gk", "triangle-free", "near-triangulation", "plane", "eroded")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class GraphFile:
    n: int
    rotations: list[list[int]]
    outer: list[tuple[int, int]]

    def pieces(self):
        return split_components(self.n, self.rotations, self.outer)

    def single(self) -> PlaneGraph:
        return PlaneGraph(self.n, self.rotations, self.outer[0] if self.outer else None)


def graph_to_json(G: PlaneGraph) -> dict:
    return {"n": G.n, "rotations": [list(r) for r in G.rotations],
            "outer": None if G.outer_dart is None else list(G.outer_dart)}


def _dump(obj, path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def read_graph(path: str) -> GraphFile:
    data = _load_json(path)
    try:
        n = int(data["n"])
        rots = [[int(w) for w in r] for r in data["rotations"]]
        outer = data.get("outer")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed graph file ({exc})") from None
    if len(rots) != n:
        raise InputError(f"{path}: {len(rots)} rotations for n={n}")
    if outer is None:
        darts = []
    elif len(outer) == 2 and all(isinstance(x, int) for x in outer):
        darts = [tuple(outer)]
    else:
        darts = [tuple(d) for d in outer]
    gf = GraphFile(n, rots, darts)
    gf.pieces()  # validates every component
    return gf


def read_coloring(path: str, n: int) -> list[int]:
    data = _load_json(path)
    try:
        col = [int(c) for c in data["colors"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed coloring file ({exc})") from None
    if len(col) != n:
        raise InputError(f"{path}: {len(col)} colors for {n} vertices")
    return col


def to_dot(gf: GraphFile, col: list[int]) -> str:
    fill = {1: "lightblue", 2: "salmon", 3: "palegreen"}
    lines = ["graph G {", "  node [style=filled];"]
    for v in range(gf.n):
        lines.append(f'  {v} [fillcolor="{fill.get(col[v], "white")}", label="{v}:{col[v]}"];')
    for u in range(gf.n):
        for w in gf.rotations[u]:
            if u < w:
                lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CLUSTERCOLOR_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"CLUSTERCOLOR_SEED={env!r} is not an integer") from None


def cmd_gen(args) -> int:
    fam, k, n = args.family, args.k, args.n
    seed = _seed(args)
    if fam in ("tri-grid", "gk", "triangle-free") and k is None:
        raise InputError(f"--k is required for {fam}")
    if fam in ("near-triangulation", "plane", "eroded") and n is None:
        raise InputError(f"--n is required for {fam}")
    try:
        if fam == "tri-grid":
            G = generators.triangular_grid(k)
        elif fam == "gk":
            G = generators.gk_family(k)
        elif fam == "triangle-free":
            G = generators.triangle_free_family(k)
        elif fam == "near-triangulation":
            G = generators.random_near_triangulation(n, seed)
        elif fam == "plane":
            G = generators.random_plane_graph(n, seed, args.rate)
        else:
            G = generators.random_eroded_near_triangulation(n, seed, args.rate)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _dump(graph_to_json(G), args.output)
    return EXIT_OK


def _census(gf: GraphFile, col: list[int]) -> dict:
    out = {}
    for P, vm in gf.pieces():
        sub = [0] * P.n
        for new, olds in vm.origin.items():
            sub[new] = col[next(iter(olds))]
        rep = verify.monochromatic_components(P, sub)
        for c, cc in rep.by_color.items():
            slot = out.setdefault(str(c), {"count": 0, "max_size": 0})
            slot["count"] += cc.count
            slot["max_size"] = max(slot["max_size"], cc.max_size)
    return out


def cmd_color(args) -> int:
    gf = read_graph(args.graph)
    col = color_rotation_system(gf.n, gf.rotations, gf.outer, debug=args.debug)
    _dump({"colors": col}, args.output)
    if args.report:
        census = _census(gf, col)
        _dump({"n": gf.n, "components": census,
               "max_component": max((c["max_size"] for c in census.values()), default=0)}, args.report)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(gf, col))
    return EXIT_OK


def verify_file(gf: GraphFile, col: list[int], delta: int | None, mode: str) -> dict:
    pieces = gf.pieces()
    D = max((P.max_degree for P, _ in pieces), default=0) if delta is None else delta
    reports = []
    for P, vm in pieces:
        sub = [0] * P.n
        for new, olds in vm.origin.items():
            sub[new] = col[next(iter(olds))]
        if mode == "theorem":
            rep = verify.check_theorem_properties(P, sub, max(D, 1))
        else:
            rep = verify.check_corollary_properties(P, sub, max(D, 1))
        d = rep.to_dict()
        d["vertices"] = sorted(next(iter(o)) for o in vm.origin.values())
        reports.append(d)
    return {"delta": D, "mode": mode, "passed": all(r["passed"] for r in reports),
            "max_component": max((r["max_component"] for r in reports), default=0),
            "components": reports}


def cmd_verify(args) -> int:
    gf = read_graph(args.graph)
    col = read_coloring(args.coloring, gf.n)
    try:
        report = verify_file(gf, col, args.delta, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _dump(report, args.output)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    gf = read_graph(args.graph)
    budget = oracle.SearchBudget(args.node_limit, args.time_limit)
    if args.bound is None:
        value, witness, nodes = oracle.min_max_component(gf.rotations, args.colors, budget, jobs=args.jobs)
        status = "Unknown" if value is None else "Solved"
        _dump({"colors": args.colors, "status": status, "min_max_component": value,
               "witness": witness, "nodes": nodes}, args.output)
        return EXIT_BUDGET if value is None else EXIT_OK
    res = oracle.feasible(gf.rotations, args.colors, args.bound, budget, jobs=args.jobs)
    out = res.to_dict()
    out.update(colors=args.colors, bound=args.bound)
    _dump(out, args.output)
    return EXIT_BUDGET if res.status is oracle.Status.UNKNOWN else EXIT_OK


def cmd_bounds(args) -> int:
    if args.delta < 1:
        raise InputError("--delta must be at least 1")
    table = {k: str(v) for k, v in bounds.bounds_table(args.delta).items()}
    _dump(table, args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clustercolor", description="3-colorings of plane graphs with small monochromatic components")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, help="default: $CLUSTERCOLOR_SEED or 0")
    g.add_argument("--rate", type=float, default=0.3, help="deletion/erosion rate")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="color a graph")
    c.add_argument("graph")
    c.add_argument("-o", "--output")
    c.add_argument("--report", help="write a component census")
    c.add_argument("--dot", help="write a Graphviz file colored by class")
    c.add_argument("--debug", action="store_true", help="check properties at every recursion level")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--delta", type=int, help="degree parameter (default: max degree)")
    v.add_argument("--mode", choices=("corollary", "theorem"), default="corollary")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact search for small components")
    o.add_argument("graph")
    o.add_argument("--colors", type=int, required=True)
    o.add_argument("--bound", type=int, help="decide this bound; omit to minimise")
    o.add_argument("--node-limit", type=int)
    o.add_argument("--time-limit", type=float)
    o.add_argument("--jobs", type=int, default=1)
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bounds", help="print the bound table")
    b.add_argument("--delta", type=int, required=True)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)
    return p


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = getattr(args, "output", None)
    if out not in (None, "-") and out in {getattr(args, k, None) for k in ("graph", "coloring")}:
        sys.stderr.write("error: output path equals an input path\n")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, PlaneGraphError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ClusterColorError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    raise SystemExit(dispatch())


if __name__ == "__main__":
    main()
