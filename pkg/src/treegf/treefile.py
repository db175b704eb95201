"""Text tree files and the JSON encoding of polynomials and counts.

Tree file::

    tree 4            # header: vertex count
    edge 1 2          # exactly n - 1 edge lines, optional weight token
    edge 2 3 x
    edge 3 4 5
    vertex 2 y        # optional vertex weights, after the edges

A weight token is a decimal integer, ``x`` or ``y``.  Omitted weights take
the default of the weight mode used for parsing.
"""

from __future__ import annotations

from typing import Any

from .errors import NotATree, ParseError, TreeGFError
from .genfunc import WeightMode
from .ring import X, Y, Poly2, RingElem, coerce
from .tree import WeightedTree


def _weight(token: str, line: int) -> RingElem:
    if token == "x":
        return X
    if token == "y":
        return Y
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"bad weight {token!r} (expected an integer, x or y)", line) from None


def _vertex_id(token: str, n: int, line: int) -> int:
    try:
        v = int(token, 10)
    except ValueError:
        raise ParseError(f"bad vertex id {token!r}", line) from None
    if not 1 <= v <= n:
        raise ParseError(f"vertex id {v} out of range 1..{n}", line)
    return v


def defaults(mode: WeightMode) -> tuple[RingElem, RingElem]:
    """``(vertex default, edge default)`` for omitted weights."""
    mode = WeightMode(mode)
    vertex = Y if mode in (WeightMode.VERTEX_VAR, WeightMode.BIVARIATE) else 1
    edge = X if mode in (WeightMode.EDGE_VAR, WeightMode.BIVARIATE) else 1
    return vertex, edge


def parse_tree_file(text: str, mode: WeightMode | str = WeightMode.EXPLICIT) -> WeightedTree:
    mode = WeightMode(mode)
    vdefault, edefault = defaults(mode)
    n = None
    edges: list[tuple[int, int, RingElem]] = []
    vweights: dict[int, RingElem] = {}
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, args = tokens[0], tokens[1:]
        if n is None:
            if head != "tree" or len(args) != 1:
                raise ParseError("expected header 'tree <n>'", lineno)
            try:
                n = int(args[0], 10)
            except ValueError:
                raise ParseError(f"bad vertex count {args[0]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
        elif head == "edge":
            if vweights:
                raise ParseError("edge lines must come before vertex lines", lineno)
            if len(args) not in (2, 3):
                raise ParseError("expected 'edge <u> <v> [<w>]'", lineno)
            if len(edges) == n - 1:
                raise ParseError(f"more than {n - 1} edge lines", lineno)
            u, v = (_vertex_id(a, n, lineno) for a in args[:2])
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge ({u}, {v})", lineno)
            seen.add(key)
            edges.append((u, v, _weight(args[2], lineno) if len(args) == 3 else edefault))
        elif head == "vertex":
            if len(args) != 2:
                raise ParseError("expected 'vertex <u> <w>'", lineno)
            v = _vertex_id(args[0], n, lineno)
            if v in vweights:
                raise ParseError(f"second weight for vertex {v}", lineno)
            vweights[v] = _weight(args[1], lineno)
        else:
            raise ParseError(f"unknown line type {head!r}", lineno)
    if n is None:
        raise ParseError("empty tree file")
    if len(edges) != n - 1:
        raise ParseError(f"expected {n - 1} edge lines, found {len(edges)}")
    weights = [vweights.get(v, vdefault) for v in range(1, n + 1)]
    all_weights = weights + [w for _, _, w in edges]
    ring = Poly2 if any(isinstance(w, Poly2) for w in all_weights) else int
    try:
        return WeightedTree(
            n,
            tuple((u, v, coerce(w, ring)) for u, v, w in edges),
            tuple(coerce(w, ring) for w in weights),
        )
    except NotATree as exc:
        raise ParseError(f"not a tree: {exc}") from None


def _token(w: RingElem) -> str:
    if isinstance(w, Poly2):
        if w == X:
            return "x"
        if w == Y:
            return "y"
        if w.degree() == (-1, -1) or w.degree() == (0, 0):
            return str(w.coefficient(0, 0))
        raise TreeGFError(f"weight {w} has no tree-file token")
    return str(w)


def format_tree_file(tree: WeightedTree, weights: bool = False) -> str:
    """Serialise ``tree``; with ``weights`` every vertex and edge weight is written out."""
    lines = [f"tree {tree.n}"]
    for u, v, w in tree.edges:
        lines.append(f"edge {u} {v} {_token(w)}" if weights else f"edge {u} {v}")
    if weights:
        lines += [f"vertex {v} {_token(tree.f(v))}" for v in tree.vertices]
    return "\n".join(lines) + "\n"


# -- JSON ------------------------------------------------------------------


def poly_to_json(value: RingElem) -> dict[str, Any]:
    p = value if isinstance(value, Poly2) else Poly2.const(value)
    return {"terms": [{"x": i, "y": j, "c": str(c)} for (i, j), c in p.items()]}


def poly_from_json(obj: dict[str, Any]) -> Poly2:
    return Poly2({(t["x"], t["y"]): int(t["c"]) for t in obj["terms"]})


def count_to_json(value: int) -> dict[str, str]:
    return {"count": str(value)}


def count_from_json(obj: dict[str, str]) -> int:
    return int(obj["count"])
