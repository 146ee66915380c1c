"""Plain-text instance formats.

Every file starts with a header line naming its kind, followed by one record
per line. Blank lines and ``#`` comments are ignored.

    graph n m        then m lines  ``u v``
    arcs n L         then n lines  ``v s t``
    boxes n k        then k blocks of n lines ``v l r`` (one block per factor)
    geometry n k     then n lines  ``v l1 r1 ... lk rk`` (write-only)
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .arcs import ArcModel
from .errors import InvalidInputError
from .graph import Graph
from .intervals import BoxRepresentation, IntervalModel

Instance = Union[Graph, ArcModel, BoxRepresentation]


class FormatError(InvalidInputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _records(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            out.append((lineno, body))
    return out


def _ints(fields: list[str], count: int, lineno: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(f"expected {count} fields, got {len(fields)}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def _wrap(lineno: int, fn, *args):
    try:
        return fn(*args)
    except FormatError:
        raise
    except InvalidInputError as exc:
        raise FormatError(str(exc), lineno) from None


def _parse_graph(header: list[int], body, lineno: int) -> Graph:
    n, m = header
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = []
    for ln, fields in body:
        u, v = _ints(fields, 2, ln)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in edge ({u}, {v})", ln)
        if u == v:
            raise FormatError(f"self-loop at {u}", ln)
        edges.append((u, v))
    return Graph(n, edges)


def _indexed(body, n: int, width: int) -> tuple[list[list[int]], dict[int, int]]:
    """Rows keyed by their leading vertex id, each id exactly once."""
    rows: list[list[int] | None] = [None] * n
    where: dict[int, int] = {}
    for ln, fields in body:
        vals = _ints(fields, width, ln)
        v = vals[0]
        if not 0 <= v < n:
            raise FormatError(f"vertex {v} out of range", ln)
        if rows[v] is not None:
            raise FormatError(f"vertex {v} listed twice", ln)
        rows[v] = vals[1:]
        where[v] = ln
    return rows, where  # type: ignore[return-value]


def _parse_arcs(header: list[int], body, lineno: int) -> ArcModel:
    n, L = header
    if len(body) != n:
        raise FormatError(f"header announces {n} arcs, found {len(body)}", lineno)
    rows, where = _indexed(body, n, 3)
    for v, row in enumerate(rows):
        s, t = row
        if not (0 <= s < L and 0 <= t < L):
            raise FormatError(f"arc {v} endpoints outside [0, {L})", where[v])
        if s == t:
            raise FormatError(f"arc {v} is a single point", where[v])
    return _wrap(lineno, ArcModel, L, tuple(tuple(r) for r in rows))


def _parse_boxes(header: list[int], body, lineno: int) -> BoxRepresentation:
    n, k = header
    if len(body) != n * k:
        raise FormatError(f"header announces {k} factors of {n} intervals, found {len(body)} lines", lineno)
    factors = []
    for f in range(k):
        block = body[f * n : (f + 1) * n]
        rows, where = _indexed(block, n, 3)
        for v, (l, r) in enumerate(rows):
            if not l < r:
                raise FormatError(f"interval [{l}, {r}] of vertex {v} is empty or a point", where[v])
        factors.append(IntervalModel(tuple(tuple(r) for r in rows)))
    return BoxRepresentation(n, factors)


_PARSERS = {"graph": _parse_graph, "arcs": _parse_arcs, "boxes": _parse_boxes}


def parse(text: str) -> Instance:
    recs = _records(text)
    if not recs:
        raise FormatError("empty input")
    lineno, head = recs[0]
    kind = head[0]
    if kind not in _PARSERS:
        raise FormatError(f"unknown header {kind!r}; expected one of {sorted(_PARSERS)}", lineno)
    header = _ints(head[1:], 2, lineno)
    if min(header) < 0:
        raise FormatError("negative size in header", lineno)
    return _PARSERS[kind](header, recs[1:], lineno)


def emit(obj: Instance) -> str:
    if isinstance(obj, Graph):
        lines = [f"graph {obj.n} {obj.m}"] + [f"{u} {v}" for u, v in obj.edges()]
    elif isinstance(obj, ArcModel):
        lines = [f"arcs {obj.n} {obj.circumference}"] + [f"{v} {s} {t}" for v, (s, t) in enumerate(obj.arcs)]
    elif isinstance(obj, BoxRepresentation):
        lines = [f"boxes {obj.n} {obj.dimension}"]
        for f in obj.factors:
            lines.append("")
            lines += [f"{v} {l} {r}" for v, (l, r) in enumerate(f.intervals)]
    else:
        raise TypeError(f"cannot emit {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def emit_geometry(rep: BoxRepresentation) -> str:
    """Each vertex as an axis-parallel box: its interval in every factor."""
    lines = [f"geometry {rep.n} {rep.dimension}"]
    for v, box in enumerate(rep.boxes()):
        lines.append(" ".join([str(v)] + [f"{l} {r}" for l, r in box]))
    return "\n".join(lines) + "\n"


def read_file(path: str | Path) -> Instance:
    return parse(Path(path).read_text())


def write_file(path: str | Path, obj: Instance) -> None:
    Path(path).write_text(emit(obj))
