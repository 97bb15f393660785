"""Plain-text instance formats and JSON result files.

Graph / multigraph::

    # comments start with '#'; "# left k" marks the first k vertices as X
    n m
    u v          (m lines; the i-th line is edge id i)

Rotation system: the graph block, then n lines; line v lists the darts at v
in cyclic order as ``eid`` or ``eid:side`` (side needed only for loops).

Tree: edge ids separated by whitespace.  Chord diagram: one line with the
double-occurrence word.  Matrix: "r m" then r rows of 0/1 characters.
"""

from __future__ import annotations

import json
from pathlib import Path

from .chords import ChordDiagram
from .errors import InputError
from .graph import Graph, Multigraph
from .matroid import Gf2Matroid
from .planar import PlanarEmbedding


def _lines(text: str) -> tuple[list[str], dict[str, str]]:
    meta: dict[str, str] = {}
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split(None, 1)
            if len(parts) == 2:
                meta[parts[0]] = parts[1].strip()
            continue
        if line:
            out.append(line)
    return out, meta


def _ints(line: str, k: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in line.split()]
    except ValueError:
        raise InputError(f"expected integers, got {line!r}") from None
    if k is not None and len(vals) != k:
        raise InputError(f"expected {k} integers, got {line!r}")
    return vals


def parse_multigraph(text: str) -> tuple[Multigraph, list[str], dict[str, str]]:
    """Multigraph plus any lines after the edge block and the '#' metadata."""
    lines, meta = _lines(text)
    if not lines:
        raise InputError("empty graph file")
    n, m = _ints(lines[0], 2)
    if len(lines) < 1 + m:
        raise InputError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = [tuple(_ints(lines[1 + i], 2)) for i in range(m)]
    return Multigraph.from_edges(n, edges), lines[1 + m:], meta


def parse_graph(text: str) -> tuple[Graph, dict[str, str]]:
    mg, rest, meta = parse_multigraph(text)
    if rest:
        raise InputError("trailing lines after the edge list")
    for u, v in mg.edges:
        if u == v:
            raise InputError(f"simple graph has a loop at {u}")
    g = mg.to_graph()
    if g.m != mg.m:
        raise InputError("simple graph has repeated edges")
    return g, meta


def format_graph(g: Graph | Multigraph, meta: dict[str, object] | None = None) -> str:
    out = [f"# {k} {v}" for k, v in (meta or {}).items()]
    out.append(f"{g.n} {len(g.edges)}")
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def parse_embedding(text: str) -> PlanarEmbedding:
    mg, rest, _ = parse_multigraph(text)
    if len(rest) != mg.n:
        raise InputError(f"expected {mg.n} rotation lines, got {len(rest)}")
    rot = []
    for v, line in enumerate(rest):
        darts = []
        for tok in line.split():
            if ":" in tok:
                e, s = tok.split(":")
                try:
                    darts.append((int(e), int(s)))
                except ValueError:
                    raise InputError(f"bad dart {tok!r}") from None
                continue
            try:
                e = int(tok)
            except ValueError:
                raise InputError(f"bad dart {tok!r}") from None
            if not 0 <= e < mg.m:
                raise InputError(f"edge id {e} out of range")
            a, b = mg.edges[e]
            if a == b:
                raise InputError(f"loop {e} needs an explicit side")
            if v not in (a, b):
                raise InputError(f"edge {e} is not incident to vertex {v}")
            darts.append((e, 0 if a == v else 1))
        rot.append(tuple(darts))
    return PlanarEmbedding(mg, tuple(rot))


def format_embedding(emb: PlanarEmbedding) -> str:
    g = emb.graph
    out = [format_graph(g).rstrip("\n")]
    for rot in emb.rotation:
        toks = []
        for e, s in rot:
            a, b = g.edges[e]
            toks.append(f"{e}:{s}" if a == b else str(e))
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def parse_tree(text: str) -> frozenset[int]:
    lines, _ = _lines(text)
    ids = [x for line in lines for x in _ints(line)]
    if len(set(ids)) != len(ids):
        raise InputError("tree file repeats an edge id")
    return frozenset(ids)


def format_tree(tree) -> str:
    return " ".join(map(str, sorted(tree))) + "\n"


def parse_chord(text: str) -> ChordDiagram:
    lines, _ = _lines(text)
    if len(lines) != 1:
        raise InputError("chord file must contain exactly one word")
    return ChordDiagram.parse(lines[0])


def parse_matrix(text: str) -> Gf2Matroid:
    lines, _ = _lines(text)
    if not lines:
        raise InputError("empty matrix file")
    r, m = _ints(lines[0], 2)
    rows = lines[1:]
    if len(rows) != r or any(len(x) != m for x in rows):
        raise InputError(f"expected {r} rows of length {m}")
    return Gf2Matroid.from_bits(rows)


def format_matrix(M: Gf2Matroid) -> str:
    return "\n".join([f"{M.r} {M.m}", *M.to_bits()]) + "\n"


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def dump_json(obj, path: str | Path | None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text)
    return text


def load_json(path: str | Path) -> dict:
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from None
