"""Pseudograph and serial temporal-network data model, validation, and file I/O.

A pseudograph may contain loops and parallel edges.  Edges are identified
positionally (ids 0..t-1) because parallel edges share endpoint pairs.  A
temporal network attaches a bijective labeling onto {1..t}; only the order
of labels matters, so arbitrary real-valued time stamps are normalized to
ranks before anything else happens.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class IsotemporalError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(IsotemporalError):
    """A value violates a structural invariant."""


class EdgeIdError(ValidationError):
    """Edge ids are not exactly 0..t-1 in order."""


class UnknownVertexError(ValidationError):
    """An edge endpoint names a vertex that does not exist."""


class UnknownEdgeError(ValidationError):
    """A label entry names an edge that does not exist."""


class DuplicateLabelError(ValidationError):
    """A label value (or labeled edge) appears more than once."""


class MissingLabelError(ValidationError):
    """Some edge received no label."""


class LabelRangeError(ValidationError):
    """A label lies outside {1..t}."""


class ParseError(ValidationError):
    """Malformed network file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Pseudograph:
    """An undirected pseudograph: loops and parallel edges allowed.

    ``vertices`` is the ordered tuple of vertex ids 0..n-1.  ``edges`` is the
    ordered tuple of (edge id, endpoint pair); endpoint pairs are stored
    sorted so that (u, v) and (v, u) denote the same edge.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, tuple[int, int]], ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if vertices != tuple(range(len(vertices))):
            raise UnknownVertexError(f"vertex ids must be 0..n-1 in order, got {vertices}")
        vset = set(vertices)
        norm = []
        for i, (eid, pair) in enumerate(self.edges):
            if eid != i:
                raise EdgeIdError(f"edge ids must be 0..t-1 in order, got id {eid} at position {i}")
            u, v = pair
            if u not in vset or v not in vset:
                raise UnknownVertexError(f"edge {eid} endpoint pair {pair} not in vertex list")
            norm.append((i, (u, v) if u <= v else (v, u)))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Pseudograph":
        return cls(tuple(range(vertex_count)), tuple((i, tuple(p)) for i, p in enumerate(pairs)))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.edges[edge_id][1]

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.endpoints(edge_id)
        return u == v

    @cached_property
    def incidence(self) -> dict[int, tuple[int, ...]]:
        """Vertex -> ids of edges touching it (a loop listed once)."""
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for eid, (u, v) in self.edges:
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return {v: tuple(es) for v, es in inc.items()}

    def degree(self, vertex: int) -> int:
        """Edge-incidence count; a loop contributes 2."""
        d = 0
        for eid, (u, v) in self.edges:
            if u == vertex:
                d += 1
            if v == vertex:
                d += 1
        return d

    def loop_count(self, vertex: int) -> int:
        return sum(1 for _, (u, v) in self.edges if u == vertex and v == vertex)

    @cached_property
    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Endpoint pair -> ids of the edges sharing it."""
        cls: dict[tuple[int, int], list[int]] = {}
        for eid, pair in self.edges:
            cls.setdefault(pair, []).append(eid)
        return {p: tuple(es) for p, es in cls.items()}

    def multiplicity(self, u: int, v: int) -> int:
        pair = (u, v) if u <= v else (v, u)
        return len(self.parallel_classes.get(pair, ()))


@dataclass(frozen=True)
class AdjacencyRelation:
    """Symmetric, irreflexive edge adjacency: edges sharing >= 1 endpoint.

    A loop at v is adjacent to every other edge incident to v, including
    other loops at v; no edge is recorded as adjacent to itself.
    """

    edge_count: int
    pairs: frozenset[tuple[int, int]]

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return ((i, j) if i < j else (j, i)) in self.pairs

    def neighbors(self, i: int) -> frozenset[int]:
        out = set()
        for a, b in self.pairs:
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return frozenset(out)


@functools.lru_cache(maxsize=None)
def adjacency(graph: Pseudograph) -> AdjacencyRelation:
    """Edge-adjacency relation of a pseudograph."""
    pairs = set()
    for edges in graph.incidence.values():
        for x in range(len(edges)):
            for y in range(x + 1, len(edges)):
                i, j = edges[x], edges[y]
                pairs.add((i, j) if i < j else (j, i))
    return AdjacencyRelation(graph.edge_count, frozenset(pairs))


@dataclass(frozen=True)
class TemporalNetwork:
    """A pseudograph plus a bijective labeling of its edges onto {1..t}.

    ``labeling[e]`` is the temporal label of edge e.
    """

    graph: Pseudograph
    labeling: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labeling", tuple(self.labeling))
        t = self.graph.edge_count
        if len(self.labeling) != t:
            raise MissingLabelError(f"expected {t} labels, got {len(self.labeling)}")
        seen = set()
        for e, lab in enumerate(self.labeling):
            if not 1 <= lab <= t:
                raise LabelRangeError(f"edge {e} label {lab} outside 1..{t}")
            if lab in seen:
                raise DuplicateLabelError(f"label {lab} used more than once")
            seen.add(lab)

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def label_of(self, edge_id: int) -> int:
        return self.labeling[edge_id]

    @cached_property
    def _label_to_edge(self) -> tuple[int, ...]:
        inv = [0] * self.edge_count
        for e, lab in enumerate(self.labeling):
            inv[lab - 1] = e
        return tuple(inv)

    def edge_with_label(self, label: int) -> int:
        if not 1 <= label <= self.edge_count:
            raise LabelRangeError(f"no edge carries label {label}")
        return self._label_to_edge[label - 1]

    def relabeled(self, labeling: Sequence[int]) -> "TemporalNetwork":
        return TemporalNetwork(self.graph, tuple(labeling))


def build_network(graph: Pseudograph, labels: Iterable[tuple[int, int]]) -> TemporalNetwork:
    """Build a validated TemporalNetwork from (edge id, label) pairs.

    The pairs must cover every edge exactly once with a bijection onto
    {1..t}; each violation raises its own ValidationError subclass.
    """
    t = graph.edge_count
    assigned: dict[int, int] = {}
    used_labels: set[int] = set()
    for eid, lab in labels:
        if not 0 <= eid < t:
            raise UnknownEdgeError(f"label entry names edge {eid}, but edge ids are 0..{t - 1}")
        if eid in assigned:
            raise DuplicateLabelError(f"edge {eid} labeled more than once")
        if not 1 <= lab <= t:
            raise LabelRangeError(f"label {lab} outside 1..{t}")
        if lab in used_labels:
            raise DuplicateLabelError(f"label {lab} used more than once")
        assigned[eid] = lab
        used_labels.add(lab)
    if len(assigned) != t:
        missing = sorted(set(range(t)) - set(assigned))
        raise MissingLabelError(f"edges {missing} received no label")
    return TemporalNetwork(graph, tuple(assigned[e] for e in range(t)))


def serialize_network(network: TemporalNetwork) -> str:
    """Render a network in the line-oriented text format (one trailing newline)."""
    g = network.graph
    lines = [f"vertices: {g.vertex_count}", f"edges: {g.edge_count}"]
    for eid, (u, v) in g.edges:
        lines.append(f"{eid} {u} {v} {network.labeling[eid]}")
    return "\n".join(lines) + "\n"


def parse_network(text: str) -> TemporalNetwork:
    """Parse the text format produced by serialize_network.

    Blank lines and '#'-prefixed comments are ignored.  Syntax problems
    raise ParseError with the line number; semantic problems raise the
    corresponding build_network validation error.
    """
    rows: list[tuple[int, list[str]]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((line_no, line.split()))

    def header(index: int, key: str) -> int:
        if index >= len(rows):
            raise ParseError(len(text.splitlines()) + 1, f"missing '{key}:' header")
        line_no, fields = rows[index]
        if len(fields) != 2 or fields[0] != f"{key}:":
            raise ParseError(line_no, f"expected '{key}: <count>'")
        try:
            value = int(fields[1])
        except ValueError:
            raise ParseError(line_no, f"'{key}' count is not an integer") from None
        if value < 0:
            raise ParseError(line_no, f"'{key}' count is negative")
        return value

    n = header(0, "vertices")
    t = header(1, "edges")
    if len(rows) != 2 + t:
        if len(rows) < 2 + t:
            raise ParseError(len(text.splitlines()) + 1, f"expected {t} edge lines, found {len(rows) - 2}")
        raise ParseError(rows[2 + t][0], "unexpected extra line")

    pairs: list[tuple[int, int]] = []
    labels: list[tuple[int, int]] = []
    for i in range(t):
        line_no, fields = rows[2 + i]
        if len(fields) != 4:
            raise ParseError(line_no, "expected '<edge-id> <u> <v> <label>'")
        try:
            eid, u, v, lab = (int(f) for f in fields)
        except ValueError:
            raise ParseError(line_no, "edge fields must be integers") from None
        if eid != i:
            raise ParseError(line_no, f"edge ids must appear in order 0..{t - 1}, got {eid}")
        pairs.append((u, v))
        labels.append((eid, lab))
    graph = Pseudograph.from_edges(n, pairs)
    return build_network(graph, labels)
