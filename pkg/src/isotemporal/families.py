"""Graph-family generators and the two-sided structure toolkit.

Families: diasters D(a,b), stars, beachballs, daisies, cycles, and stem
structures S(G,H) joining two star/beachball/daisy halves by a central
edge.  Generators use fixed layouts: the central edge is always id 0
between vertices 0 (left hub) and 1 (right hub); left edges take ids
1..a, right edges a+1..a+b.  Stem(Star(a), Star(b)) is bit-identical to
Diaster(a,b).

The signature of a labeled two-sided graph (central label, count of left
labels below it) is a complete isotemporal-class invariant, reflected
when the graph is mirror-symmetric.  Matching signatures always admit a
script of transpositions of consecutive labels on non-adjacent edges
taking one labeling onto the other up to label isomorphism.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .core import IsotemporalError, Pseudograph, TemporalNetwork, adjacency
from .classes import METHOD_SIGNATURE, ClassPartition, _check_limit, _finish_blocks
from .iso import DEFAULT_SEARCH_LIMIT, canonical_label_vectors, edge_automorphism_group


class InvalidFamilyError(IsotemporalError):
    """Bad family parameters or unparseable family spec."""


class NotGeneratedFamilyError(IsotemporalError):
    """The graph does not match any generated two-sided layout."""


class NoSwapScriptError(IsotemporalError):
    """The two labelings are not temporally isomorphic; no script exists."""


@dataclass(frozen=True)
class Star:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidFamilyError(f"star parameter must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Beachball:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidFamilyError(f"beachball parameter must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Daisy:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidFamilyError(f"daisy parameter must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidFamilyError(f"cycle length must be >= 3, got {self.n}")


@dataclass(frozen=True)
class Diaster:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise InvalidFamilyError(f"diaster needs a, b >= 0 and a + b >= 1, got ({self.a}, {self.b})")


StemSide = Union[Star, Beachball, Daisy]


@dataclass(frozen=True)
class Stem:
    left: StemSide
    right: StemSide

    def __post_init__(self):
        for side in (self.left, self.right):
            if not isinstance(side, (Star, Beachball, Daisy)):
                raise InvalidFamilyError(f"stem sides must be star/beachball/daisy, got {side!r}")


FamilySpec = Union[Diaster, Star, Beachball, Daisy, Cycle, Stem]


def spec_string(spec: FamilySpec) -> str:
    if isinstance(spec, Diaster):
        return f"diaster:{spec.a},{spec.b}"
    if isinstance(spec, Star):
        return f"star:{spec.k}"
    if isinstance(spec, Beachball):
        return f"beachball:{spec.k}"
    if isinstance(spec, Daisy):
        return f"daisy:{spec.k}"
    if isinstance(spec, Cycle):
        return f"cycle:{spec.n}"
    if isinstance(spec, Stem):
        return f"stem:{spec_string(spec.left)}/{spec_string(spec.right)}"
    raise InvalidFamilyError(f"unknown family spec {spec!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse 'diaster:a,b', 'star:k', 'beachball:k', 'daisy:k', 'cycle:n',
    or 'stem:<sub>/<sub>' where each sub is a star/beachball/daisy spec."""

    def bad(reason: str) -> InvalidFamilyError:
        return InvalidFamilyError(f"bad family spec {text!r}: {reason}")

    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "diaster":
            a_s, _, b_s = rest.partition(",")
            return Diaster(int(a_s), int(b_s))
        if kind in ("star", "beachball", "daisy", "cycle"):
            value = int(rest)
            return {"star": Star, "beachball": Beachball, "daisy": Daisy, "cycle": Cycle}[kind](value)
        if kind == "stem":
            left_s, sep, right_s = rest.partition("/")
            if not sep:
                raise bad("stem needs two '/'-separated sides")
            left = parse_family_spec(left_s)
            right = parse_family_spec(right_s)
            return Stem(left, right)
    except ValueError:
        raise bad("parameters must be integers") from None
    raise bad("unknown family kind")


def edge_count(spec: FamilySpec) -> int:
    if isinstance(spec, Diaster):
        return spec.a + spec.b + 1
    if isinstance(spec, (Star, Beachball, Daisy)):
        return spec.k
    if isinstance(spec, Cycle):
        return spec.n
    if isinstance(spec, Stem):
        return spec.left.k + spec.right.k + 1
    raise InvalidFamilyError(f"unknown family spec {spec!r}")


def _side_extra_vertices(side: StemSide) -> int:
    if isinstance(side, Star):
        return side.k
    if isinstance(side, Beachball):
        return 1
    return 0


def _side_edges(side: StemSide, hub: int, first_extra: int) -> list[tuple[int, int]]:
    if isinstance(side, Star):
        return [(hub, first_extra + i) for i in range(side.k)]
    if isinstance(side, Beachball):
        return [(hub, first_extra)] * side.k
    return [(hub, hub)] * side.k


def generate(spec: FamilySpec) -> Pseudograph:
    """Deterministic pseudograph for a family spec (fixed numbering)."""
    if isinstance(spec, Star):
        return Pseudograph.from_edges(spec.k + 1, [(0, i + 1) for i in range(spec.k)])
    if isinstance(spec, Beachball):
        return Pseudograph.from_edges(2, [(0, 1)] * spec.k)
    if isinstance(spec, Daisy):
        return Pseudograph.from_edges(1, [(0, 0)] * spec.k)
    if isinstance(spec, Cycle):
        return Pseudograph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])
    if isinstance(spec, Diaster):
        pairs = [(0, 1)]
        pairs += [(0, 2 + i) for i in range(spec.a)]
        pairs += [(1, 2 + spec.a + j) for j in range(spec.b)]
        return Pseudograph.from_edges(spec.a + spec.b + 2, pairs)
    if isinstance(spec, Stem):
        left_extra = _side_extra_vertices(spec.left)
        right_extra = _side_extra_vertices(spec.right)
        pairs = [(0, 1)]
        pairs += _side_edges(spec.left, 0, 2)
        pairs += _side_edges(spec.right, 1, 2 + left_extra)
        return Pseudograph.from_edges(2 + left_extra + right_extra, pairs)
    raise InvalidFamilyError(f"unknown family spec {spec!r}")


def enumerate_family_specs(max_edges: int, include_cycles: bool = False) -> list[FamilySpec]:
    """Every diaster (a <= b, both >= 1), star, beachball, daisy, and all
    nine stem type combinations with at most max_edges edges, sorted by
    spec string.  Cycles 3..max_edges are appended on request."""
    specs: list[FamilySpec] = []
    for a in range(1, max_edges):
        for b in range(a, max_edges - a):
            specs.append(Diaster(a, b))
    for k in range(1, max_edges + 1):
        specs += [Star(k), Beachball(k), Daisy(k)]
    side_types = (Star, Beachball, Daisy)
    for left_type in side_types:
        for right_type in side_types:
            for a in range(1, max_edges - 1):
                for b in range(1, max_edges - a):
                    specs.append(Stem(left_type(a), right_type(b)))
    if include_cycles:
        specs += [Cycle(n) for n in range(3, max_edges + 1)]
    return sorted(specs, key=spec_string)


@dataclass(frozen=True)
class TwoSidedShape:
    """Recognized layout of a generated diaster or stem structure."""

    a: int
    b: int
    reflective: bool

    @property
    def left_edge_ids(self) -> range:
        return range(1, self.a + 1)

    @property
    def right_edge_ids(self) -> range:
        return range(self.a + 1, self.a + self.b + 1)


@functools.lru_cache(maxsize=None)
def recognize_two_sided(graph: Pseudograph) -> TwoSidedShape:
    """Match a graph against every generated diaster / stem layout.

    Requires both sides non-empty; a one-sided 'diaster' degenerates into
    a star whose central edge is not automorphism-invariant, so none of
    the signature machinery applies to it.
    """
    t = graph.edge_count
    side_types = (Star, Beachball, Daisy)
    for a in range(1, t - 1 + 1):
        b = t - 1 - a
        if b < 1:
            continue
        if graph == generate(Diaster(a, b)):
            return TwoSidedShape(a, b, a == b)
        for left_type in side_types:
            for right_type in side_types:
                if graph == generate(Stem(left_type(a), right_type(b))):
                    return TwoSidedShape(a, b, a == b and left_type is right_type)
    raise NotGeneratedFamilyError("graph is not a generated diaster or stem structure")


@dataclass(frozen=True)
class DiasterSignature:
    """Complete isotemporal-class invariant of a two-sided labeling.

    central_label is the label on the central edge; left_below counts left
    edges labeled below it.  When the graph is mirror-symmetric the key
    folds left_below with its reflection.
    """

    central_label: int
    left_below: int
    reflective: bool

    @property
    def key(self) -> tuple[int, int]:
        k = self.left_below
        if self.reflective:
            k = min(k, self.central_label - 1 - k)
        return (self.central_label, k)


def diaster_signature(network: TemporalNetwork) -> DiasterSignature:
    """Signature of a labeled generated diaster or stem structure."""
    shape = recognize_two_sided(network.graph)
    central = network.labeling[0]
    k = sum(1 for e in shape.left_edge_ids if network.labeling[e] < central)
    return DiasterSignature(central, k, shape.reflective)


def signature_classes(g: Pseudograph, limit: int = 8) -> ClassPartition:
    """Partition canonical labelings by signature key (two-sided graphs only)."""
    _check_limit(g, limit)
    recognize_two_sided(g)
    buckets: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for vec in canonical_label_vectors(g):
        sig = diaster_signature(TemporalNetwork(g, vec))
        buckets.setdefault(sig.key, []).append(vec)
    return ClassPartition(g, _finish_blocks(buckets.values()), METHOD_SIGNATURE)


def binary_swap_sequence(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int]]:
    """Adjacent transpositions (1-based positions, application order) taking a to b.

    Both sequences must be 0/1 with equal length and equal zero counts.
    Every emitted swap exchanges unequal neighbors: scanning left to
    right, the nearest copy of the needed value is walked down one
    position at a time.
    """
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if any(x not in (0, 1) for x in a + b):
        raise ValueError("sequences must be binary")
    if a.count(0) != b.count(0):
        raise ValueError(f"population mismatch: {a.count(0)} zeros vs {b.count(0)}")
    steps: list[tuple[int, int]] = []
    for i in range(len(a)):
        if a[i] == b[i]:
            continue
        j = next(idx for idx in range(i + 1, len(a)) if a[idx] == b[i])
        for p in range(j - 1, i - 1, -1):
            if a[p] == a[p + 1]:
                raise IsotemporalError("internal error: swap of identical elements")
            a[p], a[p + 1] = a[p + 1], a[p]
            steps.append((p + 1, p + 2))
    if a != b:
        raise IsotemporalError("internal error: swap sequence failed to reach target")
    return steps


@dataclass(frozen=True)
class SwapStep:
    """One transposition: the consecutive label pair and its carrying edges."""

    labels: tuple[int, int]
    edges: tuple[int, int]


@dataclass(frozen=True)
class SwapScript:
    steps: tuple[SwapStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def apply_swap_script(network: TemporalNetwork, script: SwapScript) -> TemporalNetwork:
    """Replay a script, checking every step is a legal sequential swap."""
    adj = adjacency(network.graph)
    labeling = list(network.labeling)
    for step in script:
        lo, hi = step.labels
        e1, e2 = step.edges
        if hi != lo + 1:
            raise IsotemporalError(f"step labels {step.labels} are not consecutive")
        if labeling[e1] != lo or labeling[e2] != hi:
            raise IsotemporalError(f"step {step} does not match the current labeling")
        if adj.adjacent(e1, e2):
            raise IsotemporalError(f"step {step} swaps labels on adjacent edges")
        labeling[e1], labeling[e2] = labeling[e2], labeling[e1]
    return network.relabeled(labeling)


def _side_vector(network: TemporalNetwork, shape: TwoSidedShape, labels: Sequence[int]) -> list[int]:
    # 0 = left edge, 1 = right edge, per label in the given order
    out = []
    for lab in labels:
        e = network.edge_with_label(lab)
        out.append(0 if e in shape.left_edge_ids else 1)
    return out


def _reflected(network: TemporalNetwork, shape: TwoSidedShape) -> TemporalNetwork:
    # exchange the two sides' label blocks; legal only on reflective shapes
    a = shape.a
    labeling = list(network.labeling)
    for i in range(1, a + 1):
        labeling[i], labeling[a + i] = labeling[a + i], labeling[i]
    return network.relabeled(labeling)


def diaster_swap_permutation(n: TemporalNetwork, m: TemporalNetwork) -> SwapScript:
    """A script of sequential swaps on non-adjacent edges taking n onto a
    labeling label-isomorphic to m (both on the same generated diaster or
    stem structure).

    Raises NoSwapScriptError when the signatures differ, i.e. when the two
    labelings are not temporally isomorphic.
    """
    shape = recognize_two_sided(n.graph)
    if m.graph != n.graph:
        raise NotGeneratedFamilyError("the two networks must share one generated graph")
    central = n.labeling[0]
    if m.labeling[0] != central:
        raise NoSwapScriptError("central labels differ; not temporally isomorphic")
    sig_n = diaster_signature(n)
    sig_m = diaster_signature(m)
    if sig_n.left_below == sig_m.left_below:
        target = m
    elif shape.reflective and sig_n.left_below == central - 1 - sig_m.left_below:
        target = _reflected(m, shape)
    else:
        raise NoSwapScriptError("signatures differ; not temporally isomorphic")

    steps: list[SwapStep] = []
    current = n

    def emit(position_swaps: list[tuple[int, int]], label_base: int) -> None:
        nonlocal current
        for pos, _ in position_swaps:
            lo = label_base + pos
            e1 = current.edge_with_label(lo)
            e2 = current.edge_with_label(lo + 1)
            steps.append(SwapStep((lo, lo + 1), (e1, e2)))
            labeling = list(current.labeling)
            labeling[e1], labeling[e2] = labeling[e2], labeling[e1]
            current = current.relabeled(labeling)

    below = list(range(1, central))
    above = list(range(central + 1, n.edge_count + 1))
    emit(binary_swap_sequence(_side_vector(n, shape, below), _side_vector(target, shape, below)), 0)
    emit(binary_swap_sequence(_side_vector(current, shape, above), _side_vector(target, shape, above)), central)

    final_sides = _side_vector(current, shape, range(1, n.edge_count + 1))
    target_sides = _side_vector(target, shape, range(1, n.edge_count + 1))
    if final_sides != target_sides:
        raise IsotemporalError("internal error: script did not reproduce the target sides")
    script = SwapScript(tuple(steps))
    apply_swap_script(n, script)
    return script


@dataclass(frozen=True)
class TransferReport:
    """Whether class counts transfer between two graphs.

    holds is true when some edge bijection preserves adjacency both ways
    and conjugation by it carries one edge automorphism group onto the
    other; witness is that bijection.  failed_condition names the first
    condition that could not be met ('edge-adjacency' or
    'edge-automorphisms').
    """

    holds: bool
    witness: Optional[tuple[int, ...]]
    failed_condition: Optional[str]


def _adjacency_bijections(g: Pseudograph, h: Pseudograph):
    t = g.edge_count
    adj_g = adjacency(g)
    adj_h = adjacency(h)
    deg_g = [len(adj_g.neighbors(e)) for e in range(t)]
    deg_h = [len(adj_h.neighbors(e)) for e in range(t)]
    mapping: list[int] = []
    used = [False] * t

    def extend(i: int):
        if i == t:
            yield tuple(mapping)
            return
        for cand in range(t):
            if used[cand] or deg_h[cand] != deg_g[i]:
                continue
            if all(adj_g.adjacent(i, j) == adj_h.adjacent(cand, mapping[j]) for j in range(i)):
                used[cand] = True
                mapping.append(cand)
                yield from extend(i + 1)
                mapping.pop()
                used[cand] = False

    yield from extend(0)


def check_transfer_conditions(
    g: Pseudograph, h: Pseudograph, search_limit: int = DEFAULT_SEARCH_LIMIT
) -> TransferReport:
    """Search for an edge bijection preserving adjacency both ways, then
    check it conjugates the edge automorphism groups onto each other."""
    if g.edge_count != h.edge_count:
        raise ValueError("graphs must have equal edge counts")
    t = g.edge_count
    aut_g = edge_automorphism_group(g, search_limit).elements
    aut_h = set(edge_automorphism_group(h, search_limit).elements)
    found_adjacency = False
    for phi in _adjacency_bijections(g, h):
        found_adjacency = True
        if len(aut_g) != len(aut_h):
            break
        conjugated = set()
        for p in aut_g:
            image = [0] * t
            for e in range(t):
                image[phi[e]] = phi[p[e]]
            conjugated.add(tuple(image))
        if conjugated == aut_h:
            return TransferReport(True, phi, None)
    if found_adjacency:
        return TransferReport(False, None, "edge-automorphisms")
    return TransferReport(False, None, "edge-adjacency")
