"""Loop-free multigraph with stable integer edge ids, plus path/cycle vocabulary.

Every other module consumes these types. Graphs are immutable after build;
all operations return new values. Edge ids are assigned in input order and
survive edge deletion, so certificates can always reference original edges.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import LoopEdge, NotACycle, SearchBudgetExceeded, UnknownEdge, UnknownVertex


class Multigraph:
    """Undirected loop-free multigraph. Parallel edges carry distinct ids."""

    __slots__ = ("_vertices", "_endpoints", "_adjacency")

    def __init__(
        self,
        vertices: frozenset[int],
        endpoints: dict[int, tuple[int, int]],
        adjacency: dict[int, tuple[int, ...]],
    ) -> None:
        self._vertices = vertices
        self._endpoints = endpoints
        self._adjacency = adjacency

    # -- accessors ---------------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._endpoints)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._endpoints))

    def has_edge(self, e: int) -> bool:
        return e in self._endpoints

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._endpoints[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertex(v)

    def edges_at(self, v: int) -> tuple[int, ...]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.edges_at(v))

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(e for e in self.edges_at(u) if self.other_end(e, u) == v)

    def are_adjacent(self, u: int, v: int) -> bool:
        return bool(self.edges_between(u, v))

    def edge_items(self) -> tuple[tuple[int, tuple[int, int]], ...]:
        return tuple(sorted(self._endpoints.items()))

    def max_vertex(self) -> int:
        return max(self._vertices) if self._vertices else -1

    def max_edge_id(self) -> int:
        return max(self._endpoints) if self._endpoints else -1

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        if self._vertices != other._vertices:
            return False
        if set(self._endpoints) != set(other._endpoints):
            return False
        norm = lambda p: (min(p), max(p))
        return all(norm(self._endpoints[e]) == norm(other._endpoints[e]) for e in self._endpoints)

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted((e, min(p), max(p)) for e, p in self._endpoints.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def build(edges: Sequence[tuple[int, int]], vertices: Iterable[int] = ()) -> Multigraph:
    """Build a multigraph from endpoint pairs; edge ids follow input order."""
    endpoint_map: dict[int, tuple[int, int]] = {}
    vertex_set: set[int] = set(vertices)
    for index, (u, v) in enumerate(edges):
        if u == v:
            raise LoopEdge(index, u)
        endpoint_map[index] = (u, v)
        vertex_set.add(u)
        vertex_set.add(v)
    return _assemble(frozenset(vertex_set), endpoint_map)


def _assemble(vertices: frozenset[int], endpoints: dict[int, tuple[int, int]]) -> Multigraph:
    adjacency: dict[int, list[int]] = {v: [] for v in vertices}
    for e in sorted(endpoints):
        u, v = endpoints[e]
        adjacency[u].append(e)
        adjacency[v].append(e)
    return Multigraph(vertices, endpoints, {v: tuple(es) for v, es in adjacency.items()})


def delete_edges(g: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    """Remove the listed edges; vertices and surviving edge ids are unchanged."""
    doomed = set(edge_ids)
    for e in doomed:
        if not g.has_edge(e):
            raise UnknownEdge(e)
    endpoints = {e: p for e, p in g.edge_items() if e not in doomed}
    return _assemble(g.vertices, endpoints)


def extend(
    g: Multigraph,
    new_vertices: Iterable[int] = (),
    new_edges: Sequence[tuple[int, int]] = (),
) -> tuple[Multigraph, tuple[int, ...]]:
    """Add vertices/edges; new edge ids continue past the current maximum."""
    endpoints = dict(g.edge_items())
    vertex_set = set(g.vertices) | set(new_vertices)
    next_id = g.max_edge_id() + 1
    new_ids = []
    for u, v in new_edges:
        if u == v:
            raise LoopEdge(next_id, u)
        vertex_set.add(u)
        vertex_set.add(v)
        endpoints[next_id] = (u, v)
        new_ids.append(next_id)
        next_id += 1
    return _assemble(frozenset(vertex_set), endpoints), tuple(new_ids)


def restrict(g: Multigraph, edge_ids: Iterable[int], vertices: Iterable[int] = ()) -> Multigraph:
    """Subgraph on the given edges (ids preserved) plus any extra isolated vertices."""
    keep = set(edge_ids)
    endpoints = {}
    vertex_set = set(vertices)
    for e in keep:
        u, v = g.endpoints(e)
        endpoints[e] = (u, v)
        vertex_set.add(u)
        vertex_set.add(v)
    return _assemble(frozenset(vertex_set), endpoints)


def subdivide_edge(g: Multigraph, e: int) -> tuple[Multigraph, int, tuple[int, int]]:
    """Replace edge e=(a,b) by a-m-b with a fresh vertex m; returns (g', m, half ids)."""
    a, b = g.endpoints(e)
    m = g.max_vertex() + 1
    g2 = delete_edges(g, [e])
    g3, halves = extend(g2, [m], [(a, m), (m, b)])
    return g3, m, (halves[0], halves[1])


def simplify(g: Multigraph) -> tuple[Multigraph, dict[int, int]]:
    """Drop parallel duplicates, keeping the lowest id of each class.

    Returns the simple graph and a map edge id -> representative id.
    """
    rep: dict[tuple[int, int], int] = {}
    to_rep: dict[int, int] = {}
    for e, (u, v) in g.edge_items():
        key = (min(u, v), max(u, v))
        if key not in rep:
            rep[key] = e
        to_rep[e] = rep[key]
    keep = set(rep.values())
    return restrict(g, keep, g.vertices), to_rep


def parallel_classes(g: Multigraph) -> dict[int, tuple[int, ...]]:
    """Map each representative (lowest id) to its full sorted parallel class."""
    classes: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in g.edge_items():
        classes.setdefault((min(u, v), max(u, v)), []).append(e)
    return {min(es): tuple(sorted(es)) for es in classes.values()}


def connected_components(g: Multigraph) -> list[frozenset[int]]:
    """Vertex sets of connected components, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in g.edges_at(v):
                w = g.other_end(e, v)
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------------------
# Paths, cycles, subgraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgePair:
    """Unordered pair of distinct edge ids, normalized so e < f."""

    e: int
    f: int

    def __post_init__(self) -> None:
        if self.e == self.f:
            raise ValueError("edge pair must contain two distinct edges")
        if self.e > self.f:
            lo, hi = self.f, self.e
            object.__setattr__(self, "e", lo)
            object.__setattr__(self, "f", hi)

    def __iter__(self) -> Iterator[int]:
        return iter((self.e, self.f))


def make_pair(a: int, b: int) -> EdgePair:
    if a == b:
        raise ValueError("edge pair must contain two distinct edges")
    return EdgePair(min(a, b), max(a, b))


@dataclass(frozen=True)
class PathInGraph:
    """Alternating vertex/edge sequence; a cycle repeats only its first vertex."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def is_cycle(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def validate(self, g: Multigraph) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("vertex/edge sequences out of step")
        interior = self.vertices[:-1] if self.is_cycle else self.vertices
        if len(set(interior)) != len(interior):
            raise ValueError("repeated vertex in simple path")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("repeated edge in path")
        for i, e in enumerate(self.edges):
            a, b = g.endpoints(e)
            if {a, b} != {self.vertices[i], self.vertices[i + 1]}:
                raise ValueError(f"edge {e} does not join consecutive path vertices")


@dataclass(frozen=True)
class Subgraph:
    """An edge set plus vertex set referencing a host graph."""

    vertices: frozenset[int]
    edges: frozenset[int]

    @staticmethod
    def from_edges(g: Multigraph, edge_ids: Iterable[int], extra_vertices: Iterable[int] = ()) -> "Subgraph":
        ids = frozenset(edge_ids)
        verts = set(extra_vertices)
        for e in ids:
            verts.update(g.endpoints(e))
        return Subgraph(frozenset(verts), ids)

    @staticmethod
    def from_path(p: PathInGraph) -> "Subgraph":
        return Subgraph(p.vertex_set(), p.edge_set())


def as_subgraph(g: Multigraph, h: "Subgraph | PathInGraph") -> Subgraph:
    return Subgraph.from_path(h) if isinstance(h, PathInGraph) else h


def cycle_from_vertices(g: Multigraph, vseq: Sequence[int]) -> PathInGraph:
    """Close vseq into a cycle, picking the lowest unused edge between consecutive vertices."""
    if len(vseq) < 2 or len(set(vseq)) != len(vseq):
        raise NotACycle(f"not a usable vertex sequence: {vseq!r}")
    closed = list(vseq) + [vseq[0]]
    edges: list[int] = []
    for a, b in zip(closed, closed[1:]):
        between = [e for e in g.edges_between(a, b) if e not in edges]
        if not between:
            raise NotACycle(f"no unused edge between {a} and {b}")
        edges.append(min(between))
    cycle = PathInGraph(tuple(closed), tuple(edges))
    cycle.validate(g)
    return cycle


def require_cycle(g: Multigraph, c: PathInGraph) -> None:
    if not c.is_cycle:
        raise NotACycle("path is not closed")
    try:
        c.validate(g)
    except ValueError as exc:
        raise NotACycle(str(exc)) from exc


# ---------------------------------------------------------------------------
# Enumeration primitives
# ---------------------------------------------------------------------------


def avoiding_paths(
    g: Multigraph,
    h: Subgraph | PathInGraph,
    s: int,
    t: int,
) -> Iterator[PathInGraph]:
    """Yield every st-path avoiding H (no H edge, no internal H vertex).

    s and t may lie in H. Order is lexicographic by edge-id sequence; every
    yielded path satisfies the PathInGraph invariants.
    """
    if s not in g.vertices:
        raise UnknownVertex(s)
    if t not in g.vertices:
        raise UnknownVertex(t)
    sub = as_subgraph(g, h)
    if s == t:
        path = PathInGraph((s,), ())
        path.validate(g)
        yield path
        return

    verts = [s]
    edges: list[int] = []
    on_path = {s}

    def walk(v: int) -> Iterator[PathInGraph]:
        for e in sorted(g.edges_at(v)):
            if e in sub.edges:
                continue
            w = g.other_end(e, v)
            if w in on_path:
                continue
            if w != t and w in sub.vertices:
                continue
            verts.append(w)
            edges.append(e)
            if w == t:
                path = PathInGraph(tuple(verts), tuple(edges))
                path.validate(g)
                yield path
            else:
                on_path.add(w)
                yield from walk(w)
                on_path.discard(w)
            verts.pop()
            edges.pop()

    yield from walk(s)


class _StepBudget:
    __slots__ = ("remaining",)

    def __init__(self, budget: int | None) -> None:
        self.remaining = budget

    def spend(self) -> None:
        if self.remaining is None:
            return
        if self.remaining <= 0:
            raise SearchBudgetExceeded("search step budget exhausted")
        self.remaining -= 1


def paths_by_length(
    g: Multigraph,
    s: int,
    t: int,
    forbidden_vertices: frozenset[int] = frozenset(),
    forbidden_edges: frozenset[int] = frozenset(),
    budget: _StepBudget | None = None,
) -> Iterator[PathInGraph]:
    """Simple st-paths ordered by length then lexicographic edge ids."""
    if s in forbidden_vertices or t in forbidden_vertices:
        return
    counter = budget or _StepBudget(None)
    for depth in range(1, g.n):
        verts = [s]
        edges: list[int] = []
        on_path = {s}

        def walk(v: int, left: int) -> Iterator[PathInGraph]:
            counter.spend()
            for e in sorted(g.edges_at(v)):
                if e in forbidden_edges:
                    continue
                w = g.other_end(e, v)
                if w in on_path or w in forbidden_vertices:
                    continue
                if w == t:
                    if left == 1:
                        yield PathInGraph(tuple(verts) + (t,), tuple(edges) + (e,))
                    continue
                if left <= 1:
                    continue
                verts.append(w)
                edges.append(e)
                on_path.add(w)
                yield from walk(w, left - 1)
                on_path.discard(w)
                verts.pop()
                edges.pop()

        yield from walk(s, depth)


def cycles_through_edge(
    g: Multigraph,
    e: int,
    forbidden_vertices: Iterable[int] = (),
    budget: _StepBudget | None = None,
    min_edge_id: int | None = None,
) -> Iterator[PathInGraph]:
    """Cycles containing edge e, shortest first; optionally only edges >= min_edge_id."""
    a, b = g.endpoints(e)
    banned_v = frozenset(forbidden_vertices)
    banned_e = frozenset({e} | ({x for x in g.edge_ids() if x < min_edge_id} if min_edge_id is not None else set()))
    for path in paths_by_length(g, b, a, banned_v, banned_e, budget):
        yield PathInGraph((a,) + path.vertices, (e,) + path.edges)


def all_cycles(g: Multigraph, budget: _StepBudget | None = None) -> Iterator[PathInGraph]:
    """All cycles of g, each exactly once (anchored at its minimum edge id)."""
    for e in g.edge_ids():
        yield from cycles_through_edge(g, e, budget=budget, min_edge_id=e)


# ---------------------------------------------------------------------------
# Bridge bookkeeping
# ---------------------------------------------------------------------------


def bridge_edge_groups(g: Multigraph, h: Subgraph | PathInGraph) -> list[frozenset[int]]:
    """Partition E(g) \\ E(h) into H-bridge edge groups, ordered by smallest id.

    A group is either a single chord edge with both ends on H, or the edges of
    one component of g - V(H) together with its attachment edges.
    """
    sub = as_subgraph(g, h)
    groups: list[set[int]] = []
    assigned: set[int] = set()

    seen: set[int] = set()
    for start in sorted(g.vertices - sub.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        group: set[int] = set()
        while stack:
            v = stack.pop()
            for e in g.edges_at(v):
                group.add(e)
                w = g.other_end(e, v)
                if w not in sub.vertices and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if group:
            groups.append(group)
            assigned |= group

    for e, (u, v) in g.edge_items():
        if e in sub.edges or e in assigned:
            continue
        # both ends on H: a chord bridge of its own
        groups.append({e})

    return sorted((frozenset(grp) for grp in groups), key=min)
