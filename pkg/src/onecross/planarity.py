"""Planarity with certificates on both answers, plus combinatorial embeddings.

A planar verdict carries a RotationSystem (cyclic edge order at each vertex),
a nonplanar verdict carries a Kuratowski subdivision. The decision itself is
delegated to networkx's left-right test on the parallel-reduced graph; the
certificate extraction, face tracing, Euler validation and all embedding
surgery are implemented here. An independent brute-force planarity oracle
lives in `bruteforce` and never shares this code path.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from .errors import InconsistencyDetected, NotPlanarEmbedding, UnknownEdge
from .graph import (
    Multigraph,
    PathInGraph,
    _assemble,
    bridge_edge_groups,
    connected_components,
    delete_edges,
    extend,
    parallel_classes,
    require_cycle,
    restrict,
    simplify,
)

Dart = tuple[int, int]  # (tail vertex, edge id)


# ---------------------------------------------------------------------------
# Rotation systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """One face of an embedding: usually a single boundary walk.

    For disconnected graphs the designated outer face carries one walk per
    component (plus any isolated vertices), following the convention that
    every component presents its first traced walk to the shared outer face.
    """

    walks: tuple[tuple[Dart, ...], ...]
    vertices: frozenset[int]
    edges: frozenset[int]

    def contains_vertex(self, v: int) -> bool:
        return v in self.vertices

    def contains_edge(self, e: int) -> bool:
        return e in self.edges


def _face_from_walks(walks: Sequence[tuple[Dart, ...]], extra_vertices: Iterable[int] = ()) -> Face:
    verts = set(extra_vertices)
    edges = set()
    for walk in walks:
        for v, e in walk:
            verts.add(v)
            edges.add(e)
    return Face(tuple(walks), frozenset(verts), frozenset(edges))


class RotationSystem:
    """A combinatorial embedding: cyclic order of incident edge ids per vertex."""

    __slots__ = ("graph", "rotation", "_walk_cache")

    def __init__(self, graph: Multigraph, rotation: dict[int, tuple[int, ...]]) -> None:
        self.graph = graph
        self.rotation = {v: tuple(es) for v, es in rotation.items()}
        self._walk_cache: tuple[tuple[Dart, ...], ...] | None = None
        self.validate()

    def validate(self) -> None:
        if set(self.rotation) != set(self.graph.vertices):
            raise NotPlanarEmbedding("rotation keys do not match vertex set")
        for v in self.graph.vertices:
            if sorted(self.rotation[v]) != sorted(self.graph.edges_at(v)):
                raise NotPlanarEmbedding(f"rotation at {v} is not a permutation of incident edges")

    def next_dart(self, dart: Dart) -> Dart:
        v, e = dart
        w = self.graph.other_end(e, v)
        rot = self.rotation[w]
        i = rot.index(e)
        return (w, rot[(i + 1) % len(rot)])

    def face_walks(self) -> tuple[tuple[Dart, ...], ...]:
        """All boundary walks (orbits of the face-successor permutation)."""
        if self._walk_cache is not None:
            return self._walk_cache
        seen: set[Dart] = set()
        walks: list[tuple[Dart, ...]] = []
        for v in sorted(self.rotation):
            for e in self.rotation[v]:
                start = (v, e)
                if start in seen:
                    continue
                walk = []
                dart = start
                while True:
                    walk.append(dart)
                    seen.add(dart)
                    dart = self.next_dart(dart)
                    if dart == start:
                        break
                walks.append(tuple(walk))
        self._walk_cache = tuple(walks)
        return self._walk_cache

    def euler_defect(self) -> int:
        """Sum over components of 2 - (V - E + F); zero iff planar embedding."""
        comps = connected_components(self.graph)
        walk_comp: dict[int, int] = {}
        for i, comp in enumerate(comps):
            for v in comp:
                walk_comp[v] = i
        counts = [0] * len(comps)
        for walk in self.face_walks():
            counts[walk_comp[walk[0][0]]] += 1
        defect = 0
        for i, comp in enumerate(comps):
            edges = {e for v in comp for e in self.graph.edges_at(v)}
            faces = max(counts[i], 1)
            defect += 2 - (len(comp) - len(edges) + faces)
        return defect

    def is_planar_embedding(self) -> bool:
        return self.euler_defect() == 0

    def faces(self) -> tuple[Face, ...]:
        """Faces of the embedding; raises NotPlanarEmbedding on Euler failure.

        With several components, the first traced walk of each component is
        merged into the single shared outer face.
        """
        if not self.is_planar_embedding():
            raise NotPlanarEmbedding("rotation system is not a planar embedding")
        comps = connected_components(self.graph)
        if len(comps) == 1 and self.graph.m > 0:
            return tuple(_face_from_walks([w]) for w in self.face_walks())
        comp_of: dict[int, int] = {}
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        first_walks: dict[int, tuple[Dart, ...]] = {}
        inner: list[tuple[Dart, ...]] = []
        for walk in self.face_walks():
            ci = comp_of[walk[0][0]]
            if ci not in first_walks:
                first_walks[ci] = walk
            else:
                inner.append(walk)
        isolated = [min(comp) for comp in comps if all(self.graph.degree(v) == 0 for v in comp)]
        outer = _face_from_walks([first_walks[i] for i in sorted(first_walks)], isolated)
        return (outer,) + tuple(_face_from_walks([w]) for w in inner)

    def mirrored(self) -> "RotationSystem":
        return RotationSystem(self.graph, {v: tuple(reversed(es)) for v, es in self.rotation.items()})

    def __repr__(self) -> str:
        return f"RotationSystem({self.graph!r})"


def faces(r: RotationSystem) -> tuple[Face, ...]:
    """Face list of a planar rotation system (module-level spelling)."""
    return r.faces()


def face_with_vertices(r: RotationSystem, wanted: Iterable[int]) -> Face | None:
    want = set(wanted)
    for face in r.faces():
        if want <= face.vertices:
            return face
    return None


def face_with_vertex_and_edge(r: RotationSystem, v: int, e: int) -> Face | None:
    for face in r.faces():
        if face.contains_vertex(v) and face.contains_edge(e):
            return face
    return None


def cycle_face_walk(r: RotationSystem, c: PathInGraph) -> tuple[Dart, ...] | None:
    """The boundary walk tracing exactly the cycle c, if c bounds a face."""
    target = sorted(c.edges)
    for walk in r.face_walks():
        if len(walk) == len(target) and sorted(e for _, e in walk) == target:
            return walk
    return None


# ---------------------------------------------------------------------------
# Embedding surgery
# ---------------------------------------------------------------------------


def embedding_delete_edges(r: RotationSystem, edge_ids: Iterable[int]) -> RotationSystem:
    doomed = set(edge_ids)
    g2 = delete_edges(r.graph, doomed)
    rotation = {v: tuple(e for e in es if e not in doomed) for v, es in r.rotation.items()}
    return RotationSystem(g2, rotation)


def embedding_delete_vertex(r: RotationSystem, v: int) -> RotationSystem:
    incident = set(r.graph.edges_at(v))
    g2 = delete_edges(r.graph, incident)
    g2 = _assemble(g2.vertices - {v}, dict(g2.edge_items()))
    rotation = {u: tuple(e for e in es if e not in incident) for u, es in r.rotation.items() if u != v}
    return RotationSystem(g2, rotation)


def embedding_subdivide_edge(
    r: RotationSystem, e: int, m: int, half_ids: tuple[int, int]
) -> RotationSystem:
    """Subdivide edge e=(a,b) at a new vertex m; half_ids are ids for (a,m), (m,b)."""
    a, b = r.graph.endpoints(e)
    h1, h2 = half_ids
    g2 = delete_edges(r.graph, [e])
    g2, _ = extend(g2, [m], [])
    endpoints = dict(g2.edge_items())
    endpoints[h1] = (a, m)
    endpoints[h2] = (m, b)
    g2 = _assemble(g2.vertices, endpoints)
    rotation = dict(r.rotation)
    rotation[a] = tuple(h1 if x == e else x for x in rotation[a])
    rotation[b] = tuple(h2 if x == e else x for x in rotation[b])
    rotation[m] = (h1, h2)
    return RotationSystem(g2, rotation)


def embedding_smooth_vertex(r: RotationSystem, m: int, merged_id: int) -> RotationSystem:
    """Inverse of subdivision: remove the degree-2 vertex m, merging its edges."""
    h1, h2 = r.graph.edges_at(m)
    a = r.graph.other_end(h1, m)
    b = r.graph.other_end(h2, m)
    if a == b:
        raise InconsistencyDetected("smoothing would create a loop")
    g2 = delete_edges(r.graph, [h1, h2])
    endpoints = dict(g2.edge_items())
    endpoints[merged_id] = (a, b)
    g2 = _assemble(g2.vertices - {m}, endpoints)
    rotation = {v: es for v, es in r.rotation.items() if v != m}
    rotation[a] = tuple(merged_id if x == h1 else x for x in rotation[a])
    rotation[b] = tuple(merged_id if x == h2 else x for x in rotation[b])
    return RotationSystem(g2, rotation)


def embedding_add_edge_in_face(
    r: RotationSystem, walk: tuple[Dart, ...], p: int, q: int, new_id: int
) -> RotationSystem:
    """Insert a new p-q edge through the face bounded by `walk`.

    p and q must both occur on the walk; the first corner of each is used.
    """
    rotation = {v: list(es) for v, es in r.rotation.items()}

    def corner_after(vertex: int) -> tuple[int, int]:
        # walk[i] = (v, e) leaves v via e; the corner at v is (previous edge -> e)
        for i, (v, e) in enumerate(walk):
            if v == vertex:
                return i, rotation[v].index(e)
        raise InconsistencyDetected(f"vertex {vertex} not on the given face walk")

    _, pos_p = corner_after(p)
    rotation[p].insert(pos_p, new_id)
    _, pos_q = corner_after(q)
    rotation[q].insert(pos_q, new_id)

    endpoints = dict(r.graph.edge_items())
    if new_id in endpoints:
        raise UnknownEdge(new_id)
    endpoints[new_id] = (p, q)
    g2 = _assemble(r.graph.vertices, endpoints)
    out = RotationSystem(g2, {v: tuple(es) for v, es in rotation.items()})
    if not out.is_planar_embedding():
        raise InconsistencyDetected("edge insertion broke the embedding")
    return out


# ---------------------------------------------------------------------------
# Kuratowski certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KuratowskiCert:
    """A subdivision of K5 or K3,3: branch vertices plus branch paths."""

    kind: str  # "K5" | "K33"
    branch_vertices: tuple[int, ...]
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None
    branches: tuple[PathInGraph, ...]
    edges: frozenset[int]

    def validate(self, g: Multigraph) -> None:
        expected_branches = 10 if self.kind == "K5" else 9
        expected_degree = 4 if self.kind == "K5" else 3
        if self.kind not in ("K5", "K33"):
            raise ValueError(f"unknown kind {self.kind}")
        if len(self.branches) != expected_branches:
            raise ValueError("wrong number of branches")
        if len(self.branch_vertices) != (5 if self.kind == "K5" else 6):
            raise ValueError("wrong number of branch vertices")

        bset = set(self.branch_vertices)
        all_edges: set[int] = set()
        internal_seen: set[int] = set()
        degree: dict[int, int] = {}
        end_pairs = []
        for br in self.branches:
            br.validate(g)
            if br.vertices[0] not in bset or br.vertices[-1] not in bset:
                raise ValueError("branch does not join branch vertices")
            interior = br.vertices[1:-1]
            if bset & set(interior):
                raise ValueError("branch vertex interior to a branch")
            if internal_seen & set(interior):
                raise ValueError("branches share an internal vertex")
            internal_seen |= set(interior)
            if all_edges & br.edge_set():
                raise ValueError("branches share an edge")
            all_edges |= br.edge_set()
            degree[br.vertices[0]] = degree.get(br.vertices[0], 0) + 1
            degree[br.vertices[-1]] = degree.get(br.vertices[-1], 0) + 1
            end_pairs.append(frozenset((br.vertices[0], br.vertices[-1])))
        if all_edges != set(self.edges):
            raise ValueError("edge set does not match branch union")
        if any(degree.get(v, 0) != expected_degree for v in bset):
            raise ValueError("branch vertex of wrong degree")

        # contracting each branch must give exactly K5 / K3,3
        if self.kind == "K5":
            want = {frozenset(p) for p in _pairs(sorted(bset))}
        else:
            if self.parts is None:
                raise ValueError("K33 certificate must carry its parts")
            part_a, part_b = self.parts
            if set(part_a) | set(part_b) != bset or set(part_a) & set(part_b):
                raise ValueError("parts do not partition the branch vertices")
            want = {frozenset((a, b)) for a in part_a for b in part_b}
        if set(end_pairs) != want or len(end_pairs) != len(want):
            raise ValueError("branch end pairs do not contract to the expected graph")


def _pairs(items: Sequence[int]) -> list[tuple[int, int]]:
    return [(items[i], items[j]) for i in range(len(items)) for j in range(i + 1, len(items))]


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: RotationSystem | None
    kuratowski: KuratowskiCert | None


# ---------------------------------------------------------------------------
# The certified test
# ---------------------------------------------------------------------------


def _to_nx(g: Multigraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(sorted(g.vertices))
    for e, (u, v) in g.edge_items():
        G.add_edge(u, v, eid=e)
    return G


def _nx_is_planar(g: Multigraph) -> bool:
    return nx.check_planarity(_to_nx(g), counterexample=False)[0]


def test_planarity(g: Multigraph) -> PlanarityResult:
    """Decide planarity of a multigraph with a certificate either way.

    Parallel edges are reduced to a single representative for the decision and
    re-expanded into the returned embedding.
    """
    gs, _ = simplify(g)
    ok, emb = nx.check_planarity(_to_nx(gs), counterexample=False)
    if not ok:
        cert = _extract_kuratowski(gs)
        cert.validate(g)
        return PlanarityResult(False, None, cert)

    by_pair: dict[tuple[int, int], int] = {}
    for e, (u, v) in gs.edge_items():
        by_pair[(u, v)] = e
        by_pair[(v, u)] = e
    data = emb.get_data()
    rotation: dict[int, tuple[int, ...]] = {}
    classes = parallel_classes(g)
    for v in sorted(g.vertices):
        seq: list[int] = []
        for w in data.get(v, []):
            rep = by_pair[(v, w)]
            klass = classes[rep]
            order = klass if v < w else tuple(reversed(klass))
            seq.extend(order)
        rotation[v] = tuple(seq)
    rs = RotationSystem(g, rotation)
    if not rs.is_planar_embedding():
        raise InconsistencyDetected("imported embedding failed the Euler check")
    return PlanarityResult(True, rs, None)


def _extract_kuratowski(gs: Multigraph) -> KuratowskiCert:
    """Deterministic edge-deletion minimization down to a Kuratowski subdivision."""
    current = set(gs.edge_ids())
    for e in sorted(current):
        trial = current - {e}
        if not _nx_is_planar(restrict(gs, trial)):
            current = trial
    kernel = restrict(gs, current)
    return parse_subdivision(kernel, current)


def parse_subdivision(host: Multigraph, edge_ids: Iterable[int]) -> KuratowskiCert:
    """Parse an edge set known to be an edge-minimal Kuratowski subdivision."""
    ids = set(edge_ids)
    sub = restrict(host, ids)
    deg = {v: sub.degree(v) for v in sub.vertices if sub.degree(v) > 0}
    branch_vertices = tuple(sorted(v for v, d in deg.items() if d != 2))
    degrees = {deg[v] for v in branch_vertices}
    if degrees == {4} and len(branch_vertices) == 5:
        kind = "K5"
    elif degrees == {3} and len(branch_vertices) == 6:
        kind = "K33"
    else:
        raise InconsistencyDetected(f"kernel is not a Kuratowski subdivision: degrees {sorted(degrees)}")

    used: set[int] = set()
    branches: list[PathInGraph] = []
    for bv in branch_vertices:
        for e in sorted(sub.edges_at(bv)):
            if e in used:
                continue
            verts = [bv]
            edges = []
            v, cur = bv, e
            while True:
                edges.append(cur)
                used.add(cur)
                v = sub.other_end(cur, v)
                verts.append(v)
                if deg[v] != 2:
                    break
                nxt = [x for x in sub.edges_at(v) if x != cur]
                cur = nxt[0]
            branches.append(PathInGraph(tuple(verts), tuple(edges)))

    parts = None
    if kind == "K33":
        # 2-colour branch vertices: branch ends always lie in different parts
        colour = {branch_vertices[0]: 0}
        frontier = [branch_vertices[0]]
        adj: dict[int, set[int]] = {v: set() for v in branch_vertices}
        for br in branches:
            adj[br.vertices[0]].add(br.vertices[-1])
            adj[br.vertices[-1]].add(br.vertices[0])
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    frontier.append(w)
        part0 = tuple(sorted(v for v in branch_vertices if colour[v] == 0))
        part1 = tuple(sorted(v for v in branch_vertices if colour[v] == 1))
        parts = (part0, part1) if min(part0) < min(part1) else (part1, part0)

    cert = KuratowskiCert(kind, branch_vertices, parts, tuple(branches), frozenset(ids))
    cert.validate(host)
    return cert


# ---------------------------------------------------------------------------
# Embedding with a prescribed face
# ---------------------------------------------------------------------------


def embed_with_outer_cycle(g: Multigraph, c: PathInGraph) -> RotationSystem | None:
    """An embedding of g in which cycle c bounds a face, or None if impossible.

    Reduction: an apex joined to every vertex of c forces all bridges with
    spread-out attachments to the far side of c; bridges confined to a single
    vertex or c-edge never conflict and are spliced back in afterwards.
    """
    require_cycle(g, c)
    order = c.vertices[:-1]

    apex = g.max_vertex() + 1
    g_apex, _ = extend(g, [apex], [(apex, v) for v in order])
    if not test_planarity(g_apex).planar:
        return None

    groups = bridge_edge_groups(g, c)
    segments = []
    closed = list(c.vertices)
    for i in range(len(order)):
        segments.append({closed[i], closed[i + 1]})
    cycle_vs = set(order)

    confined: list[frozenset[int]] = []
    spread: list[frozenset[int]] = []
    for grp in groups:
        att = set()
        for e in grp:
            att.update(set(g.endpoints(e)) & cycle_vs)
        if len(att) <= 1 or any(att <= seg for seg in segments):
            confined.append(grp)
        else:
            spread.append(grp)

    core_edges = set(c.edges)
    for grp in spread:
        core_edges |= grp
    core = restrict(g, core_edges, cycle_vs)
    core_apex, spokes = extend(core, [apex], [(apex, v) for v in order])
    res = test_planarity(core_apex)
    if not res.planar:
        raise InconsistencyDetected("core with apex must be planar when the full apex graph is")
    rs = embedding_delete_vertex(res.embedding, apex)
    if cycle_face_walk(rs, c) is None:
        raise InconsistencyDetected("apex deletion did not leave the cycle as a face")

    for grp in confined:
        rs = _insert_confined_group(rs, g, c, grp)

    if cycle_face_walk(rs, c) is None or not rs.is_planar_embedding():
        raise InconsistencyDetected("confined insertion broke the prescribed face")
    if set(rs.graph.edge_ids()) != set(g.edge_ids()):
        raise InconsistencyDetected("embedding does not cover the whole graph")
    rotation = dict(rs.rotation)
    for v in g.vertices - set(rotation):
        rotation[v] = ()
    return RotationSystem(g, rotation)


def _merge_rotations(
    rs: RotationSystem, g: Multigraph, extra_edges: frozenset[int], patch: dict[int, tuple[int, ...]]
) -> RotationSystem:
    endpoints = dict(rs.graph.edge_items())
    vertices = set(rs.graph.vertices)
    for e in extra_edges:
        endpoints[e] = g.endpoints(e)
        vertices.update(g.endpoints(e))
    merged = dict(rs.rotation)
    merged.update(patch)
    for v in vertices:
        merged.setdefault(v, ())
    return RotationSystem(_assemble(frozenset(vertices), endpoints), merged)


def _insert_confined_group(
    rs: RotationSystem, g: Multigraph, c: PathInGraph, grp: frozenset[int]
) -> RotationSystem:
    cycle_vs = set(c.vertices)
    att = sorted({v for e in grp for v in g.endpoints(e) if v in cycle_vs})
    group_vertices = {v for e in grp for v in g.endpoints(e)}

    if not att:
        # free component: embed it alone and take the disjoint union
        comp = restrict(g, grp, group_vertices)
        sub = test_planarity(comp)
        if not sub.planar:
            raise InconsistencyDetected("free component of a planar graph must be planar")
        return _merge_rotations(rs, g, grp, dict(sub.embedding.rotation))

    c_walk = cycle_face_walk(rs, c)
    if c_walk is None:
        raise InconsistencyDetected("prescribed face lost before insertion")

    if len(att) == 1:
        v = att[0]
        comp = restrict(g, grp, group_vertices)
        sub = test_planarity(comp)
        fan = list(sub.embedding.rotation[v])
        # splice the fan into a corner of v that is not on the c-face
        pos = _non_cycle_corner(rs, c_walk, v)
        rot_v = list(rs.rotation[v])
        rot_v[pos:pos] = fan
        patch = {u: es for u, es in sub.embedding.rotation.items() if u != v}
        patch[v] = tuple(rot_v)
        out = _merge_rotations(rs, g, grp, patch)
        if not out.is_planar_embedding() or cycle_face_walk(out, c) is None:
            raise InconsistencyDetected("single-attachment splice failed")
        return out

    p, q = att
    # the cycle edge between p and q, and its dart that is NOT on the c-face
    idx = next(i for i in range(len(c.edges)) if {c.vertices[i], c.vertices[i + 1]} == {p, q})
    anchor = c.edges[idx]
    comp = restrict(g, set(grp) | {anchor}, group_vertices | {p, q})
    sub = test_planarity(comp)
    if not sub.planar:
        raise InconsistencyDetected("confined bridge with anchor must be planar")
    for mirror in (False, True):
        emb = sub.embedding.mirrored() if mirror else sub.embedding
        fan_p = _fan_after(emb.rotation[p], anchor)
        fan_q = _fan_after(emb.rotation[q], anchor)
        rot_p = _insert_beside(rs.rotation[p], anchor, fan_p, after=_cycle_leaves_via(c_walk, p, anchor))
        rot_q = _insert_beside(rs.rotation[q], anchor, fan_q, after=_cycle_leaves_via(c_walk, q, anchor))
        patch = {u: tuple(es) for u, es in emb.rotation.items() if u not in (p, q)}
        patch[p] = rot_p
        patch[q] = rot_q
        out = _merge_rotations(rs, g, grp, patch)
        if out.is_planar_embedding() and cycle_face_walk(out, c) is not None:
            return out
    raise InconsistencyDetected("two-attachment splice failed in both orientations")


def _non_cycle_corner(rs: RotationSystem, c_walk: tuple[Dart, ...], v: int) -> int:
    """Index in rotation[v] whose corner (predecessor -> this edge) avoids the c-face."""
    rot = rs.rotation[v]
    cycle_out = {e for (u, e) in c_walk if u == v}
    for i, e in enumerate(rot):
        if e not in cycle_out:
            return i
    raise InconsistencyDetected(f"no corner at {v} outside the prescribed face")


def _fan_after(rotation: tuple[int, ...], anchor: int) -> list[int]:
    i = rotation.index(anchor)
    return [rotation[(i + k) % len(rotation)] for k in range(1, len(rotation))]


def _insert_beside(rotation: tuple[int, ...], anchor: int, fan: list[int], after: bool) -> tuple[int, ...]:
    rot = list(rotation)
    i = rot.index(anchor)
    if after:
        rot[i + 1 : i + 1] = fan
    else:
        rot[i:i] = fan
    return tuple(rot)


def _cycle_leaves_via(c_walk: tuple[Dart, ...], v: int, e: int) -> bool:
    """True when the c-face walk departs v along e (so the c-face corner precedes e)."""
    return (v, e) in c_walk
