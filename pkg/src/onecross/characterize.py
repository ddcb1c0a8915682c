"""Crossing pairs of a nonplanar graph: oracle, equivalent conditions, builder.

Three independently computed conditions must always agree:

  (i)   the gadget oracle: replace the pair by a degree-4 crossing vertex and
        test planarity of the result;
  (ii)  the pair is a crossing pair of every Kuratowski subdivision and is not
        separated by cycles;
  (iii) the pair is not separated, both single-edge deletions are planar, and
        some Kuratowski subdivision has the pair as a crossing pair.

Any disagreement aborts loudly: it can only be an implementation bug.
The constructive builder produces a one-crossing drawing by embedding the two
sides of a detaching cycle with prescribed outer face and cofaciality, gluing
them back together and routing the crossing through the shared cycle edge.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .bridges import Detached, decompose, detaching_cycle_vv, overlap, side_of_bridge
from .errors import InconsistencyDetected, PlanarInput, PreconditionViolated
from .graph import (
    EdgePair,
    Multigraph,
    PathInGraph,
    _assemble,
    delete_edges,
    extend,
    make_pair,
    restrict,
    subdivide_edge,
)
from .kuratowski import branch_structure, enumerate_kuratowski, is_crossing_pair_in_kuratowski
from .planarity import (
    KuratowskiCert,
    RotationSystem,
    cycle_face_walk,
    embed_with_outer_cycle,
    embedding_add_edge_in_face,
    embedding_delete_edges,
    embedding_smooth_vertex,
    embedding_subdivide_edge,
    test_planarity,
)
from .separation import SeparationVerdict, separated_by_cycles


# ---------------------------------------------------------------------------
# Planarization and one-crossing drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Planarization:
    """g with the pair {e,f} replaced by a degree-4 crossing vertex w."""

    graph: Multigraph
    pair: EdgePair
    w: int
    e_ends: tuple[int, int]
    f_ends: tuple[int, int]
    e_halves: tuple[int, int]
    f_halves: tuple[int, int]


def planarize(g: Multigraph, p: EdgePair) -> Planarization:
    u, v = g.endpoints(p.e)
    x, y = g.endpoints(p.f)
    w = g.max_vertex() + 1
    g2 = delete_edges(g, [p.e, p.f])
    g3, ids = extend(g2, [w], [(u, w), (w, v), (x, w), (w, y)])
    return Planarization(g3, p, w, (u, v), (x, y), (ids[0], ids[1]), (ids[2], ids[3]))


def unplanarize(pz: Planarization) -> Multigraph:
    """Reconstruct the original graph exactly (ids included)."""
    doomed = set(pz.e_halves) | set(pz.f_halves)
    endpoints = {e: ends for e, ends in pz.graph.edge_items() if e not in doomed}
    endpoints[pz.pair.e] = pz.e_ends
    endpoints[pz.pair.f] = pz.f_ends
    return _assemble(pz.graph.vertices - {pz.w}, endpoints)


@dataclass(frozen=True)
class OneDrawing:
    """Certificate for cr(g) = 1: a planar embedding of the planarization."""

    planarization: Planarization
    rotation: RotationSystem

    @property
    def crossing_pair(self) -> EdgePair:
        return self.planarization.pair

    def alternates_at_crossing(self) -> bool:
        pz = self.planarization
        kinds = []
        for e in self.rotation.rotation[pz.w]:
            if e in pz.e_halves:
                kinds.append("e")
            elif e in pz.f_halves:
                kinds.append("f")
            else:
                return False
        if len(kinds) != 4:
            return False
        return all(kinds[i] != kinds[(i + 1) % 4] for i in range(4))

    def validate(self, host: Multigraph) -> None:
        if self.rotation.graph != self.planarization.graph:
            raise InconsistencyDetected("drawing rotation is not over the planarized graph")
        if not self.rotation.is_planar_embedding():
            raise InconsistencyDetected("drawing rotation fails the Euler check")
        if not self.alternates_at_crossing():
            raise InconsistencyDetected("crossing vertex rotation does not alternate")
        if unplanarize(self.planarization) != host:
            raise InconsistencyDetected("un-planarizing does not reproduce the input graph")


# ---------------------------------------------------------------------------
# Condition (i): the independent gadget oracle
# ---------------------------------------------------------------------------


def oracle_crossing_pair(g: Multigraph, p: EdgePair, known_nonplanar: bool = False) -> OneDrawing | None:
    """A verified OneDrawing with the pair crossing, or None.

    Never consults the equivalence conditions: the answer is the planarity of
    the planarized graph. Raises PlanarInput on planar g.
    """
    if not known_nonplanar and test_planarity(g).planar:
        raise PlanarInput("crossing pairs are defined for nonplanar graphs")
    if set(g.endpoints(p.e)) & set(g.endpoints(p.f)):
        return None
    pz = planarize(g, p)
    res = test_planarity(pz.graph)
    if not res.planar:
        return None
    drawing = OneDrawing(pz, res.embedding)
    drawing.validate(g)
    return drawing


def vertex_disjoint_pairs(g: Multigraph) -> list[EdgePair]:
    ids = g.edge_ids()
    out = []
    for i, e in enumerate(ids):
        ue = set(g.endpoints(e))
        for f in ids[i + 1 :]:
            if not (ue & set(g.endpoints(f))):
                out.append(make_pair(e, f))
    return out


# ---------------------------------------------------------------------------
# Conditions (ii) and (iii)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CondII:
    holds: bool
    failing_cert: KuratowskiCert | None
    certs_checked: int
    separation: SeparationVerdict | None


@dataclass(frozen=True)
class CondIII:
    holds: bool
    separation: SeparationVerdict
    planar_minus_e: bool
    planar_minus_f: bool
    witness_cert: KuratowskiCert | None


def _pair_crosses_cert(cert: KuratowskiCert, p: EdgePair) -> bool:
    if p.e not in cert.edges or p.f not in cert.edges:
        return False
    return is_crossing_pair_in_kuratowski(branch_structure(cert), p.e, p.f)


def condition_ii(
    g: Multigraph,
    p: EdgePair,
    certs: Sequence[KuratowskiCert] | None = None,
    separation: SeparationVerdict | None = None,
    budget: int | None = None,
) -> CondII:
    """Crossing pair of every Kuratowski subdivision, and not separated."""
    source: Iterator[KuratowskiCert] = iter(certs) if certs is not None else enumerate_kuratowski(g)
    checked = 0
    for cert in source:
        checked += 1
        if not _pair_crosses_cert(cert, p):
            return CondII(False, cert, checked, None)
    sep = separation if separation is not None else separated_by_cycles(g, p, budget=budget)
    return CondII(not sep.separated, None, checked, sep)


def condition_iii(
    g: Multigraph,
    p: EdgePair,
    certs: Sequence[KuratowskiCert] | None = None,
    separation: SeparationVerdict | None = None,
    budget: int | None = None,
) -> CondIII:
    """Not separated, both deletions planar, and some subdivision crosses the pair."""
    sep = separation if separation is not None else separated_by_cycles(g, p, budget=budget)
    pe = test_planarity(delete_edges(g, [p.e])).planar
    pf = test_planarity(delete_edges(g, [p.f])).planar
    witness = None
    if not sep.separated and pe and pf:
        source: Iterator[KuratowskiCert] = iter(certs) if certs is not None else enumerate_kuratowski(g)
        for cert in source:
            if _pair_crosses_cert(cert, p):
                witness = cert
                break
    holds = (not sep.separated) and pe and pf and witness is not None
    return CondIII(holds, sep, pe, pf, witness)


@dataclass(frozen=True)
class ConditionReport:
    pair: EdgePair
    cond_i: bool
    drawing: OneDrawing | None
    cond_ii: CondII
    cond_iii: CondIII

    @property
    def consistent(self) -> bool:
        return self.cond_i == self.cond_ii.holds == self.cond_iii.holds


def check_equivalence(
    g: Multigraph,
    p: EdgePair,
    certs: Sequence[KuratowskiCert] | None = None,
    budget: int | None = None,
) -> ConditionReport:
    """Compute all three conditions independently and insist they agree."""
    if test_planarity(g).planar:
        raise PlanarInput("the equivalence concerns nonplanar graphs")
    if certs is None:
        certs = list(enumerate_kuratowski(g))
    sep = separated_by_cycles(g, p, budget=budget)
    drawing = oracle_crossing_pair(g, p, known_nonplanar=True)
    two = condition_ii(g, p, certs=certs, separation=sep, budget=budget)
    three = condition_iii(g, p, certs=certs, separation=sep, budget=budget)
    report = ConditionReport(p, drawing is not None, drawing, two, three)
    if not report.consistent:
        raise InconsistencyDetected(
            f"equivalence conditions disagree on pair ({p.e},{p.f}): "
            f"i={report.cond_i} ii={two.holds} iii={three.holds}"
        )
    return report


# ---------------------------------------------------------------------------
# The decision: cr(g) in {0, 1, >= 2}
# ---------------------------------------------------------------------------


PLANAR = "planar"
EXACTLY_ONE = "one"
AT_LEAST_TWO = "two_plus"


@dataclass(frozen=True)
class PairFailure:
    pair: EdgePair
    reason: str  # "separated" | "deletion_nonplanar"
    separation: SeparationVerdict | None


@dataclass(frozen=True)
class CrossingDecision:
    kind: str
    embedding: RotationSystem | None
    drawing: OneDrawing | None
    failures: tuple[PairFailure, ...]


def crossing_number_le_1(g: Multigraph, budget: int | None = None) -> CrossingDecision:
    """Planar / exactly one crossing (with drawing) / at least two (with evidence).

    Sweeps the crossing pairs of one fixed Kuratowski subdivision: any crossing
    pair of g must be one of them, so exhausting the sweep proves cr >= 2.
    """
    res = test_planarity(g)
    if res.planar:
        return CrossingDecision(PLANAR, res.embedding, None, ())

    cert = res.kuratowski
    bs = branch_structure(cert)
    ids = sorted(cert.edges)
    candidates = []
    for i, e in enumerate(ids):
        for f in ids[i + 1 :]:
            if is_crossing_pair_in_kuratowski(bs, e, f):
                candidates.append(make_pair(e, f))

    failures = []
    for pair in candidates:
        if not test_planarity(delete_edges(g, [pair.e])).planar or not test_planarity(
            delete_edges(g, [pair.f])
        ).planar:
            failures.append(PairFailure(pair, "deletion_nonplanar", None))
            continue
        sep = separated_by_cycles(g, pair, budget=budget)
        if sep.separated:
            failures.append(PairFailure(pair, "separated", sep))
            continue
        drawing = oracle_crossing_pair(g, pair, known_nonplanar=True)
        if drawing is None:
            raise InconsistencyDetected(
                f"condition (iii) holds for ({pair.e},{pair.f}) but the oracle refuses it"
            )
        return CrossingDecision(EXACTLY_ONE, None, drawing, ())
    return CrossingDecision(AT_LEAST_TWO, None, None, tuple(failures))


# ---------------------------------------------------------------------------
# Potential crossing pairs (conjecture probing)
# ---------------------------------------------------------------------------


def potential_crossing_pairs(
    g: Multigraph,
    certs: Sequence[KuratowskiCert] | None = None,
    budget: int | None = None,
) -> list[tuple[EdgePair, SeparationVerdict]]:
    """Pairs that are crossing pairs of every Kuratowski subdivision of g.

    Each pair is annotated with its separation verdict. A pair that is
    potential and not separated must be an actual crossing pair (the
    (ii) -> (i) direction of the equivalence); this is asserted against the oracle.
    """
    if test_planarity(g).planar:
        raise PlanarInput("potential crossing pairs concern nonplanar graphs")
    if certs is None:
        certs = list(enumerate_kuratowski(g))
    out = []
    for pair in vertex_disjoint_pairs(g):
        if not all(_pair_crosses_cert(cert, pair) for cert in certs):
            continue
        sep = separated_by_cycles(g, pair, budget=budget)
        if not sep.separated:
            if oracle_crossing_pair(g, pair, known_nonplanar=True) is None:
                raise InconsistencyDetected(
                    "potential pair without separation must be a crossing pair"
                )
        out.append((pair, sep))
    return out


# ---------------------------------------------------------------------------
# The constructive builder (no gadget: embed, split, re-embed, glue, route)
# ---------------------------------------------------------------------------


def build_one_drawing_constructive(g: Multigraph, p: EdgePair) -> OneDrawing:
    """Construct a drawing with {e,f} crossing without consulting the gadget.

    Route: find a cycle C of H-e detaching e's ends (f must lie on C), embed
    g-e, split the bridges by side of C, re-embed each side with C bounding a
    face and the side's end of e cofacial with f, glue, subdivide f at the
    crossing vertex and route the halves of e through the two cofacial faces.
    """
    cond = condition_iii(g, p)
    if not cond.holds:
        raise PreconditionViolated("condition (iii) does not hold for this pair")
    e, f = p.e, p.f
    u, v = g.endpoints(e)

    cert = cond.witness_cert
    h_minus_e = restrict(g, set(cert.edges) - {e})
    verdict = detaching_cycle_vv(h_minus_e, u, v)
    if not isinstance(verdict, Detached):
        raise InconsistencyDetected("ends of e must be detached in the subdivision minus e")
    cycle = verdict.cycle
    if f not in cycle.edge_set() or u in cycle.vertex_set() or v in cycle.vertex_set():
        raise InconsistencyDetected("detaching cycle must carry f and avoid the ends of e")

    g_minus_e = delete_edges(g, [e])
    emb = test_planarity(g_minus_e).embedding
    if emb is None:
        raise InconsistencyDetected("g - e must be planar under condition (iii)")

    all_bridges = decompose(g_minus_e, cycle)
    bridge_u = next(b for b in all_bridges if u in b.nucleus)
    bridge_v = next(b for b in all_bridges if v in b.nucleus)
    if bridge_u == bridge_v:
        raise InconsistencyDetected("ends of e in one bridge would yield separating cycles")
    if not overlap(bridge_u, bridge_v, cycle).overlapping:
        raise InconsistencyDetected("the end bridges of e must overlap on the detaching cycle")

    side_u = side_of_bridge(emb, cycle, bridge_u)
    side_v = side_of_bridge(emb, cycle, bridge_v)
    if side_u == side_v:
        raise InconsistencyDetected("overlapping bridges embedded on one side")

    u_edges, v_edges = set(cycle.edges), set(cycle.edges)
    u_verts, v_verts = set(cycle.vertices), set(cycle.vertices)
    for b in all_bridges:
        side = side_of_bridge(emb, cycle, b)
        target_e, target_v = (v_edges, v_verts) if side == side_v else (u_edges, u_verts)
        target_e |= b.edges
        target_v |= b.nucleus | b.attachments

    side_graph_u = restrict(g_minus_e, u_edges, u_verts)
    side_graph_v = restrict(g_minus_e, v_edges, v_verts)

    emb_u = _embed_side_cofacial(side_graph_u, cycle, u, f)
    emb_v = _embed_side_cofacial(side_graph_v, cycle, v, f)
    glued = _glue_along_cycle(emb_u, emb_v, cycle, g_minus_e)

    pz = planarize(g, p)
    rs = embedding_subdivide_edge(glued, f, pz.w, pz.f_halves)
    rs = _route_half(rs, u, pz.w, pz.e_halves[0])
    rs = _route_half(rs, v, pz.w, pz.e_halves[1])

    drawing = OneDrawing(pz, RotationSystem(pz.graph, rs.rotation))
    drawing.validate(g)
    return drawing


def _embed_side_cofacial(side: Multigraph, cycle: PathInGraph, x: int, f: int) -> RotationSystem:
    """Embed one side with the cycle bounding a face and x cofacial with f.

    The cofaciality constraint is folded into the outer-cycle embedding by
    subdividing f and anchoring x to the fresh vertex; removing the anchor
    afterwards leaves x and f on one face.
    """
    g2, m, halves = subdivide_edge(side, f)
    g3, added = extend(g2, [], [(x, m)])
    cstar = _subdivided_cycle(side, cycle, f, m, halves)
    rs = embed_with_outer_cycle(g3, cstar)
    if rs is None:
        raise InconsistencyDetected("side embedding with prescribed face must exist")
    rs = embedding_delete_edges(rs, added)
    rs = embedding_smooth_vertex(rs, m, f)
    if cycle_face_walk(rs, cycle) is None:
        raise InconsistencyDetected("prescribed cycle face lost during anchor removal")
    return rs


def _subdivided_cycle(
    side: Multigraph, cycle: PathInGraph, f: int, m: int, halves: tuple[int, int]
) -> PathInGraph:
    a, b = side.endpoints(f)
    h1, h2 = halves  # h1 = (a, m), h2 = (m, b)
    verts: list[int] = []
    edges: list[int] = []
    for i, eid in enumerate(cycle.edges):
        verts.append(cycle.vertices[i])
        if eid != f:
            edges.append(eid)
            continue
        verts.append(m)
        if cycle.vertices[i] == a:
            edges.extend((h1, h2))
        else:
            edges.extend((h2, h1))
    verts.append(cycle.vertices[-1])
    return PathInGraph(tuple(verts), tuple(edges))


def _walk_cycle_direction(walk: tuple[tuple[int, int], ...], cycle: PathInGraph) -> int:
    ring = cycle.vertices[:-1]
    if len(ring) < 3:
        raise InconsistencyDetected("gluing expects cycles of length at least three")
    seq = [v for v, _ in walk]
    i = seq.index(ring[0])
    return 1 if seq[(i + 1) % len(seq)] == ring[1] else -1


def _glue_along_cycle(
    emb_u: RotationSystem, emb_v: RotationSystem, cycle: PathInGraph, host: Multigraph
) -> RotationSystem:
    """Join two one-sided embeddings along their shared cycle face."""
    walk_u = cycle_face_walk(emb_u, cycle)
    walk_v = cycle_face_walk(emb_v, cycle)
    if walk_u is None or walk_v is None:
        raise InconsistencyDetected("both sides must present the cycle as a face")
    if _walk_cycle_direction(walk_u, cycle) == _walk_cycle_direction(walk_v, cycle):
        emb_v = emb_v.mirrored()
        walk_v = cycle_face_walk(emb_v, cycle)

    out_edge_u = {v: e for v, e in walk_u}
    in_edge_u: dict[int, int] = {}
    for v, e in walk_u:
        in_edge_u[emb_u.graph.other_end(e, v)] = e

    rotation: dict[int, tuple[int, ...]] = {}
    cycle_vs = set(cycle.vertices)
    for vertex, rot in emb_u.rotation.items():
        if vertex not in cycle_vs:
            rotation[vertex] = rot
    for vertex, rot in emb_v.rotation.items():
        if vertex not in cycle_vs:
            rotation[vertex] = rot

    for q in cycle_vs:
        c_in, c_out = in_edge_u[q], out_edge_u[q]
        fan_u = _linearize_after(emb_u.rotation[q], c_in, c_out)
        fan_v = _linearize_after(emb_v.rotation[q], c_out, c_in)
        rotation[q] = (c_out, *fan_u, c_in, *fan_v)

    for vertex in host.vertices - set(rotation):
        rotation[vertex] = ()
    glued = RotationSystem(host, rotation)
    if not glued.is_planar_embedding():
        raise InconsistencyDetected("glued embedding fails the Euler check")
    return glued


def _linearize_after(rot: tuple[int, ...], first: int, last: int) -> tuple[int, ...]:
    """The fan strictly between `first` and `last` in the cyclic order.

    The cycle face guarantees `last` immediately follows `first`, so the fan
    is everything except those two edges, starting just past `last`.
    """
    i = rot.index(first)
    seq = [rot[(i + k) % len(rot)] for k in range(1, len(rot))]
    if not seq or seq[0] != last:
        raise InconsistencyDetected("cycle edges are not adjacent in the side rotation")
    return tuple(seq[1:])


def _route_half(rs: RotationSystem, end: int, w: int, new_id: int) -> RotationSystem:
    if not rs.is_planar_embedding():
        raise InconsistencyDetected("routing requires a planar embedding")
    for walk in rs.face_walks():
        verts = {v for v, _ in walk}
        if end in verts and w in verts:
            return embedding_add_edge_in_face(rs, walk, end, w, new_id)
    raise InconsistencyDetected(f"no face exposes both {end} and the crossing vertex")
