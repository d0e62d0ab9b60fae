"""Regular projections of PL embeddings and diagrammatic linking numbers.

Projecting along a direction sends each point p to (u.p, v.p) where
(u, v, direction) is a right-handed frame; depth along the direction
decides which strand passes over at a crossing.  A projection is regular
when all strand images meet only in transversal double points away from
every vertex; anything else (a segment seen end-on, a tangency, a triple
point, a vertex over an edge) raises NonRegularProjection and the caller
picks another direction.

Crossing signs follow the right-hand convention: positive when the
over-strand's image tangent followed by the under-strand's is a positively
oriented plane basis.  Signs are stored for the strands' own path
directions; circuit orientations flip them per traversed edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .circuits import Circuit
from .embedding import EmbeddingError, SpatialEmbedding
from .geometry import (
    Point2,
    Point3,
    Rat,
    _overlap_1d,
    dot3,
    orient2d,
    point_on_segment2,
    projection_frame,
)
from .multigraph import GraphError


class NonRegularProjection(RuntimeError):
    """The projection direction is degenerate for this configuration."""


@dataclass(frozen=True)
class StrandRef:
    strand: object  # edge id for graph diagrams, loop index for loop pairs
    segment: int
    t: Rat  # parameter along the segment, strictly between 0 and 1


@dataclass(frozen=True)
class Crossing:
    first: StrandRef
    second: StrandRef
    over: int  # 0 when `first` is nearer the viewer, 1 when `second` is
    sign: int  # right-handed sign for the strands' stored directions
    point: Point2

    @property
    def over_strand(self):
        return (self.first if self.over == 0 else self.second).strand

    @property
    def under_strand(self):
        return (self.second if self.over == 0 else self.first).strand


class _Seg:
    __slots__ = ("key", "idx", "a3", "b3", "a2", "b2", "ha", "hb")

    def __init__(self, key, idx, a3, b3, a2, b2, ha, hb):
        self.key = key
        self.idx = idx
        self.a3 = a3
        self.b3 = b3
        self.a2 = a2
        self.b2 = b2
        self.ha = ha
        self.hb = hb


def strand_crossings(
    strands: Sequence[tuple[object, Sequence[Point3], bool]],
    direction: Point3,
    markers: Iterable[Point3] = (),
) -> tuple[Crossing, ...]:
    """All transversal crossings between strand images, or NonRegularProjection.

    Strands are (key, points, closed) triples; closed strands get a wrap
    segment from their last point to their first.  Markers are points
    (vertex locations) that must not land on any segment image they are
    not an endpoint of.
    """
    u, v = projection_frame(direction)

    def proj(p: Point3) -> Point2:
        return (dot3(u, p), dot3(v, p))

    def depth(p: Point3) -> Rat:
        return dot3(direction, p)

    segs: list[_Seg] = []
    for key, pts, closed in strands:
        pairs = list(zip(pts, pts[1:]))
        if closed:
            pairs.append((pts[-1], pts[0]))
        for idx, (a, b) in enumerate(pairs):
            a2, b2 = proj(a), proj(b)
            if a2 == b2:
                raise NonRegularProjection(
                    f"segment {idx} of strand {key} is seen end-on")
            segs.append(_Seg(key, idx, a, b, a2, b2, depth(a), depth(b)))

    marker_list = list(markers)
    images: dict[Point2, Point3] = {}
    for m in marker_list:
        m2 = proj(m)
        if m2 in images and images[m2] != m:
            raise NonRegularProjection("two vertices project to the same point")
        images[m2] = m
    for m in marker_list:
        m2 = proj(m)
        for s in segs:
            if m == s.a3 or m == s.b3:
                continue
            if point_on_segment2(m2, s.a2, s.b2):
                raise NonRegularProjection("a vertex projects onto an edge")

    crossings: list[Crossing] = []
    seen_points: set[Point2] = set()
    for i, s in enumerate(segs):
        for t in segs[i + 1:]:
            common = {s.a3, s.b3} & {t.a3, t.b3}
            if len(common) >= 2:
                raise NonRegularProjection("coincident segments")
            if len(common) == 1:
                c = next(iter(common))
                c2 = proj(c)
                o1 = s.b3 if s.a3 == c else s.a3
                o2 = t.b3 if t.a3 == c else t.a3
                p1, p2 = proj(o1), proj(o2)
                if orient2d(c2, p1, p2) == 0 and \
                        (p1[0] - c2[0]) * (p2[0] - c2[0]) + (p1[1] - c2[1]) * (p2[1] - c2[1]) > 0:
                    raise NonRegularProjection(
                        "segments sharing an endpoint overlap in projection")
                continue
            o1 = orient2d(s.a2, s.b2, t.a2)
            o2 = orient2d(s.a2, s.b2, t.b2)
            o3 = orient2d(t.a2, t.b2, s.a2)
            o4 = orient2d(t.a2, t.b2, s.b2)
            if (o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0):
                continue
            if (o3 > 0 and o4 > 0) or (o3 < 0 and o4 < 0):
                continue
            if o1 == 0 and o2 == 0:
                # collinear images: regular only if the ranges are disjoint,
                # which the strict-separation tests above could not see
                axis = 0 if abs(s.b2[0] - s.a2[0]) + abs(t.b2[0] - t.a2[0]) >= \
                    abs(s.b2[1] - s.a2[1]) + abs(t.b2[1] - t.a2[1]) else 1
                if _overlap_1d(s.a2[axis], s.b2[axis], t.a2[axis], t.b2[axis]):
                    raise NonRegularProjection("collinear overlapping segments")
                continue
            if not (o1 * o2 < 0 and o3 * o4 < 0):
                raise NonRegularProjection("tangential contact between segments")
            t_on_s = Fraction(o3) / Fraction(o3 - o4)
            t_on_t = Fraction(o1) / Fraction(o1 - o2)
            point = (
                s.a2[0] + t_on_s * (s.b2[0] - s.a2[0]),
                s.a2[1] + t_on_s * (s.b2[1] - s.a2[1]),
            )
            if point in seen_points:
                raise NonRegularProjection("triple point")
            seen_points.add(point)
            h_s = s.ha + t_on_s * (s.hb - s.ha)
            h_t = t.ha + t_on_t * (t.hb - t.ha)
            if h_s == h_t:
                raise EmbeddingError("strand segments intersect in space")
            over = 0 if h_s > h_t else 1
            tan_s = (s.b2[0] - s.a2[0], s.b2[1] - s.a2[1])
            tan_t = (t.b2[0] - t.a2[0], t.b2[1] - t.a2[1])
            tan_over, tan_under = (tan_s, tan_t) if over == 0 else (tan_t, tan_s)
            cr = tan_over[0] * tan_under[1] - tan_over[1] * tan_under[0]
            assert cr != 0
            crossings.append(Crossing(
                StrandRef(s.key, s.idx, t_on_s),
                StrandRef(t.key, t.idx, t_on_t),
                over,
                1 if cr > 0 else -1,
                point,
            ))
    return tuple(crossings)


@dataclass(frozen=True)
class ProjectedDiagram:
    """Crossing data of one regular projection of an embedded graph."""

    direction: Point3
    edge_endpoints: Mapping[int, tuple[int, int]]
    crossings: tuple[Crossing, ...]

    def crossings_between(self, edges_a: frozenset[int], edges_b: frozenset[int]):
        """Crossings with one strand in each edge set, in diagram order."""
        out = []
        for c in self.crossings:
            ka, kb = c.first.strand, c.second.strand
            if (ka in edges_a and kb in edges_b) or (ka in edges_b and kb in edges_a):
                out.append(c)
        return out


def project(emb: SpatialEmbedding, direction: Point3) -> ProjectedDiagram:
    """Project an embedding along a direction; the projection must be regular."""
    strands = [
        (e.id, emb.edge_paths[e.id], False)
        for e in sorted(emb.graph.edges, key=lambda e: e.id)
    ]
    markers = [emb.vertex_points[v] for v in sorted(emb.graph.vertices)]
    crossings = strand_crossings(strands, direction, markers)
    endpoints = {e.id: (e.u, e.v) for e in emb.graph.edges}
    return ProjectedDiagram(direction, endpoints, crossings)


def _traversal_signs(diagram: ProjectedDiagram, circuit: Circuit) -> dict[int, int]:
    # +1 where the circuit walks an edge in its stored path direction (u to v)
    out: dict[int, int] = {}
    k = len(circuit.edge_ids)
    for i, eid in enumerate(circuit.edge_ids):
        if eid not in diagram.edge_endpoints:
            raise GraphError(f"circuit edge {eid} is not in the diagram")
        u, _ = diagram.edge_endpoints[eid]
        out[eid] = 1 if circuit.vertex_seq[i] == u else -1
    return out


def _check_disjoint(j: Circuit, k: Circuit) -> None:
    if not j.is_disjoint_from(k):
        raise GraphError("circuits share a vertex; linking is undefined")


def linking_number(
    diagram: ProjectedDiagram,
    j: Circuit,
    k: Circuit,
    orientations: tuple[int, int] = (1, 1),
) -> int:
    """lk(J, K): signed count of crossings where J passes over K."""
    _check_disjoint(j, k)
    sig_j = _traversal_signs(diagram, j)
    sig_k = _traversal_signs(diagram, k)
    total = 0
    for c in diagram.crossings:
        over, under = c.over_strand, c.under_strand
        if over in sig_j and under in sig_k:
            total += c.sign * sig_j[over] * sig_k[under]
    return total * orientations[0] * orientations[1]


def omega_pair(diagram: ProjectedDiagram, j: Circuit, k: Circuit) -> int:
    """lk(J, K) mod 2: parity of the crossings where J passes over K."""
    _check_disjoint(j, k)
    _traversal_signs(diagram, j)  # validates circuit edges exist in the diagram
    _traversal_signs(diagram, k)
    j_edges = set(j.edge_ids)
    k_edges = set(k.edge_ids)
    count = 0
    for c in diagram.crossings:
        if c.over_strand in j_edges and c.under_strand in k_edges:
            count += 1
    return count & 1


def loop_crossings(
    loop_a: Sequence[Point3],
    loop_b: Sequence[Point3],
    direction: Point3,
) -> tuple[Crossing, ...]:
    """Crossings between two disjoint closed polylines (strands 0 and 1)."""
    return strand_crossings([(0, loop_a, True), (1, loop_b, True)], direction)


def loop_linking_number(loop_a, loop_b, direction) -> int:
    """lk of two closed polylines, oriented by their point order."""
    total = 0
    for c in loop_crossings(loop_a, loop_b, direction):
        if c.over_strand == 0 and c.under_strand == 1:
            total += c.sign
    return total


def loop_omega(loop_a, loop_b, direction) -> int:
    count = 0
    for c in loop_crossings(loop_a, loop_b, direction):
        if c.over_strand == 0 and c.under_strand == 1:
            count += 1
    return count & 1
