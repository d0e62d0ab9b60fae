"""Canonical forms for small simple graphs.

The key is the lexicographically smallest packed adjacency matrix over all
vertex orderings compatible with an individualization-refinement search:
color classes are refined by neighbor-color multisets, a stuck class is
split by individualizing each member in turn, and the minimum leaf matrix
wins.  Classes that are complete-or-empty toward every other class never
need splitting (any internal permutation is an automorphism), which keeps
complete graphs and their relatives from exploding the search.

Two simple graphs receive equal keys exactly when they are isomorphic.
Intended for the small graphs this package traffics in; hard-limited to
16 vertices.
"""

from __future__ import annotations

from .multigraph import GraphError, MultiGraph

VERTEX_LIMIT = 16
_NODE_LIMIT = 2_000_000


class VertexLimitExceeded(GraphError):
    """Graph too large for exhaustive canonical labeling."""


def canonical_form(g: MultiGraph) -> bytes:
    """Isomorphism-invariant key of the loop-free, parallel-collapsed reduction."""
    gs = g.simplified()
    n = gs.n
    if n > VERTEX_LIMIT:
        raise VertexLimitExceeded(f"{n} vertices exceeds the {VERTEX_LIMIT}-vertex limit")
    verts = sorted(gs.vertices)
    index = {v: i for i, v in enumerate(verts)}
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e in gs.edges:
        nbrs[index[e.u]].append(index[e.v])
        nbrs[index[e.v]].append(index[e.u])
    adj_mask = [0] * n
    for i, ns in enumerate(nbrs):
        for j in ns:
            adj_mask[i] |= 1 << j

    m = gs.m
    if m == 0 or m == n * (n - 1) // 2:
        # every ordering gives the same matrix
        return _pack_key(n, list(range(n)), adj_mask)

    best: bytes | None = None
    nodes = 0

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = [
                (colors[i], tuple(sorted(colors[j] for j in nbrs[i])))
                for i in range(n)
            ]
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if new == colors:
                return colors
            colors = new

    def classes_of(colors: list[int]) -> list[list[int]]:
        buckets: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            buckets.setdefault(c, []).append(i)
        return [buckets[c] for c in sorted(buckets)]

    def homogeneous(cls_list: list[list[int]]) -> bool:
        # Each multi-member class must be complete or empty internally and
        # toward every other multi-member class; stable refinement already
        # makes counts uniform within a class, so one member is enough.
        masks = [sum(1 << i for i in cl) for cl in cls_list]
        for a, cl in enumerate(cls_list):
            if len(cl) == 1:
                continue
            i = cl[0]
            inner = bin(adj_mask[i] & masks[a]).count("1")
            if inner not in (0, len(cl) - 1):
                return False
            for b, other in enumerate(cls_list):
                if b == a or len(other) == 1:
                    continue
                cross = bin(adj_mask[i] & masks[b]).count("1")
                if cross not in (0, len(other)):
                    return False
        return True

    def search(colors: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > _NODE_LIMIT:
            raise RuntimeError("canonical labeling search exploded")
        cls_list = classes_of(colors)
        target = next((cl for cl in cls_list if len(cl) > 1), None)
        if target is None or homogeneous(cls_list):
            order = [i for cl in cls_list for i in cl]
            key = _pack_key(n, order, adj_mask)
            if best is None or key < best:
                best = key
            return
        for v in target:
            branched = refine([
                colors[i] * 2 + (0 if i == v else 1) for i in range(n)
            ])
            search(branched)

    search(refine([0] * n))
    assert best is not None
    return best


def _pack_key(n: int, order: list[int], adj_mask: list[int]) -> bytes:
    bits = []
    for p in range(n):
        row = adj_mask[order[p]]
        for q in range(p + 1, n):
            bits.append(1 if row >> order[q] & 1 else 0)
    packed = bytearray([n])
    acc = 0
    count = 0
    for b in bits:
        acc = acc << 1 | b
        count += 1
        if count == 8:
            packed.append(acc)
            acc = count = 0
    if count:
        packed.append(acc << (8 - count))
    return bytes(packed)


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Whether the simple reductions of two graphs are isomorphic."""
    return canonical_form(g) == canonical_form(h)
