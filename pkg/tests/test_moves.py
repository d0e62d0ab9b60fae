import random

import pytest

from linkless.canonical import are_isomorphic, canonical_form
from linkless.moves import (
    ClosureSizeExceeded,
    delta_y,
    family_closed_under_delta_y,
    petersen_closure,
    petersen_family,
    triangles,
    y_delta,
)
from linkless.multigraph import (
    GraphError,
    complete_graph,
    graph_from_pairs,
    k331_graph,
    parse_graph,
    petersen_graph,
)


def test_delta_y_on_k6():
    g = delta_y(complete_graph(6), (1, 2, 3))
    assert (g.n, g.m) == (7, 15)
    assert g.degree(7) == 3
    assert not g.has_edge(1, 2)


def test_delta_y_on_k4():
    g = delta_y(complete_graph(4), (2, 3, 4))
    assert (g.n, g.m) == (5, 6)


def test_delta_y_on_k331_degree_sequence():
    # apex loses 2 gains 1, the two part-vertices drop from 4 to 3, new
    # vertex has degree 3; derived by direct construction
    g = delta_y(k331_graph(), (1, 4, 7))
    assert (g.n, g.m) == (8, 15)
    assert g.degree_sequence() == (3, 3, 3, 4, 4, 4, 4, 5)


def test_delta_y_requires_triangle():
    with pytest.raises(GraphError):
        delta_y(complete_graph(6), (1, 1, 2))
    with pytest.raises(GraphError):
        delta_y(parse_graph("K3,3"), (1, 2, 3))


def test_delta_y_random_instances():
    # edge count preserved, vertex count +1, on many random (graph, triangle)
    rng = random.Random(99)
    checked = 0
    while checked < 1000:
        n = rng.randint(3, 9)
        pairs = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.6
        ]
        g = graph_from_pairs(pairs, vertices=range(1, n + 1))
        tris = triangles(g)
        if not tris:
            continue
        tri = tris[rng.randrange(len(tris))]
        h = delta_y(g, tri)
        assert h.n == g.n + 1
        assert h.m == g.m
        checked += 1


def test_y_delta_inverts_delta_y():
    for g in [complete_graph(6), k331_graph(), complete_graph(4)]:
        tris = triangles(g)
        tri = tris[0]
        h = delta_y(g, tri)
        back = y_delta(h, max(h.vertices))
        assert are_isomorphic(back, g)


def test_y_delta_on_claw():
    claw = graph_from_pairs([(1, 2), (1, 3), (1, 4)])
    tri = y_delta(claw, 1)
    assert (tri.n, tri.m) == (3, 3)
    assert triangles(tri) == [(2, 3, 4)]


def test_y_delta_on_petersen_vertex():
    # girth 5 means no neighbor pair is adjacent: 3 edges out, 3 edges in
    p = petersen_graph()
    g = y_delta(p, 1)
    assert (g.n, g.m) == (9, 15)


def test_y_delta_preconditions():
    square = graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 1)])
    with pytest.raises(GraphError):
        y_delta(square, 1)  # degree 2
    multi = graph_from_pairs([(1, 2), (1, 2), (1, 3)])
    with pytest.raises(GraphError):
        y_delta(multi, 1)  # repeated neighbor


def test_y_delta_on_k4_collapses_parallels():
    # neighbors of any K4 vertex are already mutually adjacent
    g = y_delta(complete_graph(4), 4)
    assert are_isomorphic(g, complete_graph(3))
    assert g.m == 3


def test_closure_of_triangle():
    c3 = graph_from_pairs([(1, 2), (2, 3), (3, 1)], name="C3")
    fam = petersen_closure([c3])
    assert len(fam) == 2  # C3 and the claw K_{1,3}, which is triangle-free
    assert fam.members[1].graph.degree_sequence() == (1, 1, 1, 3)


def test_family_has_seven_members():
    fam = petersen_family()
    assert len(fam) == 7
    assert len(fam.canonical_keys) == 7
    for member in fam:
        assert member.graph.m == 15


def test_family_names_and_landmarks():
    fam = petersen_family()
    names = [m.name for m in fam]
    assert names == ["K6", "P7", "K3,3,1", "P8a", "P8b", "P9", "petersen"]
    assert are_isomorphic(fam.member_named("K6").graph, complete_graph(6))
    assert are_isomorphic(fam.member_named("K3,3,1").graph, k331_graph())
    pet = fam.member_named("petersen")
    assert pet.graph.n == 10
    assert pet.is_triangle_free
    assert are_isomorphic(pet.graph, petersen_graph())


def test_family_closed():
    assert family_closed_under_delta_y(petersen_family())


def test_family_stable_under_seed_relabeling():
    rng = random.Random(3)

    def shuffled(g):
        verts = sorted(g.vertices)
        images = verts[:]
        rng.shuffle(images)
        return g.relabeled(dict(zip(verts, images)))

    fam = petersen_family()
    relabeled = petersen_closure([shuffled(complete_graph(6)), shuffled(k331_graph())])
    assert relabeled.canonical_keys == fam.canonical_keys


def test_closure_from_k6_alone_misses_k331():
    sub = petersen_closure([complete_graph(6)])
    fam = petersen_family()
    assert sub.canonical_keys < fam.canonical_keys
    assert len(sub) == 6
    assert canonical_form(k331_graph()) not in sub.canonical_keys
    assert canonical_form(petersen_graph()) in sub.canonical_keys


def test_closure_bound():
    with pytest.raises(ClosureSizeExceeded):
        petersen_closure([complete_graph(6), k331_graph()], bound=3)


def test_derivations_replay():
    # each member's recorded move sequence reproduces its canonical form
    fam = petersen_family()
    seeds = {"K6": complete_graph(6), "K3,3,1": k331_graph()}
    for member in fam:
        g = seeds[member.derivation[0]]
        for step in member.derivation[1:]:
            assert step.startswith("dY(")
            tri = tuple(int(x) for x in step[3:-1].split(","))
            g = delta_y(g, tri)
        assert canonical_form(g) == member.canonical
