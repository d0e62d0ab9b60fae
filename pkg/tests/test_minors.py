import random
from itertools import combinations

import pytest

from linkless.minors import (
    MinorModel,
    SearchBudgetExceeded,
    clear_minor_cache,
    has_minor,
    is_intrinsically_linked,
    minor_minimality_report,
    minor_model_errors,
    verify_minor_model,
)
from linkless.moves import delta_y, petersen_family, triangles
from linkless.multigraph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    graph_from_pairs,
    parse_graph,
    petersen_graph,
)
from oracles import has_minor_oracle


def random_graph(n, p, rng, base=1):
    pairs = [
        (u, v)
        for u in range(base, base + n)
        for v in range(u + 1, base + n)
        if rng.random() < p
    ]
    return graph_from_pairs(pairs, vertices=range(base, base + n))


def test_k6_in_k7():
    g, h = complete_graph(7), complete_graph(6)
    model = has_minor(g, h)
    assert model is not None
    assert verify_minor_model(g, h, model)
    # subgraph witness: singleton branch sets suffice and the search found some model
    assert all(bs for bs in model.branch_sets.values())


def test_petersen_has_no_k6_minor():
    # contracting 10 vertices down to 6 leaves at most 11 < 15 edges
    assert has_minor(petersen_graph(), complete_graph(6)) is None


def test_k5_too_small_for_k6():
    assert has_minor(complete_graph(5), complete_graph(6)) is None


def test_c4_minor_respects_low_degree_targets():
    c4 = graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 1)], name="C4")
    path = graph_from_pairs([(1, 2), (2, 3), (3, 4)])
    assert has_minor(c4, c4) is not None
    assert has_minor(path, c4) is None
    # a long cycle contracts onto C4
    c7 = graph_from_pairs([(i, i % 7 + 1) for i in range(1, 8)])
    assert has_minor(c7, c4) is not None


def test_disconnected_host():
    two = graph_from_pairs(
        [(1, 2), (2, 3), (3, 1), (10, 11), (11, 12), (12, 10)])
    tri = graph_from_pairs([(1, 2), (2, 3), (3, 1)])
    model = has_minor(two, tri)
    assert model is not None and verify_minor_model(two, tri, model)


def test_disconnected_target_rejected():
    g = complete_graph(6)
    h = graph_from_pairs([(1, 2), (3, 4)])
    with pytest.raises(GraphError):
        has_minor(g, h)


def test_budget_exhaustion_is_loud():
    clear_minor_cache()  # a cached definitive failure would short-circuit
    with pytest.raises(SearchBudgetExceeded):
        has_minor(parse_graph("grid4x4"), complete_graph(6), budget=50)


def test_definitive_failures_are_cached():
    clear_minor_cache()
    assert has_minor(parse_graph("grid4x4"), complete_graph(6)) is None
    # the cached verdict now answers instantly, even under a tiny budget
    assert has_minor(parse_graph("grid4x4"), complete_graph(6), budget=1) is None


def test_verify_rejects_bad_models():
    g = complete_graph(7)
    h = complete_graph(6)
    good = has_minor(g, h)
    assert verify_minor_model(g, h, good)

    sets = dict(good.branch_sets)
    hv = sorted(sets)[0]
    other = sorted(sets)[1]
    overlapping = dict(sets)
    overlapping[hv] = sets[hv] | sets[other]
    bad = MinorModel(overlapping, dict(good.edge_map))
    assert not verify_minor_model(g, h, bad)
    assert any("overlap" in msg for msg in minor_model_errors(g, h, bad))

    # disconnected branch set: two nonadjacent grid vertices
    grid = parse_graph("grid3x3")
    tri = graph_from_pairs([(1, 2), (2, 3), (3, 1)])
    disconnected = MinorModel(
        {1: frozenset({1, 9}), 2: frozenset({2}), 3: frozenset({5})},
        {0: 0, 1: 1, 2: 2},
    )
    assert any("connected" in msg for msg in minor_model_errors(grid, tri, disconnected))


def test_returned_models_always_verify():
    rng = random.Random(11)
    targets = [complete_graph(4), complete_bipartite(3, 3),
               graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 1)])]
    for _ in range(40):
        g = random_graph(rng.randint(4, 9), 0.55, rng)
        for h in targets:
            try:
                model = has_minor(g, h)
            except SearchBudgetExceeded:
                continue
            if model is not None:
                assert verify_minor_model(g, h, model)


@pytest.mark.parametrize(
    "target",
    [
        complete_graph(4),
        complete_graph(5),
        complete_bipartite(3, 3),
        graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 1)], name="C4"),
    ],
    ids=["K4", "K5", "K33", "C4"],
)
def test_oracle_agreement_on_random_small_graphs(target):
    # unit-scale slice of the exhaustive acceptance check
    rng = random.Random(sum(target.degree_sequence()))
    for _ in range(60):
        g = random_graph(rng.randint(1, 6), rng.choice([0.3, 0.5, 0.8]), rng)
        assert (has_minor(g, target) is not None) == has_minor_oracle(g, target)


def test_oracle_agreement_on_7_vertex_hosts():
    # the degree-1/2 host reductions fire on most sparse 7-vertex graphs;
    # C4 and C5 exercise the min-degree gates that disable them
    targets = [
        complete_graph(4),
        complete_bipartite(3, 3),
        graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 1)]),
        graph_from_pairs([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),
    ]
    rng = random.Random(618)
    done = 0
    while done < 30:
        n = rng.randint(5, 7)
        g = random_graph(n, rng.choice([0.3, 0.45]), rng)
        if g.m > 10:
            continue
        done += 1
        for h in targets:
            assert (has_minor(g, h) is not None) == has_minor_oracle(g, h)


def test_oracle_agreement_exhaustive_on_5_vertices():
    target = complete_graph(4)
    all_pairs = list(combinations(range(1, 6), 2))
    for bits in range(1 << len(all_pairs)):
        pairs = [p for i, p in enumerate(all_pairs) if bits >> i & 1]
        g = graph_from_pairs(pairs, vertices=range(1, 6))
        assert (has_minor(g, target) is not None) == has_minor_oracle(g, target)


def test_classifier_table():
    expect = {
        "K6": "linked",
        "K3,3,1": "linked",
        "petersen": "linked",
        "K7": "linked",
        "K4,4": "linked",
        "K5": "unlinked",
        "K3,3": "unlinked",
        "grid4x4": "unlinked",
    }
    for name, want in expect.items():
        verdict = is_intrinsically_linked(parse_graph(name))
        assert verdict.verdict == want, name
        if want == "linked":
            assert verdict.witness_member is not None
            member = petersen_family().member_named(verdict.witness_member)
            assert verify_minor_model(parse_graph(name), member.graph,
                                      verdict.witness_model)


def test_petersen_witnessed_by_itself():
    verdict = is_intrinsically_linked(petersen_graph())
    assert verdict.witness_member == "petersen"


def test_classifier_on_disconnected_graph():
    g = graph_from_pairs(
        [(u, v) for u in range(1, 7) for v in range(u + 1, 7)]
        + [(10, 11), (11, 12)],
        vertices=list(range(1, 7)) + [10, 11, 12],
    )
    verdict = is_intrinsically_linked(g)
    assert verdict.verdict == "linked"
    assert verdict.witness_member == "K6"


def test_prefilter_consistency():
    # verdicts agree with prefilters disabled on graphs of <= 8 vertices
    rng = random.Random(21)
    graphs = [parse_graph("K6"), parse_graph("K3,3,1"), parse_graph("K3,3"),
              parse_graph("K5"), delta_y(complete_graph(6), (1, 2, 3))]
    graphs += [random_graph(rng.randint(4, 8), 0.5, rng) for _ in range(20)]
    for g in graphs:
        fast = is_intrinsically_linked(g, prefilter=True).verdict
        slow = is_intrinsically_linked(g, prefilter=False).verdict
        assert fast == slow


def test_monotone_under_edge_addition():
    # a supergraph of a linked graph stays linked
    rng = random.Random(33)
    found = 0
    while found < 50:
        g = random_graph(rng.randint(7, 9), 0.7, rng)
        verdict = is_intrinsically_linked(g)
        if verdict.verdict != "linked":
            continue
        found += 1
        nonedges = [
            (u, v)
            for u in sorted(g.vertices)
            for v in sorted(g.vertices)
            if u < v and not g.has_edge(u, v)
        ]
        if not nonedges:
            continue
        u, v = nonedges[rng.randrange(len(nonedges))]
        assert is_intrinsically_linked(g.add_edge(u, v)).verdict == "linked"


def test_minors_of_unlinked_graphs_stay_unlinked():
    rng = random.Random(34)
    found = 0
    while found < 50:
        g = random_graph(rng.randint(6, 8), 0.5, rng)
        if is_intrinsically_linked(g).verdict != "unlinked":
            continue
        found += 1
        current = g
        for _ in range(10):
            if current.m == 0:
                break
            e = current.edges[rng.randrange(current.m)]
            current = (
                current.delete_edge(e.id)
                if rng.random() < 0.5 or e.is_loop
                else current.contract_edge(e.id)
            )
            assert is_intrinsically_linked(current).verdict == "unlinked"


def test_delta_y_preserves_linkedness():
    for member in petersen_family():
        tris = triangles(member.graph)
        if not tris:
            continue
        child = delta_y(member.graph, tris[0])
        assert is_intrinsically_linked(child).verdict == "linked"


def test_delta_y_preserves_linkedness_on_random_graphs():
    rng = random.Random(404)
    found = 0
    while found < 15:
        g = random_graph(rng.randint(7, 9), 0.65, rng)
        from linkless.moves import triangles as tri_list

        tris = tri_list(g)
        if not tris or is_intrinsically_linked(g).verdict != "linked":
            continue
        found += 1
        child = delta_y(g, tris[rng.randrange(len(tris))])
        assert is_intrinsically_linked(child).verdict == "linked"


def test_k6_is_minor_minimal():
    report = minor_minimality_report(complete_graph(6))
    assert report.minor_minimal is True
    assert len(report.children) == 30
    assert all(c.verdict == "unlinked" for c in report.children)


def test_k7_is_not_minor_minimal():
    report = minor_minimality_report(complete_graph(7))
    assert report.minor_minimal is False


def test_petersen_is_minor_minimal():
    report = minor_minimality_report(petersen_graph())
    assert report.minor_minimal is True


def test_minimality_requires_linked_input():
    with pytest.raises(GraphError):
        minor_minimality_report(complete_graph(5))
