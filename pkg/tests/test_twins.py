from idcodes.graph import complete, path, star
from idcodes.solver import is_identifiable
from idcodes.twins import reduced_partition, twin_classes

from conftest import closed_balls


def _lists(classes):
    return [c.to_list() for c in classes]


def test_p3():
    P = twin_classes(path(3))
    assert _lists(P.w_classes) == [[1]] and _lists(P.u_classes) == []
    assert _lists(P.v_classes) == [[0, 2]]
    assert (P.s, P.t) == (0, 1)
    red = reduced_partition(P)
    assert red.base.to_list() == [0, 1]
    assert _lists(red.v_rest) == [[2]]


def test_k3():
    P = twin_classes(complete(3))
    assert _lists(P.u_classes) == [[0, 1, 2]]
    assert (P.s, P.t) == (2, 0)
    red = reduced_partition(P)
    assert red.base.to_list() == [0]
    assert _lists(red.u_rest) == [[1, 2]]


def test_p4_all_singletons():
    P = twin_classes(path(4))
    assert _lists(P.w_classes) == [[0], [1], [2], [3]]
    assert (P.s, P.t) == (0, 0)


def test_star():
    P = twin_classes(star(3))
    red = reduced_partition(P)
    assert red.base.to_list() == [0, 1]
    assert _lists(red.v_rest) == [[2, 3]]
    assert P.t == 2
    assert P.v_representatives == (1,)


def test_isolated_vertices_form_open_class():
    from idcodes.graph import from_edge_list

    P = twin_classes(from_edge_list(4, [(0, 1)]))
    assert _lists(P.v_classes) == [[2, 3]]


def test_partition_invariants(atlas7):
    for G in atlas7:
        P = twin_classes(G)
        balls = closed_balls(G)
        nbrs = [b - {v} for v, b in enumerate(balls)]
        everything = P.w_classes + P.u_classes + P.v_classes
        seen = 0
        for c in everything:
            assert not seen & c.bits
            seen |= c.bits
        assert seen == G.full_mask
        assert G.n == P.p + sum(map(len, P.u_classes)) + sum(map(len, P.v_classes))
        assert P.s == sum(map(len, P.u_classes)) - P.k
        assert P.t == sum(map(len, P.v_classes)) - P.l
        for c in P.u_classes:
            members = c.to_list()
            assert len(members) >= 2
            assert all(G.masks[a] >> b & 1 for a in members for b in members if a != b)
        for c in P.v_classes:
            members = c.to_list()
            assert len(members) >= 2
            assert not any(G.masks[a] >> b & 1 for a in members for b in members)
        # classes agree with direct pairwise comparison (so the relation is transitive here)
        cls_of = {v: i for i, c in enumerate(everything) for v in c}
        for x in range(G.n):
            for y in range(x + 1, G.n):
                equiv = balls[x] == balls[y] or nbrs[x] == nbrs[y]
                assert equiv == (cls_of[x] == cls_of[y])
        assert is_identifiable(G) == (P.k == 0)
        if not P.u_classes and not P.v_classes:
            assert P.s == P.t == 0
        red = reduced_partition(P)
        parts = [red.base, *red.u_rest, *red.v_rest]
        assert sum(map(len, parts)) == G.n
        assert red.base.bits | sum(p.bits for p in parts[1:]) == G.full_mask
