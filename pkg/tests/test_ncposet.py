import itertools

import pytest

from divnc.errors import ConsistencyError, SizeGuardError, UsageError
from divnc.groups import build_group
from divnc.ncposet import (NcTuple, below, build_poset, check_poset, enumerate_interval,
                           enumerate_ncm, le, truncate)

from oracles import divisible_nc_block_counts, fuss_narayana, set_partitions, is_noncrossing


def test_below_examples():
    G = build_group("A2")
    c, e = G.coxeter, G.identity
    assert below(G, c, e)
    assert below(G, c, c)
    other = G.inv[c]  # the other 3-cycle
    assert G.length[other] == 2
    assert not below(G, c, other)


@pytest.mark.parametrize("label, points", [("A2", 3), ("A3", 4), ("A4", 5)])
def test_interval_is_noncrossing_partitions(label, points):
    G = build_group(label)
    brute = sum(1 for p in set_partitions(list(range(1, points + 1))) if is_noncrossing(p))
    assert len(enumerate_interval(G, G.coxeter)) == brute
    assert brute == {3: 5, 4: 14, 5: 42}[points]


def test_interval_of_reflection():
    G = build_group("B3")
    for t in G.reflections:
        assert enumerate_interval(G, t) == {G.identity, t}


@pytest.mark.parametrize("label, m, size", [("A2", 1, 5), ("A2", 2, 12), ("B2", 1, 6), ("A3", 2, 55), ("H3", 1, 32)])
def test_enumerate_ncm_counts(label, m, size):
    G = build_group(label)
    tuples = enumerate_ncm(G, m)
    assert len(tuples) == size
    assert len({t.parts for t in tuples}) == size
    for t in tuples:
        assert len(t.parts) == m + 1
        assert G.product(*t.parts) == G.coxeter
        assert sum(G.length[w] for w in t.parts) == G.rank


def test_enumerate_ncm_brute_force_a2_m2():
    # all pairs (w1, w2), w0 = c (w1 w2)^-1
    G = build_group("A2")
    brute = set()
    for w1, w2 in itertools.product(range(G.order), repeat=2):
        w0 = G.product(G.coxeter, G.inv[G.product(w1, w2)])
        if G.length[w0] + G.length[w1] + G.length[w2] == G.rank:
            brute.add((w0, w1, w2))
    assert {t.parts for t in enumerate_ncm(G, 2)} == brute


@pytest.mark.parametrize("points, m", [(2, 1), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)])
def test_type_a_matches_divisible_set_partitions(poset, points, m):
    """Rank sizes of NC^(m)(A_{n-1}) against m-divisible noncrossing partitions of [mn]."""
    P = poset(f"A{points - 1}", m)
    counts = divisible_nc_block_counts(points, m)
    by_rank = [counts.get(points - r, 0) for r in range(points)]
    assert P.rank_sizes() == by_rank
    assert by_rank == [fuss_narayana(points, m, points - r) for r in range(points)]


def test_le_examples(poset):
    P = poset("A2", 1)
    top = P.elements[P.max_index]
    G = P.group
    assert top.parts == (G.coxeter, G.identity)
    for pi in P.elements:
        assert le(pi, top)
        assert le(pi, pi)
    pairs = sum(le(a, b) for a in P.elements for b in P.elements)
    assert pairs == 12


@pytest.mark.parametrize("label, m", [("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2), ("A3", 1), ("I2(5)", 2), ("A3", 2)])
def test_relation_matches_le(poset, label, m):
    P = poset(label, m)
    for i, a in enumerate(P.elements):
        for j, b in enumerate(P.elements):
            assert P.leq(i, j) == le(a, b)


@pytest.mark.parametrize("label, m", [("A3", 2), ("B3", 1), ("H3", 1), ("D4", 1)])
def test_order_properties(poset, label, m):
    P = poset(label, m)
    G = P.group
    for i, ups in enumerate(P.up):
        w0 = P.elements[i].parts[0]
        for j in ups:
            u0 = P.elements[j].parts[0]
            # the zeroth parts are ordered too, although le never looks at them
            assert G.length[w0] + G.length[G.mul[G.inv[w0], u0]] == G.length[u0]
            assert P.rank[i] < P.rank[j] or i == j


@pytest.mark.parametrize("label, m, sizes", [
    ("A2", 2, [5, 6, 1]),
    ("A3", 1, [1, 6, 6, 1]),
    ("A1", 1, [1, 1]),
    ("A1", 3, [3, 1]),
    ("A1", 5, [5, 1]),
])
def test_rank_sizes(poset, label, m, sizes):
    P = poset(label, m)
    assert P.rank_sizes() == sizes
    assert len(P.min_indices) == sizes[0]


@pytest.mark.parametrize("label, m, size, pairs", [("A2", 1, 3, 0), ("A3", 1, 12, 16), ("A1", 1, 0, 0)])
def test_truncate(poset, label, m, size, pairs):
    TP = truncate(poset(label, m))
    assert len(TP) == size
    assert TP.comparable_pairs() == pairs
    assert set(TP.rank.tolist()) <= set(range(1, TP.n))


def test_truncate_preserves_order(poset):
    P = poset("B3", 1)
    TP = truncate(P)
    for a, i in enumerate(TP.indices):
        for b, j in enumerate(TP.indices):
            assert (b in TP.up[a]) == (P.leq(i, j) and i != j)


@pytest.mark.parametrize("label", ["A3", "B3", "I2(6)", "H3"])
def test_m1_projection_onto_interval(poset, label):
    P = poset(label, 1)
    G = P.group
    proj = [pi.parts[0] for pi in P.elements]
    assert sorted(proj) == sorted(enumerate_interval(G, G.coxeter))
    for i, a in enumerate(proj):
        for j, b in enumerate(proj):
            assert P.leq(i, j) == below(G, b, a)


@pytest.mark.parametrize("label", ["A3", "B3"])
@pytest.mark.parametrize("m", [1, 2])
def test_coxeter_choice_invariance(poset, label, m):
    from divnc.chains import f_vector

    P1 = poset(label, m)
    G = P1.group
    P2 = build_poset(G.with_coxeter(G.reversed_coxeter()), m)
    assert P1.rank_sizes() == P2.rank_sizes()
    assert f_vector(truncate(P1)) == f_vector(truncate(P2))


def test_le_rejects_mismatched_tuples(poset):
    a = poset("A2", 1).elements[0]
    b = poset("A2", 2).elements[0]
    with pytest.raises(UsageError):
        le(a, b)
    with pytest.raises(UsageError):
        le(a, NcTuple(a.parts, build_group("B2")))


def test_size_guard():
    with pytest.raises(SizeGuardError, match="1210"):
        enumerate_ncm(build_group("D4"), 3, max_elements=1000)
    with pytest.raises(UsageError):
        enumerate_ncm(build_group("A2"), 0)


def test_check_poset_catches_corruption():
    P = build_poset(build_group("A3"), 1)
    P.up[0] = [0]  # drop relations of a minimal element
    P.__dict__.pop("_up_sets", None)
    with pytest.raises(ConsistencyError):
        check_poset(P)


def test_elements_sorted_deterministically(poset):
    P = poset("B2", 2)
    keys = [tuple(P.group.elements[w] for w in pi.parts) for pi in P.elements]
    assert keys == sorted(keys)
