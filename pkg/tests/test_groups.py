import numpy as np
import pytest

from divnc.errors import SizeGuardError, UsageError
from divnc.groups import (GroupSpec, absolute_length_table, build_group, coxeter_element,
                          find_conjugator, fixed_space_codim, reflections, sample_elements)

from oracles import cycle_count

ALL = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "I2(3)", "I2(4)", "I2(9)", "I2(12)", "H3"]


@pytest.mark.parametrize("label, order", [("A3", 24), ("I2(4)", 8), ("H3", 120), ("B4", 384), ("D4", 192)])
def test_orders(label, order):
    assert build_group(label).order == order


@pytest.mark.parametrize("label, count", [("A3", 6), ("B2", 4), ("I2(7)", 7), ("H3", 15), ("D4", 12), ("B3", 9)])
def test_reflection_counts(label, count):
    assert len(reflections(build_group(label))) == count


@pytest.mark.parametrize("label, h", [("A2", 3), ("B2", 4), ("H3", 10), ("D4", 6), ("A5", 6), ("I2(9)", 9)])
def test_coxeter_order(label, h):
    G = build_group(label)
    assert G.element_order(coxeter_element(G)) == h


@pytest.mark.parametrize("label", ALL)
def test_realization_invariants(label):
    G = build_group(label)
    e = G.identity
    idx = np.arange(G.order)
    assert (G.mul[e] == idx).all() and (G.mul[:, e] == idx).all()
    assert (G.mul[idx, G.inv] == e).all()
    for t in G.reflections:
        assert t != e and G.mul[t, t] == e
        assert fixed_space_codim(G, t) == 1
        assert {G.conjugate(t, g) for g in range(G.order)} <= G.reflections
    L = absolute_length_table(G)
    assert L[e] == 0 and L[G.coxeter] == G.rank
    assert all(L[t] == 1 for t in G.reflections)
    assert (G.length == G.length[G.inv]).all()


@pytest.mark.parametrize("label", ["A3", "B3", "H3", "I2(5)"])
def test_associativity_sampled(label):
    G = build_group(label)
    rng = np.random.default_rng(1)
    a, b, c = rng.integers(0, G.order, size=(3, 500))
    assert (G.mul[G.mul[a, b], c] == G.mul[a, G.mul[b, c]]).all()


def test_associativity_exhaustive_small():
    G = build_group("A3")
    a, b, c = np.meshgrid(*[np.arange(G.order)] * 3, indexing="ij")
    assert (G.mul[G.mul[a, b], c] == G.mul[a, G.mul[b, c]]).all()


def test_length_matches_cycle_count_in_symmetric_group():
    G = build_group("A4")
    for w, perm in enumerate(G.elements):
        assert G.length[w] == len(perm) - cycle_count(perm)


@pytest.mark.parametrize("label", ["A3", "B3", "D4", "H3", "I2(8)"])
def test_length_matches_fixed_space(label):
    G = build_group(label)
    for w in range(G.order):
        assert fixed_space_codim(G, w) == G.length[w]


def test_fixed_space_examples():
    G = build_group("A3")
    assert fixed_space_codim(G, G.identity) == 0
    assert fixed_space_codim(G, G.coxeter) == 3
    # s1 s2 s3 applied left to right: 1 -> 2 -> 3 -> 4, so c is the 4-cycle 1 -> 4 -> 3 -> 2 -> 1
    assert G.elements[G.coxeter] == (4, 1, 2, 3)
    assert G.length[G.coxeter] == 3


def test_left_to_right_convention():
    G = build_group("A2")
    s1, s2 = G.simple
    # apply (1 2) first, then (2 3): 1 -> 2 -> 3
    assert G.elements[G.product(s1, s2)] == (3, 1, 2)


@pytest.mark.parametrize("label", ["A3", "B3", "D4", "H3", "I2(6)"])
def test_reversed_coxeter_is_conjugate(label):
    G = build_group(label)
    c2 = G.reversed_coxeter()
    assert c2 != G.coxeter
    g = find_conjugator(G, G.coxeter, c2)
    assert g is not None and G.conjugate(G.coxeter, g) == c2


@pytest.mark.parametrize("label", ALL)
def test_serialization_roundtrip(label):
    import json

    G = build_group(label)
    for w in sample_elements(G, 50):
        obj = json.loads(json.dumps(G.serialize(w)))
        assert G.deserialize(obj) == w


def test_element_order_is_lexicographic():
    G = build_group("B2")
    assert list(G.elements) == sorted(G.elements)


def test_h3_serialization_shape():
    G = build_group("H3")
    mat = G.serialize(G.coxeter)
    assert len(mat) == 3 and all(len(row) == 3 and len(row[0]) == 2 for row in mat)


@pytest.mark.parametrize("label", ["A6", "B5", "D5", "I2(13)", "E6", "H4"])
def test_envelope(label):
    with pytest.raises(SizeGuardError):
        build_group(label)


def test_bad_element():
    with pytest.raises(UsageError):
        build_group("A2").deserialize([1, 1, 2])


def test_spec_label():
    assert GroupSpec("I2", 5).label == "I2(5)"
    assert GroupSpec("I2", 5).rank == 2
    assert GroupSpec.from_label("H3").rank == 3
