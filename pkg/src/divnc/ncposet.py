"""m-divisible noncrossing partitions as minimal factorizations of a Coxeter element.

An element is a tuple ``(w_0; w_1, ..., w_m)`` with ``w_0 w_1 ... w_m = c``
and absolute lengths summing to ``l_T(c)``. The order is
``pi <= sigma`` iff each ``u_i`` (``i >= 1``) of ``sigma`` lies below the
matching ``w_i`` of ``pi`` in absolute order; the rank is ``l_T(w_0)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ConsistencyError, SizeGuardError, UsageError
from .formulas import cat_int

DEFAULT_MAX_ELEMENTS = 200_000


@dataclass(frozen=True)
class NcTuple:
    parts: tuple
    group: object = field(compare=False, repr=False, default=None)

    @property
    def m(self):
        return len(self.parts) - 1

    @property
    def rank(self):
        return int(self.group.length[self.parts[0]])

    def serialize(self):
        return [self.group.serialize(w) for w in self.parts]


def below(G, delta, w):
    """True iff ``w`` lies on a T-geodesic from the identity to ``delta``."""
    L = G.length
    return bool(L[w] + L[G.mul[G.inv[w], delta]] == L[delta])


class _Intervals:
    """Memoized absolute-order intervals ``[e, delta]`` and minimal factorizations."""

    def __init__(self, G):
        self.G = G
        self._interval = {}
        self._fact = {}

    def interval(self, delta):
        if delta not in self._interval:
            G = self.G
            w = np.arange(G.order)
            ok = G.length[w] + G.length[G.mul[G.inv[w], delta]] == G.length[delta]
            self._interval[delta] = tuple(int(x) for x in np.nonzero(ok)[0])
        return self._interval[delta]

    def factorizations(self, delta, parts):
        """All minimal factorizations of ``delta`` into ``parts`` factors."""
        key = (delta, parts)
        if key not in self._fact:
            if parts == 1:
                out = [(delta,)]
            else:
                G = self.G
                out = []
                for w in self.interval(delta):
                    rest = int(G.mul[G.inv[w], delta])
                    out.extend((w,) + tail for tail in self.factorizations(rest, parts - 1))
            self._fact[key] = out
        return self._fact[key]


def _intervals(G):
    # cached per realization; with_coxeter() copies share tables so keep per-object
    cache = G.__dict__.get("_divnc_intervals")
    if cache is None:
        cache = _Intervals(G)
        object.__setattr__(G, "_divnc_intervals", cache)
    return cache


def enumerate_interval(G, delta):
    """All ``w`` with ``below(G, delta, w)``; for ``delta = c`` this is NC(W)."""
    return set(_intervals(G).interval(delta))


def predicted_size(G, m):
    return cat_int(G.degree_table, m)


def check_size(G, m, max_elements=DEFAULT_MAX_ELEMENTS):
    """Raise SizeGuardError if NC^(m)(W) would exceed ``max_elements``."""
    if m < 1:
        raise UsageError("m must be a positive integer")
    predicted = predicted_size(G, m)
    if predicted > max_elements:
        raise SizeGuardError(
            f"NC^({m})({G.label}) has {predicted} elements, above the limit {max_elements}",
            limit=max_elements, predicted=predicted)


def _sort_key(G, parts):
    return tuple(G.elements[w] for w in parts)


def enumerate_ncm(G, m, max_elements=DEFAULT_MAX_ELEMENTS):
    """All minimal factorizations of ``G.coxeter`` into ``m + 1`` parts, sorted."""
    check_size(G, m, max_elements)
    facts = _intervals(G).factorizations(G.coxeter, m + 1)
    facts = sorted(facts, key=lambda p: _sort_key(G, p))
    return [NcTuple(p, G) for p in facts]


def le(pi, sigma):
    """``pi <= sigma``: every ``u_i`` of sigma is below ``w_i`` of pi, for ``i >= 1``."""
    if pi.group is not sigma.group or len(pi.parts) != len(sigma.parts):
        raise UsageError("tuples belong to different posets")
    G = pi.group
    return all(below(G, w, u) for w, u in zip(pi.parts[1:], sigma.parts[1:]))


@dataclass(eq=False)
class DivisiblePoset:
    """NC^(m)(W) with its order relation stored as sorted up-sets.

    ``up[i]`` lists every ``j`` with ``elements[i] <= elements[j]`` (``i`` included).
    """

    group: object
    m: int
    elements: list
    up: list
    rank: np.ndarray
    max_index: int
    min_indices: tuple

    def __len__(self):
        return len(self.elements)

    @property
    def n(self):
        return self.group.rank

    def leq(self, i, j):
        return j in self._up_sets[i]

    @cached_property
    def _up_sets(self):
        return [frozenset(u) for u in self.up]

    @cached_property
    def down(self):
        down = [[] for _ in self.elements]
        for i, ups in enumerate(self.up):
            for j in ups:
                down[j].append(i)
        return down

    def rank_sizes(self):
        return [int(x) for x in np.bincount(self.rank, minlength=self.n + 1)]

    def covers(self):
        """Cover pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
        out = []
        for i, ups in enumerate(self.up):
            strict = [j for j in ups if j != i]
            above = set()
            for j in strict:
                above.update(k for k in self.up[j] if k != j)
            out.extend((i, j) for j in strict if j not in above)
        return out

    def relation_matrix(self):
        n = len(self.elements)
        mat = np.zeros((n, n), dtype=bool)
        for i, ups in enumerate(self.up):
            mat[i, ups] = True
        return mat


def _up_sets(G, elements, index_of):
    """Up-set of each tuple, generated from products of intervals below its parts."""
    iv = _intervals(G)
    c = G.coxeter
    up = []
    for pi in elements:
        found = []
        for us in itertools.product(*(iv.interval(w) for w in pi.parts[1:])):
            prod_ = G.identity
            for u in us:
                prod_ = G.mul[prod_, u]
            u0 = int(G.mul[c, G.inv[prod_]])
            j = index_of.get((u0,) + us)
            if j is not None:
                found.append(j)
        up.append(sorted(found))
    return up


def build_poset(G, m, max_elements=DEFAULT_MAX_ELEMENTS, elements=None, up=None, check=True):
    """Enumerate NC^(m)(W), build the order, and verify the poset invariants."""
    if elements is None:
        elements = enumerate_ncm(G, m, max_elements)
    index_of = {pi.parts: i for i, pi in enumerate(elements)}
    if up is None:
        up = _up_sets(G, elements, index_of)
    rank = np.array([int(G.length[pi.parts[0]]) for pi in elements], dtype=np.int64)
    top = index_of.get((G.coxeter,) + (G.identity,) * m)
    mins = tuple(int(i) for i in np.nonzero(rank == 0)[0])
    P = DivisiblePoset(G, m, elements, up, rank, top, mins)
    if check:
        check_poset(P)
    return P


def check_poset(P):
    """Raise ConsistencyError unless every poset invariant holds."""
    G, m = P.group, P.m
    n = G.rank

    def fail(msg):
        raise ConsistencyError(f"NC^({m})({G.label}): {msg}")

    if len(P) != predicted_size(G, m):
        fail(f"{len(P)} elements, expected {predicted_size(G, m)}")
    if len({pi.parts for pi in P.elements}) != len(P):
        fail("duplicate tuples")
    for pi in P.elements:
        if G.product(*pi.parts) != G.coxeter:
            fail(f"{pi.parts} does not multiply to c")
        if sum(int(G.length[w]) for w in pi.parts) != n:
            fail(f"{pi.parts} is not a minimal factorization")
    ups = P._up_sets
    for i, up in enumerate(P.up):
        if i not in ups[i]:
            fail("relation not reflexive")
        for j in up:
            if j != i:
                if i in ups[j]:
                    fail("relation not antisymmetric")
                if P.rank[j] <= P.rank[i]:
                    fail("rank not strictly monotone")
            if not ups[j] <= ups[i]:
                fail("relation not transitive")
    for i, j in P.covers():
        if P.rank[j] != P.rank[i] + 1:
            fail("poset is not graded")
    if P.max_index is None or len(P.up[P.max_index]) != 1:
        fail("(c; e, ..., e) is missing or not maximal")
    if any(P.max_index not in ups[i] for i in range(len(P))):
        fail("maximum is not above everything")
    if len(P.min_indices) != cat_int(G.degree_table, m - 1):
        fail(f"{len(P.min_indices)} minimal elements, expected Cat^({m - 1})")
    if any(P.down[i] != [i] for i in P.min_indices):
        fail("a rank-0 element is not minimal")
    if any(len(P.down[i]) == 1 and P.rank[i] != 0 for i in range(len(P))):
        fail("a minimal element has positive rank")


@dataclass(eq=False)
class TruncatedPoset:
    """Restriction of a DivisiblePoset to ranks ``1..n-1``.

    ``indices`` are positions in the parent poset (in its element order);
    ``up`` holds strict up-sets as local positions.
    """

    parent: DivisiblePoset
    indices: list
    up: list
    rank: np.ndarray

    def __len__(self):
        return len(self.indices)

    @property
    def n(self):
        return self.parent.n

    def comparable_pairs(self):
        return sum(len(u) for u in self.up)


def truncate(P):
    """Remove the maximum and every minimal element."""
    keep = [i for i in range(len(P)) if 0 < P.rank[i] < P.n]
    local = {g: k for k, g in enumerate(keep)}
    up = [[local[j] for j in P.up[i] if j != i and j in local] for i in keep]
    rank = P.rank[keep] if keep else np.zeros(0, dtype=np.int64)
    return TruncatedPoset(P, keep, up, rank)
