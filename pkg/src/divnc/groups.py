"""Concrete finite real reflection groups.

Each group is realized once as a table: elements are small integers
indexing a sorted list of normal forms, and multiplication, inversion and
absolute length are array lookups. Products compose left to right:
``G.mul[a, b]`` is the element "apply ``a`` first, then ``b``".

Normal forms:

* ``A`` -- permutations of ``1..n+1`` as one-line words (``w[i-1]`` is the image of ``i``);
* ``B``, ``D`` -- signed permutations of ``1..n`` as signed one-line words;
* ``I2(k)`` -- pairs ``(r, f)`` for the map ``x -> (-1)**f * x + r`` on ``Z/k``;
* ``H3`` -- 3x3 matrices over Q(sqrt5) in the simple-root basis, entries as ``(a, b)``.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import SizeGuardError, UsageError
from .fields import Cyclotomic, QSqrt5, exact_rank
from .formulas import DegreeTable, canonical_label, degree_table, parse_label

CONVENTION_TAG = "left-to-right"

# desk-scale envelope: family -> (min, max) of the rank parameter
ENVELOPE = {"A": (1, 5), "B": (2, 4), "D": (4, 4), "I2": (3, 12), "H3": (3, 3)}


@dataclass(frozen=True)
class GroupSpec:
    """Family and parameter. For ``I2`` the parameter is ``k``, not the rank."""

    family: str
    param: int

    @classmethod
    def from_label(cls, label):
        family, params = parse_label(label)
        if family == "H3":
            return cls("H3", 3)
        if family not in ("A", "B", "D", "I2"):
            raise SizeGuardError(
                f"group {label!r} has no concrete realization; realized families are "
                "A (rank <= 5), B (rank <= 4), D4, I2(3..12), H3")
        return cls(family, params[0])

    @property
    def label(self):
        return canonical_label(self.family, (self.param,))

    @property
    def rank(self):
        return 2 if self.family == "I2" else self.param

    def check_envelope(self):
        lo, hi = ENVELOPE[self.family]
        if not lo <= self.param <= hi:
            name = "k" if self.family == "I2" else "rank"
            raise SizeGuardError(
                f"{self.label} is outside the supported range: {self.family} needs "
                f"{lo} <= {name} <= {hi}", limit=(lo, hi))


# --- models ---------------------------------------------------------------
# A model knows normal forms: identity, simple generators, composition,
# serialization and a linear action (exact matrix).

class PermutationModel:
    def __init__(self, n):
        self.n = n
        self.size = n + 1

    def identity(self):
        return tuple(range(1, self.size + 1))

    def generators(self):
        gens = []
        for i in range(self.n):
            w = list(self.identity())
            w[i], w[i + 1] = w[i + 1], w[i]
            gens.append(tuple(w))
        return gens

    def compose(self, a, b):
        return tuple(b[x - 1] for x in a)

    def serialize(self, w):
        return list(w)

    def deserialize(self, obj):
        return tuple(int(x) for x in obj)

    def matrix(self, w):
        mat = [[0] * self.size for _ in range(self.size)]
        for i, x in enumerate(w):
            mat[x - 1][i] = 1
        return mat


class SignedPermutationModel(PermutationModel):
    def __init__(self, n, even=False):
        self.n = n
        self.size = n
        self.even = even

    def identity(self):
        return tuple(range(1, self.n + 1))

    def generators(self):
        first = list(self.identity())
        if self.even:
            first[0], first[1] = -2, -1
        else:
            first[0] = -1
        gens = [tuple(first)]
        for i in range(self.n - 1):
            w = list(self.identity())
            w[i], w[i + 1] = w[i + 1], w[i]
            gens.append(tuple(w))
        return gens

    def compose(self, a, b):
        return tuple(b[x - 1] if x > 0 else -b[-x - 1] for x in a)

    def matrix(self, w):
        mat = [[0] * self.n for _ in range(self.n)]
        for i, x in enumerate(w):
            mat[abs(x) - 1][i] = 1 if x > 0 else -1
        return mat


class DihedralModel:
    def __init__(self, k):
        self.k = k
        self.size = 2

    def identity(self):
        return (0, 0)

    def generators(self):
        return [(0, 1), (1, 1)]

    def compose(self, a, b):
        ra, fa = a
        rb, fb = b
        r = (-ra if fb else ra) + rb
        return (r % self.k, fa ^ fb)

    def serialize(self, w):
        return list(w)

    def deserialize(self, obj):
        return (int(obj[0]) % self.k, int(obj[1]))

    def matrix(self, w):
        # complexified reflection representation: rotations diagonal, flips swap
        r, f = w
        zero = Cyclotomic.const(self.k, 0)
        z, zinv = Cyclotomic.root_power(self.k, r), Cyclotomic.root_power(self.k, -r)
        if f:
            return [[zero, z], [zinv, zero]]
        return [[z, zero], [zero, zinv]]


class H3Model:
    size = 3

    def __init__(self):
        golden = QSqrt5(Fraction(1, 2), Fraction(1, 2))  # 2 cos(pi/5)
        gram2 = [[QSqrt5(2), -golden, QSqrt5(0)],
                 [-golden, QSqrt5(2), QSqrt5(-1)],
                 [QSqrt5(0), QSqrt5(-1), QSqrt5(2)]]
        self._gens = []
        for i in range(3):
            mat = [[QSqrt5(int(r == c)) for c in range(3)] for r in range(3)]
            for c in range(3):
                mat[i][c] = mat[i][c] - gram2[i][c]
            self._gens.append(self._key(mat))

    @staticmethod
    def _key(mat):
        return tuple(x.key() for row in mat for x in row)

    @staticmethod
    def _mat(key):
        vals = [QSqrt5(a, b) for a, b in key]
        return [vals[0:3], vals[3:6], vals[6:9]]

    def identity(self):
        return self._key([[QSqrt5(int(r == c)) for c in range(3)] for r in range(3)])

    def generators(self):
        return list(self._gens)

    def compose(self, a, b):
        ma, mb = self._mat(a), self._mat(b)
        prod_ = [[sum((mb[r][t] * ma[t][c] for t in range(3)), QSqrt5(0)) for c in range(3)]
                 for r in range(3)]
        return self._key(prod_)

    def serialize(self, w):
        return [[[str(a), str(b)] for a, b in w[3 * r:3 * r + 3]] for r in range(3)]

    def deserialize(self, obj):
        return tuple((Fraction(a), Fraction(b)) for row in obj for a, b in row)

    def matrix(self, w):
        return self._mat(w)


def _model(spec):
    if spec.family == "A":
        return PermutationModel(spec.param)
    if spec.family == "B":
        return SignedPermutationModel(spec.param)
    if spec.family == "D":
        return SignedPermutationModel(spec.param, even=True)
    if spec.family == "I2":
        return DihedralModel(spec.param)
    return H3Model()


# --- realization ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupRealization:
    spec: GroupSpec
    model: object = dataclasses.field(repr=False)
    elements: tuple = dataclasses.field(repr=False)
    index: dict = dataclasses.field(repr=False)
    mul: np.ndarray = dataclasses.field(repr=False)
    inv: np.ndarray = dataclasses.field(repr=False)
    identity: int
    simple: tuple
    reflections: frozenset = dataclasses.field(repr=False)
    coxeter: int
    length: np.ndarray = dataclasses.field(repr=False)
    degree_table: DegreeTable = dataclasses.field(repr=False)

    @property
    def label(self):
        return self.spec.label

    @property
    def rank(self):
        return self.spec.rank

    @property
    def order(self):
        return len(self.elements)

    def product(self, *ws):
        """Left-to-right product of element indices."""
        out = self.identity
        for w in ws:
            out = int(self.mul[out, w])
        return out

    def conjugate(self, w, g):
        """``g^-1 w g``."""
        return int(self.mul[self.mul[self.inv[g], w], g])

    def element_order(self, w):
        k, x = 1, w
        while x != self.identity:
            x = int(self.mul[x, w])
            k += 1
        return k

    def serialize(self, w):
        return self.model.serialize(self.elements[w])

    def deserialize(self, obj):
        try:
            return self.index[self.model.deserialize(obj)]
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{obj!r} is not an element of {self.label}") from exc

    def matrix(self, w):
        return self.model.matrix(self.elements[w])

    def with_coxeter(self, c):
        """Same group with a different Coxeter element."""
        if self.length[c] != self.rank:
            raise UsageError("a Coxeter element must have absolute length equal to the rank")
        return dataclasses.replace(self, coxeter=int(c))

    def reversed_coxeter(self):
        """Product of the simple generators in reverse index order."""
        return self.product(*reversed(self.simple))


def _closure(model):
    gens = model.generators()
    ident = model.identity()
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = model.compose(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


@lru_cache(maxsize=None)
def build_group(spec):
    """Realize a group: element closure, tables, reflections, lengths, Coxeter element."""
    if isinstance(spec, str):
        spec = GroupSpec.from_label(spec)
    spec.check_envelope()
    model = _model(spec)
    elements = tuple(_closure(model))
    index = {x: i for i, x in enumerate(elements)}
    size = len(elements)
    gens = [index[s] for s in model.generators()]
    ident = index[model.identity()]

    right = np.empty((size, len(gens)), dtype=np.int32)
    for i, x in enumerate(elements):
        for j, s in enumerate(model.generators()):
            right[i, j] = index[model.compose(x, s)]

    # fill columns of the multiplication table along a BFS tree of words
    mul = np.full((size, size), -1, dtype=np.int32)
    mul[:, ident] = np.arange(size)
    queue = deque([ident])
    while queue:
        y = queue.popleft()
        for j in range(len(gens)):
            z = right[y, j]
            if mul[0, z] < 0:
                mul[:, z] = right[mul[:, y], j]
                queue.append(z)
    inv = np.argmax(mul == ident, axis=1).astype(np.int32)

    refl = set()
    for s in gens:
        refl.update(int(x) for x in mul[mul[inv, s], np.arange(size)])

    length = np.full(size, -1, dtype=np.int64)
    length[ident] = 0
    frontier = np.array([ident])
    tlist = np.array(sorted(refl))
    dist = 0
    while frontier.size:
        dist += 1
        nxt = np.unique(mul[np.ix_(frontier, tlist)])
        nxt = nxt[length[nxt] < 0]
        length[nxt] = dist
        frontier = nxt

    coxeter = ident
    for s in gens:
        coxeter = int(mul[coxeter, s])

    G = GroupRealization(
        spec=spec, model=model, elements=elements, index=index, mul=mul, inv=inv,
        identity=ident, simple=tuple(gens), reflections=frozenset(refl),
        coxeter=coxeter, length=length, degree_table=degree_table(spec.label))
    _check_invariants(G)
    return G


def _check_invariants(G):
    from .errors import ConsistencyError

    if G.order != G.degree_table.order:
        raise ConsistencyError(f"{G.label}: |W| = {G.order}, degrees give {G.degree_table.order}")
    for t in G.reflections:
        if t == G.identity or G.mul[t, t] != G.identity:
            raise ConsistencyError(f"{G.label}: reflection {t} is not an involution")
    if G.length[G.coxeter] != G.rank or (G.length < 0).any():
        raise ConsistencyError(f"{G.label}: bad absolute length table")


def reflections(G):
    """The set T of all reflections (conjugates of the simple generators)."""
    return G.reflections


def absolute_length_table(G):
    """Map element -> absolute length, by BFS in the Cayley graph of (W, T)."""
    return {w: int(G.length[w]) for w in range(G.order)}


def coxeter_element(G):
    return G.coxeter


def fixed_space_codim(G, w):
    """Codimension of the fixed space of ``w``: exact rank of ``M_w - I``."""
    mat = G.matrix(w)
    size = len(mat)
    diff = [[mat[r][c] - (1 if r == c else 0) for c in range(size)] for r in range(size)]
    return exact_rank(diff)


def find_conjugator(G, c1, c2):
    """Some ``g`` with ``g^-1 c1 g == c2``, or None."""
    g = np.arange(G.order)
    hits = np.nonzero(G.mul[G.mul[G.inv[g], c1], g] == c2)[0]
    return int(hits[0]) if hits.size else None


def sample_elements(G, count, seed=0):
    rng = np.random.default_rng(seed)
    return [int(x) for x in rng.integers(0, G.order, size=count)]
