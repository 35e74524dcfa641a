"""Reduced integer homology of the order complex of a truncated poset."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import SizeGuardError

DEFAULT_MAX_SIMPLICES = 200_000


@dataclass
class SimplicialComplexData:
    """Simplices per dimension as sorted vertex tuples; vertices are ``0..n_vertices-1``."""

    simplices_by_dim: list
    n_vertices: int

    @property
    def dimension(self):
        return len(self.simplices_by_dim) - 1

    def f_vector(self):
        return [len(s) for s in self.simplices_by_dim]


@dataclass
class HomologyResult:
    """Reduced Betti numbers and torsion, keyed by dimension (``-1`` for the empty complex)."""

    betti: dict
    torsion: dict = field(default_factory=dict)

    def euler(self):
        return sum((-1) ** d * b for d, b in self.betti.items())

    def nonzero_betti(self):
        return {d: b for d, b in self.betti.items() if b}

    def to_dict(self):
        return {"betti": {str(d): b for d, b in sorted(self.betti.items())},
                "torsion": {str(d): t for d, t in sorted(self.torsion.items())}}


def order_complex(TP, max_simplices=DEFAULT_MAX_SIMPLICES):
    """All chains of the truncated poset, as simplices on its local vertex order."""
    by_dim = []
    total = 0
    current = [(i,) for i in range(len(TP))]
    while current:
        total += len(current)
        if total > max_simplices:
            raise SizeGuardError(
                f"order complex exceeds {max_simplices} simplices", limit=max_simplices)
        # chains run upward in rank; stored as sorted vertex tuples for orientation
        by_dim.append(sorted(tuple(sorted(s)) for s in current))
        current = [chain + (j,) for chain in current for j in TP.up[chain[-1]]]
    return SimplicialComplexData(by_dim, len(TP))


def boundary_matrices(K):
    """Sparse boundary maps. Entry ``d - 1`` maps d-simplices to (d-1)-simplices.

    Each map is a dict ``{column: {row: value}}`` with shape attributes
    available through ``boundary_shapes``.
    """
    out = []
    for d in range(1, len(K.simplices_by_dim)):
        faces = {s: i for i, s in enumerate(K.simplices_by_dim[d - 1])}
        cols = {}
        for c, s in enumerate(K.simplices_by_dim[d]):
            cols[c] = {faces[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))}
        out.append(cols)
    return out


def boundary_shapes(K):
    sizes = K.f_vector()
    return [(sizes[d - 1], sizes[d]) for d in range(1, len(sizes))]


def to_dense(cols, shape):
    rows, ncols = shape
    mat = [[0] * ncols for _ in range(rows)]
    for c, entries in cols.items():
        for r, v in entries.items():
            mat[r][c] = v
    return mat


def smith_diagonal(cols):
    """Nonzero diagonal of a Smith normal form of a sparse integer matrix.

    Pivots are chosen with minimal absolute value among the candidate
    entries. Returns the invariant factors (each divides the next).
    """
    rows = {}
    for c, entries in cols.items():
        for r, v in entries.items():
            if v:
                rows.setdefault(r, {})[c] = v
    colidx = {}
    for r, entries in rows.items():
        for c in entries:
            colidx.setdefault(c, set()).add(r)

    def set_entry(r, c, v):
        if v:
            rows.setdefault(r, {})[c] = v
            colidx.setdefault(c, set()).add(r)
        else:
            rows.get(r, {}).pop(c, None)
            if c in colidx:
                colidx[c].discard(r)

    def drop(r, c):
        for cc in list(rows.pop(r, {})):
            colidx[cc].discard(r)
        for rr in list(colidx.pop(c, set())):
            rows[rr].pop(c, None)

    diagonal = []
    while True:
        best = None
        for r, entries in rows.items():
            for c, v in entries.items():
                if best is None or abs(v) < best[0]:
                    best = (abs(v), r, c)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pr, pc = best
        while True:
            p = rows[pr][pc]
            changed = False
            # clear the pivot column with row operations
            for r in list(colidx[pc]):
                if r == pr:
                    continue
                q = rows[r][pc] // p
                for c, v in list(rows[pr].items()):
                    set_entry(r, c, rows.get(r, {}).get(c, 0) - q * v)
                if rows.get(r, {}).get(pc, 0):
                    changed = True
            # clear the pivot row with column operations
            for c in list(rows[pr]):
                if c == pc:
                    continue
                q = rows[pr][c] // p
                for r in list(colidx[pc]):
                    set_entry(r, c, rows.get(r, {}).get(c, 0) - q * rows[r][pc])
                if rows[pr].get(c, 0):
                    changed = True
            if not changed:
                break
            # a remainder survived: move the pivot to the smallest leftover entry
            cand = [(abs(v), r, pc) for r in colidx[pc] for v in [rows[r][pc]]]
            cand += [(abs(v), pr, c) for c, v in rows[pr].items()]
            _, pr, pc = min(cand)
        diagonal.append(abs(rows[pr][pc]))
        drop(pr, pc)
    return _invariant_factors(diagonal)


def _invariant_factors(diag):
    diag = sorted(d for d in diag if d)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
        diag.sort()
    return diag


def homology(K):
    """Reduced integer homology from Smith normal forms of the boundary maps."""
    sizes = K.f_vector()
    if not sizes:
        return HomologyResult({-1: 1}, {})
    # augmentation C_0 -> Z has rank 1 on a nonempty complex
    ranks = [1]
    factors = [[1]]
    for cols in boundary_matrices(K):
        diag = smith_diagonal(cols)
        ranks.append(len(diag))
        factors.append(diag)
    ranks.append(0)
    factors.append([])
    betti = {-1: 0}
    torsion = {}
    for d, size in enumerate(sizes):
        betti[d] = size - ranks[d] - ranks[d + 1]
        tors = [f for f in factors[d + 1] if f > 1]
        if tors:
            torsion[d] = tors
    return HomologyResult(betti, torsion)


def write_triplets(cols, path):
    """Write a sparse matrix as ``row col value`` lines."""
    with open(path, "w") as fh:
        for c in sorted(cols):
            for r, v in sorted(cols[c].items()):
                fh.write(f"{r} {c} {v}\n")
