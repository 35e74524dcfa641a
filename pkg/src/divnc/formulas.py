"""Degree tables and exact Fuss-Catalan arithmetic.

``cat(D, m)`` is the product of ``(m*h + d_i) / d_i`` over the degrees and is
evaluated for every integer ``m``, negative ones included. ``cat_plus`` is
the positive variant ``prod (m*h + d_i - 2) / d_i``.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial, prod

from .errors import ConsistencyError, UsageError


@dataclass(frozen=True)
class DegreeTable:
    label: str
    degrees: tuple
    real: bool = True
    h: int = field(default=0)

    def __post_init__(self):
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise UsageError(f"invalid degrees {self.degrees!r}")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        if not self.h:
            object.__setattr__(self, "h", max(self.degrees))

    @property
    def n(self):
        return len(self.degrees)

    @property
    def order(self):
        return prod(self.degrees)

    @property
    def codegrees(self):
        """``h - d_i`` in increasing order (the codegrees of a well-generated group)."""
        return tuple(sorted(self.h - d for d in self.degrees))

    def to_dict(self):
        return {"label": self.label, "n": self.n, "degrees": list(self.degrees),
                "h": self.h, "real": self.real}


@lru_cache(maxsize=None)
def _data():
    text = resources.files("divnc").joinpath("data/degrees.json").read_text()
    return json.loads(text)


_LABEL_RE = re.compile(
    r"""^\s*(?:
        (?P<fam>[ABD])_?(?P<n>\d+)
      | I_?2\s*[(_-]?\s*(?P<k>\d+)\s*\)?
      | (?P<exc>[HFE])_?(?P<en>\d)
      | G\s*\(\s*(?P<g1>\d+)\s*,\s*(?P<g2>\d+)\s*,\s*(?P<g3>\d+)\s*\)
    )\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def parse_label(label):
    """Split a group label into ``(family, params)``.

    >>> parse_label("A3")
    ('A', (3,))
    >>> parse_label("I2(6)")
    ('I2', (6,))
    >>> parse_label("G(3,1,2)")
    ('G', (3, 1, 2))
    """
    match = _LABEL_RE.match(label)
    if not match:
        raise UsageError(f"unknown group label {label!r}")
    if match["fam"]:
        return match["fam"].upper(), (int(match["n"]),)
    if match["k"]:
        return "I2", (int(match["k"]),)
    if match["exc"]:
        return match["exc"].upper() + match["en"], ()
    return "G", (int(match["g1"]), int(match["g2"]), int(match["g3"]))


def canonical_label(family, params):
    if family in ("A", "B", "D"):
        return f"{family}{params[0]}"
    if family == "I2":
        return f"I2({params[0]})"
    if family == "G":
        return "G({},{},{})".format(*params)
    return family


def degree_table(label):
    """Return the standard degree table for a group label.

    Accepted labels: ``A_n``, ``B_n``, ``D_n``, ``I2(k)``, ``H3``, ``H4``,
    ``F4``, ``E6``, ``E7``, ``E8``, ``G(d,1,n)`` and ``G(e,e,n)``;
    underscores are optional.
    """
    family, params = parse_label(label)
    name = canonical_label(family, params)
    if family == "A":
        (n,) = params
        if n < 1:
            raise UsageError("A_n needs n >= 1")
        return DegreeTable(name, tuple(range(2, n + 2)))
    if family == "B":
        (n,) = params
        if n < 2:
            raise UsageError("B_n needs n >= 2")
        return DegreeTable(name, tuple(2 * i for i in range(1, n + 1)))
    if family == "D":
        (n,) = params
        if n < 4:
            raise UsageError("D_n needs n >= 4")
        return DegreeTable(name, tuple(2 * i for i in range(1, n)) + (n,))
    if family == "I2":
        (k,) = params
        if k < 3:
            raise UsageError("I2(k) needs k >= 3")
        return DegreeTable(name, (2, k))
    if family == "G":
        a, b, n = params
        if n < 1 or a < 2:
            raise UsageError(f"unsupported complex label {label!r}")
        if b == 1:
            return DegreeTable(name, tuple(a * i for i in range(1, n + 1)), real=a == 2)
        if a == b:
            if n < 2:
                raise UsageError("G(e,e,n) needs n >= 2")
            degs = tuple(a * i for i in range(1, n)) + (n,)
            return DegreeTable(name, degs, real=(a == 2 or n == 2))
        raise UsageError(f"only G(d,1,n) and G(e,e,n) are supported, got {label!r}")
    entry = _data()["exceptional"].get(family)
    if entry is None:
        raise UsageError(f"unknown group label {label!r}")
    return DegreeTable(name, tuple(entry["degrees"]), real=entry["real"])


def cat(D, m):
    """Fuss-Catalan number ``prod (m*h + d_i) / d_i`` as an exact Fraction."""
    return prod((Fraction(m * D.h + d, d) for d in D.degrees), start=Fraction(1))


def cat_int(D, m):
    """``cat(D, m)`` asserted to be an integer."""
    value = cat(D, m)
    if value.denominator != 1:
        raise ConsistencyError(f"Cat^({m})({D.label}) = {value} is not an integer")
    return value.numerator


def cat_plus(D, m):
    """Positive Fuss-Catalan number as an exact integer.

    Real tables use ``prod (m*h + d_i - 2) / d_i``. For complex tables the
    shift ``d_i - 2`` is replaced by the codegree ``h - d_i``; the two agree
    whenever the degrees are self-dual, which is the case for real groups.
    """
    if D.real:
        value = prod((Fraction(m * D.h + d - 2, d) for d in D.degrees), start=Fraction(1))
    else:
        value = prod((Fraction(m * D.h + D.h - d, d) for d in D.degrees), start=Fraction(1))
    if value.denominator != 1:
        raise ConsistencyError(f"Cat_+^({m})({D.label}) = {value} is not an integer")
    return value.numerator


def euler_value(D, m):
    """Reduced Euler characteristic predicted for the truncated poset."""
    return (-1) ** D.n * (cat_plus(D, m) - cat_plus(D, m - 1))


def binom(a, b):
    """Binomial coefficient with integer top ``a`` (possibly negative) and ``b >= 0``.

    Defined as the falling factorial ``a (a-1) ... (a-b+1) / b!``; zero for ``b < 0``.
    """
    if b < 0:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def _degree_duality(D):
    return Counter(D.h - d + 2 for d in D.degrees) == Counter(D.degrees)


@dataclass
class IdentityReport:
    label: str
    m_max: int
    checked: int = 0
    skipped: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, name, cond, **where):
        self.checked += 1
        if not cond:
            self.failures.append({"identity": name, **where})

    def to_dict(self):
        return {"label": self.label, "m_max": self.m_max, "ok": self.ok,
                "checked": self.checked, "skipped": self.skipped,
                "failures": self.failures}


def verify_identities(D, m_max):
    """Check the arithmetic identities behind the closed-form Euler count.

    (a) ``cat_plus(m) == (-1)^n cat(-m-1)``;
    (b) the multiset ``{h - d_i + 2}`` equals the degrees (real tables only);
    (c) the two hockey-stick collapses over ``j`` for ``0 <= k <= n``;
    (d) the finite-difference cancellation
        ``sum_k (-1)^k C(n,k) [cat((k-1)m) - cat((k-1)m-1)] == 0``;
    (e) ``cat(-m-1) - cat(-m) == (-1)^n (cat_plus(m) - cat_plus(m-1))``.

    Also asserts integrality of ``cat(D, m)`` for ``-1 <= m <= m_max``.
    """
    n = D.n
    sign = (-1) ** n
    rep = IdentityReport(D.label, m_max)
    for m in range(-1, m_max + 1):
        rep.check("integrality", cat(D, m).denominator == 1, m=m)
    if D.real:
        rep.check("degree_duality", _degree_duality(D))
    else:
        rep.skipped.append("degree_duality")
    for k in range(n + 1):
        lhs1 = sum(binom(j + k - 1, j - 1) for j in range(1, n - k + 1))
        rep.check("hockey_stick_first", lhs1 == binom(n, k + 1), k=k)
        lhs2 = sum(binom(j + k - 1, j) for j in range(0, n - k + 1))
        rep.check("hockey_stick_second", lhs2 == binom(n, k), k=k)
    for m in range(1, m_max + 1):
        try:
            plus_m, plus_prev = cat_plus(D, m), cat_plus(D, m - 1)
        except ConsistencyError:
            rep.check("cat_plus_integral", False, m=m)
            continue
        rep.check("cat_plus_reflection", plus_m == sign * cat(D, -m - 1), m=m)
        diff = sum((-1) ** k * binom(n, k) * (cat(D, (k - 1) * m) - cat(D, (k - 1) * m - 1))
                   for k in range(n + 1))
        rep.check("finite_difference", diff == 0, m=m)
        rep.check("negative_parameter_form",
                  cat(D, -m - 1) - cat(D, -m) == sign * (plus_m - plus_prev), m=m)
    return rep


def real_tables():
    """Labels of the real tables covered by the identity suite."""
    labels = [f"A{n}" for n in range(1, 8)]
    labels += [f"B{n}" for n in range(2, 5)]
    labels += [f"D{n}" for n in range(4, 7)]
    labels += [f"I2({k})" for k in range(3, 13)]
    labels += ["H3", "H4", "F4", "E6", "E7", "E8"]
    return labels


def complex_tables():
    labels = [f"G({d},1,{n})" for d in range(2, 5) for n in range(1, 5)]
    labels += [f"G({e},{e},{n})" for e in range(2, 5) for n in range(2, 5)]
    return labels
