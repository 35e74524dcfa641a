"""The verification matrix: enumeration against closed forms, case by case."""

from __future__ import annotations

from dataclasses import dataclass

from . import chains, formulas, homology
from .cache import get_poset
from .errors import SizeGuardError
from .groups import GroupSpec, build_group, fixed_space_codim, find_conjugator, sample_elements, ENVELOPE
from .ncposet import DEFAULT_MAX_ELEMENTS, build_poset, truncate

MATRIX_GROUPS = ("A1", "A2", "A3", "A4", "B2", "B3", "D4",
                 "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3")
MATRIX_M = (1, 2, 3)
ZERO_CASES = [(g, m) for g in ("A2", "A3", "B2", "B3") for m in (1, 2)]
HOMOLOGY_CASES = ([("A2", m) for m in (1, 2, 3)] + [("A3", m) for m in (1, 2)]
                  + [("B2", m) for m in (1, 2)] + [("B3", 1)]
                  + [(f"I2({k})", m) for k in range(3, 9) for m in (1, 2)] + [("D4", 1)])
COXETER_CASES = [(g, m) for g in ("A3", "B3") for m in (1, 2)]
ORACLE_EXHAUSTIVE_LIMIT = 240
ORACLE_SAMPLES = 1000

SUITES = ("cardinality", "euler", "multichains", "rooted", "zeros", "pipeline",
          "homology", "identities", "oracle", "coxeter")


@dataclass
class Check:
    criterion: str
    case: str
    ok: bool
    detail: str = ""
    skipped: bool = False

    def line(self):
        status = "SKIP" if self.skipped else ("PASS" if self.ok else "FAIL")
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status} {self.criterion} {self.case}{tail}"


class Verifier:
    def __init__(self, max_elements=DEFAULT_MAX_ELEMENTS,
                 max_simplices=homology.DEFAULT_MAX_SIMPLICES, cache_dir=None):
        self.max_elements = max_elements
        self.max_simplices = max_simplices
        self.cache_dir = cache_dir
        self._posets = {}

    def poset(self, label, m):
        key = (label, m)
        if key not in self._posets:
            G = build_group(label)
            self._posets[key] = get_poset(G, m, self.cache_dir, self.max_elements)
        return self._posets[key]

    def _matrix(self, criterion, body, cases=None):
        out = []
        for label, m in cases or [(g, m) for g in MATRIX_GROUPS for m in MATRIX_M]:
            case = f"{label} m={m}"
            try:
                P = self.poset(label, m)
            except SizeGuardError as exc:
                out.append(Check(criterion, case, True, str(exc), skipped=True))
                continue
            ok, detail = body(P, formulas.degree_table(label), m)
            out.append(Check(criterion, case, ok, detail))
        return out

    def cardinality(self):
        def body(P, D, m):
            want = formulas.cat_int(D, m)
            return len(P) == want, f"|NC| = {len(P)}, Cat = {want}"
        return self._matrix("cardinality", body)

    def euler(self):
        def body(P, D, m):
            got, want = chains.euler_reduced(truncate(P)), formulas.euler_value(D, m)
            return got == want, f"direct = {got}, closed form = {want}"
        return self._matrix("euler", body)

    def multichains(self):
        def body(P, D, m):
            bad = [l for l in (1, 2, 3, 4) if chains.multichain_count(P, l) != formulas.cat(D, m * l)]
            return not bad, f"failing l: {bad}" if bad else "l = 1..4"
        return self._matrix("multichains", body)

    def rooted(self):
        def body(P, D, m):
            bad = [l for l in (1, 2, 3)
                   if chains.min_rooted_multichain_count(P, l) != formulas.cat(D, m * l - 1)]
            return not bad, f"failing l: {bad}" if bad else "l = 1..3"
        return self._matrix("rooted", body)

    def zeros(self):
        def body(P, D, m):
            checked, bad = 0, []
            for l in range(1, 5):
                for s in chains.compositions(P.n, l):
                    base = chains.rank_selected_count(P, s)
                    for i in range(1, l + 1):
                        padded = s[:i] + (0,) + s[i:]
                        checked += 1
                        if chains.rank_selected_count(P, padded) != base:
                            bad.append(padded)
            return not bad, f"{checked} insertions" + (f", failing {bad[:5]}" if bad else "")
        return self._matrix("zeros", body, ZERO_CASES)

    def pipeline(self):
        def body(P, D, m):
            stages = chains.euler_closed_form_stages(D, m)
            direct = chains.euler_reduced(truncate(P))
            ok = len(set(stages.values())) == 1 and stages["target"] == direct
            return ok, f"stages = {sorted(set(int(v) for v in stages.values()))}, direct = {direct}"
        return self._matrix("pipeline", body)

    def homology(self):
        def body(P, D, m):
            K = homology.order_complex(truncate(P), self.max_simplices)
            H = homology.homology(K)
            chi = formulas.euler_value(D, m)
            n = D.n
            ok = (not H.torsion and H.nonzero_betti() == ({n - 2: abs(chi)} if chi else {})
                  and H.euler() == chi)
            return ok, f"betti = {H.nonzero_betti()}, torsion = {H.torsion}, chi = {chi}"
        return self._matrix("homology", body, HOMOLOGY_CASES)

    def identities(self, m_max=4):
        out = []
        for label in formulas.real_tables() + formulas.complex_tables():
            rep = formulas.verify_identities(formulas.degree_table(label), m_max)
            detail = f"{rep.checked} checks" + (f", failures {rep.failures}" if rep.failures else "")
            out.append(Check("identities", label, rep.ok, detail))
        return out

    def oracle(self):
        out = []
        for family, (lo, hi) in ENVELOPE.items():
            for param in range(lo, hi + 1):
                G = build_group(GroupSpec(family, param))
                if G.order <= ORACLE_EXHAUSTIVE_LIMIT:
                    ws, how = range(G.order), "all"
                else:
                    ws, how = sample_elements(G, ORACLE_SAMPLES, seed=param), "sampled"
                bad = [w for w in ws if fixed_space_codim(G, w) != G.length[w]]
                out.append(Check("oracle", G.label, not bad,
                                 f"{how} {len(ws)} elements" + (f", {len(bad)} mismatches" if bad else "")))
        return out

    def coxeter(self):
        out = []
        for label, m in COXETER_CASES:
            G = build_group(label)
            c2 = G.reversed_coxeter()
            G2 = G.with_coxeter(c2)
            P1, P2 = self.poset(label, m), build_poset(G2, m, self.max_elements)
            fv1, fv2 = chains.f_vector(truncate(P1)), chains.f_vector(truncate(P2))
            ok = (c2 != G.coxeter and find_conjugator(G, G.coxeter, c2) is not None
                  and P1.rank_sizes() == P2.rank_sizes() and fv1 == fv2)
            out.append(Check("coxeter", f"{label} m={m}", ok,
                             f"ranks {P1.rank_sizes()} / {P2.rank_sizes()}, f {fv1} / {fv2}"))
        return out

    def run(self, suites=SUITES):
        checks = []
        for name in suites:
            checks.extend(getattr(self, name)())
        return checks
