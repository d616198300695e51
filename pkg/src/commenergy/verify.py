"""Check registry formulas against direct computation on witness groups.

Computed values come only from commgraph/spectra/energies; predicted values
only from formulas. A group is computed once per run and cross-checked three
ways (clique closed form, exact characteristic polynomial, Jacobi oracle);
any disagreement there raises ``InternalInconsistency`` instead of producing a
record, so a formula mismatch is never reported on top of a broken computation.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .algebra import prime_factors
from .commgraph import clique_decomposition, commuting_graph, matrices
from .energies import (
    DEFAULT_TOLERANCE,
    EnergyReport,
    ExactOrInterval,
    as_fraction,
    energy,
    graph_energy_report,
    laplacian_energy,
    signless_energy,
)
from .formulas import (
    QUANTITIES,
    FormulaError,
    Surd,
    entry,
    evaluate,
    predicted_spectra,
    render_value,
    value_enclosure,
)
from .groups import (
    AlternatingA5,
    DEFAULT_MAX_ORDER,
    Dicyclic,
    Dihedral,
    FamilySpec,
    FiniteGroup,
    GL2,
    HanakiU,
    HanakiV,
    Metacyclic,
    OrderCapExceeded,
    PSL2,
    Quasidihedral,
    build,
    center,
    centralizer_count,
    commutativity_degree,
    parse_descriptor,
    recognize_quotient,
)
from .spectra import ExactSpectrum, IsolatedRoot, float_eigensolve, frac_str, max_float_deviation

log = logging.getLogger(__name__)

COMPARE_WIDTH = Fraction(1, 10**10)
FLOAT_SPECTRUM_TOL = 1e-8


class InternalInconsistency(RuntimeError):
    """Two independent computation routes disagree."""


class InapplicablePairing(FormulaError):
    """The witness does not satisfy the formula's hypothesis."""


# ---------------------------------------------------------------------------
# named witness lists
# ---------------------------------------------------------------------------

PLANAR_GROUPS: dict[str, str] = {
    "d6": "dihedral:m=3",
    "d8": "dihedral:m=4",
    "d10": "dihedral:m=5",
    "d12": "dihedral:m=6",
    "q8": "dicyclic:m=2",
    "q12": "dicyclic:m=3",
    "z2xd8": "product:inner=dihedral:m=4,k=2",
    "z2xq8": "product:inner=dicyclic:m=2,k=2",
    "m16": "m16",
    "z4sdz4": "metacyclic:m=4,n=2",
    "d8z4": "d8z4",
    "sg16_3": "sg16_3",
    "a4": "a4",
    "a5": "a5",
    "s4": "s4",
    "sl23": "sl23",
    "sz2": "suzuki2",
}

TOROIDAL_GROUPS: dict[str, str] = {
    "d14": "dihedral:m=7",
    "d16": "dihedral:m=8",
    "q16": "dicyclic:m=4",
    "qd16": "quasidihedral:n=4",
    "z7sdz3": "frobenius:p=3,q=7",
    "d6xz3": "product:inner=dihedral:m=3,k=3",
    "a4xz2": "product:inner=a4,k=2",
}

ORDER16_GROUPS = ("z2xd8", "z2xq8", "m16", "z4sdz4", "d8z4", "sg16_3")


def canonical(descriptor: str) -> str:
    return parse_descriptor(descriptor).descriptor()


_NAME_BY_DESCRIPTOR = {
    "F19": {canonical(d): n for n, d in PLANAR_GROUPS.items()},
    "F20": {canonical(d): n for n, d in TOROIDAL_GROUPS.items()},
}


# ---------------------------------------------------------------------------
# hypothesis checks: bind formula parameters from the group itself
# ---------------------------------------------------------------------------

def _order_split(n: int) -> list[int]:
    out, d = [], 2
    while n > 1:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    return out


def bind_params(spec: FamilySpec, G: FiniteGroup, fid: str) -> dict:
    """Parameters for formula ``fid`` on this witness, after checking its hypothesis."""
    fid = entry(fid).id
    z = len(center(G))
    if G.is_abelian():
        raise InapplicablePairing("abelian group")

    def fail(why: str):
        raise InapplicablePairing(f"{spec.descriptor()} / {fid}: {why}")

    if fid in ("F1", "F2", "F4"):
        qt = recognize_quotient(G)
        if fid == "F1":
            if qt.kind != "suzuki2":
                fail(f"central quotient is {qt}, not Sz(2)")
            return {"z": z}
        if fid == "F2":
            if qt.kind != "elem_abelian":
                fail(f"central quotient is {qt}, not Zp x Zp")
            return {"p": qt.param, "z": z}
        if qt.kind == "dihedral":
            return {"m": qt.param, "z": z}
        if qt.kind == "elem_abelian" and qt.param == 2:
            return {"m": 2, "z": z}
        fail(f"central quotient is {qt}, not dihedral")
    if fid == "F3":
        ps = _order_split(G.order)
        if len(ps) != 3 or len(set(ps)) != 1:
            fail(f"order {G.order} is not a prime cube")
        return {"p": ps[0]}
    if fid == "F5":
        if not isinstance(spec, Metacyclic):
            fail("not a metacyclic M2mn")
        return {"m": spec.m, "n": spec.n}
    if fid == "F6":
        if not isinstance(spec, Dihedral):
            fail("not a dihedral group")
        return {"m": spec.m}
    if fid == "F7":
        if not isinstance(spec, Dicyclic):
            fail("not a dicyclic group")
        return {"m": spec.m}
    if fid == "F8":
        ps = _order_split(G.order)
        if len(ps) != 2 or ps[0] == ps[1] or (ps[1] - 1) % ps[0]:
            fail(f"order {G.order} is not pq with p | q - 1")
        return {"p": ps[0], "q": ps[1]}
    if fid == "F9":
        if not isinstance(spec, Quasidihedral):
            fail("not quasidihedral")
        return {"n": spec.n}
    if fid == "F10":
        if isinstance(spec, AlternatingA5):  # A5 = PSL(2, 4)
            return {"k": 2}
        if not isinstance(spec, PSL2):
            fail("not PSL(2, 2^k)")
        return {"k": spec.k}
    if fid == "F11":
        if not isinstance(spec, GL2):
            fail("not GL(2, q)")
        return {"q": spec.q}
    if fid == "F12a":
        if not isinstance(spec, HanakiU):
            fail("not a U(a,b) group")
        return {"n": spec.n}
    if fid == "F12b":
        if not isinstance(spec, HanakiV):
            fail("not a V(a,b,c) group")
        return {"p": spec.p, "n": spec.n}
    if fid == "F13":
        c = centralizer_count(G)
        if c != 4:
            fail(f"{c} centralizers, not 4")
        return {"z": z}
    if fid == "F14":
        ps = set(_order_split(G.order))
        if len(ps) != 1:
            fail("not a p-group")
        p = ps.pop()
        c = centralizer_count(G)
        if c != p + 2:
            fail(f"{c} centralizers, not p + 2 = {p + 2}")
        return {"p": p, "z": z}
    if fid == "F15":
        c = centralizer_count(G)
        if c != 5:
            fail(f"{c} centralizers, not 5")
        qt = recognize_quotient(G)
        if qt.kind == "elem_abelian" and qt.param == 3:
            return {"z": z, "quotient": "Z3xZ3"}
        if qt.kind == "dihedral" and qt.param == 3:
            return {"z": z, "quotient": "D6"}
        fail(f"5-centralizer group with unexpected quotient {qt}")
    if fid == "F16":
        p = min(prime_factors(G.order))
        pr = commutativity_degree(G)
        if pr != Fraction(p * p + p - 1, p**3):
            fail(f"Pr = {pr}, not (p^2+p-1)/p^3 for p = {p}")
        return {"p": p, "z": z}
    if fid == "F17":
        pr = commutativity_degree(G)
        if pr != Fraction(5, 8):
            fail(f"Pr = {pr}, not 5/8")
        return {"z": z}
    if fid == "F18":
        pr = commutativity_degree(G)
        if pr not in (Fraction(5, 14), Fraction(2, 5), Fraction(11, 27), Fraction(1, 2)):
            fail(f"Pr = {pr} is outside the hypothesis set")
        return {}
    if fid in ("F19", "F20"):
        name = _NAME_BY_DESCRIPTOR[fid].get(spec.descriptor())
        if name is None:
            fail("not on the group list")
        return {"group": name}
    raise InapplicablePairing(f"no hypothesis check for {fid}")


# ---------------------------------------------------------------------------
# one group, computed once and cross-checked
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupComputation:
    descriptor: str
    order: int
    center_size: int
    decomposition: str
    report: EnergyReport
    float_deviation: float
    routes: tuple[str, ...]

    @property
    def spectra(self) -> tuple[ExactSpectrum, ExactSpectrum, ExactSpectrum]:
        return self.report.spectra  # type: ignore[return-value]


def _float_energy(vals: Sequence[float], shift: float) -> float:
    return math.fsum(abs(v - shift) for v in vals)


def cross_check(spec: FamilySpec, G: FiniteGroup, tolerance=DEFAULT_TOLERANCE) -> GroupComputation:
    """Energy report with clique / exact / float agreement enforced."""
    graph = commuting_graph(G)
    exact = graph_energy_report(graph, tolerance, route="exact")
    dec = clique_decomposition(graph)
    routes = ["exact"]
    problems = []
    if dec.present:
        fast = graph_energy_report(graph, tolerance, route="clique")
        routes.append("clique")
        if fast.triple() != exact.triple():
            problems.append(f"clique route {fast.triple()} != exact route {exact.triple()}")
        for a, b in zip(fast.spectra, exact.spectra):
            if a.entries != b.entries:
                problems.append(f"{a.kind} spectra differ between clique and exact routes")
    worst = 0.0
    d = float(exact.mean_degree)
    for S, M, shift in zip(exact.spectra, [m for i, m in enumerate(matrices(graph)) if i != 1], (0.0, d, d)):
        F = float_eigensolve(M)
        dev = max_float_deviation(S, F)
        worst = max(worst, dev)
        if dev > FLOAT_SPECTRUM_TOL:
            problems.append(f"{S.kind} float oracle deviates by {dev:.3g}")
        fe = _float_energy(F.values, shift)
        which = {"adjacency": exact.energy, "laplacian": exact.laplacian_energy, "signless": exact.signless_energy}[S.kind]
        if abs(fe - float(which)) > 1e-6 * (1 + abs(fe)):
            problems.append(f"{S.kind} energy from float oracle {fe!r} vs exact {which}")
    routes.append("float")
    if problems:
        raise InternalInconsistency(f"{spec.descriptor()}: " + "; ".join(problems))
    chosen = graph_energy_report(graph, tolerance, route="auto")
    return GroupComputation(spec.descriptor(), G.order, len(center(G)), str(dec), chosen, worst, tuple(routes))


@lru_cache(maxsize=256)
def _computation(descriptor: str, tolerance: str, max_order: int) -> tuple[GroupComputation, FiniteGroup, FamilySpec]:
    spec = parse_descriptor(descriptor)
    G = build(spec, max_order)
    return cross_check(spec, G, Fraction(tolerance)), G, spec


def compute(descriptor: str, tolerance=DEFAULT_TOLERANCE, max_order: int = DEFAULT_MAX_ORDER):
    return _computation(canonical(descriptor), frac_str(as_fraction(tolerance)), max_order)


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Status:
    kind: str  # ExactMatch | IntervalMatch | Mismatch
    delta: Optional[Fraction] = None
    approx: Optional[float] = None

    @property
    def is_match(self) -> bool:
        return self.kind != "Mismatch"

    def __str__(self) -> str:
        if self.kind != "Mismatch":
            return self.kind
        if self.delta is not None:
            return f"Mismatch({frac_str(self.delta)})"
        if self.approx is not None:
            return f"Mismatch(~{self.approx:.6g})"
        return "Mismatch"

    def to_json_obj(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.delta is not None:
            out["delta"] = frac_str(self.delta)
        elif self.approx is not None:
            out["approxDelta"] = f"{self.approx:.12g}"
        return out


def _computed_enclosure(comp: GroupComputation, q: str, width: Fraction) -> ExactOrInterval:
    r = comp.report
    value = {"E": r.energy, "LE": r.laplacian_energy, "LEplus": r.signless_energy}[q]
    if value.is_exact:
        return value
    SA, SL, SQ = comp.spectra
    if q == "E":
        return energy(SA, width)
    if q == "LE":
        return laplacian_energy(SL, r.mean_degree, width)
    return signless_energy(SQ, r.mean_degree, width)


def compare(predicted, comp: GroupComputation, q: str) -> Status:
    """Exact comparison where both sides are rational; otherwise disjointness
    of enclosures refined to COMPARE_WIDTH decides a mismatch."""
    if isinstance(predicted, frozenset):
        statuses = [compare(v, comp, q) for v in sorted(predicted, key=float)]
        for s in statuses:
            if s.is_match:
                return s
        got = _computed_enclosure(comp, q, COMPARE_WIDTH)
        nearest = min(predicted, key=lambda v: abs(float(v) - float(got)))
        return Status("Mismatch", None, float(nearest) - float(got))
    got = _computed_enclosure(comp, q, COMPARE_WIDTH)
    if isinstance(predicted, Fraction) and got.is_exact:
        if predicted == got.value:
            return Status("ExactMatch")
        return Status("Mismatch", predicted - got.value)
    lo, hi = value_enclosure(predicted, COMPARE_WIDTH)
    if hi < got.lo or got.hi < lo:
        return Status("Mismatch", None, float((lo + hi) / 2 - got.midpoint))
    return Status("IntervalMatch")


def _root_key(r: IsolatedRoot) -> tuple:
    g = math.gcd(*r.poly)
    poly = tuple(c // g for c in r.poly)
    if poly[-1] < 0:
        poly = tuple(-c for c in poly)
    return poly


def spectra_equal(a: ExactSpectrum, b: ExactSpectrum) -> bool:
    """Multiset equality; irrational entries match by minimal polynomial and
    overlapping isolating intervals."""
    ia = {v: m for v, m in a.entries if isinstance(v, int)}
    ib = {v: m for v, m in b.entries if isinstance(v, int)}
    if ia != ib:
        return False
    ra = [(v, m) for v, m in a.entries if not isinstance(v, int)]
    rb = [(v, m) for v, m in b.entries if not isinstance(v, int)]
    if len(ra) != len(rb):
        return False
    unused = list(rb)
    for v, m in ra:
        hit = None
        for i, (w, n) in enumerate(unused):
            if n == m and _root_key(v) == _root_key(w):
                x, y = v.refine(COMPARE_WIDTH), w.refine(COMPARE_WIDTH)
                if not (x.hi < y.lo or y.hi < x.lo):
                    hit = i
                    break
        if hit is None:
            return False
        unused.pop(hit)
    return True


@dataclass(frozen=True)
class SpectrumCheck:
    multiplicity_sums: tuple[int, int, int]
    vertices: int
    equal_to_computed: tuple[bool, bool, bool]
    energies_from_printed: Optional[tuple[ExactOrInterval, ExactOrInterval, ExactOrInterval]]

    @property
    def consistent(self) -> bool:
        return all(s == self.vertices for s in self.multiplicity_sums) and all(self.equal_to_computed)

    def note(self) -> str:
        parts = []
        for kind, s, eq in zip(("A", "L", "Q"), self.multiplicity_sums, self.equal_to_computed):
            if s != self.vertices:
                parts.append(f"printed {kind}-spectrum multiplicities sum to {s}, |v| = {self.vertices}")
            elif not eq:
                parts.append(f"printed {kind}-spectrum differs from computed")
        return "; ".join(parts)

    def to_json_obj(self) -> dict:
        out = {
            "multiplicitySums": list(self.multiplicity_sums),
            "vertices": self.vertices,
            "equalToComputed": list(self.equal_to_computed),
        }
        if self.energies_from_printed is not None:
            out["energiesFromPrinted"] = [e.to_json_obj() for e in self.energies_from_printed]
        return out


def check_printed_spectra(fid: str, params: dict, comp: GroupComputation) -> Optional[SpectrumCheck]:
    try:
        printed = predicted_spectra(fid, params)
    except FormulaError:
        return None
    dims = tuple(S.dimension for S in printed)
    eq = tuple(spectra_equal(p, c) for p, c in zip(printed, comp.spectra))
    d = comp.report.mean_degree
    energies_printed = None
    if all(m >= 0 for S in printed for _, m in S.entries):
        energies_printed = (
            energy(printed[0], COMPARE_WIDTH),
            laplacian_energy(printed[1], d, COMPARE_WIDTH),
            signless_energy(printed[2], d, COMPARE_WIDTH),
        )
    return SpectrumCheck(dims, comp.report.vertices, eq, energies_printed)  # type: ignore[arg-type]


@dataclass(frozen=True)
class VerificationRecord:
    group: str
    formula: str
    params: tuple[tuple[str, object], ...]
    cases: tuple[tuple[str, str], ...]
    predicted: tuple[tuple[str, object], ...]
    computed: EnergyReport = field(compare=False)
    status: tuple[tuple[str, Status], ...]
    decomposition: str
    spectrum_check: Optional[SpectrumCheck] = None
    notes: tuple[str, ...] = ()

    def status_of(self, q: str) -> Status:
        return dict(self.status)[q]

    def predicted_of(self, q: str):
        return dict(self.predicted)[q]

    @property
    def mismatched(self) -> tuple[str, ...]:
        return tuple(q for q, s in self.status if not s.is_match)

    def to_json_obj(self) -> dict:
        out = {
            "group": self.group,
            "formula": self.formula,
            "params": {k: v for k, v in self.params},
            "cases": dict(self.cases),
            "predicted": {q: render_value(v) for q, v in self.predicted},
            "computed": self.computed.to_json_obj(),
            "status": {q: s.to_json_obj() for q, s in self.status},
            "decomposition": self.decomposition,
        }
        if self.spectrum_check is not None:
            out["spectrumCheck"] = self.spectrum_check.to_json_obj()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _param_str(params) -> str:
    return ";".join(f"{k}={v}" for k, v in params)


def _csv_value(v) -> str:
    if isinstance(v, frozenset):
        return "{" + " ".join(sorted(_csv_value(x) for x in v)) + "}"
    if isinstance(v, Surd):
        lo, hi = v.enclosure()
        return f"{frac_str(lo)}..{frac_str(hi)}"
    return frac_str(v)


def verify_group(spec: FamilySpec | str, fid: str, tolerance=DEFAULT_TOLERANCE,
                 max_order: int = DEFAULT_MAX_ORDER) -> VerificationRecord:
    descriptor = spec if isinstance(spec, str) else spec.descriptor()
    comp, G, spec_obj = compute(descriptor, tolerance, max_order)
    params = bind_params(spec_obj, G, fid)
    pred = evaluate(fid, params)
    status = tuple((q, compare(pred.values[q], comp, q)) for q in QUANTITIES)
    notes = []
    if pred.statement_sets:
        for q in QUANTITIES:
            if not compare(pred.statement_sets[q], comp, q).is_match:
                notes.append(f"computed {q} is not in the statement's value set")
    check = check_printed_spectra(pred.id, params, comp)
    if check is not None and not check.consistent:
        notes.append(check.note())
    return VerificationRecord(
        comp.descriptor,
        pred.id,
        pred.params,
        tuple(pred.cases.items()),
        tuple(pred.values.items()),
        comp.report,
        status,
        comp.decomposition,
        check,
        tuple(notes),
    )


# ---------------------------------------------------------------------------
# plans, scans and whole runs
# ---------------------------------------------------------------------------

def _many(fmt: str, **ranges) -> list[str]:
    keys = list(ranges)
    out = [fmt]
    for k in keys:
        out = [s.replace("{" + k + "}", str(v)) for s in out for v in ranges[k]]
    return out


DEFAULT_PLAN: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("F1", ("suzuki2", *_many("product:inner=suzuki2,k={k}", k=(2, 3, 5)))),
    ("F2", (*_many("elementary:p={p},z={z}", p=(2,), z=(2, 4, 6)),
            *_many("elementary:p={p},z={z}", p=(3,), z=(3, 6, 9)),
            *_many("elementary:p={p},z={z}", p=(5,), z=(5, 10, 15)),
            "dicyclic:m=2", "dihedral:m=4")),
    ("F3", ("dihedral:m=4", "dicyclic:m=2", "hanakiV:p=3", "hanakiV:p=5")),
    ("F4", (*_many("dihedral:m={m}", m=range(3, 9)), *_many("dicyclic:m={m}", m=range(3, 6)),
            *_many("product:inner=dihedral:m=3,k={k}", k=(2, 3, 4)), "product:inner=dihedral:m=4,k=2",
            "product:inner=dihedral:m=5,k=2", "quasidihedral:n=4")),
    ("F5", (*_many("metacyclic:m={m},n={n}", m=(3, 4, 5, 6, 8), n=(1, 2, 3)), "metacyclic:m=8,n=4",
            "metacyclic:m=3,n=4")),
    ("F6", tuple(_many("dihedral:m={m}", m=range(3, 11)))),
    ("F7", tuple(_many("dicyclic:m={m}", m=range(2, 7)))),
    ("F8", tuple(_many("frobenius:p={p},q={q}", p=(2,), q=(3, 5, 7))) + ("frobenius:p=3,q=7", "frobenius:p=3,q=13",
                                                                          "frobenius:p=5,q=11")),
    ("F9", tuple(_many("quasidihedral:n={n}", n=(4, 5, 6)))),
    ("F10", ("psl2:k=2", "psl2:k=3")),
    ("F11", ("gl2:p=3,n=1", "gl2:p=2,n=2", "gl2:p=5,n=1")),
    ("F12a", ("hanakiU:n=2", "hanakiU:n=3")),
    ("F12b", ("hanakiV:p=2,n=1", "hanakiV:p=3,n=1", "hanakiV:p=5,n=1", "hanakiV:p=2,n=2", "hanakiV:p=3,n=2")),
    ("F13", ("dihedral:m=4", "dicyclic:m=2", *(PLANAR_GROUPS[n] for n in ORDER16_GROUPS), "elementary:p=2,z=6")),
    ("F14", ("dihedral:m=4", "hanakiV:p=3", "hanakiV:p=5", "elementary:p=3,z=9", "elementary:p=2,z=4")),
    ("F15", ("hanakiV:p=3", "elementary:p=3,z=6", "dihedral:m=3", "dicyclic:m=3",
             *_many("product:inner=dihedral:m=3,k={k}", k=(2, 3, 4)))),
    ("F16", ("dihedral:m=4", "hanakiV:p=3", "hanakiV:p=5", "elementary:p=3,z=9")),
    ("F17", ("dihedral:m=4", "dicyclic:m=2", *(PLANAR_GROUPS[n] for n in ORDER16_GROUPS))),
    ("F18", ("dihedral:m=3", "dihedral:m=4", "dihedral:m=5", "dihedral:m=7", "hanakiV:p=3", "frobenius:p=3,q=7")),
    ("F19", tuple(PLANAR_GROUPS.values())),
    ("F20", tuple(TOROIDAL_GROUPS.values())),
)

SCAN_DEFAULT_FORMULA = {
    "dihedral": "F6",
    "dicyclic": "F7",
    "metacyclic": "F5",
    "quasidihedral": "F9",
    "frobenius": "F8",
    "psl2": "F10",
    "gl2": "F11",
    "hanakiU": "F12a",
    "hanakiV": "F12b",
    "elementary": "F2",
    "product": "F1",
    "suzuki2": "F1",
}


@dataclass(frozen=True)
class Skipped:
    group: str
    formula: str
    reason: str

    def to_json_obj(self) -> dict:
        return {"group": self.group, "formula": self.formula, "reason": self.reason}


@dataclass(frozen=True)
class VerificationRun:
    records: tuple[VerificationRecord, ...]
    skipped: tuple[Skipped, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "records": [r.to_json_obj() for r in self.records],
            "skipped": [s.to_json_obj() for s in self.skipped],
            "errata": errata_report(self.records),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["group", "formula", "params", "quantity", "case", "predicted", "computed", "status", "delta"])
        for r in self.records:
            cases = dict(r.cases)
            comp = dict(zip(QUANTITIES, r.computed.triple()))
            for q in QUANTITIES:
                s = r.status_of(q)
                delta = "" if s.delta is None else frac_str(s.delta)
                if s.delta is None and s.approx is not None:
                    delta = f"~{s.approx:.12g}"
                w.writerow([r.group, r.formula, _param_str(r.params), q, cases[q],
                            _csv_value(r.predicted_of(q)), comp[q].csv(), s.kind, delta])
        for s in self.skipped:
            w.writerow([s.group, s.formula, "", "", "", "", "", "Skipped", s.reason])
        return buf.getvalue()


def _attempt(pair: tuple[str, str], tolerance, max_order) -> VerificationRecord | Skipped:
    descriptor, fid = pair
    try:
        return verify_group(descriptor, fid, tolerance, max_order)
    except OrderCapExceeded as exc:
        log.warning("skipping %s: %s", descriptor, exc)
        return Skipped(canonical(descriptor), fid, str(exc))
    except InapplicablePairing as exc:
        return Skipped(canonical(descriptor), fid, str(exc))


def run_pairs(pairs: Sequence[tuple[str, str]], tolerance=DEFAULT_TOLERANCE,
              max_order: int = DEFAULT_MAX_ORDER, threads: int = 1) -> VerificationRun:
    """Verify (descriptor, formula) pairs; output order equals input order."""
    # warm the per-group cache serially so each group is built exactly once
    for d in dict.fromkeys(canonical(d) for d, _ in pairs):
        try:
            compute(d, tolerance, max_order)
        except OrderCapExceeded:
            pass
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(lambda p: _attempt(p, tolerance, max_order), pairs))
    else:
        results = [_attempt(p, tolerance, max_order) for p in pairs]
    records = tuple(r for r in results if isinstance(r, VerificationRecord))
    skipped = tuple(r for r in results if isinstance(r, Skipped))
    return VerificationRun(records, skipped)


def plan_pairs(formulas: Optional[Iterable[str]] = None, plan=DEFAULT_PLAN) -> list[tuple[str, str]]:
    wanted = None if formulas is None else {entry(f).id for f in formulas}
    return [(d, fid) for fid, ds in plan for d in ds if wanted is None or fid in wanted]


def verify_all(tolerance=DEFAULT_TOLERANCE, max_order: int = DEFAULT_MAX_ORDER, threads: int = 1,
               formulas: Optional[Iterable[str]] = None) -> VerificationRun:
    return run_pairs(plan_pairs(formulas), tolerance, max_order, threads)


def scan_family(family: str, ranges: dict[str, Iterable[int]], formula: Optional[str] = None,
                tolerance=DEFAULT_TOLERANCE, max_order: int = DEFAULT_MAX_ORDER,
                extra: str = "") -> list[VerificationRecord]:
    """One record per parameter combination, ordered by the parameters.

    ``family`` may be a bare family name or a descriptor prefix with fixed
    parameters (e.g. ``elementary:p=3``). Products of Sz(2) with a cyclic group
    are reached with family ``product`` and ranges ``{"k": ...}``.
    """
    name, _, fixed = family.partition(":")
    fid = formula or SCAN_DEFAULT_FORMULA.get(name)
    if fid is None:
        raise FormulaError(f"no default formula for family {name!r}")
    keys = sorted(ranges)
    combos: list[dict] = [{}]
    for k in keys:
        combos = [dict(c, **{k: v}) for c in combos for v in sorted(ranges[k])]
    pairs = []
    for c in combos:
        if name == "product":
            body = f"inner={extra or 'suzuki2'},k={c['k']}"
        else:
            body = ",".join(x for x in [fixed, ",".join(f"{k}={v}" for k, v in c.items())] if x)
        pairs.append((f"{name}:{body}" if body else name, fid))
    run = run_pairs(pairs, tolerance, max_order)
    for s in run.skipped:
        log.warning("scan skipped %s: %s", s.group, s.reason)
    return list(run.records)


# ---------------------------------------------------------------------------
# errata and census
# ---------------------------------------------------------------------------

def errata_report(records: Iterable[VerificationRecord]) -> dict:
    """Mismatches grouped by formula and quantity, plus printed-spectrum notes."""
    mism: dict[tuple[str, str], list] = {}
    spec_notes: dict[str, list] = {}
    for r in records:
        for q in r.mismatched:
            s = r.status_of(q)
            comp = dict(zip(QUANTITIES, r.computed.triple()))[q]
            mism.setdefault((r.formula, q), []).append({
                "group": r.group,
                "params": {k: v for k, v in r.params},
                "case": dict(r.cases)[q],
                "printed": render_value(r.predicted_of(q)),
                "computed": comp.to_json_obj(),
                "status": s.to_json_obj(),
                "evidence": _evidence(r),
            })
        if r.spectrum_check is not None and not r.spectrum_check.consistent:
            spec_notes.setdefault(r.formula, []).append({
                "group": r.group,
                "params": {k: v for k, v in r.params},
                "note": r.spectrum_check.note(),
                "check": r.spectrum_check.to_json_obj(),
            })
    order = {fid: i for i, (fid, _) in enumerate(DEFAULT_PLAN)}

    def key(item):
        (fid, q), _ = item
        return (order.get(fid, 99), QUANTITIES.index(q))

    return {
        "mismatches": [
            {"formula": fid, "quantity": q, "witnesses": ws}
            for (fid, q), ws in sorted(mism.items(), key=key)
        ],
        "spectrumNotes": [
            {"formula": fid, "witnesses": ws}
            for fid, ws in sorted(spec_notes.items(), key=lambda kv: order.get(kv[0], 99))
        ],
    }


def _evidence(r: VerificationRecord) -> dict:
    out: dict = {
        "decomposition": r.decomposition,
        "meanDegree": frac_str(r.computed.mean_degree),
        "vertices": r.computed.vertices,
        "edges": r.computed.edges,
        "routesAgree": ["clique", "exact", "float"] if r.decomposition != "not a clique union" else ["exact", "float"],
    }
    if r.computed.spectra is not None and r.computed.vertices <= 64:
        out["spectra"] = {S.kind: S.to_json_obj() for S in r.computed.spectra}
    if r.spectrum_check is not None and r.spectrum_check.energies_from_printed is not None:
        out["energiesFromPrintedSpectra"] = [e.to_json_obj() for e in r.spectrum_check.energies_from_printed]
    return out


@dataclass(frozen=True)
class CensusRow:
    group: str
    super_integral: bool
    flags: tuple[bool, bool, bool]

    def to_json_obj(self) -> dict:
        return {"group": self.group, "superIntegral": self.super_integral,
                "adjacency": self.flags[0], "laplacian": self.flags[1], "signless": self.flags[2]}


def super_integral_census(specs: Iterable[FamilySpec | str], max_order: int = DEFAULT_MAX_ORDER) -> list[CensusRow]:
    rows = []
    for s in specs:
        d = s if isinstance(s, str) else s.descriptor()
        comp, _, _ = compute(d, DEFAULT_TOLERANCE, max_order)
        flags = tuple(S.is_integral() for S in comp.spectra)
        rows.append(CensusRow(comp.descriptor, all(flags), flags))  # type: ignore[arg-type]
    return rows


def census_groups() -> list[str]:
    seen = dict.fromkeys(canonical(d) for _, ds in DEFAULT_PLAN for d in ds)
    return list(seen)
