"""Registry of closed-form energy formulas, kept exactly as printed.

Each entry lists, for E, LE and LE+, the printed cases with their conditions.
Nothing here is corrected: a wrong formula stays wrong and the verifier is the
place where disagreements get recorded. Parameter names:

    z  order of the centre          m, n, k  family indices
    p, q  primes or prime powers    group    a named group (list entries)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Fr
from typing import Callable, Mapping, Optional, Union

from .algebra import is_prime, prime_power
from .spectra import ExactSpectrum, IsolatedRoot, frac_str, make_spectrum

QUANTITIES = ("E", "LE", "LEplus")
SURD_WIDTH = Fr(1, 10**12)


class FormulaError(ValueError):
    pass


class InapplicableError(FormulaError):
    pass


class CaseGapError(FormulaError):
    pass


@dataclass(frozen=True)
class Surd:
    """rational + sum(coef * sqrt(radicand))."""

    rational: Fr
    terms: tuple[tuple[Fr, int], ...] = ()

    def enclosure(self, width: Fr = SURD_WIDTH) -> tuple[Fr, Fr]:
        lo = hi = Fr(self.rational)
        per = width / max(len(self.terms), 1)
        for coef, c in self.terms:
            scale = 1
            while Fr(abs(coef), scale) > per:
                scale *= 2
            r = math.isqrt(c * scale * scale)
            a, b = Fr(r, scale), Fr(r + 1, scale) if r * r != c * scale * scale else Fr(r, scale)
            lo, hi = (lo + coef * a, hi + coef * b) if coef > 0 else (lo + coef * b, hi + coef * a)
        return lo, hi

    def __float__(self) -> float:
        return float(self.rational) + sum(float(k) * math.sqrt(c) for k, c in self.terms)

    def __str__(self) -> str:
        out = frac_str(self.rational) if self.rational else ""
        for k, c in self.terms:
            sign = "-" if k < 0 else "+"
            mag = abs(k)
            coef = "" if mag == 1 else f"{frac_str(mag)}*"
            piece = f"{coef}sqrt({c})"
            out = f"{out} {sign} {piece}" if out else (piece if sign == "+" else f"-{piece}")
        return out or "0"


Value = Union[Fr, Surd]
Params = Mapping[str, object]


@dataclass(frozen=True)
class Case:
    label: str
    when: Callable[[Params], bool]
    value: Callable[[Params], Value]
    printed: str


def always(_p: Params) -> bool:
    return True


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    locus: str
    hypothesis: str
    params: tuple[str, ...]
    domain: Callable[[Params], bool]
    cases: dict[str, tuple[Case, ...]]
    spectra: Optional[Callable[[Params], tuple[dict, dict, dict]]] = None
    statement_sets: Optional[dict[str, frozenset]] = None
    note: str = ""
    set_valued: bool = False

    def applicable(self, params: Params) -> bool:
        if set(self.params) - set(params):
            return False
        try:
            return bool(self.domain(params))
        except (TypeError, ValueError, KeyError):
            return False

    def cases_for(self, quantity: str, params: Params) -> list[Case]:
        return [c for c in self.cases[quantity] if c.when(params)]


@dataclass(frozen=True)
class FormulaPrediction:
    id: str
    params: tuple[tuple[str, object], ...]
    cases: dict[str, str]
    values: dict[str, object]  # Fraction, Surd or frozenset of those
    statement_sets: Optional[dict[str, frozenset]] = None

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "params": {k: v for k, v in self.params},
            "cases": dict(self.cases),
            "values": {q: render_value(v) for q, v in self.values.items()},
        }


def render_value(v) -> object:
    if isinstance(v, (int, Fr)):
        return frac_str(v)
    if isinstance(v, Surd):
        lo, hi = v.enclosure()
        return {"expr": str(v), "lo": frac_str(lo), "hi": frac_str(hi)}
    if isinstance(v, frozenset):
        return sorted((render_value(x) for x in v), key=lambda x: (isinstance(x, dict), str(x)))
    raise TypeError(type(v))


# -- helpers ------------------------------------------------------------------

def C(label: str, when, value, printed: str) -> Case:
    return Case(label, when, value, printed)


def one(value, printed: str) -> tuple[Case, ...]:
    return (Case("all", always, value, printed),)


def _pos_int(*names):
    def check(p):
        return all(isinstance(p[n], int) and p[n] >= 1 for n in names)
    return check


def _prime(*names):
    return lambda p: all(is_prime(p[n]) for n in names)


def _both(*checks):
    return lambda p: all(c(p) for c in checks)


def _is_prime_power(q) -> bool:
    try:
        prime_power(q)
        return True
    except ValueError:
        return False


def _spec(*pairs) -> dict:
    """Merge printed (value, multiplicity) pairs; zero multiplicities vanish."""
    out: dict = {}
    for v, m in pairs:
        out[v] = out.get(v, 0) + m
    return {v: m for v, m in out.items() if m}


# -- F4 forms reused by several entries ----------------------------------------

def _f4_le_case2(m, z):
    return Fr((2 * m**3 + 2) * z - 4 * m * m - 2 * m + 2, 2 * m - 1)


def _f4_le_case3(m, z):
    return Fr((2 * m**3 - 6 * m * m + 4 * m) * z * z + (2 * m * m - 2 * m + 2) * z - 4 * m + 2, 2 * m - 1)


def _f4_cond2(p):
    m, z = p["m"], p["z"]
    return m == 2 or (m == 3 and z in (1, 2)) or (m == 4 and z == 1)


def _f4_cond3(p):
    m, z = p["m"], p["z"]
    return (m >= 3 and z >= 3) or (m == 4 and z >= 2) or m >= 5


def _f4_spectra(p):
    m, z = p["m"], p["z"]
    A = _spec((-1, (2 * m - 1) * z - m - 1), (z - 1, m), ((m - 1) * z - 1, 1))
    L = _spec((0, m + 1), ((m - 1) * z, (m - 1) * z - 1), (z, m * (z - 1)))
    Q = _spec((2 * (m - 1) * z - 2, 1), ((m - 1) * z - 2, (m - 1) * z - 1), (2 * z - 2, m), (z - 2, m * (z - 1)))
    return A, L, Q


def _f2_value(p):
    P, z = p["p"], p["z"]
    return Fr(2 * (P * P - 1) * z - 2 * (P + 1))


def _f2_spectra(p):
    P, z = p["p"], p["z"]
    big = (P * P - 1) * z - P - 1
    A = _spec((-1, big), ((P - 1) * z - 1, P + 1))
    L = _spec((0, P + 1), ((P - 1) * z, big))
    Q = _spec((2 * (P - 1) * z - 2, P + 1), ((P - 1) * z - 2, big))
    return A, L, Q


def _regular(value, printed):
    cases = one(value, printed)
    return {"E": cases, "LE": cases, "LEplus": cases}


# -- list-type entries ------------------------------------------------------------

S = Surd
PLANAR_VALUES: dict[str, tuple[Value, Value, Value]] = {
    "d6": (Fr(3), Fr(16, 5), Fr(16, 5)),
    "d8": (Fr(6), Fr(7, 3), Fr(6)),
    "d10": (Fr(7), Fr(7), Fr(6)),
    "d12": (Fr(12), Fr(72, 5), Fr(54, 5)),
    "q8": (Fr(6), Fr(6), Fr(6)),
    "q12": (Fr(12), Fr(72, 5), Fr(54, 5)),
    "z2xd8": (Fr(18), Fr(18), Fr(18)),
    "z2xq8": (Fr(18), Fr(18), Fr(18)),
    "m16": (Fr(18), Fr(18), Fr(18)),
    "z4sdz4": (Fr(18), Fr(18), Fr(18)),
    "d8z4": (Fr(18), Fr(18), Fr(18)),
    "sg16_3": (Fr(18), Fr(18), Fr(18)),
    "a4": (Fr(12), Fr(140, 11), Fr(256, 11)),
    "a5": (Fr(76), Fr(3924, 59), Fr(3844, 59)),
    "s4": (S(Fr(17), ((Fr(4), 5), (Fr(1), 17))), S(Fr(526, 23), ((Fr(46, 23), 13),)), Fr(756, 23)),
    "sl23": (Fr(30), Fr(408, 11), Fr(312, 11)),
    "sz2": (Fr(26), Fr(504, 19), Fr(484, 19)),
}

PLANAR_SETS = {
    "E": frozenset([Fr(3), Fr(6), Fr(7), Fr(12), Fr(18), Fr(26), Fr(30), Fr(76), PLANAR_VALUES["s4"][0]]),
    "LE": frozenset([Fr(16, 5), Fr(7, 3), Fr(16), Fr(18), Fr(72, 5), Fr(6), Fr(140, 11), Fr(504, 19),
                     Fr(408, 11), Fr(3924, 59), PLANAR_VALUES["s4"][1]]),
    "LEplus": frozenset([Fr(16, 5), Fr(6), Fr(54, 5), Fr(18), Fr(256, 11), Fr(484, 19), Fr(312, 11),
                         Fr(3844, 59), Fr(756, 23)]),
}

TOROIDAL_VALUES: dict[str, tuple[Value, Value, Value]] = {
    "d14": (Fr(11), Fr(480, 13), Fr(370, 13)),
    "d16": (Fr(18), Fr(230, 7), Fr(192, 7)),
    "q16": (Fr(42), Fr(962, 15), Fr(185)),
    "qd16": (Fr(18), Fr(236, 7), Fr(480, 7)),
    "z7sdz3": (Fr(25), Fr(103, 4), Fr(677, 20)),
    "d6xz3": (Fr(22), Fr(48), Fr(59)),
    "a4xz2": (Fr(34), Fr(390, 11), Fr(408, 11)),
}

TOROIDAL_SETS = {
    "E": frozenset(map(Fr, (11, 18, 42, 25, 22, 34))),
    "LE": frozenset([Fr(480, 13), Fr(230, 7), Fr(962, 15), Fr(236, 7), Fr(103, 4), Fr(48), Fr(390, 11)]),
    "LEplus": frozenset([Fr(370, 13), Fr(192, 7), Fr(185), Fr(480, 7), Fr(677, 20), Fr(59), Fr(408, 11)]),
}

PR_SET_VALUES = {
    "E": frozenset(map(Fr, (11, 7, 6, 3))),
    "LE": frozenset([Fr(480, 13), Fr(16), Fr(7, 3), Fr(16, 5)]),
    "LEplus": frozenset([Fr(370, 13), Fr(6), Fr(16, 5)]),
}
PR_SET = frozenset([Fr(5, 14), Fr(2, 5), Fr(11, 27), Fr(1, 2)])


def _list_entry_cases(values: dict) -> dict[str, tuple[Case, ...]]:
    out = {}
    for qi, q in enumerate(QUANTITIES):
        cases = []
        for name, triple in values.items():
            cases.append(Case(name, (lambda p, name=name: p["group"] == name),
                              (lambda p, v=triple[qi]: v), str(triple[qi]) if isinstance(triple[qi], Surd) else frac_str(triple[qi])))
        out[q] = tuple(cases)
    return out


def _sl23_spectra(_p):
    return _spec((-1, 15), (1, 3), (3, 4)), _spec((0, 7), (2, 3), (4, 12)), _spec((0, 3), (2, 15), (6, 4))


def _s4_spectra(_p):
    h = Fr(1, 2)
    A = _spec((1, 7), (-1, 10), (S(Fr(0), ((Fr(1), 5),)), 2), (S(Fr(0), ((Fr(-1), 5),)), 2),
              (S(Fr(3, 2), ((h, 17),)), 1), (S(Fr(3, 2), ((-h, 17),)), 1))
    L = _spec((0, 5), (1, 3), (2, 4), (3, 6), (5, 1),
              (S(Fr(4), ((Fr(1), 13),)), 2), (S(Fr(4), ((Fr(-1), 13),)), 2))
    Q = _spec((0, 4), (1, 6), (2, 4), (3, 3), (5, 1),
              (S(Fr(4), ((Fr(1), 5),)), 2), (S(Fr(4), ((Fr(-1), 5),)), 2),
              (S(Fr(11, 2), ((h, 41),)), 1), (S(Fr(11, 2), ((-h, 41),)), 1))
    return A, L, Q


def _planar_spectra(p):
    if p["group"] == "sl23":
        return _sl23_spectra(p)
    if p["group"] == "s4":
        return _s4_spectra(p)
    raise FormulaError(f"no printed spectra for planar entry {p['group']}")


# -- the registry -------------------------------------------------------------------

def _build() -> tuple[FormulaEntry, ...]:
    E: list[FormulaEntry] = []

    # F1: G/Z ≅ Sz(2)
    E.append(FormulaEntry(
        "F1", "central quotient Sz(2)", "G/Z(G) is the Frobenius group of order 20", ("z",),
        _pos_int("z"),
        {
            "E": one(lambda p: Fr(38 * p["z"] - 12), "38z - 12"),
            "LE": (
                C("z<=4", lambda p: p["z"] <= 4, lambda p: Fr(732 * p["z"] - 228, 19), "(732z - 228)/19"),
                C("z>4", lambda p: p["z"] > 4, lambda p: Fr(120 * p["z"] ** 2 + 122 * p["z"] - 38, 19), "(120z^2 + 122z - 38)/19"),
            ),
            "LEplus": (
                C("z=1", lambda p: p["z"] == 1, lambda p: Fr(712 * p["z"] - 228, 19), "(712z - 228)/19"),
                C("z>1", lambda p: p["z"] > 1, lambda p: Fr(120 * p["z"] ** 2 - 530 * p["z"] - 190, 19), "(120z^2 - 530z - 190)/19"),
            ),
        },
        spectra=lambda p: (
            _spec((-1, 19 * p["z"] - 6), (4 * p["z"] - 1, 1), (3 * p["z"] - 1, 5)),
            _spec((0, 6), (4 * p["z"], 4 * p["z"] - 1), (3 * p["z"], 15 * p["z"] - 5)),
            _spec((8 * p["z"] - 2, 1), (4 * p["z"] - 2, 4 * p["z"] - 1), (6 * p["z"] - 2, 5), (3 * p["z"] - 2, 15 * p["z"] - 5)),
        ),
        note="LE+ for z>1 carries -530z; the term-by-term sum in the derivation gives +530z.",
    ))

    # F2: G/Z ≅ Zp x Zp
    E.append(FormulaEntry(
        "F2", "central quotient Zp x Zp", "G/Z(G) is elementary abelian of order p^2", ("p", "z"),
        _both(_prime("p"), _pos_int("z")),
        _regular(_f2_value, "2(p^2 - 1)z - 2(p + 1)"),
        spectra=_f2_spectra,
    ))

    # F3: non-abelian of order p^3
    E.append(FormulaEntry(
        "F3", "order p^3", "G is non-abelian of order p^3", ("p",),
        _prime("p"),
        _regular(lambda p: Fr(2 * p["p"] ** 3 - 4 * p["p"] - 2), "2p^3 - 4p - 2"),
    ))

    # F4: G/Z ≅ D_2m
    f4_leplus = (
        C("m=2", lambda p: p["m"] == 2, lambda p: Fr(6 * p["z"] - 6), "6z - 6"),
        C("m=3,z=1", lambda p: p["m"] == 3 and p["z"] == 1, lambda p: Fr(16, 5), "16/5"),
        C("m=3,z>=2", lambda p: p["m"] == 3 and p["z"] >= 2, lambda p: Fr(12 * p["z"] ** 2 + 18 * p["z"] - 30, 5), "(12z^2 + 18z - 30)/5"),
        C("m=4,z<=6", lambda p: p["m"] == 4 and p["z"] <= 6, lambda p: Fr(48 * p["z"] ** 2, 7), "48z^2/7"),
        C("m=4,z>6", lambda p: p["m"] == 4 and p["z"] > 6, lambda p: Fr(48 * p["z"] ** 2 + 8 * p["z"] - 56, 7), "(48z^2 + 8z - 56)/7"),
        C("m>=5", lambda p: p["m"] >= 5, lambda p: Fr(
            (2 * p["m"] ** 3 - 6 * p["m"] ** 2 + 4 * p["m"]) * p["z"] ** 2
            + (p["m"] ** 3 - 7 * p["m"] ** 2 + 4 * p["m"]) * p["z"] - 2 * p["m"] ** 2 + 3 * p["m"] - 1, 2 * p["m"] - 1),
          "((2m^3 - 6m^2 + 4m)z^2 + (m^3 - 7m^2 + 4m)z - 2m^2 + 3m - 1)/(2m - 1)"),
    )
    E.append(FormulaEntry(
        "F4", "central quotient D2m", "G/Z(G) is dihedral of order 2m, m >= 2", ("m", "z"),
        _both(_pos_int("z"), lambda p: isinstance(p["m"], int) and p["m"] >= 2),
        {
            "E": one(lambda p: Fr((4 * p["m"] - 2) * p["z"] - 2 * (p["m"] + 1)), "(4m - 2)z - 2(m + 1)"),
            "LE": (
                C("m=2 | m=3,z<=2 | m=4,z=1", _f4_cond2, lambda p: _f4_le_case2(p["m"], p["z"]),
                  "((2m^3 + 2)z - 4m^2 - 2m + 2)/(2m - 1)"),
                C("m>=3,z>=3 | m=4,z>=2 | m>=5", _f4_cond3, lambda p: _f4_le_case3(p["m"], p["z"]),
                  "((2m^3 - 6m^2 + 4m)z^2 + (2m^2 - 2m + 2)z - 4m + 2)/(2m - 1)"),
            ),
            "LEplus": f4_leplus,
        },
        spectra=_f4_spectra,
        note="LE case 3 is stated with z >= 3 but derived under z = 3; the stated version is kept.",
    ))

    # F5: metacyclic M_2mn
    def odd(p):
        return p["m"] % 2 == 1

    def even(p):
        return p["m"] % 2 == 0

    def mm(p):
        return p["m"]

    def nn(p):
        return p["n"]

    E.append(FormulaEntry(
        "F5", "metacyclic M2mn", "G = <a,b | a^m = b^2n = 1, bab^-1 = a^-1>, m > 2", ("m", "n"),
        _both(_pos_int("n"), lambda p: isinstance(p["m"], int) and p["m"] > 2),
        {
            "E": (
                C("m odd", odd, lambda p: Fr((4 * mm(p) - 2) * nn(p) - 2 * (mm(p) + 1)), "(4m - 2)n - 2(m + 1)"),
                C("m even", even, lambda p: Fr((4 * mm(p) - 4) * nn(p) - (mm(p) + 2)), "(4m - 4)n - (m + 2)"),
            ),
            "LE": (
                C("m=3,n<=2", lambda p: mm(p) == 3 and nn(p) in (1, 2), lambda p: Fr(56 * nn(p) - 40, 5), "(56n - 40)/5"),
                C("m=3,n>=3", lambda p: mm(p) == 3 and nn(p) >= 3, lambda p: Fr(12 * nn(p) ** 2 + 14 * nn(p) - 10, 5), "(12n^2 + 14n - 10)/5"),
                C("m odd, m!=3", lambda p: odd(p) and mm(p) != 3, lambda p: _f4_le_case3(mm(p), nn(p)),
                  "((2m^3 - 6m^2 + 4m)n^2 + (2m^2 - 2m + 2)n - 4m + 2)/(2m - 1)"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(16 * nn(p) - 9, 3), "(16n - 9)/3"),
                C("m=6,n=1", lambda p: mm(p) == 6 and nn(p) == 1, lambda p: Fr(72, 5), "72/5"),
                C("m=6,n>=2", lambda p: mm(p) == 6 and nn(p) >= 2, lambda p: Fr(48 * nn(p) ** 2 + 28 * nn(p) - 10, 5), "(48n^2 + 28n - 10)/5"),
                C("m=8", lambda p: mm(p) == 8, lambda p: Fr(192 * nn(p) ** 2 + 52 * nn(p) - 14, 7), "(192n^2 + 52n - 14)/7"),
                C("m even, other", lambda p: even(p) and mm(p) not in (4, 6, 8), lambda p: Fr(
                    (mm(p) ** 3 - 6 * mm(p) ** 2 + 8 * mm(p)) * nn(p) ** 2 + (mm(p) ** 2 - 2 * mm(p) + 4) * nn(p) - 2 * mm(p) + 2, mm(p) - 1),
                  "((m^3 - 6m^2 + 8m)n^2 + (m^2 - 2m + 4)n - 2m + 2)/(m - 1)"),
            ),
            "LEplus": (
                C("m=3,n=1", lambda p: mm(p) == 3 and nn(p) == 1, lambda p: Fr(16, 5), "16/5"),
                C("m=3,n>=2", lambda p: mm(p) == 3 and nn(p) >= 2, lambda p: Fr(12 * nn(p) ** 2 + 18 * nn(p) - 30, 5), "(12n^2 + 18n - 30)/5"),
                C("m odd, m!=3", lambda p: odd(p) and mm(p) != 3, lambda p: Fr(
                    (2 * mm(p) ** 3 - 6 * mm(p) ** 2 + 4 * mm(p)) * nn(p) ** 2 + (mm(p) ** 3 - 7 * mm(p) ** 2 + 4 * mm(p)) * nn(p)
                    - 2 * mm(p) ** 2 + 3 * mm(p) - 1, 2 * mm(p) - 1),
                  "((2m^3 - 6m^2 + 4m)n^2 + (m^3 - 7m^2 + 4m)n - 2m^2 + 3m - 1)/(2m - 1)"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(12 * nn(p) - 6), "12n - 6"),
                C("m=6", lambda p: mm(p) == 6, lambda p: Fr(48 * nn(p) ** 2 + 36 * nn(p) - 30, 5), "(48n^2 + 36n - 30)/5"),
                C("m=8,n<=3", lambda p: mm(p) == 8 and nn(p) <= 3, lambda p: Fr(192 * nn(p) ** 2, 7), "192n^2/7"),
                C("m=8,n>3", lambda p: mm(p) == 8 and nn(p) > 3, lambda p: Fr(192 * nn(p) ** 2 + 16 * nn(p) - 56, 7), "(192n^2 + 16n - 56)/7"),
                C("m even, other", lambda p: even(p) and mm(p) not in (4, 6, 8), lambda p: Fr(
                    (4 * mm(p) ** 3 - 24 * mm(p) ** 2 + 32 * mm(p)) * nn(p) ** 2 + (mm(p) ** 3 - 14 * mm(p) ** 2 + 16 * mm(p)) * nn(p)
                    - 2 * mm(p) ** 2 + 6 * mm(p) - 4, 4 * (mm(p) - 1)),
                  "((4m^3 - 24m^2 + 32m)n^2 + (m^3 - 14m^2 + 16m)n - 2m^2 + 6m - 4)/(4(m - 1))"),
            ),
        },
    ))

    # F6: dihedral D_2m
    E.append(FormulaEntry(
        "F6", "dihedral D2m", "G = D2m, m > 2", ("m",),
        lambda p: isinstance(p["m"], int) and p["m"] > 2,
        {
            "E": (
                C("m odd", odd, lambda p: Fr(2 * mm(p) - 3), "2m - 3"),
                C("m even", even, lambda p: Fr(3 * mm(p) - 6), "3m - 6"),
            ),
            "LE": (
                C("m=3", lambda p: mm(p) == 3, lambda p: Fr(16, 5), "16/5"),
                C("m odd, m!=3", lambda p: odd(p) and mm(p) != 3,
                  lambda p: Fr(2 * (mm(p) + 1) * (mm(p) - 1) * (mm(p) - 2), 2 * mm(p) - 1), "2(m + 1)(m - 1)(m - 2)/(2m - 1)"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(7, 3), "7/3"),
                C("m=6", lambda p: mm(p) == 6, lambda p: Fr(72, 5), "72/5"),
                C("m=8", lambda p: mm(p) == 8, lambda p: Fr(230, 7), "230/7"),
                C("m even, other", lambda p: even(p) and mm(p) not in (4, 6, 8),
                  lambda p: Fr(mm(p) ** 3 - 5 * mm(p) ** 2 + 4 * mm(p) + 6, mm(p) - 1), "(m^3 - 5m^2 + 4m + 6)/(m - 1)"),
            ),
            "LEplus": (
                C("m=3", lambda p: mm(p) == 3, lambda p: Fr(16, 5), "16/5"),
                C("m odd, m!=3", lambda p: odd(p) and mm(p) != 3,
                  lambda p: Fr(3 * mm(p) ** 3 - 15 * mm(p) ** 2 + 11 * mm(p) - 1, 2 * mm(p) - 1), "(3m^3 - 15m^2 + 11m - 1)/(2m - 1)"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(6), "6"),
                C("m=6", lambda p: mm(p) == 6, lambda p: Fr(54, 5), "54/5"),
                C("m=8", lambda p: mm(p) == 8, lambda p: Fr(192, 7), "192/7"),
                C("m even, other", lambda p: even(p) and mm(p) not in (4, 6, 8),
                  lambda p: Fr(5 * mm(p) ** 3 - 40 * mm(p) ** 2 + 42 * mm(p) - 4, 4 * (mm(p) - 1)), "(5m^3 - 40m^2 + 42m - 4)/(4(m - 1))"),
            ),
        },
        note="For odd m the F4 energy at z = 1 is 2m - 4, one less than 2m - 3.",
    ))

    # F7: generalized quaternion Q_4m
    E.append(FormulaEntry(
        "F7", "dicyclic Q4m", "G = Q4m, m >= 2", ("m",),
        lambda p: isinstance(p["m"], int) and p["m"] >= 2,
        {
            "E": one(lambda p: Fr(6 * mm(p) - 6), "6m - 6"),
            "LE": (
                C("m=2", lambda p: mm(p) == 2, lambda p: Fr(6), "6"),
                C("m=3", lambda p: mm(p) == 3, lambda p: Fr(72, 5), "72/5"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(230, 7), "230/7"),
                C("m>=5", lambda p: mm(p) >= 5,
                  lambda p: Fr(8 * mm(p) ** 3 - 20 * mm(p) ** 2 + 8 * mm(p) + 6, 2 * mm(p) - 1), "(8m^3 - 20m^2 + 8m + 6)/(2m - 1)"),
            ),
            "LEplus": (
                C("m=2", lambda p: mm(p) == 2, lambda p: Fr(6), "6"),
                C("m=3", lambda p: mm(p) == 3, lambda p: Fr(54, 5), "54/5"),
                C("m=4", lambda p: mm(p) == 4, lambda p: Fr(192, 7), "192/7"),
                C("m>=5", lambda p: mm(p) >= 5,
                  lambda p: Fr(10 * mm(p) ** 3 - 40 * mm(p) ** 2 + 27 * mm(p) - 1, 2 * mm(p) - 1), "(10m^3 - 40m^2 + 27m - 1)/(2m - 1)"),
            ),
        },
    ))

    # F8: non-abelian of order pq
    def pq_dom(p):
        return is_prime(p["p"]) and is_prime(p["q"]) and (p["q"] - 1) % p["p"] == 0

    def P(p):
        return p["p"]

    def Q(p):
        return p["q"]

    E.append(FormulaEntry(
        "F8", "order pq", "G non-abelian of order pq, p | q - 1", ("p", "q"),
        pq_dom,
        {
            "E": one(lambda p: Fr(2 * Q(p) * (P(p) - 1) - 3), "2q(p - 1) - 3"),
            "LE": (
                C("p=2,q!=3", lambda p: P(p) == 2 and Q(p) != 3,
                  lambda p: Fr(Q(p) * (Q(p) ** 2 - 3 * Q(p) - 3 * P(p) * Q(p) ** 2 + 1), P(p) * Q(p) - 1),
                  "q(q^2 - 3q - 3pq^2 + 1)/(pq - 1)"),
                C("p=2,q=3", lambda p: P(p) == 2 and Q(p) == 3,
                  lambda p: Fr(2 * P(p) * Q(p) * (2 * P(p) * Q(p) - P(p) - Q(p) ** 2 - 3 * Q(p) + 1)
                               + Q(p) * (5 * Q(p) ** 2 - 6 * Q(p) + 4), P(p) * Q(p) - 1),
                  "(2pq(2pq - p - q^2 - 3q + 1) + q(5q^2 - 6q + 4))/(pq - 1)"),
                C("otherwise", lambda p: P(p) != 2,
                  lambda p: Fr(-2 * P(p) * Q(p) * (P(p) * Q(p) - 2 * P(p) - Q(p) ** 2 + 4)
                               - Q(p) * (3 * Q(p) ** 2 - 6 * Q(p) + 2) + 4, P(p) * Q(p) - 1),
                  "(-2pq(pq - 2p - q^2 + 4) - q(3q^2 - 6q + 2) + 4)/(pq - 1)"),
            ),
            "LEplus": (
                C("p=2,q=3", lambda p: P(p) == 2 and Q(p) == 3,
                  lambda p: Fr(2 * P(p) * Q(p) * (2 * Q(p) - P(p) - 1) - (2 * Q(p) ** 2 + 3 * Q(p) - 6), P(p) * Q(p) - 1),
                  "(2pq(2q - p - 1) - (2q^2 + 3q - 6))/(pq - 1)"),
                C("otherwise", lambda p: not (P(p) == 2 and Q(p) == 3),
                  lambda p: Fr(2 * P(p) ** 2 * Q(p) * (1 - Q(p)) + 2 * Q(p) ** 3 * (P(p) - 1)
                               + Q(p) * (2 * Q(p) - 2 * P(p) + 1) - 2, P(p) * Q(p) - 1),
                  "(2p^2q(1 - q) + 2q^3(p - 1) + q(2q - 2p + 1) - 2)/(pq - 1)"),
            ),
        },
        spectra=lambda p: (
            _spec((-1, P(p) * Q(p) - Q(p) - 1), (P(p) - 2, Q(p)), (Q(p) - 2, 1)),
            _spec((0, Q(p) + 1), (Q(p) - 1, Q(p) - 2), (P(p) - 1, P(p) * Q(p) - 2 * Q(p))),
            _spec((2 * Q(p) - 4, 1), (Q(p) - 3, Q(p) - 2), (2 * P(p) - 4, Q(p)), (P(p) - 3, P(p) * Q(p) - 2 * Q(p))),
        ),
    ))

    # F9: quasidihedral QD_2^n
    def t(p, e):
        return Fr(2) ** (e)

    E.append(FormulaEntry(
        "F9", "quasidihedral QD2^n", "G = QD of order 2^n, n >= 4", ("n",),
        lambda p: isinstance(p["n"], int) and p["n"] >= 4,
        {
            "E": one(lambda p: Fr(3 * (2 ** (nn(p) - 1) - 2)), "3(2^(n-1) - 2)"),
            "LE": one(lambda p: (t(p, 3 * nn(p) - 3) - 5 * t(p, 2 * nn(p) - 2) + 4 * t(p, nn(p) - 1) + 12) / (t(p, nn(p) - 1) - 1),
                      "(2^(3n-3) - 5*2^(2n-2) + 4*2^(n-1) + 12)/(2^(n-1) - 1)"),
            "LEplus": one(lambda p: (5 * t(p, 3 * nn(p) - 4) - 30 * t(p, 2 * nn(p) - 3) + 40 * t(p, nn(p) - 2)) / (t(p, nn(p) - 1) - 1),
                          "(5*2^(3n-4) - 30*2^(2n-3) + 40*2^(n-2))/(2^(n-1) - 1)"),
        },
        spectra=lambda p: (
            _spec((-1, 2 ** nn(p) - 2 ** (nn(p) - 2) - 3), (1, 2 ** (nn(p) - 2)), (2 ** (nn(p) - 1) - 3, 1)),
            _spec((0, 2 ** (nn(p) - 2) + 1), (2 ** (nn(p) - 1) - 2, 2 ** (nn(p) - 1) - 3), (2, 2 ** (nn(p) - 2))),
            _spec((2 ** nn(p) - 6, 1), (2 ** (nn(p) - 1) - 4, 2 ** (nn(p) - 1) - 3), (2, 2 ** (nn(p) - 2)), (0, 2 ** (nn(p) - 2))),
        ),
    ))

    # F10: PSL(2, 2^k)
    def kk(p):
        return p["k"]

    def f10_le(p):
        x = Fr(2) ** kk(p)
        return (2 * x**6 - 2 * x**5 - 8 * x**4 - 6 * x**3 + 6 * x**2 + 8 * x + 4) / (x**3 - x - 1)

    def f10_leplus_k2(p):
        x = Fr(2) ** kk(p)
        return (x**6 + x**5 - 3 * x**4 - 7 * x**3 + 4 * x + 4) / (x**3 - x - 1)

    def f10_spectra(p):
        x = 2 ** kk(p)
        h = 2 ** (kk(p) - 1)
        A = _spec((-1, x**3 - x**2 - 2 * x - 2), (x - 1, h * (x - 1)), (x - 2, x + 1), (x - 3, h * (x + 1)))
        L = _spec((0, x * x + x + 1), (x - 1, x * x - x - 2), (x - 2, h * (x * x - 2 * x - 3)), (x, h * (x * x - 2 * x + 1)))
        Q = _spec((2 * x - 4, x + 1), (x - 3, x * x - x - 2), (2 * x - 6, h * (x + 1)), (x - 4, h * (x * x - 2 * x - 3)),
                  (2 * x - 2, h * (x - 1)), (x - 2, h * (x * x - 2 * x + 1)))
        return A, L, Q

    E.append(FormulaEntry(
        "F10", "PSL(2,2^k)", "G = PSL(2, 2^k), k >= 2", ("k",),
        lambda p: isinstance(p["k"], int) and p["k"] >= 2,
        {
            "E": one(lambda p: Fr(2 ** (3 * kk(p) + 1) - 2 ** (2 * kk(p) + 1) - 2 ** (kk(p) + 2) - 4), "2^(3k+1) - 2^(2k+1) - 2^(k+2) - 4"),
            "LE": one(f10_le, "(2*2^6k - 2*2^5k - 8*2^4k - 6*2^3k + 6*2^2k + 8*2^k + 4)/(2^3k - 2^k - 1)"),
            "LEplus": (
                C("k=2", lambda p: kk(p) == 2, f10_leplus_k2, "(2^6k + 2^5k - 3*2^4k - 7*2^3k + 4*2^k + 4)/(2^3k - 2^k - 1)"),
                C("k>2", lambda p: kk(p) > 2, f10_le, "(2*2^6k - 2*2^5k - 8*2^4k - 6*2^3k + 6*2^2k + 8*2^k + 4)/(2^3k - 2^k - 1)"),
            ),
        },
        spectra=f10_spectra,
    ))

    # F11: GL(2, q)
    def f11_spectra(p):
        q = p["q"]
        A = _spec((-1, q**4 - q**3 - 2 * q * q - q), (q * q - 3 * q + 1, q * (q + 1) // 2),
                  (q * q - q - 1, q * (q - 1) // 2), (q * q - 2 * q, q + 1))
        L = _spec((0, q * q + q + 1), (q * q - 3 * q + 2, q * (q + 1) * (q * q - 3 * q + 1) // 2),
                  (q * q - q, q * (q - 1) * (q * q - q - 1) // 2), (q * q - 2 * q + 1, q * (q + 1) * (q - 2)))
        Q = _spec((2 * q * q - 6 * q - 2, q * (q + 1) // 2), (q * q - 3 * q, q * (q + 1) * (q * q - 3 * q + 1) // 2),
                  (2 * q * q - 2 * q - 2, q * (q - 1) // 2), (q * q - q - 2, q * (q - 1) * (q * q - q - 1) // 2),
                  (2 * q * q - 4 * q, q + 1), (q * q + 2 * q - 1, q * (q + 1) * (q - 2)))
        return A, L, Q

    def qq(p):
        return p["q"]

    E.append(FormulaEntry(
        "F11", "GL(2,q)", "G = GL(2, q), q = p^n > 2", ("q",),
        lambda p: isinstance(p["q"], int) and p["q"] > 2 and _is_prime_power(p["q"]),
        {
            "E": one(lambda p: Fr(2 * qq(p) ** 4 - 2 * qq(p) ** 3 - 8 * qq(p) ** 2 - 5 * qq(p), 2), "(2q^4 - 2q^3 - 8q^2 - 5q)/2"),
            "LE": one(lambda p: Fr(
                2 * qq(p) ** 9 - 6 * qq(p) ** 8 + 4 * qq(p) ** 7 + 8 * qq(p) ** 6 - 10 * qq(p) ** 5 + 4 * qq(p) ** 3 + 4 * qq(p) ** 2 - 8 * qq(p),
                2 * (qq(p) - 1) * (qq(p) ** 3 - qq(p) - 1)),
                "(2q^9 - 6q^8 + 4q^7 + 8q^6 - 10q^5 + 4q^3 + 4q^2 - 8q)/(2(q - 1)(q^3 - q - 1))"),
            "LEplus": one(lambda p: Fr(
                qq(p) ** 10 - 4 * qq(p) ** 9 + 10 * qq(p) ** 8 + 3 * qq(p) ** 7 - 23 * qq(p) ** 6 - 9 * qq(p) ** 5
                + 22 * qq(p) ** 4 + 10 * qq(p) ** 3 - 9 * qq(p) ** 2 - 4 * qq(p),
                2 * (qq(p) - 1) * (qq(p) ** 3 - qq(p) - 1)),
                "(q^10 - 4q^9 + 10q^8 + 3q^7 - 23q^6 - 9q^5 + 22q^4 + 10q^3 - 9q^2 - 4q)/(2(q - 1)(q^3 - q - 1))"),
        },
        spectra=f11_spectra,
    ))

    # F12a / F12b: the two unitriangular families over finite fields
    E.append(FormulaEntry(
        "F12a", "Hanaki U(a,b)", "U(a,b) over GF(2^n), n >= 2", ("n",),
        lambda p: isinstance(p["n"], int) and p["n"] >= 2,
        _regular(lambda p: Fr(2 * (2 ** nn(p) - 1) ** 2), "2(2^n - 1)^2"),
        spectra=lambda p: (
            _spec((-1, (2 ** nn(p) - 1) ** 2), (2 ** nn(p) - 1, 2 ** nn(p) - 1)),
            _spec((0, 2 ** nn(p) - 1), (2 ** nn(p), 2 ** (2 * nn(p)) - 2 ** (nn(p) + 1) + 1)),
            _spec((2 ** (nn(p) + 1) - 2, 2 ** nn(p) - 1), (2 ** nn(p) - 2, 2 ** (2 * nn(p)) - 2 ** (nn(p) + 1) + 1)),
        ),
    ))

    def f12b_spectra(p):
        x = p["p"] ** p["n"]
        big = x**3 - 2 * x - 1
        return (
            _spec((-1, big), (x * x - x - 1, x + 1)),
            _spec((0, x + 1), (x * x - x, big)),
            _spec((2 * x * x - 2 * x - 2, x + 1), (x * x - x - 2, big)),
        )

    E.append(FormulaEntry(
        "F12b", "Hanaki V(a,b,c)", "V(a,b,c) over GF(p^n)", ("p", "n"),
        _both(_prime("p"), _pos_int("n")),
        _regular(lambda p: Fr(2 * (p["p"] ** (3 * nn(p)) - 2 * p["p"] ** nn(p) - 1)), "2(p^3n - 2p^n - 1)"),
        spectra=f12b_spectra,
    ))

    # F13: 4-centralizer
    E.append(FormulaEntry(
        "F13", "4-centralizer", "G has exactly 4 distinct centralizers", ("z",),
        _pos_int("z"),
        _regular(lambda p: Fr(6 * p["z"] - 6), "6z - 6"),
    ))

    # F14: (p+2)-centralizer p-group
    E.append(FormulaEntry(
        "F14", "(p+2)-centralizer p-group", "G is a p-group with exactly p + 2 centralizers", ("p", "z"),
        _both(_prime("p"), _pos_int("z")),
        _regular(_f2_value, "2(p^2 - 1)z - 2(p + 1)"),
    ))

    # F15: 5-centralizer, two branches by the central quotient
    def zz(p):
        return p["z"]

    def is_el(p):
        return p["quotient"] == "Z3xZ3"

    def is_d6(p):
        return p["quotient"] == "D6"

    E.append(FormulaEntry(
        "F15", "5-centralizer", "G has exactly 5 centralizers (G/Z is Z3 x Z3 or D6)", ("z", "quotient"),
        lambda p: _pos_int("z")(p) and p["quotient"] in ("Z3xZ3", "D6"),
        {
            "E": (
                C("Z3xZ3", is_el, lambda p: Fr(16 * zz(p) - 8), "16z - 8"),
                C("D6", is_d6, lambda p: Fr(10 * zz(p) - 8), "10z - 8"),
            ),
            "LE": (
                C("Z3xZ3", is_el, lambda p: Fr(16 * zz(p) - 8), "16z - 8"),
                C("D6,z<=2", lambda p: is_d6(p) and zz(p) in (1, 2), lambda p: Fr(56 * zz(p) - 40, 5), "(56z - 40)/5"),
                C("D6,otherwise", lambda p: is_d6(p) and zz(p) > 2, lambda p: Fr(12 * zz(p) ** 2 + 11 * zz(p) - 10, 5), "(12z^2 + 11z - 10)/5"),
            ),
            "LEplus": (
                C("Z3xZ3", is_el, lambda p: Fr(16 * zz(p) - 8), "16z - 8"),
                C("D6,z=1", lambda p: is_d6(p) and zz(p) == 1, lambda p: Fr(16, 5), "16/5"),
                C("D6,otherwise", lambda p: is_d6(p) and zz(p) > 1, lambda p: Fr(12 * zz(p) ** 2 + 18 * zz(p) - 30, 5), "(12z^2 + 18z - 30)/5"),
            ),
        },
        note="The D6-branch LE coefficient 11z differs from 14z, the F4 case-3 form at m = 3.",
    ))

    # F16: Pr(G) = (p^2 + p - 1)/p^3
    E.append(FormulaEntry(
        "F16", "Pr = (p^2+p-1)/p^3", "p is the least prime dividing |G| and Pr(G) = (p^2 + p - 1)/p^3", ("p", "z"),
        _both(_prime("p"), _pos_int("z")),
        _regular(_f2_value, "2(p^2 - 1)z - 2(p + 1)"),
    ))

    # F17: Pr(G) = 5/8
    E.append(FormulaEntry(
        "F17", "Pr = 5/8", "Pr(G) = 5/8", ("z",),
        _pos_int("z"),
        _regular(lambda p: Fr(6 * p["z"] - 6), "6z - 6"),
    ))

    # F18: Pr(G) in a four-element set; only value sets are given
    E.append(FormulaEntry(
        "F18", "Pr in {5/14, 2/5, 11/27, 1/2}", "Pr(G) lies in {5/14, 2/5, 11/27, 1/2}", (),
        always,
        {q: one((lambda p, s=PR_SET_VALUES[q]: s), "{" + ", ".join(sorted(map(frac_str, PR_SET_VALUES[q]))) + "}")
         for q in QUANTITIES},
        set_valued=True,
    ))

    # F19 / F20: lists of groups with printed values
    E.append(FormulaEntry(
        "F19", "planar commuting graph", "G is one of the 17 groups with planar commuting graph", ("group",),
        lambda p: p["group"] in PLANAR_VALUES,
        _list_entry_cases(PLANAR_VALUES),
        spectra=_planar_spectra,
        statement_sets=PLANAR_SETS,
        note="The dihedral LE list in the derivation has 7 where the statement set has 16; the derivation list is used per group.",
    ))
    E.append(FormulaEntry(
        "F20", "toroidal commuting graph", "G is one of the 7 groups with toroidal commuting graph", ("group",),
        lambda p: p["group"] in TOROIDAL_VALUES,
        _list_entry_cases(TOROIDAL_VALUES),
        statement_sets=TOROIDAL_SETS,
    ))
    return tuple(E)


_REGISTRY = _build()
_BY_ID = {e.id.lower(): e for e in _REGISTRY}


def registry() -> list[FormulaEntry]:
    return list(_REGISTRY)


def entry(fid: str) -> FormulaEntry:
    try:
        return _BY_ID[fid.lower()]
    except KeyError:
        raise FormulaError(f"unknown formula id {fid!r}") from None


def evaluate(fid: str, params: Params) -> FormulaPrediction:
    e = entry(fid)
    if not e.applicable(params):
        raise InapplicableError(f"{e.id} does not apply to {dict(params)}")
    cases, values = {}, {}
    for q in QUANTITIES:
        hits = e.cases_for(q, params)
        if not hits:
            raise CaseGapError(f"{e.id} {q}: no printed case covers {dict(params)}")
        cases[q] = hits[0].label
        values[q] = hits[0].value(params)
    items = tuple(sorted((k, params[k]) for k in e.params))
    return FormulaPrediction(e.id, items, cases, values, e.statement_sets)


def _surd_root(s: Surd) -> IsolatedRoot:
    """Isolating interval for a + b*sqrt(c) with its integer minimal polynomial."""
    (b, c), = s.terms
    a = s.rational
    # (x - a)^2 - b^2 c, cleared of denominators
    coeffs = [a * a - b * b * c, -2 * a, Fr(1)]
    den = math.lcm(*(x.denominator for x in coeffs))
    poly = tuple(int(x * den) for x in coeffs)
    lo, hi = s.enclosure(SURD_WIDTH)
    return IsolatedRoot(poly, lo, hi)


def predicted_spectra(fid: str, params: Params) -> tuple[ExactSpectrum, ExactSpectrum, ExactSpectrum]:
    e = entry(fid)
    if e.spectra is None:
        raise FormulaError(f"{e.id} has no printed spectra")
    if not e.applicable(params):
        raise InapplicableError(f"{e.id} does not apply to {dict(params)}")
    out = []
    for kind, raw in zip(("adjacency", "laplacian", "signless"), e.spectra(params)):
        ints = {int(v): m for v, m in raw.items() if not isinstance(v, Surd)}
        roots = {_surd_root(v): m for v, m in raw.items() if isinstance(v, Surd)}
        out.append(make_spectrum(ints, roots, kind))
    return tuple(out)  # type: ignore[return-value]


def value_enclosure(v: Value, width: Fr = SURD_WIDTH) -> tuple[Fr, Fr]:
    if isinstance(v, Surd):
        return v.enclosure(width)
    return Fr(v), Fr(v)
