"""Exact spectra of integer symmetric matrices, plus a floating-point oracle.

The exact path never rounds: characteristic polynomials come from the
division-free Berkowitz recurrence over Python ints, integer eigenvalues are
peeled off by synthetic division, and whatever is left is split into
square-free layers (Yun) and irreducible factors whose real roots are isolated
with Sturm sequences into rational intervals.

Polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .commgraph import CliqueDecomposition, IntMatrix, clique_decomposition, commuting_graph, matrices
from .groups import FiniteGroup

DEFAULT_WIDTH = Fraction(1, 2**40)
EXACT_DIM_CAP = 1024
FLOAT_DIM_CAP = 4096

KIND_NAMES = {"A": "adjacency", "L": "laplacian", "Q": "signless", "D": "degree"}
_KIND_ALIASES = {
    "a": "adjacency", "adjacency": "adjacency",
    "l": "laplacian", "laplacian": "laplacian",
    "q": "signless", "signless": "signless",
}


def kind_name(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown spectrum kind {kind!r}") from None


# ---------------------------------------------------------------------------
# polynomial helpers
# ---------------------------------------------------------------------------

def poly_eval(poly: Sequence, x):
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def poly_to_str(poly: Sequence[int], var: str = "x") -> str:
    terms = []
    for e in range(len(poly) - 1, -1, -1):
        c = poly[e]
        if not c:
            continue
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        if mono and abs(c) == 1:
            coef = ""
        else:
            coef = str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, coef + mono))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])


def _strip(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: Sequence) -> list:
    return _strip([i * p[i] for i in range(1, len(p))])


def _divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _strip(a)
    return _strip(q), a


def _monic(p: Sequence) -> list:
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def _gcd(a: Sequence, b: Sequence) -> list:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a) if a else []


def _sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def square_free_layers(poly: Sequence[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm: poly = prod(layer**mult), layers square-free and coprime."""
    f = _monic(poly)
    if len(f) <= 1:
        return []
    fp = _deriv(f)
    a = _gcd(f, fp)
    b = _divmod(f, a)[0]
    d = _sub(_divmod(fp, a)[0], _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            out.append((_as_int_poly(a), i))
        b = _divmod(b, a)[0]
        d = _sub(_divmod(d, a)[0], _deriv(b))
        i += 1
    return out


def _as_int_poly(p: Sequence[Fraction]) -> list[int]:
    p = _monic(p)
    if any(c.denominator != 1 for c in p):
        raise ArithmeticError("monic factor of an integer polynomial has non-integer coefficients")
    return [int(c) for c in p]


def irreducible_factors(poly: Sequence[int]) -> list[list[int]]:
    """Split a monic square-free integer polynomial into monic irreducibles."""
    from sympy import Poly, symbols

    x = symbols("x")
    _, facs = Poly(list(reversed(poly)), x, domain="ZZ").factor_list()
    out = []
    for f, e in facs:
        assert e == 1, "input must be square-free"
        coeffs = [int(c) for c in reversed(f.all_coeffs())]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        out.append(coeffs)
    return sorted(out, key=lambda p: (len(p), p))


def root_bound(poly: Sequence[int]) -> int:
    """Power of two strictly above every root modulus (Fujiwara bound, rounded up)."""
    d = len(poly) - 1
    lead = abs(poly[-1])
    best = 1
    for i in range(1, d + 1):
        c = abs(poly[d - i])
        if c:
            bits = (-(-c // lead)).bit_length()
            best = max(best, 2 ** (-(-bits // i)))
    return 4 * best


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    coeffs: tuple[int, ...]  # low-to-high, monic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __str__(self) -> str:
        return poly_to_str(self.coeffs)


def berkowitz(rows: Sequence[Sequence[int]]) -> list[int]:
    """det(xI - M) by the Berkowitz recurrence; coefficients low-to-high."""
    n = len(rows)
    p = [1]  # high-to-low during the recurrence
    for k in range(n):
        a = rows[k][k]
        R = rows[k][:k]
        C = [rows[i][k] for i in range(k)]
        # first column of the Toeplitz factor: 1, -a, -R C, -R A C, ...
        col = [1, -a]
        v = C
        for _ in range(k):
            col.append(-sum(map(int.__mul__, R, v)))
            v = [sum(map(int.__mul__, rows[i][:k], v)) for i in range(k)]
        q = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(max(0, i - len(col) + 1), min(i, k) + 1):
                acc += col[i - j] * p[j]
            q[i] = acc
        p = q
    return list(reversed(p))


def char_poly(M: IntMatrix) -> CharPoly:
    if M.dim > EXACT_DIM_CAP:
        raise ValueError(f"dimension {M.dim} exceeds exact cap {EXACT_DIM_CAP}")
    return CharPoly(tuple(berkowitz(M.rows())))


# ---------------------------------------------------------------------------
# exact spectrum
# ---------------------------------------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def _sturm_chain(poly: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    chain = [list(map(Fraction, poly)), [Fraction(c) for c in _deriv(poly)]]
    while len(chain[-1]) > 1:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return tuple(tuple(c) for c in chain)


def sturm_count(poly: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] of a square-free polynomial."""
    chain = _sturm_chain(tuple(poly))

    def variations(x):
        signs = [s for s in (_sign(poly_eval(q, x)) for q in chain) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(lo) - variations(hi)


@dataclass(frozen=True)
class IsolatedRoot:
    """The unique root of an irreducible integer polynomial inside (lo, hi)."""

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint)

    def refine(self, width: Fraction) -> "IsolatedRoot":
        lo, hi = self.lo, self.hi
        s_lo = _sign(poly_eval(self.poly, lo))
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = _sign(poly_eval(self.poly, mid))
            if s_mid == 0:  # cannot happen for irreducible degree >= 2
                return IsolatedRoot(self.poly, mid, mid)
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        return IsolatedRoot(self.poly, lo, hi)

    def excluding(self, x: Fraction) -> "IsolatedRoot":
        """Refine until x lies outside the open interval."""
        r = self
        while r.lo < x < r.hi:
            r = r.refine(r.width / 2)
        return r

    def __str__(self) -> str:
        return f"root of {poly_to_str(self.poly)} in ({float(self.lo):.12g}, {float(self.hi):.12g})"


def isolate_real_roots(poly: Sequence[int], width: Fraction = DEFAULT_WIDTH) -> list[IsolatedRoot]:
    """Disjoint isolating intervals, ascending, for a square-free integer polynomial
    with no rational roots."""
    poly = tuple(poly)
    B = Fraction(root_bound(poly))
    found = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(poly, lo, hi)
        if n == 0:
            continue
        if n == 1:
            found.append(IsolatedRoot(poly, lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    found.sort(key=lambda r: r.lo)
    return [r.refine(width) for r in found]


Value = Union[int, IsolatedRoot]


def value_float(v: Value) -> float:
    return float(v) if isinstance(v, int) else float(v.midpoint)


@dataclass(frozen=True)
class ExactSpectrum:
    entries: tuple[tuple[Value, int], ...]  # descending by (midpoint) value
    kind: str

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v, _ in self.entries)

    def multiplicity(self, value: int) -> int:
        return sum(m for v, m in self.entries if isinstance(v, int) and v == value)

    def as_counter(self) -> Counter:
        if not self.is_integral():
            raise ValueError("spectrum has irrational entries")
        return Counter({v: m for v, m in self.entries})

    def floats(self) -> list[float]:
        """All eigenvalues with multiplicity, ascending."""
        return sorted(x for v, m in self.entries for x in [value_float(v)] * m)

    def refined(self, width: Fraction) -> "ExactSpectrum":
        return ExactSpectrum(
            tuple((v if isinstance(v, int) else v.refine(width), m) for v, m in self.entries),
            self.kind,
        )

    def trace_enclosure(self) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for v, m in self.entries:
            a, b = (v, v) if isinstance(v, int) else (v.lo, v.hi)
            lo += m * a
            hi += m * b
        return lo, hi

    def square_sum_enclosure(self) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for v, m in self.entries:
            if isinstance(v, int):
                lo += m * v * v
                hi += m * v * v
            else:
                a, b = v.lo, v.hi
                sq = sorted([a * a, b * b])
                lo += m * (0 if a < 0 < b else sq[0])
                hi += m * sq[1]
        return lo, hi

    def min_enclosure(self) -> Fraction:
        v = self.entries[-1][0]
        return Fraction(v) if isinstance(v, int) else v.lo

    def __str__(self) -> str:
        parts = []
        for v, m in self.entries:
            s = str(v) if isinstance(v, int) else f"[{poly_to_str(v.poly)}: {float(v.midpoint):.10g}]"
            parts.append(f"{s}^{m}")
        return "{" + ", ".join(parts) + "}"

    def to_json_obj(self) -> list[dict]:
        out = []
        for v, m in self.entries:
            if isinstance(v, int):
                out.append({"value": str(v), "mult": m})
            else:
                out.append({"value": {"poly": list(v.poly), "lo": frac_str(v.lo), "hi": frac_str(v.hi)}, "mult": m})
        return out


def frac_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def spectrum_from_json(obj: list[dict], kind: str) -> ExactSpectrum:
    entries = []
    for e in obj:
        v = e["value"]
        if isinstance(v, str):
            entries.append((int(v), int(e["mult"])))
        else:
            entries.append((IsolatedRoot(tuple(v["poly"]), Fraction(v["lo"]), Fraction(v["hi"])), int(e["mult"])))
    return ExactSpectrum(tuple(entries), kind)


def make_spectrum(ints: dict[int, int], roots: dict[IsolatedRoot, int], kind: str) -> ExactSpectrum:
    entries: list[tuple[Value, int]] = [(v, m) for v, m in ints.items() if m]
    entries += [(r, m) for r, m in roots.items() if m]
    entries.sort(key=lambda e: Fraction(e[0]) if isinstance(e[0], int) else e[0].midpoint, reverse=True)
    return ExactSpectrum(tuple(entries), kind_name(kind) if kind in _KIND_ALIASES or kind.lower() in _KIND_ALIASES else kind)


def integer_roots(poly: Sequence[int], bound: int | None = None) -> tuple[dict[int, int], list[int]]:
    """Peel off integer roots with multiplicity; returns (roots, deflated poly)."""
    p = list(poly)
    roots: dict[int, int] = {}
    zeros = 0
    while len(p) > 1 and p[0] == 0:
        p.pop(0)
        zeros += 1
    if zeros:
        roots[0] = zeros
    if len(p) <= 1:
        return roots, p
    B = root_bound(p) if bound is None else bound
    for cand in range(1, B + 1):
        for t in (cand, -cand):
            while len(p) > 1 and p[0] % t == 0 and poly_eval(p, t) == 0:
                p = _synthetic_div(p, t)
                roots[t] = roots.get(t, 0) + 1
        if len(p) <= 1:
            break
    return roots, p


def _synthetic_div(p: list[int], t: int) -> list[int]:
    # p low-to-high; divide by (x - t), exact
    n = len(p) - 1
    q = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = acc * t + p[i]
        q[i - 1] = acc
    assert acc * t + p[0] == 0
    return q


def _blocks(M: IntMatrix) -> list[list[int]]:
    """Index sets of the irreducible diagonal blocks (components of the off-diagonal pattern)."""
    n = M.dim
    nz = M.data != 0
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.flatnonzero(nz[i]):
                if not seen[j]:
                    seen[j] = True
                    stack.append(int(j))
        out.append(sorted(comp))
    return out


def gershgorin_bound(M: IntMatrix) -> int:
    return int(np.abs(M.data).sum(axis=1).max()) if M.dim else 0


def exact_spectrum(M: IntMatrix, width: Fraction = DEFAULT_WIDTH, split_blocks: bool = True) -> ExactSpectrum:
    """Exact spectrum of a symmetric integer matrix.

    With ``split_blocks`` the matrix is first cut into its irreducible diagonal
    blocks (a permutation similarity), and the characteristic polynomial of M
    is the product of the blocks' polynomials.
    """
    if not M.is_symmetric():
        raise ValueError("exact_spectrum needs a symmetric matrix")
    if M.dim > EXACT_DIM_CAP:
        raise ValueError(f"dimension {M.dim} exceeds exact cap {EXACT_DIM_CAP}")
    kind = KIND_NAMES.get(M.kind, M.kind)
    if M.dim == 0:
        return ExactSpectrum((), kind)
    blocks = _blocks(M) if split_blocks else [list(range(M.dim))]
    bound = gershgorin_bound(M)
    ints: Counter = Counter()
    residue = [1]
    cache: dict[bytes, tuple[dict[int, int], list[int]]] = {}
    for idx in blocks:
        sub = M.data[np.ix_(idx, idx)]
        key = sub.tobytes() + bytes(str(sub.shape), "ascii")
        if key not in cache:
            cache[key] = integer_roots(berkowitz(sub.tolist()), bound)
        r, rest = cache[key]
        ints.update(r)
        if len(rest) > 1:
            residue = _int_mul(residue, rest)
    roots: dict[IsolatedRoot, int] = {}
    if len(residue) > 1:
        for layer, mult in square_free_layers(residue):
            for fac in irreducible_factors(layer):
                for r in isolate_real_roots(fac, width):
                    roots[r] = roots.get(r, 0) + mult
    return make_spectrum(dict(ints), roots, kind)


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def clique_union_spectrum(sizes: Iterable[int], kind: str) -> ExactSpectrum:
    """Closed-form spectrum of a disjoint union of complete graphs K_a."""
    kind = kind_name(kind)
    acc: Counter = Counter()
    for a in sizes:
        if a < 1:
            raise ValueError("clique sizes must be >= 1")
        if kind == "adjacency":
            acc[a - 1] += 1
            acc[-1] += a - 1
        elif kind == "laplacian":
            acc[0] += 1
            acc[a] += a - 1
        else:
            acc[2 * a - 2] += 1
            acc[a - 2] += a - 1
    return make_spectrum(dict(acc), {}, kind)


def is_integral(S: ExactSpectrum) -> bool:
    return S.is_integral()


@dataclass(frozen=True)
class GraphSpectra:
    adjacency: ExactSpectrum
    laplacian: ExactSpectrum
    signless: ExactSpectrum

    def __iter__(self):
        return iter((self.adjacency, self.laplacian, self.signless))


def graph_spectra(G: FiniteGroup, width: Fraction = DEFAULT_WIDTH) -> GraphSpectra:
    graph = commuting_graph(G)
    A, _, L, Q = matrices(graph)
    return GraphSpectra(exact_spectrum(A, width), exact_spectrum(L, width), exact_spectrum(Q, width))


def integrality_flags(G: FiniteGroup) -> tuple[bool, bool, bool]:
    return tuple(S.is_integral() for S in graph_spectra(G))  # type: ignore[return-value]


def super_integral(G: FiniteGroup) -> bool:
    return all(integrality_flags(G))


# ---------------------------------------------------------------------------
# floating-point oracle
# ---------------------------------------------------------------------------

class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class FloatSpectrum:
    values: tuple[float, ...] = field(repr=False)  # ascending
    residual: float
    sweeps: int


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 rounds (n even) of n/2 disjoint pairs covering every pair once."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        half = n // 2
        p = np.array(players[:half])
        q = np.array(players[half:][::-1])
        rounds.append((np.minimum(p, q), np.maximum(p, q)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def float_eigensolve(M: IntMatrix, tol: float = 1e-13, max_sweeps: int = 60) -> FloatSpectrum:
    """Eigenvalues by parallel-ordered cyclic Jacobi rotations.

    Each round applies n/2 disjoint plane rotations at once, so a sweep costs
    n-1 vectorized row/column updates.
    """
    n = M.dim
    if n > FLOAT_DIM_CAP:
        raise ValueError(f"dimension {n} exceeds float cap {FLOAT_DIM_CAP}")
    if not M.is_symmetric():
        raise ValueError("float_eigensolve needs a symmetric matrix")
    if n == 0:
        return FloatSpectrum((), 0.0, 0)
    m = n + (n % 2)
    A = np.zeros((m, m))
    A[:n, :n] = M.data
    norm = max(np.linalg.norm(A), 1.0)
    rounds = _round_robin(m)

    def off(X):
        Y = X.copy()
        np.fill_diagonal(Y, 0.0)
        return float(np.linalg.norm(Y))

    sweeps = 0
    while off(A) > tol * norm:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for P, Q in rounds:
            apq = A[P, Q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            P, Q, apq = P[active], Q[active], apq[active]
            theta = (A[Q, Q] - A[P, P]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            Ap, Aq = A[P, :].copy(), A[Q, :].copy()
            A[P, :] = c[:, None] * Ap - s[:, None] * Aq
            A[Q, :] = s[:, None] * Ap + c[:, None] * Aq
            Ap, Aq = A[:, P].copy(), A[:, Q].copy()
            A[:, P] = Ap * c - Aq * s
            A[:, Q] = Ap * s + Aq * c
            A[P, Q] = 0.0
            A[Q, P] = 0.0
        sweeps += 1
    offdiag = A - np.diag(np.diag(A))
    # the padding index starts decoupled and rotations skip zero pivots, so
    # it stays an isolated zero on the diagonal
    vals = np.sort(np.diag(A)[:n])
    return FloatSpectrum(tuple(float(v) for v in vals), float(np.abs(offdiag).max(initial=0.0)), sweeps)


def max_float_deviation(S: ExactSpectrum, F: FloatSpectrum) -> float:
    exact = S.floats()
    if len(exact) != len(F.values):
        return math.inf
    return max((abs(a - b) for a, b in zip(exact, F.values)), default=0.0)


def clique_sizes_spectrum(decomp: CliqueDecomposition, kind: str) -> ExactSpectrum:
    if not decomp.present:
        raise ValueError("graph is not a clique union")
    return clique_union_spectrum(decomp.sizes, kind)


def graph_clique_spectra(G: FiniteGroup) -> GraphSpectra | None:
    d = clique_decomposition(commuting_graph(G))
    if not d.present:
        return None
    return GraphSpectra(*(clique_union_spectrum(d.sizes, k) for k in ("A", "L", "Q")))
