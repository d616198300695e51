"""Finite groups as explicit multiplication tables.

Every family the energy results talk about has a constructor here. A group is
built once, validated (Latin square, identity, inverses, associativity) and is
immutable afterwards; everything else (centers, centralizers, quotients) is a
pure function of the table.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, fields
from fractions import Fraction
from functools import cached_property
from typing import Callable, ClassVar, Hashable, NamedTuple, Sequence

import numpy as np

from .algebra import (
    field_make,
    frobenius,
    gl2_enumerate,
    is_prime,
    mat2_mul,
    mat_label,
    prime_power,
    sl2_enumerate,
)

DEFAULT_MAX_ORDER = 2048
EXHAUSTIVE_ASSOC_LIMIT = 512
ASSOC_SAMPLES = 100_000


class GroupError(ValueError):
    pass


class InvalidParameters(GroupError):
    pass


class OrderCapExceeded(GroupError):
    pass


class DescriptorError(GroupError):
    pass


# ---------------------------------------------------------------------------
# family specs
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, type["FamilySpec"]] = {}


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one group family; validated on construction."""

    family: ClassVar[str] = ""

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        if cls.family:
            _REGISTRY[cls.family.lower()] = cls

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        pass

    @property
    def order(self) -> int:
        raise NotImplementedError

    def params(self) -> dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def descriptor(self) -> str:
        ps = self.params()
        if not ps:
            return self.family
        body = ",".join(f"{k}={v.descriptor() if isinstance(v, FamilySpec) else v}"
                        for k, v in ps.items())
        return f"{self.family}:{body}"

    def __str__(self) -> str:
        return self.descriptor()

    def construct(self) -> "FiniteGroup":
        raise NotImplementedError


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameters(msg)


@dataclass(frozen=True)
class Cyclic(FamilySpec):
    family: ClassVar[str] = "cyclic"
    n: int

    def validate(self):
        _need(self.n >= 1, "cyclic: n >= 1")

    @property
    def order(self):
        return self.n

    def construct(self):
        i = np.arange(self.n)
        table = (i[:, None] + i[None, :]) % self.n
        labels = [_word(("c", k)) for k in range(self.n)]
        return _finish(self, table, labels)


@dataclass(frozen=True)
class Dihedral(FamilySpec):
    """D_{2m} = <a, b | a^m = b^2 = 1, b a b^-1 = a^-1>, order 2m."""

    family: ClassVar[str] = "dihedral"
    m: int

    def validate(self):
        _need(self.m >= 3, "dihedral: m >= 3")

    @property
    def order(self):
        return 2 * self.m

    def construct(self):
        return _split_metacyclic(self, self.m, 2, -1)


@dataclass(frozen=True)
class Dicyclic(FamilySpec):
    """Q_{4m} = <x, y | y^{2m} = 1, x^2 = y^m, x y x^-1 = y^-1>, order 4m."""

    family: ClassVar[str] = "dicyclic"
    m: int

    def validate(self):
        _need(self.m >= 2, "dicyclic: m >= 2")

    @property
    def order(self):
        return 4 * self.m

    def construct(self):
        m2 = 2 * self.m
        elems = [(i, j) for i in range(m2) for j in range(2)]

        def mul(u, v):
            (i, j), (k, l) = u, v
            if j == 0:
                return ((i + k) % m2, l)
            # x y^k = y^-k x, and x^2 = y^m
            if l == 0:
                return ((i - k) % m2, 1)
            return ((i - k + self.m) % m2, 0)

        labels = [_word(("y", i), ("x", j)) for i, j in elems]
        return _from_law(self, elems, mul, labels)


@dataclass(frozen=True)
class Metacyclic(FamilySpec):
    """M_{2mn} = <a, b | a^m = b^{2n} = 1, b a b^-1 = a^-1>."""

    family: ClassVar[str] = "metacyclic"
    m: int
    n: int

    def validate(self):
        _need(self.m > 2, "metacyclic: m > 2")
        _need(self.n >= 1, "metacyclic: n >= 1")

    @property
    def order(self):
        return 2 * self.m * self.n

    def construct(self):
        return _split_metacyclic(self, self.m, 2 * self.n, -1)


@dataclass(frozen=True)
class Quasidihedral(FamilySpec):
    """QD_{2^n} = <a, b | a^{2^{n-1}} = b^2 = 1, b a b^-1 = a^{2^{n-2}-1}>."""

    family: ClassVar[str] = "quasidihedral"
    n: int

    def validate(self):
        _need(self.n >= 4, "quasidihedral: n >= 4")

    @property
    def order(self):
        return 2**self.n

    def construct(self):
        return _split_metacyclic(self, 2 ** (self.n - 1), 2, 2 ** (self.n - 2) - 1)


def frobenius_multiplier(p: int, q: int) -> int:
    """Smallest t > 1 of multiplicative order p modulo q."""
    for t in range(2, q):
        if pow(t, p, q) == 1:
            return t
    raise InvalidParameters(f"no element of order {p} mod {q}")


@dataclass(frozen=True)
class FrobeniusPQ(FamilySpec):
    """Non-abelian group of order pq, p | q-1: <a, b | a^q = b^p = 1, b a b^-1 = a^t>."""

    family: ClassVar[str] = "frobenius"
    p: int
    q: int

    def validate(self):
        _need(is_prime(self.p) and is_prime(self.q), "frobenius: p, q prime")
        _need((self.q - 1) % self.p == 0, f"frobenius: p={self.p} must divide q-1={self.q - 1}")

    @property
    def order(self):
        return self.p * self.q

    def construct(self):
        return _split_metacyclic(self, self.q, self.p, frobenius_multiplier(self.p, self.q))


@dataclass(frozen=True)
class Suzuki2(FamilySpec):
    """Sz(2) = <a, b | a^5 = b^4 = 1, b^-1 a b = a^2>, order 20."""

    family: ClassVar[str] = "suzuki2"

    @property
    def order(self):
        return 20

    def construct(self):
        # b^-1 a b = a^2  <=>  b a b^-1 = a^3
        return _split_metacyclic(self, 5, 4, 3)


@dataclass(frozen=True)
class Modular16(FamilySpec):
    """M_16 = <a, b | a^8 = b^2 = 1, b a b = a^5>."""

    family: ClassVar[str] = "m16"

    @property
    def order(self):
        return 16

    def construct(self):
        return _split_metacyclic(self, 8, 2, 5)


@dataclass(frozen=True)
class CentralProductD8Z4(FamilySpec):
    """D_8 * Z_4 = <a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, ac = ca, bc = a^2 cb>."""

    family: ClassVar[str] = "d8z4"

    @property
    def order(self):
        return 16

    def construct(self):
        elems = list(itertools.product(range(4), range(2), range(2)))

        def mul(u, v):
            (i, j, k), (i2, j2, k2) = u, v
            # a is central; c b = a^2 b c
            return ((i + i2 + 2 * k * j2) % 4, (j + j2) % 2, (k + k2) % 2)

        labels = [_word(("a", i), ("b", j), ("c", k)) for i, j, k in elems]
        return _from_law(self, elems, mul, labels)


@dataclass(frozen=True)
class SmallGroup16_3(FamilySpec):
    """(Z_4 x Z_2) : Z_2 with c a c^-1 = a b, b central (SmallGroup(16,3))."""

    family: ClassVar[str] = "sg16_3"

    @property
    def order(self):
        return 16

    def construct(self):
        elems = list(itertools.product(range(4), range(2), range(2)))

        def mul(u, v):
            (x, y, z), (x2, y2, z2) = u, v
            return ((x + x2) % 4, (y + y2 + z * x2) % 2, (z + z2) % 2)

        labels = [_word(("a", x), ("b", y), ("c", z)) for x, y, z in elems]
        return _from_law(self, elems, mul, labels)


@dataclass(frozen=True)
class PSL2(FamilySpec):
    """PSL(2, 2^k) = SL(2, 2^k)."""

    family: ClassVar[str] = "psl2"
    k: int

    def validate(self):
        _need(self.k >= 1, "psl2: k >= 1")

    @property
    def order(self):
        q = 2**self.k
        return q**3 - q

    def construct(self):
        F = field_make(2, self.k)
        return _matrix_group(self, F, sl2_enumerate(F))


@dataclass(frozen=True)
class GL2(FamilySpec):
    family: ClassVar[str] = "gl2"
    p: int
    n: int = 1

    def validate(self):
        _need(is_prime(self.p), "gl2: p prime")
        _need(self.n >= 1, "gl2: n >= 1")

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def order(self):
        q = self.q
        return (q * q - 1) * (q * q - q)

    def construct(self):
        F = field_make(self.p, self.n)
        return _matrix_group(self, F, gl2_enumerate(F))


@dataclass(frozen=True)
class SpecialLinear23(FamilySpec):
    family: ClassVar[str] = "sl23"

    @property
    def order(self):
        return 24

    def construct(self):
        F = field_make(3, 1)
        return _matrix_group(self, F, sl2_enumerate(F))


@dataclass(frozen=True)
class HanakiU(FamilySpec):
    """U(a, b) over GF(2^n) with U(a,b)U(a',b') = U(a+a', b+b'+a'*a^2)."""

    family: ClassVar[str] = "hanakiU"
    n: int

    def validate(self):
        _need(self.n >= 1, "hanakiU: n >= 1")

    @property
    def order(self):
        return 4**self.n

    def construct(self):
        F = field_make(2, self.n)
        elems = [(a, b) for a in F.elements() for b in F.elements()]

        def mul(u, v):
            (a, b), (a2, b2) = u, v
            return (F.add(a, a2), F.add(F.add(b, b2), F.mul(a2, frobenius(F, a))))

        labels = [mat_label(F, hanaki_u_matrix(F, a, b), 3) for a, b in elems]
        return _from_law(self, elems, mul, labels)


@dataclass(frozen=True)
class HanakiV(FamilySpec):
    """V(a, b, c) over GF(p^n) with V(a,b,c)V(a',b',c') = V(a+a', b+b'+c a', c+c')."""

    family: ClassVar[str] = "hanakiV"
    p: int
    n: int = 1

    def validate(self):
        _need(is_prime(self.p), "hanakiV: p prime")
        _need(self.n >= 1, "hanakiV: n >= 1")

    @property
    def order(self):
        return self.p ** (3 * self.n)

    def construct(self):
        F = field_make(self.p, self.n)
        q = F.order
        elems = list(itertools.product(range(q), repeat=3))

        def mul(u, v):
            (a, b, c), (a2, b2, c2) = u, v
            return (F.add(a, a2), F.add(F.add(b, b2), F.mul(c, a2)), F.add(c, c2))

        labels = [mat_label(F, hanaki_v_matrix(F, a, b, c), 3) for a, b, c in elems]
        return _from_law(self, elems, mul, labels)


def hanaki_u_matrix(F, a: int, b: int):
    return (1, 0, 0, a, 1, 0, b, frobenius(F, a), 1)


def hanaki_v_matrix(F, a: int, b: int, c: int):
    return (1, 0, 0, a, 1, 0, b, c, 1)


def _perm_group(spec: FamilySpec, perms: list[tuple[int, ...]]) -> "FiniteGroup":
    labels = ["[" + " ".join(map(str, p)) + "]" for p in perms]
    return _from_law(spec, perms, lambda p, q: tuple(p[i] for i in q), labels)


def _is_even(p: Sequence[int]) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


@dataclass(frozen=True)
class SymmetricS4(FamilySpec):
    family: ClassVar[str] = "s4"

    @property
    def order(self):
        return 24

    def construct(self):
        return _perm_group(self, list(itertools.permutations(range(4))))


@dataclass(frozen=True)
class AlternatingA4(FamilySpec):
    family: ClassVar[str] = "a4"

    @property
    def order(self):
        return 12

    def construct(self):
        return _perm_group(self, [p for p in itertools.permutations(range(4)) if _is_even(p)])


@dataclass(frozen=True)
class AlternatingA5(FamilySpec):
    family: ClassVar[str] = "a5"

    @property
    def order(self):
        return 60

    def construct(self):
        return _perm_group(self, [p for p in itertools.permutations(range(5)) if _is_even(p)])


@dataclass(frozen=True)
class DirectProductWithCyclic(FamilySpec):
    family: ClassVar[str] = "product"
    inner: FamilySpec
    k: int

    def validate(self):
        _need(isinstance(self.inner, FamilySpec), "product: inner must be a family spec")
        _need(self.k >= 1, "product: k >= 1")

    @property
    def order(self):
        return self.inner.order * self.k

    def construct(self):
        return direct_product_cyclic(self.inner.construct(), self.k, spec=self)


@dataclass(frozen=True)
class ElementaryWitness(FamilySpec):
    """Center of order z, central quotient Z_p x Z_p: HanakiV(p,1) x Z_{z/p}."""

    family: ClassVar[str] = "elementary"
    p: int
    z: int

    def validate(self):
        _need(is_prime(self.p), "elementary: p prime")
        _need(self.z >= self.p and self.z % self.p == 0, "elementary: p must divide z")

    @property
    def order(self):
        return self.p**2 * self.z

    def construct(self):
        return direct_product_cyclic(HanakiV(self.p, 1).construct(), self.z // self.p, spec=self)


# ---------------------------------------------------------------------------
# the group object
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: np.ndarray = field(repr=False)
    identity: int
    labels: tuple[str, ...] = field(repr=False)
    family: FamilySpec | None = None
    name: str = ""

    def __post_init__(self):
        self.table.setflags(write=False)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == self.identity, axis=1)

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        r = self.identity
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    @cached_property
    def commute(self) -> np.ndarray:
        """Boolean matrix: commute[i, j] iff g_i g_j = g_j g_i."""
        c = self.table == self.table.T
        c.setflags(write=False)
        return c

    def is_abelian(self) -> bool:
        return bool(self.commute.all())

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "labels": list(self.labels),
            "table": self.table.tolist(),
        }


@dataclass(frozen=True, eq=False)
class Subset:
    group: FiniteGroup
    indices: tuple[int, ...]

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, x):
        return x in self.indices

    def __eq__(self, other):
        return isinstance(other, Subset) and other.group is self.group and other.indices == self.indices

    def __hash__(self):
        return hash(self.indices)


def _word(*parts: tuple[str, int]) -> str:
    out = []
    for sym, e in parts:
        if e == 1:
            out.append(sym)
        elif e:
            out.append(f"{sym}^{e}")
    return " ".join(out) or "1"


def _split_metacyclic(spec: FamilySpec, ma: int, mb: int, r: int) -> FiniteGroup:
    """<a, b | a^ma = b^mb = 1, b a b^-1 = a^r>, elements a^i b^j ordered by (i, j)."""
    r %= ma
    assert pow(r, mb, ma) == 1 % ma, "b-conjugation must have order dividing mb"
    i = np.repeat(np.arange(ma), mb)
    j = np.tile(np.arange(mb), ma)
    rpow = np.array([pow(r, e, ma) for e in range(mb)])
    ri = (i[:, None] + rpow[j][:, None] * i[None, :]) % ma
    rj = (j[:, None] + j[None, :]) % mb
    table = ri * mb + rj
    labels = [_word(("a", int(x)), ("b", int(y))) for x, y in zip(i, j)]
    return _finish(spec, table, labels)


def _from_law(spec: FamilySpec, elems: Sequence[Hashable], mul: Callable, labels: Sequence[str]) -> FiniteGroup:
    index = {e: n for n, e in enumerate(elems)}
    table = np.empty((len(elems), len(elems)), dtype=np.int32)
    for a_i, a in enumerate(elems):
        row = table[a_i]
        for b_i, b in enumerate(elems):
            row[b_i] = index[mul(a, b)]
    return _finish(spec, table, labels)


def _matrix_group(spec: FamilySpec, F, mats: list) -> FiniteGroup:
    labels = [mat_label(F, A, 2) for A in mats]
    return _from_law(spec, mats, lambda A, B: mat2_mul(F, A, B), labels)


def direct_product_cyclic(G: FiniteGroup, k: int, spec: FamilySpec | None = None) -> FiniteGroup:
    """G x Z_k with element (g, c) at index g*k + c."""
    n = G.order
    g = np.repeat(np.arange(n), k)
    c = np.tile(np.arange(k), n)
    table = G.table[g[:, None], g[None, :]].astype(np.int64) * k + (c[:, None] + c[None, :]) % k
    labels = [f"({G.labels[x]}, {_word(('c', int(y)))})" for x, y in zip(g, c)]
    return _finish(spec, table, labels, name=None if spec else f"{G.name} x Z{k}")


def _finish(spec, table, labels, name=None) -> FiniteGroup:
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    ident = np.flatnonzero((table == np.arange(n)).all(axis=1))
    if len(ident) != 1:
        raise GroupError("table has no unique left identity")
    G = FiniteGroup(
        order=n,
        table=table,
        identity=int(ident[0]),
        labels=tuple(labels),
        family=spec,
        name=name or (spec.descriptor() if spec else ""),
    )
    validate_group(G)
    return G


def validate_group(G: FiniteGroup, seed: int = 0) -> None:
    """Check the group axioms on the table; raises GroupError on failure."""
    T = G.table
    n = G.order
    ar = np.arange(n)
    if T.shape != (n, n) or T.min() < 0 or T.max() >= n:
        raise GroupError("table entries out of range")
    if not (np.sort(T, axis=1) == ar).all() or not (np.sort(T, axis=0) == ar[:, None]).all():
        raise GroupError("table is not a Latin square")
    e = G.identity
    if not ((T[e] == ar).all() and (T[:, e] == ar).all()):
        raise GroupError("identity is not two-sided")
    inv = G.inverses
    if not ((T[ar, inv] == e).all() and (T[inv, ar] == e).all()):
        raise GroupError("missing two-sided inverses")
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        for i in range(n):
            # (g_i g_j) g_k  vs  g_i (g_j g_k) for all j, k
            if not (T[T[i]] == T[i][T]).all():
                raise GroupError("table is not associative")
    else:
        rng = np.random.default_rng(seed)
        i, j, k = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
        if not (T[T[i, j], k] == T[i, T[j, k]]).all():
            raise GroupError("table is not associative")


def build(spec: FamilySpec, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if spec.order > max_order:
        raise OrderCapExceeded(f"{spec.descriptor()} has order {spec.order} > cap {max_order}")
    return spec.construct()


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

_ALIASES = {
    "hanakiu": "hanakiU",
    "hanakiv": "hanakiV",
    "qd": "quasidihedral",
    "sz2": "suzuki2",
    "sl2_3": "sl23",
}


def parse_descriptor(text: str) -> FamilySpec:
    """Parse e.g. ``dihedral:m=6``, ``gl2:q=4``, ``product:inner=dihedral:m=3,k=3``."""
    text = text.strip()
    name, _, body = text.partition(":")
    key = name.strip().lower()
    key = _ALIASES.get(key, key).lower()
    cls = _REGISTRY.get(key)
    if cls is None:
        raise DescriptorError(f"unknown group family {name!r}")
    kwargs: dict[str, object] = {}
    if cls is DirectProductWithCyclic:
        m = re.fullmatch(r"inner=(.+),k=(\d+)", body.strip())
        if not m:
            raise DescriptorError(f"product descriptor needs 'inner=...,k=N': {text!r}")
        kwargs = {"inner": parse_descriptor(m.group(1)), "k": int(m.group(2))}
    elif body.strip():
        for part in body.split(","):
            k, eq, v = part.partition("=")
            if not eq:
                raise DescriptorError(f"malformed parameter {part!r} in {text!r}")
            try:
                kwargs[k.strip()] = int(v)
            except ValueError:
                raise DescriptorError(f"parameter {k.strip()} must be an integer in {text!r}") from None
    if cls is GL2 and "q" in kwargs:
        try:
            p, n = prime_power(int(kwargs.pop("q")))
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
        kwargs.update(p=p, n=n)
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise DescriptorError(f"bad parameters for {cls.family}: {exc}") from None


def family_names() -> list[str]:
    return sorted(c.family for c in _REGISTRY.values())


# ---------------------------------------------------------------------------
# centers, centralizers, quotients
# ---------------------------------------------------------------------------

def center(G: FiniteGroup) -> Subset:
    return Subset(G, tuple(int(i) for i in np.flatnonzero(G.commute.all(axis=1))))


def centralizer(G: FiniteGroup, x: int) -> Subset:
    if not 0 <= x < G.order:
        raise IndexError(f"element index {x} out of range for order {G.order}")
    return Subset(G, tuple(int(i) for i in np.flatnonzero(G.commute[x])))


def centralizer_count(G: FiniteGroup) -> int:
    return len({row.tobytes() for row in G.commute})


def commutativity_degree(G: FiniteGroup) -> Fraction:
    return Fraction(int(G.commute.sum()), G.order**2)


def central_quotient(G: FiniteGroup) -> FiniteGroup:
    Z = np.array(center(G).indices)
    coset_of = np.full(G.order, -1)
    reps = []
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[G.table[g, Z]] = len(reps)
            reps.append(g)
    reps_a = np.array(reps)
    table = coset_of[G.table[reps_a[:, None], reps_a[None, :]]]
    labels = [f"{G.labels[r]} Z" for r in reps]
    return _finish(None, table, labels, name=f"{G.name}/Z")


class QuotientType(NamedTuple):
    kind: str  # "elem_abelian" | "dihedral" | "suzuki2" | "other"
    param: int | None = None

    def __str__(self):
        if self.kind == "elem_abelian":
            return f"Z{self.param} x Z{self.param}"
        if self.kind == "dihedral":
            return f"D{2 * self.param}"
        if self.kind == "suzuki2":
            return "Sz(2)"
        return "other"


def classify_small(Q: FiniteGroup) -> QuotientType:
    """Recognize Z_p x Z_p, D_{2m} (m >= 3) or Sz(2) by brute-force generator search."""
    n = Q.order
    orders = [Q.element_order(x) for x in range(n)]
    root = int(round(n**0.5))
    if root * root == n and is_prime(root) and all(o in (1, root) for o in orders):
        return QuotientType("elem_abelian", root)
    if n % 2 == 0 and n >= 6:
        m = n // 2
        for r in range(n):
            if orders[r] != m:
                continue
            cyc = {Q.power(r, k) for k in range(m)}
            r_inv = Q.inv(r)
            for s in range(n):
                if s in cyc or orders[s] != 2:
                    continue
                if Q.mul(Q.mul(s, r), s) == r_inv:
                    return QuotientType("dihedral", m)
            # in D_{2m} with m >= 3 every element of order m is a rotation,
            # so the first one decides
            break
    if n == 20:
        for a in range(n):
            if orders[a] != 5:
                continue
            a2 = Q.mul(a, a)
            for b in range(n):
                if orders[b] == 4 and Q.mul(Q.mul(Q.inv(b), a), b) == a2:
                    return QuotientType("suzuki2")
    return QuotientType("other")


def recognize_quotient(G: FiniteGroup) -> QuotientType:
    return classify_small(central_quotient(G))
