"""Finite fields GF(p^n) and the small matrix machinery used by the group constructors.

Field elements are plain ints in ``[0, p**n)``: the base-p digits of the label
are the coefficients (low to high) of a polynomial reduced modulo the field's
canonical modulus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

FIELD_CAP = 2**16

Mat2 = tuple[int, int, int, int]  # row-major (a, b, c, d)
Mat3 = tuple[int, int, int, int, int, int, int, int, int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**n; raises ValueError if q is not a prime power."""
    fs = prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, n = fs[0], 0
    while q > 1:
        q //= p
        n += 1
    return p, n


# -- polynomials over Z/p, coefficient lists low-to-high ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a by a monic m over Z/p."""
    r = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return _trim(r[:dm])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, d: int) -> Iterator[tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=d):
        yield low + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(poly, cand, p):
                return False
    return True


def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    # itertools.product varies the last slot fastest, so c0 is the most
    # significant key: lexicographic comparison low-to-high.
    for low in itertools.product(range(p), repeat=n):
        cand = low + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


@dataclass(frozen=True)
class FiniteField:
    p: int
    n: int
    modulus: tuple[int, ...]
    _exp: tuple[int, ...] = field(repr=False, compare=False)
    _log: tuple[int, ...] = field(repr=False, compare=False)
    _add: tuple[tuple[int, ...], ...] | None = field(repr=False, compare=False, default=None)

    @property
    def order(self) -> int:
        return self.p**self.n

    def elements(self) -> range:
        return range(self.order)

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        x = 0
        for c in reversed(ds):
            x = x * self.p + c % self.p
        return x

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self._add is not None:
            return self._add[x][y]
        return self.from_digits([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        return self.from_digits([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[x]) % (self.order - 1)]

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        return self._exp[(self._log[x] * k) % (self.order - 1)]

    def mult_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        k, y = 1, x
        while y != 1:
            y = self.mul(y, x)
            k += 1
        return k

    def __str__(self) -> str:
        return f"GF({self.p}^{self.n})"


def field_make(p: int, n: int = 1, cap: int = FIELD_CAP) -> FiniteField:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be positive")
    q = p**n
    if q > cap:
        raise ValueError(f"field order {q} exceeds cap {cap}")
    mod = canonical_modulus(p, n)

    def to_poly(x: int) -> list[int]:
        ds = []
        for _ in range(n):
            x, r = divmod(x, p)
            ds.append(r)
        return _trim(ds)

    def to_int(poly: Sequence[int]) -> int:
        x = 0
        for c in reversed(poly):
            x = x * p + c
        return x

    def pmul(a: int, b: int) -> int:
        return to_int(_poly_mod(_poly_mul(to_poly(a), to_poly(b), p), mod, p))

    def ppow(a: int, k: int) -> int:
        r, b = 1, a
        while k:
            if k & 1:
                r = pmul(r, b)
            b = pmul(b, b)
            k >>= 1
        return r

    if q == 2:
        gen = 1
    else:
        factors = prime_factors(q - 1)
        gen = next(
            g for g in range(2, q) if all(ppow(g, (q - 1) // f) != 1 for f in factors)
        )
    exp = [1] * (q - 1)
    log = [0] * q
    x = 1
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = pmul(x, gen)
    add = None
    if p != 2 and q <= 256:
        def padd(a: int, b: int) -> int:
            out, scale = 0, 1
            for _ in range(n):
                a, ra = divmod(a, p)
                b, rb = divmod(b, p)
                out += ((ra + rb) % p) * scale
                scale *= p
            return out

        add = tuple(tuple(padd(a, b) for b in range(q)) for a in range(q))
    return FiniteField(p, n, mod, tuple(exp), tuple(log), add)


def frobenius(F: FiniteField, x: int) -> int:
    """x -> x^2; a field automorphism in characteristic 2."""
    return F.mul(x, x)


# -- 2x2 and 3x3 matrices over a field ---------------------------------------

def mat2_mul(F: FiniteField, A: Mat2, B: Mat2) -> Mat2:
    a, b, c, d = A
    e, f, g, h = B
    m, s = F.mul, F.add
    return (s(m(a, e), m(b, g)), s(m(a, f), m(b, h)), s(m(c, e), m(d, g)), s(m(c, f), m(d, h)))


def mat2_det(F: FiniteField, A: Mat2) -> int:
    a, b, c, d = A
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat3_mul(F: FiniteField, A: Mat3, B: Mat3) -> Mat3:
    out = []
    for i in range(3):
        for j in range(3):
            acc = 0
            for k in range(3):
                acc = F.add(acc, F.mul(A[3 * i + k], B[3 * k + j]))
            out.append(acc)
    return tuple(out)  # type: ignore[return-value]


def mat_label(F: FiniteField, A: Sequence[int], size: int) -> str:
    rows = [",".join(str(A[size * i + j]) for j in range(size)) for i in range(size)]
    return "[" + ";".join(rows) + "]"


def gl2_enumerate(F: FiniteField, cap: int | None = None) -> list[Mat2]:
    """All invertible 2x2 matrices, ordered row-major by field index."""
    q = F.order
    if cap is not None and (q * q - 1) * (q * q - q) > cap:
        raise ValueError(f"GL(2,{q}) exceeds order cap {cap}")
    return [A for A in itertools.product(range(q), repeat=4) if mat2_det(F, A) != 0]


def sl2_enumerate(F: FiniteField, cap: int | None = None) -> list[Mat2]:
    q = F.order
    if cap is not None and q**3 - q > cap:
        raise ValueError(f"SL(2,{q}) exceeds order cap {cap}")
    return [A for A in itertools.product(range(q), repeat=4) if mat2_det(F, A) == 1]
