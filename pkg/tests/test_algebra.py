import itertools

import pytest
from hypothesis import given, strategies as st

from commenergy.algebra import (
    canonical_modulus,
    field_make,
    frobenius,
    gl2_enumerate,
    is_irreducible,
    is_prime,
    mat2_det,
    mat2_mul,
    mat3_mul,
    prime_factors,
    prime_power,
    sl2_enumerate,
)

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4), (7, 1), (3, 3)]


def test_small_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(360) == [2, 3, 5]
    assert prime_power(9) == (3, 2)
    with pytest.raises(ValueError):
        prime_power(12)


def test_prime_field_modulus_is_x():
    F = field_make(2, 1)
    assert F.order == 2
    assert F.modulus == (0, 1)


def test_gf4_elements_fixed_by_fourth_power():
    F = field_make(2, 2)
    assert F.order == 4
    assert all(F.pow(x, 4) == x for x in F.elements())


def test_gf9_has_generator_of_order_8():
    F = field_make(3, 2)
    assert max(F.mult_order(x) for x in range(1, 9)) == 8


def test_canonical_modulus_is_lex_smallest():
    for p, n in [(2, 2), (2, 3), (3, 2)]:
        mod = canonical_modulus(p, n)
        assert is_irreducible(mod, p)
        for cand in itertools.product(range(p), repeat=n):
            cand = tuple(cand) + (1,)
            if cand == mod:
                break
            assert not is_irreducible(cand, p)


@pytest.mark.parametrize("p,n", FIELDS)
def test_field_axioms(p, n):
    F = field_make(p, n)
    q = F.order
    elems = list(F.elements())
    assert q == p**n
    for x in range(1, q):
        assert F.mul(F.inv(x), x) == 1
    if q <= 64:
        for a, b, c in itertools.product(elems, repeat=3):
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@given(st.sampled_from([(2, 5), (3, 4), (5, 2), (11, 1), (2, 8)]), st.data())
def test_field_distributive_sampled(pn, data):
    F = field_make(*pn)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a


def test_field_errors():
    with pytest.raises(ValueError):
        field_make(4, 1)
    with pytest.raises(ValueError):
        field_make(2, 17)


def test_frobenius():
    for n in (1, 2, 3):
        F = field_make(2, n)
        assert frobenius(F, 0) == 0 and frobenius(F, 1) == 1
        for x, y in itertools.product(F.elements(), repeat=2):
            assert frobenius(F, F.add(x, y)) == F.add(frobenius(F, x), frobenius(F, y))
    F4 = field_make(2, 2)
    assert all(frobenius(F4, frobenius(F4, x)) == x for x in F4.elements())
    F8 = field_make(2, 3)

    def order_of_map(F):
        k, cur = 1, {x: frobenius(F, x) for x in F.elements()}
        while any(cur[x] != x for x in cur):
            cur = {x: frobenius(F, cur[x]) for x in cur}
            k += 1
        return k

    assert order_of_map(F8) == 3
    assert order_of_map(F4) == 2


@pytest.mark.parametrize("q,gl,sl", [(2, 6, 6), (3, 48, 24), (4, 180, 60), (5, 480, 120), (8, None, 504)])
def test_matrix_group_counts(q, gl, sl):
    p, n = prime_power(q)
    F = field_make(p, n)
    if gl is not None:
        assert len(gl2_enumerate(F)) == gl == (q * q - 1) * (q * q - q)
    assert len(sl2_enumerate(F)) == sl == q**3 - q


def test_enumerate_cap():
    with pytest.raises(ValueError):
        gl2_enumerate(field_make(5, 1), cap=100)


@given(st.data())
def test_det_multiplicative_and_assoc(data):
    F = field_make(3, 2)
    mats = [tuple(data.draw(st.integers(0, 8)) for _ in range(4)) for _ in range(3)]
    A, B, C = mats
    assert mat2_det(F, mat2_mul(F, A, B)) == F.mul(mat2_det(F, A), mat2_det(F, B))
    assert mat2_mul(F, mat2_mul(F, A, B), C) == mat2_mul(F, A, mat2_mul(F, B, C))


@given(st.data())
def test_mat3_assoc(data):
    F = field_make(5, 1)
    A, B, C = (tuple(data.draw(st.integers(0, 4)) for _ in range(9)) for _ in range(3))
    assert mat3_mul(F, mat3_mul(F, A, B), C) == mat3_mul(F, A, mat3_mul(F, B, C))
