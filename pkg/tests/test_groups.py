from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from commenergy.groups import (
    DescriptorError,
    Dicyclic,
    Dihedral,
    DirectProductWithCyclic,
    ElementaryWitness,
    FrobeniusPQ,
    GL2,
    GroupError,
    HanakiU,
    HanakiV,
    InvalidParameters,
    Metacyclic,
    OrderCapExceeded,
    PSL2,
    Quasidihedral,
    build,
    center,
    central_quotient,
    centralizer,
    centralizer_count,
    commutativity_degree,
    family_names,
    parse_descriptor,
    recognize_quotient,
    validate_group,
)

SMALL = [
    "dihedral:m=3", "dihedral:m=4", "dihedral:m=7", "dicyclic:m=2", "dicyclic:m=5",
    "metacyclic:m=3,n=2", "metacyclic:m=4,n=3", "quasidihedral:n=4", "quasidihedral:n=5",
    "frobenius:p=2,q=5", "frobenius:p=3,q=7", "suzuki2", "m16", "d8z4", "sg16_3",
    "psl2:k=2", "gl2:p=3,n=1", "gl2:q=4", "sl23", "hanakiU:n=2", "hanakiV:p=3,n=1", "s4", "a4", "a5",
    "product:inner=dihedral:m=3,k=3", "product:inner=suzuki2,k=2", "elementary:p=2,z=6",
]

EXPECTED_ORDER = {
    "dihedral:m=3": 6, "dicyclic:m=5": 20, "metacyclic:m=4,n=3": 24, "quasidihedral:n=5": 32,
    "frobenius:p=3,q=7": 21, "suzuki2": 20, "psl2:k=2": 60, "gl2:p=3,n=1": 48, "gl2:q=4": 180,
    "sl23": 24, "hanakiU:n=2": 16, "hanakiV:p=3,n=1": 27, "s4": 24, "a4": 12, "a5": 60,
    "product:inner=dihedral:m=3,k=3": 18, "elementary:p=2,z=6": 24,
}


def G(desc):
    return build(parse_descriptor(desc))


@pytest.mark.parametrize("desc", SMALL)
def test_group_axioms_and_center_identity(desc):
    g = G(desc)
    validate_group(g)
    if desc in EXPECTED_ORDER:
        assert g.order == EXPECTED_ORDER[desc]
    Q = central_quotient(g)
    assert g.order == len(center(g)) * Q.order
    pairs = sum(len(centralizer(g, x)) for x in range(g.order))
    assert commutativity_degree(g) == Fraction(pairs, g.order**2)


@pytest.mark.parametrize("desc", SMALL)
def test_descriptor_round_trip(desc):
    spec = parse_descriptor(desc)
    assert parse_descriptor(spec.descriptor()) == spec


def test_known_centers():
    assert len(center(G("dihedral:m=3"))) == 1
    assert len(center(G("dicyclic:m=2"))) == 2
    assert len(center(G("suzuki2"))) == 1
    assert len(center(G("hanakiU:n=2"))) == 4
    assert len(center(G("gl2:p=3,n=1"))) == 2
    assert len(center(G("cyclic:n=6"))) == 6
    assert len(center(G("elementary:p=3,z=6"))) == 6


def test_suzuki_relations():
    g = G("suzuki2")
    a = g.labels.index("a")
    b = g.labels.index("b")
    assert g.element_order(a) == 5 and g.element_order(b) == 4
    assert g.mul(g.mul(g.inv(b), a), b) == g.mul(a, a)


def test_dihedral_relations():
    g = G("dihedral:m=5")
    a, b = g.labels.index("a"), g.labels.index("b")
    assert g.power(a, 5) == g.identity == g.power(b, 2)
    assert g.mul(g.mul(b, a), g.inv(b)) == g.inv(a)


def test_dicyclic_relations():
    g = G("dicyclic:m=3")
    assert g.order == 12
    z = center(g).indices
    assert len(z) == 2
    # x^2 = y^m is the unique involution
    invols = [x for x in range(g.order) if g.element_order(x) == 2]
    assert len(invols) == 1 and invols[0] in z


def test_centralizers():
    g = G("dihedral:m=4")
    a = g.labels.index("a")
    C = centralizer(g, a)
    assert len(C) == 4
    assert g.identity in C and a in C
    assert all(x in C for x in center(g))
    assert len(centralizer(g, g.identity)) == g.order
    assert centralizer_count(g) == 4
    assert centralizer_count(G("dihedral:m=3")) == 5
    assert centralizer_count(G("cyclic:n=4")) == 1
    with pytest.raises(IndexError):
        centralizer(g, 99)


@pytest.mark.parametrize("desc", ["s4", "gl2:p=3,n=1", "hanakiV:p=3,n=1", "frobenius:p=2,q=7"])
def test_centralizers_are_subgroups(desc):
    g = G(desc)
    for x in range(0, g.order, 3):
        C = list(centralizer(g, x))
        sub = g.table[np.ix_(C, C)]
        assert set(sub.flatten().tolist()) <= set(C)


def test_commutativity_degree():
    assert commutativity_degree(G("dihedral:m=4")) == Fraction(5, 8)
    assert commutativity_degree(G("dihedral:m=3")) == Fraction(1, 2)
    assert commutativity_degree(G("cyclic:n=7")) == 1
    assert commutativity_degree(G("frobenius:p=3,q=7")) == Fraction(5, 21)


def test_quotients():
    assert recognize_quotient(G("dihedral:m=4")) == ("elem_abelian", 2)
    assert recognize_quotient(G("hanakiV:p=3,n=1")) == ("elem_abelian", 3)
    assert recognize_quotient(G("metacyclic:m=5,n=2")) == ("dihedral", 5)
    assert recognize_quotient(G("metacyclic:m=6,n=2")) == ("dihedral", 3)
    assert recognize_quotient(G("suzuki2")).kind == "suzuki2"
    assert recognize_quotient(G("product:inner=suzuki2,k=3")).kind == "suzuki2"
    assert recognize_quotient(G("a4")).kind == "other"
    q8 = central_quotient(G("dicyclic:m=2"))
    assert q8.order == 4
    assert all(q8.element_order(x) <= 2 for x in range(4))
    assert central_quotient(G("cyclic:n=5")).order == 1


def test_m2mn_quotient_order_for_odd_m():
    g = G("metacyclic:m=5,n=3")
    assert central_quotient(g).order == 10


@given(st.integers(3, 12), st.integers(1, 4))
def test_product_center_multiplies(m, k):
    inner = build(Dihedral(m))
    prod = build(DirectProductWithCyclic(Dihedral(m), k))
    assert len(center(prod)) == k * len(center(inner))
    assert prod.order == k * inner.order


@given(st.integers(0, 1000))
def test_conjugation_preserves_commuting(seed):
    g = G("gl2:p=3,n=1")
    rng = np.random.default_rng(seed)
    h, x, y = (int(v) for v in rng.integers(0, g.order, 3))
    conj = lambda u: g.mul(g.mul(h, u), g.inv(h))
    assert bool(g.commute[x, y]) == bool(g.commute[conj(x), conj(y)])


def test_invalid_parameters():
    for bad in (lambda: Dihedral(2), lambda: Dicyclic(1), lambda: Metacyclic(2, 1), lambda: Quasidihedral(3),
                lambda: FrobeniusPQ(3, 5), lambda: GL2(4, 1), lambda: HanakiV(4, 1),
                lambda: ElementaryWitness(3, 4)):
        with pytest.raises(InvalidParameters):
            bad()


def test_descriptor_errors():
    for text in ("nonsense", "dihedral:m", "dihedral:m=x", "product:k=2", "gl2:q=6", "dihedral:r=3"):
        with pytest.raises(GroupError):
            parse_descriptor(text)
    assert isinstance(DescriptorError("x"), GroupError)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        build(PSL2(3), max_order=100)
    assert build(PSL2(3)).order == 504


def test_family_names():
    names = family_names()
    for n in ("dihedral", "suzuki2", "gl2", "hanakiU", "hanakiV", "product", "elementary", "s4"):
        assert n in names


def test_labels_are_deterministic():
    assert G("dihedral:m=3").labels == ("1", "b", "a", "a b", "a^2", "a^2 b")
    assert G("gl2:p=3,n=1").labels == G("gl2:p=3,n=1").labels


def test_hanaki_families():
    u = build(HanakiU(3))
    assert u.order == 64 and len(center(u)) == 8
    v = build(HanakiV(2, 2))
    assert v.order == 64 and len(center(v)) == 4


def test_bad_table_rejected():
    g = G("dihedral:m=3")
    from commenergy.groups import FiniteGroup
    t = g.table.copy()
    t[1, 1], t[1, 2] = t[1, 2], t[1, 1]
    with pytest.raises(GroupError):
        validate_group(FiniteGroup(6, t, 0, g.labels))
