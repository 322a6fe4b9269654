import pytest
from hypothesis import given, strategies as st

from nccrkit.abgroup import (
    EmptyClassSetError, FinAbGroup, GroupElement, GroupError, automorphisms, elem_add, elem_neg,
    elem_scale, elem_sub, elem_sum, element_order, enumerate_elements, format_element,
    format_group, generates, iso_invariants, pairing, parse_elements, parse_group,
    subgroup_generated, is_subgroup,
)

Z14 = FinAbGroup.cyclic(14)
V4 = parse_group("2,2")


def test_iso_invariants_canonical():
    assert iso_invariants(0, (4, 6)).torsion == (2, 12)
    assert iso_invariants(1, (1, 1)) == FinAbGroup(1, ())
    with pytest.raises(GroupError):
        FinAbGroup(0, (2, 3))
    with pytest.raises(GroupError):
        FinAbGroup(0, (1,))


def test_z14_elements():
    elems = enumerate_elements(Z14)
    assert [a.torsion_part[0] for a in elems] == list(range(14))
    assert Z14.order == 14


def test_arithmetic():
    a, b = Z14.element(torsion=(9,)), Z14.element(torsion=(8,))
    assert elem_add(Z14, a, b).torsion_part == (3,)
    assert elem_sub(Z14, a, b).torsion_part == (1,)
    assert elem_neg(Z14, a).torsion_part == (5,)
    assert elem_scale(Z14, 3, a).torsion_part == (13,)
    w = [Z14.element(torsion=(t,)) for t in (1, 5, 8)]
    assert elem_sum(Z14, w) == Z14.zero()
    assert element_order(Z14, Z14.element(torsion=(4,))) == 7
    G = FinAbGroup(1, (2,))
    assert element_order(G, G.element((1,), (0,))) is None


def test_unreduced_element_rejected():
    with pytest.raises(GroupError):
        elem_add(Z14, GroupElement((), (15,)), Z14.zero())


def test_subgroup_examples():
    Z4, Z6 = FinAbGroup.cyclic(4), FinAbGroup.cyclic(6)
    assert is_subgroup(Z14, enumerate_elements(Z14))
    assert not is_subgroup(Z4, parse_elements("0,1,2", Z4))
    assert is_subgroup(Z6, parse_elements("0,3", Z6))
    with pytest.raises(EmptyClassSetError):
        is_subgroup(Z4, [])


def test_subgroup_in_infinite_group():
    G = parse_group("Z + Z/2")
    assert is_subgroup(G, parse_elements("(0,0),(0,1)", G))
    assert not is_subgroup(G, parse_elements("(0,0),(1,0)", G))


def test_generates_examples():
    assert generates(FinAbGroup.cyclic(6), parse_elements("1", FinAbGroup.cyclic(6)))
    assert not generates(V4, parse_elements("(1,0)", V4))
    assert generates(Z14, parse_elements("1,5,8", Z14))
    assert generates(FinAbGroup(0, ()), [])
    assert not generates(FinAbGroup(1, ()), parse_elements("(2)", FinAbGroup(1, ())))


def test_subgroup_generated():
    Z12 = FinAbGroup.cyclic(12)
    H = subgroup_generated(Z12, parse_elements("8", Z12))
    assert sorted(a.torsion_part[0] for a in H) == [0, 4, 8]
    with pytest.raises(GroupError):
        subgroup_generated(FinAbGroup(1, ()), [])


def test_automorphism_counts():
    assert len(automorphisms(Z14)) == 6
    assert len(automorphisms(V4)) == 6
    assert automorphisms(FinAbGroup.cyclic(401)) is None


def test_pairing_values():
    g = Z14.element(torsion=(1,))
    assert pairing(Z14, g, Z14.element(torsion=(5,))) * 14 == 5


@pytest.mark.parametrize("text,expected", [
    ("Z + Z/2 + Z/2", (1, (2, 2))),
    ("Z^2 + Z/4 + Z/6", (2, (2, 12))),
    ("14", (0, (14,))),
    ("trivial", (0, ())),
    ("Z/1", (0, ())),
])
def test_parse_group(text, expected):
    G = parse_group(text)
    assert (G.free_rank, G.torsion) == expected


def test_parse_group_errors():
    for bad in ("Q", "Z/x", "Z/0 + Z"):
        with pytest.raises(GroupError):
            parse_group(bad)


def test_element_notation():
    assert format_element(FinAbGroup(0, ()).zero()) == "0"
    assert format_element(V4.element(torsion=(1, 0))) == "(1,0)"
    assert parse_elements("(1,0),(1,1)", V4) == [V4.element(torsion=(1, 0)), V4.element(torsion=(1, 1))]
    with pytest.raises(GroupError):
        parse_elements("(1,0,1)", V4)


groups = st.lists(st.integers(1, 12), max_size=3).flatmap(
    lambda t: st.integers(0, 2).map(lambda r: iso_invariants(r, t)))


@given(groups)
def test_group_notation_round_trip(G):
    assert parse_group(format_group(G)) == G


@given(st.integers(1, 30), st.integers(1, 30))
def test_cyclic_product_order(a, b):
    assert iso_invariants(0, (a, b)).order == a * b
