from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subdepth import catalog
from subdepth.errors import BadCycleSyntax, CapExceeded, NotASubgroup, NotNormal, PointOutOfRange, RepeatedPoint
from subdepth.perm import (
    CosetAction,
    Permutation,
    alternating_group,
    center,
    class_intersection_sizes,
    classes_inside,
    compose,
    conjugate_set,
    conjugates,
    core,
    cycle_type,
    cyclic_group,
    depth_bounds,
    dihedral_group,
    eigenvalue_report,
    fusion,
    generate,
    invert,
    is_normal,
    min_conjugate_intersections,
    normalizer,
    parse_generators,
    parse_perm,
    split_generators,
    symmetric_group,
)


def grp(degree, gens):
    return generate(parse_generators(gens, degree), degree)


S4 = symmetric_group(4)
D8 = grp(4, "(1,2,3,4),(1,4)(2,3)")
V4 = grp(4, "(1,2)(3,4),(1,3)(2,4)")


# -- parsing -----------------------------------------------------------------


def test_parse_and_print():
    p = parse_perm("(1,2,3)(4,5)", 5)
    assert p.img == (1, 2, 0, 4, 3)
    assert str(p) == "(1,2,3)(4,5)"
    assert p(1) == 2 and p(3) == 1
    assert str(parse_perm("()", 3)) == "()"


@pytest.mark.parametrize(
    "text, exc",
    [
        ("(1,2", BadCycleSyntax),
        ("1,2)", BadCycleSyntax),
        ("(1;2)", BadCycleSyntax),
        ("(1,2)(2,3)", RepeatedPoint),
        ("(1,1)", RepeatedPoint),
        ("(1,5)", PointOutOfRange),
        ("(0,1)", PointOutOfRange),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_perm(text, 4)


def test_split_generators():
    assert split_generators("(1,2),(1,2,3,4)") == ["(1,2)", "(1,2,3,4)"]
    assert split_generators("(1,2)(3,4); (1,3)") == ["(1,2)(3,4)", "(1,3)"]
    with pytest.raises(BadCycleSyntax):
        split_generators("(1,2")


def test_composition_is_right_to_left():
    a, b = parse_perm("(1,2)", 3), parse_perm("(2,3)", 3)
    assert str(a * b) == "(1,2,3)"  # apply (2,3) first
    assert (a * b)(1) == a(b(1))


@given(st.permutations(range(6)), st.permutations(range(6)))
def test_inverse_and_order(p, q):
    p, q = tuple(p), tuple(q)
    e = tuple(range(6))
    assert compose(p, invert(p)) == e
    assert invert(compose(p, q)) == compose(invert(q), invert(p))
    assert Permutation(p).order() == len(generate([Permutation(p)], 6))
    assert sum(cycle_type(p)) == 6


# -- groups ------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_group_orders(n):
    assert symmetric_group(n).order == factorial(n)
    assert alternating_group(n).order == max(1, factorial(n) // 2)
    assert cyclic_group(n).order == n
    if n >= 3:
        assert dihedral_group(n).order == 2 * n


def test_cap():
    with pytest.raises(CapExceeded):
        generate(parse_generators("(1,2),(1,2,3,4,5,6,7)", 7), 7, cap=1000)


def test_class_sizes():
    assert sorted(S4.class_sizes()) == [1, 3, 6, 6, 8]
    assert sorted(alternating_group(5).class_sizes()) == [1, 12, 12, 15, 20]
    assert S4.classes[0].representative == (0, 1, 2, 3)
    assert len(symmetric_group(8).classes) == 22


def test_not_a_subgroup():
    with pytest.raises(NotASubgroup):
        fusion(alternating_group(4), grp(4, "(1,2)"))


def test_fusion_and_intersections():
    f = fusion(S4, D8)
    assert len(f) == 5 and f[0] == 0
    inter = class_intersection_sizes(S4, D8)
    assert sum(inter) == 8
    assert sorted(inter) == [0, 1, 2, 2, 3]


# -- normal structure --------------------------------------------------------


def test_core_of_d8_is_klein():
    assert core(S4, D8).element_set == V4.element_set
    assert is_normal(S4, V4) and not is_normal(S4, D8)
    assert normalizer(S4, D8).element_set == D8.element_set
    assert len(conjugates(S4, D8).subgroups) == 3


def test_center():
    assert center(S4).order == 1
    assert center(D8).order == 2
    assert center(V4).order == 4


@pytest.mark.parametrize("name, m", [("D8<S4", 2), ("S3<S4", 3), ("S4<S5", 4), ("A5<A6", 4), ("A4<S4", 1), ("S2<S3", 2)])
def test_min_conjugates(name, m):
    g, h = catalog.pair(name).build()
    res = min_conjugate_intersections(g, h)
    assert res.m == m and res.exact
    n = core(g, h).element_set
    inter = set(h.element_set)
    for x in res.conjugators:
        inter &= conjugate_set(x.img, h.elements)
    assert inter == n
    assert res.conjugators[0] == Permutation.identity(g.degree)


def test_greedy_mode_is_an_upper_bound():
    g, h = catalog.pair("S4<S5").build()
    res = min_conjugate_intersections(g, h, limit=1)
    assert res.m >= 4 and not res.exact


def test_dihedral_conjugator_meets_trivially():
    g, h = catalog.pair("D12<S6").build()
    x = parse_perm("(2,4)(5,6)", 6)
    assert h.element_set & conjugate_set(x.img, h.elements) == {tuple(range(6))}
    assert min_conjugate_intersections(g, h).m == 2


# -- eigenvalues and bounds --------------------------------------------------


def test_eigenvalues_s3_s4():
    g, h = catalog.pair("S3<S4").build()
    ev = eigenvalue_report(g, h)
    assert ev.distinct == (4, 2, 1) and ev.zero_multiplicity == 0
    assert ev.fusion_injective and ev.odd_bound == 5


def test_eigenvalues_a4_a5():
    g, h = catalog.pair("A4<A5").build()
    ev = eigenvalue_report(g, h)
    assert ev.distinct == (5, 2, 1) and ev.zero_multiplicity == 1
    assert not ev.fusion_injective and ev.odd_bound == 7
    assert all(isinstance(v, Fraction) for v in ev.values)


def test_bounds_d8():
    b = depth_bounds(S4, D8)
    assert b.bounds == {"core": 4, "eigenvalue": 5, "normalizer": 6}
    assert b.core_order == 4 and not b.core_central


def test_central_core_gives_odd_bound():
    g, h = catalog.pair("S2<S3").build()
    b = depth_bounds(g, h)
    assert b.core_central and b.core_bound == 3


def test_classes_inside():
    assert classes_inside(S4, V4) == 2
    with pytest.raises(NotNormal):
        classes_inside(S4, D8)


def test_quotient_action():
    act = CosetAction(S4, V4)
    assert act.degree == 6 and act.group.order == 6
    assert act.image_group(D8).order == 2
    with pytest.raises(NotNormal):
        CosetAction(S4, D8)


@st.composite
def subgroup_of_s5(draw):
    gens = draw(st.lists(st.permutations(range(5)), min_size=1, max_size=2))
    return generate([Permutation(tuple(p)) for p in gens], 5)


S5 = symmetric_group(5)


@given(subgroup_of_s5())
def test_structure_invariants(h):
    n = core(S5, h)
    assert n.element_set <= h.element_set and is_normal(S5, n)
    assert normalizer(S5, h).element_set >= h.element_set
    ev = eigenvalue_report(S5, h)
    assert ev.values[0] == Fraction(S5.order, h.order)  # identity class
    assert max(ev.values) == Fraction(S5.order, h.order)
    inter = class_intersection_sizes(S5, h)
    assert sum(inter) == h.order
    m = min_conjugate_intersections(S5, h).m
    assert (m == 1) == is_normal(S5, h)
