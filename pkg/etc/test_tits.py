#!/usr/bin/env python3
"""
확장 바일 군 테스트
"""

import pytest

from core.arith import GroupHom, group_from_spec, group_make
from core.errors import BudgetExceededError
from core.roots import root_system, simply_connected_cover
from core.tits import (TitsExtension, amalgamated_check, check_functoriality, check_restricted_subgroup,
                       induced_map, restricted_subgroup, restricted_torus)


def test_order_is_torus_times_weyl(a2, z4):
    N = TitsExtension(a2, z4)
    assert N.torus_order == 16
    assert N.order == 16 * 6
    assert len(N.elements()) == N.order


def test_a1_over_z2_is_cyclic_of_order_four(a1, z2):
    N = TitsExtension(a1, z2)
    n = N.simple_lift(0)
    assert N.multiply(n, n) == N.torus_element(N.h(a1.simple[0]))
    assert N.element_orders() == {1: 1, 2: 1, 4: 2}


def test_a1_over_z4_is_quaternionic(a1, z4):
    N = TitsExtension(a1, z4)
    assert N.element_orders() == {1: 1, 2: 1, 4: 6}


def test_adjoint_a1_splits(z2):
    N = TitsExtension(root_system("A1:adjoint"), z2)
    assert N.h(0) == ((0,),)
    assert N.element_orders() == {1: 1, 2: 3}


@pytest.mark.parametrize("spec, group", [("A1", (4, 2)), ("A2", (2, 1)), ("B2", (2, 1)), ("A2:adjoint", (2, 1))])
def test_law_report_passes(spec, group):
    N = TitsExtension(root_system(spec), group_make([group[0]], group[1]))
    report = N.law_report()
    assert all(report.values()), report


@pytest.mark.parametrize("spec, group, order", [
    ("A2", "Z/6:eps=3", 216),
    ("A3", "Z/2:eps=1", 192),
    ("B3", "Z/2:eps=1", 384),
    ("C2", "Z/2:eps=1", 32),
    ("C2", "Z/4:eps=2", 128),
    ("C3", "Z/2:eps=1", 384),
    ("G2", "Z/4:eps=2", 192),
])
def test_law_report_higher_rank_and_type_c(spec, group, order):
    N = TitsExtension(root_system(spec), group_from_spec(group))
    assert N.order == order
    report = N.law_report()
    assert all(report.values()), report


def test_law_report_budget(a2, z4):
    with pytest.raises(BudgetExceededError):
        TitsExtension(a2, z4).law_report(exhaustive_limit=50)


def test_inverse_and_conjugation(a2, z2):
    N = TitsExtension(a2, z2)
    for a in N.elements():
        assert N.multiply(a, N.inverse(a)) == N.identity
        assert N.multiply(N.inverse(a), a) == N.identity


def test_reflection_subgroup(a1, z4):
    N = TitsExtension(a1, z4)
    members = N.reflection_subgroup(a1.simple[0])
    assert len(members) == 8
    assert N.fiber_squares(a1.simple[0])


def test_squares_only_on_reflection_subgroup(a2, z4):
    N = TitsExtension(a2, z4)
    root = a2.simple[0]
    target = N.torus_element(N.h(root))
    assert N.fiber_squares(root)
    assert N.fiber_squares(a2.index_of((1, 1)))
    # p^{-1}(s) 에는 (t + s(t) + h_s, e) 가 h_s 와 다른 원소가 있다
    whole_fiber = N.fiber(N.weyl.reflection(root))
    assert not all(N.multiply(a, a) == target for a in whole_fiber)


def test_reflection_lift_projects_to_reflection(a2, z2):
    N = TitsExtension(a2, z2)
    top = a2.index_of((1, 1))
    assert N.reflection_lift(top).w == N.weyl.reflection(top)


def test_table_digest(a1, z2):
    digest = TitsExtension(a1, z2).table_digest()
    assert digest["order"] == 4
    assert digest["weyl_order"] == 2
    assert digest["involutions"] == 1
    assert digest["element_orders"] == {"1": 1, "2": 1, "4": 2}


def test_functoriality(a1, z2, z4):
    f = GroupHom(z2, z4, ((2,),))
    assert check_functoriality(f, TitsExtension(a1, z2), TitsExtension(a1, z4))


def test_induced_map_needs_pointed_hom(a1, z2, z4):
    f = GroupHom(z2, z4, ((0,),))
    with pytest.raises(ValueError):
        induced_map(f, TitsExtension(a1, z2), TitsExtension(a1, z4))


def test_amalgamated_generation(a2, z4):
    report = amalgamated_check(a2, z4)
    assert report["passed"]
    assert report["generated"] == report["expected"] == 96


def test_amalgamated_cap(a2, z4):
    with pytest.raises(BudgetExceededError):
        amalgamated_check(a2, z4, cap=10)


def test_restricted_torus_of_adjoint_cover(z4):
    ad = root_system("A1:adjoint")
    _, phi = simply_connected_cover(ad)
    torus = restricted_torus(phi, z4)
    assert torus == [((0,),), ((2,),)]
    N = TitsExtension(ad, z4)
    assert len(restricted_subgroup(N, torus)) == 4
    assert check_restricted_subgroup(N, torus)


def test_restricted_torus_for_sc_is_full(a2, z2):
    _, phi = simply_connected_cover(a2)
    assert len(restricted_torus(phi, z2)) == 4
