#!/usr/bin/env python3
"""
바일 군 테스트
"""

import pytest

from core.errors import BudgetExceededError
from core.polynomial import CountingPolynomial
from core.roots import root_system
from core.weyl import WeylGroup, coxeter_matrix, inversion_set, weyl_enumerate


@pytest.mark.parametrize("spec, order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("A1xA1", 4)])
def test_group_orders(spec, order):
    assert len(WeylGroup(root_system(spec))) == order


def test_a2_census_and_poincare(a2):
    W = WeylGroup(a2)
    assert W.length_census() == {0: 1, 1: 2, 2: 2, 3: 1}
    expected = CountingPolynomial([1, 1]) * CountingPolynomial([1, 1, 1])
    assert W.poincare_polynomial() == expected


def test_sorted_by_length_then_word(a2):
    elements = weyl_enumerate(a2)
    assert [w.word_string() for w in elements] == ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]
    assert [w.index for w in elements] == list(range(6))


@pytest.mark.parametrize("spec, m", [("A2", 3), ("B2", 4), ("G2", 6), ("A1xA1", 2)])
def test_coxeter_entries(spec, m):
    M = coxeter_matrix(root_system(spec))
    assert M[0, 1] == M[1, 0] == m
    assert M[0, 0] == 1


@pytest.mark.parametrize("spec", ["A2", "B2", "G2", "A3:adjoint"])
def test_structural_checks(spec):
    W = WeylGroup(root_system(spec))
    assert W.check_length_parity()
    assert W.check_word_reconstruction()
    assert W.check_braid_relations()
    assert W.check_lattice_action()


def test_longest_element(a2):
    W = WeylGroup(a2)
    w0 = W.longest_element()
    assert w0.length == a2.n_positive
    assert inversion_set(w0) == frozenset(range(a2.n_positive))
    assert W.reduced_words(w0) == [(0, 1, 0), (1, 0, 1)]
    assert W.multiply(w0, w0).is_identity


def test_reduced_word_count_of_a3_longest():
    W = WeylGroup(root_system("A3"))
    assert len(W.reduced_words(W.longest_element())) == 16


def test_inverse_and_from_word(a2):
    W = WeylGroup(a2)
    w = W.from_word([0, 1])
    assert w.word == (0, 1)
    assert W.multiply(w, W.inverse(w)) == W.identity
    assert W.inverse(w).word == (1, 0)
    assert W.element_order(w) == 3


def test_reflection_of_highest_root(a2):
    W = WeylGroup(a2)
    top = a2.index_of((1, 1))
    s = W.reflection(top)
    assert s.length == 3
    assert s(top) == a2.neg(top)


def test_inversion_roots(a2):
    W = WeylGroup(a2)
    s1 = W.simple_reflections[0]
    assert W.inversion_roots(s1) == [(1, 0)]


def test_lattice_matrix_of_simple_reflection(a1):
    W = WeylGroup(a1)
    assert W.lattice_matrix(W.simple_reflections[0]).tolist() == [[-1]]


def test_cap_raises_budget_error():
    with pytest.raises(BudgetExceededError) as excinfo:
        WeylGroup(root_system("A3"), cap=10)
    assert excinfo.value.budget == 10
