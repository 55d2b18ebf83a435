#!/usr/bin/env python3
"""
슈발레 군 행렬 실현 테스트
"""

import pytest

from core.arith import characters, field_of_order, group_make, monoid_from_spec
from core.chevalley import (TypeARealization, big_cell_factor, bruhat_census, bruhat_decompose,
                            cell_images, check_e_N_homomorphism, check_field_bijectivity,
                            check_h_multiplicative, check_torus_conjugation, commutator_constants,
                            enumerate_group, group_order, monoid_point_of, psl2_order,
                            realization_over_character, realization_over_field,
                            realization_over_group_ring, realization_over_monoid,
                            verify_commutator_over_field)
from core.errors import BudgetExceededError
from core.gadgets import chevalley_points_monoid
from core.matrices import RingMatrix
from core.roots import root_system


class TestRootElements:
    def test_positions(self, a2):
        F = field_of_order(3)
        R = realization_over_field(a2, F)
        assert R.root_position(a2.index_of((1, 0))) == (0, 1)
        assert R.root_position(a2.index_of((0, 1))) == (1, 2)
        assert R.root_position(a2.index_of((1, 1))) == (0, 2)
        assert R.root_position(a2.index_of((-1, -1))) == (2, 0)

    def test_simple_weyl_lift(self, a1, f3):
        R = realization_over_field(a1, f3)
        assert R.n_r(0, 1) == RingMatrix(f3, [[0, 1], [-1, 0]])
        assert R.h_r(0, 2) == RingMatrix.diagonal(f3, [2, 2])

    def test_n_r_needs_unit(self, a1, f3):
        with pytest.raises(ValueError):
            realization_over_field(a1, f3).n_r(0, 0)

    def test_psi_coordinates_round_trip(self, a2, f3):
        R = realization_over_field(a2, f3)
        coords = (1, 2, 0)
        assert R.extract_coordinates(R.psi(coords)) == coords

    def test_psi_needs_all_positive_roots(self, a2, f3):
        with pytest.raises(ValueError):
            realization_over_field(a2, f3).psi((1, 2))

    def test_type_a_only(self, f3):
        with pytest.raises(ValueError):
            realization_over_field(root_system("B2"), f3)


class TestRealizations:
    @pytest.mark.parametrize("spec, group", [("A1", (2, 1)), ("A1", (4, 2)), ("A2", (2, 1))])
    def test_e_N_over_group_ring(self, spec, group):
        R = realization_over_group_ring(root_system(spec), group_make([group[0]], group[1]))
        assert check_e_N_homomorphism(R) == {"homomorphism": True, "injective": True}

    def test_e_N_over_character(self, a1, z4):
        R = realization_over_character(a1, characters(z4)[0])
        assert check_e_N_homomorphism(R)["homomorphism"]

    def test_adjoint_lattice_has_no_torus_matrices(self, z2):
        ad = root_system("A2:adjoint")
        R = realization_over_group_ring(ad, z2)
        with pytest.raises(ValueError):
            R.torus_matrix(R.ext.torus_zero)

    def test_torus_conjugation_and_h(self, a2, f3):
        R = realization_over_field(a2, f3)
        assert check_torus_conjugation(R)
        assert check_h_multiplicative(R)

    def test_adjoined_zero_monoid_realization(self, a1):
        M = monoid_from_spec("Z/2:eps=1+0")
        R = realization_over_monoid(a1, M)
        images = {R.e_G(p) for p in chevalley_points_monoid(a1, M)}
        assert len(images) == 24


class TestFieldPoints:
    @pytest.mark.parametrize("ell, q, order", [(1, 2, 6), (1, 3, 24), (1, 4, 60), (1, 5, 120), (2, 2, 168)])
    def test_enumerated_orders(self, ell, q, order):
        assert len(enumerate_group(ell, q)) == order
        assert group_order(root_system(f"A{ell}"), q) == order

    def test_sl3_f3_order(self):
        assert group_order(root_system("A2"), 3) == 5616

    def test_enumeration_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_group(2, 3, budget=1000)

    @pytest.mark.parametrize("spec, q", [("A1", 2), ("A1", 3), ("A1", 4), ("A2", 2)])
    def test_bijectivity(self, spec, q):
        report = check_field_bijectivity(root_system(spec), q)
        assert report["points"] == report["group_order"]
        assert report["bijective"]
        assert report["inverse"]

    def test_monoid_point_of_round_trip(self, a1, f3):
        R = realization_over_field(a1, f3)
        for g in enumerate_group(1, 3):
            assert R.e_G(monoid_point_of(g, R)) == g

    def test_psl2(self):
        assert psl2_order(3) == 12
        assert psl2_order(4) == 60
        assert psl2_order(5) == 60


class TestBruhat:
    def test_sl2_f3_cells(self):
        rows = bruhat_census(1, 3)
        assert [(row["w"], row["size"]) for row in rows] == [("e", 6), ("s1", 18)]
        assert all(row["size"] == row["expected"] for row in rows)

    def test_sl3_f2_cells_match_expected(self):
        rows = bruhat_census(2, 2)
        assert sum(row["size"] for row in rows) == 168
        assert all(row["size"] == row["expected"] for row in rows)

    def test_decomposition_reconstructs(self, a2):
        F = field_of_order(2)
        R = realization_over_field(a2, F)
        for g in enumerate_group(2, 2):
            factors = bruhat_decompose(g, R)
            assert factors.reconstruct() == g
            assert factors.u.is_upper_unitriangular()
            assert factors.u_prime.is_upper_unitriangular()
            assert factors.h.is_diagonal()

    def test_big_cell(self, a1, f3):
        R = realization_over_field(a1, f3)
        hits = 0
        for g in enumerate_group(1, 3):
            found = big_cell_factor(g, R)
            if found is not None:
                u, n, v = found
                assert u * n * v == g
                hits += 1
        assert hits == 9 * 2

    def test_cell_map_is_injective(self, a1, f3):
        R = realization_over_field(a1, f3)
        triples, images = cell_images(R, R.weyl.longest_element())
        assert triples == images == 18

    def test_rejects_wrong_determinant(self, a1, f3):
        R = realization_over_field(a1, f3)
        with pytest.raises(ValueError):
            bruhat_decompose(RingMatrix.diagonal(f3, [2, 1]), R)
        with pytest.raises(ValueError):
            bruhat_decompose(RingMatrix(f3, [[1, 1], [1, 1]]), R)

    def test_needs_field(self, a1, z2):
        R = realization_over_group_ring(a1, z2)
        with pytest.raises(ValueError):
            bruhat_decompose(RingMatrix.identity(R.ring, 2), R)


class TestCommutators:
    def test_a2_simple_pair(self, a2):
        a, b = a2.index_of((1, 0)), a2.index_of((0, 1))
        assert commutator_constants(a2, a, b) == [(1, 1, 1)]
        assert commutator_constants(a2, b, a) == [(1, 1, -1)]

    def test_commuting_roots(self):
        a3 = root_system("A3")
        assert commutator_constants(a3, a3.index_of((1, 0, 0)), a3.index_of((0, 0, 1))) == []
        assert commutator_constants(a3, a3.index_of((1, 0, 0)), a3.index_of((1, 1, 0))) == []

    def test_dependent_roots(self, a2):
        with pytest.raises(ValueError):
            commutator_constants(a2, 0, a2.neg(0))

    def test_holds_over_field(self, a2):
        a, b = a2.index_of((1, 0)), a2.index_of((0, 1))
        assert verify_commutator_over_field(a2, a, b, field_of_order(4))

    def test_realization_rejects_other_types(self):
        with pytest.raises(ValueError):
            TypeARealization(root_system("G2"), field_of_order(2))
