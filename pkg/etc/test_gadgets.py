#!/usr/bin/env python3
"""
등급 점 함자 테스트
"""

from fractions import Fraction

import pytest

from core.arith import GroupHom, characters, group_make, monoid_from_spec
from core.errors import BudgetExceededError
from core.gadgets import (GradedSet, affine_points, census_matches_polynomial, chevalley_census,
                          chevalley_points, chevalley_points_monoid, counting_polynomial,
                          degree_slice_is_group, e_F, gm_points, naturality_check, proj_points,
                          restricted_chevalley_census, spec_points)
from core.polynomial import CountingPolynomial
from core.roots import root_system
from core.tits import TitsExtension


class TestBasicGadgets:
    def test_gm(self, z4):
        points = gm_points(z4)
        assert len(points) == 4
        assert points.census() == (0, 4)

    def test_affine(self, z2):
        points = affine_points(2, z2)
        assert len(points) == 9
        assert points.census() == (1, 4, 4)
        assert points.degree(0) == [(None, None)]

    def test_affine_with_named_coordinates(self, z2):
        assert len(affine_points(["x", "y", "z"], z2)) == 27

    def test_projective_space(self, z2):
        points = proj_points(3, z2)
        assert points.census() == (4, 12, 16, 8)
        assert len(points) == counting_polynomial("pd", d=3)(3)

    def test_projective_degree_zero_points(self, z4):
        zeros = proj_points(2, z4).degree(0)
        assert set(zeros) == {((0,), None, None), (None, (0,), None), (None, None, (0,))}
        assert len(zeros) == 3

    def test_negative_dimension(self, z2):
        with pytest.raises(ValueError):
            proj_points(-1, z2)

    def test_spec(self, z2, z4):
        assert len(spec_points(z2, z4)) == 1
        unpointed = spec_points(group_make([2]), group_make([4]))
        assert unpointed.census() == (2,)

    def test_budget(self, z4):
        with pytest.raises(BudgetExceededError):
            affine_points(6, z4, budget=100)

    def test_graded_set_order(self):
        graded = GradedSet.build([(2, (1,)), (1, (3,)), (1, None)])
        assert graded.payloads() == [None, (3,), (1,)]
        assert graded.counts() == {1: 2, 2: 1}
        assert graded.min_degree == 1


class TestEvaluation:
    def test_e_F(self, z4):
        chi = characters(z4)[0]
        assert e_F(z4, chi, (None, (1,), (2,))) == (None, Fraction(1, 4), Fraction(1, 2))

    def test_e_F_rejects_foreign_character(self, z2, z4):
        with pytest.raises(ValueError):
            e_F(z2, characters(z4)[0], ((1,),))

    @pytest.mark.parametrize("gadget, d", [("gm", None), ("affine", 2), ("pd", 2), ("spec", None)])
    def test_naturality(self, gadget, d, z2, z4):
        f = GroupHom(z2, z4, ((2,),))
        for chi in characters(z4):
            assert naturality_check(gadget, f, chi, d=d)

    def test_chevalley_naturality(self, a1, z2, z4):
        f = GroupHom(z2, z4, ((2,),))
        assert naturality_check("chevalley", f, characters(z4)[1], rs=a1)

    def test_naturality_needs_target_character(self, z2, z4):
        f = GroupHom(z2, z4, ((2,),))
        with pytest.raises(ValueError):
            naturality_check("gm", f, characters(z2)[0])


class TestCountingPolynomials:
    def test_chevalley_a1(self, a1):
        assert counting_polynomial("chevalley", a1) == CountingPolynomial([0, -1, 0, 1])
        assert counting_polynomial("chevalley", a1, variable="n") == CountingPolynomial([0, 2, 3, 1])

    @pytest.mark.parametrize("spec, q, order", [("A1", 3, 24), ("A1", 5, 120), ("A2", 2, 168), ("A2", 3, 5616)])
    def test_group_orders(self, spec, q, order):
        assert counting_polynomial("chevalley", root_system(spec))(q) == order

    def test_shifted_forms(self):
        assert counting_polynomial("gm", variable="n") == CountingPolynomial([0, 1])
        assert counting_polynomial("affine", d=2, variable="n") == CountingPolynomial([1, 2, 1])
        assert counting_polynomial("spec", variable="n") == 1

    @pytest.mark.parametrize("kwargs", [{"kind": "torus"}, {"kind": "pd"}, {"kind": "chevalley"},
                                        {"kind": "gm", "variable": "t"}])
    def test_invalid_requests(self, kwargs):
        with pytest.raises(ValueError):
            counting_polynomial(**kwargs)


class TestChevalleyPoints:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_census_formula_a1(self, a1, n):
        assert chevalley_census(a1, n) == (0, 2 * n, 3 * n ** 2, n ** 3)

    @pytest.mark.parametrize("spec, n", [("A2", 2), ("B2", 3), ("G2", 2)])
    def test_census_matches_polynomial(self, spec, n):
        rs = root_system(spec)
        poly = counting_polynomial("chevalley", rs, variable="n")
        assert census_matches_polynomial(chevalley_census(rs, n), poly, n)
        assert sum(chevalley_census(rs, n)) == poly(n)

    def test_enumeration_a1(self, a1, z2):
        points = chevalley_points(a1, z2)
        assert len(points) == 24
        assert points.census() == (0, 4, 12, 8)
        assert degree_slice_is_group(points, TitsExtension(a1, z2))

    def test_threaded_enumeration_is_deterministic(self, a2, z2):
        serial = chevalley_points(a2, z2)
        threaded = chevalley_points(a2, z2, max_workers=4)
        assert serial == threaded

    def test_point_budget(self, a2, z4):
        with pytest.raises(BudgetExceededError):
            chevalley_points(a2, z4, budget=1000)

    def test_restricted_census(self, z4):
        ad = root_system("A1:adjoint")
        census = restricted_chevalley_census(ad, z4)
        assert census == (0, 4, 24, 32)
        assert chevalley_points(ad, z4, restricted=True).census() == census

    def test_restricted_equals_full_for_sc(self, a2, z2):
        assert restricted_chevalley_census(a2, z2) == chevalley_census(a2, 2)

    def test_monoid_points(self, a1):
        points = chevalley_points_monoid(a1, monoid_from_spec("F3"))
        assert len(points) == 24
        assert points == sorted(points, key=lambda p: p.sort_key)

    def test_adjoined_zero_monoid_matches_graded_count(self, a1, z2):
        points = chevalley_points_monoid(a1, monoid_from_spec("Z/2:eps=1+0"))
        assert len(points) == len(chevalley_points(a1, z2))

    def test_point_json(self, a1, z2):
        point = chevalley_points(a1, z2).payloads()[0]
        payload = point.to_json()
        assert set(payload) == {"a", "n", "b"}
        assert payload["n"]["w"] == []
