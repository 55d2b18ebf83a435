#!/usr/bin/env python3
"""
산술 계층 테스트
유한체, 점 있는 아벨군, 지표, 원분 정수환, 축약 군환, 모노이드
"""

from fractions import Fraction

import pytest

from core.arith import (AdjoinedZeroMonoid, CyclotomicRing, GroupHom, IntegersMod, RingMonoid,
                        adjunction_check, characters, check_field_axioms, cyclic_test_group,
                        field_of_order, gf_make, group_from_spec, group_make, hom_set,
                        monoid_from_spec, reduced_group_ring, separates_points)


class TestFiniteField:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 25])
    def test_axioms(self, q):
        assert all(check_field_axioms(field_of_order(q)).values())

    def test_order_four(self):
        F = field_of_order(4)
        assert (F.p, F.k, F.q) == (2, 2, 4)
        assert all(x * x.inverse() == F.one for x in F.elements()[1:])
        assert F.zero + F.one == F.one

    @pytest.mark.parametrize("q", [5, 8, 9])
    def test_primitive_element_and_log(self, q):
        F = field_of_order(q)
        g = F.primitive_element
        assert F.multiplicative_order(g) == q - 1
        assert [F.discrete_log(g ** e) for e in range(q - 1)] == list(range(q - 1))

    def test_frobenius_is_additive(self):
        F = field_of_order(9)
        for a in F.elements():
            for b in F.elements():
                assert F.frobenius(a + b) == F.frobenius(a) + F.frobenius(b)

    def test_elements_indexed_by_value(self):
        F = field_of_order(8)
        assert [x.value for x in F.elements()] == list(range(8))

    @pytest.mark.parametrize("p, k", [(11, 1), (2, 7), (4, 1)])
    def test_rejects_unsupported(self, p, k):
        with pytest.raises(ValueError):
            gf_make(p, k)

    def test_rejects_non_prime_power(self):
        with pytest.raises(ValueError):
            field_of_order(6)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            field_of_order(5).zero.inverse()


class TestIntegersMod:
    def test_inverse_and_division(self):
        R = IntegersMod(5)
        assert R.inverse(R(2)) == 3
        assert R(4) / R(2) == 2

    def test_non_cyclic_units(self):
        assert IntegersMod(8).unit_generator is None
        assert IntegersMod(9).unit_generator is not None

    def test_non_unit(self):
        with pytest.raises(ValueError):
            IntegersMod(6).inverse(IntegersMod(6)(2))


class TestPointedGroups:
    def test_spec_parsing(self):
        D = group_from_spec("Z/2xZ/4:eps=(0,2)")
        assert D.orders == (2, 4)
        assert D.eps == (0, 2)
        assert D.order == 8
        assert D.exponent == 4
        assert D.is_pointed

    def test_unpointed_spec(self):
        D = group_from_spec("Z/3")
        assert D.eps == (0,)
        assert not D.is_pointed

    @pytest.mark.parametrize("spec", ["Z/4:eps=1", "Z/3:eps=1", "Z/2xZ/2:eps=1", "bogus"])
    def test_invalid_specs(self, spec):
        with pytest.raises(ValueError):
            group_from_spec(spec)

    def test_arithmetic(self, z4):
        assert z4.add((3,), (2,)) == (1,)
        assert z4.neg((1,)) == (3,)
        assert z4.scale((1,), 6) == (2,)
        assert z4.element_order((2,)) == 2

    def test_cyclic_test_group(self):
        assert cyclic_test_group(4).eps == (2,)
        assert not cyclic_test_group(3).is_pointed

    def test_hom_sets(self, z2, z4):
        assert len(hom_set(group_make([2]), group_make([4]))) == 2
        pointed = hom_set(z2, z4)
        assert [f.images for f in pointed] == [((2,),)]
        assert pointed[0].is_pointed

    def test_compose(self, z2, z4):
        f = GroupHom(z2, z4, ((2,),))
        g = GroupHom(z4, z4, ((3,),))
        assert g.compose(f)((1,)) == (2,)


class TestCharacters:
    def test_pointed_characters_send_eps_to_minus_one(self, z4):
        chars = characters(z4)
        assert [chi.angles for chi in chars] == [(Fraction(1, 4),), (Fraction(3, 4),)]
        assert all(chi(z4.eps) == Fraction(1, 2) for chi in chars)
        assert all(chi.is_injective() for chi in chars)

    def test_separation(self):
        D = group_from_spec("Z/2xZ/3")
        chars = characters(D)
        assert len(chars) == 6
        assert separates_points(D, chars)
        assert not separates_points(D, chars[:1])

    def test_pullback(self, z2, z4):
        f = GroupHom(z2, z4, ((2,),))
        chi = characters(z4)[0]
        assert chi.pullback(f)((1,)) == Fraction(1, 2)


class TestCyclotomic:
    def test_fourth_roots(self):
        R = CyclotomicRing(4)
        i = R.root_of_unity(Fraction(1, 4))
        assert i * i == -1
        assert R.is_unit(i)
        assert R.inverse(i) == -i

    def test_cube_roots_sum_to_zero(self):
        R = CyclotomicRing(3)
        z = R.root_of_unity(Fraction(1, 3))
        assert R.one + z + z * z == 0

    def test_non_root(self):
        with pytest.raises(ValueError):
            CyclotomicRing(4).root_of_unity(Fraction(1, 3))
        assert not CyclotomicRing(4).is_unit(CyclotomicRing(4)(2))


class TestGroupRing:
    def test_reduced_ring_over_z2_is_integers(self, z2):
        R = reduced_group_ring(z2)
        assert R.rank == 1
        assert R.embed((1,)) == -1

    def test_gaussian_integers(self, z4):
        R = reduced_group_ring(z4)
        i = R.embed((1,))
        assert R.rank == 2
        assert i * i == -1
        assert R.is_unit(i)
        assert R.inverse(i) == R.embed((3,))
        assert not R.is_unit(i + 1)

    def test_unreduced_ring(self):
        R = reduced_group_ring(group_make([3]))
        assert not R.reduced
        assert R.rank == 3

    def test_specialize(self, z4):
        R = reduced_group_ring(z4)
        chi = characters(z4)[0]
        target = CyclotomicRing(4)
        assert R.specialize(R.embed((1,)), chi) == target.root_of_unity(Fraction(1, 4))
        x, y = R.embed((1,)) + 2, R.embed((3,)) - 1
        assert R.specialize(x * y, chi) == R.specialize(x, chi) * R.specialize(y, chi)


class TestMonoids:
    def test_field_monoid(self):
        M = monoid_from_spec("F3")
        assert isinstance(M, RingMonoid)
        units = M.unit_group()
        assert units.group.orders == (2,)
        assert units.group.eps == (1,)
        assert units.to_monoid(units.group.eps) == M.eps

    def test_adjoined_zero(self):
        M = monoid_from_spec("Z/2:eps=1+0")
        assert isinstance(M, AdjoinedZeroMonoid)
        assert M.elements() == [None, (0,), (1,)]
        assert M.mul(None, (1,)) is None
        assert M.mul((1,), (1,)) == (0,)

    def test_zmod_monoid(self):
        M = monoid_from_spec("Zmod9")
        assert M.unit_group().group.order == 6

    def test_non_cyclic_units_rejected(self):
        with pytest.raises(ValueError):
            RingMonoid(IntegersMod(8)).unit_group()

    def test_invalid_spec(self):
        with pytest.raises(ValueError):
            monoid_from_spec("Q")


class TestAdjunction:
    @pytest.mark.parametrize("spec, q, count", [
        ("Z/2:eps=1", 3, 1),
        ("Z/4:eps=2", 5, 2),
        ("Z/4:eps=2", 3, 0),
        ("Z/3", 4, 3),
    ])
    def test_restriction_is_bijective(self, spec, q, count):
        report = adjunction_check(group_from_spec(spec), field_of_order(q))
        assert report["bijective"]
        assert report["ring_homs"] == report["monoid_homs"] == count
