#!/usr/bin/env python3
"""
근계 테스트
"""

import numpy as np
import pytest

from core.errors import RootSystemError
from core.roots import (LatticeMap, RootSystem, cartan_matrix, parse_cartan_spec, root_system,
                        simply_connected_cover)


@pytest.mark.parametrize("spec, count", [
    ("A1", 2), ("A2", 6), ("A3", 12), ("B2", 8), ("C3", 18), ("G2", 12), ("D4", 24), ("A1xA1", 4),
])
def test_root_counts(spec, count):
    rs = root_system(spec)
    assert len(rs.roots) == count
    assert rs.n_positive == count // 2


def test_ordering_by_height_then_lex(a2):
    assert a2.roots[:3] == [(0, 1), (1, 0), (1, 1)]
    assert a2.roots[3:] == [(0, -1), (-1, 0), (-1, -1)]
    assert a2.simple == [a2.index_of((1, 0)), a2.index_of((0, 1))]


def test_negation_pairs(a2):
    for i in range(len(a2.roots)):
        j = a2.neg(i)
        assert a2.roots[j] == tuple(-c for c in a2.roots[i])
        assert a2.is_positive(i) != a2.is_positive(j)


def test_pairing_with_self_is_two():
    for spec in ("B2", "G2", "A3:adjoint"):
        rs = root_system(spec)
        assert (np.diag(rs.pairing) == 2).all()


def test_reflection_closes_roots():
    rs = root_system("G2")
    assert (rs.reflection_table >= 0).all()
    for i in range(len(rs.roots)):
        assert rs.reflect_root(i, i) == rs.neg(i)


def test_reflect_in_lattice_coordinates(a2):
    alpha1 = a2.index_of((1, 0))
    image = a2.reflect(alpha1, a2.root_in_lattice((0, 1)))
    assert image.tolist() == a2.root_in_lattice((1, 1)).tolist()


def test_positivity_is_additive():
    for spec in ("A3", "B2", "G2"):
        assert root_system(spec).positivity_is_additive()


def test_lattice_tags_share_roots():
    sc = root_system("B2")
    ad = root_system("B2:adjoint")
    assert sc.roots == ad.roots
    assert (ad.lattice_roots == ad.root_array).all()
    assert (sc.lattice_roots == sc.root_array @ sc.cartan.T).all()


def test_lattice_argument_overrides_suffix():
    assert root_system("A2:adjoint", lattice="sc").lattice == "sc"


@pytest.mark.parametrize("spec, index", [("A1:adjoint", 2), ("A2:adjoint", 3), ("A2", 1), ("B2:adjoint", 2)])
def test_simply_connected_cover_index(spec, index):
    cover, phi = simply_connected_cover(root_system(spec))
    assert cover.lattice == "sc"
    assert phi.index == index
    assert phi.verify()


def test_cover_of_sc_is_identity(a2):
    cover, phi = simply_connected_cover(a2)
    assert cover is a2
    assert phi.is_identity


def test_bad_lattice_map_fails_verification(a2):
    ad = root_system("A2:adjoint")
    phi = LatticeMap(((1, 0), (0, 1)), ad, a2)
    assert not phi.verify()


def test_diagonal_characters_integral_only_for_sc():
    assert root_system("A2").diagonal_is_integral
    assert not root_system("A2:adjoint").diagonal_is_integral
    assert root_system("B2").diagonal_characters is None


def test_describe_rows(a1):
    rows = a1.describe()
    assert [row["root"] for row in rows] == [[1], [-1]]
    assert rows[0]["positive"] and not rows[1]["positive"]
    assert rows[0]["coroot_form"] == [1]


def test_json_matrix_spec():
    cartan, name = parse_cartan_spec("[[2,-1],[-1,2]]")
    assert (cartan == cartan_matrix("A", 2)).all()
    assert len(root_system("[[2,-1],[-1,2]]").roots) == 6


@pytest.mark.parametrize("cartan", [
    [[2, -1], [0, 2]],
    [[1, 0], [0, 2]],
    [[2, 1], [1, 2]],
])
def test_invalid_cartan(cartan):
    with pytest.raises(RootSystemError):
        RootSystem(cartan)


def test_affine_type_hits_cap():
    with pytest.raises(RootSystemError):
        RootSystem([[2, -2], [-2, 2]], root_cap=60)


@pytest.mark.parametrize("spec", ["X3", "A0", "A2:weird", "[[2,"])
def test_invalid_names(spec):
    with pytest.raises(ValueError):
        root_system(spec)


def test_index_of_rejects_non_root(a2):
    with pytest.raises(ValueError):
        a2.index_of((2, 1))
    with pytest.raises(ValueError):
        a2.index_of(6)
