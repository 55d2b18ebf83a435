#!/usr/bin/env python3
"""
검증 항목 등록부
각 항목은 EnumerationConfig 를 받아 (통과 여부, 상세 dict) 를 돌려주는 모듈 수준 함수
"""

import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

# 상위 디렉토리를 Python 경로에 추가
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config_manager import EnumerationConfig
from core.arith import (GroupHom, adjunction_check, characters, check_field_axioms, field_of_order,
                        group_from_spec, group_make, reduced_group_ring, separates_points)
from core.chevalley import (big_cell_factor, bruhat_census, cell_images, check_e_N_homomorphism,
                            check_field_bijectivity, check_h_multiplicative, check_torus_conjugation,
                            commutator_constants, enumerate_group, group_order, psl2_order,
                            realization_over_field, realization_over_group_ring,
                            verify_commutator_over_field)
from core.gadgets import (affine_points, census_matches_polynomial, chevalley_census, chevalley_points,
                          counting_polynomial, degree_slice_is_group, naturality_check, proj_points,
                          restricted_chevalley_census)
from core.roots import root_system, simply_connected_cover
from core.tits import (TitsExtension, amalgamated_check, check_functoriality, check_restricted_subgroup,
                       restricted_torus)
from core.weyl import WeylGroup

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, Dict[str, Any]]

SUITES = ("arith", "roots", "weyl", "tits", "gadgets", "chevalley")

# (근계, 군) 쌍: 확장 바일 군 법칙 전수 검사 대상
EXTENSION_CASES = (
    ("A1", "Z/2:eps=1"),
    ("A1", "Z/4:eps=2"),
    ("A1", "Z/2xZ/2:eps=(1,0)"),
    ("A1:adjoint", "Z/4:eps=2"),
    ("A2", "Z/2:eps=1"),
    ("A2", "Z/4:eps=2"),
    ("A2", "Z/6:eps=3"),
    ("A3", "Z/2:eps=1"),
    ("B2", "Z/2:eps=1"),
    ("B2", "Z/2xZ/2:eps=(1,0)"),
    ("B3", "Z/2:eps=1"),
    ("C2", "Z/2:eps=1"),
    ("C2", "Z/4:eps=2"),
    ("C3", "Z/2:eps=1"),
    ("G2", "Z/2:eps=1"),
    ("G2", "Z/4:eps=2"),
)

ORACLE_GROUPS = ("Z/2:eps=1", "Z/4:eps=2", "Z/6:eps=3")


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    suite: str
    func: Callable[[EnumerationConfig], CheckOutcome]
    description: str = ""


# ---------------------------------------------------------------------------
# arith
# ---------------------------------------------------------------------------

def check_fields(enumeration: EnumerationConfig) -> CheckOutcome:
    failures = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        report = check_field_axioms(field_of_order(q))
        failures.extend(f"F{q}:{name}" for name, ok in report.items() if not ok)
    return not failures, {"failures": failures}


def check_characters(enumeration: EnumerationConfig) -> CheckOutcome:
    """지표가 점을 분리하고, 특수화가 환 준동형인지"""
    detail: Dict[str, Any] = {}
    passed = True
    for spec in ("Z/3", "Z/6", "Z/2xZ/2", "Z/2:eps=1", "Z/4:eps=2"):
        D = group_from_spec(spec)
        chars = characters(D)
        if not D.is_pointed:
            ok = len(chars) == D.order and separates_points(D, chars)
        else:
            ok = all(chi(D.eps) == Fraction(1, 2) for chi in chars)
            R = reduced_group_ring(D)
            elements = [R.embed(g) + R.one for g in D.elements()]
            ok = ok and all(R.specialize(x * y, chi) == R.specialize(x, chi) * R.specialize(y, chi)
                            for chi in chars for x in elements for y in elements)
        detail[spec] = ok
        passed = passed and ok
    return passed, detail


def check_adjunction(enumeration: EnumerationConfig) -> CheckOutcome:
    cases = (("Z/2:eps=1", 3), ("Z/2:eps=1", 5), ("Z/4:eps=2", 5), ("Z/2", 3), ("Z/3", 4))
    detail = {}
    for spec, q in cases:
        report = adjunction_check(group_from_spec(spec), field_of_order(q))
        detail[f"{spec}->F{q}"] = report
    return all(r["bijective"] for r in detail.values()), detail


# ---------------------------------------------------------------------------
# roots / weyl
# ---------------------------------------------------------------------------

def check_root_axioms(enumeration: EnumerationConfig) -> CheckOutcome:
    expected = {"A1": 2, "A2": 6, "A3": 12, "B2": 8, "C3": 18, "G2": 12, "A2:adjoint": 6}
    counts = {}
    for spec in expected:
        rs = root_system(spec, root_cap=enumeration.root_cap)
        counts[spec] = len(rs.roots)
    additive = all(root_system(spec).positivity_is_additive() for spec in expected)
    return counts == expected and additive, {"roots": counts, "positivity_additive": additive}


def check_lattice_cover(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for spec, index in (("A1:adjoint", 2), ("A2:adjoint", 3), ("A2", 1)):
        _, phi = simply_connected_cover(root_system(spec))
        detail[spec] = {"index": phi.index, "verified": phi.verify()}
    passed = all(d["verified"] for d in detail.values()) and \
        [d["index"] for d in detail.values()] == [2, 3, 1]
    return passed, detail


def check_weyl_groups(enumeration: EnumerationConfig) -> CheckOutcome:
    expected = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "G2": 12}
    detail = {}
    for spec, order in expected.items():
        W = WeylGroup(root_system(spec), cap=enumeration.weyl_cap)
        detail[spec] = {
            "order": len(W) == order,
            "poincare_at_1": W.poincare_polynomial()(1) == order,
            "length_parity": W.check_length_parity(),
            "words": W.check_word_reconstruction(),
            "braid": W.check_braid_relations(),
            "lattice": W.check_lattice_action(),
            "longest": W.longest_element().length == root_system(spec).n_positive,
        }
    return all(all(d.values()) for d in detail.values()), detail


# ---------------------------------------------------------------------------
# tits
# ---------------------------------------------------------------------------

def check_extension_laws(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for rs_spec, group_spec in EXTENSION_CASES:
        ext = TitsExtension(root_system(rs_spec), group_from_spec(group_spec))
        if ext.order > enumeration.extension_cap:
            logger.warning(f"Skipping {rs_spec} over {group_spec}: |N| = {ext.order} exceeds cap")
            continue
        report = ext.law_report(enumeration.extension_cap)
        detail[f"{rs_spec}/{group_spec}"] = [name for name, ok in report.items() if not ok]
    return all(not failed for failed in detail.values()), {"failed_laws": detail}


def check_amalgamation(enumeration: EnumerationConfig) -> CheckOutcome:
    results = [amalgamated_check(root_system(rs_spec), group_from_spec(group_spec), cap=enumeration.extension_cap)
               for rs_spec, group_spec in (("A1", "Z/4:eps=2"), ("A2", "Z/4:eps=2"), ("B2", "Z/2xZ/2:eps=(1,0)"))]
    return all(r["passed"] for r in results), {"cases": results}


def check_functor(enumeration: EnumerationConfig) -> CheckOutcome:
    """Z/2 -> Z/4 (1 ↦ 2), Z/4 -> Z/2xZ/4 (1 ↦ (1,1)) 가 유도하는 사상"""
    rs = root_system("A2")
    weyl = WeylGroup(rs)
    Z2, Z4, Z2Z4 = group_make([2], 1), group_make([4], 2), group_make([2, 4], (0, 2))
    maps = (GroupHom(Z2, Z4, ((2,),)), GroupHom(Z4, Z2Z4, ((1, 1),)))
    detail = {}
    for f in maps:
        source, target = TitsExtension(rs, f.source, weyl), TitsExtension(rs, f.target, weyl)
        detail[f"{f.source.name}->{f.target.name}"] = check_functoriality(f, source, target)
    return all(detail.values()), detail


def check_restricted_extension(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for rs_spec, group_spec in (("A1:adjoint", "Z/4:eps=2"), ("A2:adjoint", "Z/6:eps=3")):
        rs = root_system(rs_spec)
        D = group_from_spec(group_spec)
        _, phi = simply_connected_cover(rs)
        torus = restricted_torus(phi, D)
        detail[f"{rs_spec}/{group_spec}"] = {
            "torus": len(torus),
            "subgroup": check_restricted_subgroup(TitsExtension(rs, D), torus),
        }
    return all(d["subgroup"] for d in detail.values()), detail


# ---------------------------------------------------------------------------
# gadgets
# ---------------------------------------------------------------------------

def check_graded_identity(enumeration: EnumerationConfig) -> CheckOutcome:
    """|G(Z/n)| = P(n), P(q-1) = 군 위수 공식, 작은 경우는 실제 열거"""
    enumerated = {"A1": 4, "A2": 2}
    detail = {}
    passed = True
    for spec in ("A1", "A2", "B2", "G2"):
        rs = root_system(spec)
        weyl = WeylGroup(rs)
        poly = counting_polynomial("chevalley", rs, variable="n", weyl=weyl)
        rows = []
        for n in range(1, 5):
            census = chevalley_census(rs, n, weyl)
            ok = sum(census) == poly(n) == group_order(rs, n + 1, weyl)
            ok = ok and census_matches_polynomial(census, poly, n)
            if n <= enumerated.get(spec, 0):
                points = chevalley_points(rs, group_make([n]), enumeration.point_budget, weyl)
                ok = ok and points.census() == census
            rows.append({"n": n, "P": poly(n), "ok": ok})
            passed = passed and ok
        detail[spec] = {"positive": poly.is_nonnegative(), "rows": rows}
        passed = passed and poly.is_nonnegative()
    return passed, detail


def check_projective_grading(enumeration: EnumerationConfig) -> CheckOutcome:
    failures = []
    for d in range(7):
        pd_poly = counting_polynomial("pd", d=d)
        for n in range(1, 7):
            D = group_make([n])
            points = proj_points(d, D, enumeration.point_budget)
            labels = sorted(next(j for j, x in enumerate(p) if x is not None) for p in points.degree(0))
            if labels != list(range(d + 1)) or len(points) != pd_poly(n + 1):
                failures.append(f"P^{d}/Z/{n}")
            if d <= 4 and len(affine_points(d, D, enumeration.point_budget)) != (n + 1) ** d:
                failures.append(f"A^{d}/Z/{n}")
    return not failures, {"failures": failures}


def check_naturality(enumeration: EnumerationConfig) -> CheckOutcome:
    Z2, Z4 = group_make([2], 1), group_make([4], 2)
    f = GroupHom(Z2, Z4, ((2,),))
    A1 = root_system("A1")
    detail = {}
    for chi in characters(Z4):
        key = "/".join(str(a) for a in chi.angles)
        detail[key] = {
            "gm": naturality_check("gm", f, chi),
            "affine": naturality_check("affine", f, chi, d=3),
            "pd": naturality_check("pd", f, chi, d=2),
            "spec": naturality_check("spec", f, chi, source=group_make([2])),
            "chevalley": naturality_check("chevalley", f, chi, rs=A1, budget=enumeration.point_budget),
        }
    return all(all(d.values()) for d in detail.values()), detail


def check_degree_slice(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for rs_spec, group_spec in (("A1", "Z/2:eps=1"), ("A1", "Z/4:eps=2"), ("A2", "Z/2:eps=1")):
        rs, D = root_system(rs_spec), group_from_spec(group_spec)
        ext = TitsExtension(rs, D)
        points = chevalley_points(rs, D, enumeration.point_budget, ext=ext)
        detail[f"{rs_spec}/{group_spec}"] = degree_slice_is_group(points, ext)
    return all(detail.values()), detail


def check_restricted_census(enumeration: EnumerationConfig) -> CheckOutcome:
    """수반형 A1 의 제한 부분 함자 총수 = |PSL_2(F_q)|"""
    rs = root_system("A1:adjoint")
    rows = []
    for n in range(1, 5):
        D = group_make([n])
        census = restricted_chevalley_census(rs, D)
        points = chevalley_points(rs, D, enumeration.point_budget, restricted=True)
        rows.append({"n": n, "total": sum(census), "psl2": psl2_order(n + 1),
                     "enumerated": points.census() == census})
    return all(r["total"] == r["psl2"] and r["enumerated"] for r in rows), {"rows": rows}


# ---------------------------------------------------------------------------
# chevalley
# ---------------------------------------------------------------------------

def check_counting_identity(enumeration: EnumerationConfig) -> CheckOutcome:
    cases = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3))
    rows = []
    for ell, q in cases:
        size = len(enumerate_group(ell, q, enumeration.group_budget))
        rows.append({"type": f"A{ell}", "q": q, "enumerated": size, "formula": group_order(root_system(f"A{ell}"), q)})
    return all(r["enumerated"] == r["formula"] for r in rows), {"rows": rows}


def check_bijectivity(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {f"A{ell}/F{q}": check_field_bijectivity(root_system(f"A{ell}"), q, enumeration.group_budget)
              for ell, q in ((1, 2), (1, 3), (2, 2))}
    return all(d["bijective"] and d["inverse"] for d in detail.values()), detail


def check_immersion(enumeration: EnumerationConfig) -> CheckOutcome:
    rs = root_system("A1")
    detail = {}
    for spec in ("Z/2:eps=1", "Z/4:eps=2"):
        D = group_from_spec(spec)
        realization = realization_over_group_ring(rs, D)
        points = chevalley_points(rs, D, enumeration.point_budget, ext=realization.ext).payloads()
        images = {realization.e_G(p) for p in points}
        detail[spec] = {"points": len(points), "images": len(images)}
    return all(d["points"] == d["images"] for d in detail.values()), detail


def check_oracle(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for rs_spec in ("A1", "A2"):
        rs = root_system(rs_spec)
        for spec in ORACLE_GROUPS:
            detail[f"{rs_spec}/{spec}"] = check_e_N_homomorphism(realization_over_group_ring(rs, group_from_spec(spec)))
    return all(all(d.values()) for d in detail.values()), detail


def check_torus_laws(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    for rs_spec in ("A1", "A2"):
        rs = root_system(rs_spec)
        for q in (2, 3, 4, 5):
            realization = realization_over_field(rs, field_of_order(q))
            detail[f"{rs_spec}/F{q}"] = {
                "conjugation": check_torus_conjugation(realization),
                "h_multiplicative": check_h_multiplicative(realization),
            }
    return all(all(d.values()) for d in detail.values()), detail


def check_bruhat_partition(enumeration: EnumerationConfig) -> CheckOutcome:
    detail = {}
    passed = True
    for ell, q in ((1, 2), (1, 3), (1, 5), (2, 2)):
        rows = bruhat_census(ell, q, enumeration.group_budget)
        ok = all(r["size"] == r["expected"] for r in rows)
        ok = ok and sum(r["size"] for r in rows) == group_order(root_system(f"A{ell}"), q)
        detail[f"SL{ell + 1}(F{q})"] = rows
        passed = passed and ok
    realization = realization_over_field(root_system("A1"), field_of_order(3))
    injective = all(triples == distinct for triples, distinct in
                    (cell_images(realization, w) for w in realization.weyl.elements))
    detail["phi_w_injective"] = injective
    return passed and injective, detail


def check_big_cell(enumeration: EnumerationConfig) -> CheckOutcome:
    rs = root_system("A1")
    rows = []
    for q in (2, 3, 5):
        realization = realization_over_field(rs, field_of_order(q))
        group = enumerate_group(1, q, enumeration.group_budget)
        size = sum(1 for g in group if big_cell_factor(g, realization) is not None)
        rows.append({"q": q, "size": size, "expected": q ** rs.n_positive * (q - 1) ** rs.rank * q ** rs.n_positive})
    return all(r["size"] == r["expected"] for r in rows), {"rows": rows}


def check_commutators(enumeration: EnumerationConfig) -> CheckOutcome:
    rs = root_system("A2")
    alpha1, alpha2 = rs.simple
    constants = commutator_constants(rs, alpha1, alpha2)
    commuting = commutator_constants(rs, alpha1, rs.neg(alpha2))
    over_f3 = verify_commutator_over_field(rs, alpha1, alpha2, field_of_order(3))
    passed = len(constants) == 1 and constants[0][2] in (1, -1) and commuting == [] and over_f3
    return passed, {"constants": constants, "commuting": commuting, "over_F3": over_f3}


CHECK_REGISTRY: List[VerifyCheck] = [
    VerifyCheck("field_axioms", "arith", check_fields, "finite field tables"),
    VerifyCheck("characters", "arith", check_characters, "character separation and specialization"),
    VerifyCheck("adjunction", "arith", check_adjunction, "Hom(Z[D,eps], A) = Hom((D,eps), A)"),
    VerifyCheck("root_axioms", "roots", check_root_axioms, "root counts and axioms"),
    VerifyCheck("lattice_cover", "roots", check_lattice_cover, "simply connected cover index"),
    VerifyCheck("weyl_groups", "weyl", check_weyl_groups, "orders, words, braid relations"),
    VerifyCheck("extension_laws", "tits", check_extension_laws, "extended Weyl group law suite"),
    VerifyCheck("amalgamation", "tits", check_amalgamation, "generation by T and the Z/2 image"),
    VerifyCheck("functoriality", "tits", check_functor, "induced maps are homomorphisms"),
    VerifyCheck("restricted_extension", "tits", check_restricted_extension, "T'·sigma(W) is a subgroup"),
    VerifyCheck("graded_identity", "gadgets", check_graded_identity, "|G(Z/n)| = P(n)"),
    VerifyCheck("projective_grading", "gadgets", check_projective_grading, "P^d and A^d counts"),
    VerifyCheck("naturality", "gadgets", check_naturality, "evaluation maps are natural"),
    VerifyCheck("degree_slice", "gadgets", check_degree_slice, "lowest degree is N"),
    VerifyCheck("restricted_census", "gadgets", check_restricted_census, "adjoint A1 gives PSL2"),
    VerifyCheck("counting_identity", "chevalley", check_counting_identity, "formula vs brute force"),
    VerifyCheck("field_bijectivity", "chevalley", check_bijectivity, "e_G is a bijection over fields"),
    VerifyCheck("immersion", "chevalley", check_immersion, "e_G injective over Z[D,eps]"),
    VerifyCheck("oracle", "chevalley", check_oracle, "e_N injective homomorphism"),
    VerifyCheck("torus_laws", "chevalley", check_torus_laws, "conjugation and h_r laws"),
    VerifyCheck("bruhat_partition", "chevalley", check_bruhat_partition, "cell sizes and phi_w"),
    VerifyCheck("big_cell", "chevalley", check_big_cell, "|Omega| over SL2(F_q)"),
    VerifyCheck("commutators", "chevalley", check_commutators, "commutator constants for A2"),
]

_BY_NAME: Dict[str, VerifyCheck] = {check.name: check for check in CHECK_REGISTRY}


def select_checks(suites: Optional[Sequence[str]] = None, names: Optional[Sequence[str]] = None) -> List[VerifyCheck]:
    """
    등록 순서를 유지한 채 항목 선택

    Raises:
        ValueError: 알 수 없는 스위트나 항목 이름
    """
    unknown = [s for s in suites or () if s not in SUITES]
    unknown += [n for n in names or () if n not in _BY_NAME]
    if unknown:
        raise ValueError(f"unknown verify suites or checks: {', '.join(unknown)}")
    selected = CHECK_REGISTRY
    if suites:
        selected = [c for c in selected if c.suite in suites]
    if names:
        selected = [c for c in selected if c.name in names]
    return list(selected)


def run_check(name: str, enumeration: EnumerationConfig) -> CheckOutcome:
    """이름으로 항목 실행 (프로세스 풀에서도 pickle 가능)"""
    return _BY_NAME[name].func(enumeration)
