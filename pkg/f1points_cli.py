#!/usr/bin/env python3
"""
f1points 통합 CLI
근계, 바일 군, 확장 바일 군, 점 개수, 브뤼아 세포, 평가 사상, 검증을 하나의 인터페이스로 제공
"""

import os
import sys
import argparse
import logging
from typing import Any, Dict, List, Optional, Sequence

# 프로젝트 모듈 추가
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from core.errors import BudgetExceededError
from core.arith import (CyclotomicRing, characters, cyclic_test_group, field_of_order, group_from_spec,
                        group_make, is_supported_field_order, monoid_from_spec)
from core.roots import root_system
from core.weyl import WeylGroup, inversion_set
from core.tits import TitsExtension
from core.gadgets import (GADGET_KINDS, affine_points, chevalley_census, chevalley_points,
                          chevalley_points_monoid, counting_polynomial, gm_points, proj_points,
                          restricted_chevalley_census, spec_points)
from core.chevalley import (big_cell_factor, bruhat_census, enumerate_group, group_order, psl2_order,
                            realization_over_field, realization_over_group_ring, realization_over_monoid)
from batch.batch_verifier import BatchVerifier
from batch.checks import SUITES, select_checks
from config.config_manager import LOG_LEVELS, OUTPUT_FORMATS, ConfigManager, create_default_config_file
from utils.table_util import render_json, render_table

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FORMULAS = {
    "roots": "reflection-closure",
    "weyl": "poincare",
    "tits": "tits-cocycle",
    "chevalley": "chevgroup",
    "binomial": "binomial",
    "bruhat": "brute-force",
    "verify": "invariant-suite",
}


class UsageError(ValueError):
    """명령 인자 검증 실패 (exit 2)"""


def n_range(text: str) -> List[int]:
    """'3' 또는 '1..6'"""
    try:
        if ".." in text:
            start, stop = (int(part) for part in text.split("..", 1))
        else:
            start = stop = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got '{text}'")
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"range must satisfy 1 <= a <= b, got '{text}'")
    return list(range(start, stop + 1))


class F1PointsCLI:
    """f1points CLI 메인 클래스"""

    def __init__(self, config_path: Optional[str] = None, log_level: Optional[str] = None):
        """CLI 초기화"""
        self.config_manager = ConfigManager(config_path)
        self.config_manager.setup_logging(log_level)
        self.logger = logging.getLogger(__name__)

    @property
    def enumeration(self):
        return self.config_manager.enumeration_config

    def _root_system(self, spec: Optional[str]):
        if not spec:
            raise UsageError("a root system is required (positional or --type), e.g. A2")
        try:
            return root_system(spec, root_cap=self.enumeration.root_cap)
        except ValueError as e:
            raise UsageError(str(e))

    def _type_a(self, spec: Optional[str]):
        rs = self._root_system(spec)
        if not rs.is_type_a or rs.lattice != "sc":
            raise UsageError(f"matrix computations need a simply connected type A root system, got {rs.label}")
        return rs

    @staticmethod
    def _group(spec: Optional[str]):
        if not spec:
            raise UsageError("a group is required (--group), e.g. Z/2:eps=1")
        try:
            return group_from_spec(spec)
        except ValueError as e:
            raise UsageError(str(e))

    def _weyl(self, rs) -> WeylGroup:
        return WeylGroup(rs, cap=self.enumeration.weyl_cap)

    # ------------------------------------------------------------------
    # roots / weyl / tits
    # ------------------------------------------------------------------

    def roots_table(self, spec: str) -> Dict[str, Any]:
        rs = self._root_system(spec)
        return {"rows": rs.describe(), "formula": FORMULAS["roots"]}

    def weyl_table(self, spec: str, census: bool = False) -> Dict[str, Any]:
        rs = self._root_system(spec)
        weyl = self._weyl(rs)
        if census:
            poincare = weyl.poincare_polynomial()
            rows = [{"length": k, "count": v, "poincare_coefficient": poincare.coefficient(k)}
                    for k, v in weyl.length_census().items()]
        else:
            rows = [{"word": w.word_string(), "length": w.length,
                     "inversions": [list(rs.roots[i]) for i in sorted(inversion_set(w))]}
                    for w in weyl.elements]
        return {"rows": rows, "formula": FORMULAS["weyl"]}

    def tits_report(self, spec: str, group_spec: str, table: bool = False, laws: bool = False) -> Dict[str, Any]:
        rs = self._root_system(spec)
        D = self._group(group_spec)
        ext = TitsExtension(rs, D, self._weyl(rs))
        if table:
            return {"payload": ext.table_digest()}
        if laws:
            report = ext.law_report(self.enumeration.extension_cap)
            rows = [{"law": name, "passed": ok} for name, ok in report.items()]
            return {"rows": rows, "formula": FORMULAS["tits"], "passed": all(report.values())}
        if ext.order > self.enumeration.point_budget:
            raise BudgetExceededError(f"N over {D.name} for {rs.label}", ext.order, self.enumeration.point_budget)
        rows = [{"t": [list(v) for v in a.t], "w": a.w.word_string(), "order": ext.element_order(a),
                 "in_torus": a.in_torus} for a in ext.elements()]
        return {"rows": rows, "formula": FORMULAS["tits"]}

    # ------------------------------------------------------------------
    # count
    # ------------------------------------------------------------------

    def _oracle_order(self, rs, q: int) -> Optional[int]:
        """브뤼트 포스 |SL_{ℓ+1}(F_q)| (가능할 때만)"""
        if not rs.is_type_a or rs.lattice != "sc" or not is_supported_field_order(q):
            return None
        n = rs.rank + 1
        if q ** (n * n) > self.enumeration.group_budget:
            self.logger.warning(f"Skipping brute force for q={q}: {q ** (n * n)} candidates exceed group budget")
            return None
        return len(enumerate_group(rs.rank, q, self.enumeration.group_budget))

    def _enumerated(self, gadget: str, rs, d: Optional[int], n: int, restricted: bool) -> int:
        D = cyclic_test_group(n)
        budget = self.enumeration.point_budget
        if gadget == "gm":
            return len(gm_points(D))
        if gadget == "affine":
            return len(affine_points(d, D, budget))
        if gadget == "pd":
            return len(proj_points(d, D, budget))
        if gadget == "spec":
            return len(spec_points(group_make([1]), D))
        return len(chevalley_points(rs, D, budget, restricted=restricted,
                                    max_workers=self.config_manager.verify_config.max_workers))

    def count_table(self, gadget: str, spec: Optional[str], d: Optional[int], ns: Sequence[int],
                    census: bool = False, enumerate_points: bool = False,
                    restricted: bool = False) -> Dict[str, Any]:
        """
        n 별 점 개수 표

        Args:
            gadget: gm, affine, pd, spec, chevalley
            spec: 근계 (chevalley)
            d: 좌표 수 또는 사영 차원
            ns: |D| 목록
            census: 차수별 개수 열 추가
            enumerate_points: 실제로 점을 열거해 개수 비교
            restricted: 제한 부분 함자 (chevalley)
        """
        rs = None
        if gadget == "chevalley":
            rs = self._root_system(spec)
        elif gadget in ("affine", "pd") and d is None:
            raise UsageError(f"gadget '{gadget}' needs --d")
        if restricted and gadget != "chevalley":
            raise UsageError("--restricted only applies to the chevalley gadget")
        if d is not None and d < 0:
            raise UsageError(f"--d must be non-negative, got {d}")

        weyl = self._weyl(rs) if rs is not None else None
        rows = []
        if restricted:
            for n in ns:
                degrees = restricted_chevalley_census(rs, group_make([n]), weyl)
                row: Dict[str, Any] = {"n": n, "total": sum(degrees), "q": n + 1}
                if rs.label == "A1:adjoint":
                    row["psl2"] = psl2_order(n + 1)
                if census:
                    row["census"] = list(degrees)
                if enumerate_points:
                    row["enumerated"] = self._enumerated(gadget, rs, d, n, True)
                rows.append(row)
            return {"rows": rows, "formula": f"{FORMULAS['chevalley']}-restricted"}

        poly_n = counting_polynomial(gadget, rs, d, variable="n", weyl=weyl)
        for n in ns:
            q = n + 1
            row = {"n": n, "P(n)": poly_n(n), "q": q}
            if gadget == "chevalley":
                oracle = self._oracle_order(rs, q)
                row["formula_order"] = group_order(rs, q, weyl)
                row["brute_force"] = oracle
                row["match"] = None if oracle is None else oracle == poly_n(n)
            if census:
                row["census"] = list(chevalley_census(rs, n, weyl)) if gadget == "chevalley" else \
                    [poly_n.coefficient(k) * n ** k for k in range(poly_n.degree + 1)]
            if enumerate_points:
                row["enumerated"] = self._enumerated(gadget, rs, d, n, False)
            rows.append(row)
        formula = FORMULAS["chevalley"] if gadget == "chevalley" else FORMULAS["binomial"]
        return {"rows": rows, "formula": formula}

    # ------------------------------------------------------------------
    # bruhat / eval
    # ------------------------------------------------------------------

    def bruhat_table(self, spec: str, q: int, census: bool = False) -> Dict[str, Any]:
        rs = self._type_a(spec)
        if not is_supported_field_order(q):
            raise UsageError(f"unsupported field order q={q}")
        if census:
            rows = bruhat_census(rs.rank, q, self.enumeration.group_budget)
            for row in rows:
                row["match"] = row["size"] == row["expected"]
            return {"rows": rows, "formula": FORMULAS["bruhat"]}

        group = enumerate_group(rs.rank, q, self.enumeration.group_budget)
        realization = realization_over_field(rs, field_of_order(q), self._weyl(rs))
        big_cell = sum(1 for g in group if big_cell_factor(g, realization) is not None)
        rows = [{
            "type": rs.name, "q": q, "order": len(group), "formula_order": group_order(rs, q, realization.weyl),
            "cells": len(realization.weyl), "big_cell": big_cell,
        }]
        return {"rows": rows, "formula": FORMULAS["bruhat"]}

    def eval_points(self, spec: str, group_spec: Optional[str] = None, monoid_spec: Optional[str] = None,
                    char: Optional[int] = None) -> Dict[str, Any]:
        """그룹환 (또는 모노이드의 환) 위의 e_G 상 행렬"""
        rs = self._type_a(spec)
        budget = self.enumeration.point_budget
        if (group_spec is None) == (monoid_spec is None):
            raise UsageError("eval needs exactly one of --group or --monoid")

        if monoid_spec is not None:
            if char is not None:
                raise UsageError("--char applies to --group evaluations only")
            try:
                M = monoid_from_spec(monoid_spec)
            except ValueError as e:
                raise UsageError(str(e))
            realization = realization_over_monoid(rs, M, self._weyl(rs))
            points = chevalley_points_monoid(rs, M, budget, realization.weyl)
            entries = [{"point": p.to_json(), "matrix": realization.e_G(p).to_json()} for p in points]
            return {"payload": {"root_system": rs.label, "monoid": M.name, "ring": realization.ring.name,
                                "points": entries}}

        D = self._group(group_spec)
        chi = None
        if char is not None:
            chars = characters(D)
            if not 0 <= char < len(chars):
                raise UsageError(f"--char must be in 0..{len(chars) - 1} for {D.name}")
            chi = chars[char]
        realization = realization_over_group_ring(rs, D)
        points = chevalley_points(rs, D, budget, ext=realization.ext)
        target = CyclotomicRing(D.exponent)
        entries = []
        for p in points.payloads():
            matrix = realization.e_G(p)
            entry = {"point": p.to_json(), "degree": p.degree, "matrix": matrix.to_json()}
            if chi is not None:
                specialized = matrix.map_entries(lambda x: realization.ring.specialize(x, chi), target)
                entry["specialized"] = specialized.to_json()
            entries.append(entry)
        payload = {"root_system": rs.label, "group": D.name, "ring": realization.ring.name, "points": entries}
        if chi is not None:
            payload["character"] = chi.to_json()
        return {"payload": payload}

    # ------------------------------------------------------------------
    # verify
    # ------------------------------------------------------------------

    def run_verify(self, suites: Optional[List[str]] = None, checks: Optional[List[str]] = None,
                   workers: Optional[int] = None, multiprocessing: bool = False,
                   save_reports: bool = False, progress: bool = True) -> Dict[str, Any]:
        if suites:
            self.config_manager.update_config("verify", suites=suites)
        if workers:
            self.config_manager.update_config("verify", max_workers=workers)
        if multiprocessing:
            self.config_manager.update_config("verify", use_multiprocessing=True)
        if save_reports:
            self.config_manager.update_config("verify", save_reports=True)
        if not progress:
            self.config_manager.update_config("verify", progress_bar=False)
        try:
            select_checks(self.config_manager.verify_config.suites, checks)
        except ValueError as e:
            raise UsageError(str(e))

        verifier = BatchVerifier(self.config_manager.verify_config, self.enumeration,
                                 self.config_manager.output_config.directory)
        verifier.run(checks)
        rows = [{"suite": r.suite, "check": r.name, "passed": r.passed, "error": r.error_message}
                for r in verifier.results]
        return {"rows": rows, "formula": FORMULAS["verify"], "passed": verifier.all_passed}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='f1points',
        description='f1points - F1 위의 등급 점 함자와 슈발레 군 계산 도구',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
사용 예시:
  # 근계와 바일 군
  f1points roots A2
  f1points weyl A2 --json

  # 확장 바일 군 요약
  f1points tits A2 --group Z/4:eps=2 --table

  # 점 개수 표
  f1points count --gadget chevalley --type A2 --n 1..6 --format csv
  f1points count --gadget pd --d 3 --n 2 --census

  # 브뤼아 세포, 평가 사상
  f1points bruhat --type A2 --q 3 --census
  f1points eval --type A1 --group Z/2:eps=1 --char 0

  # 전체 검증
  f1points verify --workers 4
        """
    )

    # 전역 옵션
    parser.add_argument('--config', help='설정 파일 경로')
    parser.add_argument('--log-level', choices=list(LOG_LEVELS), help='로깅 레벨')
    parser.add_argument('--format', choices=list(OUTPUT_FORMATS), help='출력 형식')
    parser.add_argument('--budget', type=int, help='점 열거 상한 (F1POINTS_BUDGET 보다 우선)')

    subparsers = parser.add_subparsers(dest='command', help='사용 가능한 명령어')

    def add_type(sub, positional: bool = True):
        if positional:
            sub.add_argument('spec', nargs='?', help='근계 (예: A2, G2, A3:adjoint)')
        sub.add_argument('--type', dest='type_spec', help='근계 (위치 인자 대신)')

    roots_parser = subparsers.add_parser('roots', help='근 목록')
    add_type(roots_parser)

    weyl_parser = subparsers.add_parser('weyl', help='바일 군 원소')
    add_type(weyl_parser)
    weyl_parser.add_argument('--census', action='store_true', help='길이별 개수와 푸앵카레 계수')
    weyl_parser.add_argument('--json', action='store_true', help='[{word, length, inversions}] JSON 출력')

    tits_parser = subparsers.add_parser('tits', help='확장 바일 군')
    add_type(tits_parser)
    tits_parser.add_argument('--group', help='점 있는 아벨군 (예: Z/4:eps=2)')
    tits_parser.add_argument('--table', action='store_true', help='곱셈표 요약 (JSON)')
    tits_parser.add_argument('--laws', action='store_true', help='군 법칙 전수 검사')

    count_parser = subparsers.add_parser('count', help='점 개수와 셈 다항식')
    count_parser.add_argument('--gadget', choices=list(GADGET_KINDS), default='chevalley', help='함자 종류')
    add_type(count_parser, positional=False)
    count_parser.add_argument('--d', type=int, help='좌표 수 (affine) 또는 차원 (pd)')
    count_parser.add_argument('--n', type=n_range, default=[1], help='|D| 또는 범위 a..b')
    count_parser.add_argument('--census', action='store_true', help='차수별 개수')
    count_parser.add_argument('--enumerate', action='store_true', help='점을 실제로 열거')
    count_parser.add_argument('--restricted', action='store_true', help='단순연결 덮개에서 제한한 부분 함자')

    bruhat_parser = subparsers.add_parser('bruhat', help='브뤼아 세포')
    add_type(bruhat_parser, positional=False)
    bruhat_parser.add_argument('--q', type=int, required=True, help='체의 위수')
    bruhat_parser.add_argument('--census', action='store_true', help='세포별 크기')

    eval_parser = subparsers.add_parser('eval', help='평가 사상 e_G 의 상 (JSON)')
    add_type(eval_parser, positional=False)
    eval_parser.add_argument('--group', help='점 있는 아벨군')
    eval_parser.add_argument('--monoid', help='F<q>, Zmod<m> 또는 <group>+0')
    eval_parser.add_argument('--char', type=int, help='지표 번호 (원분 정수환으로 특수화)')

    verify_parser = subparsers.add_parser('verify', help='불변식 전체 검증')
    verify_parser.add_argument('--suite', action='append', choices=list(SUITES), help='스위트 (반복 가능)')
    verify_parser.add_argument('--check', action='append', help='검사 이름 (반복 가능)')
    verify_parser.add_argument('--workers', type=int, help='워커 수')
    verify_parser.add_argument('--multiprocessing', action='store_true', help='멀티프로세싱 사용')
    verify_parser.add_argument('--save-reports', action='store_true', help='JSON/CSV 보고서 저장')
    verify_parser.add_argument('--no-progress', action='store_true', help='진행 표시 끄기')

    # config 커맨드
    config_parser = subparsers.add_parser('config', help='설정 관리')
    config_subparsers = config_parser.add_subparsers(dest='config_action')

    create_parser = config_subparsers.add_parser('create', help='기본 설정 파일 생성')
    create_parser.add_argument('--output', default='config.yaml', help='출력 파일 경로')
    create_parser.add_argument('--profile', choices=['quick', 'exhaustive', 'desk'], help='프리셋 프로필 사용')

    validate_parser = config_subparsers.add_parser('validate', help='설정 파일 검증')
    validate_parser.add_argument('config_file', help='검증할 설정 파일')

    config_subparsers.add_parser('show', help='현재 설정 표시')

    return parser


def _emit(result: Dict[str, Any], fmt: str, cli: F1PointsCLI):
    output = cli.config_manager.output_config
    if "payload" in result:
        text = render_json(result["payload"], indent=output.json_indent, ensure_ascii=output.ensure_ascii)
    else:
        text = render_table(result["rows"], fmt=fmt, formula=result["formula"])
    sys.stdout.write(text)


def _run_config(args, cli: F1PointsCLI) -> int:
    if args.config_action == 'create':
        if args.profile:
            presets = cli.config_manager.get_profile_presets()
            profile_config = cli.config_manager.create_profile(args.profile, **presets[args.profile])
            if not profile_config.save_config(args.output):
                return EXIT_FAILURE
            print(f"Created {args.profile} profile configuration: {args.output}")
        elif not create_default_config_file(args.output):
            return EXIT_FAILURE
        return EXIT_OK

    if args.config_action == 'validate':
        config_manager = ConfigManager(args.config_file)
        errors = config_manager.validate_config()
        if errors:
            print("설정 검증 오류:")
            for section, error_list in errors.items():
                print(f"  [{section}]:")
                for error in error_list:
                    print(f"    - {error}")
            return EXIT_FAILURE
        print("설정이 유효합니다!")
        return EXIT_OK

    if args.config_action == 'show':
        sys.stdout.write(render_json(cli.config_manager.to_dict()))
        return EXIT_OK

    print("config needs one of: create, validate, show", file=sys.stderr)
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """메인 함수 (종료 코드 반환)"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        cli = F1PointsCLI(args.config, args.log_level)
    except Exception as e:
        print(f"오류 발생: {str(e)}", file=sys.stderr)
        return EXIT_FAILURE

    if args.budget is not None:
        if args.budget < 1:
            print("usage error: --budget must be positive", file=sys.stderr)
            return EXIT_USAGE
        cli.config_manager.update_config('enumeration', point_budget=args.budget)
    fmt = args.format or cli.config_manager.output_config.format

    try:
        if args.command == 'config':
            return _run_config(args, cli)

        spec = getattr(args, 'type_spec', None) or getattr(args, 'spec', None)
        passed = True
        if args.command == 'roots':
            result = cli.roots_table(spec)
        elif args.command == 'weyl':
            result = cli.weyl_table(spec, census=args.census)
            if args.json:
                result = {"payload": result["rows"]}
        elif args.command == 'tits':
            result = cli.tits_report(spec, args.group, table=args.table, laws=args.laws)
        elif args.command == 'count':
            result = cli.count_table(args.gadget, spec, args.d, args.n, census=args.census,
                                     enumerate_points=args.enumerate, restricted=args.restricted)
        elif args.command == 'bruhat':
            result = cli.bruhat_table(spec, args.q, census=args.census)
        elif args.command == 'eval':
            result = cli.eval_points(spec, args.group, args.monoid, args.char)
        else:
            result = cli.run_verify(args.suite, args.check, args.workers, args.multiprocessing,
                                    args.save_reports, progress=not args.no_progress)
        passed = result.pop("passed", True)

        _emit(result, fmt, cli)
        return EXIT_OK if passed else EXIT_FAILURE

    except UsageError as e:
        print(f"usage error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as e:
        print(f"budget exceeded: {str(e)}", file=sys.stderr)
        return EXIT_BUDGET
    except KeyboardInterrupt:
        print("\n처리가 중단되었습니다.", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        print(f"오류 발생: {str(e)}", file=sys.stderr)
        logging.getLogger(__name__).error(f"CLI error: {str(e)}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
