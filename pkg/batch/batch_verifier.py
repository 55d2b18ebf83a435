#!/usr/bin/env python3
"""
배치 검증 모듈
등록된 불변식 검사들을 병렬로 실행하고 요약/보고서를 만든다
"""

import argparse
import csv
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from tqdm import tqdm

# 상위 디렉토리를 Python 경로에 추가
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config_manager import ConfigManager, EnumerationConfig, VerifyConfig
from utils.table_util import to_jsonable

from .checks import VerifyCheck, run_check, select_checks

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """검사 하나의 결과"""
    name: str
    suite: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    error_message: Optional[str] = None


def _timed_check(name: str, enumeration: EnumerationConfig) -> Dict[str, Any]:
    """워커에서 실행되는 단위 작업 (예외는 결과로 변환)"""
    start_time = time.time()
    try:
        passed, detail = run_check(name, enumeration)
        return {"passed": bool(passed), "detail": to_jsonable(detail),
                "elapsed": time.time() - start_time, "error_message": None}
    except Exception as e:
        logger.error(f"Check {name} raised: {str(e)}", exc_info=True)
        return {"passed": False, "detail": {}, "elapsed": time.time() - start_time,
                "error_message": f"{type(e).__name__}: {e}"}


class BatchVerifier:
    """불변식 검사 배치 실행기"""

    def __init__(self,
                 config: Optional[VerifyConfig] = None,
                 enumeration: Optional[EnumerationConfig] = None,
                 output_dir: Optional[str] = None):
        """
        Args:
            config: 워커 수, 진행 표시, 보고서 저장, 스위트 선택
            enumeration: 검사들이 쓰는 열거 상한
            output_dir: 보고서 디렉토리 (save_reports 일 때만 사용)
        """
        self.config = config or VerifyConfig()
        self.enumeration = enumeration or EnumerationConfig()
        self.output_dir = Path(output_dir or "reports")
        self.results: List[CheckResult] = []

        logger.info(f"BatchVerifier initialized: {self.config.max_workers} workers, "
                    f"suites={self.config.suites or 'all'}")

    def run(self, names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        """
        선택된 검사 전부 실행

        Args:
            names: 특정 항목 이름만 실행할 때

        Returns:
            batch_info 와 결과 목록을 담은 요약
        """
        checks = select_checks(self.config.suites, names)
        if not checks:
            logger.warning("No checks selected")
            return self._generate_summary([], 0.0)

        start_time = time.time()
        by_name: Dict[str, CheckResult] = {}

        if self.config.max_workers <= 1:
            with tqdm(total=len(checks), desc="Verifying", unit="check",
                      disable=not self.config.progress_bar) as pbar:
                for check in checks:
                    by_name[check.name] = self._to_result(check, _timed_check(check.name, self.enumeration))
                    pbar.update(1)
                    pbar.set_postfix(self._postfix(by_name.values()))
        else:
            executor_class = ProcessPoolExecutor if self.config.use_multiprocessing else ThreadPoolExecutor
            with executor_class(max_workers=self.config.max_workers) as executor:
                future_to_check = {executor.submit(_timed_check, check.name, self.enumeration): check
                                   for check in checks}
                with tqdm(total=len(checks), desc="Verifying", unit="check",
                          disable=not self.config.progress_bar) as pbar:
                    for future in as_completed(future_to_check):
                        check = future_to_check[future]
                        try:
                            outcome = future.result()
                        except Exception as e:
                            logger.error(f"Executor error for {check.name}: {str(e)}")
                            outcome = {"passed": False, "detail": {}, "elapsed": 0.0,
                                       "error_message": f"executor_error: {e}"}
                        by_name[check.name] = self._to_result(check, outcome)
                        pbar.update(1)
                        pbar.set_postfix(self._postfix(by_name.values()))

        # 완료 순서와 무관하게 등록 순서로 병합
        self.results = [by_name[check.name] for check in checks]
        summary = self._generate_summary(self.results, time.time() - start_time)

        if self.config.save_reports:
            self._save_reports(summary)

        logger.info(f"Verification finished: {summary['batch_info']['passed_checks']}/"
                    f"{summary['batch_info']['total_checks']} passed")
        return summary

    @staticmethod
    def _postfix(results) -> Dict[str, int]:
        results = list(results)
        return {"Passed": sum(1 for r in results if r.passed),
                "Failed": sum(1 for r in results if not r.passed)}

    def _to_result(self, check: VerifyCheck, outcome: Dict[str, Any]) -> CheckResult:
        result = CheckResult(name=check.name, suite=check.suite, **outcome)
        if not result.passed:
            logger.warning(f"Check failed: {check.suite}/{check.name} {result.error_message or ''}".rstrip())
        return result

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def _generate_summary(self, results: List[CheckResult], total_time: float) -> Dict[str, Any]:
        total = len(results)
        passed = sum(1 for r in results if r.passed)
        return {
            "batch_info": {
                "total_checks": total,
                "passed_checks": passed,
                "failed_checks": total - passed,
                "success_rate": round(passed / total * 100, 2) if total else 0.0,
                "total_time": round(total_time, 2),
                "max_workers": self.config.max_workers,
                "processed_at": datetime.now().isoformat(),
            },
            "enumeration_config": asdict(self.enumeration),
            "results": [asdict(r) for r in results],
        }

    def _save_reports(self, summary: Dict[str, Any]):
        """JSON 요약과 CSV 상세 저장"""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

        json_path = self.output_dir / f"verify_summary_{timestamp}.json"
        with open(json_path, "w", encoding="utf-8") as f:
            json.dump(summary, f, ensure_ascii=False, indent=2)

        csv_path = self.output_dir / f"verify_details_{timestamp}.csv"
        with open(csv_path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(["Suite", "Check", "Passed", "Elapsed (s)", "Error Message"])
            for r in summary["results"]:
                writer.writerow([r["suite"], r["name"], r["passed"], f"{r['elapsed']:.2f}", r["error_message"] or ""])

        logger.info(f"Verification reports saved: {json_path}, {csv_path}")

    def failed_results(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """독립 실행용 진입점"""
    parser = argparse.ArgumentParser(description="f1points batch verifier")
    parser.add_argument("--config", help="Config file path")
    parser.add_argument("--suite", action="append", help="Suite to run (repeatable)")
    parser.add_argument("--workers", type=int, help="Number of worker threads/processes")
    parser.add_argument("--multiprocessing", action="store_true", help="Use processes instead of threads")
    parser.add_argument("--save-reports", action="store_true", help="Write JSON/CSV reports")
    args = parser.parse_args(argv)

    manager = ConfigManager(args.config)
    manager.setup_logging()
    verify = manager.verify_config
    if args.suite:
        verify.suites = args.suite
    if args.workers:
        verify.max_workers = args.workers
    if args.multiprocessing:
        verify.use_multiprocessing = True
    if args.save_reports:
        verify.save_reports = True

    verifier = BatchVerifier(verify, manager.enumeration_config, manager.output_config.directory)
    summary = verifier.run()
    info = summary["batch_info"]
    print(f"passed {info['passed_checks']}/{info['total_checks']} ({info['success_rate']:.1f}%)")
    return 0 if verifier.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
