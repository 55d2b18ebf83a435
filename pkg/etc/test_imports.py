#!/usr/bin/env python3
"""
Import 테스트 스크립트
모든 모듈의 import 상태를 확인합니다.
"""

import os
import sys
import traceback

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

IMPORTS_TO_TEST = [
    # 기본 라이브러리
    ("yaml", "import yaml"),
    ("numpy", "import numpy"),
    ("scipy", "from scipy.signal import convolve2d"),
    ("pandas", "import pandas"),
    ("tqdm", "from tqdm import tqdm"),

    # 프로젝트 모듈
    ("config_manager", "from config.config_manager import ConfigManager"),
    ("arith", "from core.arith import gf_make, group_make, reduced_group_ring"),
    ("roots", "from core.roots import root_system"),
    ("weyl", "from core.weyl import WeylGroup"),
    ("tits", "from core.tits import TitsExtension"),
    ("gadgets", "from core.gadgets import chevalley_points"),
    ("chevalley", "from core.chevalley import bruhat_decompose"),
    ("table_util", "from utils.table_util import render_table"),
    ("batch_verifier", "from batch.batch_verifier import BatchVerifier"),
    ("cli", "from f1points_cli import main"),
]


def try_import(module_name, import_statement):
    """개별 모듈 import 시도"""
    try:
        exec(import_statement, {})
        print(f"✅ {module_name}: 성공")
        return True
    except Exception as e:
        print(f"❌ {module_name}: {e}")
        print(f"   Import statement: {import_statement}")
        return False


def failed_imports():
    return [name for name, statement in IMPORTS_TO_TEST if not try_import(name, statement)]


def test_all_imports():
    """모든 모듈 import 테스트"""
    assert failed_imports() == []


def test_basic_functionality():
    """기본 기능 테스트"""
    from config.config_manager import ConfigManager
    from core.roots import root_system

    config = ConfigManager()
    assert not config.validate_config()
    assert len(config.to_dict()) == 4
    assert len(root_system("A2").roots) == 6


def main():
    """메인 함수"""
    print("🚀 f1points - Import 및 기능 테스트")
    print(f"🐍 Python 버전: {sys.version}")
    print()

    print("🔍 모듈 Import 테스트")
    print("=" * 50)
    failed = failed_imports()
    print("\n" + "=" * 50)
    if failed:
        print(f"❌ 실패한 모듈: {len(failed)}개")
        print(f"   {', '.join(failed)}")
        print("\n해결 방법:")
        print("  pip install -r requirements.txt")
        return 1

    print("\n🧪 기본 기능 테스트")
    try:
        test_basic_functionality()
    except Exception as e:
        print(f"❌ 기능 테스트 실패: {e}")
        traceback.print_exc()
        return 1

    print("\n🎉 모든 테스트 통과!")
    print("\n다음 단계:")
    print("  python f1points_cli.py --help")
    return 0


if __name__ == "__main__":
    exit(main())
