#!/usr/bin/env python3
"""
설정 관리 모듈
열거 한도, 출력 형식, 검증 실행, 로깅 설정을 관리하는 기능 제공
"""

import os
import json
import yaml
import logging
from typing import Dict, Any, Optional, List
from pathlib import Path
from dataclasses import dataclass, asdict, field, replace
from datetime import datetime

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "F1POINTS_BUDGET"
OUTPUT_FORMATS = ("csv", "json", "pretty")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class EnumerationConfig:
    """열거 한도 설정"""
    point_budget: int = 10 ** 6
    root_cap: int = 240
    weyl_cap: int = 10 ** 5
    group_budget: int = 10 ** 8
    extension_cap: int = 5000


@dataclass
class OutputConfig:
    """출력 설정"""
    format: str = "csv"
    json_indent: int = 2
    ensure_ascii: bool = False
    directory: str = "reports"


@dataclass
class VerifyConfig:
    """불변식 검증 실행 설정"""
    max_workers: int = 4
    use_multiprocessing: bool = False
    progress_bar: bool = True
    save_reports: bool = False
    suites: List[str] = field(default_factory=list)


@dataclass
class LoggingConfig:
    """로깅 설정"""
    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file: Optional[str] = None
    console: bool = True
    max_file_size: str = "10MB"
    backup_count: int = 5


class ConfigManager:
    """설정 관리 클래스"""

    def __init__(self, config_path: Optional[str] = None):
        """
        설정 관리자 초기화

        Args:
            config_path: 설정 파일 경로
        """
        self.config_path = config_path
        self.config_data = {}

        self._initialize_default_configs()

        if config_path and os.path.exists(config_path):
            self.load_config(config_path)

        self.apply_env_overrides()

    def _initialize_default_configs(self):
        """기본 설정 초기화"""
        self.enumeration_config = EnumerationConfig()
        self.output_config = OutputConfig()
        self.verify_config = VerifyConfig()
        self.logging_config = LoggingConfig()

    def load_config(self, config_path: str) -> bool:
        """
        설정 파일 로드

        Args:
            config_path: 설정 파일 경로

        Returns:
            로드 성공 여부
        """
        try:
            file_ext = Path(config_path).suffix.lower()

            with open(config_path, 'r', encoding='utf-8') as f:
                if file_ext in ['.yaml', '.yml']:
                    self.config_data = yaml.safe_load(f) or {}
                elif file_ext == '.json':
                    self.config_data = json.load(f)
                else:
                    raise ValueError(f"Unsupported config file format: {file_ext}")

            self._apply_config()

            logger.info(f"Configuration loaded from {config_path}")
            return True

        except Exception as e:
            logger.error(f"Failed to load config from {config_path}: {str(e)}")
            return False

    def _apply_config(self):
        """로드된 설정을 적용"""
        if 'enumeration' in self.config_data:
            enum_data = self.config_data['enumeration']
            self.enumeration_config = EnumerationConfig(
                point_budget=enum_data.get('point_budget', self.enumeration_config.point_budget),
                root_cap=enum_data.get('root_cap', self.enumeration_config.root_cap),
                weyl_cap=enum_data.get('weyl_cap', self.enumeration_config.weyl_cap),
                group_budget=enum_data.get('group_budget', self.enumeration_config.group_budget),
                extension_cap=enum_data.get('extension_cap', self.enumeration_config.extension_cap)
            )

        if 'output' in self.config_data:
            output_data = self.config_data['output']
            self.output_config = OutputConfig(
                format=output_data.get('format', self.output_config.format),
                json_indent=output_data.get('json_indent', self.output_config.json_indent),
                ensure_ascii=output_data.get('ensure_ascii', self.output_config.ensure_ascii),
                directory=output_data.get('directory', self.output_config.directory)
            )

        if 'verify' in self.config_data:
            verify_data = self.config_data['verify']
            self.verify_config = VerifyConfig(
                max_workers=verify_data.get('max_workers', self.verify_config.max_workers),
                use_multiprocessing=verify_data.get('use_multiprocessing', self.verify_config.use_multiprocessing),
                progress_bar=verify_data.get('progress_bar', self.verify_config.progress_bar),
                save_reports=verify_data.get('save_reports', self.verify_config.save_reports),
                suites=list(verify_data.get('suites', self.verify_config.suites) or [])
            )

        if 'logging' in self.config_data:
            log_data = self.config_data['logging']
            self.logging_config = LoggingConfig(
                level=log_data.get('level', self.logging_config.level),
                format=log_data.get('format', self.logging_config.format),
                file=log_data.get('file', self.logging_config.file),
                console=log_data.get('console', self.logging_config.console),
                max_file_size=log_data.get('max_file_size', self.logging_config.max_file_size),
                backup_count=log_data.get('backup_count', self.logging_config.backup_count)
            )

    def apply_env_overrides(self):
        """F1POINTS_BUDGET 환경 변수로 점 열거 한도 재정의"""
        value = os.environ.get(BUDGET_ENV_VAR)
        if value is None:
            return
        try:
            budget = int(value)
        except ValueError:
            logger.warning(f"Ignoring non-integer {BUDGET_ENV_VAR}={value!r}")
            return
        self.enumeration_config.point_budget = budget
        logger.info(f"Point budget overridden by {BUDGET_ENV_VAR}: {budget}")

    def save_config(self, output_path: str, format: str = 'yaml') -> bool:
        """
        현재 설정을 파일로 저장

        Args:
            output_path: 출력 파일 경로
            format: 파일 형식 (yaml, json)

        Returns:
            저장 성공 여부
        """
        try:
            config_dict = self.to_dict()

            config_dict['_metadata'] = {
                'generated_at': datetime.now().isoformat(),
                'version': '1.0.0',
                'description': 'f1points configuration'
            }

            Path(output_path).parent.mkdir(parents=True, exist_ok=True)

            with open(output_path, 'w', encoding='utf-8') as f:
                if format.lower() == 'yaml':
                    yaml.dump(config_dict, f, default_flow_style=False, allow_unicode=True, indent=2)
                elif format.lower() == 'json':
                    json.dump(config_dict, f, ensure_ascii=False, indent=2)
                else:
                    raise ValueError(f"Unsupported format: {format}")

            logger.info(f"Configuration saved to {output_path}")
            return True

        except Exception as e:
            logger.error(f"Failed to save config to {output_path}: {str(e)}")
            return False

    def to_dict(self) -> Dict[str, Any]:
        """설정을 딕셔너리로 변환"""
        return {
            'enumeration': asdict(self.enumeration_config),
            'output': asdict(self.output_config),
            'verify': asdict(self.verify_config),
            'logging': asdict(self.logging_config)
        }

    def _section(self, section: str):
        sections = {
            'enumeration': self.enumeration_config,
            'output': self.output_config,
            'verify': self.verify_config,
            'logging': self.logging_config,
        }
        if section not in sections:
            raise ValueError(f"Unknown config section: {section}")
        return sections[section]

    def update_config(self, section: str, **kwargs):
        """
        설정 업데이트

        Args:
            section: 설정 섹션명
            **kwargs: 업데이트할 설정값들
        """
        target = self._section(section)
        for key, value in kwargs.items():
            if hasattr(target, key):
                setattr(target, key, value)
            else:
                logger.warning(f"Ignoring unknown key '{key}' in section '{section}'")

    def validate_config(self) -> Dict[str, List[str]]:
        """
        설정 유효성 검사

        Returns:
            섹션별 오류 메시지 딕셔너리
        """
        errors = {}

        enum_errors = []
        for name in ('point_budget', 'root_cap', 'weyl_cap', 'group_budget', 'extension_cap'):
            if getattr(self.enumeration_config, name) < 1:
                enum_errors.append(f"{name} must be at least 1")
        if enum_errors:
            errors['enumeration'] = enum_errors

        output_errors = []
        if self.output_config.format not in OUTPUT_FORMATS:
            output_errors.append(f"format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.output_config.json_indent < 0:
            output_errors.append("json_indent must be non-negative")
        if output_errors:
            errors['output'] = output_errors

        verify_errors = []
        if self.verify_config.max_workers < 1:
            verify_errors.append("max_workers must be at least 1")
        if verify_errors:
            errors['verify'] = verify_errors

        log_errors = []
        if self.logging_config.level.upper() not in LOG_LEVELS:
            log_errors.append(f"level must be one of {', '.join(LOG_LEVELS)}")
        if self.logging_config.backup_count < 0:
            log_errors.append("backup_count must be non-negative")
        if log_errors:
            errors['logging'] = log_errors

        return errors

    def setup_logging(self, level: Optional[str] = None):
        """
        로깅 설정 적용 (콘솔 핸들러는 stderr)

        Args:
            level: 설정 파일의 레벨을 재정의할 레벨
        """
        log_level = getattr(logging, (level or self.logging_config.level).upper())

        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        formatter = logging.Formatter(self.logging_config.format)

        if self.logging_config.console:
            console_handler = logging.StreamHandler()
            console_handler.setFormatter(formatter)
            root_logger.addHandler(console_handler)

        if self.logging_config.file:
            try:
                from logging.handlers import RotatingFileHandler

                max_bytes = self._parse_size(self.logging_config.max_file_size)

                file_handler = RotatingFileHandler(
                    self.logging_config.file,
                    maxBytes=max_bytes,
                    backupCount=self.logging_config.backup_count
                )
                file_handler.setFormatter(formatter)
                root_logger.addHandler(file_handler)
            except Exception as e:
                logger.error(f"Failed to setup file logging: {str(e)}")

        root_logger.setLevel(log_level)

    def _parse_size(self, size_str: str) -> int:
        """크기 문자열을 바이트로 변환"""
        size_str = size_str.upper()
        multipliers = {
            'KB': 1024,
            'MB': 1024 ** 2,
            'GB': 1024 ** 3,
            'B': 1
        }

        for suffix, multiplier in multipliers.items():
            if size_str.endswith(suffix):
                return int(float(size_str[:-len(suffix)]) * multiplier)

        return int(size_str)

    def create_profile(self, profile_name: str, **overrides) -> 'ConfigManager':
        """
        설정 프로필 생성

        Args:
            profile_name: 프로필 이름
            **overrides: 재정의할 설정값들

        Returns:
            새로운 ConfigManager 인스턴스
        """
        profile_config = ConfigManager()
        profile_config.enumeration_config = replace(self.enumeration_config)
        profile_config.output_config = replace(self.output_config)
        profile_config.verify_config = replace(self.verify_config, suites=list(self.verify_config.suites))
        profile_config.logging_config = replace(self.logging_config)

        for section_key, section_overrides in overrides.items():
            if isinstance(section_overrides, dict):
                profile_config.update_config(section_key, **section_overrides)

        logger.debug(f"Created profile '{profile_name}'")
        return profile_config

    def get_profile_presets(self) -> Dict[str, Dict[str, Any]]:
        """미리 정의된 프로필 반환"""
        return {
            'quick': {
                'enumeration': {'point_budget': 10 ** 4, 'group_budget': 10 ** 6, 'extension_cap': 500},
                'verify': {'suites': ['arith', 'roots', 'weyl', 'tits']}
            },
            'exhaustive': {
                'enumeration': {'point_budget': 10 ** 7, 'group_budget': 10 ** 8, 'extension_cap': 5000},
                'verify': {'max_workers': 8, 'save_reports': True}
            },
            'desk': {
                'enumeration': {'point_budget': 10 ** 6, 'group_budget': 10 ** 8, 'extension_cap': 5000},
                'verify': {'max_workers': 4}
            }
        }


def create_default_config_file(output_path: str = "config.yaml"):
    """기본 설정 파일 생성"""
    config_manager = ConfigManager()

    success = config_manager.save_config(output_path, 'yaml')
    if success:
        print(f"Default configuration file created: {output_path}")
    else:
        print(f"Failed to create configuration file: {output_path}")

    return success


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description='f1points Configuration Manager')
    parser.add_argument('--create-default', action='store_true', help='Create default config file')
    parser.add_argument('--config', help='Config file path to load and validate')
    parser.add_argument('--output', default='config.yaml', help='Output config file path')
    parser.add_argument('--profile', choices=['quick', 'exhaustive', 'desk'],
                        help='Create config with predefined profile')

    args = parser.parse_args()

    if args.create_default:
        create_default_config_file(args.output)

    elif args.config:
        config_manager = ConfigManager(args.config)

        errors = config_manager.validate_config()
        if errors:
            print("Configuration validation errors:")
            for section, error_list in errors.items():
                print(f"  [{section}]:")
                for error in error_list:
                    print(f"    - {error}")
        else:
            print("Configuration is valid!")

        print("\nConfiguration Summary:")
        print(f"  Point budget: {config_manager.enumeration_config.point_budget}")
        print(f"  Group budget: {config_manager.enumeration_config.group_budget}")
        print(f"  Output format: {config_manager.output_config.format}")
        print(f"  Verify workers: {config_manager.verify_config.max_workers}")

    elif args.profile:
        config_manager = ConfigManager()
        presets = config_manager.get_profile_presets()
        profile_config = config_manager.create_profile(args.profile, **presets[args.profile])
        profile_config.save_config(args.output)
        print(f"Created {args.profile} profile configuration: {args.output}")

    else:
        print("Please specify an action. Use --help for more information.")
