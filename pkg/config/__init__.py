"""
Configuration management module for f1points
"""

from .config_manager import (
    ConfigManager,
    EnumerationConfig,
    OutputConfig,
    VerifyConfig,
    LoggingConfig,
    BUDGET_ENV_VAR,
    create_default_config_file
)

__all__ = [
    'ConfigManager',
    'EnumerationConfig',
    'OutputConfig',
    'VerifyConfig',
    'LoggingConfig',
    'BUDGET_ENV_VAR',
    'create_default_config_file'
]
