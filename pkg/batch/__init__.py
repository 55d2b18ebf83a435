"""
Batch verification module for f1points
"""

from .batch_verifier import BatchVerifier, CheckResult
from .checks import CHECK_REGISTRY, SUITES, VerifyCheck, select_checks

__all__ = [
    'BatchVerifier',
    'CheckResult',
    'CHECK_REGISTRY',
    'SUITES',
    'VerifyCheck',
    'select_checks'
]
