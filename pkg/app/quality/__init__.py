"""
Theorem verification for the Verma module engine
"""
from .runner import TheoremRunner
from .rules import VerificationConfig, get_all_rule_codes, get_rules

__all__ = ['TheoremRunner', 'VerificationConfig', 'get_all_rule_codes', 'get_rules']
