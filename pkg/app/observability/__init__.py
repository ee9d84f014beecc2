"""
Observability Module for the Verma engine
"""
from .log_config import JsonLineFormatter, setup_logging

__all__ = ['JsonLineFormatter', 'setup_logging']
