"""
Theorem Verification Runner

Executes the verification rules and aggregates a PASS/FAIL status.
Any ERROR result fails the run.
"""
import logging
import time
from typing import Any, Dict, List, Optional, Sequence

from app.exceptions import VerificationError
from .rules import VerificationConfig, get_rules

logger = logging.getLogger(__name__)


class TheoremRunner:
    """Runs theorem rules and reports an overall status"""

    def __init__(self, config: Optional[VerificationConfig] = None):
        """
        Initialize runner

        Args:
            config: Grid bounds and parameter values shared by all rules
        """
        self.config = config or VerificationConfig()

    def run(self, rule_codes: Optional[Sequence[str]] = None, fail_hard: bool = False) -> Dict[str, Any]:
        """
        Run the selected rules (all by default)

        Args:
            rule_codes: Subset of rule codes to run
            fail_hard: Raise VerificationError instead of returning a FAIL status

        Returns:
            {
                'status': 'PASS' | 'FAIL',
                'summary': {...},
                'results': [...]
            }
        """
        rules = get_rules(rule_codes)
        logger.info(f"Running {len(rules)} theorem rules (pmax={self.config.pmax}, qmax={self.config.qmax})")

        results: List[Dict[str, Any]] = []
        error_count = 0
        info_count = 0

        for rule in rules:
            started = time.monotonic()
            try:
                passed, severity, message, details = rule.check(self.config)
            except Exception as e:
                logger.error(f"Error running rule {rule.rule_code}: {e}")
                passed, severity, message, details = False, 'ERROR', f'Rule execution failed: {e}', {'error': str(e)}

            logger.info(f"{rule.rule_code}: {'passed' if passed else 'FAILED'} in {time.monotonic() - started:.1f}s")
            results.append({
                'rule_code': rule.rule_code,
                'name': rule.name,
                'passed': passed,
                'severity': severity,
                'message': message,
                'details': details,
            })

            if severity == 'ERROR':
                error_count += 1
            else:
                info_count += 1

        overall_status = 'FAIL' if error_count > 0 else 'PASS'
        logger.info(f"Verification complete: {overall_status} (errors: {error_count})")

        if overall_status == 'FAIL' and fail_hard:
            failed = [r['rule_code'] for r in results if not r['passed']]
            raise VerificationError(f"Theorem rules failed: {failed}")

        return {
            'status': overall_status,
            'summary': {
                'error_count': error_count,
                'info_count': info_count,
                'total_rules_checked': len(results),
            },
            'results': results,
        }
