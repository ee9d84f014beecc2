"""
CLI for Verma module computations

Every command prints one report; JSON (the default) is byte-deterministic.
Exit codes: 0 success, 1 failed verification, 2 bad input.
"""
import argparse
import logging
import re
import sys
from typing import Callable, Dict, List, Optional

from app.algebra import Generator, check_antisymmetry, check_grading, check_jacobi, check_omega
from app.analytics.quotient import Branch, classify, quotient_singular_check
from app.analytics.shapovalov import gram, gram_det, gram_det_roots
from app.analytics.singular import (
    ANNIHILATORS,
    classify_level,
    matches_closed_form,
    proportional,
    q0_candidate,
    q0_coefficient_table,
    solve_singular,
)
from app.config import get_settings
from app.exceptions import CGAVermaError, ParameterError
from app.field import format_rational, format_value, parse_rational
from app.observability import setup_logging
from app.quality import TheoremRunner, VerificationConfig, get_all_rule_codes
from app.schemas import (
    ActReport,
    ClassifyReport,
    ClosedFormReport,
    GramReport,
    JacobiReport,
    Report,
    SingularReport,
    VerifyReport,
    VersionReport,
    WeightsReport,
    render_json,
)
from app.verma import ParameterPoint, VermaModule, WeightLabel, enumerate_basis
from app.version import get_version_info

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

# "-3" and "-1/2" are values, not flags
NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


class RationalArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads a negative "num/den" as an argument value"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_RATIONAL


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unparsable rational: {text!r}") from None


def _generator_arg(text: str) -> Generator:
    try:
        return Generator.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def resolve_point(args) -> ParameterPoint:
    """
    Parameter point from --d/--r/--theta and --generic

    All three values give a specialized point; --generic with --theta and
    --r keeps d symbolic; no values at all means fully generic.
    """
    given = {name: getattr(args, name, None) for name in ('theta', 'd', 'r')}
    if getattr(args, 'generic', False):
        if given['theta'] is not None and given['r'] is not None:
            return ParameterPoint.generic_d(given['theta'], given['r'])
        return ParameterPoint.generic()
    if all(v is not None for v in given.values()):
        return ParameterPoint.specialized(given['theta'], given['d'], given['r'])
    if all(v is None for v in given.values()):
        return ParameterPoint.generic()
    missing = sorted(name for name, v in given.items() if v is None)
    raise ParameterError(f"missing --{', --'.join(missing)} (give --d, --r and --theta together, or --generic)")


def _basis_json(basis) -> List[Dict[str, int]]:
    return [{'h': b.h, 'k': b.k, 'l': b.l, 'm': b.m} for b in basis]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_weights(args):
    w = WeightLabel(args.p, args.q)
    basis = enumerate_basis(w)
    return WeightsReport(p=w.p, q=w.q, dimension=len(basis), basis=_basis_json(basis)), EXIT_OK


def cmd_act(args):
    params = resolve_point(args)
    module = VermaModule(params)
    mono = (args.h, args.k, args.l, args.m)
    result = module.act(args.generator, module.basis_vector(mono))
    report = ActReport(
        generator=args.generator.value,
        monomial=dict(zip('hklm', mono)),
        parameters=params.describe(),
        result=result.to_json(),
    )
    return report, EXIT_OK


def cmd_singular(args):
    params = resolve_point(args)
    module = VermaModule(params)
    w = WeightLabel(args.p, args.q)
    found = solve_singular(w, params, module)
    d = params.rational_d
    report = SingularReport(
        p=w.p, q=w.q,
        parameters=params.describe(),
        weight_dimension=len(enumerate_basis(w)),
        dimension=len(found),
        expected=classify_level(w, d) if d is not None else None,
        nullspace=[c.to_json() for c in found],
        matches_closed_form=matches_closed_form(found, module),
    )
    return report, EXIT_OK


def cmd_gram(args):
    params = resolve_point(args)
    module = VermaModule(params)
    w = WeightLabel(args.p, args.q)
    g = gram(w, params, module)
    roots = None
    if params.is_specialized:
        det = gram_det(w, params, module)
    else:
        det, found = gram_det_roots(w, params, module)
        roots = [format_rational(x) for x in found]
    report = GramReport(
        p=w.p, q=w.q,
        parameters=params.describe(),
        basis=_basis_json(g.basis),
        matrix=g.to_json(),
        symmetric=g.is_symmetric(),
        det=format_value(det),
        rational_roots_in_d=roots,
    )
    return report, EXIT_OK


def cmd_classify(args):
    verdict = classify(args.d, args.r, args.theta)
    settings = get_settings()
    pmax = args.pmax if args.pmax is not None else max(settings.default_pmax, (verdict.p0 or 0) + 3)
    qmax = args.qmax if args.qmax is not None else settings.default_qmax
    fields = verdict.to_json()
    levels, hw_dependent, passed = [], None, True
    if verdict.branch == Branch.quotient_irreducible:
        check = quotient_singular_check(verdict.d, verdict.r, verdict.theta, pmax, qmax)
        levels = [row.to_json() for row in check.levels]
        hw_dependent = check.hw_power_dependent
        passed = check.passed
    report = ClassifyReport(
        pmax=pmax, qmax=qmax, levels=levels, hw_power_dependent=hw_dependent, passed=passed, **fields,
    )
    return report, EXIT_OK if passed else EXIT_FAILED


def cmd_jacobi(args):
    jacobi = check_jacobi()
    scans = [jacobi, check_antisymmetry(), check_omega(), check_grading()]
    report = JacobiReport(
        checked=jacobi.checked,
        passed=all(s.passed for s in scans),
        violations=jacobi.violations,
        scans=[{'name': s.name, 'checked': s.checked, 'passed': s.passed, 'violations': s.violations}
               for s in scans],
    )
    return report, EXIT_OK if report.passed else EXIT_FAILED


def cmd_closed_form(args):
    params = resolve_point(args)
    module = VermaModule(params)
    vector = module.closed_form_power(args.p)
    table = q0_coefficient_table(args.p, params)
    report = ClosedFormReport(
        p=args.p,
        parameters=params.describe(),
        vector=vector.to_json(),
        q0_table=[{'l': l, 'm': m, 'coef': format_value(c)} for (l, m), c in sorted(table.items())],
        matches_q0_table=proportional(vector, q0_candidate(args.p, params)),
        annihilated_by={x.value: module.act(x, vector).is_zero() for x in ANNIHILATORS},
    )
    return report, EXIT_OK


def cmd_verify(args):
    settings = get_settings()
    codes = [code.strip() for code in args.rules.split(',')] if args.rules else None
    config = VerificationConfig(pmax=args.pmax, qmax=args.qmax, threads=settings.threads)
    result = TheoremRunner(config).run(rule_codes=codes)
    report = VerifyReport(
        status=result['status'],
        pmax=args.pmax,
        qmax=args.qmax,
        summary=result['summary'],
        results=result['results'],
    )
    return report, EXIT_OK if result['status'] == 'PASS' else EXIT_FAILED


def cmd_version(args):
    info = get_version_info()
    report = VersionReport(version=info['version'], engine=info['engine'], rules=get_all_rule_codes())
    return report, EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--format', choices=['json', 'text'], default='json', help='Report format')
    parser.add_argument('--output', help='Write the report to this file instead of stdout')
    parser.add_argument('--log-level', help='Override CGA_VERMA_LOG_LEVEL for this run')
    parser.add_argument('--log-format', choices=['text', 'json'], help='Override CGA_VERMA_LOG_FORMAT')


def _add_point(parser: argparse.ArgumentParser, generic_help: str):
    parser.add_argument('--d', type=_rational_arg, help='Highest weight d (num/den)')
    parser.add_argument('--r', type=_rational_arg, help='Highest weight r (num/den)')
    parser.add_argument('--theta', type=_rational_arg, help='Central charge theta (num/den, nonzero)')
    parser.add_argument('--generic', '--generic-d', dest='generic', action='store_true', help=generic_help)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = RationalArgumentParser(prog='python -m app.analytics',
                                     description='Exact Verma module computations for the exotic CGA')
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    weights_parser = subparsers.add_parser('weights', help='Ordered basis and dimension of a weight space')
    weights_parser.add_argument('--p', type=int, required=True)
    weights_parser.add_argument('--q', type=int, required=True)
    weights_parser.set_defaults(func=cmd_weights)

    act_parser = subparsers.add_parser('act', help='Apply a generator to a basis monomial')
    act_parser.add_argument('--generator', type=_generator_arg, required=True)
    for name in ('h', 'k', 'l', 'm'):
        act_parser.add_argument(f'--{name}', type=int, default=0)
    _add_point(act_parser, 'Symbolic d (with --theta and --r) or fully symbolic')
    act_parser.set_defaults(func=cmd_act)

    singular_parser = subparsers.add_parser('singular', help='Singular vectors in one weight space')
    singular_parser.add_argument('--p', type=int, required=True)
    singular_parser.add_argument('--q', type=int, required=True)
    _add_point(singular_parser, 'Solve over the symbolic field instead of a rational point')
    singular_parser.set_defaults(func=cmd_singular)

    gram_parser = subparsers.add_parser('gram', help='Gram matrix, determinant and its rational roots in d')
    gram_parser.add_argument('--p', type=int, required=True)
    gram_parser.add_argument('--q', type=int, required=True)
    _add_point(gram_parser, 'Keep d symbolic so the determinant roots can be extracted')
    gram_parser.set_defaults(func=cmd_gram)

    classify_parser = subparsers.add_parser('classify', help='Irreducibility verdict and quotient level table')
    classify_parser.add_argument('--d', type=_rational_arg, required=True)
    classify_parser.add_argument('--r', type=_rational_arg, required=True)
    classify_parser.add_argument('--theta', type=_rational_arg, required=True)
    classify_parser.add_argument('--pmax', type=int)
    classify_parser.add_argument('--qmax', type=int)
    classify_parser.set_defaults(func=cmd_classify)

    verify_parser = subparsers.add_parser('verify-theorems', help='Run the full theorem verification suite')
    verify_parser.add_argument('--pmax', type=int, default=settings.default_pmax)
    verify_parser.add_argument('--qmax', type=int, default=settings.default_qmax)
    verify_parser.add_argument('--rules', help='Comma-separated rule codes (default: all)')
    verify_parser.set_defaults(func=cmd_verify)

    version_parser = subparsers.add_parser('version', help='Engine version, settings and rule codes')
    version_parser.set_defaults(func=cmd_version)

    jacobi_parser = subparsers.add_parser('jacobi', help='Exhaustive bracket-table consistency scans')
    jacobi_parser.set_defaults(func=cmd_jacobi)

    closed_parser = subparsers.add_parser('closed-form', help='(2 theta C - K- F+)^p on the highest-weight vector')
    closed_parser.add_argument('--p', type=int, required=True)
    _add_point(closed_parser, 'Fully symbolic (default when no point is given)')
    closed_parser.set_defaults(func=cmd_closed_form)

    for sub in subparsers.choices.values():
        _add_common(sub)
    return parser


def render_text(report: Report) -> str:
    lines = []
    for key, value in report.model_dump(by_alias=True).items():
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {item}" for item in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def emit(report: Report, fmt: str, output: Optional[str]):
    text = render_json(report) if fmt == 'json' else render_text(report)
    if output:
        with open(output, 'w', encoding='utf-8') as fh:
            fh.write(text + "\n")
        logger.info(f"Report written to {output}")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the exit status"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_BAD_INPUT

    settings = get_settings()
    setup_logging(args.log_level or settings.log_level, args.log_format or settings.log_format, settings.log_file)

    handler: Callable = args.func
    try:
        report, status = handler(args)
    except ParameterError as e:
        logger.error(f"{args.command}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BAD_INPUT
    except CGAVermaError as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILED

    emit(report, args.format, args.output)
    return status
