"""The table, verify and expand commands and their exit codes."""
import argparse
import json
import sys
from typing import Optional, TextIO

from cli.documents import KINDS, build_table
from cli.runner import first_failure, run_cases
from cli.suites import DEFAULT_GRID, DEFAULT_LAMBDAS, SUITES, build_cases
from environment import Config
from errors import DomainError, NotAvailableError, PreconditionError, UsageError
from euler_basis import METHODS, expand_in_euler_basis, parse_poly, reconstruct
from reports import VerificationReport
from rv_models import parse_rv
from series.rational import format_rational, to_rational
from log.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _lambda(args: argparse.Namespace):
    return None if args.lam is None else to_rational(args.lam)


def _order(args: argparse.Namespace, config: Config) -> int:
    order = config.ORDER if args.order is None else args.order
    return config.check_order(order, getattr(args, 'unsafe_order', False))


def cmd_table(args: argparse.Namespace, config: Config, out: TextIO) -> int:
    rv = parse_rv(args.rv)
    document = build_table(rv, args.kind, _order(args, config), _lambda(args))
    text = document.to_csv(args.float) if args.format == 'csv' else document.to_json(args.float) + '\n'
    out.write(text)
    logger.info(f'{document.kind} table of {document.rv} up to order {document.order}: {len(document.entries)} entries')
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config, out: TextIO) -> int:
    rvs = DEFAULT_GRID if args.rv is None else (parse_rv(args.rv),)
    lams = DEFAULT_LAMBDAS if args.lam is None else (_lambda(args),)
    cases = build_cases(
        args.suite, rvs, lams, _order(args, config),
        samples=config.SAMPLES if args.samples is None else args.samples,
        seed=config.SEED if args.seed is None else args.seed,
        terms=config.NORMAL_TERMS,
        tolerance=config.TOLERANCE,
    )
    jobs = config.JOBS if args.jobs is None else args.jobs
    if jobs < 1:
        raise UsageError(f'--jobs must be >= 1, got {jobs}')
    reports = run_cases(cases, jobs)
    summary = VerificationReport.merge(args.suite, reports)
    failed = first_failure(reports)
    document = {
        'suite': args.suite,
        'passed': summary.passed,
        'checked': summary.checked,
        'cases': [report.to_dict() for report in reports],
    }
    if failed is not None:
        document['failure'] = {'case': failed.name, **failed.failure.to_dict()}
    out.write(json.dumps(document, indent=2) + '\n')
    if failed is not None:
        logger.error(f'Verification failed in {failed.name}: {failed.failure.identity} at {failed.failure.indices}')
        return EXIT_VERIFICATION_FAILED
    logger.info(f'{args.suite}: {len(reports)} cases, {summary.checked} checks passed')
    return EXIT_OK


def cmd_expand(args: argparse.Namespace, config: Config, out: TextIO) -> int:
    rv = parse_rv(args.rv)
    q = parse_poly(args.poly)
    lam = _lambda(args)
    coeffs = expand_in_euler_basis(rv, q, lam, args.method)
    exact = reconstruct(rv, coeffs, lam) == q
    out.write(', '.join(format_rational(a) for a in coeffs) + '\n')
    out.write(f'reconstruction: {"exact" if exact else "mismatch"}\n')
    return EXIT_OK if exact else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='prob-stirling',
        description='Exact probabilistic Stirling numbers, their degenerate versions and Euler-basis expansions.',
    )
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    table = commands.add_parser('table', help='Print a triangle or sequence as JSON or CSV.')
    table.add_argument('--rv', required=True, help='Random variable, e.g. geometric:p=1/3 or normal:mu=1,sigma2=2.')
    table.add_argument('--kind', required=True, type=str.upper, choices=KINDS)
    table.add_argument('--order', type=int, default=None, help='Largest n (default: PROB_STIRLING_ORDER or 12).')
    table.add_argument('--lambda', dest='lam', default=None, help='Degeneracy parameter, e.g. 1/2.')
    table.add_argument('--format', choices=('json', 'csv'), default='json')
    table.add_argument('--float', action='store_true', help='Add a decimal value next to the exact one.')
    table.add_argument('--unsafe-order', action='store_true', help='Allow orders above the cap.')
    table.set_defaults(handler=cmd_table)

    verify = commands.add_parser('verify', help='Run a verification suite; exit 1 on the first failing identity.')
    verify.add_argument('suite', choices=SUITES + ('all',))
    verify.add_argument('--rv', default=None, help='Random variable (default: the built-in grid).')
    verify.add_argument('--lambda', dest='lam', default=None, help='Degeneracy parameter (default: 0 and 1/2).')
    verify.add_argument('--order', type=int, default=None)
    verify.add_argument('--jobs', type=int, default=None, help='Worker processes (default: PROB_STIRLING_JOBS or 1).')
    verify.add_argument('--samples', type=int, default=None, help='Random polynomials per euler-roundtrip case.')
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--unsafe-order', action='store_true')
    verify.set_defaults(handler=cmd_verify)

    expand = commands.add_parser('expand', help='Expand a polynomial in the probabilistic Euler basis.')
    expand.add_argument('--rv', required=True)
    expand.add_argument('--poly', required=True, help='Coefficients, lowest degree first, e.g. 0,0,1 for x^2.')
    expand.add_argument('--lambda', dest='lam', default=None)
    expand.add_argument('--method', choices=tuple(METHODS), default='difference')
    expand.set_defaults(handler=cmd_expand)
    return parser


def run(argv: Optional[list] = None, out: Optional[TextIO] = None) -> int:
    """Parse, dispatch and map library errors to exit codes."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        config = Config()
        config.log_summary()
        return args.handler(args, config, out)
    except UsageError as e:
        logger.error(f'Usage error: {e}')
        sys.stderr.write(f'error: {e}\n')
        return EXIT_USAGE
    except (PreconditionError, NotAvailableError, DomainError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        sys.stderr.write(f'error: {e}\n')
        return EXIT_PRECONDITION
    except ValueError as e:
        # configuration read from the environment
        logger.error(f'Configuration error: {e}')
        sys.stderr.write(f'error: {e}\n')
        return EXIT_USAGE
