from cli.commands import (
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    build_parser,
    cmd_expand,
    cmd_table,
    cmd_verify,
    run,
)
from cli.documents import KINDS, TableDocument, TableEntry, build_table
from cli.runner import VerificationWorker, run_cases
from cli.suites import DEFAULT_GRID, DEFAULT_LAMBDAS, SUITES, Case, build_cases, run_case
