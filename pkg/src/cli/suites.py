"""Verification cases: one suite applied to one variable at one lambda."""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from errors import NotAvailableError, UsageError
from euler_basis import Poly, verify_euler_addition, verify_euler_roundtrip
from prob_stirling import (
    normal_degenerate_vanishing,
    vanishing_identities,
    verify_closed_forms,
    verify_oracles,
    verify_orthogonality,
    verify_vanishing,
)
from reports import ReportBuilder, VerificationReport
from rv_models import (
    Bernoulli,
    Binomial,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    RVSpec,
    Uniform,
    format_rv,
)

SUITES = ('orthogonality', 'closed-forms', 'vanishing', 'euler-roundtrip', 'oracle')

DEFAULT_GRID = (
    Constant(1),
    Bernoulli(Fraction(1, 2)),
    Binomial(3, Fraction(1, 3)),
    Poisson(1),
    Geometric(Fraction(1, 3)),
    Exponential(2),
    Gamma(2, 3),
    Normal(1, 2),
    Uniform(0, 1),
)
DEFAULT_LAMBDAS = (Fraction(0), Fraction(1, 2))

MAX_VANISHING_K = 5
MAX_ROUNDTRIP_DEGREE = 8
MAX_ADDITION_DEGREE = 6


@dataclass(frozen=True)
class Case:
    case_id: int
    suite: str
    rv: RVSpec
    lam: Optional[Fraction]
    order: int
    samples: int = 20
    seed: Optional[int] = None
    terms: int = 40
    tolerance: float = 1e-9

    @property
    def label(self) -> str:
        return f'{self.suite} {format_rv(self.rv)}' + ('' if self.lam is None else f' lambda={self.lam}')


def random_polys(case: Case) -> list[Poly]:
    """Sample polynomials of degree <= 8 with small rational coefficients, reproducible per case."""
    rng = random.Random(f'{case.seed}:{case.case_id}')
    polys = []
    for _ in range(case.samples):
        degree = rng.randint(0, min(MAX_ROUNDTRIP_DEGREE, max(case.order, 0)))
        polys.append(Poly(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1))))
    return polys


def _orthogonality(case: Case) -> VerificationReport:
    return verify_orthogonality(case.rv, case.lam, case.order)


def _closed_forms(case: Case) -> VerificationReport:
    return verify_closed_forms(case.rv, case.lam, case.order, case.terms, case.tolerance)


def _vanishing(case: Case) -> VerificationReport:
    max_k = min(MAX_VANISHING_K, case.order)
    reports = []
    try:
        vanishing_identities(case.rv, case.lam)
    except NotAvailableError as exc:
        builder = ReportBuilder(case.label)
        builder.note(str(exc))
        reports.append(builder.build())
    else:
        reports.append(verify_vanishing(case.rv, case.lam, max_k))
    if isinstance(case.rv, Normal) and case.lam is not None:
        # the degenerate normal identity is an infinite sum, checked to a tolerance
        builder = ReportBuilder(f'normal degenerate vanishing {format_rv(case.rv)} lambda={case.lam}')
        for k in range(1, min(3, max_k) + 1):
            for n in range(k):
                residual = normal_degenerate_vanishing(case.rv, case.lam, n, k, case.terms)
                builder.check('normal-degenerate-first-kind', 0.0, residual, tolerance=case.tolerance, n=n, k=k)
        reports.append(builder.build())
    return VerificationReport.merge(case.label, reports)


def _euler_roundtrip(case: Case) -> VerificationReport:
    reports = [verify_euler_roundtrip(case.rv, random_polys(case), case.lam)]
    reports.extend(
        verify_euler_addition(case.rv, n, case.lam) for n in range(min(MAX_ADDITION_DEGREE, case.order) + 1)
    )
    return VerificationReport.merge(case.label, reports)


def _oracle(case: Case) -> VerificationReport:
    return verify_oracles(case.rv, case.lam, case.order)


RUNNERS: dict[str, Callable[[Case], VerificationReport]] = {
    'orthogonality': _orthogonality,
    'closed-forms': _closed_forms,
    'vanishing': _vanishing,
    'euler-roundtrip': _euler_roundtrip,
    'oracle': _oracle,
}


def applies(suite: str, rv: RVSpec) -> bool:
    if suite in ('orthogonality', 'euler-roundtrip'):
        return rv.mean() != 0
    return True


def build_cases(suite: str, rvs: Sequence[RVSpec], lams: Sequence[Optional[Fraction]], order: int,
                samples: int = 20, seed: Optional[int] = None, terms: int = 40,
                tolerance: float = 1e-9) -> list[Case]:
    """Cases in a fixed order; 'all' expands to every suite and skips variables a suite cannot take."""
    if suite != 'all' and suite not in SUITES:
        raise UsageError(f'unknown suite {suite!r} (known: {", ".join(SUITES + ("all",))})')
    suites = SUITES if suite == 'all' else (suite,)
    cases = []
    for name in suites:
        for rv in rvs:
            if suite == 'all' and not applies(name, rv):
                continue
            for lam in lams:
                cases.append(Case(len(cases), name, rv, lam, order, samples, seed, terms, tolerance))
    return cases


def run_case(case: Case) -> VerificationReport:
    return RUNNERS[case.suite](case)
