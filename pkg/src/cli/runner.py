import multiprocessing
import queue
from typing import Optional

from cli.suites import Case, run_case
from errors import ProbStirlingError
from reports import VerificationReport
from log.logger import get_logger

logger = get_logger(__name__)

RESULT_POLL_SECONDS = 5.0


class VerificationWorker(multiprocessing.Process):
    """Pulls cases from a shared task queue until it reads the None sentinel."""

    def __init__(self, tasks: multiprocessing.Queue, results: multiprocessing.Queue):
        super().__init__(daemon=True)
        self.tasks = tasks
        self.results = results
        return None

    def run(self) -> None:
        while True:
            case = self.tasks.get()
            if case is None:
                break
            self.results.put(_run_safely(case))
        return None


def _run_safely(case: Case) -> tuple:
    """(case_id, report, error): library errors travel back to be mapped to exit codes."""
    try:
        report = run_case(case)
    except ProbStirlingError as e:
        return case.case_id, None, e
    except Exception as e:
        logger.error(f'{case.label} crashed: {e}', exc_info=True)
        return case.case_id, None, e
    logger.debug(f'{case.label}: passed={report.passed}, checked={report.checked}')
    return case.case_id, report, None


def run_cases(cases: list[Case], jobs: int = 1) -> list[VerificationReport]:
    """Reports in case-id order whatever the number of workers; the first library error is re-raised."""
    if jobs <= 1 or len(cases) <= 1:
        outcomes = [_run_safely(case) for case in cases]
    else:
        outcomes = _run_in_workers(cases, min(jobs, len(cases)))
    outcomes.sort(key=lambda outcome: outcome[0])
    for _, _, error in outcomes:
        if error is not None:
            raise error
    return [report for _, report, _ in outcomes]


def _run_in_workers(cases: list[Case], jobs: int) -> list[tuple]:
    tasks = multiprocessing.Queue()
    results = multiprocessing.Queue()
    workers = [VerificationWorker(tasks, results) for _ in range(jobs)]
    for worker in workers:
        worker.start()
    logger.info(f'Started {jobs} verification workers for {len(cases)} cases')
    for case in cases:
        tasks.put(case)
    for _ in workers:
        tasks.put(None)
    try:
        # drain before join, a worker with a non-empty queue never exits
        outcomes = _collect(results, workers, len(cases))
    finally:
        for worker in workers:
            worker.join(timeout=5)
            if worker.is_alive():
                logger.warning(f'Worker {worker.pid} did not stop, terminating')
                worker.terminate()
    return outcomes


def _collect(results, workers: list, count: int, poll: float = RESULT_POLL_SECONDS) -> list[tuple]:
    """Waits for count outcomes; gives up once every worker has exited with some still missing."""
    outcomes = []
    while len(outcomes) < count:
        try:
            outcomes.append(results.get(timeout=poll))
        except queue.Empty:
            if not any(worker.is_alive() for worker in workers):
                missing = count - len(outcomes)
                logger.error(f'All verification workers exited with {missing} cases unreported')
                raise RuntimeError(f'verification workers exited before reporting {missing} cases')
    return outcomes


def first_failure(reports: list[VerificationReport]) -> Optional[VerificationReport]:
    return next((report for report in reports if not report.passed), None)
