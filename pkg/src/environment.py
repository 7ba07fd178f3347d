from dataclasses import dataclass
from typing import Optional
import os

from errors import UsageError
from log.logger import get_logger

logger = get_logger(__name__)


def _env_int(name: str, minimum: int) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.error(f'{name} must be an integer, got {raw!r}')
        raise ValueError(f'{name} must be an integer, got {raw!r}')
    if value < minimum:
        logger.error(f'{name} must be >= {minimum}, got {value}')
        raise ValueError(f'{name} must be >= {minimum}, got {value}')
    return value


@dataclass
class Config:
    ORDER: int = 12
    MAX_ORDER: int = 24  # rational bit growth; --unsafe-order lifts it
    JOBS: int = 1
    SEED: Optional[int] = None
    SAMPLES: int = 100
    NORMAL_TERMS: int = 40
    TOLERANCE: float = 1e-9

    def __post_init__(self):
        if 'PROB_STIRLING_ORDER' in os.environ:
            self.ORDER = _env_int('PROB_STIRLING_ORDER', 0)
        if 'PROB_STIRLING_MAX_ORDER' in os.environ:
            self.MAX_ORDER = _env_int('PROB_STIRLING_MAX_ORDER', 0)
        if 'PROB_STIRLING_JOBS' in os.environ:
            self.JOBS = _env_int('PROB_STIRLING_JOBS', 1)
        if 'PROB_STIRLING_SEED' in os.environ:
            self.SEED = _env_int('PROB_STIRLING_SEED', 0)
        if 'PROB_STIRLING_SAMPLES' in os.environ:
            self.SAMPLES = _env_int('PROB_STIRLING_SAMPLES', 0)
        if 'PROB_STIRLING_NORMAL_TERMS' in os.environ:
            self.NORMAL_TERMS = _env_int('PROB_STIRLING_NORMAL_TERMS', 1)
        if 'PROB_STIRLING_TOLERANCE' in os.environ:
            raw = os.environ['PROB_STIRLING_TOLERANCE']
            try:
                self.TOLERANCE = float(raw)
            except ValueError:
                logger.error(f'PROB_STIRLING_TOLERANCE must be a number, got {raw!r}')
                raise ValueError(f'PROB_STIRLING_TOLERANCE must be a number, got {raw!r}')
        if self.ORDER > self.MAX_ORDER:
            logger.error(f'default order {self.ORDER} exceeds the cap {self.MAX_ORDER}')
            raise ValueError(f'default order {self.ORDER} exceeds the cap {self.MAX_ORDER}')
        return None

    def check_order(self, order: int, unsafe: bool = False) -> int:
        """The order a command will use; the cap is lifted only on request."""
        if order < 0:
            raise UsageError(f'order must be non-negative, got {order}')
        if order > self.MAX_ORDER and not unsafe:
            raise UsageError(f'order {order} exceeds the cap {self.MAX_ORDER}; pass --unsafe-order to lift it')
        return order

    def log_summary(self):
        separator = '═' * 80
        logger.debug(separator)
        logger.debug(' PROB-STIRLING CONFIG')
        logger.debug(separator)
        for k, v in vars(self).items():
            logger.debug(f'{k:<25}: {v}')
        logger.debug(separator)
