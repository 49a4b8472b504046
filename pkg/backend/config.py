"""
Configuration settings for the Cooperative Product Game solver
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from errors import ConfigError, LimitExceeded

logger = logging.getLogger(__name__)

load_dotenv()


@dataclass(frozen=True)
class Limits:
    """Largest player counts the brute-force enumerations accept"""

    subsets: int = 20       # 2^n coalitions: core check, banzhaf, tables, oracles
    permutations: int = 9   # n! orderings: shapley
    pairs: int = 10         # 4^n coalition pairs: convexity (and 3^n superadditivity)

    @classmethod
    def uniform(cls, n: int) -> "Limits":
        return cls(subsets=n, permutations=n, pairs=n)


def _parse_limit(raw: str, source: str) -> int:
    text = raw.strip()
    if not text.isdigit():
        raise ConfigError(f"{source} must be a non-negative decimal integer, got {raw!r}")
    return int(text)


class Config:
    """Base configuration"""

    ENV_NAME = 'default'
    LOG_LEVEL = os.getenv('CPG_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

    DEFAULT_LIMITS = Limits()

    @classmethod
    def limits(cls) -> Limits:
        """Enumeration limits; CPG_LIMIT, when set, replaces all of them"""
        raw = os.getenv('CPG_LIMIT')
        if raw is None or raw == '':
            return cls.DEFAULT_LIMITS
        return Limits.uniform(_parse_limit(raw, 'CPG_LIMIT'))


class DevelopmentConfig(Config):
    """Development configuration"""
    ENV_NAME = 'development'


class ProductionConfig(Config):
    """Production configuration"""
    ENV_NAME = 'production'


class TestingConfig(Config):
    """Testing configuration"""
    ENV_NAME = 'testing'
    LOG_LEVEL = 'DEBUG'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(env: Optional[str] = None):
    """Get configuration based on environment"""
    if env is None:
        env = os.getenv('CPG_ENV', 'default')
    return config.get(env, config['default'])


def resolve_limit(explicit: Optional[int], kind: str) -> int:
    """An explicit limit wins; otherwise the configured limit of the given kind"""
    if explicit is not None:
        return explicit
    return getattr(get_config().limits(), kind)


def check_limit(n: int, limit: Optional[int], kind: str, operation: str) -> None:
    """Refuse an enumeration over n players beyond the resolved limit"""
    bound = resolve_limit(limit, kind)
    if n > bound:
        raise LimitExceeded(n, bound, operation)
    logger.debug("%s: n=%d within %s limit %d", operation, n, kind, bound)
