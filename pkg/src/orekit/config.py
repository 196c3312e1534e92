"""
Runtime settings.

Defaults live in `Settings`; environment variables override them and CLI
flags override the environment. Library code reads the active settings
through `current_settings()`.
"""

import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .errors import ConfigError

DEFAULT_GCD_THRESHOLD = 512
MIN_DEFAULT_TRUNCATION = 16

ENV_TRUNCATION = 'OREKIT_TRUNCATION'
ENV_GCD_THRESHOLD = 'OREKIT_GCD_THRESHOLD'
ENV_PARALLEL = 'OREKIT_PARALLEL'
ENV_LOG_LEVEL = 'OREKIT_LOG_LEVEL'


@dataclass(frozen=True)
class Settings:
    truncation: Optional[int] = None
    gcd_threshold: int = DEFAULT_GCD_THRESHOLD
    parallel: bool = False
    log_level: str = 'WARNING'

    def with_overrides(self, **changes) -> 'Settings':
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f'{name} must be an integer, got {raw!r}') from None
    if value < 1:
        raise ConfigError(f'{name} must be positive, got {value}')
    return value


def parse_flag(name: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off', ''):
        return False
    raise ConfigError(f'{name} must be a boolean flag, got {raw!r}')


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Build settings from the environment.

    Args:
        environ: Mapping to read instead of `os.environ` (tests pass a dict)

    Returns:
        Settings with every recognised OREKIT_* variable applied
    """
    env = os.environ if environ is None else environ
    settings = Settings()

    if ENV_TRUNCATION in env:
        settings = replace(settings, truncation=_positive_int(ENV_TRUNCATION, env[ENV_TRUNCATION]))
    if ENV_GCD_THRESHOLD in env:
        settings = replace(settings, gcd_threshold=_positive_int(ENV_GCD_THRESHOLD, env[ENV_GCD_THRESHOLD]))
    if ENV_PARALLEL in env:
        settings = replace(settings, parallel=parse_flag(ENV_PARALLEL, env[ENV_PARALLEL]))
    if ENV_LOG_LEVEL in env:
        settings = replace(settings, log_level=env[ENV_LOG_LEVEL].strip().upper())

    return settings


_active: Optional[Settings] = None


def current_settings() -> Settings:
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def use_settings(settings: Optional[Settings]) -> None:
    """Install `settings` as the active settings; None re-reads the environment lazily."""
    global _active
    _active = settings


def default_truncation(characteristic: int, settings: Optional[Settings] = None) -> int:
    """
    Working truncation for jets: the configured value, else max(16, p^2 + p).

    In characteristic zero the p-dependent term is dropped.
    """
    settings = settings or current_settings()
    if settings.truncation is not None:
        return settings.truncation
    p = characteristic
    return max(MIN_DEFAULT_TRUNCATION, p * p + p)
