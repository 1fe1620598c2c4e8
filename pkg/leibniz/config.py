"""Runtime settings read from the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass

from leibniz.errors import InputError


@dataclass(frozen=True)
class Settings:
    max_coeffs: int
    max_bracket_dim: int
    max_bracket_order: int
    max_search_space: int
    log_level: str


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InputError(f"{name} must be positive, got {value}")
    return value


def get_settings() -> Settings:
    """Read settings fresh from the environment on every call."""
    return Settings(
        max_coeffs=_positive_int("LEIBNIZ_GUARD_MAX_COEFFS", 10_000_000),
        max_bracket_dim=_positive_int("LEIBNIZ_GUARD_MAX_DIM", 8),
        max_bracket_order=_positive_int("LEIBNIZ_GUARD_MAX_ORDER", 6),
        max_search_space=_positive_int("LEIBNIZ_GUARD_MAX_SEARCH", 100_000_000),
        log_level=os.getenv("LEIBNIZ_LOG_LEVEL", "WARNING").upper(),
    )
