"""Configuration loading from the environment."""
import os
from dataclasses import dataclass

from .errors import ConfigError


@dataclass
class Config:
    """Application configuration."""
    seed: int = 0
    fuel: int = 2000
    depth: int = 8
    samples: int = 100
    timeout: int = 30000  # milliseconds


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def load_config() -> Config:
    """Load configuration from environment variables.

    Returns:
        Config object with loaded values

    Raises:
        ConfigError: If a GUARDED_* variable is not a valid integer
    """
    return Config(
        seed=_int_env("GUARDED_SEED", 0, minimum=-(2**63)),
        fuel=_int_env("GUARDED_FUEL", 2000, minimum=0),
        depth=_int_env("GUARDED_DEPTH", 8, minimum=0),
        samples=_int_env("GUARDED_SAMPLES", 100, minimum=1),
        timeout=_int_env("GUARDED_CHECK_TIMEOUT", 30000, minimum=1),
    )
