"""Configuration management for the spectrum toolkit."""

import os
from dataclasses import dataclass, field


@dataclass
class PrecisionConfig:
    """Enclosure refinement limits."""

    limit_bits: int = field(default_factory=lambda: int(os.getenv("LAG2_PRECISION_LIMIT", "16384")))
    start_bits: int = field(default_factory=lambda: int(os.getenv("LAG2_PRECISION_START", "64")))


@dataclass
class AppConfig:
    """Main application configuration."""

    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    default_digits: int = field(default_factory=lambda: int(os.getenv("LAG2_DIGITS", "6")))
    scan_workers: int = field(default_factory=lambda: int(os.getenv("LAG2_SCAN_WORKERS", "1")))

    @property
    def precision_limit(self) -> int:
        """Get the refinement cap in bits."""
        return self.precision.limit_bits


def precision_limit(override: int = None) -> int:
    """Resolve a precision cap: explicit override first, then the environment."""
    if override is not None:
        return override
    return AppConfig().precision_limit
