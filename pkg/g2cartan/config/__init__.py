"""Configuration management for G2Cartan."""

import os

from dotenv import load_dotenv

from ..types import Config

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


def get_config() -> Config:
    """Load and validate configuration from environment variables."""
    config = Config(
        seed=_int_env("G2CARTAN_SEED", 0),
        random_quartics=_int_env("G2CARTAN_RANDOM_QUARTICS", 50),
        monotonicity_samples=_int_env("G2CARTAN_MONOTONICITY_SAMPLES", 10),
        report_dir=os.getenv("G2CARTAN_REPORT_DIR") or None,
    )
    if config.random_quartics < 0 or config.monotonicity_samples < 0:
        raise ValueError("Sample counts must be non-negative")
    return config
