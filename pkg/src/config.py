# src/config.py
"""
Runtime settings, read from the environment (and a local .env file).

    HOMFLY_CROSSING_CAP   engine crossing cap                 (default 16)
    HOMFLY_CACHE_SIZE     memo cache capacity, entries        (default 200000)
    HOMFLY_MAX_WORKERS    verification thread pool size       (default 4)
    HOMFLY_LOG_LEVEL      logging level name                  (default INFO)
    HOMFLY_CORPUS_PATH    corpus used by `verify --corpus default`
    HOMFLY_SEED           seed for randomized check ordering  (default 0)
"""
import os
import logging
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger("homfly_bounds.config")

_PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CORPUS_PATH = _PROJECT_ROOT / "src" / "data" / "corpus.csv"

DEFAULT_CROSSING_CAP = 16


@dataclass(frozen=True)
class Settings:
    crossing_cap: int = DEFAULT_CROSSING_CAP
    cache_size: int = 200_000
    max_workers: int = 4
    log_level: str = "INFO"
    corpus_path: Path = DEFAULT_CORPUS_PATH
    seed: int = 0

    def with_overrides(self, **overrides) -> "Settings":
        """Copy with every non-None override applied (CLI flags win over the environment)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


def get_settings() -> Settings:
    """Read settings from the environment. Cheap; call whenever current values are needed."""
    return Settings(
        crossing_cap=_int_env("HOMFLY_CROSSING_CAP", DEFAULT_CROSSING_CAP),
        cache_size=_int_env("HOMFLY_CACHE_SIZE", 200_000),
        max_workers=max(1, _int_env("HOMFLY_MAX_WORKERS", 4)),
        log_level=os.getenv("HOMFLY_LOG_LEVEL", "INFO").upper(),
        corpus_path=Path(os.getenv("HOMFLY_CORPUS_PATH") or DEFAULT_CORPUS_PATH),
        seed=_int_env("HOMFLY_SEED", 0),
    )
