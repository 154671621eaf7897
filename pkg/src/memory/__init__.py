"""
Memoization support for the skein engine.

Public API:
    cache_data(key, value)
    get_cached_data(key) -> value | None
    clear_cache(key=None)
    resize_cache(maxsize)
    get_cache_stats() -> dict
"""
from src.memory.cache import (
    cache_data,
    clear_cache,
    get_cache_stats,
    get_cached_data,
    resize_cache,
)

__all__ = [
    "cache_data",
    "clear_cache",
    "get_cache_stats",
    "get_cached_data",
    "resize_cache",
]
