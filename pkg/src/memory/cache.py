# src/memory/cache.py
"""
Memo cache for the skein engine.
Thread-safe LRU map from canonical diagram codes to HOMFLY polynomials.

The cache is a pure-function cache: inserting the same key twice stores the
same value, so concurrent duplicate computation is harmless.
"""
import threading
import logging
from typing import Any, Dict, Hashable, Optional
from datetime import datetime

from cachetools import LRUCache

from src.config import get_settings

# Configure logger
logger = logging.getLogger("homfly_bounds.cache")

# Global cache storage
_cache: LRUCache = LRUCache(maxsize=get_settings().cache_size)
_cache_lock = threading.RLock()
_hits = 0
_misses = 0


def cache_data(key: Hashable, data: Any) -> None:
    """
    Store a computed value.

    Args:
        key: Canonical diagram code
        data: Value to cache (treated as immutable)
    """
    with _cache_lock:
        _cache[key] = data


def get_cached_data(key: Hashable) -> Optional[Any]:
    """
    Retrieve a cached value.

    Args:
        key: Canonical diagram code

    Returns:
        Any: Cached value or None if absent
    """
    global _hits, _misses
    with _cache_lock:
        value = _cache.get(key)
        if value is None:
            _misses += 1
        else:
            _hits += 1
        return value


def clear_cache(key: Optional[Hashable] = None) -> None:
    """
    Drop one memoised polynomial, or every entry.

    Args:
        key: Canonical diagram code to evict, or None to empty the memo and
            reset the hit/miss counters.
    """
    global _hits, _misses
    with _cache_lock:
        if key is None:
            _cache.clear()
            _hits = 0
            _misses = 0
            logger.debug("Cleared all cache entries")
        elif key in _cache:
            del _cache[key]
            logger.debug(f"Cleared cache entry for key {key!r}")


def resize_cache(maxsize: int) -> None:
    """Replace the backing store with an empty cache of the given capacity."""
    global _cache
    with _cache_lock:
        _cache = LRUCache(maxsize=max(1, maxsize))
        logger.debug(f"Cache resized to {maxsize} entries")


def get_cache_stats() -> Dict[str, Any]:
    """
    Snapshot of the HOMFLY memo.

    Returns:
        dict: entry count, capacity, hits, misses and hit rate.
    """
    with _cache_lock:
        lookups = _hits + _misses
        return {
            "entries": len(_cache),
            "capacity": _cache.maxsize,
            "hits": _hits,
            "misses": _misses,
            "hit_rate": (_hits / lookups) if lookups else 0.0,
            "timestamp": datetime.now().isoformat(),
        }
