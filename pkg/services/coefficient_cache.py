"""
Coefficient Cache Service for memoizing exact expansions
"""

import logging
import threading
from typing import Any, Callable, Dict, Hashable, List

logger = logging.getLogger(__name__)


class CoefficientCache:
    """In-memory, thread-safe memo store for immutable expansion results"""

    def __init__(self, max_entries: int = 4096):
        self.entries: Dict[Hashable, Any] = {}
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Any:
        """Get a cached value, None if absent"""
        with self._lock:
            value = self.entries.get(key)
            if value is not None:
                self.hits += 1
            return value

    def get_or_compute(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """Return the cached value for key, computing it with factory on a miss

        The factory runs outside the lock so it may itself use the cache; when two
        threads race on the same key the first stored value wins.
        """
        cached = self.get(key)
        if cached is not None:
            return cached

        value = factory()
        with self._lock:
            self.misses += 1
            if len(self.entries) >= self.max_entries:
                logger.debug("🧹 coefficient cache full (%d entries), clearing", len(self.entries))
                self.entries.clear()
            return self.entries.setdefault(key, value)

    def clear(self) -> int:
        """Remove every entry and return how many were removed"""
        with self._lock:
            removed = len(self.entries)
            self.entries.clear()
            self.hits = 0
            self.misses = 0
        if removed:
            logger.info("🧹 Cleared %d cached expansions", removed)
        return removed

    def get_entry_count(self) -> int:
        with self._lock:
            return len(self.entries)

    def get_all_keys(self) -> List[Hashable]:
        with self._lock:
            return list(self.entries.keys())

    def get_stats(self) -> Dict[str, int]:
        """Get cache statistics

        Returns:
            Dict[str, int]: entry count, hits and misses
        """
        with self._lock:
            return {
                "entries": len(self.entries),
                "max_entries": self.max_entries,
                "hits": self.hits,
                "misses": self.misses,
            }


# Global cache instance
coefficient_cache = CoefficientCache()
