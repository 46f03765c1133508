"""Two-layer cache for count tables.

A stored table with limit N' serves any request with N <= N' by truncation,
since tables for different limits agree on their common prefix.
"""

from __future__ import annotations

import json
import sqlite3
from typing import Dict, Optional, Tuple

from logger import logger
from packages.core.models import CountTable
from packages.engine import count_table
from packages.engine.export import table_from_json, table_to_json
from packages.sets import SetDescriptor, canonical_key


def build_cache_key(parts: SetDescriptor, mults: SetDescriptor) -> str:
    return f"table:{canonical_key(parts)}:{canonical_key(mults)}"


class MemoryTableCache:
    """In-process cache keeping the largest table seen per key."""

    def __init__(self) -> None:
        self.cache: Dict[str, CountTable] = {}

    def get(self, key: str, limit: int) -> Optional[CountTable]:
        table = self.cache.get(key)
        if table is None or table.limit < limit:
            return None
        return table.truncated(limit)

    def set(self, key: str, table: CountTable) -> None:
        current = self.cache.get(key)
        if current is None or current.limit < table.limit:
            self.cache[key] = table


class SQLiteTableCache:
    """SQLite-backed table store shared between runs."""

    def __init__(self, db_path: str) -> None:
        self.db_path = db_path
        self._ensure_schema()

    def _ensure_schema(self) -> None:
        with sqlite3.connect(self.db_path) as conn:
            conn.execute(
                """
                CREATE TABLE IF NOT EXISTS count_tables (
                  key TEXT PRIMARY KEY,
                  limit_n INTEGER NOT NULL,
                  payload TEXT NOT NULL
                );
                """
            )
            conn.commit()

    def get(self, key: str, limit: int) -> Optional[CountTable]:
        """The stored table when it reaches ``limit`` (returned untruncated)."""
        with sqlite3.connect(self.db_path) as conn:
            row = conn.execute(
                "SELECT limit_n, payload FROM count_tables WHERE key = ?",
                (key,),
            ).fetchone()
        if not row or int(row[0]) < limit:
            return None
        try:
            return table_from_json(json.loads(row[1]))
        except (ValueError, KeyError):
            logger.warning("SQLiteTableCache: failed to decode table for key=%s", key)
            return None

    def set(self, key: str, table: CountTable) -> None:
        payload = json.dumps(table_to_json(table))
        with sqlite3.connect(self.db_path) as conn:
            conn.execute(
                """
                INSERT INTO count_tables (key, limit_n, payload) VALUES (?, ?, ?)
                ON CONFLICT(key) DO UPDATE SET limit_n = excluded.limit_n, payload = excluded.payload
                WHERE excluded.limit_n > count_tables.limit_n
                """,
                (key, table.limit, payload),
            )
            conn.commit()

    def clear(self) -> int:
        with sqlite3.connect(self.db_path) as conn:
            cur = conn.execute("DELETE FROM count_tables")
            conn.commit()
            return cur.rowcount


class CacheManager:
    """Memory layer in front of an optional SQLite layer."""

    def __init__(self, sqlite_db_path: Optional[str] = None, budget: Optional[int] = None) -> None:
        self.memory = MemoryTableCache()
        self.sqlite = SQLiteTableCache(sqlite_db_path) if sqlite_db_path else None
        self.budget = budget

    def get(self, key: str, limit: int) -> Tuple[Optional[CountTable], str, str]:
        table = self.memory.get(key, limit)
        if table is not None:
            return table, "HIT", "memory"
        if self.sqlite is not None:
            stored = self.sqlite.get(key, limit)
            if stored is not None:
                self.memory.set(key, stored)
                return stored.truncated(limit), "HIT", "sqlite"
        return None, "MISS", "-"

    def set(self, key: str, table: CountTable) -> None:
        self.memory.set(key, table)
        if self.sqlite is not None:
            self.sqlite.set(key, table)

    def build(self, parts: SetDescriptor, mults: SetDescriptor, limit: int) -> CountTable:
        """Table builder for the analysis functions, served from cache when possible."""
        key = build_cache_key(parts, mults)
        table, status, store = self.get(key, limit)
        logger.debug("Table cache %s:%s for %s up to %d", status, store, key, limit)
        if table is None:
            table = count_table(parts, mults, limit, budget=self.budget)
            self.set(key, table)
        return table

    def clear(self) -> int:
        self.memory.cache.clear()
        return self.sqlite.clear() if self.sqlite is not None else 0


__all__ = ["MemoryTableCache", "SQLiteTableCache", "CacheManager", "build_cache_key"]
