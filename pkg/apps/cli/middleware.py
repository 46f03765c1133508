from __future__ import annotations

import json
import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator

logger = logging.getLogger("partmult.ops")


def log_operation(operation: str, **kwargs: Any) -> None:
    """Log one operation as a single JSON line."""
    log_data = {
        "op": operation,
        "timestamp": time.time(),
        **kwargs,
    }
    logger.info(json.dumps(log_data, default=str))


@contextmanager
def timed_operation(operation: str, **kwargs: Any) -> Iterator[Dict[str, Any]]:
    """Time a CLI command and log it with its final status.

    The yielded dict is merged into the log record, so handlers can attach
    fields such as the cache status or the exit code.
    """
    extra: Dict[str, Any] = {"status": "ok", **kwargs}
    start_time = time.time()
    try:
        yield extra
    except Exception as exc:
        extra["status"] = "error"
        extra["error"] = type(exc).__name__
        raise
    finally:
        duration_ms = round((time.time() - start_time) * 1000, 2)
        log_operation(operation, ms=duration_ms, **extra)
