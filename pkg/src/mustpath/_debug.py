"""Gate for expensive invariant checks, enabled via MUSTPATH_DEBUG=1."""

from __future__ import annotations

import os


def debug_checks() -> bool:
    return os.environ.get("MUSTPATH_DEBUG", "") == "1"
