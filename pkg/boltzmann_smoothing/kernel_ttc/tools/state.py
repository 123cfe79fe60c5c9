"""
Shared in-memory state for kernel modules.
"""

from typing import Any

PHI_C_HAT_TABLES: dict[tuple[Any, ...], Any] = {}
