"""Run configuration: resource caps, thread count, output options."""

from __future__ import annotations

import os
from dataclasses import dataclass, field


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded; the run is aborted loudly."""

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what}: needed {needed}, cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


def _default_threads() -> int:
    env = os.environ.get("VEROSCHUR_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    """Caps are in units of table entries / matrix side / search nodes."""

    max_table_entries: int = 5_000_000
    max_matrix_dim: int = 100_000
    max_enum_nodes: int = 100_000_000
    threads: int = field(default_factory=_default_threads)
    fmt: str = "pretty"
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("max_table_entries", "max_matrix_dim", "max_enum_nodes", "threads"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def check_table(self, needed: int) -> None:
        if needed > self.max_table_entries:
            raise CapExceeded("weight table entries", needed, self.max_table_entries)

    def check_matrix(self, needed: int) -> None:
        if needed > self.max_matrix_dim:
            raise CapExceeded("matrix dimension", needed, self.max_matrix_dim)

    def check_nodes(self, needed: int) -> None:
        if needed > self.max_enum_nodes:
            raise CapExceeded("enumeration nodes", needed, self.max_enum_nodes)


DEFAULT_CONFIG = RunConfig()
