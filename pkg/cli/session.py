"""State shared by every command for one invocation."""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

sys.path.insert(0, str(Path(__file__).parent.parent))

from rich.console import Console

from config import AppConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Session:
    """What every command needs: output, configuration and global flags."""

    config: AppConfig
    console: Console
    workers: int
    as_json: bool = False
    err_console: Console = field(default_factory=lambda: Console(stderr=True))

    def workers_for(self, work_items: int) -> int:
        """Small jobs run inline."""
        return 1 if work_items < self.config.parallel_min else self.workers

    def emit_json(self, payload: Any) -> None:
        self.console.print_json(json.dumps(payload, ensure_ascii=False))

    def exit_code(self, holds: bool) -> int:
        return EXIT_OK if holds else EXIT_FAILED
