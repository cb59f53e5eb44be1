"""
Runtime settings read from the environment (and an optional .env file).
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

RECORDS_ENV = "PSEUDOLINE_RECORDS"
TRACING_ENV = "PSEUDOLINE_TRACING"
TRACE_CONSOLE_ENV = "PSEUDOLINE_TRACE_CONSOLE"
SCAN_WORKERS_ENV = "PSEUDOLINE_SCAN_WORKERS"


class WorkbenchSettings(BaseModel):
    """Settings shared by the CLI and the scan driver."""
    records_path: Optional[str] = None
    tracing: bool = False
    trace_console: bool = False
    scan_workers: int = Field(default=1, ge=1)


def _flag(name: str) -> bool:
    return os.environ.get(name, "false").lower() == "true"


def load_settings() -> WorkbenchSettings:
    """
    Load settings after merging a local .env file into the environment.

    Returns:
        WorkbenchSettings built from PSEUDOLINE_* variables
    """
    load_dotenv()

    workers = os.environ.get(SCAN_WORKERS_ENV, "1").strip() or "1"
    return WorkbenchSettings(
        records_path=os.environ.get(RECORDS_ENV) or None,
        tracing=_flag(TRACING_ENV),
        trace_console=_flag(TRACE_CONSOLE_ENV),
        scan_workers=max(1, int(workers)) if workers.isdigit() else 1,
    )
