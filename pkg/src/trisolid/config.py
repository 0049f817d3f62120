"""
trisolid.config - Run configuration for the command-line front end.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Mapping, Optional

from trisolid.errors import InvalidInputError

FORMAT_ENV_VAR = "TRISOLID_FORMAT"
DEFAULT_WINDOW = 10
SCHEMA_VERSION = 1


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    MD = "md"


def default_format(environ: Optional[Mapping[str, str]] = None) -> OutputFormat:
    """The format used when --format is absent, honouring TRISOLID_FORMAT."""
    env = os.environ if environ is None else environ
    value = env.get(FORMAT_ENV_VAR, "").strip().lower()
    if not value:
        return OutputFormat.TEXT
    try:
        return OutputFormat(value)
    except ValueError:
        valid = ", ".join(f.value for f in OutputFormat)
        raise InvalidInputError(
            FORMAT_ENV_VAR, f"unknown format '{value}' (valid: {valid})"
        ) from None


@dataclass(frozen=True)
class RunConfig:
    """
    One CLI invocation: a command, its target and output settings.

    `params` holds the numeric arguments of `invariants` and `bounds`.
    """

    command: str
    target: Optional[str] = None
    format: OutputFormat = OutputFormat.TEXT
    window: int = DEFAULT_WINDOW
    output: Optional[Path] = None
    params: Mapping[str, Optional[int]] = field(default_factory=dict)
    rational_non_p2: bool = False

    def __post_init__(self) -> None:
        if self.window < 1:
            raise InvalidInputError(
                "RunConfig", f"window must be >= 1, got {self.window}"
            )
