"""Check reports shared by the analysis commands and the scenario runner."""

from __future__ import annotations

import hashlib
import json
from typing import Any, Literal

from pydantic import BaseModel, Field

from . import __version__
from .errors import EXIT_CAP, EXIT_FAIL, EXIT_PASS

Status = Literal["pass", "fail", "skip"]

CAP_EXCEEDED = "CapExceeded"


class CheckEntry(BaseModel, extra="forbid"):
    """One named check with its computed data."""

    scenario: str
    status: Status
    data: dict[str, Any] = Field(default_factory=dict)
    citation: str = ""

    @property
    def cap_exceeded(self) -> bool:
        """Whether this entry was skipped because an enumeration hit the cap."""
        return self.status == "skip" and self.data.get("error") == CAP_EXCEEDED


class Report(BaseModel, extra="forbid"):
    """Ordered check entries plus what produced them."""

    tool_version: str = __version__
    input_digest: str
    entries: list[CheckEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether no entry failed."""
        return all(e.status != "fail" for e in self.entries)

    @property
    def exit_code(self) -> int:
        """1 if anything failed, else 3 if a check was cut off by the cap, else 0."""
        if not self.passed:
            return EXIT_FAIL
        if any(e.cap_exceeded for e in self.entries):
            return EXIT_CAP
        return EXIT_PASS

    def to_json(self) -> str:
        """Key-sorted JSON, byte-identical for identical inputs."""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def digest(*parts: str) -> str:
    """SHA-256 hex digest of the parts joined by newlines."""
    return hashlib.sha256("\n".join(parts).encode()).hexdigest()
