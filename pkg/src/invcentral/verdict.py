from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of an exact check; truthy when the claim holds.

    ``witness`` describes the first failure (or is ``None``); ``details``
    carries whatever else the check measured.
    """

    ok: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok
