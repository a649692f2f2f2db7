from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
VIOLATION = "violation"
NOT_APPLICABLE = "not-applicable"


@dataclass
class Verdict:
    """Outcome of checking one statement on one instance.

    ``status`` is ``holds``, ``violation`` or ``not-applicable``; ``equality``
    flags a tight bound; ``details`` carries the numbers and any witness in
    JSON-friendly form.
    """

    status: str
    claim: str
    equality: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != VIOLATION

    def to_json(self) -> dict[str, Any]:
        return {"claim": self.claim, "status": self.status, "equality": self.equality, **self.details}
