"""Structured results of named verifications."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one named check.

    status is one of "pass", "fail", "inconclusive" or "error".  A fail must
    carry a witness (the counterexample); pass and inconclusive may carry
    evidence.  All witness payloads are JSON-serializable, with rationals as
    "p/q" strings and labels in their documented text forms.
    """

    name: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: dict | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail", "inconclusive", "error"):
            raise ValueError("bad status %r" % (self.status,))
        if self.status == "fail" and self.witness is None:
            raise ValueError("fail reports must carry a witness")

    @property
    def passed(self):
        return self.status == "pass"

    def as_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }
