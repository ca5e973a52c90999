"""Audit record produced by every claim or equation check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from diolab.numeric import fmt_exact

Value = Union[int, Fraction, None]


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of evaluating one identity or predicate on a concrete instance.

    ``holds`` is the verdict; for plain identities it coincides with
    ``lhs == rhs``, for predicates (squareness, integrality, root membership)
    the predicate decides and ``lhs``/``rhs`` carry the quantities compared.
    """

    claim_id: str
    holds: bool
    lhs: Value
    rhs: Value
    note: str = ""
    triple: Optional[tuple[int, int, int]] = None
    solution: Optional[tuple[int, ...]] = None
    system: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "system": self.system,
            "triple": list(self.triple) if self.triple is not None else None,
            "solution": list(self.solution) if self.solution is not None else None,
            "holds": self.holds,
            "lhs": _exact_or_none(self.lhs),
            "rhs": _exact_or_none(self.rhs),
            "note": self.note,
            "details": {k: _jsonable(v) for k, v in sorted(self.details.items())},
        }


def _exact_or_none(x: Value):
    return None if x is None else fmt_exact(x)


def _jsonable(v: Any):
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, (int, Fraction)):
        return fmt_exact(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items())}
    raise TypeError(f"cannot serialise {type(v).__name__}")
