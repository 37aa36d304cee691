"""Certificate records shared by the inequality checkers.

Every evaluated certificate is normalized to the claim lhs >= rhs, so the
slack is always lhs - rhs and pass means slack >= -tol.  The detail string
names the actual quantities compared.  Skipped and indeterminate outcomes
carry null sides so that a solver hiccup can never masquerade as a theorem
violation.
"""

from __future__ import annotations

from dataclasses import dataclass

THEOREM_IDS = (
    "T3.1", "T3.2", "T3.3", "T3.4", "C3.5", "T3.6", "C3.7",
    "T3.8", "T3.9", "L2.3", "T4.1", "T4.2", "C4.3",
)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Certificate:
    theorem_id: str
    instance_id: str
    vertex: int | None
    lhs: float | None
    rhs: float | None
    slack: float | None
    tol: float
    status: str
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance_id": self.instance_id,
            "vertex": self.vertex,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tol": self.tol,
            "status": self.status,
            "detail": self.detail,
        }


def default_tol(lhs: float, rhs: float) -> float:
    return 1e-7 * max(1.0, abs(lhs), abs(rhs))


def evaluate(theorem_id: str, instance_id: str, lhs: float, rhs: float,
             tol: float | None = None, vertex: int | None = None,
             detail: str = "") -> Certificate:
    """Evaluate the normalized claim lhs >= rhs."""
    if tol is None:
        tol = default_tol(lhs, rhs)
    slack = lhs - rhs
    status = PASS if slack >= -tol else FAIL
    return Certificate(
        theorem_id=theorem_id,
        instance_id=instance_id,
        vertex=vertex,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        tol=float(tol),
        status=status,
        detail=detail,
    )


def skipped(theorem_id: str, instance_id: str, reason: str,
            vertex: int | None = None) -> Certificate:
    return Certificate(
        theorem_id=theorem_id,
        instance_id=instance_id,
        vertex=vertex,
        lhs=None,
        rhs=None,
        slack=None,
        tol=0.0,
        status=SKIP,
        detail=reason,
    )


def indeterminate(theorem_id: str, instance_id: str, reason: str,
                  vertex: int | None = None) -> Certificate:
    return Certificate(
        theorem_id=theorem_id,
        instance_id=instance_id,
        vertex=vertex,
        lhs=None,
        rhs=None,
        slack=None,
        tol=0.0,
        status=INDETERMINATE,
        detail=reason,
    )
