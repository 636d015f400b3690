"""Replay construction traces with an invariant audit after every step."""

from __future__ import annotations

import enum
from typing import Callable

from .core import ImmersionData
from .planner import ConstructionTrace, apply_step, build_base
from .state import StateError, SymbolicState, check_state, derive_data


class ReplayReason(enum.Enum):
    UnknownRegion = "UnknownRegion"
    UncertifiedPair = "UncertifiedPair"
    ColorRuleViolated = "ColorRuleViolated"
    Lemma1Violated = "Lemma1Violated"
    EquationViolated = "EquationViolated"
    BaseInvalid = "BaseInvalid"


_VIOLATION_REASON = {
    "region_euler": ReplayReason.Lemma1Violated,
    "equation": ReplayReason.EquationViolated,
    "colors": ReplayReason.ColorRuleViolated,
    "certificate": ReplayReason.UncertifiedPair,
}


class ReplayError(Exception):
    """Replay stopped at ``step`` (``-1`` is the base).

    ``snapshot`` is the last good state, or the offending state when an
    audit failed after the step ran.
    """

    def __init__(self, step: int, reason: ReplayReason, detail: str, snapshot=None):
        super().__init__(f"step {step}: {reason.value}: {detail}")
        self.step = step
        self.reason = reason
        self.detail = detail
        self.snapshot = snapshot

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "reason": self.reason.value,
            "detail": self.detail,
            "state": None if self.snapshot is None else self.snapshot.to_json(),
        }


def _audit(st: SymbolicState, index: int) -> None:
    violations = check_state(st)
    if violations:
        v = violations[0]
        raise ReplayError(index, _VIOLATION_REASON[v.invariant], "; ".join(map(str, violations)), st)


def replay(
    t: ConstructionTrace, observer: Callable[[SymbolicState], None] | None = None
) -> SymbolicState:
    """Build the base, apply every step, audit each resulting state.

    ``observer`` is called with the base and with each intermediate state,
    after it passed the audit.
    """
    try:
        st = build_base(t.base)
    except (ValueError, TypeError) as exc:
        raise ReplayError(-1, ReplayReason.BaseInvalid, str(exc)) from None
    _audit(st, -1)
    if observer:
        observer(st)
    for i, step in enumerate(t.steps):
        try:
            nxt = apply_step(st, step)
        except StateError as exc:
            raise ReplayError(i, ReplayReason(exc.reason), str(exc), st) from None
        except (ValueError, TypeError) as exc:
            # malformed arguments such as a negative g
            raise ReplayError(i, ReplayReason.EquationViolated, str(exc), st) from None
        _audit(nxt, i)
        st = nxt
        if observer:
            observer(st)
    return st


def verify(t: ConstructionTrace, d: ImmersionData, diagnostics: list | None = None) -> bool:
    """True iff ``t`` replays cleanly and realizes exactly ``d``.

    On failure a :class:`ReplayError` or a mismatch message is appended to
    ``diagnostics`` when one is given.
    """
    try:
        final = replay(t)
    except ReplayError as exc:
        if diagnostics is not None:
            diagnostics.append(exc)
        return False
    got = derive_data(final)
    if got != d:
        if diagnostics is not None:
            diagnostics.append(f"trace realizes {got}, expected {d}")
        return False
    return True
