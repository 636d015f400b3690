"""The four codimension-one events of a generic regular homotopy.

``a(i) = chi(black union) - N/2`` and ``b(i)`` likewise are unchanged by
every event; :func:`half_invariants` returns them doubled so they stay
integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .state import (
    BLACK,
    ColorRuleError,
    RegionEulerError,
    Region,
    SymbolicState,
    _evolve,
    bubble,
)


class MoveKind(enum.Enum):
    E = "E"
    H = "H"
    T = "T"
    Q = "Q"


ARITY = {MoveKind.E: 1, MoveKind.H: 2, MoveKind.T: 1, MoveKind.Q: 1}


@dataclass(frozen=True)
class MoveEvent:
    kind: MoveKind
    args: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))
        object.__setattr__(self, "args", tuple(int(a) for a in self.args))
        if len(self.args) != ARITY[self.kind]:
            raise ValueError(
                f"move {self.kind.value} takes {ARITY[self.kind]} region(s), got {len(self.args)}"
            )

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "args": list(self.args)}

    @classmethod
    def from_json(cls, obj) -> MoveEvent:
        return cls(MoveKind(obj["kind"]), tuple(obj["args"]))


@dataclass(frozen=True)
class HalfInvariantPair:
    two_a: int
    two_b: int


def half_invariants(st: SymbolicState) -> HalfInvariantPair:
    black = white = 0
    for r in st.regions.values():
        if r.color is BLACK:
            black += r.euler
        else:
            white += r.euler
    return HalfInvariantPair(2 * black - st.triple_points, 2 * white - st.triple_points)


def move_e(st: SymbolicState, target: int) -> SymbolicState:
    """Tangency of two sheets: a new 3-cell, and its same-colored neighbour loses a 2-handle."""
    return bubble(st, target)


def move_h(st: SymbolicState, x: int, y: int) -> SymbolicState:
    """Saddle tangency: a 1-handle moves from region ``x`` to region ``y``."""
    rx, ry = st.region(x), st.region(y)
    if rx.color is not ry.color:
        raise ColorRuleError(f"H move needs same-colored regions, got {x} and {y}")
    if rx.euler > 0:
        raise RegionEulerError(f"region {x} is a 3-cell and has no 1-handle to lose")
    if x == y:
        return st
    regions = dict(st.regions)
    regions[x] = Region(x, rx.color, rx.euler + 1)
    regions[y] = Region(y, ry.color, ry.euler - 1)
    return _evolve(st, regions)


def move_t(st: SymbolicState, target: int) -> SymbolicState:
    """A sheet passes a double curve: two triple points and a 3-cell of the opposite color appear."""
    r = st.region(target)
    if r.euler > 0:
        raise RegionEulerError(f"region {target} is a 3-cell and has no 1-handle to lose")
    regions = dict(st.regions)
    regions[target] = Region(target, r.color, r.euler + 1)
    nid = st.next_id
    regions[nid] = Region(nid, r.color.opposite, 1)
    return _evolve(st, regions, triple_points=st.triple_points + 2, next_id=nid + 1)


def move_q(st: SymbolicState, target: int) -> SymbolicState:
    """A sheet passes a triple point: a simplex region collapses and a new one of its color appears."""
    r = st.region(target)
    if r.euler != 1:
        raise RegionEulerError(f"Q move needs a 3-cell, region {target} has euler {r.euler}")
    regions = dict(st.regions)
    del regions[target]
    nid = st.next_id
    regions[nid] = Region(nid, r.color, 1)
    pairs = frozenset(p for p in st.certified_pairs if target not in p)
    return _evolve(st, regions, certified_pairs=pairs, next_id=nid + 1)


def apply_move(st: SymbolicState, ev: MoveEvent) -> SymbolicState:
    if ev.kind is MoveKind.E:
        return move_e(st, *ev.args)
    if ev.kind is MoveKind.H:
        return move_h(st, *ev.args)
    if ev.kind is MoveKind.T:
        return move_t(st, *ev.args)
    return move_q(st, *ev.args)


def legal_arguments(st: SymbolicState, kind: MoveKind) -> list[tuple[int, ...]]:
    """Every argument tuple for which ``kind`` may be applied to ``st``."""
    regs = list(st.regions.values())
    if kind is MoveKind.E:
        return [(r.id,) for r in regs]
    if kind is MoveKind.T:
        return [(r.id,) for r in regs if r.euler <= 0]
    if kind is MoveKind.Q:
        return [(r.id,) for r in regs if r.euler == 1]
    return [(x.id, y.id) for x in regs if x.euler <= 0 for y in regs if y.color is x.color]

