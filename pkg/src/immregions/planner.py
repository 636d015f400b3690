"""Construction traces and the inductive planner.

A :class:`ConstructionTrace` is a base state followed by construction steps
whose region-id arguments refer to ids handed out during replay (bases
allocate from 0, every new region takes the next id).  Replaying a trace
and reading off the data is a certificate that the data is realizable.

:func:`plan` builds such a trace for any realizable data by peeling off one
operation at a time until a base case is reached, strictly decreasing
``N + sum a_k + sum b_k`` at each stage.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from . import state as S
from .core import DataFormatError, ImmersionData, weighted_sum
from .state import BLACK, WHITE, Color, SymbolicState

# -- bases and steps ---------------------------------------------------------


@dataclass(frozen=True)
class BaseEmbedding:
    genus: int


@dataclass(frozen=True)
class BaseBoy:
    pass


@dataclass(frozen=True)
class BaseN2:
    pass


Base = Union[BaseEmbedding, BaseBoy, BaseN2]


@dataclass(frozen=True)
class Bubble:
    target: int


@dataclass(frozen=True)
class Ring:
    host: int


@dataclass(frozen=True)
class GOp:
    pair: tuple[int, int]
    g: int


@dataclass(frozen=True)
class ConnectBoy:
    pair: tuple[int, int]


@dataclass(frozen=True)
class ConnectN2:
    pair: tuple[int, int]


@dataclass(frozen=True)
class SwapColors:
    pass


Step = Union[Bubble, Ring, GOp, ConnectBoy, ConnectN2, SwapColors]


def build_base(base: Base) -> SymbolicState:
    if isinstance(base, BaseEmbedding):
        return S.base_embedding(base.genus)
    if isinstance(base, BaseBoy):
        return S.base_boy()
    if isinstance(base, BaseN2):
        return S.base_n2()
    raise TypeError(f"not a base: {base!r}")


def apply_step(st: SymbolicState, step: Step) -> SymbolicState:
    """Run one construction step; raises :class:`~immregions.state.StateError` on bad arguments."""
    t = type(step)
    if t is Bubble:
        return S.bubble(st, step.target)
    if t is Ring:
        return S.ring(st, step.host)
    if t is GOp:
        return S.g_operation(st, step.pair, step.g)
    if t is ConnectBoy:
        return S.connect_boy(st, step.pair)
    if t is ConnectN2:
        return S.connect_n2(st, step.pair)
    if t is SwapColors:
        return S.swap_colors(st)
    raise TypeError(f"not a construction step: {step!r}")


@dataclass(frozen=True)
class ConstructionTrace:
    base: Base
    steps: tuple[Step, ...]
    claimed: ImmersionData

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def to_json(self) -> dict:
        return {
            "base": _base_to_json(self.base),
            "steps": [_step_to_json(s) for s in self.steps],
            "claimed": self.claimed.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj) -> ConstructionTrace:
        if not isinstance(obj, dict):
            raise DataFormatError("<root>", "expected a JSON object")
        for key in ("base", "steps", "claimed"):
            if key not in obj:
                raise DataFormatError(key, "missing")
        if not isinstance(obj["steps"], list):
            raise DataFormatError("steps", "expected a list")
        base = _base_from_json(obj["base"])
        steps = tuple(_step_from_json(s, i) for i, s in enumerate(obj["steps"]))
        try:
            claimed = ImmersionData.from_json(obj["claimed"])
        except DataFormatError as exc:
            raise DataFormatError(f"claimed.{exc.field}", str(exc).split(": ", 1)[1]) from None
        return cls(base, steps, claimed)


def _base_to_json(base: Base) -> dict:
    if isinstance(base, BaseEmbedding):
        return {"kind": "embedding", "genus": base.genus}
    if isinstance(base, BaseBoy):
        return {"kind": "boy"}
    return {"kind": "n2"}


def _base_from_json(obj) -> Base:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DataFormatError("base", "expected an object with a 'kind'")
    kind = obj["kind"]
    if kind == "embedding":
        genus = obj.get("genus")
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise DataFormatError("base.genus", "expected an integer")
        return BaseEmbedding(genus)
    if kind == "boy":
        return BaseBoy()
    if kind == "n2":
        return BaseN2()
    raise DataFormatError("base.kind", f"unknown base {kind!r}")


_OPS = {
    Bubble: "bubble",
    Ring: "ring",
    GOp: "gop",
    ConnectBoy: "connect_boy",
    ConnectN2: "connect_n2",
    SwapColors: "swap_colors",
}


def _step_to_json(step: Step) -> dict:
    out = {"op": _OPS[type(step)]}
    if isinstance(step, Bubble):
        out["target"] = step.target
    elif isinstance(step, Ring):
        out["host"] = step.host
    elif not isinstance(step, SwapColors):
        out["pair"] = list(step.pair)
        if isinstance(step, GOp):
            out["g"] = step.g
    return out


def _int_field(obj, key, where):
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise DataFormatError(f"{where}.{key}", "expected an integer")
    return v


def _pair_field(obj, where):
    v = obj.get("pair")
    if (
        not isinstance(v, list)
        or len(v) != 2
        or any(isinstance(x, bool) or not isinstance(x, int) for x in v)
    ):
        raise DataFormatError(f"{where}.pair", "expected a list of two integers")
    return (v[0], v[1])


def _step_from_json(obj, i: int) -> Step:
    where = f"steps[{i}]"
    if not isinstance(obj, dict) or "op" not in obj:
        raise DataFormatError(where, "expected an object with an 'op'")
    op = obj["op"]
    if op == "bubble":
        return Bubble(_int_field(obj, "target", where))
    if op == "ring":
        return Ring(_int_field(obj, "host", where))
    if op == "gop":
        return GOp(_pair_field(obj, where), _int_field(obj, "g", where))
    if op == "connect_boy":
        return ConnectBoy(_pair_field(obj, where))
    if op == "connect_n2":
        return ConnectN2(_pair_field(obj, where))
    if op == "swap_colors":
        return SwapColors()
    raise DataFormatError(f"{where}.op", f"unknown op {op!r}")


# -- rejection -----------------------------------------------------------------


@dataclass(frozen=True)
class RejectionReport:
    reason: str  # "empty_black", "empty_white", "chi_too_large", "negative_n", "equation"
    message: str
    doubled_black: int
    doubled_white: int
    chi_plus_n: int

    def to_json(self) -> dict:
        return {
            "reason": self.reason,
            "message": self.message,
            "doubled_black_sum": self.doubled_black,
            "doubled_white_sum": self.doubled_white,
            "chi_plus_n": self.chi_plus_n,
        }


class NotRealizable(ValueError):
    def __init__(self, report: RejectionReport):
        super().__init__(report.message)
        self.report = report


def explain(d: ImmersionData) -> RejectionReport | None:
    """First violated realizability condition, or None."""
    wb, ww = 2 * weighted_sum(d.black), 2 * weighted_sum(d.white)
    rhs = d.surface_euler + d.triple_points

    def rej(reason, msg):
        return RejectionReport(reason, msg, wb, ww, rhs)

    if not d.black:
        return rej("empty_black", "black spectrum is identically 0")
    if not d.white:
        return rej("empty_white", "white spectrum is identically 0")
    if d.surface_euler > 2:
        return rej("chi_too_large", f"chi = {d.surface_euler} > 2")
    if d.triple_points < 0:
        return rej("negative_n", f"N = {d.triple_points} < 0")
    if not (wb == ww == rhs):
        return rej(
            "equation",
            f"doubled sums differ: 2*sum(black) = {wb}, 2*sum(white) = {ww}, chi + N = {rhs}",
        )
    return None


# -- the planner ---------------------------------------------------------------


def _lowest(st: SymbolicState, color: Color, euler: int) -> int:
    return min(r.id for r in st.regions.values() if r.color is color and r.euler == euler)


def _lowest_pair(st: SymbolicState) -> tuple[int, int]:
    return min(st.certified_pairs)


def _normalize_post(color: Color, r: int):
    return lambda st: [Bubble(_lowest(st, color, 2 - r))]


def _connect_boy_post(st):
    return [ConnectBoy(_lowest_pair(st))]


def _double_ring_post(p: int):
    def post(st):
        host = min(st.regions)
        u = st.next_id
        return [Ring(host), Ring(u), GOp((u, u + 1), p - 1)]

    return post


def _cross_post(r: int, s: int, swap: bool):
    def post(st):
        host = _lowest(st, WHITE, r - s)
        steps = [Ring(host)]
        if r > 1:
            steps.append(GOp((host, st.next_id), r - 1))
        if swap:
            steps.append(SwapColors())
        return steps

    return post


def _reduce(d: ImmersionData):
    """One inductive stage.

    Returns ``("base", base, steps)`` or ``("child", smaller_data, post)``
    where ``post(state)`` yields the steps that lift a realization of the
    smaller data to one of ``d``.
    """
    a, b, chi, n = d.black, d.white, d.surface_euler, d.triple_points

    # trade a 3-cell plus a k=r region for one k=r-1 region, then undo by a bubble
    for color, spec in ((BLACK, a), (WHITE, b)):
        high = [k for k in spec if k >= 1]
        if spec[0] >= 1 and high:
            r = max(high)
            reduced = spec.adjust(0, -1).adjust(r, -1).adjust(r - 1, 1)
            child = (
                ImmersionData(reduced, b, chi, n)
                if color is BLACK
                else ImmersionData(a, reduced, chi, n)
            )
            return "child", child, _normalize_post(color, r)

    only_cells_a = set(a) <= {0}
    only_cells_b = set(b) <= {0}
    if a[0] == 0 and b[0] == 0:
        if n >= 1:
            return "child", ImmersionData(a, b, chi + 1, n - 1), _connect_boy_post
        if len(a) == 1 and a.support == b.support:
            (p,) = a.support
            if p == 1:
                steps = [Ring(1)] * (a[1] - 1) + [Ring(0)] * (b[1] - 1)
                return "base", BaseEmbedding(1), steps
            if a[p] == 1:
                return "base", BaseEmbedding(p), []
            child = ImmersionData(a.adjust(p, -1), b.adjust(p, -1), chi + 2 * (p - 1), 0)
            return "child", child, _double_ring_post(p)
        pairs = sorted((r, s) for r in a for s in b if r < s)
        if pairs:
            r, s = pairs[0]
            child = ImmersionData(
                a.adjust(r, -1), b.adjust(s, -1).adjust(s - r + 1, 1), chi + 2 * (r - 1), 0
            )
            return "child", child, _cross_post(r, s, swap=False)
        # every cross pair has r > s: run the same stage with colors exchanged
        r, s = min((r, s) for r in b for s in a if r < s)
        child = ImmersionData(
            b.adjust(r, -1), a.adjust(s, -1).adjust(s - r + 1, 1), chi + 2 * (r - 1), 0
        )
        return "child", child, _cross_post(r, s, swap=True)
    if only_cells_a and only_cells_b:
        if chi < 2:
            return "child", ImmersionData(a, b, chi + 1, n - 1), _connect_boy_post
        if n == 0:
            return "base", BaseEmbedding(0), []
        return "base", BaseN2(), [ConnectN2((0, 1))] * (n // 2 - 1)
    raise AssertionError(f"normalized data mixes 3-cell-only and 3-cell-free spectra: {d}")


def plan(d: ImmersionData) -> ConstructionTrace:
    """Construction trace whose replay realizes ``d`` exactly.

    Raises :class:`NotRealizable` if ``d`` fails the realizability conditions.
    """
    report = explain(d)
    if report is not None:
        raise NotRealizable(report)
    posts = []
    cur = d
    while True:
        kind, x, y = _reduce(cur)
        if kind == "base":
            base, steps = x, list(y)
            break
        if not x.measure < cur.measure:
            raise AssertionError(f"induction measure did not drop: {cur} -> {x}")
        posts.append(y)
        cur = x

    st = build_base(base)
    for step in steps:
        st = apply_step(st, step)
    for post in reversed(posts):
        for step in post(st):
            st = apply_step(st, step)
            steps.append(step)
    return ConstructionTrace(base, tuple(steps), d)


def plan_or_explain(d: ImmersionData) -> ConstructionTrace | RejectionReport:
    report = explain(d)
    return plan(d) if report is None else report
