"""Brute-force evidence for both directions of the realizability criterion.

Random numbers come from SplitMix64 (Steele, Lea and Flood 2014) so that a
seed reproduces the same traces in any language:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all modulo 2**64.  ``below(n)`` rejects draws at or above the largest
multiple of ``n`` below 2**64 and returns the draw mod ``n``.

Draw order, for reproduction elsewhere.  A base: ``below(3)`` picks
embedding / Boy / N2, an embedding then draws its genus with
``below(max_k + 1)``.  ``random_trace`` then draws the length with
``below(max_trace_len + 1)`` and per step an op index into (bubble, ring,
gop, connect_boy, connect_n2, swap_colors), then a region from the sorted
live ids or a pair from the sorted certified pairs, then ``g`` with
``below(max_k + 1)``.  ``fuzz_homotopy`` picks a kind from the available
ones in order E, H, T, Q (H and T need a region with euler <= 0, Q a
3-cell), then the target from regions sorted by id; H draws ``x`` among
regions with euler <= 0, then ``y`` among regions of the same color.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import state as S
from .core import ImmersionData, RegionSpectrum, is_realizable
from .homotopy import MoveEvent, MoveKind, apply_move, half_invariants
from .planner import (
    BaseBoy,
    BaseEmbedding,
    BaseN2,
    Bubble,
    ConnectBoy,
    ConnectN2,
    ConstructionTrace,
    GOp,
    Ring,
    SwapColors,
    apply_step,
    build_base,
)
from .state import SymbolicState, check_state, derive_data

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next()
            if x < limit:
                return x % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class Bounds:
    max_k: int = 3
    max_count: int = 3
    max_n: int = 4
    min_chi: int = -8
    max_trace_len: int = 25

    def __post_init__(self):
        for name in ("max_k", "max_count", "max_n", "max_trace_len"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.min_chi > 2:
            raise ValueError("min_chi must be at most 2")

    def contains(self, d: ImmersionData) -> bool:
        """Whether ``d`` lies in the bounded data universe."""
        if not (0 <= d.triple_points <= self.max_n and self.min_chi <= d.surface_euler <= 2):
            return False
        for spec in (d.black, d.white):
            for k, c in spec.items():
                if k > self.max_k or c > self.max_count:
                    return False
        return True


# -- random traces ---------------------------------------------------------------

_STEP_KINDS = ("bubble", "ring", "gop", "connect_boy", "connect_n2", "swap_colors")


def _random_base(rng: SplitMix64, bounds: Bounds):
    kind = rng.below(3)
    if kind == 0:
        return BaseEmbedding(rng.below(bounds.max_k + 1))
    return BaseBoy() if kind == 1 else BaseN2()


def random_trace(seed: int, bounds: Bounds) -> ConstructionTrace:
    """A random legal trace of at most ``bounds.max_trace_len`` steps.

    The claimed data is whatever the trace realizes.
    """
    rng = SplitMix64(seed)
    base = _random_base(rng, bounds)
    st = build_base(base)
    steps = []
    for _ in range(rng.below(bounds.max_trace_len + 1)):
        kind = _STEP_KINDS[rng.below(len(_STEP_KINDS))]
        if kind in ("bubble", "ring"):
            rid = rng.choice(sorted(st.regions))
            step = Bubble(rid) if kind == "bubble" else Ring(rid)
        elif kind == "swap_colors":
            step = SwapColors()
        else:
            pair = rng.choice(sorted(st.certified_pairs))
            if kind == "gop":
                step = GOp(pair, rng.below(bounds.max_k + 1))
            else:
                step = ConnectBoy(pair) if kind == "connect_boy" else ConnectN2(pair)
        st = apply_step(st, step)
        steps.append(step)
    return ConstructionTrace(base, tuple(steps), derive_data(st))


# -- exhaustive enumeration --------------------------------------------------------


def _canonical(st: SymbolicState, bounds: Bounds) -> tuple:
    # certified pairs matter only while a g-operation can still use them
    regs = st.regions
    floor = 1 - bounds.max_k
    cells = tuple(sorted((r.color.value, r.euler) for r in regs.values()))
    certs = set()
    for x, y in st.certified_pairs:
        rx, ry = regs[x], regs[y]
        if rx.euler > floor and ry.euler > floor:
            certs.add(tuple(sorted(((rx.color.value, rx.euler), (ry.color.value, ry.euler)))))
    return cells, st.surface_euler, st.triple_points, tuple(sorted(certs))


def _hopeless(st: SymbolicState, bounds: Bounds) -> bool:
    """No descendant of ``st`` has data inside ``bounds``.

    N never falls and chi never rises.  Region eulers only fall and regions
    are never removed, so for each color the number of regions with
    ``k >= j`` never falls either.
    """
    if st.triple_points > bounds.max_n or st.surface_euler < bounds.min_chi:
        return True
    top = bounds.max_k
    tally = {S.BLACK: [0] * (top + 1), S.WHITE: [0] * (top + 1)}
    for r in st.regions.values():
        k = 1 - r.euler
        if k > top:
            return True
        tally[r.color][k] += 1
    for counts in tally.values():
        at_least = 0
        for j in range(top, -1, -1):
            at_least += counts[j]
            if at_least > (top - j + 1) * bounds.max_count:
                return True
    return False


def _successors(st: SymbolicState, bounds: Bounds) -> Iterator[SymbolicState]:
    for rid in st.regions:
        yield S.bubble(st, rid)
        yield S.ring(st, rid)
    for pair in sorted(st.certified_pairs):
        x, y = pair
        worst = min(st.regions[x].euler, st.regions[y].euler)
        g_max = min(bounds.max_k - (1 - worst), (st.surface_euler - bounds.min_chi) // 2)
        for g in range(1, g_max + 1):
            yield S.g_operation(st, pair, g)
        yield S.connect_boy(st, pair)
        yield S.connect_n2(st, pair)
    yield S.swap_colors(st)


def _bases(bounds: Bounds) -> list:
    out = [BaseEmbedding(g) for g in range(bounds.max_k + 1) if 2 - 2 * g >= bounds.min_chi]
    return out + [BaseBoy(), BaseN2()]


def enumerate_realized(bounds: Bounds) -> frozenset[ImmersionData]:
    """Data of every state reachable by a legal trace of at most ``max_trace_len`` steps.

    States are deduplicated by their color/euler multiset, chi, N and the
    set of color/euler classes of certified pairs that can still take a
    g-operation.  Only data inside ``bounds`` is returned.
    """
    seen = set()
    frontier = []
    for base in _bases(bounds):
        st = build_base(base)
        key = _canonical(st, bounds)
        if key not in seen and not _hopeless(st, bounds):
            seen.add(key)
            frontier.append(st)
    found = {derive_data(st) for st in frontier}
    for _ in range(bounds.max_trace_len):
        nxt = []
        for st in frontier:
            for child in _successors(st, bounds):
                if _hopeless(child, bounds):
                    continue
                key = _canonical(child, bounds)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(child)
                found.add(derive_data(child))
        frontier = nxt
        if not frontier:
            break
    return frozenset(d for d in found if bounds.contains(d))


def _spectra(max_k: int, max_count: int) -> list[RegionSpectrum]:
    out = []
    for counts in itertools.product(range(max_count + 1), repeat=max_k + 1):
        if any(counts):
            out.append(RegionSpectrum(dict(enumerate(counts))))
    return out


def data_universe(bounds: Bounds) -> Iterator[ImmersionData]:
    """Every data tuple inside ``bounds`` with nonempty spectra, realizable or not."""
    spectra = _spectra(bounds.max_k, bounds.max_count)
    for a in spectra:
        for b in spectra:
            for chi in range(bounds.min_chi, 3):
                for n in range(bounds.max_n + 1):
                    yield ImmersionData(a, b, chi, n)


def realizable_universe(bounds: Bounds) -> frozenset[ImmersionData]:
    """Realizable data inside ``bounds``, computed from the predicate alone."""
    spectra = _spectra(bounds.max_k, bounds.max_count)
    by_sum: dict[int, list] = {}
    for s in spectra:
        by_sum.setdefault(sum((1 - k) * c for k, c in s.items()), []).append(s)
    out = set()
    for chi in range(bounds.min_chi, 3):
        for n in range(bounds.max_n + 1):
            if (chi + n) % 2:
                continue
            group = by_sum.get((chi + n) // 2, [])
            out.update(ImmersionData(a, b, chi, n) for a in group for b in group)
    assert all(is_realizable(d) for d in out)
    return frozenset(out)


# -- homotopy fuzzing -------------------------------------------------------------


@dataclass
class FuzzReport:
    seed: int
    trials: int
    failures: list = field(default_factory=list)
    per_move_counts: dict = field(default_factory=lambda: {k.value: 0 for k in MoveKind})

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "per_move_counts": dict(self.per_move_counts),
        }


def _random_move(rng: SplitMix64, st: SymbolicState) -> MoveEvent:
    regs = [st.regions[i] for i in sorted(st.regions)]
    handled = [r for r in regs if r.euler <= 0]
    cells = [r for r in regs if r.euler == 1]
    kinds = [MoveKind.E]
    if handled:
        kinds += [MoveKind.H, MoveKind.T]
    if cells:
        kinds.append(MoveKind.Q)
    kind = rng.choice(kinds)
    if kind is MoveKind.E:
        return MoveEvent(kind, (rng.choice(regs).id,))
    if kind is MoveKind.Q:
        return MoveEvent(kind, (rng.choice(cells).id,))
    x = rng.choice(handled)
    if kind is MoveKind.T:
        return MoveEvent(kind, (x.id,))
    y = rng.choice([r for r in regs if r.color is x.color])
    return MoveEvent(kind, (x.id, y.id))


def fuzz_homotopy(
    seed: int,
    steps: int,
    bounds: Bounds = Bounds(),
    observer: Callable[[SymbolicState], None] | None = None,
) -> FuzzReport:
    """Apply ``steps`` random legal E/H/T/Q moves to a random base.

    After every move the doubled invariants must match the base's and the
    state must pass :func:`~immregions.state.check_state`; T moves must add
    exactly two triple points.
    """
    rng = SplitMix64(seed)
    base = _random_base(rng, bounds)
    st = build_base(base)
    if observer:
        observer(st)
    start = half_invariants(st)
    report = FuzzReport(seed, steps)
    for i in range(steps):
        ev = _random_move(rng, st)
        report.per_move_counts[ev.kind.value] += 1
        nxt = apply_move(st, ev)
        problems = [str(v) for v in check_state(nxt)]
        inv = half_invariants(nxt)
        if inv != start:
            problems.append(f"half invariants moved from {start} to {inv}")
        if ev.kind is MoveKind.T and nxt.triple_points != st.triple_points + 2:
            problems.append("T move did not add exactly two triple points")
        if problems:
            report.failures.append(
                {
                    "seed": seed,
                    "step": i,
                    "base": build_base(base).to_json(),
                    "event": ev.to_json(),
                    "before": st.to_json(),
                    "problems": problems,
                }
            )
        if observer:
            observer(nxt)
        st = nxt
    return report
