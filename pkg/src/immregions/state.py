"""Symbolic stand-in for a generic immersion.

A :class:`SymbolicState` records the complementary regions (color and Euler
characteristic), the surface Euler characteristic, the triple point count,
and a set of *certified pairs*: opposite-colored regions known to meet along
a disc that misses the intersection set.  Certified pairs are the only sites
where g-operations and connect sums may be performed.

Every transformer returns a new state; inputs are never modified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .core import ImmersionData, RegionSpectrum


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def opposite(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK


BLACK, WHITE = Color.BLACK, Color.WHITE


@dataclass(frozen=True, slots=True)
class Region:
    id: int
    color: Color
    euler: int


def _pair(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True, eq=False)
class SymbolicState:
    regions: Mapping[int, Region]
    surface_euler: int
    triple_points: int
    certified_pairs: frozenset = frozenset()
    orientable: bool = True
    next_id: int = 0

    def __post_init__(self):
        if not isinstance(self.regions, MappingProxyType):
            object.__setattr__(self, "regions", MappingProxyType(dict(self.regions)))

    def region(self, rid: int) -> Region:
        try:
            return self.regions[rid]
        except KeyError:
            raise UnknownRegionError(rid) from None

    def of_color(self, color: Color) -> list[Region]:
        return [r for r in self.regions.values() if r.color is color]

    def color_sum(self, color: Color) -> int:
        return sum(r.euler for r in self.regions.values() if r.color is color)

    def key(self) -> tuple:
        """Comparison key covering every field, ids included."""
        return (
            tuple((r.id, r.color.value, r.euler) for r in self.regions.values()),
            self.surface_euler,
            self.triple_points,
            tuple(sorted(self.certified_pairs)),
            self.orientable,
            self.next_id,
        )

    def __eq__(self, other):
        if not isinstance(other, SymbolicState):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self) -> dict:
        return {
            "regions": [
                {"id": r.id, "color": r.color.value, "euler": r.euler}
                for r in self.regions.values()
            ],
            "chi": self.surface_euler,
            "n": self.triple_points,
            "certified_pairs": [list(p) for p in sorted(self.certified_pairs)],
            "orientable": self.orientable,
            "next_id": self.next_id,
        }


class StateError(ValueError):
    """A transformer was applied where its preconditions fail."""

    reason = "StateError"


class UnknownRegionError(StateError, KeyError):
    reason = "UnknownRegion"

    def __init__(self, rid):
        ValueError.__init__(self, f"no live region with id {rid}")
        self.region_id = rid

    __str__ = ValueError.__str__


class UncertifiedPairError(StateError):
    reason = "UncertifiedPair"


class ColorRuleError(StateError):
    reason = "ColorRuleViolated"


class RegionEulerError(StateError):
    """A handle-removal move targeted a 3-cell, which has no handle to lose."""

    reason = "Lemma1Violated"


def _evolve(st: SymbolicState, regions: dict, **changes) -> SymbolicState:
    return SymbolicState(
        regions=regions,
        surface_euler=changes.get("surface_euler", st.surface_euler),
        triple_points=changes.get("triple_points", st.triple_points),
        certified_pairs=changes.get("certified_pairs", st.certified_pairs),
        orientable=changes.get("orientable", st.orientable),
        next_id=changes.get("next_id", st.next_id),
    )


def _two_cells(chi_region: int, chi: int, n: int, orientable: bool) -> SymbolicState:
    regions = {0: Region(0, BLACK, chi_region), 1: Region(1, WHITE, chi_region)}
    return SymbolicState(regions, chi, n, frozenset({(0, 1)}), orientable, 2)


# -- base states -------------------------------------------------------------

def base_embedding(genus: int) -> SymbolicState:
    """Standard embedding of the orientable surface of the given genus.

    Both sides are handlebodies with Euler characteristic ``1 - genus``.
    """
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    return _two_cells(1 - genus, 2 - 2 * genus, 0, True)


def base_boy() -> SymbolicState:
    """Boy's surface: one triple point, one 3-cell of each color."""
    return _two_cells(1, 1, 1, False)


def base_n2() -> SymbolicState:
    """Immersed sphere with two triple points and four 3-cells.

    Regions 0 and 1 form the single certified pair.
    """
    regions = {i: Region(i, BLACK if i % 2 == 0 else WHITE, 1) for i in range(4)}
    return SymbolicState(regions, 2, 2, frozenset({(0, 1)}), True, 4)


# -- construction transformers -----------------------------------------------

def bubble(st: SymbolicState, target: int) -> SymbolicState:
    """Push a sheet into ``target``: it loses a 2-handle and a 3-cell of its color appears."""
    r = st.region(target)
    regions = dict(st.regions)
    regions[target] = Region(target, r.color, r.euler - 1)
    nid = st.next_id
    regions[nid] = Region(nid, r.color, 1)
    return _evolve(st, regions, next_id=nid + 1)


def ring(st: SymbolicState, host: int) -> SymbolicState:
    """Add a ring inside ``host``, creating an adjacent solid torus of the other color."""
    r = st.region(host)
    regions = dict(st.regions)
    nid = st.next_id
    regions[nid] = Region(nid, r.color.opposite, 0)
    return _evolve(
        st, regions, next_id=nid + 1, certified_pairs=st.certified_pairs | {(host, nid)}
    )


def _certified(st: SymbolicState, pair) -> tuple[int, int]:
    x, y = pair
    st.region(x)
    st.region(y)
    p = _pair(x, y)
    if p not in st.certified_pairs:
        raise UncertifiedPairError(f"pair {p} is not certified")
    return p


def g_operation(st: SymbolicState, pair, g: int) -> SymbolicState:
    """Add ``g`` handles to the surface across the disc shared by ``pair``."""
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    x, y = _certified(st, pair)
    if g == 0:
        return st
    regions = dict(st.regions)
    for rid in (x, y):
        r = regions[rid]
        regions[rid] = Region(rid, r.color, r.euler - g)
    return _evolve(st, regions, surface_euler=st.surface_euler - 2 * g)


def connect_boy(st: SymbolicState, pair) -> SymbolicState:
    """Connect sum with Boy's surface at the disc shared by ``pair``.

    Boy's two 3-cells merge into the two regions of the pair, so no region
    changes; the surface gains a cross-cap and one triple point.
    """
    _certified(st, pair)
    return _evolve(
        st,
        dict(st.regions),
        surface_euler=st.surface_euler - 1,
        triple_points=st.triple_points + 1,
        orientable=False,
    )


def connect_n2(st: SymbolicState, pair) -> SymbolicState:
    """Connect sum with the two-triple-point sphere at ``pair``.

    Two of its four 3-cells are absorbed; the other two survive as new
    regions, one of each color.
    """
    _certified(st, pair)
    regions = dict(st.regions)
    nid = st.next_id
    regions[nid] = Region(nid, BLACK, 1)
    regions[nid + 1] = Region(nid + 1, WHITE, 1)
    # chi(F # S^2) = chi(F) + 2 - 2
    return _evolve(st, regions, triple_points=st.triple_points + 2, next_id=nid + 2)


def swap_colors(st: SymbolicState) -> SymbolicState:
    """Relabel every region with the opposite color."""
    regions = {rid: Region(rid, r.color.opposite, r.euler) for rid, r in st.regions.items()}
    return _evolve(st, regions)


# -- reading data off a state --------------------------------------------------

def derive_data(st: SymbolicState) -> ImmersionData:
    black = RegionSpectrum.from_eulers(r.euler for r in st.regions.values() if r.color is BLACK)
    white = RegionSpectrum.from_eulers(r.euler for r in st.regions.values() if r.color is WHITE)
    return ImmersionData(black, white, st.surface_euler, st.triple_points)


@dataclass(frozen=True)
class Violation:
    invariant: str  # "region_euler", "colors", "certificate", "equation"
    message: str
    region_ids: tuple = field(default=())

    def __str__(self):
        return f"[{self.invariant}] {self.message}"


def check_state(st: SymbolicState) -> list[Violation]:
    """Audit every state invariant; an empty list means the state is sound."""
    out = []
    black_sum = white_sum = 0
    has_black = has_white = False
    for r in st.regions.values():
        if r.euler > 1:
            out.append(Violation("region_euler", f"region {r.id} has euler {r.euler} > 1", (r.id,)))
        if r.color is BLACK:
            black_sum += r.euler
            has_black = True
        else:
            white_sum += r.euler
            has_white = True
    if not has_black:
        out.append(Violation("colors", "no black region"))
    if not has_white:
        out.append(Violation("colors", "no white region"))
    if st.triple_points < 0:
        out.append(Violation("equation", f"negative triple point count {st.triple_points}"))
    for p in sorted(st.certified_pairs):
        x, y = p
        if x not in st.regions or y not in st.regions:
            out.append(Violation("certificate", f"certified pair {p} references a dead region", p))
        elif st.regions[x].color is st.regions[y].color:
            out.append(Violation("certificate", f"certified pair {p} is single-colored", p))
    rhs = st.surface_euler + st.triple_points
    if black_sum != white_sum or 2 * black_sum != rhs:
        out.append(
            Violation(
                "equation",
                f"doubled black sum {2 * black_sum}, doubled white sum {2 * white_sum}, "
                f"chi + N = {rhs}",
            )
        )
    return out
