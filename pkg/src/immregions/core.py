"""Region spectra and the realizability predicate.

A :class:`RegionSpectrum` counts the complementary regions of one color by
``k``, where a region counted under ``k`` has Euler characteristic ``1 - k``.
An :class:`ImmersionData` bundles the two spectra with the Euler
characteristic of the surface and the number of triple points.

All arithmetic is on integers.  The half in ``(chi + N) / 2`` is never
formed; doubled quantities are compared instead.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping
from dataclasses import dataclass


class RegionSpectrum(Mapping):
    """Immutable sparse map ``k -> count`` with all counts positive.

    Missing keys read as 0, so ``s[7]`` is always defined.
    """

    __slots__ = ("_counts", "_hash", "_weighted")

    def __init__(self, counts: Mapping[int, int] | None = None):
        clean = {}
        for k, c in (counts or {}).items():
            k, c = int(k), int(c)
            if k < 0:
                raise ValueError(f"spectrum index must be non-negative, got {k}")
            if c < 0:
                raise ValueError(f"count for k={k} is negative: {c}")
            if c:
                clean[k] = c
        self._counts = dict(sorted(clean.items()))
        self._hash = None
        self._weighted = None

    @classmethod
    def from_eulers(cls, eulers) -> RegionSpectrum:
        """Spectrum of a collection of region Euler characteristics."""
        counts: dict[int, int] = {}
        for e in eulers:
            k = 1 - e
            counts[k] = counts.get(k, 0) + 1
        return cls(counts)

    def __getitem__(self, k: int) -> int:
        return self._counts.get(k, 0)

    def __contains__(self, k) -> bool:
        return k in self._counts

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def items(self):
        return self._counts.items()

    def values(self):
        return self._counts.values()

    def keys(self):
        return self._counts.keys()

    def __eq__(self, other) -> bool:
        if isinstance(other, RegionSpectrum):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == RegionSpectrum(other)._counts
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"RegionSpectrum({self._counts!r})"

    def __add__(self, other: RegionSpectrum) -> RegionSpectrum:
        out = dict(self._counts)
        for k, c in other.items():
            out[k] = out.get(k, 0) + c
        return RegionSpectrum(out)

    def adjust(self, k: int, delta: int) -> RegionSpectrum:
        """Return a copy with ``delta`` added to the count at ``k``."""
        out = dict(self._counts)
        out[k] = out.get(k, 0) + delta
        return RegionSpectrum(out)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._counts)

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in self._counts.items()}


def weighted_sum(s: Mapping[int, int]) -> int:
    """Sum of ``(1 - k) * count(k)``: the Euler characteristic of the union."""
    if isinstance(s, RegionSpectrum):
        if s._weighted is None:
            s._weighted = sum((1 - k) * c for k, c in s._counts.items())
        return s._weighted
    return sum((1 - k) * c for k, c in s.items())


def total_count(s: Mapping[int, int]) -> int:
    """Number of regions in the spectrum."""
    return sum(s.values())


@dataclass(frozen=True)
class ImmersionData:
    """The tuple ``(black, white, chi, N)``.

    Construction does not enforce ``chi <= 2`` or ``N >= 0``; such data is
    representable so that it can be rejected with a reason.
    """

    black: RegionSpectrum
    white: RegionSpectrum
    surface_euler: int
    triple_points: int

    def __post_init__(self):
        if not isinstance(self.black, RegionSpectrum):
            object.__setattr__(self, "black", RegionSpectrum(self.black))
        if not isinstance(self.white, RegionSpectrum):
            object.__setattr__(self, "white", RegionSpectrum(self.white))

    @classmethod
    def of(cls, black, white, chi: int, n: int) -> ImmersionData:
        return cls(RegionSpectrum(black), RegionSpectrum(white), chi, n)

    def swapped(self) -> ImmersionData:
        """Same data with the two colors exchanged."""
        return ImmersionData(self.white, self.black, self.surface_euler, self.triple_points)

    @property
    def measure(self) -> int:
        """Induction measure ``N + sum a_k + sum b_k``."""
        return self.triple_points + total_count(self.black) + total_count(self.white)

    def to_json(self) -> dict:
        return {
            "black": self.black.to_json(),
            "white": self.white.to_json(),
            "chi": self.surface_euler,
            "n": self.triple_points,
        }

    @classmethod
    def from_json(cls, obj) -> ImmersionData:
        """Parse the JSON object form; raises :class:`DataFormatError`."""
        if not isinstance(obj, dict):
            raise DataFormatError("<root>", "expected a JSON object")
        for key in ("black", "white", "chi", "n"):
            if key not in obj:
                raise DataFormatError(key, "missing")
        spectra = []
        for key in ("black", "white"):
            raw = obj[key]
            if not isinstance(raw, dict):
                raise DataFormatError(key, "expected an object of k -> count")
            counts = {}
            for k, c in raw.items():
                if not (isinstance(k, str) and k.isdigit()):
                    raise DataFormatError(f"{key}.{k}", "key must be a decimal non-negative integer")
                if isinstance(c, bool) or not isinstance(c, int) or c <= 0:
                    raise DataFormatError(f"{key}.{k}", "count must be a positive integer")
                counts[int(k)] = c
            spectra.append(RegionSpectrum(counts))
        for key in ("chi", "n"):
            if isinstance(obj[key], bool) or not isinstance(obj[key], int):
                raise DataFormatError(key, "expected an integer")
        return cls(spectra[0], spectra[1], obj["chi"], obj["n"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __str__(self) -> str:
        fmt = lambda s: "{" + ", ".join(f"{k}:{c}" for k, c in s.items()) + "}"
        return f"({fmt(self.black)}, {fmt(self.white)}, chi={self.surface_euler}, N={self.triple_points})"


class DataFormatError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"field {field!r}: {message}")
        self.field = field


def is_realizable(d: ImmersionData) -> bool:
    """Whether some generic immersion of a closed surface in S^3 has data ``d``."""
    if not d.black or not d.white:
        return False
    if d.surface_euler > 2 or d.triple_points < 0:
        return False
    rhs = d.surface_euler + d.triple_points
    return 2 * weighted_sum(d.black) == rhs and 2 * weighted_sum(d.white) == rhs


def euler_of_image(d: ImmersionData) -> int:
    """Euler characteristic of the image surface, from the region data.

    Equals ``chi(F) + N`` for realizable data.
    """
    if not is_realizable(d):
        raise ValueError(f"data is not realizable: {d}")
    return weighted_sum(d.black) + weighted_sum(d.white)
