"""Complementary-region data of generic immersions of closed surfaces in S^3.

Decide which data ``(a_k, b_k, chi, N)`` occur, build replayable construction
traces realizing them, and check regular-homotopy invariants on a symbolic
model of an immersion.
"""

from .core import (  # noqa: F401
    ImmersionData,
    RegionSpectrum,
    euler_of_image,
    is_realizable,
    total_count,
    weighted_sum,
)
from .homotopy import MoveEvent, MoveKind, half_invariants  # noqa: F401
from .planner import ConstructionTrace, NotRealizable, RejectionReport, plan, plan_or_explain  # noqa: F401
from .state import Color, SymbolicState, check_state, derive_data  # noqa: F401
from .verifier import ReplayError, replay, verify  # noqa: F401

__version__ = "0.1.0"
