import pytest
from hypothesis import given, settings, strategies as st

from immregions.core import is_realizable
from immregions.homotopy import MoveKind
from immregions.oracle import (
    Bounds,
    SplitMix64,
    data_universe,
    enumerate_realized,
    fuzz_homotopy,
    random_trace,
    realizable_universe,
)
from immregions.planner import BaseBoy, BaseEmbedding, BaseN2
from immregions.verifier import verify

from conftest import D

ENUM = Bounds(max_k=2, max_count=2, max_n=2, min_chi=-4, max_trace_len=3)


def test_splitmix_reference_vectors():
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_below_stays_in_range():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    with pytest.raises(ValueError):
        rng.below(0)


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(max_k=-1)
    with pytest.raises(ValueError):
        Bounds(min_chi=3)


def test_random_trace_of_length_zero_is_a_base():
    for seed in range(20):
        t = random_trace(seed, Bounds(max_trace_len=0))
        assert t.steps == ()
        assert isinstance(t.base, (BaseEmbedding, BaseBoy, BaseN2))


@settings(max_examples=300)
@given(st.integers(0, 2**63))
def test_random_traces_verify_and_satisfy_the_equation(seed):
    t = random_trace(seed, Bounds(max_trace_len=25))
    assert len(t.steps) <= 25
    assert verify(t, t.claimed)
    assert is_realizable(t.claimed)


def test_random_trace_is_seed_deterministic():
    b = Bounds()
    assert random_trace(99, b).dumps() == random_trace(99, b).dumps()
    assert any(random_trace(s, b) != random_trace(99, b) for s in range(5))


def test_data_universe_size():
    b = Bounds(max_k=1, max_count=2, max_n=1, min_chi=-1)
    # 8 nonempty spectra per color, 4 values of chi, 2 of N
    assert len(list(data_universe(b))) == 8 * 8 * 4 * 2


def test_realizable_universe_matches_the_predicate():
    b = Bounds(max_k=2, max_count=2, max_n=2, min_chi=-4)
    assert realizable_universe(b) == {d for d in data_universe(b) if is_realizable(d)}


def test_enumerate_bases_only():
    got = enumerate_realized(Bounds(max_k=2, max_count=2, max_n=2, min_chi=-4, max_trace_len=0))
    assert got == {
        D({0: 1}, {0: 1}, 2, 0),
        D({1: 1}, {1: 1}, 0, 0),
        D({2: 1}, {2: 1}, -2, 0),
        D({0: 1}, {0: 1}, 1, 1),
        D({0: 2}, {0: 2}, 2, 2),
    }


def test_short_enumeration_is_sound_but_partial():
    got = enumerate_realized(ENUM)
    expected = realizable_universe(ENUM)
    assert got <= expected
    # data with 8 regions and N = 0 needs at least six region-creating steps
    assert D({0: 2, 2: 2}, {0: 2, 2: 2}, 0, 0) in expected - got


def test_enumeration_matches_the_predicate_once_long_enough():
    b = Bounds(max_k=2, max_count=2, max_n=2, min_chi=-4, max_trace_len=12)
    assert enumerate_realized(b) == realizable_universe(b)


def test_enumeration_is_closed_under_color_swap():
    got = enumerate_realized(ENUM)
    assert {d.swapped() for d in got} == got


def test_fuzz_seed_7():
    report = fuzz_homotopy(7, 1000, Bounds())
    assert report.ok, report.failures[:3]
    assert sum(report.per_move_counts.values()) == 1000
    assert all(report.per_move_counts[k.value] > 0 for k in MoveKind)


def test_fuzz_t_moves_add_two_triple_points():
    n_seen = []
    report = fuzz_homotopy(11, 300, Bounds(), observer=lambda s: n_seen.append(s.triple_points))
    assert report.ok
    jumps = [b - a for a, b in zip(n_seen, n_seen[1:]) if b != a]
    assert jumps and set(jumps) == {2}
    assert len(jumps) == report.per_move_counts["T"]


def test_fuzz_report_json_and_determinism():
    a = fuzz_homotopy(3, 200).to_json()
    b = fuzz_homotopy(3, 200).to_json()
    assert a == b
    assert set(a) == {"seed", "trials", "failures", "per_move_counts"}
    assert a["trials"] == 200 and a["failures"] == []


def test_fuzz_reports_failures_with_reproduction_data(monkeypatch):
    import immregions.oracle as oracle
    from immregions.homotopy import HalfInvariantPair, half_invariants

    calls = iter(range(10**6))

    def drifting(st):
        inv = half_invariants(st)
        return inv if next(calls) == 0 else HalfInvariantPair(inv.two_a + 1, inv.two_b)

    monkeypatch.setattr(oracle, "half_invariants", drifting)
    report = fuzz_homotopy(1, 5)
    assert not report.ok and len(report.failures) == 5
    f = report.failures[0]
    assert {"seed", "step", "base", "event", "before", "problems"} <= set(f)
    assert f["step"] == 0 and "half invariants moved" in f["problems"][0]
