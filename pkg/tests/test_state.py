import pytest
from hypothesis import given, settings, strategies as st

from immregions.core import RegionSpectrum, is_realizable, total_count, weighted_sum
from immregions.state import (
    BLACK,
    WHITE,
    Region,
    SymbolicState,
    UncertifiedPairError,
    UnknownRegionError,
    base_boy,
    base_embedding,
    base_n2,
    bubble,
    check_state,
    connect_boy,
    connect_n2,
    derive_data,
    g_operation,
    ring,
    swap_colors,
)

from conftest import D, random_state


def eulers(st, color):
    return sorted(r.euler for r in st.regions.values() if r.color is color)


@pytest.mark.parametrize("genus, chi_region", [(0, 1), (1, 0), (2, -1), (5, -4)])
def test_base_embedding(genus, chi_region):
    st = base_embedding(genus)
    assert eulers(st, BLACK) == eulers(st, WHITE) == [chi_region]
    assert st.surface_euler == 2 - 2 * genus and st.triple_points == 0
    assert st.certified_pairs == {(0, 1)} and st.orientable
    assert check_state(st) == []


def test_base_embedding_rejects_negative_genus():
    with pytest.raises(ValueError):
        base_embedding(-1)


def test_base_boy():
    st = base_boy()
    assert derive_data(st) == D({0: 1}, {0: 1}, 1, 1)
    assert check_state(st) == []
    assert not st.orientable
    d = derive_data(st)
    assert weighted_sum(d.black) + weighted_sum(d.white) == 2


def test_base_n2():
    st = base_n2()
    assert derive_data(st) == D({0: 2}, {0: 2}, 2, 2)
    assert len(st.of_color(BLACK)) == len(st.of_color(WHITE)) == 2
    assert len(st.certified_pairs) == 1
    assert 2 * st.color_sum(BLACK) == st.surface_euler + st.triple_points == 4
    assert check_state(st) == []


def test_bubble_on_solid_torus():
    st = base_embedding(1)
    out = bubble(st, 0)
    assert out.regions[0].euler == -1
    assert out.regions[2] == Region(2, BLACK, 1)
    assert out.certified_pairs == st.certified_pairs
    assert (out.surface_euler, out.triple_points) == (0, 0)


def test_bubble_on_a_3cell_keeps_the_equation():
    out = bubble(base_embedding(0), 0)
    d = derive_data(out)
    assert d == D({0: 1, 1: 1}, {0: 1}, 2, 0)
    # the 3-cell becomes a solid torus and a new 3-cell appears: sums are unchanged
    assert check_state(out) == []
    assert is_realizable(d)


def test_bubble_adds_one_region_of_the_target_color():
    st = base_n2()
    out = bubble(st, 3)
    assert total_count(derive_data(out).white) == total_count(derive_data(st).white) + 1
    assert derive_data(out).black == derive_data(st).black


def test_unknown_region():
    with pytest.raises(UnknownRegionError):
        bubble(base_boy(), 9)
    with pytest.raises(UnknownRegionError):
        ring(base_boy(), 2)


def test_ring_in_torus_side():
    out = ring(base_embedding(1), 1)
    assert out.regions[2] == Region(2, BLACK, 0)
    assert derive_data(out) == D({1: 2}, {1: 1}, 0, 0)
    assert (1, 2) in out.certified_pairs


def test_nested_rings_chain_certificates():
    st = ring(ring(base_embedding(0), 0), 2)
    assert st.certified_pairs == {(0, 1), (0, 2), (2, 3)}
    assert st.regions[2].color is WHITE and st.regions[3].color is BLACK
    assert (st.surface_euler, st.triple_points) == (2, 0)


def test_ring_in_each_side_of_torus():
    st = ring(ring(base_embedding(1), 1), 0)
    assert derive_data(st) == D({1: 2}, {1: 2}, 0, 0)


def test_g_operation():
    st = ring(ring(base_embedding(0), 0), 2)
    out = g_operation(st, (2, 3), 1)
    assert (out.regions[2].euler, out.regions[3].euler) == (-1, -1)
    assert out.surface_euler == st.surface_euler - 2
    assert (2, 3) in out.certified_pairs
    assert check_state(out) == []


def test_g_operation_zero_is_identity():
    st = base_n2()
    assert g_operation(st, (0, 1), 0) is st


def test_g_operation_on_unequal_pair():
    regions = {
        0: Region(0, BLACK, 0),
        1: Region(1, WHITE, -1),
        2: Region(2, BLACK, -1),
        3: Region(3, WHITE, 0),
    }
    st = SymbolicState(regions, -2, 0, frozenset({(0, 1)}), True, 4)
    assert check_state(st) == []
    out = g_operation(st, (1, 0), 3)
    assert (out.regions[0].euler, out.regions[1].euler) == (-3, -4)
    assert out.surface_euler == -8
    assert check_state(out) == []


def test_g_operation_needs_certified_pair():
    st = base_n2()
    with pytest.raises(UncertifiedPairError):
        g_operation(st, (2, 3), 1)
    with pytest.raises(UnknownRegionError):
        g_operation(st, (0, 7), 1)


def test_connect_boy():
    st = connect_boy(base_embedding(0), (0, 1))
    assert derive_data(st) == D({0: 1}, {0: 1}, 1, 1)
    assert not st.orientable


@pytest.mark.parametrize("n", range(1, 7))
def test_boy_chain(n):
    st = base_embedding(0)
    for _ in range(n):
        before = st
        st = connect_boy(st, (0, 1))
        assert sorted(st.regions.values(), key=lambda r: r.id) == sorted(
            before.regions.values(), key=lambda r: r.id
        )
    assert derive_data(st) == D({0: 1}, {0: 1}, 2 - n, n)


def test_connect_n2():
    st = connect_n2(base_n2(), (0, 1))
    assert derive_data(st) == D({0: 3}, {0: 3}, 2, 4)
    assert st.regions[4].color is BLACK and st.regions[5].color is WHITE
    assert st.certified_pairs == {(0, 1)}


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_connect_n2_chain(n):
    st = base_n2()
    for _ in range(n // 2 - 1):
        before = st.triple_points
        st = connect_n2(st, (0, 1))
        assert st.triple_points == before + 2
    assert derive_data(st) == D({0: 1 + n // 2}, {0: 1 + n // 2}, 2, n)


def test_connect_n2_keeps_surface_euler_on_any_surface():
    st = connect_n2(base_embedding(3), (0, 1))
    assert st.surface_euler == -4
    assert check_state(st) == []


def test_derive_data_examples():
    assert derive_data(base_embedding(0)) == D({0: 1}, {0: 1}, 2, 0)
    assert derive_data(base_boy()) == D({0: 1}, {0: 1}, 1, 1)


def test_check_state_flags_region_euler_above_one():
    st = SymbolicState({0: Region(0, BLACK, 2), 1: Region(1, WHITE, 2)}, 4, 0, frozenset(), True, 2)
    found = {v.invariant for v in check_state(st)}
    assert "region_euler" in found
    assert any(v.region_ids == (0,) for v in check_state(st))


def test_check_state_flags_equation():
    st = SymbolicState({0: Region(0, BLACK, 1), 1: Region(1, WHITE, 0)}, 2, 0, frozenset(), True, 2)
    assert [v.invariant for v in check_state(st)] == ["equation"]


def test_check_state_flags_colors_and_certificates():
    st = SymbolicState(
        {0: Region(0, BLACK, 1), 1: Region(1, BLACK, 1)}, 4, 0, frozenset({(0, 1), (1, 5)}), True, 2
    )
    found = [v.invariant for v in check_state(st)]
    assert "colors" in found and found.count("certificate") == 2


def test_swap_colors():
    st = swap_colors(ring(base_embedding(2), 0))
    assert derive_data(st) == derive_data(ring(base_embedding(2), 0)).swapped()


def test_transformers_do_not_mutate():
    st = base_n2()
    snapshot = st.key()
    for f in (
        lambda s: bubble(s, 0),
        lambda s: ring(s, 1),
        lambda s: g_operation(s, (0, 1), 2),
        lambda s: connect_boy(s, (0, 1)),
        lambda s: connect_n2(s, (0, 1)),
        swap_colors,
    ):
        f(st)
        assert st.key() == snapshot


# -- properties over random reachable states -----------------------------------

seeds = st.integers(0, 2**32)


def _from_scratch(st):
    """Recount spectra by hand from the region list."""
    black, white = {}, {}
    for r in st.regions.values():
        side = black if r.color is BLACK else white
        side[1 - r.euler] = side.get(1 - r.euler, 0) + 1
    return RegionSpectrum(black), RegionSpectrum(white)


@settings(max_examples=200)
@given(seeds, st.data())
def test_transformer_deltas(seed, data):
    st0 = random_state(seed)
    a0, b0 = _from_scratch(st0)
    rid = data.draw(st.sampled_from(sorted(st0.regions)))
    pair = data.draw(st.sampled_from(sorted(st0.certified_pairs)))
    g = data.draw(st.integers(0, 4))
    r = st0.regions[rid]
    side = lambda c: 0 if c is BLACK else 1

    def shifted(spectra, color, k_from, k_to):
        spectra = list(spectra)
        i = side(color)
        if k_from is not None:
            spectra[i] = spectra[i].adjust(k_from, -1)
        if k_to is not None:
            spectra[i] = spectra[i].adjust(k_to, 1)
        return spectra

    out = bubble(st0, rid)
    exp = shifted(shifted((a0, b0), r.color, 1 - r.euler, 2 - r.euler), r.color, None, 0)
    assert _from_scratch(out) == tuple(exp)
    assert out.color_sum(BLACK) == st0.color_sum(BLACK)
    assert out.color_sum(WHITE) == st0.color_sum(WHITE)

    out = ring(st0, rid)
    assert _from_scratch(out) == tuple(shifted((a0, b0), r.color.opposite, None, 1))

    out = g_operation(st0, pair, g)
    exp = (a0, b0)
    for x in pair:
        rx = st0.regions[x]
        exp = shifted(exp, rx.color, 1 - rx.euler, 1 - rx.euler + g)
    assert _from_scratch(out) == tuple(exp)
    assert out.surface_euler == st0.surface_euler - 2 * g

    out = connect_boy(st0, pair)
    assert _from_scratch(out) == (a0, b0)
    assert (out.surface_euler, out.triple_points) == (st0.surface_euler - 1, st0.triple_points + 1)

    out = connect_n2(st0, pair)
    assert _from_scratch(out) == (a0.adjust(0, 1), b0.adjust(0, 1))

    for out in (
        bubble(st0, rid),
        ring(st0, rid),
        g_operation(st0, pair, g),
        connect_boy(st0, pair),
        connect_n2(st0, pair),
        swap_colors(st0),
    ):
        assert check_state(out) == []
        assert derive_data(out) == D(*_from_scratch(out), out.surface_euler, out.triple_points)


@given(seeds)
def test_ids_are_never_reused(seed):
    st = random_state(seed)
    assert max(st.regions, default=-1) < st.next_id
    out = ring(bubble(st, min(st.regions)), min(st.regions))
    assert set(out.regions) - set(st.regions) == {st.next_id, st.next_id + 1}
    for x, y in out.certified_pairs:
        assert x in out.regions and y in out.regions


@given(seeds, st.integers(1, 6))
def test_repeated_boy_sums(seed, k):
    st0 = random_state(seed)
    st = st0
    pair = min(st0.certified_pairs)
    for _ in range(k):
        st = connect_boy(st, pair)
    assert st.triple_points == st0.triple_points + k
    assert st.surface_euler == st0.surface_euler - k
