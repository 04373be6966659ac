import pytest
from hypothesis import given
from hypothesis import strategies as st

from minvenn.bases import basis_B, basis_C
from minvenn.hypercube import (
    CubeCycle,
    CubePath,
    DimensionMismatch,
    FlipSequence,
    VertexSet,
    antipode,
    in_span,
    is_isometric,
    rank_gf2,
    span,
    symm_diff,
    walk,
)


def vs(elements, n):
    return VertexSet.from_elements(elements, n)


masks8 = st.integers(min_value=0, max_value=255)


def test_symm_diff_basic():
    assert symm_diff(vs([1, 3], 8), vs([3, 5], 8)) == vs([1, 5], 8)
    x = vs([2, 4, 7], 8)
    assert symm_diff(x, x) == vs([], 8)
    assert symm_diff(vs([1, 2], 4), vs([], 4)) == vs([1, 2], 4)


def test_symm_diff_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        symm_diff(vs([1], 4), vs([1], 5))


def test_vertex_set_validation():
    with pytest.raises(ValueError):
        VertexSet(1 << 4, 4)
    with pytest.raises(ValueError):
        VertexSet(0, 0)
    with pytest.raises(ValueError):
        VertexSet(0, 33)


def test_antipode():
    assert antipode(vs([], 4)) == vs([1, 2, 3, 4], 4)
    assert antipode(vs([1, 3], 4)) == vs([2, 4], 4)


@given(bits=masks8)
def test_antipode_involution(bits):
    x = VertexSet(bits, 8)
    assert antipode(antipode(x)) == x


@given(a=masks8, b=masks8, c=masks8)
def test_xor_algebra(a, b, c):
    x, y, z = VertexSet(a, 8), VertexSet(b, 8), VertexSet(c, 8)
    assert (x ^ y) ^ z == x ^ (y ^ z)
    assert x ^ y == y ^ x
    assert (x ^ y) ^ y == x


def test_span_empty_basis():
    assert span([], n=4) == {vs([], 4)}
    with pytest.raises(ValueError):
        span([])


def test_span_single():
    assert span([vs([1, 3], 4)]) == {vs([], 4), vs([1, 3], 4)}


def test_span_size_of_level_basis():
    # dimension 2^k - k - 1 for k = 3 means 16 member combinations
    assert len(span(basis_C(3).elements)) == 16


def test_span_guard():
    basis = [VertexSet(1 << i, 32) for i in range(29)]
    with pytest.raises(ValueError):
        span(basis)


@given(st.lists(st.integers(min_value=0, max_value=63), max_size=5))
def test_span_closed_under_xor(masks):
    basis = [VertexSet(m, 6) for m in masks]
    members = span(basis, n=6)
    assert VertexSet(0, 6) in members
    as_bits = {m.bits for m in members}
    for a in as_bits:
        for b in as_bits:
            assert (a ^ b) in as_bits


def test_walk_examples():
    seq = FlipSequence((1, 2, 3), 3)
    assert walk(vs([], 3), seq) == [vs([], 3), vs([1], 3), vs([1, 2], 3), vs([1, 2, 3], 3)]
    assert walk(vs([1, 3], 3), FlipSequence((1,), 3)) == [vs([1, 3], 3), vs([3], 3)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_walk_around_partition_cycles_closes(k):
    n = 1 << k
    flips = FlipSequence(tuple(range(1, n + 1)) * 2, n)
    for x in span(basis_C(k).elements, n=n):
        path = walk(x, flips)
        assert path[0] == path[-1] == x
        assert path[n] == antipode(x)


def test_is_isometric_paths():
    ok = CubePath(vs([], 4), FlipSequence((1, 2, 3), 4))
    bad = CubePath(vs([], 4), FlipSequence((1, 2, 1), 4))
    assert is_isometric(ok)
    assert not is_isometric(bad)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_is_isometric_cycles(k):
    n = 1 << k
    for x in span(basis_C(k).elements, n=n):
        cycle = CubeCycle(x, FlipSequence(tuple(range(1, n + 1)) * 2, n))
        assert is_isometric(cycle)


def test_is_isometric_cycle_pairing():
    four = CubeCycle(vs([], 4), FlipSequence((1, 2, 1, 2), 4))
    assert is_isometric(four)  # the two edges of each direction lie oppositely
    bad = CubeCycle(vs([], 4), FlipSequence((1, 2, 1, 2, 3, 3), 4))
    assert not is_isometric(bad)


def test_cycle_closure_validation():
    with pytest.raises(ValueError):
        CubeCycle(vs([], 4), FlipSequence((1, 2, 3), 4))


def test_rank_examples():
    assert rank_gf2(basis_B(3).elements) == 4
    x = vs([2, 5], 8)
    assert rank_gf2([x, x]) == 1
    assert rank_gf2(basis_C(4).elements) == 11


def test_rank_matches_span_enumeration():
    # independent oracle: the span of an r-rank family has 2^r members
    elems = basis_C(3).elements
    assert len(span(elems)) == 1 << rank_gf2(elems)


def test_in_span():
    basis = [vs([1, 3], 4), vs([3, 4], 4)]
    assert in_span(vs([1, 4], 4), basis)
    assert not in_span(vs([1, 2], 4), basis)
    assert in_span(vs([], 4), [])
