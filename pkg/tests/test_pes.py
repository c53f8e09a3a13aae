import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpsneg import (
    CapacityError,
    CountOverflowError,
    DomainError,
    Frame,
    enumerate_pes,
    f_of,
    jaccard,
    perm_count,
    pes_cardinality,
    rank_in_event,
)


def brute_force_perms(n, r):
    return [p for p in itertools.product(range(n), repeat=r) if len(set(p)) == r]


@pytest.mark.parametrize("n, r, expected", [(2, 0, 1), (2, 2, 2), (3, 2, 6)])
def test_perm_count(n, r, expected):
    assert perm_count(n, r) == expected
    assert perm_count(n, r) == len(brute_force_perms(n, r))


def test_perm_count_errors():
    with pytest.raises(DomainError):
        perm_count(2, 3)
    with pytest.raises(CountOverflowError):
        perm_count(30, 30)


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 5), (3, 16)])
def test_pes_cardinality(n, expected):
    assert pes_cardinality(n) == expected


def test_pes_cardinality_overflow():
    assert pes_cardinality(20) > 0
    with pytest.raises(CountOverflowError):
        pes_cardinality(21)


@pytest.mark.parametrize("i, expected", [(0, 1), (1, 2), (2, 5)])
def test_f_of(i, expected):
    assert f_of(i) == expected


@given(st.integers(min_value=1, max_value=15))
def test_full_and_near_full_perms_agree(n):
    assert perm_count(n, n) == perm_count(n, n - 1)


def test_enumerate_n2_order():
    index = enumerate_pes(Frame(["g1", "g2"]))
    assert index.events == ((), (0,), (1,), (0, 1), (1, 0))


def test_enumerate_n1():
    assert enumerate_pes(Frame(["g1"])).events == ((), (0,))


def test_enumerate_n3():
    index = enumerate_pes(Frame(["g1", "g2", "g3"]))
    assert index.delta == 16 == pes_cardinality(3)
    assert index.event_of(1) == (0,)
    assert index.event_of(15) == (2, 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_roundtrip_and_order(n):
    index = enumerate_pes(Frame([str(k) for k in range(n)]))
    assert len(set(index.events)) == index.delta == pes_cardinality(n)
    for k in range(index.delta):
        assert index.ordinal_of(index.event_of(k)) == k
    keys = [(len(e), e) for e in index.events]
    assert keys == sorted(keys)


def test_enumeration_cap():
    frame = Frame([str(k) for k in range(8)])
    with pytest.raises(CapacityError, match="109601"):
        enumerate_pes(frame)
    with pytest.raises(CapacityError):
        enumerate_pes(Frame(["a", "b", "c"]), max_frame_size=2)


def test_frame_validation():
    with pytest.raises(DomainError):
        Frame([])
    with pytest.raises(DomainError):
        Frame(["a", "a"])
    frame = Frame(["a", "b", "c"])
    assert frame.event(["c", "a"]) == (2, 0)
    assert frame.format_event((2, 0)) == "(c a)"
    with pytest.raises(DomainError):
        frame.check_event((0, 0))
    with pytest.raises(DomainError):
        frame.check_event((3,))


def test_rank_in_event():
    # g1=0, g2=1, g3=2
    assert rank_in_event((1, 2, 0), 0) == 3
    assert rank_in_event((0, 1), 0) == 1
    assert rank_in_event((0,), 0) == 1
    with pytest.raises(DomainError):
        rank_in_event((1,), 0)


def test_jaccard():
    assert jaccard((0,), (0, 1)) == 0.5
    assert jaccard((0, 1), (1, 0)) == 1.0
    assert jaccard((0,), (1,)) == 0.0
    with pytest.raises(DomainError):
        jaccard((), ())


events3 = st.permutations(range(3)).flatmap(
    lambda p: st.integers(min_value=0, max_value=3).map(lambda r: tuple(p[:r]))
)


@given(events3, events3)
def test_jaccard_symmetric(a, b):
    if not a and not b:
        return
    assert jaccard(a, b) == jaccard(b, a)
    assert (jaccard(a, b) == 1.0) == (set(a) == set(b))
