import itertools

import pytest
from hypothesis import given, strategies as st

from invpaths.errors import EmptyWord, GuardExceeded, RankUndefined
from invpaths.inversions import (
    InversionSequence,
    Pattern,
    avoids,
    contains_pattern,
    enumerate_is,
    reduce_word,
    stats,
)

# the 25-entry sequence used as the running example throughout
LONG_EXAMPLE = (0, 0, 0, 0, 1, 4, 4, 4, 4, 6, 7, 7, 9, 7, 9, 7, 9, 9, 8, 7, 8, 8, 6, 6, 4)


def test_reduce_examples():
    assert reduce_word([2, 0, 2]).word == (1, 0, 1)
    assert reduce_word([0, 0, 1]).word == (0, 0, 1)
    assert reduce_word([5, 1, 7]).word == (1, 0, 2)


def test_reduce_empty_word():
    with pytest.raises(EmptyWord):
        reduce_word([])


def test_reduce_idempotent_exhaustive():
    # every word of length <= 6 over {0..5}
    for length in range(1, 7):
        for word in itertools.product(range(6), repeat=length):
            once = reduce_word(word).word
            assert reduce_word(once).word == once


@given(st.lists(st.integers(min_value=0, max_value=50), min_size=1, max_size=8))
def test_reduce_idempotent_random(word):
    once = reduce_word(word).word
    assert reduce_word(once).word == once


def test_pattern_must_be_reduced():
    with pytest.raises(ValueError):
        Pattern((2, 0, 2))
    assert Pattern.parse("102").word == (1, 0, 2)
    assert str(Pattern.parse("102")) == "102"


def test_contains_examples():
    assert contains_pattern(InversionSequence((0, 1, 0, 2)), "102")
    assert not contains_pattern(InversionSequence((0, 0, 1)), "011")
    assert contains_pattern(InversionSequence((0, 1, 1)), "011")


@given(
    st.lists(st.integers(min_value=0, max_value=6), min_size=3, max_size=7),
    st.integers(min_value=0, max_value=10),
)
def test_contains_monotone_under_append(word, extra):
    # appending entries never removes an occurrence
    base = [min(v, j) for j, v in enumerate(word)]
    seq = InversionSequence(tuple(base))
    ext = InversionSequence(tuple(base + [min(extra, len(base))]))
    for pat in ("102", "011", "210"):
        if contains_pattern(seq, pat):
            assert contains_pattern(ext, pat)


def test_invalid_entries_rejected():
    with pytest.raises(ValueError):
        InversionSequence((1,))
    with pytest.raises(ValueError):
        InversionSequence((0, 2))
    with pytest.raises(ValueError):
        InversionSequence(())


def test_stats_examples():
    s = stats(InversionSequence((0,)))
    assert (s.max_val, s.prmx, s.rank) == (0, 1, 0)
    s = stats(InversionSequence(LONG_EXAMPLE))
    assert (s.max_val, s.prmx, s.rank) == (9, 13, 3)
    s = stats(InversionSequence((0, 0, 0)))
    assert (s.max_val, s.prmx, s.rank) == (0, 3, 2)


def test_stats_strict_mode():
    bad = InversionSequence((0, 1, 0, 2))  # contains 102
    assert stats(bad).max_at_prmx is False
    with pytest.raises(RankUndefined):
        stats(bad, strict=True)
    good = InversionSequence((0, 1, 0))
    assert stats(good, strict=True).rank == 0


def test_max_at_prmx_for_avoiders():
    for n in range(1, 8):
        for e in enumerate_is(n, ["102"]):
            assert stats(e).max_at_prmx


def test_enumerate_small():
    assert [e.entries for e in enumerate_is(2)] == [(0, 0), (0, 1)]
    assert len(enumerate_is(3, ["102"])) == 6
    assert len(enumerate_is(3, ["102", "011"])) == 5
    assert all(
        e.entries != (0, 1, 1) for e in enumerate_is(3, ["102", "011"])
    )


def test_enumerate_counts():
    for n in range(1, 7):
        assert len(enumerate_is(n)) == {1: 1, 2: 2, 3: 6, 4: 24, 5: 120, 6: 720}[n]
    # 102-avoider counts, frozen from the enumeration oracle
    assert [len(enumerate_is(n, ["102"])) for n in range(1, 8)] == [
        1, 2, 6, 22, 89, 381, 1694,
    ]


def test_enumerate_is_lexicographic_and_guarded():
    seqs = [e.entries for e in enumerate_is(4, ["102"])]
    assert seqs == sorted(seqs)
    with pytest.raises(GuardExceeded):
        enumerate_is(12)
    with pytest.raises(GuardExceeded):
        enumerate_is(9, guard=8)


def test_rank_partition_is_total():
    for n in range(1, 7):
        pool = enumerate_is(n, ["102"])
        by_rank = {}
        for e in pool:
            by_rank[stats(e).rank] = by_rank.get(stats(e).rank, 0) + 1
        assert sum(by_rank.values()) == len(pool)
        assert set(by_rank) <= set(range(n))


def test_avoids_helper():
    assert avoids(InversionSequence((0, 0, 1)), "102", "011")
    assert not avoids(InversionSequence((0, 1, 1)), "102", "011")
