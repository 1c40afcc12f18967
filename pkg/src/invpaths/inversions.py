"""Inversion sequences, word patterns, and the rank statistic.

An inversion sequence of length n is an integer sequence (e_1, ..., e_n)
with 0 <= e_j <= j-1 for every j; in particular e_1 = 0.  Entries are
stored 0-based in a tuple, but every documented position is 1-based, and
``InversionSequence.at(j)`` reads position j in the 1-based convention.

A pattern is a reduced word: the reduction of a word replaces its i-th
smallest value by i-1, so e.g. (5, 1, 7) reduces to (1, 0, 2).  A sequence
contains a pattern when some subsequence reduces to it, i.e. is
order-isomorphic to it (ties included).

Statistics:

* ``max(e)`` -- the largest entry;
* ``prmx(e)`` -- the position p of the first descent
  e_1 <= e_2 <= ... <= e_p > e_{p+1}, read with a virtual sentinel
  e_{n+1} = -1 (the sentinel is never stored);
* ``rank(e) = prmx(e) - max(e) - 1`` -- meaningful for 102-avoiding
  sequences, where the entry at position prmx is always a maximum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import EmptyWord, GuardExceeded, RankUndefined

#: Default ceiling for exhaustive enumeration of inversion sequences.
ISEQ_GUARD = 11


def _rel(x: int, y: int) -> int:
    return (x > y) - (x < y)


@dataclass(frozen=True)
class Pattern:
    """A reduced word over {0, ..., k-1}, used as a containment pattern."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.word) == 0:
            raise EmptyWord("a pattern must contain at least one letter")
        if any(v < 0 for v in self.word):
            raise ValueError("pattern letters must be nonnegative")
        if self.word != _reduce_tuple(self.word):
            raise ValueError(f"pattern {self.word} is not reduced")

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if all(v <= 9 for v in self.word):
            return "".join(str(v) for v in self.word)
        return str(list(self.word))

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse a digit string such as ``"102"``."""
        return cls(tuple(int(ch) for ch in text))


PatternLike = Union[Pattern, str, Sequence[int]]


def as_pattern(p: PatternLike) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        return Pattern.parse(p)
    return Pattern(tuple(p))


def _reduce_tuple(word: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: i for i, v in enumerate(sorted(set(word)))}
    return tuple(ranks[v] for v in word)


def reduce_word(word: Sequence[int]) -> Pattern:
    """Reduce a word to its pattern: the i-th smallest value becomes i-1.

    >>> reduce_word([2, 0, 2]).word
    (1, 0, 1)
    >>> reduce_word([5, 1, 7]).word
    (1, 0, 2)
    """
    if len(word) == 0:
        raise EmptyWord("cannot reduce an empty word")
    if any(v < 0 for v in word):
        raise ValueError("word entries must be nonnegative")
    return Pattern(_reduce_tuple(word))


@dataclass(frozen=True)
class InversionSequence:
    """An inversion sequence; ``entries`` is the 0-based storage tuple."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) == 0:
            raise ValueError("an inversion sequence has length at least 1")
        for j, v in enumerate(self.entries, start=1):
            if not 0 <= v <= j - 1:
                raise ValueError(f"entry e_{j} = {v} outside [0, {j - 1}]")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.entries) + ")"

    def at(self, j: int) -> int:
        """Entry e_j in 1-based position convention."""
        if not 1 <= j <= len(self.entries):
            raise IndexError(f"position {j} outside 1..{len(self.entries)}")
        return self.entries[j - 1]

    def to_list(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class SeqStats:
    """Derived statistics of an inversion sequence.

    ``max_at_prmx`` records whether the entry at position prmx equals the
    maximum; it always does for 102-avoiding sequences, and the arithmetic
    value of ``rank`` is only meaningful in that case.
    """

    max_val: int
    prmx: int
    rank: int
    max_at_prmx: bool


def _prmx(entries: Sequence[int]) -> int:
    # First descent under the virtual sentinel e_{n+1} = -1.
    p = 1
    n = len(entries)
    while p < n and entries[p - 1] <= entries[p]:
        p += 1
    return p


def stats(e: InversionSequence, strict: bool = False) -> SeqStats:
    """Compute (max, prmx, rank) for a sequence.

    With ``strict=True`` the call refuses sequences containing 102, where
    rank loses its meaning; by default the arithmetic values are returned
    together with the ``max_at_prmx`` flag.

    >>> stats(InversionSequence((0,))).rank
    0
    >>> stats(InversionSequence((0, 0, 0))).prmx
    3
    """
    if strict and contains_pattern(e, Pattern((1, 0, 2))):
        raise RankUndefined("rank is not defined on sequences containing 102")
    m = max(e.entries)
    p = _prmx(e.entries)
    return SeqStats(
        max_val=m,
        prmx=p,
        rank=p - m - 1,
        max_at_prmx=e.entries[p - 1] == m,
    )


def rank(e: InversionSequence) -> int:
    return stats(e).rank


def _matches(sub: Sequence[int], word: Sequence[int]) -> bool:
    k = len(word)
    for a in range(k):
        for b in range(a + 1, k):
            if _rel(sub[a], sub[b]) != _rel(word[a], word[b]):
                return False
    return True


def _occurrence_ending_at_last(seq: Sequence[int], word: Sequence[int]) -> bool:
    """True when some occurrence of ``word`` uses the last entry of ``seq``."""
    k = len(word)
    n = len(seq)
    if k > n:
        return False
    if k == 1:
        return True
    last = seq[-1]
    if k == 2:
        r = _rel(word[0], word[1])
        return any(_rel(seq[i], last) == r for i in range(n - 1))
    if k == 3:
        r01 = _rel(word[0], word[1])
        r02 = _rel(word[0], word[2])
        r12 = _rel(word[1], word[2])
        for i in range(n - 2):
            si = seq[i]
            if _rel(si, last) != r02:
                continue
            for j in range(i + 1, n - 1):
                if _rel(si, seq[j]) == r01 and _rel(seq[j], last) == r12:
                    return True
        return False
    head = word[:-1]
    for idxs in itertools.combinations(range(n - 1), k - 1):
        sub = tuple(seq[i] for i in idxs) + (last,)
        if _matches(sub, word):
            return True
    return False


def contains_pattern(e: Union[InversionSequence, Sequence[int]], p: PatternLike) -> bool:
    """Whether some subsequence of ``e`` reduces to the pattern ``p``.

    >>> contains_pattern(InversionSequence((0, 1, 0, 2)), "102")
    True
    >>> contains_pattern(InversionSequence((0, 0, 1)), "011")
    False
    """
    word = as_pattern(p).word
    seq = e.entries if isinstance(e, InversionSequence) else tuple(e)
    return any(
        _occurrence_ending_at_last(seq[: i + 1], word) for i in range(len(seq))
    )


def avoids(e: Union[InversionSequence, Sequence[int]], *patterns: PatternLike) -> bool:
    return not any(contains_pattern(e, p) for p in patterns)


def enumerate_is(
    n: int, avoid: Iterable[PatternLike] = (), guard: int = ISEQ_GUARD
) -> list[InversionSequence]:
    """All inversion sequences of length n avoiding every given pattern.

    The result is in lexicographic order.  Candidate prefixes are pruned as
    soon as they contain a forbidden pattern, so only occurrences ending at
    the newly appended entry are ever tested.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > guard:
        raise GuardExceeded(f"enumerate_is: n = {n} exceeds guard {guard}")
    words = tuple(sorted(set(as_pattern(p).word for p in avoid)))
    return [InversionSequence(t) for t in _enumerate_raw(n, words)]


@lru_cache(maxsize=None)
def _enumerate_raw(n: int, words: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend() -> None:
        j = len(prefix)
        if j == n:
            out.append(tuple(prefix))
            return
        for v in range(j + 1):
            prefix.append(v)
            if not any(_occurrence_ending_at_last(prefix, w) for w in words):
                extend()
            prefix.pop()

    extend()
    return tuple(out)
