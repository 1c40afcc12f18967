"""UVD paths, 2-Schroeder paths, Dyck paths, and the step relabelling map.

A UVD path of semilength n runs from (0,0) to (2n,0) over the steps
u = (1,1), d = (1,-1), v = (0,-2), stays weakly above the x-axis, contains
no factor uv or vu, and ends with d.  Its semilength equals #d + #v; with
r vertical steps the word has n+r up steps and n-r down steps.

A 2-Schroeder path of semilength n runs from (0,0) to (n,2n) over
N = (0,1), E = (1,0), H = (1,1), stays weakly above y = 2x, has no peak NE
or valley EN, and ends with H.  The letter substitution N->u, E->v, H->d
(the linear map (x,y) |-> (y, y-2x)) carries these bijectively onto UVD
paths of the same semilength.

Statistics: a return of a UVD path is a d step ending on the x-axis; vox
counts the valleys du whose shared vertex lies on the x-axis (vox of the
empty word is -1 by convention); the number of returns is vox + 1.  For a
Schroeder path a return is an H step landing on y = 2x, and block counts
returns, so block(P) = vox(MP) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadEndpoint,
    BadTerminal,
    BelowAxis,
    DomainError,
    ForbiddenFactor,
    GuardExceeded,
)
from .formulas import binom

#: Default ceiling for exhaustive path enumeration.
PATH_GUARD = 9

_UVD_STEP = {"u": (1, 1), "d": (1, -1), "v": (0, -2)}
_SCHROEDER_STEP = {"N": (0, 1), "E": (1, 0), "H": (1, 1)}
_M_FORWARD = str.maketrans("NEH", "uvd")
_M_BACKWARD = str.maketrans("uvd", "NEH")


def heights(word: str) -> list[int]:
    """Heights after each step of a word over {u, d, v}; starts implicit 0."""
    out = []
    h = 0
    for ch in word:
        h += 2 * (ch == "u") - 1 - (ch == "v")
        out.append(h)
    return out


def _validate_uvd_word(word: str) -> None:
    if any(ch not in "udv" for ch in word):
        raise ValueError(f"UVD word may only contain u, d, v: {word!r}")
    if not word or word[-1] != "d":
        raise BadTerminal(f"a UVD path must end with a d step: {word!r}")
    h = 0
    prev = ""
    for i, ch in enumerate(word):
        if (prev, ch) in (("u", "v"), ("v", "u")):
            raise ForbiddenFactor(f"factor {prev}{ch} at steps {i}..{i + 1}")
        h += 2 * (ch == "u") - 1 - (ch == "v")
        if h < 0:
            raise BelowAxis(f"height {h} after step {i + 1} of {word!r}")
        prev = ch
    if h != 0:
        raise BadEndpoint(f"path ends at height {h}, not on the x-axis")


@dataclass(frozen=True)
class UvdPath:
    word: str

    def __post_init__(self) -> None:
        _validate_uvd_word(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def semilength(self) -> int:
        return self.word.count("d") + self.word.count("v")

    @property
    def vertical_count(self) -> int:
        return self.word.count("v")

    def points(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        x = y = 0
        for ch in self.word:
            dx, dy = _UVD_STEP[ch]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts


def validate_uvd(word: str) -> UvdPath:
    return UvdPath(word)


@dataclass(frozen=True)
class PathStats:
    """vox and number of returns; block = vox + 1 on nonempty paths."""

    vox: int
    block: int


def vox_word(word: str) -> int:
    """Valleys du sitting on the x-axis; -1 for the empty word."""
    if not word:
        return -1
    count = 0
    for p, h in zip(range(len(word) - 1), heights(word)):
        if h == 0 and word[p] == "d" and word[p + 1] == "u":
            count += 1
    return count


def block_word(word: str) -> int:
    """Number of returns: d steps ending on the x-axis."""
    return sum(1 for ch, h in zip(word, heights(word)) if ch == "d" and h == 0)


def return_positions(word: str) -> tuple[int, ...]:
    """1-based step indices of the returns, left to right."""
    return tuple(
        i + 1 for i, (ch, h) in enumerate(zip(word, heights(word))) if ch == "d" and h == 0
    )


def uvd_stats(path: UvdPath) -> PathStats:
    return PathStats(vox=vox_word(path.word), block=block_word(path.word))


def _validate_schroeder_word(word: str) -> None:
    if any(ch not in "NEH" for ch in word):
        raise ValueError(f"Schroeder word may only contain N, E, H: {word!r}")
    if not word or word[-1] != "H":
        raise BadTerminal(f"a 2-Schroeder path must end with H: {word!r}")
    x = y = 0
    prev = ""
    for i, ch in enumerate(word):
        if (prev, ch) in (("N", "E"), ("E", "N")):
            kind = "peak NE" if prev == "N" else "valley EN"
            raise ForbiddenFactor(f"{kind} at steps {i}..{i + 1}")
        dx, dy = _SCHROEDER_STEP[ch]
        x, y = x + dx, y + dy
        if y < 2 * x:
            raise BelowAxis(f"point ({x},{y}) below y = 2x after step {i + 1}")
        prev = ch
    if y != 2 * x:
        raise BadEndpoint(f"path ends at ({x},{y}), not on y = 2x")


@dataclass(frozen=True)
class SchroederPath:
    word: str

    def __post_init__(self) -> None:
        _validate_schroeder_word(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def semilength(self) -> int:
        return self.word.count("E") + self.word.count("H")

    def points(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        x = y = 0
        for ch in self.word:
            dx, dy = _SCHROEDER_STEP[ch]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts


def validate_schroeder(word: str) -> SchroederPath:
    return SchroederPath(word)


def schroeder_block(path: SchroederPath) -> int:
    """Returns of a Schroeder path: H steps landing on y = 2x."""
    x = y = 0
    count = 0
    for ch in path.word:
        dx, dy = _SCHROEDER_STEP[ch]
        x, y = x + dx, y + dy
        if ch == "H" and y == 2 * x:
            count += 1
    return count


def schroeder_to_uvd(path: SchroederPath) -> UvdPath:
    """Letterwise relabelling N->u, E->v, H->d."""
    return UvdPath(path.word.translate(_M_FORWARD))


def uvd_to_schroeder(path: UvdPath) -> SchroederPath:
    return SchroederPath(path.word.translate(_M_BACKWARD))


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self) -> None:
        if any(ch not in "ud" for ch in self.word):
            raise ValueError(f"Dyck word may only contain u, d: {self.word!r}")
        _validate_uvd_word(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def semilength(self) -> int:
        return self.word.count("d")


def final_descent_length(word: str) -> int:
    """Length of the maximal run of d steps ending the word."""
    return len(word) - len(word.rstrip("d"))


def _feasible(h: int, remaining: int) -> bool:
    # A pending height h is closable with `remaining` semilength units iff
    # h <= 2*remaining - 1 (the last unit must be the final d step).
    return h == 0 if remaining == 0 else h <= 2 * remaining - 1


@lru_cache(maxsize=None)
def _uvd_words(n: int) -> tuple[str, ...]:
    out: list[str] = []
    word: list[str] = []

    def extend(h: int, used: int, prev: str) -> None:
        if used == n and h == 0:
            out.append("".join(word))
            return
        # letters tried in the order u < d < v
        if prev != "v" and _feasible(h + 1, n - used):
            word.append("u")
            extend(h + 1, used, "u")
            word.pop()
        if used < n and h >= 1 and _feasible(h - 1, n - used - 1):
            word.append("d")
            extend(h - 1, used + 1, "d")
            word.pop()
        if prev not in ("u", "") and used < n and h >= 2 and _feasible(h - 2, n - used - 1):
            word.append("v")
            extend(h - 2, used + 1, "v")
            word.pop()

    extend(0, 0, "")
    return tuple(out)


def enumerate_uvd(n: int, guard: int = PATH_GUARD) -> list[UvdPath]:
    """All UVD paths of semilength n, lexicographic in the order u < d < v."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > guard:
        raise GuardExceeded(f"enumerate_uvd: n = {n} exceeds guard {guard}")
    return [UvdPath(w) for w in _uvd_words(n)]


@lru_cache(maxsize=None)
def _schroeder_words(n: int) -> tuple[str, ...]:
    out: list[str] = []
    word: list[str] = []

    def extend(h: int, used: int, prev: str) -> None:
        # h = y - 2x mirrors the UVD height; used = x counts E and H steps.
        if used == n and h == 0:
            out.append("".join(word))
            return
        # letters tried in the order N < E < H
        if prev != "E" and _feasible(h + 1, n - used):
            word.append("N")
            extend(h + 1, used, "N")
            word.pop()
        if prev != "N" and used < n and h >= 2 and _feasible(h - 2, n - used - 1):
            word.append("E")
            extend(h - 2, used + 1, "E")
            word.pop()
        if used < n and h >= 1 and _feasible(h - 1, n - used - 1):
            word.append("H")
            extend(h - 1, used + 1, "H")
            word.pop()

    extend(0, 0, "")
    return tuple(out)


def enumerate_schroeder(n: int, guard: int = PATH_GUARD) -> list[SchroederPath]:
    """All 2-Schroeder paths of semilength n, lexicographic in N < E < H."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > guard:
        raise GuardExceeded(f"enumerate_schroeder: n = {n} exceeds guard {guard}")
    return [SchroederPath(w) for w in _schroeder_words(n)]


@lru_cache(maxsize=None)
def _dyck_words(n: int) -> tuple[str, ...]:
    out: list[str] = []
    word: list[str] = []

    def extend(h: int, used: int) -> None:
        if used == n and h == 0:
            out.append("".join(word))
            return
        if h + 1 <= n - used:  # enough d steps must remain
            word.append("u")
            extend(h + 1, used)
            word.pop()
        if used < n and h >= 1:
            word.append("d")
            extend(h - 1, used + 1)
            word.pop()

    extend(0, 0)
    return tuple(out)


def enumerate_dyck(n: int, guard: int = PATH_GUARD) -> list[DyckPath]:
    """All Dyck paths of semilength n, lexicographic in the order u < d."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > guard:
        raise GuardExceeded(f"enumerate_dyck: n = {n} exceeds guard {guard}")
    return [DyckPath(w) for w in _dyck_words(n)]


def count_dyck_final_descent(n: int, k: int) -> int:
    """Dyck paths of semilength n whose final maximal descent has length k.

    Equals the number of Dyck paths of semilength n with exactly k returns,
    and evaluates to k/n * C(2n-k-1, n-1) exactly.
    """
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"count_dyck_final_descent needs 1 <= k <= n, got {(n, k)}")
    num = k * binom(2 * n - k - 1, n - 1)
    assert num % n == 0
    return num // n
