"""Constructive bijections between the four path/sequence families.

* ``phi``: labeled F-paths of semilength n -> 102-avoiding inversion
  sequences of length n+1, carrying height to rank.  Each step of the
  path inserts copies of a new running maximum m into the sequence built
  so far; a rise step (a; 1) inserts one m right after the first-maximum
  position, and a down step (a; b_1, ..., b_k) inserts k copies of m after
  positions determined by the suffix sums of its label parts.

* ``psi``: labeled F-paths of semilength n -> UVD paths of semilength
  n+1, carrying height to vox.  A rise step (a; 1) splits the path at a
  return and wraps the tail in u...d; a down step splits at k+1 returns,
  re-wraps the middle segments in pairs of u steps, and appends k vertical
  steps in front of the relocated final descent.

* the letter substitution between 2-Schroeder and UVD paths (see
  :mod:`invpaths.paths`), giving the composed bijection
  ``schroeder_to_is = phi . psi^{-1} . M``.

* ``is_to_tiling``: {102,012}-avoiding sequences of length n -> tilings
  of a 1 x (2n-2) board by squares S and dominoes D.

The inverses reconstruct the removed step from the sequence or path alone.
``psi_inv`` resolves the one genuinely searched choice (how many of the
trailing vertical steps were appended by the last down step) by rebuilding
the path forward from each structurally valid split and keeping the unique
split that reproduces the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadBoardLength, PatternViolation
from .fpaths import LabeledFPath, LabeledStep
from .inversions import InversionSequence, _prmx, avoids
from .paths import (
    SchroederPath,
    UvdPath,
    block_word,
    heights,
    return_positions,
    schroeder_to_uvd,
    uvd_to_schroeder,
    vox_word,
)

# --------------------------------------------------------------------------
# phi: labeled F-paths -> 102-avoiding inversion sequences


def _insert_after(entries: list[int], positions: list[int], value: int) -> list[int]:
    """Insert copies of value after the given 1-based positions (all >= 1)."""
    assert all(p >= 1 for p in positions)
    out: list[int] = []
    for idx, v in enumerate(entries, start=1):
        out.append(v)
        out.extend(value for p in positions if p == idx)
    return out


def _phi_insertion_positions(p_hat: int, step: LabeledStep) -> list[int]:
    if step.is_rise:
        return [p_hat]
    parts = step.parts
    k = len(parts)
    js = [0] * k
    suffix = 0
    for i in range(k - 1, 0, -1):
        suffix += parts[i]
        js[i] = p_hat + suffix
    js[0] = p_hat + suffix + parts[0] - 1
    assert js[0] < js[1] if k > 1 else True
    return js


def phi(q: LabeledFPath) -> InversionSequence:
    """Map a labeled F-path of semilength n to a sequence in IS_{n+1}(102)."""
    entries = [0]
    for step in q.steps:
        p_hat = _prmx(entries)
        m = max(entries) + step.a
        entries = _insert_after(entries, _phi_insertion_positions(p_hat, step), m)
    return InversionSequence(tuple(entries))


def phi_inv(e: InversionSequence) -> LabeledFPath:
    """Inverse of :func:`phi`; the input must avoid 102."""
    if not avoids(e, "102"):
        raise PatternViolation(f"{e} contains 102; phi_inv is undefined")
    entries = list(e.entries)
    steps_rev: list[LabeledStep] = []
    while len(entries) > 1:
        p = _prmx(entries)
        m = max(entries)
        assert p >= 2, "a sequence of length >= 2 starts with a weak ascent"
        after = entries[p] if p < len(entries) else -1  # virtual e_{n+1} = -1
        before = entries[p - 2]
        if after < before:
            # the maximum at position p was a single rise-step insertion
            hat = entries[: p - 1] + entries[p:]
            steps_rev.append(LabeledStep.rise(m - max(hat)))
        else:
            # all copies of m were inserted by one down step; remove them
            idxs = [i + 1 for i, v in enumerate(entries) if v == m]
            k = len(idxs)
            hat = [v for v in entries if v != m]
            p_hat = _prmx(hat)
            if k == 1:
                parts = (p - p_hat,)
            else:
                parts = (
                    (idxs[0] - idxs[1] + 2,)
                    + tuple(idxs[j] - idxs[j + 1] + 1 for j in range(1, k - 1))
                    + (idxs[k - 1] - k - p_hat,)
                )
            steps_rev.append(LabeledStep(m - max(hat), parts))
        entries = hat
    return LabeledFPath(tuple(reversed(steps_rev)))


# --------------------------------------------------------------------------
# psi: labeled F-paths -> UVD paths


def _return_step(word: str, rets: tuple[int, ...], number: int) -> int:
    """1-based step index of the given return; return number 0 is index 0."""
    if number == 0:
        return 0
    if not 1 <= number <= len(rets):
        raise ValueError(f"return number {number} outside 0..{len(rets)}")
    return rets[number - 1]


def _psi_attach_rise(word: str, h_hat: int, a: int) -> str:
    rets = return_positions(word)
    p = _return_step(word, rets, h_hat + 1 - a)
    return word[:p] + "u" + word[p:] + "d"


def _psi_attach_down(word: str, h_hat: int, a: int, parts: tuple[int, ...]) -> str:
    k = len(parts)
    rets = return_positions(word)
    numbers = [0] * (k + 1)
    numbers[k] = h_hat + 1 - a
    suffix = 0
    for i in range(k - 1, -1, -1):
        suffix += parts[i]
        numbers[i] = h_hat + 1 + suffix - a
    js = [_return_step(word, rets, r) for r in numbers]
    if js[0] < 2:
        raise ValueError("no room for the relocated final descent")
    p = js[0] - 1
    while word[p - 1] == "v":
        p -= 1
    alpha, beta = word[:p], word[p : js[0]]
    sigmas = [word[js[i - 1] : js[i]] for i in range(1, k + 1)]
    tau = word[js[k] :]
    return alpha + "".join("u" + s + "u" for s in sigmas) + tau + "v" * k + beta


def psi(q: LabeledFPath) -> UvdPath:
    """Map a labeled F-path of semilength n to a path in UVD_{n+1}."""
    word = "ud"
    for step in q.steps:
        h_hat = vox_word(word)
        if step.is_rise:
            word = _psi_attach_rise(word, h_hat, step.a)
        else:
            word = _psi_attach_down(word, h_hat, step.a, step.parts)
    return UvdPath(word)


def _last_below(levels: list[int], cur: int) -> int:
    """Largest index < cur whose level is below levels[cur]."""
    floor = levels[cur]
    i = cur - 1
    while levels[i] >= floor:
        i -= 1
    return i


def _psi_peel_rise(word: str) -> tuple[str, LabeledStep]:
    levels = [0] + heights(word)
    z = max(i for i in range(len(word) - 1) if levels[i] == 0)
    assert word[z] == "u"
    alpha, beta = word[:z], word[z + 1 : len(word) - 1]
    return alpha + beta, LabeledStep.rise(block_word(beta))


def _is_valid_uvd_word(word: str) -> bool:
    from .paths import _validate_uvd_word

    try:
        _validate_uvd_word(word)
    except Exception:
        return False
    return True


def _psi_peel_down(word: str) -> tuple[str, LabeledStep]:
    levels = [0] + heights(word)
    run = 0
    while word[len(word) - 2 - run] == "v":
        run += 1
    q = len(word) - 1 - run  # steps before the trailing vertical run
    assert levels[q] == 2 * run + 1
    z = _last_below(levels, q)
    assert word[z] == "u"
    tau = word[z + 1 : q]
    assert tau, "the segment after the last used return is never empty"

    matches: list[tuple[str, LabeledStep]] = []
    sigmas_rev: list[str] = []
    cur = z
    while levels[cur] >= 2:
        z = _last_below(levels, cur)
        assert word[z] == "u"
        sigmas_rev.append(word[z + 1 : cur])
        cur = z
        k = len(sigmas_rev)
        j = run - k
        if j >= 0 and cur >= 1:
            sigmas = list(reversed(sigmas_rev))
            s_hat = word[:cur] + "v" * j + "d" + "".join(sigmas) + tau
            step = LabeledStep(block_word(tau), tuple(-block_word(s) for s in sigmas))
            if _is_valid_uvd_word(s_hat):
                try:
                    rebuilt = _psi_attach_down(
                        s_hat, vox_word(s_hat), step.a, step.parts
                    )
                except ValueError:
                    rebuilt = None
                if rebuilt == word:
                    matches.append((s_hat, step))
        if k == run or cur < 1 or word[cur - 1] != "u":
            break
        cur -= 1  # consume the second u of the double pair before the next segment

    assert len(matches) == 1, f"decomposition of {word!r} is not unique"
    return matches[0]


def psi_inv(path: UvdPath) -> LabeledFPath:
    """Inverse of :func:`psi`."""
    word = path.word
    steps_rev: list[LabeledStep] = []
    while word != "ud":
        if word[-2] != "v":
            word, step = _psi_peel_rise(word)
        else:
            word, step = _psi_peel_down(word)
        steps_rev.append(step)
    return LabeledFPath(tuple(reversed(steps_rev)))


# --------------------------------------------------------------------------
# composed map between 2-Schroeder paths and inversion sequences


def schroeder_to_is(path: SchroederPath) -> InversionSequence:
    """The composite bijection SP_n -> IS_n(102)."""
    return phi(psi_inv(schroeder_to_uvd(path)))


def is_to_schroeder(e: InversionSequence) -> SchroederPath:
    return uvd_to_schroeder(psi(phi_inv(e)))


# --------------------------------------------------------------------------
# tiling bijection for {102, 012}-avoiding sequences


@dataclass(frozen=True)
class Tiling:
    """A word over {S, D}: unit squares and dominoes tiling a 1 x L board."""

    word: str

    def __post_init__(self) -> None:
        if any(ch not in "SD" for ch in self.word):
            raise ValueError(f"tiling may only contain S and D: {self.word!r}")

    @property
    def board_length(self) -> int:
        return self.word.count("S") + 2 * self.word.count("D")

    def __str__(self) -> str:
        return self.word


def is_to_tiling(e: InversionSequence) -> Tiling:
    """Map a {102,012}-avoiding sequence of length n to a 2n-2 board tiling.

    The all-zero sequence maps to the all-domino tiling.  Otherwise the
    positions after max(e) are encoded tile-block by tile-block: position
    of a nonzero entry becomes S D^b S where b is the drop to the next
    nonzero entry (or to 1 at the last), any other position becomes D.
    """
    if not avoids(e, "102", "012"):
        raise PatternViolation(f"{e} must avoid 102 and 012")
    n = len(e)
    nonzero = [(i + 1, v) for i, v in enumerate(e.entries) if v > 0]
    if not nonzero:
        return Tiling("D" * (n - 1))
    values = [v for _, v in nonzero]
    m = values[0]
    assert m == max(values) and all(x >= y for x, y in zip(values, values[1:]))
    drops = [values[j] - values[j + 1] for j in range(len(values) - 1)]
    drops.append(values[-1] - 1)
    block_of = {pos: d for (pos, _), d in zip(nonzero, drops)}
    tiles = []
    for pos in range(m + 1, n + 1):
        if pos in block_of:
            tiles.append("S" + "D" * block_of[pos] + "S")
        else:
            tiles.append("D")
    return Tiling("".join(tiles))


def tiling_to_is(t: Tiling | str, n: int | None = None) -> InversionSequence:
    """Inverse of :func:`is_to_tiling`; board length must equal 2n-2."""
    word = t.word if isinstance(t, Tiling) else Tiling(str(t)).word
    cells = sum(1 if ch == "S" else 2 for ch in word)
    if cells % 2 != 0:
        raise BadBoardLength(f"board length {cells} is odd")
    derived = cells // 2 + 1
    if n is None:
        n = derived
    elif n != derived:
        raise BadBoardLength(f"board length {cells} != 2*{n}-2")
    if "S" not in word:
        return InversionSequence((0,) * n)
    blocks: list[int | None] = []  # None for a lone domino, b for S D^b S
    i = 0
    while i < len(word):
        if word[i] == "D":
            blocks.append(None)
            i += 1
            continue
        j = i + 1
        while j < len(word) and word[j] == "D":
            j += 1
        if j >= len(word) or word[j] != "S":
            raise BadBoardLength(f"unpaired square tile at cell offset {i}")
        blocks.append(j - i - 1)
        i = j + 1
    m = n - len(blocks)
    entries = [0] * n
    square_blocks = [(pos, b) for pos, b in enumerate(blocks, start=1) if b is not None]
    value = 1
    for pos, b in reversed(square_blocks):
        value += b
        entries[m + pos - 1] = value
    return InversionSequence(tuple(entries))
