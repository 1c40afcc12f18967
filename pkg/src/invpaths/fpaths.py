"""Labeled F-paths: lattice paths above y = x with labelled steps.

The step set is F = {(a, 1): a >= 0} union {(a, b): a >= 1, b <= 0}.
A rise step (a, 1) carries the fixed label (a; 1).  A down step (a, b)
with b <= 0 carries a label (a; b_1, ..., b_k) whose parts are nonpositive
and sum to b.  The semilength of a step is its number of label parts, so a
rise step has semilength 1, and the semilength of a path is the sum over
its steps.  The height of a path is y - x at its final point; paths start
at the origin and never go below the diagonal y = x.

Step taxonomy used by the doubly-restricted path classes:

* north: a = 0, b = 1;
* up: a >= 1, b = 1;
* pure down: k = 1;
* 0-tailed down: k >= 2 and b_2 = ... = b_k = 0;
* complex down: k >= 2 with some b_i < 0 for i >= 2.

``in_class_210`` selects paths with at most one down step which, if
present, is pure or 0-tailed, together with paths having exactly one down
step which is complex and followed only by north steps.  ``in_class_110``
selects paths with no complex down step, every 0-tailed down step preceded
only by north or up steps, and no north step after any down step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import BadLabel, BelowDiagonal, GuardExceeded, StepNotInF

#: Default ceiling on the semilength for exhaustive enumeration.
LF_GUARD = 7


class StepClass(Enum):
    NORTH = "north"
    UP = "up"
    DOWN_PURE = "pure"
    DOWN_ZERO_TAILED = "0-tailed"
    DOWN_COMPLEX = "complex"


@dataclass(frozen=True)
class LabeledStep:
    a: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.parts) == 0:
            raise BadLabel("a label needs at least one part")
        if self.parts == (1,):
            if self.a < 0:
                raise StepNotInF(f"rise step ({self.a}, 1) needs a >= 0")
            return
        if any(p > 0 for p in self.parts):
            raise BadLabel(f"down-step parts must be nonpositive: {self.parts}")
        if self.a < 1:
            raise StepNotInF(f"down step ({self.a}, {sum(self.parts)}) needs a >= 1")

    @classmethod
    def rise(cls, a: int) -> "LabeledStep":
        return cls(a, (1,))

    @classmethod
    def down(cls, a: int, parts: Sequence[int]) -> "LabeledStep":
        return cls(a, tuple(parts))

    @property
    def b(self) -> int:
        return sum(self.parts)

    @property
    def semilength(self) -> int:
        return len(self.parts)

    @property
    def is_rise(self) -> bool:
        return self.parts == (1,)

    def __str__(self) -> str:
        return f"({self.a}; {','.join(str(p) for p in self.parts)})"


def classify_step(s: LabeledStep) -> StepClass:
    if s.is_rise:
        return StepClass.NORTH if s.a == 0 else StepClass.UP
    if s.semilength == 1:
        return StepClass.DOWN_PURE
    if all(p == 0 for p in s.parts[1:]):
        return StepClass.DOWN_ZERO_TAILED
    return StepClass.DOWN_COMPLEX


StepLike = Union[LabeledStep, Sequence, Mapping]


def _as_step(s: StepLike) -> LabeledStep:
    if isinstance(s, LabeledStep):
        return s
    if isinstance(s, Mapping):
        return LabeledStep(int(s["a"]), tuple(int(p) for p in s["parts"]))
    a, parts = s
    return LabeledStep(int(a), tuple(int(p) for p in parts))


@dataclass(frozen=True)
class LabeledFPath:
    steps: tuple[LabeledStep, ...]

    def __post_init__(self) -> None:
        x = y = 0
        for s in self.steps:
            x += s.a
            y += 1 if s.is_rise else s.b
            if y < x:
                raise BelowDiagonal(f"point ({x},{y}) below y = x after step {s}")

    def __len__(self) -> int:
        return len(self.steps)

    def points(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        x = y = 0
        for s in self.steps:
            x += s.a
            y += 1 if s.is_rise else s.b
            pts.append((x, y))
        return pts

    @property
    def semilength(self) -> int:
        return sum(s.semilength for s in self.steps)

    @property
    def height(self) -> int:
        x, y = self.points()[-1]
        return y - x

    def to_dict(self) -> dict:
        return {"steps": [{"a": s.a, "parts": list(s.parts)} for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabeledFPath":
        return cls(tuple(_as_step(s) for s in data["steps"]))

    @classmethod
    def from_json(cls, text: str) -> "LabeledFPath":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.steps) if self.steps else "(empty)"


EMPTY_PATH = LabeledFPath(())


def validate_lf(steps: Iterable[StepLike]) -> LabeledFPath:
    """Build a labeled F-path from steps given as LabeledStep, pairs, or dicts.

    The empty step list is the one-point path of semilength 0 and height 0.
    """
    return LabeledFPath(tuple(_as_step(s) for s in steps))


def lf_stats(q: LabeledFPath) -> tuple[int, int]:
    return q.semilength, q.height


def in_class_210(q: LabeledFPath) -> bool:
    downs = [(i, s) for i, s in enumerate(q.steps) if not s.is_rise]
    if len(downs) == 0:
        return True
    if len(downs) > 1:
        return False
    i, s = downs[0]
    cls = classify_step(s)
    if cls in (StepClass.DOWN_PURE, StepClass.DOWN_ZERO_TAILED):
        return True
    # complex: admissible only when everything after it is a north step
    return all(classify_step(r) == StepClass.NORTH for r in q.steps[i + 1 :])


def in_class_110(q: LabeledFPath) -> bool:
    seen_down = False
    for s in q.steps:
        cls = classify_step(s)
        if cls == StepClass.DOWN_COMPLEX:
            return False
        if cls == StepClass.DOWN_ZERO_TAILED and seen_down:
            return False
        if cls == StepClass.NORTH and seen_down:
            return False
        if not s.is_rise:
            seen_down = True
    return True


def _nonpositive_compositions(total: int, k: int) -> list[tuple[int, ...]]:
    """All k-tuples of nonpositive integers summing to `total` (<= 0)."""
    if k == 1:
        return [(total,)]
    out = []
    for first in range(total, 1):  # first part ranges total..0
        for rest in _nonpositive_compositions(total - first, k - 1):
            out.append((first,) + rest)
    return out


def _candidate_steps(height: int, budget: int) -> list[LabeledStep]:
    cands = []
    for a in range(height + 2):  # rise keeps y >= x iff a <= height + 1
        cands.append(LabeledStep.rise(a))
    for k in range(1, budget + 1):
        for a in range(1, height + 1):
            for b in range(a - height, 1):  # y >= x needs b >= a - height
                for parts in _nonpositive_compositions(b, k):
                    cands.append(LabeledStep(a, parts))
    cands.sort(key=lambda s: (s.a, s.parts))
    return cands


def enumerate_lf(n: int, guard: int = LF_GUARD) -> list[LabeledFPath]:
    """All labeled F-paths of semilength exactly n, in a canonical recursive
    order (steps tried in lexicographic (a, parts) order at each point)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > guard:
        raise GuardExceeded(f"enumerate_lf: n = {n} exceeds guard {guard}")
    return [LabeledFPath(s) for s in _lf_step_tuples(n)]


@lru_cache(maxsize=None)
def _lf_step_tuples(n: int) -> tuple[tuple[LabeledStep, ...], ...]:
    out: list[tuple[LabeledStep, ...]] = []
    steps: list[LabeledStep] = []

    def extend(height: int, used: int) -> None:
        if used == n:
            out.append(tuple(steps))
            return
        for s in _candidate_steps(height, n - used):
            steps.append(s)
            extend(height + (1 if s.is_rise else s.b) - s.a, used + s.semilength)
            steps.pop()

    extend(0, 0)
    return tuple(out)
