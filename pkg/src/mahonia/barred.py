"""
Barred permutations and the encoding ``theta`` onto URGs.

A barred permutation carries one bar at every descent (a *fixed* bar, drawn
``||``) and optionally one bar at each ascent (an *active* bar, ``|``).
``theta`` sends it to the word whose ``i``-th letter is one more than the
number of bars to the right of the letter ``i``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .perms import Perm, is_permutation
from .words import Word, is_urg

__all__ = ["BarredPermutation", "parse_barred", "theta", "theta_inv", "enumerate_barred"]


@dataclass(frozen=True)
class BarredPermutation:
    base: Perm
    bars: tuple[bool, ...]  # bars[g] is the gap between base[g] and base[g+1]

    def __post_init__(self):
        base = tuple(self.base)
        bars = tuple(bool(b) for b in self.bars)
        if not is_permutation(base):
            raise ValueError(f"base is not a permutation: {base}")
        if len(bars) != len(base) - 1:
            raise ValueError("need one bar flag per gap")
        for g, b in enumerate(bars):
            if base[g] > base[g + 1] and not b:
                raise ValueError(f"descent gap {g + 1} of {base} must carry a fixed bar")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "bars", bars)

    @classmethod
    def bare(cls, base: Sequence[int]) -> "BarredPermutation":
        """Only the mandatory fixed bars."""
        base = tuple(base)
        return cls(base, tuple(base[g] > base[g + 1] for g in range(len(base) - 1)))

    @property
    def n(self) -> int:
        return len(self.base)

    def is_fixed(self, gap: int) -> bool:
        """Whether the bar in 1-based ``gap`` is fixed (gap is a descent)."""
        return self.base[gap - 1] > self.base[gap]

    @property
    def fixed_gaps(self) -> tuple[int, ...]:
        return tuple(g for g in range(1, self.n) if self.bars[g - 1] and self.is_fixed(g))

    @property
    def active_gaps(self) -> tuple[int, ...]:
        return tuple(g for g in range(1, self.n) if self.bars[g - 1] and not self.is_fixed(g))

    @property
    def counts(self) -> tuple[int, int]:
        """``(active, fixed)``."""
        return len(self.active_gaps), len(self.fixed_gaps)

    def __str__(self) -> str:
        out = [str(self.base[0])]
        for g in range(1, self.n):
            if self.bars[g - 1]:
                out.append("||" if self.is_fixed(g) else "|")
            out.append(str(self.base[g]))
        return "".join(out)


def parse_barred(text: str) -> BarredPermutation:
    """Parse ``"3||12"``, ``"3‖12"`` or ``"12|3"``.

    Letters are single digits unless the text contains spaces.  A ``|`` at a
    descent or a ``||`` at an ascent is rejected.
    """
    s = text.replace("‖", "||").strip()
    letter = r"\d+" if " " in s else r"\d"
    tokens = re.findall(rf"\|\||\||{letter}|\S", s)
    base: list[int] = []
    marks: list[str] = []
    pending = ""
    for t in tokens:
        if t in ("|", "||"):
            if not base or pending:
                raise ValueError(f"misplaced bar in {text!r}")
            pending = t
        elif t.isdigit():
            if base:
                marks.append(pending)
            base.append(int(t))
            pending = ""
        else:
            raise ValueError(f"unexpected character {t!r} in {text!r}")
    if pending:
        raise ValueError(f"trailing bar in {text!r}")
    for g, mark in enumerate(marks):
        if mark and len(base) == len(set(base)) and (mark == "||") != (base[g] > base[g + 1]):
            kind = "fixed" if base[g] > base[g + 1] else "active"
            raise ValueError(f"gap {g + 1} of {text!r} needs an {kind} bar glyph")
    return BarredPermutation(tuple(base), tuple(bool(m) for m in marks))


def theta(bp: BarredPermutation) -> Word:
    """URG whose letter ``i`` is ``1 + #bars right of i``.

    >>> theta(parse_barred("3||12"))
    (1, 1, 2)
    """
    n = bp.n
    w = [0] * n
    bars_right = sum(bp.bars)
    for g, x in enumerate(bp.base):
        w[x - 1] = bars_right + 1
        if g < n - 1 and bp.bars[g]:
            bars_right -= 1
    return tuple(w)


def theta_inv(w: Sequence[int]) -> BarredPermutation:
    """Group positions by letter, largest letter first, a bar between groups.

    >>> str(theta_inv((1, 2, 1)))
    '2||13'
    """
    if not is_urg(w):
        raise ValueError(f"theta_inv needs a URG, got {tuple(w)}")
    base: list[int] = []
    bars: list[bool] = []
    for j in range(max(w), 0, -1):
        group = [i for i, x in enumerate(w, 1) if x == j]
        if base:
            bars.append(True)
        base.extend(group)
        bars.extend([False] * (len(group) - 1))
    return BarredPermutation(tuple(base), tuple(bars))


def enumerate_barred(n: int, a: int, b: int) -> Iterator[BarredPermutation]:
    """All barred permutations of ``[n]`` with ``a`` active and ``b`` fixed bars."""
    if n < 1:
        raise ValueError("n must be positive")
    for base in itertools.permutations(range(1, n + 1)):
        desc = [base[g] > base[g + 1] for g in range(n - 1)]
        if sum(desc) != b:
            continue
        ascents = [g for g in range(n - 1) if not desc[g]]
        for chosen in itertools.combinations(ascents, a):
            bars = list(desc)
            for g in chosen:
                bars[g] = True
            yield BarredPermutation(base, tuple(bars))
