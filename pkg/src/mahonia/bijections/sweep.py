"""
``phi_rgf`` (vrs vector -> rs vector), bad pairs, the sweep ``gamma`` that
repairs ascents, and ``zeta = phi_rgf o gamma``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..words import Word, is_rgf

__all__ = [
    "phi_case", "phi_rgf", "phi_rgf_inv", "bad_pair_type", "swap",
    "SweepRound", "SweepTrace", "gamma_sweep", "gamma_sweep_inv", "zeta", "zeta_inv",
]


def _check(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if not is_rgf(w):
        raise ValueError(f"expected an RGF, got {w}")
    return w


def _first_last(w):
    first, last = {}, {}
    for i, x in enumerate(w):
        first.setdefault(x, i)
        last[x] = i
    return first, last


def phi_case(w: Sequence[int], i: int) -> int:
    """Which of the three ``phi_rgf`` cases position ``i`` (1-based) falls in."""
    first, last = _first_last(w)
    return _case(w, i - 1, first, last)


def _case(w, i, first, last) -> int:
    x = w[i]
    if first[x] == i:
        return 1
    if last[x] == i and (x - 1) in w[:i]:
        return 2
    return 3


def _case_inv(v, i, first, last) -> int:
    x = v[i]
    if first[x] == i:
        return 1
    if last[x] == i and (x + 1) in v[:i]:
        return 2
    return 3


def _next_bigger(w, i: int) -> int:
    """``min{a in w[i+1:] + (bk+1,) : a > w[i]}`` with 0-based ``i``."""
    top = max(w) + 1
    return min((a for a in w[i + 1:] if a > w[i]), default=top)


def phi_rgf(w: Sequence[int]) -> Word:
    """
    >>> phi_rgf((1, 2, 3, 4, 5, 4, 3, 3, 3, 6, 7, 3, 5, 7, 3))
    (1, 2, 3, 4, 5, 3, 4, 4, 4, 6, 7, 4, 4, 6, 2)
    """
    w = _check(w)
    first, last = _first_last(w)
    out = []
    for i, x in enumerate(w):
        c = _case(w, i, first, last)
        if c == 1:
            out.append(x)
        elif c == 2:
            out.append(x - 1)
        else:
            out.append(_next_bigger(w, i) - 1)
    return tuple(out)


def phi_rgf_inv(v: Sequence[int]) -> Word:
    v = _check(v)
    first, last = _first_last(v)
    out = []
    for i, x in enumerate(v):
        c = _case_inv(v, i, first, last)
        if c == 1:
            out.append(x)
        elif c == 2:
            out.append(x + 1)
        else:
            out.append(max((a for a in v[i + 1:] if a < x), default=0) + 1)
    return tuple(out)


def bad_pair_type(w: Sequence[int], i: int) -> int | None:
    """1 or 2 if ``(w_i, w_{i+1})`` is a bad pair of that type, else ``None``."""
    w = tuple(w)
    if not 1 <= i < len(w):
        raise ValueError(f"position {i} out of range for length {len(w)}")
    first, last = _first_last(w)
    j = i - 1
    ci, cj = _case(w, j, first, last), _case(w, j + 1, first, last)
    x, y = w[j], w[j + 1]
    if ci == 2 and cj == 3 and x > y and _next_bigger(w, j + 1) > x:
        return 1
    if ci == 3 and cj == 2 and x < y and _next_bigger(w, j) == y:
        return 2
    return None


def swap(w: Sequence[int], i: int) -> Word:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@dataclass(frozen=True)
class SweepRound:
    index: int
    word: Word
    bad_type: int | None = None  # set when the pair at ``index`` was swapped


@dataclass(frozen=True)
class SweepTrace:
    start: Word
    rounds: tuple[SweepRound, ...] = field(default_factory=tuple)

    @property
    def swaps(self) -> tuple[tuple[int, int], ...]:
        return tuple((r.index, r.bad_type) for r in self.rounds if r.bad_type is not None)

    def to_dict(self) -> dict:
        return {
            "start": list(self.start),
            "rounds": [{"index": r.index, "word": list(r.word), "swap_type": r.bad_type}
                       for r in self.rounds],
        }


def _sweep(w: Word, order) -> tuple[Word, SweepTrace]:
    u = w
    rounds = []
    for i in order:
        t = bad_pair_type(u, i)
        if t is not None:
            u = swap(u, i)
        rounds.append(SweepRound(i, u, t))
    return u, SweepTrace(w, tuple(rounds))


def gamma_sweep(w: Sequence[int]) -> tuple[Word, SweepTrace]:
    """Left-to-right sweep swapping every bad pair met on the way."""
    w = _check(w)
    return _sweep(w, range(1, len(w)))


def gamma_sweep_inv(w: Sequence[int]) -> tuple[Word, SweepTrace]:
    w = _check(w)
    return _sweep(w, range(len(w) - 1, 0, -1))


def zeta(w: Sequence[int]) -> Word:
    return phi_rgf(gamma_sweep(w)[0])


def zeta_inv(v: Sequence[int]) -> Word:
    return gamma_sweep_inv(phi_rgf_inv(v))[0]
