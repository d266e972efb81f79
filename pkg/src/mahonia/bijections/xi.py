"""
The bijection ``xi`` on RG(n) carrying ``vls`` to ``ls`` while keeping the
leftmost-occurrence set and the ascent set, and its inverse.
"""

from __future__ import annotations

from collections.abc import Sequence

from ..words import Word, is_rgf

__all__ = ["lr_maxima", "delta_shift", "admissible", "xi", "xi_inv"]


def lr_maxima(w: Sequence[int]) -> frozenset[int]:
    """1-based positions holding a strict left-to-right maximum."""
    out, m = [], None
    for i, x in enumerate(w, 1):
        if m is None or x > m:
            out.append(i)
            m = x
    return frozenset(out)


def delta_shift(w: Sequence[int], start: int, end: int, direction: str) -> Word:
    """Shift letters at positions ``start..end`` (1-based, inclusive) by +-1,
    leaving left-to-right maxima of ``w`` in place.

    >>> delta_shift((1, 2, 3), 1, 3, "+")
    (1, 2, 3)
    """
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    step = 1 if direction == "+" else -1
    keep = lr_maxima(w)
    out = list(w)
    for i in range(start, end + 1):
        if i not in keep:
            out[i - 1] += step
            if out[i - 1] < 1:
                raise ValueError(f"delta- underflow at position {i} of {tuple(w)}")
    return tuple(out)


def _check(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if not is_rgf(w):
        raise ValueError(f"expected an RGF, got {w}")
    return w


def xi(w: Sequence[int]) -> Word:
    """
    >>> xi((1, 2, 3, 2, 1, 1, 1, 2, 2, 4, 2, 5, 4))
    (1, 2, 3, 2, 1, 1, 1, 3, 1, 4, 1, 5, 3)
    """
    w = _check(w)
    n = len(w)
    keep = lr_maxima(w)

    def dm(i: int) -> int:  # 0-based
        return w[i] if i + 1 in keep else w[i] - 1

    p = max(i for i in range(n) if w[i] == 1)  # rightmost 1
    if all(x == 1 for x in w[:p]):
        return w[:p + 1] + tuple(dm(i) for i in range(p + 1, n))

    k = max(w[:p + 1])
    lk = w.index(k + 1) if k + 1 in w else n  # leftmost k+1, or past the end
    # a_1 >= ... >= a_r is the maximal weakly decreasing run ending just before the 1;
    # a_0 sits immediately left of it and exists because w does not start 1...1 1
    r0 = p - 1
    while r0 > 0 and w[r0 - 1] >= w[r0]:
        r0 -= 1
    # b_1 < ... < b_s is the maximal increasing run right after the 1, stopping at k+1
    bend = p + 1
    while bend < lk and (bend == p + 1 or w[bend] > w[bend - 1]):
        bend += 1
    has_b = bend > p + 1
    a_r = w[p - 1]

    if not has_b or a_r <= w[p + 1] - 2:
        return w[:r0] + (k,) + w[r0:p] + tuple(dm(i) for i in range(p + 1, n))
    return (w[:p] + tuple(dm(i) for i in range(p + 1, bend)) + (k,)
            + tuple(dm(i) for i in range(bend, n)))


def admissible(w: Sequence[int], x: int) -> bool:
    """``x`` occurs once, or an ``x+1`` sits between its first two occurrences."""
    pos = [i for i, y in enumerate(w) if y == x]
    if len(pos) == 1:
        return True
    if not pos:
        return False
    return (x + 1) in w[pos[0] + 1:pos[1]]


def xi_inv(w: Sequence[int]) -> Word:
    w = _check(w)
    n = len(w)
    keep = lr_maxima(w)

    def dp(i: int) -> int:  # 0-based
        return w[i] if i + 1 in keep else w[i] + 1

    k = max(w) + 1
    while k > 1 and admissible(w, k - 1):
        k -= 1
    if k == 1:
        return tuple(dp(i) for i in range(n))

    lk = w.index(k) if k in w else n
    pos = max(i for i in range(lk) if w[i] == k - 1)
    a = w[pos - 1]
    # b lies strictly between that k-1 and the leftmost k; absent counts as 0
    b = w[pos + 1] if pos + 1 < lk else 0

    if a == k - 1 or a < b:
        x = w[pos:lk + 1]
        m = len(x)
        j = next((j for j in range(1, m) if x[j - 1] < x[j]), m)
        return w[:pos] + x[1:j] + (1,) + tuple(dp(i) for i in range(pos + j, n))

    y = w[:pos + 1]
    j = next((j for j in range(len(y) - 1, 0, -1) if y[j - 1] >= y[j]), 0)
    return (w[:j] + (1,) + tuple(dp(i) for i in range(j, pos))
            + tuple(dp(i) for i in range(pos + 1, n)))
