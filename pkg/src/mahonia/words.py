"""
Words over the positive integers: restricted growth functions (RGFs),
unrestricted growth functions (URGs), and their coordinate and block
statistics.

A word is a plain ``tuple[int, ...]``.  Positions are 1-based in every
returned set and in every serialized form, to match the usual indexing of
these statistics; internally lists are 0-based.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

Word = tuple[int, ...]

__all__ = [
    "Word", "parse_word", "format_word",
    "is_rgf", "is_rgf_by_leftmost", "is_urg",
    "enumerate_rgf", "enumerate_urg",
    "leftmost", "rightmost", "marker_sets", "asc_set",
    "bk", "pro", "basic_stats",
    "COORD_STATS", "coord_stat", "coord_total", "vrs_vector_alt",
    "succ_chain", "BlockStats", "block_stats",
]


def parse_word(text: str | Sequence[int]) -> Word:
    """Read a word from space/comma separated integers, compact digits, or JSON.

    >>> parse_word("1 2 1 3")
    (1, 2, 1, 3)
    >>> parse_word("1213")
    (1, 2, 1, 3)
    """
    if not isinstance(text, str):
        w = tuple(int(x) for x in text)
    else:
        s = text.strip()
        if s.startswith("["):
            w = tuple(int(x) for x in json.loads(s))
        elif any(ch in s for ch in " ,"):
            w = tuple(int(x) for x in s.replace(",", " ").split())
        elif s.isdigit():
            w = tuple(int(ch) for ch in s)
        else:
            raise ValueError(f"cannot parse word {text!r}")
    if not w:
        raise ValueError("empty word")
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {w}")
    return w


def format_word(w: Sequence[int], compact: bool | None = None) -> str:
    """Space separated by default; compact digits when asked and all letters <= 9."""
    if compact is None:
        compact = False
    if compact and all(0 <= x <= 9 for x in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


# membership


def is_rgf(w: Sequence[int]) -> bool:
    if not w or w[0] != 1:
        return False
    m = 0
    for x in w:
        if x < 1 or x > m + 1:
            return False
        m = max(m, x)
    return True


def is_rgf_by_leftmost(w: Sequence[int]) -> bool:
    """RGF test via leftmost occurrences: they must carry 1, 2, ..., bk(w) in order."""
    if not w or min(w) < 1:
        return False
    lefts = [w[i - 1] for i in sorted(leftmost(w).values())]
    return len(lefts) == max(w) and lefts == list(range(1, len(lefts) + 1))


def is_urg(w: Sequence[int]) -> bool:
    if not w or min(w) < 1:
        return False
    return set(w) == set(range(1, max(w) + 1))


def enumerate_rgf(n: int, k: int | None = None) -> Iterator[Word]:
    """Yield RG(n) (or RG(n,k)) in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if k is not None and not 1 <= k <= n:
        return
    w = [0] * n

    def rec(i: int, m: int) -> Iterator[Word]:
        if i == n:
            if k is None or m == k:
                yield tuple(w)
            return
        top = m + 1 if k is None else min(m + 1, k)
        for x in range(1, top + 1):
            # each remaining position can raise the maximum by at most one
            if k is not None and k - max(m, x) > n - i - 1:
                continue
            w[i] = x
            yield from rec(i + 1, max(m, x))

    w[0] = 1
    yield from rec(1, 1)


def enumerate_urg(n: int, k: int | None = None) -> Iterator[Word]:
    """Yield URG(n) (or URG(n,k)) in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if k is not None and not 1 <= k <= n:
        return
    top = n if k is None else k
    w = [0] * n
    counts = [0] * (top + 2)

    def rec(i: int, m: int, distinct: int) -> Iterator[Word]:
        remaining = n - i
        if remaining == 0:
            if distinct == m and (k is None or m == k):
                yield tuple(w)
            return
        for x in range(1, top + 1):
            new_m = max(m, x)
            new_distinct = distinct + (counts[x] == 0)
            target = new_m if k is None else k
            if target - new_distinct > remaining - 1:
                continue
            w[i] = x
            counts[x] += 1
            yield from rec(i + 1, new_m, new_distinct)
            counts[x] -= 1

    yield from rec(0, 0, 0)


# markers


def leftmost(w: Sequence[int]) -> dict[int, int]:
    """Map each letter to the 1-based position of its first occurrence."""
    first: dict[int, int] = {}
    for i, x in enumerate(w, 1):
        first.setdefault(x, i)
    return first


def rightmost(w: Sequence[int]) -> dict[int, int]:
    last: dict[int, int] = {}
    for i, x in enumerate(w, 1):
        last[x] = i
    return last


def asc_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])


def marker_sets(w: Sequence[int]) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """``(L, R, Asc)`` as sets of 1-based positions."""
    return (frozenset(leftmost(w).values()),
            frozenset(rightmost(w).values()),
            asc_set(w))


def bk(w: Sequence[int]) -> int:
    return max(w)


def pro(w: Sequence[int]) -> int:
    """Position of the rightmost 1."""
    for i in range(len(w), 0, -1):
        if w[i - 1] == 1:
            return i
    raise ValueError(f"pro undefined: no letter 1 in {tuple(w)}")


def basic_stats(w: Sequence[int]) -> tuple[int, int]:
    return bk(w), pro(w)


# coordinate statistics


def _lb(w, L, R):
    return tuple(sum(1 for j in L if j < i and w[j - 1] > w[i - 1]) for i in range(1, len(w) + 1))


def _ls(w, L, R):
    return tuple(sum(1 for j in L if j < i and w[j - 1] < w[i - 1]) for i in range(1, len(w) + 1))


def _rb(w, L, R):
    return tuple(sum(1 for j in R if j > i and w[j - 1] > w[i - 1]) for i in range(1, len(w) + 1))


def _rs(w, L, R):
    return tuple(sum(1 for j in R if j > i and w[j - 1] < w[i - 1]) for i in range(1, len(w) + 1))


def _vls(w, L, R):
    p = pro(w)
    out = []
    for i, v in enumerate(_ls(w, L, R), 1):
        if i not in R and i > p:
            v -= 1
        elif i in R and i < p:
            v += 1
        out.append(v)
    return tuple(out)


def _vrs(w, L, R):
    p = pro(w)
    out = []
    for i, v in enumerate(_rs(w, L, R), 1):
        if i not in R and i > p:
            v += 1
        elif i in R and i < p:
            v -= 1
        out.append(v)
    return tuple(out)


COORD_STATS = {"lb": _lb, "ls": _ls, "rb": _rb, "rs": _rs, "vls": _vls, "vrs": _vrs}


def coord_stat(w: Sequence[int], which: str) -> tuple[int, ...]:
    """Per-position vector of one of ``lb, ls, rb, rs, vls, vrs``.

    >>> coord_stat((1, 2, 2, 1), "ls")
    (0, 1, 1, 0)
    """
    try:
        f = COORD_STATS[which]
    except KeyError:
        raise ValueError(f"unknown coordinate statistic {which!r}; "
                         f"expected one of {sorted(COORD_STATS)}") from None
    w = tuple(w)
    L = frozenset(leftmost(w).values())
    R = frozenset(rightmost(w).values())
    return f(w, L, R)


def coord_total(w: Sequence[int], which: str) -> int:
    return sum(coord_stat(w, which))


def vrs_vector_alt(w: Sequence[int]) -> tuple[int, ...]:
    """``vrs_i = #{j in R(w): j > i, w_i >= w_j > 1}``; must agree with the case definition."""
    R = frozenset(rightmost(w).values())
    return tuple(sum(1 for j in R if j > i and w[i - 1] >= w[j - 1] > 1)
                 for i in range(1, len(w) + 1))


# block statistics on URGs


def succ_chain(w: Sequence[int]) -> tuple[bool, ...]:
    """``chi(i > i+1)`` in the block order, for ``i = 1..bk(w)-1``.

    ``a`` dominates ``b`` when the leftmost ``a`` lies to the right of the
    rightmost ``b``.
    """
    first, last = leftmost(w), rightmost(w)
    return tuple(first[i] > last[i + 1] for i in range(1, max(w)))


@dataclass(frozen=True)
class BlockStats:
    MIL: int
    bMAJ: int
    bmajMIL: int
    bndes: int
    bmajBAST: int


def block_stats(w: Sequence[int]) -> BlockStats:
    """MIL, bMAJ, bmajMIL, bndes and bmajBAST of a URG.

    >>> block_stats((2, 2, 1))
    BlockStats(MIL=2, bMAJ=1, bmajMIL=3, bndes=0, bmajBAST=3)
    """
    if not is_urg(w):
        raise ValueError(f"block statistics need a URG, got {tuple(w)}")
    n = len(w)
    chain = succ_chain(w)
    mil = sum(x - 1 for x in w)
    bmaj = sum(i for i, d in enumerate(chain, 1) if d)
    bndes = max(w) - 1 - sum(chain)
    bmajmil = bmaj + mil
    return BlockStats(mil, bmaj, bmajmil, bndes, bmajmil + pro(w) + bndes - n)
