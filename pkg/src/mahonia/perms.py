"""
Permutations, vincular pattern counting, and the Mahonian statistics
INV, MAJ, STAT, BAST together with the descent-type descriptors.

Permutations are ``tuple[int, ...]`` in one-line notation over ``1..n``.
The pattern engine accepts any host with pairwise distinct letters, so the
statistics also apply to words such as ``(4, 3, 5)``.

Vincular pattern text uses ``_`` (or ``-``) to separate the runs of
letters that must sit next to each other in the host: ``"1_32"`` has its
``3`` and ``2`` adjacent, ``"21_3"`` its ``2`` and ``1``, and a classical
pattern is written ``"3_1_4_2"``.
"""

from __future__ import annotations

import itertools
import json
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

Perm = tuple[int, ...]

__all__ = [
    "Perm", "VincularPattern", "parse_pattern", "parse_perm", "format_perm",
    "is_permutation", "standardize",
    "count_vincular", "occurrences", "PATTERN_SUMS", "pattern_sum",
    "inv_direct", "maj_direct", "mahonian", "MAHONIAN",
    "Descriptors", "descriptors", "des_set", "inverse", "transform",
    "enumerate_perms",
]


@dataclass(frozen=True)
class VincularPattern:
    """A pattern ``pattern`` whose letters at ``i, i+1`` (1-based) must be
    adjacent in the host for every ``i`` in ``glued``."""

    pattern: tuple[int, ...]
    glued: frozenset[int] = frozenset()

    def __post_init__(self):
        m = len(self.pattern)
        if m == 0 or len(set(self.pattern)) != m:
            raise ValueError(f"pattern letters must be distinct: {self.pattern}")
        if not all(1 <= i < m for i in self.glued):
            raise ValueError(f"glue positions must lie in 1..{m - 1}: {sorted(self.glued)}")
        object.__setattr__(self, "glued", frozenset(self.glued))

    @property
    def length(self) -> int:
        return len(self.pattern)

    def __str__(self) -> str:
        out = [str(self.pattern[0])]
        for i in range(1, len(self.pattern)):
            if i not in self.glued:
                out.append("_")
            out.append(str(self.pattern[i]))
        return "".join(out)


_PATTERN_RE = re.compile(r"^[1-9]+([_-][1-9]+)*$")


@lru_cache(maxsize=None)
def parse_pattern(text: str) -> VincularPattern:
    """``"1_32"`` -> pattern 132 with 3,2 adjacent.

    >>> parse_pattern("1_32")
    VincularPattern(pattern=(1, 3, 2), glued=frozenset({2}))
    """
    s = text.strip()
    if not _PATTERN_RE.match(s):
        raise ValueError(f"bad vincular pattern {text!r}")
    letters: list[int] = []
    glued: set[int] = set()
    for run in re.split(r"[_-]", s):
        for j, ch in enumerate(run):
            if j > 0:
                glued.add(len(letters))
            letters.append(int(ch))
    return VincularPattern(tuple(letters), frozenset(glued))


def parse_perm(text: str | Sequence[int]) -> Perm:
    if not isinstance(text, str):
        p = tuple(int(x) for x in text)
    else:
        s = text.strip()
        if s.startswith("["):
            p = tuple(int(x) for x in json.loads(s))
        elif any(ch in s for ch in " ,"):
            p = tuple(int(x) for x in s.replace(",", " ").split())
        elif s.isdigit():
            p = tuple(int(ch) for ch in s)
        else:
            raise ValueError(f"cannot parse permutation {text!r}")
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def format_perm(p: Sequence[int], compact: bool = True) -> str:
    if compact and len(p) <= 9 and all(0 <= x <= 9 for x in p):
        return "".join(map(str, p))
    return " ".join(map(str, p))


def is_permutation(p: Sequence[int]) -> bool:
    return len(p) > 0 and sorted(p) == list(range(1, len(p) + 1))


def standardize(w: Sequence[int]) -> Perm:
    """Order-isomorphic permutation of a word with distinct letters."""
    rank = {x: i for i, x in enumerate(sorted(w), 1)}
    if len(rank) != len(w):
        raise ValueError(f"letters are not distinct: {tuple(w)}")
    return tuple(rank[x] for x in w)


# pattern engine


def _compile(pat: VincularPattern):
    """For each pattern slot j, the earlier slots it must exceed / stay below."""
    m = len(pat.pattern)
    rules = []
    for j in range(m):
        above = tuple(t for t in range(j) if pat.pattern[t] < pat.pattern[j])
        below = tuple(t for t in range(j) if pat.pattern[t] > pat.pattern[j])
        rules.append((j in pat.glued, above, below))
    return tuple(rules)


_compile = lru_cache(maxsize=None)(_compile)


def occurrences(pat: VincularPattern, host: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield each occurrence as a tuple of 1-based host positions."""
    if len(set(host)) != len(host):
        raise ValueError(f"host letters must be distinct: {tuple(host)}")
    rules = _compile(pat)
    m, n = len(rules), len(host)
    idx = [0] * m

    def rec(j: int, start: int) -> Iterator[tuple[int, ...]]:
        if j == m:
            yield tuple(i + 1 for i in idx)
            return
        glued, above, below = rules[j]
        # leave room for the remaining slots
        stop = n - (m - j - 1)
        cands = (start,) if glued and j > 0 else range(start, stop)
        for i in cands:
            if i >= stop:
                break
            x = host[i]
            if all(host[idx[t]] < x for t in above) and all(host[idx[t]] > x for t in below):
                idx[j] = i
                yield from rec(j + 1, i + 1)

    yield from rec(0, 0)


def count_vincular(pat: VincularPattern | str, host: Sequence[int]) -> int:
    """Number of occurrences of a vincular pattern in a host with distinct letters.

    >>> count_vincular("3_1_4_2", (4, 1, 2, 5, 3))
    2
    >>> count_vincular("31_4_2", (4, 1, 2, 5, 3))
    1
    """
    if isinstance(pat, str):
        pat = parse_pattern(pat)
    host = tuple(host)
    if len(set(host)) != len(host):
        raise ValueError(f"host letters must be distinct: {host}")
    return _count(pat, host)


@lru_cache(maxsize=1 << 18)
def _count(pat: VincularPattern, host: tuple[int, ...]) -> int:
    if pat.length <= 3:
        return _count_short(pat, host)
    return sum(1 for _ in occurrences(pat, host))


def _count_short(pat: VincularPattern, host: tuple[int, ...]) -> int:
    """Direct loops for patterns of length at most 3; same result as ``occurrences``."""
    p, n = pat.pattern, len(host)
    if len(p) == 1:
        return n
    if len(p) == 2:
        want = p[0] > p[1]
        if 1 in pat.glued:
            return sum(1 for i in range(n - 1) if (host[i] > host[i + 1]) == want)
        return sum(1 for i in range(n) for j in range(i + 1, n) if (host[i] > host[j]) == want)
    key = (p[0] > p[1], p[0] > p[2], p[1] > p[2])
    g1, g2 = 1 in pat.glued, 2 in pat.glued
    if g1 and g2:
        triples = ((i, i + 1, i + 2) for i in range(n - 2))
    elif g1:
        triples = ((i, i + 1, k) for i in range(n - 2) for k in range(i + 2, n))
    elif g2:
        triples = ((i, j, j + 1) for j in range(1, n - 1) for i in range(j))
    else:
        triples = itertools.combinations(range(n), 3)
    total = 0
    for i, j, k in triples:
        a, b, c = host[i], host[j], host[k]
        if (a > b, a > c, b > c) == key:
            total += 1
    return total


PATTERN_SUMS: dict[str, tuple[str, ...]] = {
    "INV": ("21", "3_12", "3_21", "2_31"),
    "MAJ": ("21", "1_32", "2_31", "3_21"),
    "STAT": ("21", "13_2", "21_3", "32_1"),
    "BAST": ("21", "2_13", "1_32", "3_21"),
}

MAHONIAN = tuple(PATTERN_SUMS)


def pattern_sum(p: Sequence[int], which: str) -> int:
    try:
        pats = PATTERN_SUMS[which]
    except KeyError:
        raise ValueError(f"unknown Mahonian statistic {which!r}; expected one of {MAHONIAN}") from None
    return sum(count_vincular(s, p) for s in pats)


def inv_direct(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def maj_direct(p: Sequence[int]) -> int:
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


def mahonian(p: Sequence[int], which: str, method: str = "auto") -> int:
    """INV, MAJ, STAT or BAST of a distinct-letter word.

    ``method="direct"`` (INV and MAJ only) counts inversions / sums descent
    positions; ``"pattern"`` sums the vincular pattern counts; ``"auto"`` picks
    direct when available.
    """
    if which not in PATTERN_SUMS:
        raise ValueError(f"unknown Mahonian statistic {which!r}; expected one of {MAHONIAN}")
    if method == "auto":
        method = "direct" if which in ("INV", "MAJ") else "pattern"
    if method == "direct":
        if which == "INV":
            return inv_direct(p)
        if which == "MAJ":
            return maj_direct(p)
        raise ValueError(f"{which} is defined only as a pattern sum")
    if method == "pattern":
        return pattern_sum(p, which)
    raise ValueError(f"unknown method {method!r}")


# descriptors and transforms


def des_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p, 1):
        inv[x - 1] = i
    return tuple(inv)


@dataclass(frozen=True)
class Descriptors:
    Des: frozenset[int]
    Db: frozenset[int]
    Id: frozenset[int]
    des: int
    ides: int
    F: int
    E: int


def descriptors(p: Sequence[int]) -> Descriptors:
    """Descent set, descent bottoms, inverse descents, first and last letter.

    Words with distinct letters are standardized before taking ``Id``.
    """
    p = tuple(p)
    ds = des_set(p)
    db = frozenset([p[0]]) | frozenset(p[i] for i in ds)
    idset = des_set(inverse(standardize(p)))
    return Descriptors(ds, db, idset, len(ds), len(idset), p[0], p[-1])


def transform(p: Sequence[int], which: str) -> Perm:
    """``r`` (reverse), ``c`` (complement), ``rc`` or ``inverse``."""
    p = tuple(p)
    n = len(p)
    if which == "r":
        return p[::-1]
    if which == "c":
        return tuple(n + 1 - x for x in p)
    if which == "rc":
        return tuple(n + 1 - x for x in p[::-1])
    if which == "inverse":
        return inverse(p)
    raise ValueError(f"unknown transform {which!r}; expected r, c, rc or inverse")


def enumerate_perms(n: int, des_count: int | None = None,
                    avoid: VincularPattern | str | None = None) -> Iterator[Perm]:
    """Permutations of ``[n]`` in lexicographic order, optionally filtered."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(avoid, str):
        avoid = parse_pattern(avoid)
    for p in itertools.permutations(range(1, n + 1)):
        if des_count is not None and sum(1 for i in range(1, n) if p[i - 1] > p[i]) != des_count:
            continue
        if avoid is not None and next(occurrences(avoid, p), None) is not None:
            continue
        yield p
