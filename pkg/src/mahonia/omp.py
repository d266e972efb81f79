"""
Ordered multiset partitions, their encoding ``iota`` as growth words, and
Wilson's ``maj`` and ``inv``.

An ordered multiset partition of weight ``beta`` is a sequence of nonempty
blocks, each a set, whose multiset union holds ``beta[i-1]`` copies of ``i``.
Blocks are stored as ascending tuples.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .bijections.eta import eta
from .words import Word, asc_set, block_stats, is_urg

__all__ = [
    "OrderedMultisetPartition", "normalize_beta", "compositions", "parse_omp",
    "enumerate_omp", "iota", "iota_inv", "is_urg_beta", "enumerate_urg_beta",
    "sigma_word", "wilson_maj", "omp_inv", "omp_stats", "eta_hat",
]


@dataclass(frozen=True)
class OrderedMultisetPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if not blocks:
            raise ValueError("need at least one block")
        for b in blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            if len(set(b)) != len(b):
                raise ValueError(f"repeated letter inside block {b}")
            if b[0] < 1:
                raise ValueError(f"letters must be positive: {b}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def weight(self) -> tuple[int, ...]:
        """Multiplicity of each letter ``1..max``; zeros kept in the middle."""
        top = max(max(b) for b in self.blocks)
        beta = [0] * top
        for b in self.blocks:
            for x in b:
                beta[x - 1] += 1
        return tuple(beta)

    def __str__(self) -> str:
        compact = all(x <= 9 for b in self.blocks for x in b)
        sep = "" if compact else ","
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks])


def parse_omp(text: str) -> OrderedMultisetPartition:
    """``"23|12|1"``, ``"2,3|1,2|1"`` or ``"[[2,3],[1,2],[1]]"``."""
    s = text.strip()
    if s.startswith("["):
        return OrderedMultisetPartition(tuple(tuple(b) for b in json.loads(s)))
    blocks = []
    for part in s.split("|"):
        part = part.strip()
        if "," in part or " " in part:
            blocks.append(tuple(int(x) for x in part.replace(",", " ").split()))
        elif part.isdigit():
            blocks.append(tuple(int(ch) for ch in part))
        else:
            raise ValueError(f"cannot parse block {part!r} of {text!r}")
    return OrderedMultisetPartition(tuple(blocks))


def normalize_beta(beta: Sequence[int]) -> tuple[int, ...]:
    """Drop zero parts; the statistics only see relative order of letters."""
    if any(b < 0 for b in beta):
        raise ValueError(f"weak composition has a negative part: {tuple(beta)}")
    return tuple(b for b in beta if b)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` (``n >= 1``), ordered by their cut sets."""
    for r in range(n):
        for cuts in itertools.combinations(range(1, n), r):
            edges = (0,) + cuts + (n,)
            yield tuple(edges[i + 1] - edges[i] for i in range(len(edges) - 1))


def enumerate_omp(beta: Sequence[int], k: int) -> Iterator[OrderedMultisetPartition]:
    """Every ordered multiset partition of weight ``beta`` with ``k`` blocks."""
    beta = normalize_beta(beta)
    if k < 1:
        raise ValueError("k must be positive")
    if any(b > k for b in beta):
        return
    choices = [list(itertools.combinations(range(k), b)) for b in beta]
    for pick in itertools.product(*choices):
        blocks: list[list[int]] = [[] for _ in range(k)]
        for letter, where in enumerate(pick, 1):
            for j in where:
                blocks[j].append(letter)
        if all(blocks):
            yield OrderedMultisetPartition(tuple(tuple(b) for b in blocks))


def iota(mu: OrderedMultisetPartition) -> Word:
    """For each letter in turn, list the blocks containing it in increasing order.

    >>> iota(parse_omp("23|12|1"))
    (2, 3, 1, 2, 1)
    """
    top = max(max(b) for b in mu.blocks)
    out: list[int] = []
    for letter in range(1, top + 1):
        out.extend(j for j, b in enumerate(mu.blocks, 1) if letter in b)
    return tuple(out)


def _segments(w: Sequence[int], beta: Sequence[int]) -> list[tuple[int, ...]]:
    segs, i = [], 0
    for b in beta:
        segs.append(tuple(w[i:i + b]))
        i += b
    return segs


def is_urg_beta(w: Sequence[int], beta: Sequence[int], k: int | None = None) -> bool:
    """Membership in URG(beta, k): a URG that strictly increases inside each
    length-``beta_i`` segment."""
    beta = normalize_beta(beta)
    if len(w) != sum(beta) or not is_urg(w):
        return False
    if k is not None and max(w) != k:
        return False
    return all(all(s[j] < s[j + 1] for j in range(len(s) - 1)) for s in _segments(w, beta))


def iota_inv(w: Sequence[int], beta: Sequence[int]) -> OrderedMultisetPartition:
    beta = normalize_beta(beta)
    if not is_urg_beta(w, beta):
        raise ValueError(f"{tuple(w)} is not in URG{beta}")
    blocks: list[list[int]] = [[] for _ in range(max(w))]
    for letter, seg in enumerate(_segments(w, beta), 1):
        for j in seg:
            blocks[j - 1].append(letter)
    return OrderedMultisetPartition(tuple(tuple(b) for b in blocks))


def enumerate_urg_beta(beta: Sequence[int], k: int) -> Iterator[Word]:
    return (iota(mu) for mu in enumerate_omp(beta, k))


def sigma_word(mu: OrderedMultisetPartition) -> tuple[tuple[int, bool], ...]:
    """Blocks written decreasingly; each letter tagged with "is its block's minimum"."""
    return tuple((x, x == b[0]) for b in mu.blocks for x in reversed(b))


def wilson_maj(mu: OrderedMultisetPartition) -> int:
    """
    >>> wilson_maj(parse_omp("124|35|12"))
    5
    """
    sigma = sigma_word(mu)
    total, w = 0, 0
    for i, (x, is_min) in enumerate(sigma):
        w += is_min
        if i + 1 < len(sigma) and x > sigma[i + 1][0]:
            total += w
    return total


def omp_inv(mu: OrderedMultisetPartition) -> int:
    """Pairs ``(a, min B_t)`` with ``a`` in an earlier block and ``a > min B_t``.

    >>> omp_inv(parse_omp("23|12|1"))
    5
    """
    total = 0
    for t in range(1, mu.k):
        m = mu.blocks[t][0]
        total += sum(1 for b in mu.blocks[:t] for a in b if a > m)
    return total


def omp_stats(mu: OrderedMultisetPartition) -> tuple[frozenset[int], int, int]:
    """``(Asc, bmajMIL, bmajBAST)`` read off ``iota(mu)``."""
    w = iota(mu)
    bs = block_stats(w)
    return asc_set(w), bs.bmajMIL, bs.bmajBAST


def eta_hat(mu: OrderedMultisetPartition) -> OrderedMultisetPartition:
    beta = normalize_beta(mu.weight)
    return iota_inv(eta(iota(mu)), beta)
