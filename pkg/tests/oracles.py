"""
Brute-force reference implementations, written straight from the
definitions and sharing no code with the package.  Slow on purpose.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb, factorial


def poly(exponents) -> list[int]:
    """Coefficient list of sum q^e, trailing zeros stripped."""
    c = Counter(exponents)
    if not c:
        return []
    out = [0] * (max(c) + 1)
    for e, m in c.items():
        out[e] += m
    return out


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def q_binomial_inv(n: int, k: int) -> list[int]:
    """sum q^inv over 0/1 words with k ones."""
    if not 0 <= k <= n:
        return []
    exps = []
    for ones in itertools.combinations(range(n), k):
        w = [1 if i in ones else 0 for i in range(n)]
        exps.append(sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]))
    return poly(exps)


def stirling2(n: int, k: int) -> int:
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def rgf_brute(n: int, k: int | None = None) -> list[tuple[int, ...]]:
    out = []
    for w in itertools.product(range(1, n + 1), repeat=n):
        ok = w[0] == 1 and all(w[i] <= max(w[:i]) + 1 for i in range(1, n))
        if ok and (k is None or max(w) == k):
            out.append(w)
    return out


def urg_brute(n: int, k: int) -> list[tuple[int, ...]]:
    return [w for w in itertools.product(range(1, k + 1), repeat=n) if set(w) == set(range(1, k + 1))]


def L_set(w):
    return {i for i in range(1, len(w) + 1) if w[i - 1] not in w[:i - 1]}


def R_set(w):
    return {i for i in range(1, len(w) + 1) if w[i - 1] not in w[i:]}


def ls_vec(w):
    L = L_set(w)
    return [len([j for j in L if j < i and w[j - 1] < w[i - 1]]) for i in range(1, len(w) + 1)]


def lb_vec(w):
    L = L_set(w)
    return [len([j for j in L if j < i and w[j - 1] > w[i - 1]]) for i in range(1, len(w) + 1)]


def rs_vec(w):
    R = R_set(w)
    return [len([j for j in R if j > i and w[j - 1] < w[i - 1]]) for i in range(1, len(w) + 1)]


def rb_vec(w):
    R = R_set(w)
    return [len([j for j in R if j > i and w[j - 1] > w[i - 1]]) for i in range(1, len(w) + 1)]


def succ(w, a, b) -> bool:
    """a > b in the block order: some leftmost a sits right of some rightmost b."""
    L, R = L_set(w), R_set(w)
    return any(w[i - 1] == a and w[j - 1] == b and i > j for i in L for j in R)


def block_stats_brute(w):
    n, k = len(w), max(w)
    mil = sum(x - 1 for x in w)
    bmaj = sum(i for i in range(1, k) if succ(w, i, i + 1))
    bndes = k - 1 - sum(1 for i in range(1, k) if succ(w, i, i + 1))
    p = max(i for i in range(1, n + 1) if w[i - 1] == 1)
    return {"MIL": mil, "bMAJ": bmaj, "bmajMIL": mil + bmaj, "bndes": bndes,
            "bmajBAST": mil + bmaj + p + bndes - n}


def count_pattern_brute(pattern, glued, host) -> int:
    """Occurrences by checking every index subset."""
    m = len(pattern)
    total = 0
    for idx in itertools.combinations(range(len(host)), m):
        if any(idx[g] != idx[g - 1] + 1 for g in glued):
            continue
        vals = [host[i] for i in idx]
        if all((vals[a] < vals[b]) == (pattern[a] < pattern[b]) for a in range(m) for b in range(m)):
            total += 1
    return total


def maj(p):
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


def inv(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def des(p):
    return sum(1 for i in range(1, len(p)) if p[i - 1] > p[i])


def ides_set(p):
    pos = {x: i for i, x in enumerate(p)}
    s = sorted(p)
    return {r for r in range(1, len(p)) if pos[s[r - 1]] > pos[s[r]]}


def omp_brute(beta, k):
    """Ordered multiset partitions by placing letters into k labeled blocks."""
    letters = [i for i, b in enumerate(beta, 1) for _ in range(b)]
    seen = set()
    for assign in itertools.product(range(k), repeat=len(letters)):
        blocks = [[] for _ in range(k)]
        for x, j in zip(letters, assign):
            blocks[j].append(x)
        if all(blocks) and all(len(set(b)) == len(b) for b in blocks):
            seen.add(tuple(tuple(sorted(b)) for b in blocks))
    return seen
