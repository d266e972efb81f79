"""
Exact polynomials in a single formal variable ``q`` and the q-analog
families used as reference values: q-integers, q-factorials, q-binomials,
the two q-Stirling numbers of the second kind, q-Eulerian numbers, and the
right-hand sides of Wagner's recurrence and the Zeng-Zhang identity.

Every family is memoized on ``(n, k)``.  ``functools.lru_cache`` is safe to
share between threads: a racing miss may compute a value twice, but both
results are equal and immutable.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from functools import lru_cache
from math import comb

__all__ = [
    "QPoly", "ZERO", "ONE", "Q",
    "q_int", "q_factorial", "q_binomial",
    "stirling_q", "stirling_tilde_q", "wagner_rhs",
    "eulerian_q", "zeng_zhang_rhs",
]


class QPoly:
    """Integer-coefficient polynomial in ``q``, lowest exponent first.

    Instances are immutable and hashable.  Trailing zero coefficients are
    stripped, so the zero polynomial has ``coeffs == ()``.

    >>> QPoly([0, 2, 1])
    QPoly('2*q + q^2')
    >>> (QPoly([1, 1]) * QPoly([1, 1])).coeffs
    (1, 2, 1)
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # construction helpers

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int] | Mapping[int, int]) -> "QPoly":
        """Generating polynomial of a multiset of exponents.

        Accepts either an iterable of exponents (each contributing ``q^e``)
        or a mapping ``exponent -> multiplicity``.
        """
        if isinstance(exponents, Mapping):
            items = exponents.items()
        else:
            counts: dict[int, int] = {}
            for e in exponents:
                counts[e] = counts.get(e, 0) + 1
            items = counts.items()
        c: list[int] = []
        for e, m in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += m
        return cls(c)

    @classmethod
    def from_json(cls, text: str) -> "QPoly":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("expected a JSON array of integers")
        return cls(data)

    # accessors

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self._c):
            return self._c[exponent]
        return 0

    def __bool__(self) -> bool:
        return bool(self._c)

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def lowest_exponent(self) -> int:
        for i, a in enumerate(self._c):
            if a:
                return i
        return -1

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self._c)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-x for x in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return QPoly(c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q^k``.  A negative ``k`` must not drop nonzero terms."""
        if not self._c:
            return self
        if k >= 0:
            return QPoly((0,) * k + self._c)
        if any(self._c[:-k]):
            raise ValueError(f"q^{k} * ({self}) has a negative exponent")
        return QPoly(self._c[-k:])

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == QPoly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self._c))

    # serialization

    def to_list(self) -> list[int]:
        return list(self._c)

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    def __str__(self) -> str:
        terms = []
        for e, a in enumerate(self._c):
            if a == 0:
                continue
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not terms:
                terms.append(body if a > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


@lru_cache(maxsize=None)
def q_int(k: int) -> QPoly:
    """``[k]_q = 1 + q + ... + q^(k-1)``; ``[0]_q = 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return QPoly([1] * k)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPoly:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ONE
    return q_factorial(k - 1) * q_int(k)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian coefficient; zero outside ``0 <= k <= n``.

    Uses ``[n,k] = [n-1,k-1] + q^k [n-1,k]`` so no division is needed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


@lru_cache(maxsize=None)
def stirling_q(n: int, k: int) -> QPoly:
    """``S_q(n,k)``: q-Stirling number of the second kind (Milne/Gould).

    ``S_q(n,k) = q^(k-1) S_q(n-1,k-1) + [k]_q S_q(n-1,k)`` for ``0 < k <= n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0 and k == 0:
        return ONE
    if not 0 < k <= n:
        return ZERO
    return stirling_q(n - 1, k - 1).shift(k - 1) + q_int(k) * stirling_q(n - 1, k)


@lru_cache(maxsize=None)
def stirling_tilde_q(n: int, k: int) -> QPoly:
    """The companion family with ``S_q(n,k) = q^C(k,2) * stirling_tilde_q(n,k)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0 and k == 0:
        return ONE
    if not 0 < k <= n:
        return ZERO
    return stirling_tilde_q(n - 1, k - 1) + q_int(k) * stirling_tilde_q(n - 1, k)


def wagner_rhs(n: int, k: int) -> QPoly:
    """``sum_j C(n,j) q^(j-k+1) stirling_tilde_q(j, k-1)`` for ``j = 0..n``.

    Equals ``stirling_tilde_q(n+1, k)``.  Raises ``ArithmeticError`` if a
    nonzero summand would need a negative power of ``q``.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    total = ZERO
    for j in range(n + 1):
        s = stirling_tilde_q(j, k - 1)
        if not s:
            continue
        e = j - k + 1
        if e < 0:
            raise ArithmeticError(f"term j={j} has exponent {e} with nonzero coefficient")
        total = total + comb(n, j) * s.shift(e)
    return total


@lru_cache(maxsize=None)
def eulerian_q(n: int, k: int) -> QPoly:
    """q-Eulerian number: ``sum q^MAJ(p)`` over permutations of ``[n]`` with ``k`` descents.

    Carlitz recurrence
    ``A(n,k) = [k+1]_q A(n-1,k) + q^k [n-k]_q A(n-1,k-1)``, ``A(1,0) = 1``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0 or k >= n:
        return ZERO
    if n == 1:
        return ONE
    return (q_int(k + 1) * eulerian_q(n - 1, k)
            + (q_int(n - k) * eulerian_q(n - 1, k - 1)).shift(k))


def zeng_zhang_rhs(n: int, k: int) -> QPoly:
    """``sum_{i=1..k} q^(k(k-i)) [n-i choose k-i]_q A_q(n, i-1)``.

    Equals ``q_factorial(k) * stirling_q(n, k)``.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    total = ZERO
    for i in range(1, k + 1):
        total = total + (q_binomial(n - i, k - i) * eulerian_q(n, i - 1)).shift(k * (k - i))
    return total
