"""
The bijection ``eta`` on URG(n, k) keeping Asc and sending bmajMIL to
bmajBAST.

Through ``theta`` a URG is a barred permutation ``p``.  The base is replaced
by ``q = psi(phi_fhv(p))``, which has the same descent count and inverse
descent set and satisfies ``BAST(q) = MAJ(p)``.  Fixed bars go on the descents
of ``q``; the active bars keep their number of empty ascent slots to their
left.
"""

from __future__ import annotations

from collections.abc import Sequence

from ..barred import BarredPermutation, theta, theta_inv
from ..words import Word, is_urg
from .involutions import phi_fhv, psi

__all__ = ["active_slot_profile", "rebar", "eta", "eta_inv"]


def active_slot_profile(bp: BarredPermutation) -> tuple[int, ...]:
    """``e_j``: unbarred ascent gaps to the left of the ``j``-th active bar."""
    out, empty = [], 0
    for g in range(1, bp.n):
        if bp.is_fixed(g):
            continue
        if bp.bars[g - 1]:
            out.append(empty)
        else:
            empty += 1
    return tuple(out)


def rebar(base: Sequence[int], profile: Sequence[int]) -> BarredPermutation:
    """Bar every descent of ``base`` and put the ``j``-th active bar on the
    ascent gap with ``profile[j]`` empty ascent gaps before it."""
    base = tuple(base)
    n = len(base)
    ascents = [g for g in range(1, n) if base[g - 1] < base[g]]
    bars = [base[g - 1] > base[g] for g in range(1, n)]
    for j, e in enumerate(profile):
        if not 0 <= e + j < len(ascents):
            raise ValueError(f"profile {tuple(profile)} does not fit the ascents of {base}")
        bars[ascents[e + j] - 1] = True
    return BarredPermutation(base, tuple(bars))


def _apply(w: Sequence[int], base_map) -> Word:
    w = tuple(w)
    if not is_urg(w):
        raise ValueError(f"expected a URG, got {w}")
    bp = theta_inv(w)
    return theta(rebar(base_map(bp.base), active_slot_profile(bp)))


def eta(w: Sequence[int]) -> Word:
    """
    >>> eta((1, 2, 1))
    (1, 2, 2)
    """
    return _apply(w, lambda p: psi(phi_fhv(p)))


def eta_inv(u: Sequence[int]) -> Word:
    return _apply(u, lambda q: phi_fhv(psi(q)))
