"""
Shift operators, an involution ``phi_fhv`` exchanging MAJ and STAT on each
rearrangement class of distinct-letter words, and the involution ``psi`` on
permutations that exchanges STAT and BAST while fixing F, E, des and Id.

``phi_fhv`` is realized by matching rather than by an explicit local rule:
permutations of ``[m]`` are grouped on ``(F, des, Id, MAJ, STAT)``; the group
keyed ``(f, d, I, a, b)`` is paired with ``(f, d, I, b, a)`` member by member
in lexicographic order.  This is an involution with exactly the required
statistic exchange whenever paired groups have equal sizes, which is checked
when the table is built.  Distinct-letter words are handled through their
standardization.
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Sequence
from dataclasses import dataclass

from ..perms import Perm, descriptors, mahonian, standardize

__all__ = [
    "shift_up", "shift_down", "prefix", "fhv_key", "fhv_table", "phi_fhv",
    "PsiStep", "psi", "psi_traced",
]


def shift_up(w: Sequence[int]) -> tuple[int, ...]:
    """Add ``n`` to every letter smaller than the last letter.

    >>> shift_up((3, 1, 2))
    (3, 4, 2)
    """
    n = len(w)
    last = w[-1]
    return tuple(x + n if x < last else x for x in w)


def shift_down(w: Sequence[int]) -> tuple[int, ...]:
    n = len(w)
    return tuple(x - n if x > n else x for x in w)


def prefix(w: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple(w[:i])


def fhv_key(p: Sequence[int]) -> tuple:
    d = descriptors(p)
    return (standardize(p)[0], d.des, tuple(sorted(d.Id)),
            mahonian(p, "MAJ"), mahonian(p, "STAT"))


_tables: dict[int, dict[Perm, Perm]] = {}
_lock = threading.Lock()


def fhv_table(m: int) -> dict[Perm, Perm]:
    """The involution on S_m as a dict; built once per ``m``."""
    table = _tables.get(m)
    if table is not None:
        return table
    with _lock:
        table = _tables.get(m)
        if table is None:
            table = _build(m)
            _tables[m] = table
    return table


def _build(m: int) -> dict[Perm, Perm]:
    groups: dict[tuple, list[Perm]] = {}
    for p in itertools.permutations(range(1, m + 1)):
        groups.setdefault(fhv_key(p), []).append(p)
    table: dict[Perm, Perm] = {}
    for key, members in groups.items():
        f, d, ids, a, b = key
        partner = groups.get((f, d, ids, b, a), [])
        if len(partner) != len(members):
            raise AssertionError(
                f"S_{m}: class {key} has {len(members)} members but its swap has "
                f"{len(partner)}; no MAJ/STAT exchanging involution exists")
        for p, q in zip(members, partner):  # both already in lexicographic order
            table[p] = q
    return table


def phi_fhv(v: Sequence[int]) -> tuple[int, ...]:
    """Involution on the rearrangement class of ``v`` (distinct letters) with
    ``(F, des, Id, MAJ, STAT) v = (F, des, Id, STAT, MAJ) phi_fhv(v)``."""
    v = tuple(v)
    if not v:
        return v
    s = standardize(v)
    letters = sorted(v)
    image = fhv_table(len(v))[s]
    return tuple(letters[x - 1] for x in image)


@dataclass(frozen=True)
class PsiStep:
    input: tuple[int, ...]
    reversed: bool
    shifted: tuple[int, ...] = ()
    phi_prefix: tuple[int, ...] = ()
    output: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"input": list(self.input), "reversed": self.reversed,
                "shift_up": list(self.shifted), "phi_of_prefix": list(self.phi_prefix),
                "output": list(self.output)}


def psi_traced(p: Sequence[int]) -> tuple[Perm, list[PsiStep]]:
    p = tuple(p)
    n = len(p)
    if n == 1:
        return p, [PsiStep(p, False, output=p)]
    if p[0] < p[-1]:
        inner, steps = psi_traced(p[::-1])
        out = inner[::-1]
        return out, [PsiStep(p, True, output=out)] + steps
    up = shift_up(p)
    head = phi_fhv(up[:-1])
    joined = head + (p[-1],)
    out = shift_down(joined)
    # the shifted image must again be a shift_up of some permutation
    if sorted(out) != list(range(1, n + 1)) or shift_up(out) != joined:
        raise AssertionError(f"psi: {joined} is not in the image of shift_up")
    return out, [PsiStep(p, False, up, head, out)]


def psi(p: Sequence[int]) -> Perm:
    """
    >>> psi((4, 3, 1, 2))
    (4, 1, 3, 2)
    """
    return psi_traced(p)[0]
