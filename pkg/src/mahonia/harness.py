"""
Distribution engine, the verification catalog, and the reproduction of the
four-statistic table on S_4(1_32).

Every check is exhaustive over its parameter range.  Objects are visited in
increasing ``n`` and, within one ``n``, in lexicographic order, so the first
failure reported is the minimal counterexample.
"""

from __future__ import annotations

import re
import time
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from math import comb
from typing import Any

from . import omp as _omp
from .bijections import (eta, eta_inv, gamma_sweep, phi_rgf, phi_rgf_inv, psi,
                         shift_up, xi, xi_inv, zeta, zeta_inv)
from .perms import (count_vincular, descriptors, enumerate_perms, format_perm,
                    mahonian)
from .qseries import (QPoly, eulerian_q, q_factorial, stirling_q,
                      stirling_tilde_q, wagner_rhs, zeng_zhang_rhs)
from .words import (asc_set, block_stats, bk, coord_stat, coord_total,
                    enumerate_rgf, enumerate_urg, format_word, marker_sets, pro)

__all__ = [
    "FAMILIES", "WORD_STATS", "PERM_STATS", "OMP_STATS", "stat_names", "evaluate_stat",
    "DistributionRequest", "distribution", "family_objects",
    "VerificationResult", "CATALOG", "catalog_ids", "verify",
    "Table1Row", "table1", "TABLE1_REFERENCE",
]


# statistic registry


def _canon(v: Any) -> Any:
    """Hashable, order-stable form: sets become sorted tuples."""
    if isinstance(v, (set, frozenset)):
        return tuple(sorted(v))
    if isinstance(v, (list, tuple)):
        return tuple(_canon(x) for x in v)
    return v


def _block(name: str) -> Callable:
    return lambda w: getattr(block_stats(w), name)


WORD_STATS: dict[str, Callable] = {
    **{s: (lambda s: lambda w: coord_total(w, s))(s) for s in ("ls", "lb", "rs", "rb", "vls", "vrs")},
    **{f"{s}_vec": (lambda s: lambda w: coord_stat(w, s))(s)
       for s in ("ls", "lb", "rs", "rb", "vls", "vrs")},
    **{s: _block(s) for s in ("MIL", "bMAJ", "bmajMIL", "bndes", "bmajBAST")},
    "bk": bk,
    "pro": pro,
    "L": lambda w: marker_sets(w)[0],
    "R": lambda w: marker_sets(w)[1],
    "Asc": asc_set,
}

PERM_STATS: dict[str, Callable] = {
    "INV": lambda p: mahonian(p, "INV"),
    "MAJ": lambda p: mahonian(p, "MAJ"),
    "STAT": lambda p: mahonian(p, "STAT"),
    "BAST": lambda p: mahonian(p, "BAST"),
    **{s: (lambda s: lambda p: getattr(descriptors(p), s))(s)
       for s in ("des", "ides", "F", "E", "Des", "Db", "Id")},
}

OMP_STATS: dict[str, Callable] = {
    "maj": _omp.wilson_maj,
    "inv": _omp.omp_inv,
    "Asc": lambda mu: _omp.omp_stats(mu)[0],
    "bmajMIL": lambda mu: _omp.omp_stats(mu)[1],
    "bmajBAST": lambda mu: _omp.omp_stats(mu)[2],
    "blocks": lambda mu: mu.k,
    "size": lambda mu: mu.size,
}

_KIND_STATS = {"word": WORD_STATS, "perm": PERM_STATS, "omp": OMP_STATS}
_PATTERN_NAME = re.compile(r"^[1-9]+([_-][1-9]+)*$")


def stat_names(kind: str) -> list[str]:
    names = sorted(_KIND_STATS[kind])
    if kind == "perm":
        names.append("<vincular pattern, e.g. 2_13>")
    return names


def _stat_fn(kind: str, name: str) -> Callable:
    table = _KIND_STATS[kind]
    if name in table:
        return table[name]
    if kind == "perm" and _PATTERN_NAME.match(name):
        return lambda p: count_vincular(name, p)
    raise ValueError(f"unknown {kind} statistic {name!r}; valid: {', '.join(stat_names(kind))}")


def evaluate_stat(kind: str, name: str, obj) -> Any:
    return _canon(_stat_fn(kind, name)(obj))


# distributions


FAMILIES = {
    "RG": "word", "URG": "word", "URG_beta": "word",
    "Sn": "perm", "Sn_des": "perm", "Sn_avoid": "perm",
    "OP": "omp",
}


@dataclass(frozen=True)
class DistributionRequest:
    """One family of objects and the statistics to tabulate over it.

    For the permutation families ``des`` restricts the descent number; when
    only ``k`` is given it means ``k`` blocks, i.e. ``des = k - 1``.
    """

    family: str
    n: int | None = None
    stats: tuple[str, ...] = ()
    k: int | None = None
    beta: tuple[int, ...] | None = None
    pattern: str | None = None
    des: int | None = None

    @property
    def kind(self) -> str:
        return FAMILIES[self.family]


def family_objects(req: DistributionRequest) -> Iterator:
    if req.family not in FAMILIES:
        raise ValueError(f"unknown family {req.family!r}; valid: {', '.join(FAMILIES)}")
    fam = req.family
    if fam in ("URG_beta", "OP"):
        if req.beta is None or req.k is None:
            raise ValueError(f"family {fam} needs beta and k")
        if fam == "OP":
            return _omp.enumerate_omp(req.beta, req.k)
        return _omp.enumerate_urg_beta(req.beta, req.k)
    if req.n is None:
        raise ValueError(f"family {fam} needs n")
    if fam == "RG":
        return enumerate_rgf(req.n, req.k)
    if fam == "URG":
        return enumerate_urg(req.n, req.k)
    des = req.des
    if des is None and req.k is not None:
        des = req.k - 1
    if fam == "Sn_des" and des is None:
        raise ValueError("family Sn_des needs des or k")
    if fam == "Sn_avoid":
        if not req.pattern:
            raise ValueError("family Sn_avoid needs a pattern")
        return enumerate_perms(req.n, des, req.pattern)
    return enumerate_perms(req.n, des)


def distribution(req: DistributionRequest) -> QPoly | Counter:
    """``sum q^stat`` as a QPoly for a single integer statistic; otherwise a
    Counter over canonical value tuples."""
    if not req.stats:
        raise ValueError("at least one statistic is required")
    fns = [_stat_fn(req.kind, s) for s in req.stats]
    objs = family_objects(req)
    if len(fns) == 1:
        values = Counter(_canon(fns[0](o)) for o in objs)
        if all(isinstance(v, int) and v >= 0 for v in values):
            return QPoly.from_exponents(values)
        return Counter({(v,): c for v, c in values.items()})
    return Counter(tuple(_canon(f(o)) for f in fns) for o in objs)


# verification catalog


@dataclass(frozen=True)
class VerificationResult:
    id: str
    range: str
    passed: bool
    counterexample: dict | None = None
    millis: float = 0.0
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        out: dict[str, Any] = {"id": self.id, "range": self.range, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["millis"] = round(self.millis, 3)
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


@dataclass(frozen=True)
class _Check:
    id: str
    summary: str
    default_n: int
    run: Callable[[int, list[str]], dict | None]
    min_n: int = 1
    fixed_range: str | None = None


CATALOG: dict[str, _Check] = {}


def _check(cid: str, default_n: int, summary: str, **kw):
    def deco(fn):
        CATALOG[cid] = _Check(cid, summary, default_n, fn, **kw)
        return fn
    return deco


def catalog_ids() -> list[str]:
    return list(CATALOG)


def verify(theorem_id: str, max_n: int | None = None) -> VerificationResult:
    try:
        chk = CATALOG[theorem_id]
    except KeyError:
        raise ValueError(f"unknown check {theorem_id!r}; valid: {', '.join(CATALOG)}") from None
    n = chk.default_n if max_n is None else max_n
    if n < chk.min_n:
        raise ValueError(f"{theorem_id} needs max_n >= {chk.min_n}")
    warnings: list[str] = []
    t0 = time.perf_counter()
    cex = chk.run(n, warnings)
    millis = (time.perf_counter() - t0) * 1000
    rng = chk.fixed_range or f"n<={n}"
    return VerificationResult(theorem_id, rng, cex is None, cex, millis, tuple(warnings))


def _w(w) -> str:
    return format_word(w, compact=True)


def _p(p) -> str:
    return format_perm(p)


def _poly_cex(cell: dict, **polys: QPoly) -> dict:
    return {**cell, **{k: str(v) for k, v in polys.items()}}


def _dist(objs: Iterable, f: Callable) -> QPoly:
    return QPoly.from_exponents(f(o) for o in objs)


def _cells(max_n: int) -> Iterator[tuple[int, int]]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield n, k


def _rg_distributions(max_n: int, targets: dict[str, Callable[[int, int], QPoly]]) -> dict | None:
    for n, k in _cells(max_n):
        words = list(enumerate_rgf(n, k))
        for stat, target in targets.items():
            got = _dist(words, lambda w: coord_total(w, stat))
            want = target(n, k)
            if got != want:
                return _poly_cex({"n": n, "k": k, "stat": stat}, got=got, expected=want)
    return None


@_check("thm-1.1", 9, "ls and rb give S_q(n,k); lb and rs give the tilde version, over RG(n,k)")
def _coordinate_stirling(max_n, warn):
    return _rg_distributions(max_n, {"ls": stirling_q, "rb": stirling_q,
                                     "lb": stirling_tilde_q, "rs": stirling_tilde_q})


@_check("thm-1.2", 9, "vls gives S_q(n,k) and vrs the tilde version, over RG(n,k)")
def _variant_stirling(max_n, warn):
    return _rg_distributions(max_n, {"vls": stirling_q, "vrs": stirling_tilde_q})


def _bijection_check(max_n, fwd, back, contract) -> dict | None:
    """Round trip, injectivity and a per-word contract on all of RG(n)."""
    for n in range(1, max_n + 1):
        images = set()
        for w in enumerate_rgf(n):
            u = fwd(w)
            if back(u) != w:
                return {"n": n, "word": _w(w), "image": _w(u), "failure": "round trip"}
            bad = contract(w, u)
            if bad:
                return {"n": n, "word": _w(w), "image": _w(u), "failure": bad}
            images.add(u)
        count = sum(1 for _ in enumerate_rgf(n))
        if len(images) != count:
            return {"n": n, "failure": f"image has {len(images)} words, expected {count}"}
    return None


def _same_marks(w, u) -> str | None:
    if marker_sets(w)[0] != marker_sets(u)[0]:
        return "L not preserved"
    if asc_set(w) != asc_set(u):
        return "Asc not preserved"
    return None


@_check("thm-1.3", 9, "xi preserves L and Asc and carries vls to ls, bijectively on RG(n)")
def _xi_contract(max_n, warn):
    def contract(w, u):
        if coord_total(w, "vls") != coord_total(u, "ls"):
            return "vls(w) != ls(xi(w))"
        return _same_marks(w, u)
    return _bijection_check(max_n, xi, xi_inv, contract)


@_check("thm-1.4", 9, "zeta preserves L and Asc and carries vrs to rs, bijectively on RG(n)")
def _zeta_contract(max_n, warn):
    def contract(w, u):
        if coord_total(w, "vrs") != coord_total(u, "rs"):
            return "vrs(w) != rs(zeta(w))"
        return _same_marks(w, u)
    return _bijection_check(max_n, zeta, zeta_inv, contract)


@_check("thm-5.1-strong", 9,
        "vrs vector of w equals rs vector of zeta(w); phi keeps L; every sweep swap keeps L and vrs vector")
def _vector_transfer(max_n, warn):
    for n in range(1, max_n + 1):
        for w in enumerate_rgf(n):
            v = phi_rgf(w)
            if phi_rgf_inv(v) != w:
                return {"n": n, "word": _w(w), "failure": "phi round trip"}
            if marker_sets(v)[0] != marker_sets(w)[0]:
                return {"n": n, "word": _w(w), "failure": "phi changes L"}
            if coord_stat(w, "vrs") != coord_stat(v, "rs"):
                return {"n": n, "word": _w(w), "failure": "vrs vector != rs vector of phi"}
            u, trace = gamma_sweep(w)
            target = (marker_sets(w)[0], coord_stat(w, "vrs"))
            for r in trace.rounds:
                if (marker_sets(r.word)[0], coord_stat(r.word, "vrs")) != target:
                    return {"n": n, "word": _w(w), "round": r.index,
                            "failure": "sweep round changes L or vrs vector"}
            z = phi_rgf(u)
            if coord_stat(z, "rs") != coord_stat(w, "vrs") or _same_marks(w, z):
                return {"n": n, "word": _w(w), "failure": "zeta breaks (L, Asc, vector) transfer"}
    return None


def _avoiders(n: int, k: int, pattern: str = "1_32") -> list:
    return list(enumerate_perms(n, k - 1, pattern))


@_check("cor-1.5", 8, "MAJ, BAST give S_q(n,k) and 2_13, 2_31 the tilde version over S_n^{k-1}(1_32)")
def _avoider_distributions(max_n, warn):
    targets = {"MAJ": stirling_q, "BAST": stirling_q, "2_13": stirling_tilde_q, "2_31": stirling_tilde_q}
    for n, k in _cells(max_n):
        perms = _avoiders(n, k)
        for stat, target in targets.items():
            f = PERM_STATS.get(stat) or (lambda p, s=stat: count_vincular(s, p))
            got, want = _dist(perms, f), target(n, k)
            if got != want:
                return _poly_cex({"n": n, "k": k, "stat": stat}, got=got, expected=want)
    return None


def _joint_avoiders(max_n: int, a: Callable, b: Callable) -> dict | None:
    for n, k in _cells(max_n):
        perms = _avoiders(n, k)

        def key(p, f):
            d = descriptors(p)
            return (tuple(sorted(d.Db)), tuple(sorted(d.Id)), f(p))
        left = Counter(key(p, a) for p in perms)
        right = Counter(key(p, b) for p in perms)
        if left != right:
            diff = sorted((left - right) | (right - left))[0]
            return {"n": n, "k": k, "triple": list(diff), "left": left[diff], "right": right[diff]}
    return None


@_check("cor-1.6", 8, "(Db, Id, MAJ) and (Db, Id, BAST) agree as multisets over S_n^{k-1}(1_32)")
def _avoider_maj_bast(max_n, warn):
    return _joint_avoiders(max_n, PERM_STATS["MAJ"], PERM_STATS["BAST"])


@_check("cor-1.7", 8, "(Db, Id, 2_13) and (Db, Id, 2_31) agree as multisets over S_n^{k-1}(1_32)")
def _avoider_213_231(max_n, warn):
    return _joint_avoiders(max_n, lambda p: count_vincular("2_13", p),
                           lambda p: count_vincular("2_31", p))


@_check("thm-1.8", 7, "bmajMIL and bmajBAST both give [k]_q! S_q(n,k) over URG(n,k)")
def _euler_mahonian(max_n, warn):
    for n, k in _cells(max_n):
        words = list(enumerate_urg(n, k))
        want = q_factorial(k) * stirling_q(n, k)
        for stat in ("bmajMIL", "bmajBAST"):
            got = _dist(words, WORD_STATS[stat])
            if got != want:
                return _poly_cex({"n": n, "k": k, "stat": stat}, got=got, expected=want)
    return None


@_check("eq-2.1", 9, "vls_i + vrs_i = ls_i + rs_i at every position of every RGF")
def _vls_vrs_sum(max_n, warn):
    for n in range(1, max_n + 1):
        for w in enumerate_rgf(n):
            a = [x + y for x, y in zip(coord_stat(w, "vls"), coord_stat(w, "vrs"))]
            b = [x + y for x, y in zip(coord_stat(w, "ls"), coord_stat(w, "rs"))]
            if a != b:
                i = next(i for i in range(n) if a[i] != b[i]) + 1
                return {"n": n, "word": _w(w), "position": i}
    return None


@_check("eq-2.2", 9, "ls - vls = n - pro - bk + 1 on every RGF")
def _ls_vls_gap(max_n, warn):
    for n in range(1, max_n + 1):
        for w in enumerate_rgf(n):
            if coord_total(w, "ls") - coord_total(w, "vls") != n - pro(w) - bk(w) + 1:
                return {"n": n, "word": _w(w)}
    return None


@_check("eq-2.3", 8, "MAJ - BAST = n - p_n - des = 2_31 - 2_13 on S_n")
def _maj_bast_gap(max_n, warn):
    for n in range(1, max_n + 1):
        for p in enumerate_perms(n):
            d = mahonian(p, "MAJ") - mahonian(p, "BAST")
            if not d == n - p[-1] - descriptors(p).des == count_vincular("2_31", p) - count_vincular("2_13", p):
                return {"n": n, "perm": _p(p)}
    return None


@_check("eq-2.4", 8, "MAJ and BAST are equidistributed on S_n^k for each k")
def _maj_bast_by_des(max_n, warn):
    for n in range(1, max_n + 1):
        for k in range(n):
            perms = list(enumerate_perms(n, k))
            a, b = _dist(perms, PERM_STATS["MAJ"]), _dist(perms, PERM_STATS["BAST"])
            if a != b:
                return _poly_cex({"n": n, "des": k}, MAJ=a, BAST=b)
    return None


@_check("wagner-3.1", 9, "the binomial recurrence for the tilde q-Stirling numbers, against enumeration of lb")
def _wagner_recurrence(max_n, warn):
    for n in range(1, max_n):
        for k in range(1, n + 1):
            rhs = wagner_rhs(n, k)
            rec = stirling_tilde_q(n + 1, k)
            enum = _dist(enumerate_rgf(n + 1, k), lambda w: coord_total(w, "lb"))
            if not rhs == rec == enum:
                return _poly_cex({"n": n, "k": k}, rhs=rhs, recurrence=rec, enumerated=enum)
    return None


@_check("zz-7.1", 8, "[k]_q! S_q(n,k) = sum_i q^{k(k-i)} qbinom(n-i,k-i) A_q(n,i-1); A_q checked by enumeration")
def _zeng_zhang(max_n, warn):
    for n in range(1, max_n + 1):
        by_des: dict[int, Counter] = {}
        for p in enumerate_perms(n):
            by_des.setdefault(descriptors(p).des, Counter())[mahonian(p, "MAJ")] += 1
        for i in range(n):
            got = QPoly.from_exponents(by_des.get(i, {}))
            if got != eulerian_q(n, i):
                return _poly_cex({"n": n, "des": i, "what": "q-Eulerian"}, enumerated=got,
                                 recurrence=eulerian_q(n, i))
        for k in range(1, n + 1):
            lhs, rhs = q_factorial(k) * stirling_q(n, k), zeng_zhang_rhs(n, k)
            if lhs != rhs:
                return _poly_cex({"n": n, "k": k}, lhs=lhs, rhs=rhs)
    return None


def _sextuple(p, a: str, b: str) -> tuple:
    d = descriptors(p)
    return (d.F, d.E, d.des, tuple(sorted(d.Id)), mahonian(p, a), mahonian(p, b))


@_check("thm-6.1", 7, "psi is an involution exchanging STAT and BAST while fixing F, E, des, Id; "
                      "the sextuple multisets also agree directly")
def _psi_contract(max_n, warn):
    for n in range(1, max_n + 1):
        left: Counter = Counter()
        right: Counter = Counter()
        for p in enumerate_perms(n):
            q = psi(p)
            if psi(q) != p:
                return {"n": n, "perm": _p(p), "image": _p(q), "failure": "psi not an involution"}
            if _sextuple(p, "STAT", "BAST") != _sextuple(q, "BAST", "STAT"):
                return {"n": n, "perm": _p(p), "image": _p(q), "failure": "sextuple not exchanged"}
            left[_sextuple(p, "STAT", "BAST")] += 1
            right[_sextuple(p, "BAST", "STAT")] += 1
        if left != right:
            return {"n": n, "failure": "sextuple multisets differ"}
    return None


@_check("lemma-6.4", 8, "for p_1 > p_n the shift keeps des and raises MAJ by p_n - 1; psi keeps des")
def _shift_des_maj(max_n, warn):
    for n in range(1, max_n + 1):
        for p in enumerate_perms(n):
            d = descriptors(p).des
            if p[0] > p[-1]:
                u = shift_up(p)
                if descriptors(u).des != d or mahonian(u, "MAJ") != mahonian(p, "MAJ") + p[-1] - 1:
                    return {"n": n, "perm": _p(p), "failure": "shift changes des or MAJ wrongly"}
            if descriptors(psi(p)).des != d:
                return {"n": n, "perm": _p(p), "failure": "psi changes des"}
    return None


@_check("lemma-6.5", 8, "for p_1 > p_n the shift keeps STAT")
def _shift_stat(max_n, warn):
    for n in range(1, max_n + 1):
        for p in enumerate_perms(n):
            if p[0] > p[-1] and mahonian(shift_up(p), "STAT") != mahonian(p, "STAT"):
                return {"n": n, "perm": _p(p)}
    return None


@_check("lemma-6.6", 8, "psi keeps Id (and F, E)")
def _psi_keeps_id(max_n, warn):
    for n in range(1, max_n + 1):
        for p in enumerate_perms(n):
            a, b = descriptors(p), descriptors(psi(p))
            if (a.Id, a.F, a.E) != (b.Id, b.F, b.E):
                return {"n": n, "perm": _p(p), "image": _p(psi(p))}
    return None


@_check("thm-7.3", 7, "eta is a bijection on URG(n,k) keeping Asc and sending bmajMIL to bmajBAST")
def _eta_contract(max_n, warn):
    for n, k in _cells(max_n):
        words = list(enumerate_urg(n, k))
        images = set()
        for w in words:
            u = eta(w)
            if eta_inv(u) != w:
                return {"n": n, "k": k, "word": _w(w), "image": _w(u), "failure": "round trip"}
            if asc_set(u) != asc_set(w):
                return {"n": n, "k": k, "word": _w(w), "image": _w(u), "failure": "Asc changed"}
            if block_stats(w).bmajMIL != block_stats(u).bmajBAST:
                return {"n": n, "k": k, "word": _w(w), "image": _w(u),
                        "failure": "bmajMIL(w) != bmajBAST(eta(w))"}
            images.add(u)
        if len(images) != len(words):
            return {"n": n, "k": k, "failure": "eta not injective"}
    return None


def _op_cells(max_n: int) -> Iterator[tuple[int, tuple[int, ...], int, list]]:
    for n in range(1, max_n + 1):
        for beta in sorted(_omp.compositions(n)):
            for k in range(1, n + 1):
                parts = sorted(_omp.enumerate_omp(beta, k), key=lambda m: m.blocks)
                yield n, beta, k, parts


def _beta_cell(n, beta, k, **extra) -> dict:
    return {"n": n, "beta": list(beta), "k": k, **extra}


@_check("thm-7.4", 6, "(Asc, bmajMIL) and (Asc, bmajBAST) agree over OP(beta,k); eta-hat is a bijection transferring them")
def _op_joint(max_n, warn):
    for n, beta, k, parts in _op_cells(max_n):
        left: Counter = Counter()
        right: Counter = Counter()
        images = set()
        for mu in parts:
            asc, mil, bast = _omp.omp_stats(mu)
            left[(tuple(sorted(asc)), mil)] += 1
            right[(tuple(sorted(asc)), bast)] += 1
            nu = _omp.eta_hat(mu)
            nasc, _, nbast = _omp.omp_stats(nu)
            if nasc != asc or nbast != mil:
                return _beta_cell(n, beta, k, omp=str(mu), image=str(nu), failure="eta-hat transfer")
            images.add(nu)
        if len(images) != len(parts):
            return _beta_cell(n, beta, k, failure="eta-hat not injective")
        if left != right:
            return _beta_cell(n, beta, k, failure="joint multisets differ")
    return None


@_check("thm-7.5", 6, "inv and maj are equidistributed over OP(beta,k)")
def _wilson_inv_maj(max_n, warn):
    for n, beta, k, parts in _op_cells(max_n):
        a, b = _dist(parts, _omp.omp_inv), _dist(parts, _omp.wilson_maj)
        if a != b:
            return _poly_cex(_beta_cell(n, beta, k), inv=a, maj=b)
    return None


@_check("prop-7.6", 6, "maj + C(k,2) = bmajMIL pointwise on OP(beta,k)")
def _maj_vs_bmajmil(max_n, warn):
    for n, beta, k, parts in _op_cells(max_n):
        for mu in parts:
            if _omp.wilson_maj(mu) + comb(k, 2) != _omp.omp_stats(mu)[1]:
                return _beta_cell(n, beta, k, omp=str(mu))
    return None


@_check("thm-1.10", 6, "q^C(k+1,2) sum q^inv = sum q^bmajMIL = sum q^bmajBAST over OP(beta,k+1), each composition beta")
def _op_chain(max_n, warn):
    for n, beta, k1, parts in _op_cells(max_n):
        k = k1 - 1
        inv = _dist(parts, _omp.omp_inv).shift(comb(k + 1, 2))
        mil = _dist(parts, lambda m: _omp.omp_stats(m)[1])
        bast = _dist(parts, lambda m: _omp.omp_stats(m)[2])
        if not inv == mil == bast:
            return _poly_cex(_beta_cell(n, beta, k1), shifted_inv=inv, bmajMIL=mil, bmajBAST=bast)
    return None


@_check("eq-8.1", 8, "MAJ over S_n^{k-1}(1_32) equals STAT over S_n^{k-1}(21_3)")
def _maj_vs_stat_avoiders(max_n, warn):
    for n, k in _cells(max_n):
        a = _dist(_avoiders(n, k), PERM_STATS["MAJ"])
        b = _dist(_avoiders(n, k, "21_3"), PERM_STATS["STAT"])
        if a != b:
            return _poly_cex({"n": n, "k": k}, MAJ=a, STAT=b)
    return None


# the table on S_4(1_32)


@dataclass(frozen=True)
class Table1Row:
    perm: tuple[int, ...]
    Db: frozenset[int]
    Id: frozenset[int]
    MAJ: int
    BAST: int

    def to_dict(self) -> dict:
        return {"perm": _p(self.perm), "Db": sorted(self.Db), "Id": sorted(self.Id),
                "MAJ": self.MAJ, "BAST": self.BAST}


def table1() -> list[Table1Row]:
    """S_4(1_32) ordered by first letter, then descent number, then lexicographically."""
    perms = sorted(enumerate_perms(4, avoid="1_32"),
                   key=lambda p: (p[0], descriptors(p).des, p))
    rows = []
    for p in perms:
        d = descriptors(p)
        rows.append(Table1Row(p, d.Db, d.Id, mahonian(p, "MAJ"), mahonian(p, "BAST")))
    return rows


# reference values: permutation, Db, Id, MAJ, BAST
TABLE1_REFERENCE: tuple[tuple[str, tuple[int, ...], tuple[int, ...], int, int], ...] = (
    ("1234", (1,), (), 0, 0),
    ("2134", (1, 2), (1,), 1, 2),
    ("2314", (1, 2), (1,), 2, 3),
    ("2341", (1, 2), (1,), 3, 1),
    ("2413", (1, 2), (1, 3), 2, 2),
    ("3124", (1, 3), (2,), 1, 2),
    ("3412", (1, 3), (2,), 2, 1),
    ("3214", (1, 2, 3), (1, 2), 3, 5),
    ("3241", (1, 2, 3), (1, 2), 4, 3),
    ("3421", (1, 2, 3), (1, 2), 5, 4),
    ("4123", (1, 4), (3,), 1, 1),
    ("4213", (1, 2, 4), (1, 3), 3, 4),
    ("4231", (1, 2, 4), (1, 3), 4, 3),
    ("4312", (1, 3, 4), (2, 3), 3, 3),
    ("4321", (1, 2, 3, 4), (1, 2, 3), 6, 6),
)


def _row_tuple(r: Table1Row) -> tuple:
    return (_p(r.perm), tuple(sorted(r.Db)), tuple(sorted(r.Id)), r.MAJ, r.BAST)


@_check("table-1", 4, "the four-statistic table on S_4(1_32), row by row", fixed_range="n=4")
def _table_rows(max_n, warn):
    rows = [_row_tuple(r) for r in table1()]
    if len(rows) != len(TABLE1_REFERENCE):
        return {"failure": f"{len(rows)} rows, expected {len(TABLE1_REFERENCE)}"}
    for got, want in zip(rows, TABLE1_REFERENCE):
        if got != want:
            return {"row": want[0], "got": list(got), "expected": list(want)}
    return None


@_check("neg-maj-bast-pairs", 4, "(MAJ, BAST) and (BAST, MAJ) are NOT equidistributed on S_4(1_32)",
        fixed_range="n=4")
def _neg_pairs(max_n, warn):
    perms = list(enumerate_perms(4, avoid="1_32"))
    a = Counter((mahonian(p, "MAJ"), mahonian(p, "BAST")) for p in perms)
    b = Counter((mahonian(p, "BAST"), mahonian(p, "MAJ")) for p in perms)
    if a == b:
        return {"failure": "pair multisets coincide on S_4(1_32)"}
    return None


@_check("neg-psi-closure", 4, "psi does not map S_4(1_32) into itself (witness 4312 -> 4132)",
        fixed_range="n=4")
def _neg_psi(max_n, warn):
    avoiders = set(enumerate_perms(4, avoid="1_32"))
    escapes = sorted(p for p in avoiders if psi(p) not in avoiders)
    image = psi((4, 3, 1, 2))
    if image != (4, 1, 3, 2):
        warn.append(f"psi(4312) = {_p(image)} with the constructed phi; the expected image is 4132")
    if not escapes:
        warn.append("psi maps S_4(1_32) into itself under the constructed phi")
    return None
