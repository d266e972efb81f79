import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from mahonia.barred import (BarredPermutation, enumerate_barred, parse_barred,
                            theta, theta_inv)
from mahonia.perms import count_vincular, descriptors, enumerate_perms, mahonian
from mahonia.words import (asc_set, coord_total, enumerate_rgf, enumerate_urg,
                           is_urg, marker_sets, pro)


def word(s):
    return tuple(int(c) for c in s)


@pytest.mark.parametrize("text,image", [("3||12", "112"), ("12|3", "221"), ("1|23", "211"),
                                        ("3‖12", "112"), ("123", "111")])
def test_theta_examples(text, image):
    assert theta(parse_barred(text)) == word(image)


@pytest.mark.parametrize("w,text", [("121", "2||13"), ("212", "13||2"), ("111", "123"), ("1111", "1234")])
def test_theta_inv_examples(w, text):
    assert str(theta_inv(word(w))) == text


def test_theta_inv_rejects_non_urg():
    with pytest.raises(ValueError):
        theta_inv((1, 3))


@pytest.mark.parametrize("bad", ["3|12", "12||3", "|12", "12|", "1||"])
def test_parse_barred_rejects(bad):
    with pytest.raises(ValueError):
        parse_barred(bad)


def test_descent_needs_bar():
    with pytest.raises(ValueError):
        BarredPermutation((2, 1), (False,))


def test_enumerate_barred_examples():
    images = {theta(b) for b in enumerate_barred(3, 0, 1)}
    assert {word(s) for s in ("112", "121", "212")} <= images
    assert len(images) == 4  # one per one-descent permutation of S_3
    assert {str(b) for b in enumerate_barred(3, 1, 0)} == {"12|3", "1|23"}
    for n in range(1, 6):
        assert [str(b) for b in enumerate_barred(n, 0, 0)] == ["".join(map(str, range(1, n + 1)))]


@pytest.mark.parametrize("n", range(1, 8))
def test_theta_round_trip(n):
    for w in enumerate_urg(n):
        bp = theta_inv(w)
        assert theta(bp) == w
        assert theta_inv(theta(bp)) == bp
        assert max(w) == sum(bp.bars) + 1


def test_theta_bijective_on_barred_n8():
    n = 8
    seen = set()
    for a in range(n):
        for b in range(n - a):
            for bp in enumerate_barred(n, a, b):
                w = theta(bp)
                assert theta_inv(w) == bp
                seen.add(w)
    assert len(seen) == sum(1 for _ in enumerate_urg(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_id_is_asc_and_last_letter_is_pro(n):
    for a in range(n):
        for b in range(n - a):
            for bp in enumerate_barred(n, a, b):
                w = theta(bp)
                assert descriptors(bp.base).Id == asc_set(w)
                assert bp.base[-1] == pro(w)


@pytest.mark.parametrize("n", range(1, 9))
def test_avoiders_encode_rgfs_with_matching_stats(n):
    images = set()
    for p in enumerate_perms(n, avoid="1_32"):
        w = theta(BarredPermutation.bare(p))
        images.add(w)
        L, _, A = marker_sets(w)
        d = descriptors(p)
        assert (d.Db, d.Id) == (L, A)
        assert mahonian(p, "MAJ") == coord_total(w, "ls")
        assert count_vincular("2_13", p) == coord_total(w, "rs")
        assert mahonian(p, "BAST") == coord_total(w, "vls")
        assert count_vincular("2_31", p) == coord_total(w, "vrs")
        assert p[-1] == pro(w)
    assert images == set(enumerate_rgf(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_disjoint_union_covers_urg(n):
    for k in range(1, n + 1):
        got = Counter(theta(bp) for i in range(1, k + 1) for bp in enumerate_barred(n, k - i, i - 1))
        assert set(got) == set(enumerate_urg(n, k))
        assert all(c == 1 for c in got.values())


@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n)))
def test_theta_inv_then_theta_on_random_words(w):
    w = tuple(w)
    if is_urg(w):
        assert theta(theta_inv(w)) == w
    else:
        with pytest.raises(ValueError):
            theta_inv(w)
