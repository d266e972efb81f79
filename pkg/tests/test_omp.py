from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mahonia.omp import (OrderedMultisetPartition, compositions, enumerate_omp,
                         enumerate_urg_beta, eta_hat, iota, iota_inv,
                         is_urg_beta, normalize_beta, omp_inv, omp_stats,
                         parse_omp, wilson_maj)
from mahonia.words import coord_total, enumerate_urg

import oracles


def cases(max_size):
    for n in range(1, max_size + 1):
        for beta in compositions(n):
            for k in range(1, n + 1):
                yield beta, k


# construction and parsing

def test_parse_forms():
    m = parse_omp("23|12|1")
    assert m.blocks == ((2, 3), (1, 2), (1,))
    assert parse_omp("2,3|1,2|1") == m
    assert parse_omp("[[3,2],[1,2],[1]]") == m
    assert str(m) == "23|12|1"
    assert parse_omp(m.to_json()) == m
    assert (m.k, m.size, m.weight) == (3, 5, (2, 2, 1))


def test_wide_letters_print_with_commas():
    m = OrderedMultisetPartition(((1, 10), (2,)))
    assert str(m) == "1,10|2"
    assert parse_omp(str(m)) == m


@pytest.mark.parametrize("blocks", [(), ((),), ((1, 1),), ((0,),)])
def test_invalid_partitions(blocks):
    with pytest.raises(ValueError):
        OrderedMultisetPartition(blocks)


def test_normalize_beta():
    assert normalize_beta((0, 2, 0, 1)) == (2, 1)
    with pytest.raises(ValueError):
        normalize_beta((1, -1))


def test_compositions():
    assert set(compositions(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    assert len(list(compositions(5))) == 16
    assert all(sum(c) == 5 and min(c) > 0 for c in compositions(5))


# enumeration and iota

def test_enumerate_examples():
    parts = list(enumerate_omp((1, 1, 1), 2))
    assert len(parts) == 6
    assert {iota(m) for m in parts} == set(enumerate_urg(3, 2))
    assert [str(m) for m in enumerate_omp((0, 0, 1), 1)] == ["1"]
    assert len(list(enumerate_omp((2, 2, 1), 3))) == len(list(enumerate_urg_beta((2, 2, 1), 3)))


@pytest.mark.parametrize("beta,k", list(cases(5)))
def test_enumerate_matches_brute_force(beta, k):
    got = [m.blocks for m in enumerate_omp(beta, k)]
    assert len(got) == len(set(got))
    assert set(got) == oracles.omp_brute(beta, k)


def test_iota_examples():
    assert iota(parse_omp("23|12|1")) == (2, 3, 1, 2, 1)
    assert iota(parse_omp("1|2|3")) == (1, 2, 3)


def test_iota_inv_rejects_outside_family():
    with pytest.raises(ValueError):
        iota_inv((1, 1, 2), (2, 1))
    assert not is_urg_beta((1, 1, 2), (2, 1))
    assert is_urg_beta((1, 2, 1), (2, 1))


@pytest.mark.slow
def test_iota_bijective_up_to_size_7():
    for beta, k in cases(7):
        parts = list(enumerate_omp(beta, k))
        words = {iota(m) for m in parts}
        assert len(words) == len(parts)
        assert words == set(enumerate_urg_beta(beta, k))
        for m in parts:
            assert iota_inv(iota(m), beta) == m


# statistics

def test_wilson_maj_examples():
    assert wilson_maj(parse_omp("124|35|12")) == 5
    assert wilson_maj(parse_omp("23|12|1")) == 1
    assert wilson_maj(parse_omp("1234")) == 0


def test_omp_inv_examples():
    assert omp_inv(parse_omp("23|12|1")) == 5
    assert omp_inv(parse_omp("123")) == 0


def test_omp_stats_examples():
    asc, bmil, _ = omp_stats(parse_omp("23|12|1"))
    assert bmil == 4
    assert omp_stats(parse_omp("1234"))[1] == 0


def test_omp_inv_is_lb_on_set_partitions():
    for n in range(1, 8):
        beta = (1,) * n
        for k in range(1, n + 1):
            for m in enumerate_omp(beta, k):
                assert omp_inv(m) == coord_total(iota(m), "lb")


@pytest.mark.slow
def test_maj_plus_binomial_is_bmajmil():
    for beta, k in cases(7):
        for m in enumerate_omp(beta, k):
            assert wilson_maj(m) + comb(k, 2) == omp_stats(m)[1]


@pytest.mark.parametrize("beta,k", list(cases(6)))
def test_distribution_identities(beta, k):
    parts = list(enumerate_omp(beta, k))
    assert Counter(omp_inv(m) for m in parts) == Counter(wilson_maj(m) for m in parts)
    mil = Counter((omp_stats(m)[0], omp_stats(m)[1]) for m in parts)
    bast = Counter((omp_stats(m)[0], omp_stats(m)[2]) for m in parts)
    assert mil == bast
    shifted = Counter(omp_inv(m) + comb(k, 2) for m in parts)
    assert shifted == Counter(omp_stats(m)[1] for m in parts) == Counter(omp_stats(m)[2] for m in parts)


@pytest.mark.parametrize("beta,k", list(cases(6)))
def test_eta_hat_contract(beta, k):
    parts = list(enumerate_omp(beta, k))
    images = [eta_hat(m) for m in parts]
    assert sorted(images, key=str) == sorted(parts, key=str)
    for m, e in zip(parts, images):
        assert omp_stats(e)[0] == omp_stats(m)[0]
        assert omp_stats(e)[2] == omp_stats(m)[1]


def test_eta_hat_example():
    assert str(eta_hat(parse_omp("23|12|1"))) == "1|23|12"


@settings(max_examples=50)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(1, 4))
def test_enumeration_weight_and_size(beta, k):
    for m in enumerate_omp(beta, k):
        assert m.k == k
        assert m.weight == tuple(beta)
