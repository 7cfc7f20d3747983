from math import comb

import pytest
from hypothesis import given

from isogr.diagrams import Partition, enumerate_partitions, transpose
from isogr.schur import GLRepSum, exterior_of_alt2, exterior_of_sym2, exterior_of_tensor, lr_product
from isogr.weights import gl_dim

from strategies import partitions


def test_lr_examples():
    assert lr_product([1], [1, 1], 3) == {Partition([2, 1]): 1, Partition([1, 1, 1]): 1}
    assert lr_product([], [3, 1], 4) == {Partition([3, 1]): 1}
    assert lr_product([2, 1], [2, 1], 6)[Partition([3, 2, 1])] == 2


def test_lr_truncates_height():
    assert lr_product([1], [1, 1], 2) == {Partition([2, 1]): 1}


def test_lr_rejects_tall_input():
    with pytest.raises(ValueError):
        lr_product([1, 1, 1], [1], 2)


@given(partitions(6, 4), partitions(6, 4))
def test_lr_symmetric_and_height_bounded(lam, mu):
    k = 4
    prod = lr_product(lam, mu, k)
    assert prod == lr_product(mu, lam, k)
    for nu, c in prod:
        assert c > 0
        assert nu.height <= min(lam.height + mu.height, k)
        assert nu.size == lam.size + mu.size


@given(partitions(5, 3), partitions(5, 3))
def test_lr_dimension_identity(lam, mu):
    r = 4
    prod = lr_product(lam, mu, r)
    assert sum(c * gl_dim(nu, r) for nu, c in prod) == gl_dim(lam, r) * gl_dim(mu, r)


def test_glrepsum_json_round_trip():
    s = lr_product([2, 1], [1, 1], 4)
    assert GLRepSum.from_json(s.to_json(), 4) == s


def test_exterior_examples():
    assert exterior_of_tensor(1) == [(Partition([1]), Partition([1]))]
    assert set(exterior_of_tensor(2)) == {(Partition([2]), Partition([1, 1])), (Partition([1, 1]), Partition([2]))}
    assert len(exterior_of_tensor(3)) == 3
    assert exterior_of_sym2(0) == (Partition([]),)
    assert exterior_of_sym2(2) == (Partition([3, 1]),)
    assert set(exterior_of_sym2(3)) == {Partition([3, 3]), Partition([4, 1, 1])}
    assert exterior_of_alt2(0) == (Partition([]),)
    assert exterior_of_alt2(1) == (Partition([1, 1]),)
    assert exterior_of_alt2(2) == (Partition([2, 1, 1]),)


@pytest.mark.parametrize("q", range(0, 6))
@pytest.mark.parametrize("r", range(1, 6))
def test_exterior_dimensions(q, r):
    assert sum(gl_dim(mu, r) for mu in exterior_of_sym2(q)) == comb(r * (r + 1) // 2, q)
    assert sum(gl_dim(mu, r) for mu in exterior_of_alt2(q)) == comb(r * (r - 1) // 2, q)


@pytest.mark.parametrize("q", range(0, 6))
def test_exterior_of_tensor_dimension(q):
    a, b = 3, 4
    total = sum(gl_dim(lam, a) * gl_dim(mu, b) for lam, mu in exterior_of_tensor(q))
    assert total == comb(a * b, q)
    assert all(mu == transpose(lam) for lam, mu in exterior_of_tensor(q))
    assert {lam for lam, _ in exterior_of_tensor(q)} == set(enumerate_partitions(q))
