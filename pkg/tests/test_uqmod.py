import pytest
from hypothesis import given
from hypothesis import strategies as st

from krkit.qnum import ONE, ZERO, qbinom, qint, qs_pow
from krkit.uqmod import (a1_kr_fixture, check_admissible, kashiwara, rank2_module, run_suite,
                         shapovalov, sl2_irrep, tensor, tensor_pairing, verify_a1kr)
from krkit.uqmod.a1kr import string_gram
from krkit.uqmod.forms import PairingForm
from krkit.uqmod.linalg import SparseMatrix, is_positive_definite
from krkit.uqmod.rep import DimensionError, basis_vector, highest_weight_vectors


@pytest.mark.parametrize("name", ["commutation", "pairing", "braid", "a1kr"])
def test_module_suites_pass(name):
    res = run_suite(name)
    assert res.passed, {k: o.counterexamples[:2] for k, o in res.items() if not o.passed}
    assert all(o.checked > 0 for o in res.values())


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


@pytest.mark.parametrize("tag,hw,dim", [
    ("A2", (1, 0), 3), ("A2", (0, 1), 3), ("A2", (1, 1), 8), ("A2", (2, 1), 15),
    ("A2", (3, 0), 10), ("C2", (1, 0), 4), ("C2", (0, 1), 5), ("C2", (1, 1), 16),
])
def test_rank2_dimensions(tag, hw, dim):
    M = rank2_module(tag, hw)
    assert M.dim == dim
    assert len(highest_weight_vectors(M, tuple(hw))) == 1


def test_rank2_rejects_bad_weights():
    with pytest.raises((ValueError, DimensionError)):
        rank2_module("A2", (-1, 0))
    with pytest.raises((ValueError, DimensionError)):
        rank2_module("A2", (1, 0, 0))


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 3))
def test_sl2_divided_power_formulas(n, k, m):
    M = sl2_irrep(n)
    if k > n:
        return
    v = basis_vector(k)
    up = M.e(1, m).apply(v)
    down = M.f(1, m).apply(v)
    want_up = qbinom(n - k + m, m) if k - m >= 0 else ZERO
    want_down = qbinom(k + m, m) if k + m <= n else ZERO
    assert up.get(k - m, ZERO) == want_up
    assert down.get(k + m, ZERO) == want_down


@pytest.mark.parametrize("n", range(6))
def test_sl2_string_norms(n):
    # ||f^(k) v||^2 = q^{k(n-k)} [n, k], a hand derivation from the adjunction
    F = shapovalov(sl2_irrep(n))
    for k in range(n + 1):
        assert F.entry(k, k) == qs_pow(k * (n - k)) * qbinom(n, k)


def test_shapovalov_admissible_and_positive():
    for hw in ((1, 0), (1, 1)):
        F = shapovalov(rank2_module("A2", hw))
        assert check_admissible(F, 2).passed
        assert F.is_symmetric()
        assert is_positive_definite(F.dense())


def test_broken_form_is_detected():
    M = sl2_irrep(2)
    F = shapovalov(M)
    bad = F.gram + SparseMatrix.from_entries(3, 3, [(1, 1, ONE)])
    assert not check_admissible(PairingForm(M, M, bad), 2).passed


def test_tensor_coproduct():
    V = sl2_irrep(1)
    W = tensor(V, V)
    assert W.dim == 4
    assert len(highest_weight_vectors(W, (2,))) == 1
    assert len(highest_weight_vectors(W, (0,))) == 1
    P = tensor_pairing(shapovalov(V), shapovalov(V))
    assert check_admissible(P, 2).passed


def test_kashiwara_operators_on_strings():
    M = sl2_irrep(4)
    assert kashiwara(M, 1, "f", basis_vector(1)) == basis_vector(2)
    assert kashiwara(M, 1, "e", basis_vector(0)) == {}
    assert kashiwara(M, 1, "f", basis_vector(4)) == {}


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_a1kr_fixture(ell):
    fx = a1_kr_fixture(ell)
    assert fx.module.dim == ell + 1
    assert fx.gram[0][0] == ONE
    # restricted to the f_1-string it is the Shapovalov form of V(l)
    S = shapovalov(sl2_irrep(ell))
    G = string_gram(fx)
    assert all(G[k][l] == S.entry(k, l) for k in range(ell + 1) for l in range(ell + 1))


def test_a1kr_level_two_gram():
    fx = a1_kr_fixture(2)
    assert [fx.gram[k][k] for k in range(3)] == [ONE, qs_pow(2) + ONE, qint(2) * qint(2)]


def test_a1kr_bounds():
    with pytest.raises(ValueError):
        a1_kr_fixture(0)
    assert verify_a1kr((1,)).passed


def test_sl2_small_identities():
    M = sl2_irrep(2)
    v = basis_vector(0)
    assert M.e(1, 2).apply(M.f(1, 2).apply(v)) == v
    Z = sl2_irrep(0)
    assert Z.e(1).is_zero() and Z.f(1).is_zero()
    assert a1_kr_fixture(1).module.dim == 2
