import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from krkit import cartan as C
from krkit import mcoeff as M

vec5 = st.tuples(*[st.integers(0, 3)] * 5)


@given(st.sampled_from(C.TYPES), vec5, vec5, st.integers(1, 3))
def test_closed_formula_matches_letter_oracle(tag, p1, p2, ell):
    cd = C.build(tag)
    assert M.m_pair(p1, p2, ell) == M.coproduct_oracle(p1, p2, ell, cd, check_weight=True)


def test_grid_matches_pointwise():
    G = M.grid(1)
    grid = M.m_grid(G, G, 2)
    for a in (0, 5, 17, 31):
        for b in (0, 3, 30):
            assert grid[a, b] == M.m_pair(tuple(G[a]), tuple(G[b]), 2)


@pytest.mark.parametrize("tag", C.TYPES)
def test_oracle_grid(tag):
    rep = M.verify_oracle(C.build(tag), bound=1, ells=(1, 2))
    assert rep.oracle_checked == 2 * 32 * 32 and rep.oracle_violations == 0


def test_identities_small_grid():
    rep = M.verify_identities(bound=2, ells=(1, 2))
    assert rep.passed
    assert set(rep.checked) == set(M.IDENTITIES)
    assert all(n > 0 for n in rep.checked.values())


def test_identities_detect_a_broken_formula(monkeypatch):
    # perturb one coefficient; the suite must notice
    broken = M.M_MATRIX.copy()
    broken[0, 0] += 1
    monkeypatch.setattr(M, "M_MATRIX", broken)
    assert not M.verify_identities(bound=2, ells=(1,)).passed


def test_bound_validation():
    with pytest.raises(ValueError):
        M.verify_identities(bound=1)


def test_grid_shape():
    assert M.grid(2).shape == (243, 5)
    assert np.all(M.grid(2).max(axis=0) == 2)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_small_values(ell):
    e1, e5 = M.eps(1), M.eps(5)
    assert M.m_pair(e1, e1, ell) == 3 * ell - 1
    assert M.m_pair(e5, e5, ell) == -1
    assert M.x_of((0,) * 5, ell) == -ell
    assert M.x_of(M.A_VEC, ell) == 2 - ell
    assert M.coproduct_oracle(e1, e1, ell, C.build("E8a1")) == 3 * ell - 1
    assert all(M.m_pair((0,) * 5, p, ell) == 0 for p in [(1, 2, 0, 1, 3), (4, 4, 4, 4, 4)])
