import pytest
from hypothesis import given, settings, strategies as st
from math import gcd

from torusmotive.assembly import m_irr, m_irr_for_config, r_irr, r_kappa_motive, warm_cache
from torusmotive.eigcfg import EigenConfig
from torusmotive.errors import NotCoprime, UnsupportedRank
from torusmotive.qpoly import ONE, ZERO, Q, poly, sl_motive

coprime = st.tuples(st.integers(1, 9), st.integers(1, 9)).filter(lambda p: gcd(*p) == 1)


def test_small_goldens():
    assert m_irr(1, 2, 3) == ONE
    assert m_irr(2, 2, 3) == Q - 2
    # (n-1)(m-1)/2 components of q - 2 in rank two
    assert m_irr(2, 3, 5) == 4 * Q - 8
    assert m_irr(3, 2, 3) == poly(1, -3, 3)
    assert m_irr(3, 4, 5) == poly(6, 24, -24, -108, 162)


def test_per_config_values():
    assert m_irr_for_config(EigenConfig((1, 1), (1, 1))) == Q - 2
    assert m_irr_for_config(EigenConfig((2, 1), (1, 1, 1))) == poly(1, -3, 3)
    assert m_irr_for_config(EigenConfig((2, 2), (2, 2))) == ZERO


def test_r_kappa_is_product_of_orbits():
    assert r_kappa_motive(EigenConfig((1, 1), (1, 1))) == (Q * Q + Q) ** 2


def test_r_irr_is_divisible():
    assert r_irr(3, 2, 5) == m_irr(3, 2, 5) * sl_motive(3)


@settings(max_examples=25, deadline=None)
@given(coprime, st.integers(2, 4))
def test_symmetric_in_n_and_m(nm, r):
    warm_cache()
    n, m = nm
    assert m_irr(r, n, m) == m_irr(r, m, n)


@settings(max_examples=25, deadline=None)
@given(coprime, st.integers(1, 4))
def test_methods_agree(nm, r):
    n, m = nm
    assert m_irr(r, n, m, method="closed") == m_irr(r, n, m, method="enumerate")


def test_invalid_inputs():
    with pytest.raises(NotCoprime):
        m_irr(2, 4, 6)
    with pytest.raises(NotCoprime):
        m_irr(2, 0, 3)
    with pytest.raises(UnsupportedRank):
        m_irr(5, 2, 3)
