import pytest
from math import comb, gcd

from torusmotive.errors import NonExactDivision, NotCoprime, UnsupportedRank
from torusmotive.qpoly import ONE, ZERO, Q, poly
from torusmotive.total import (stratum_22, sym_motive, total_motive, x2bar_irr, x3tilde_irr)


def test_sym_motive_basics():
    assert sym_motive(Q, 0) == ONE
    assert sym_motive(Q, 1) == Q
    assert sym_motive(Q + 1, 2) == Q * Q + Q + 1
    assert sym_motive(2 * ONE, 2) == 3 * ONE
    assert sym_motive(ZERO, 3) == ZERO
    with pytest.raises(ValueError):
        sym_motive(Q, -1)


def test_sym_of_a_point_count():
    # Sym^a of k points has C(k + a - 1, a) points
    for k in range(1, 6):
        for a in range(4):
            assert sym_motive(k * ONE, a) == comb(k + a - 1, a) * ONE


def test_x2bar_examples():
    assert x2bar_irr(2, 3) == Q - 1
    assert x2bar_irr(3, 5) == 2 * Q - 4
    assert x2bar_irr(2, 5) == 2 * Q - 2


def test_stratum_22_identity():
    for n, m in [(2, 5), (3, 5), (5, 7)]:
        b = x2bar_irr(n, m)
        s = sym_motive(b, 2)
        assert stratum_22(n, m) == (Q + 1) * s - b * b


def test_low_rank_totals():
    assert total_motive(1, 2, 3) == ONE
    assert total_motive(2, 2, 3) == 2 * Q - 2
    assert total_motive(4, 2, 5) == poly(2, 8, 2, -67, 139, -109)


def test_x3_branches_cover_all_coprime_residues():
    for n in range(1, 13):
        for m in range(1, 13):
            if gcd(n, m) != 1 or (n * m) % 3 == 0:
                continue
            x3tilde_irr(n, m)


def test_rank4_non_integral_when_three_divides():
    with pytest.raises(NonExactDivision):
        total_motive(4, 2, 3)


def test_errors():
    with pytest.raises(NotCoprime):
        total_motive(2, 2, 4)
    with pytest.raises(UnsupportedRank):
        total_motive(5, 2, 3)
