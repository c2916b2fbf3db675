"""Brute-force counts over F_3 compared with the assembled motives."""

from functools import lru_cache

import pytest

from gl_oracle import irreducible_in_class
from torusmotive import reference as ref
from torusmotive.assembly import config_report
from torusmotive.eigcfg import EigenConfig
from torusmotive.qpoly import gl_motive

P = 3


@lru_cache(maxsize=None)
def _oracle(a, b):
    return irreducible_in_class(P, a, b)


def _per_a(cfg, poly):
    orbit = gl_motive(cfg.rank)
    for k in cfg.a_mults:
        orbit = orbit.exact_div(gl_motive(k))
    val, rem = divmod(poly(P), orbit(P))
    assert rem == 0
    return val


CASES = [
    ((1, 1), (1, 1)),
    ((2, 1), (1, 1, 1)),
    ((1, 1, 1), (2, 1)),
    ((1, 1, 1), (1, 1, 1)),
    ((2, 2), (2, 1, 1)),
    pytest.param((2, 1, 1), (2, 1, 1), marks=pytest.mark.slow),
]


@pytest.mark.parametrize("a,b", CASES)
def test_irreducible_count_matches(a, b):
    cfg = EigenConfig(a, b)
    rep = config_report(cfg)
    size, irr = _oracle(a, b)
    assert _per_a(cfg, rep.r_kappa) == size
    assert _per_a(cfg, rep.r_irr) == irr


@pytest.mark.slow
def test_disputed_pattern_against_reference():
    # the reference polynomial for this pattern overshoots the brute-force count
    cfg = EigenConfig((2, 1, 1), (2, 1, 1))
    _, irr = _oracle(cfg.a_mults, cfg.b_mults)
    assert irr == 20352
    assert _per_a(cfg, ref.RANK4_R_IRR[cfg]) == 20544
