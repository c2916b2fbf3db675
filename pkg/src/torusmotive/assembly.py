"""Per-pattern and per-rank assembly of irreducible motives.

``[R_kappa]`` is a product of two adjoint orbits; removing the reducible
strata leaves the irreducible locus, on which ``PGL_r`` acts freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .counting import pair_count
from .eigcfg import MAX_RANK, EigenConfig, admissible, configs_for_rank
from .errors import NotCoprime, UnsupportedRank
from .qpoly import ONE, ZERO, MotivePoly, gl_motive, sl_motive
from .strata import StratumReport, stratum_motive
from .typeenum import enumerate_types


@dataclass(frozen=True)
class ConfigReport:
    config: EigenConfig
    r_kappa: MotivePoly
    r_red: MotivePoly
    r_irr: MotivePoly
    m_irr: MotivePoly
    strata: tuple[StratumReport, ...]

    def to_dict(self) -> dict:
        return {
            "config": {"a": list(self.config.a_mults), "b": list(self.config.b_mults)},
            "R_kappa": self.r_kappa.to_dict(),
            "R_red": self.r_red.to_dict(),
            "R_irr": self.r_irr.to_dict(),
            "M_irr": self.m_irr.to_dict(),
            "strata": [s.to_dict() for s in self.strata],
        }


def _orbit(r: int, mults: tuple[int, ...]) -> MotivePoly:
    den = ONE
    for k in mults:
        den = den * gl_motive(k)
    return gl_motive(r).exact_div(den)


def r_kappa_motive(cfg: EigenConfig) -> MotivePoly:
    """Pairs of matrices with prescribed (semisimple) spectra, no relation imposed."""
    r = cfg.rank
    return _orbit(r, cfg.a_mults) * _orbit(r, cfg.b_mults)


def config_report(cfg: EigenConfig, recurse=None, prune: bool = True) -> ConfigReport:
    if recurse is None:
        recurse = m_irr_for_config
    strata = tuple(stratum_motive(o, recurse) for o in enumerate_types(cfg, prune=prune))
    r_k = r_kappa_motive(cfg)
    r_red = ZERO
    for s in strata:
        r_red = r_red + s.multiplicity * s.r_tau
    r_irr = r_k - r_red
    m = r_irr.exact_div(sl_motive(cfg.rank))
    return ConfigReport(cfg, r_k, r_red, r_irr, m, strata)


@lru_cache(maxsize=None)
def m_irr_for_config(cfg: EigenConfig) -> MotivePoly:
    """Memoized irreducible moduli motive for one pattern."""
    r = cfg.rank
    if r > MAX_RANK:
        raise UnsupportedRank(f"rank {r} outside 1..{MAX_RANK}")
    if not admissible(cfg):
        return ZERO
    if r == 1:
        return ONE
    return config_report(cfg).m_irr


def r_irr_for_config(cfg: EigenConfig) -> MotivePoly:
    return m_irr_for_config(cfg) * sl_motive(cfg.rank)


def warm_cache(r: int = MAX_RANK) -> None:
    """Fill the memo in rank order so later lookups are read-only."""
    for k in range(1, r + 1):
        for cfg in configs_for_rank(k):
            m_irr_for_config(cfg)


def _check(r: int, n: int, m: int) -> None:
    if r < 1 or r > MAX_RANK:
        raise UnsupportedRank(f"rank {r} outside 1..{MAX_RANK}")
    if n < 1 or m < 1:
        raise NotCoprime(f"n and m must be positive, got {n}, {m}")
    if gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) = {gcd(n, m)}")


def m_irr(r: int, n: int, m: int, method: str = "closed") -> MotivePoly:
    """Irreducible character variety of the (n, m) torus knot in rank ``r``."""
    _check(r, n, m)
    out = ZERO
    for cfg in configs_for_rank(r):
        p1, p2 = cfg.partitions
        k = pair_count(n, m, r, p1, p2, method=method)
        if k:
            out = out + k * m_irr_for_config(cfg)
    return out


def r_irr(r: int, n: int, m: int, method: str = "closed") -> MotivePoly:
    """Same sum before dividing by ``[PGL_r]``."""
    return m_irr(r, n, m, method=method) * sl_motive(r)
