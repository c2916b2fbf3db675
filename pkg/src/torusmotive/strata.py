"""Motive of a single stratum of reducible representations of a fixed type.

A stratum fibres over the product of irreducible moduli of its blocks; the
fibre is the space of admissible upper-triangular completions modulo the
gauge group. Everything here is a product of explicit q-polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .eigcfg import EigenConfig
from .errors import UnsupportedHom, UnsupportedSchubert
from .qpoly import ONE, MotivePoly, gl_motive, q_power
from .typeenum import FlatBlock, IsotypicBlock, TypeDescriptor, TypeOrbit, flatten

Recurse = Callable[[EigenConfig], MotivePoly]


def _overlap(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    cx, cy = Counter(x), Counter(y)
    return sum(k * cy[label] for label, k in cx.items())


def pair_dim(alpha: IsotypicBlock, beta: IsotypicBlock) -> int:
    """Free entries of one off-diagonal block once the relation for B is imposed."""
    return alpha.dim * beta.dim - _overlap(alpha.evals_b, beta.evals_b)


def a_overlap(alpha: IsotypicBlock, beta: IsotypicBlock) -> int:
    return _overlap(alpha.evals_a, beta.evals_a)


def hom_dim(beta: IsotypicBlock, level_blocks: list[IsotypicBlock]) -> int:
    """Dimension of equivariant maps from ``beta`` into a level (copies expanded)."""
    hits = [b for b in level_blocks if b.signature == beta.signature]
    if hits and beta.dim >= 2:
        raise UnsupportedHom(f"isomorphic blocks of dimension {beta.dim} in adjacent levels")
    return len(hits)


def schubert_factor(c: int, d: int, m: int) -> MotivePoly:
    """Tuples of ``m`` vectors in a ``c``-space whose span meets a ``d``-subspace trivially
    in every nonzero combination, i.e. ``q^{md} prod_{l<m} (q^{c-d} - q^l)``.
    """
    if m < 1:
        raise UnsupportedSchubert(f"multiplicity {m} must be positive")
    if m >= 3:
        raise UnsupportedSchubert(f"multiplicity {m} is not supported")
    if c < d:
        raise UnsupportedSchubert(f"ambient dimension {c} below fixed part {d}")
    out = q_power(m * d)
    for l in range(m):
        out = out * (q_power(c - d) - q_power(l))
    return out


@dataclass
class TargetExponents:
    level: int
    block: IsotypicBlock
    c: int
    d: int
    factor: MotivePoly


@dataclass
class Exponents:
    """Intermediate dimension counts, kept for ``--explain`` output."""

    far: int = 0
    targets: list[TargetExponents] = field(default_factory=list)
    gauge: int = 0


def _by_level(flat: list[FlatBlock], n_levels: int) -> list[list[IsotypicBlock]]:
    out = [[] for _ in range(n_levels)]
    for f in flat:
        out[f.level].append(f.block)
    return out


def exponents(t: TypeDescriptor) -> Exponents:
    flat = flatten(t)
    levels = _by_level(flat, len(t.levels))
    ex = Exponents()
    for x in flat:
        for y in flat:
            if y.level - x.level > 1:
                ex.far += pair_dim(x.block, y.block)
            if y.level > x.level:
                ex.gauge += a_overlap(x.block, y.block)
    for i in range(len(t.levels) - 1):
        below = levels[i]
        for beta in t.levels[i + 1]:
            if beta.mult >= 2 and beta.dim >= 2:
                raise UnsupportedSchubert("repeated block of dimension >= 2")
            c = sum(pair_dim(a, beta) for a in below)
            d = sum(a_overlap(a, beta) for a in below) - hom_dim(beta, below)
            ex.targets.append(TargetExponents(i, beta, c, d, schubert_factor(c, d, beta.mult)))
    return ex


def m_tau_motive(t: TypeDescriptor) -> MotivePoly:
    """Completions of the graded representation that keep the filtration maximal."""
    ex = exponents(t)
    out = q_power(ex.far)
    for tg in ex.targets:
        out = out * tg.factor
    return out


def gauge_motive(t: TypeDescriptor) -> MotivePoly:
    out = q_power(exponents(t).gauge)
    for level in t.levels:
        for b in level:
            out = out * gl_motive(b.mult)
    return out


def irr_factor(t: TypeDescriptor, recurse: Recurse) -> MotivePoly:
    out = ONE
    for f in flatten(t):
        if f.block.dim >= 2:
            out = out * recurse(f.block.sub_config())
    return out


@dataclass(frozen=True)
class StratumReport:
    type_orbit: TypeOrbit
    m_tau: MotivePoly
    g_tau: MotivePoly
    irr_factor: MotivePoly
    r_tau: MotivePoly

    @property
    def multiplicity(self) -> int:
        return self.type_orbit.multiplicity

    def row(self) -> dict:
        return {
            "type": self.type_orbit.representative.render(),
            "multiplicity": self.multiplicity,
            "M_tau": str(self.m_tau),
            "G_tau": str(self.g_tau),
            "irr": str(self.irr_factor),
            "R_tau": str(self.r_tau),
        }

    def to_dict(self) -> dict:
        return {
            "type": self.type_orbit.representative.render(),
            "multiplicity": self.multiplicity,
            "M_tau": self.m_tau.to_dict(),
            "G_tau": self.g_tau.to_dict(),
            "irr": self.irr_factor.to_dict(),
            "R_tau": self.r_tau.to_dict(),
        }


def stratum_motive(orbit: TypeOrbit, recurse: Recurse) -> StratumReport:
    t = orbit.representative
    m = m_tau_motive(t)
    g = gauge_motive(t)
    irr = irr_factor(t, recurse)
    r_tau = (irr * m * gl_motive(t.rank)).exact_div(g)
    return StratumReport(orbit, m, g, irr, r_tau)
