"""Brute-force point counts over a prime field, rank 2.

Counts pairs ``(A, B)`` in ``SL_2(F_q)`` with ``A^n = B^m`` and compares
them with the motives evaluated at ``q``. By default the relation is read
as ``A^n = B^m = lambda Id`` (the part of the representation variety that
the motive pipeline describes); ``relation="literal"`` counts every
solution of the matrix equation instead.

The join never loops over all pairs: matrices are bucketed by the value of
their power and by their set of eigenlines (a bit mask over the ``q + 1``
points of the projective line), so a pair has a common eigenvector exactly
when the two masks intersect.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from . import _ffkernels as K
from .assembly import r_irr_for_config, r_kappa_motive
from .counting import n_pi_enumerate
from .eigcfg import EigenConfig, Partition, admissible, partitions_of
from .errors import FieldTooSmall, InvalidInput, NotCoprime, TooLarge

RANK = 2
MAX_GROUP = 250_000  # |SL_2(F_q)| budget, q <= 61
RELATIONS = ("scalar", "literal")


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    k = 2
    while k * k <= q:
        if q % k == 0:
            return False
        k += 1
    return True


def field_self_test(q: int) -> bool:
    """Fermat check ``a^(q-1) = 1`` for every nonzero residue."""
    return all(pow(a, q - 1, q) == 1 for a in range(1, q))


@dataclass(frozen=True)
class FfParams:
    q: int
    n: int
    m: int
    require_roots: bool = True
    relation: str = "scalar"

    def __post_init__(self):
        if not is_prime(self.q):
            raise InvalidInput(f"q = {self.q} is not prime")
        if self.n < 1 or self.m < 1 or gcd(self.n, self.m) != 1:
            raise NotCoprime(f"gcd({self.n}, {self.m}) != 1")
        if self.relation not in RELATIONS:
            raise InvalidInput(f"relation must be one of {RELATIONS}")
        need = lcm(RANK * self.n, RANK * self.m)
        if self.require_roots and (self.q - 1) % need:
            raise FieldTooSmall(f"{need} does not divide q - 1 = {self.q - 1}")
        if self.q + 1 > 64 or self.group_order > MAX_GROUP:
            raise TooLarge(f"|SL_2(F_{self.q})| = {self.group_order} exceeds budget")

    @property
    def group_order(self) -> int:
        return self.q * (self.q * self.q - 1)


class _Tables:
    """Group elements, powers and eigenline masks for one parameter set."""

    def __init__(self, p: FfParams):
        q = p.q
        self.mats = K.sl2_elements(q)
        power, masks = K.pick("power"), K.pick("masks")
        self.masks = masks(self.mats, q)
        self.key_a = self._keys(power(self.mats, p.n, q), q, p.relation)
        self.key_b = self._keys(power(self.mats, p.m, q), q, p.relation)

    @staticmethod
    def _keys(pw: np.ndarray, q: int, relation: str) -> np.ndarray:
        if relation == "literal":
            return ((pw[:, 0] * q + pw[:, 1]) * q + pw[:, 2]) * q + pw[:, 3]
        scalar = (pw[:, 1] == 0) & (pw[:, 2] == 0) & (pw[:, 0] == pw[:, 3])
        return np.where(scalar, pw[:, 0], -1)


_CACHE: dict[FfParams, _Tables] = {}


def _tables(p: FfParams) -> _Tables:
    if p not in _CACHE:
        _CACHE.clear()
        _CACHE[p] = _Tables(p)
    return _CACHE[p]


def _count(p: FfParams, disjoint: bool, full: bool) -> int:
    t = _tables(p)
    if full:
        return int(K.pick("pairs_full")(t.key_a, t.masks, t.key_b, t.masks, disjoint))
    return K.pairs_bucketed(t.key_a, t.masks, t.key_b, t.masks, disjoint)


def count_pairs(p: FfParams, full: bool = False) -> int:
    """Pairs with ``A^n = B^m``; ``full`` uses the plain double loop."""
    return _count(p, disjoint=False, full=full)


def count_irr_pairs(p: FfParams, full: bool = False) -> int:
    """Pairs with ``A^n = B^m`` and no common eigenvector over ``F_q``."""
    return _count(p, disjoint=True, full=full)


def predicted_counts(p: FfParams) -> tuple[int, int]:
    """``(total, irreducible)`` from the motives evaluated at ``q``."""
    parts = [Partition(x) for x in partitions_of(RANK)]
    total = irr = 0
    for a in range(RANK):
        for p1 in parts:
            k1 = n_pi_enumerate(p.n, RANK, a, p1)
            if not k1:
                continue
            for p2 in parts:
                k = k1 * n_pi_enumerate(p.m, RANK, a, p2)
                if not k:
                    continue
                cfg = EigenConfig.from_partitions(p1, p2)
                total += k * r_kappa_motive(cfg)(p.q)
                if admissible(cfg):
                    irr += k * r_irr_for_config(cfg)(p.q)
    return total, irr


@dataclass(frozen=True)
class FfReport:
    params: FfParams
    measured_total: int
    measured_irr: int
    predicted_total: int
    predicted_irr: int

    @property
    def ok(self) -> bool:
        return (self.measured_total, self.measured_irr) == (self.predicted_total, self.predicted_irr)

    def to_dict(self) -> dict:
        p = self.params
        return {
            "q": p.q, "n": p.n, "m": p.m, "relation": p.relation,
            "measured": {"total": self.measured_total, "irreducible": self.measured_irr},
            "predicted": {"total": self.predicted_total, "irreducible": self.predicted_irr},
            "pass": self.ok,
        }


def compare(p: FfParams, full: bool = False) -> FfReport:
    pt, pi = predicted_counts(p)
    return FfReport(p, count_pairs(p, full), count_irr_pairs(p, full), pt, pi)
