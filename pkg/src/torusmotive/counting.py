"""Counting eigenvalue choices compatible with the torus-knot relation.

For ``A^n = varpi Id`` with ``varpi = psi^a`` (``psi`` a primitive ``r``-th
root of unity) and ``det A = 1``, the eigenvalues of ``A`` form an
``r``-multiset of ``n``-th roots of ``varpi`` with product one. The
functions below count such multisets by multiplicity pattern, either in
closed form or by listing them as exponents modulo ``n r``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from .eigcfg import MAX_RANK, Partition, partitions_of
from .errors import NonExactDivision, NotCoprime, TooLarge, UnsupportedPartition, UnsupportedRank

METHODS = ("closed", "enumerate", "multinomial")
ENUMERATE_LIMIT = 10_000


def divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, es) -> int:
    """``n! / (e_1! ... e_r! (n - sum e)!)``, zero if the parts exceed ``n``."""
    rest = n - sum(es)
    if rest < 0 or any(e < 0 for e in es):
        return 0
    den = factorial(rest)
    for e in es:
        den *= factorial(e)
    return factorial(n) // den


def _sr(e: int, a: int) -> int:
    return e if a % e == 0 else 0


def root_power_sum(e: int, a: int) -> int:
    """Sum of ``nu^a`` over primitive ``e``-th roots of unity ``nu`` (Ramanujan sum)."""
    return sum(mobius(y) * _sr(e // y, a) for y in divisors(e))


def _exact(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise NonExactDivision(f"{num} is not divisible by {den}")
    return q


def _kind(r: int, pi: Partition) -> str:
    parts = pi.parts
    if pi.rank != r:
        raise UnsupportedPartition(f"{pi} is not a partition of {r}")
    if all(p == 1 for p in parts):
        return "distinct"
    if parts.count(2) == 1 and all(p in (1, 2) for p in parts):
        return "one_double"
    if parts.count(3) == 1 and all(p in (1, 3) for p in parts):
        return "one_triple"
    if r == 4 and parts == (2, 2):
        return "two_doubles"
    raise UnsupportedPartition(f"no closed formula for {pi} at rank {r}")


def n_pi_closed(n: int, r: int, a: int, pi: Partition) -> int:
    """Number of eigenvalue multisets with pattern ``pi`` for ``A^n = psi^a``."""
    if n < 1:
        raise ValueError("n must be positive")
    a %= r
    kind = _kind(r, pi)
    g = gcd(n, r)
    if kind == "distinct":
        total = sum((-1) ** (r + r // e) * binom(n // e, r // e) * root_power_sum(e, a)
                    for e in divisors(g))
        return _exact(total, n)
    if kind == "one_double":
        return binom(n - 1, r - 2) - sum(
            (-1) ** (r + r // e) * binom(n // e - 1, r // e - 1) * root_power_sum(e, a)
            for e in divisors(g) if e >= 2)
    if kind == "one_triple":
        out = binom(n - 1, r - 3) + sum(
            (-1) ** (r + r // e) * binom(n // e - 1, r // e - 1) * root_power_sum(e, a)
            for e in divisors(g) if e >= 3)
        if n % 2 == 0 and r % 2 == 0:
            out -= (-1) ** (r // 2) * binom(n // 2 - 1, r // 2 - 2) * (-1) ** a
        return out
    return _two_doubles(n, a)


def _two_doubles(n: int, a: int) -> int:
    """Pattern ``{x, x, y, y}`` at rank 4 with ``varpi = i^a``.

    ``x^2 y^2 = 1`` forces ``y = 1/x`` (needs ``varpi^2 = 1``) or ``y = -1/x``
    (needs ``varpi^2 = (-1)^n``); in each case the roots of ``x^n = varpi``
    pair off, except the fixed points ``x = +-1`` or ``x = +-i`` respectively.
    """
    def hits(k):  # does x = i^k satisfy x^n = i^a
        return int((k * n - a) % 4 == 0)

    out = 0
    if (2 * a) % 4 == 0:
        out += (n - hits(0) - hits(2)) // 2
    if (2 * a - 2 * n) % 4 == 0:
        out += (n - hits(1) - hits(3)) // 2
    return out


def _exponent_multisets(n: int, r: int, a: int):
    """Multisets ``{t_i}`` in ``Z_n`` with ``a + sum t ≡ 0 (mod n)``.

    Eigenvalue ``zeta_{nr}^{a + r t}`` is an ``n``-th root of ``psi^a``; the
    product is one iff ``r a + r sum t ≡ 0 (mod n r)``.
    """
    for ts in itertools.combinations_with_replacement(range(n), r):
        if (a + sum(ts)) % n == 0:
            yield ts


def _pattern(ts) -> Partition:
    return Partition(tuple(Counter(ts).values()))


@lru_cache(maxsize=None)
def _enumerated(n: int, r: int, a: int) -> dict[Partition, int]:
    if n * r > ENUMERATE_LIMIT:
        raise TooLarge(f"n*r = {n * r} exceeds enumeration limit {ENUMERATE_LIMIT}")
    return dict(Counter(_pattern(ts) for ts in _exponent_multisets(n, r, a % r)))


def n_pi_enumerate(n: int, r: int, a: int, pi: Partition) -> int:
    if pi.rank != r:
        raise UnsupportedPartition(f"{pi} is not a partition of {r}")
    return _enumerated(n, r, a % r).get(pi, 0)


def ordered_count(n: int, r: int, a: int) -> int:
    """Ordered tuples of eigenvalues (all patterns together)."""
    total = 0
    for pi, k in _enumerated(n, r, a % r).items():
        # orderings of a multiset with these multiplicities
        perms = factorial(r)
        for p in pi.parts:
            perms //= factorial(p)
        total += k * perms
    return total


def _check_pair(n: int, m: int, r: int) -> None:
    if r < 1 or r > MAX_RANK:
        raise UnsupportedRank(f"rank {r} outside 1..{MAX_RANK}")
    if n < 1 or m < 1 or gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) != 1")


def _closed_family(n: int, m: int, r: int, k1: str, k2: str, pi1: Partition, pi2: Partition):
    """Known product formulas; ``None`` when the pair is not one of them."""
    if (k1, k2) == ("distinct", "distinct"):
        return _exact(binom(n - 1, r - 1) * binom(m - 1, r - 1), r)
    if (k1, k2) == ("distinct", "one_double"):
        return binom(n - 1, r - 1) * binom(m - 1, r - 2)
    if (k1, k2) == ("one_double", "one_double"):
        return r * binom(n - 1, r - 2) * binom(m - 1, r - 2)
    if (k1, k2) == ("distinct", "one_triple"):
        return binom(n - 1, r - 1) * binom(m - 1, r - 3)
    if r == 4 and (k1, k2) == ("distinct", "two_doubles"):
        return _exact(binom(n - 1, 3) * (m - 1), 2)
    if r == 4 and (k1, k2) == ("one_double", "two_doubles"):
        return 2 * binom(n - 1, 2) * (m - 1)
    return None


_ORDER = ("distinct", "one_double", "one_triple", "two_doubles")


def pair_count(n: int, m: int, r: int, pi1: Partition, pi2: Partition,
               method: str = "closed") -> int:
    """Number of components with spectra patterns ``(pi1, pi2)``."""
    _check_pair(n, m, r)
    if pi1.rank != r or pi2.rank != r:
        raise UnsupportedPartition(f"{pi1}, {pi2} are not partitions of {r}")
    if method == "enumerate":
        return sum(n_pi_enumerate(n, r, a, pi1) * n_pi_enumerate(m, r, a, pi2)
                   for a in range(r))
    if method == "multinomial":
        val = Fraction(r, n * m) * multinomial(n, pi1.counts) * multinomial(m, pi2.counts)
        if val.denominator != 1:
            raise NonExactDivision(f"multinomial count {val} is not an integer")
        return val.numerator
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    k1, k2 = _kind(r, pi1), _kind(r, pi2)
    if _ORDER.index(k1) <= _ORDER.index(k2):
        val = _closed_family(n, m, r, k1, k2, pi1, pi2)
    else:
        val = _closed_family(m, n, r, k2, k1, pi2, pi1)
    if val is not None:
        return val
    return sum(n_pi_closed(n, r, a, pi1) * n_pi_closed(m, r, a, pi2) for a in range(r))


@dataclass
class CountTable:
    n: int
    m: int
    r: int
    method: str
    per_omega_n: dict[int, dict[Partition, int]] = field(default_factory=dict)
    per_omega_m: dict[int, dict[Partition, int]] = field(default_factory=dict)
    pair_counts: dict[tuple[Partition, Partition], int] = field(default_factory=dict)

    @classmethod
    def build(cls, n: int, m: int, r: int, method: str = "enumerate",
              pairs=None) -> CountTable:
        _check_pair(n, m, r)
        parts = [Partition(p) for p in partitions_of(r)]
        per = "enumerate" if method in ("enumerate", "multinomial") else "closed"
        tab = cls(n, m, r, method)
        for a in range(r):
            tab.per_omega_n[a] = {p: _per(n, r, a, p, per) for p in parts}
            tab.per_omega_m[a] = {p: _per(m, r, a, p, per) for p in parts}
        for p1, p2 in (pairs or itertools.product(parts, parts)):
            try:
                tab.pair_counts[(p1, p2)] = pair_count(n, m, r, p1, p2, method)
            except UnsupportedPartition:
                tab.pair_counts[(p1, p2)] = pair_count(n, m, r, p1, p2, "enumerate")
        return tab

    def to_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "r": self.r, "method": self.method,
            "per_omega_n": {str(a): {p.spec(): v for p, v in d.items() if v is not None}
                            for a, d in self.per_omega_n.items()},
            "per_omega_m": {str(a): {p.spec(): v for p, v in d.items() if v is not None}
                            for a, d in self.per_omega_m.items()},
            "pair_counts": [{"pi1": p1.spec(), "pi2": p2.spec(), "count": v}
                            for (p1, p2), v in self.pair_counts.items()],
        }

    def render(self) -> str:
        lines = [f"n={self.n} m={self.m} r={self.r} method={self.method}"]
        for label, per in (("n", self.per_omega_n), ("m", self.per_omega_m)):
            for a, d in per.items():
                cells = "  ".join(f"{p}={'-' if v is None else v}" for p, v in d.items())
                lines.append(f"  N[{label}] a={a}: {cells}")
        w = max((len(str(p1)) + len(str(p2)) for p1, p2 in self.pair_counts), default=0) + 4
        for (p1, p2), v in self.pair_counts.items():
            lines.append(f"  {(str(p1) + ' x ' + str(p2)).ljust(w)} {v}")
        return "\n".join(lines)


def _per(n: int, r: int, a: int, p: Partition, method: str):
    if method == "enumerate":
        return n_pi_enumerate(n, r, a, p)
    try:
        return n_pi_closed(n, r, a, p)
    except UnsupportedPartition:
        return None
