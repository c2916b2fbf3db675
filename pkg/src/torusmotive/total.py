"""Full character variety (semisimple representations) for ranks up to 4.

The variety is cut by the partition of ``r`` recording the ranks of the
irreducible summands; each piece is a (twisted) symmetric product of
lower-rank irreducible loci.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .assembly import m_irr
from .errors import NoBranch, NonExactDivision, NotCoprime, UnsupportedRank
from .qpoly import ONE, ZERO, MotivePoly, Q, poly, q_power


def _coprime(n: int, m: int) -> None:
    if n < 1 or m < 1 or gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) != 1")


def _scale(c: Fraction, p: MotivePoly) -> MotivePoly:
    """Rational multiple of an integer polynomial, required to be integral."""
    return MotivePoly.from_rational([c * x for x in p.coeffs])


def _combo(terms) -> MotivePoly:
    """Integral sum of rational multiples; only the total needs to be integral."""
    acc: list[Fraction] = []
    for c, p in terms:
        for k, x in enumerate(p.coeffs):
            while len(acc) <= k:
                acc.append(Fraction(0))
            acc[k] += Fraction(c) * x
    return MotivePoly.from_rational(acc)


def sym_motive(p: MotivePoly, a: int) -> MotivePoly:
    """Symmetric power via ``a S_a = sum_{k=1}^a psi_k(p) S_{a-k}``."""
    if a < 0:
        raise ValueError("symmetric powers are indexed by a >= 0")
    sym = [ONE]
    for j in range(1, a + 1):
        acc = ZERO
        for k in range(1, j + 1):
            acc = acc + p.adams(k) * sym[j - k]
        coeffs = []
        for c in acc.coeffs:
            qt, rem = divmod(c, j)
            if rem:
                raise NonExactDivision(f"Sym^{j} has a non-integral coefficient")
            coeffs.append(qt)
        sym.append(MotivePoly(tuple(coeffs)))
    return sym[a]


def x2bar_irr(n: int, m: int) -> MotivePoly:
    """Irreducible PGL_2 character variety of the (n, m) torus knot."""
    _coprime(n, m)
    if n % 2 == 1 and m % 2 == 1:
        return _scale(Fraction((n - 1) * (m - 1), 4), Q - 2)
    if m % 2 == 0:
        n, m = m, n
    return _combo([(Fraction((n - 2) * (m - 1), 4), Q - 2),
                   (Fraction(m - 1, 2), Q - 1)])


def stratum_22(n: int, m: int) -> MotivePoly:
    """Sums of two rank-2 irreducibles with inverse determinants.

    The fibre ``k^*`` is swapped to its inverse by the involution exchanging
    the summands, so the class is ``q [S] - ([B]^2 - [S])`` with
    ``S = Sym^2 B`` and ``B`` the irreducible PGL_2 locus.
    """
    b = x2bar_irr(n, m)
    s = sym_motive(b, 2)
    return Q * s - (b * b - s)


_P1 = (Q - 1) * poly(1, 4, -3, -15, 12)
_P2 = (Q - 1) * poly(1, 2, -3, -1, 4)
_P3 = (Q - 1) * poly(1, -3, 3)
_P4 = (Q - 1) * poly(1, -1, 1)

_UNIT, _EVEN = {1, 5}, {2, 4}


def _x3_branch(n: int, m: int):
    F = Fraction
    rn, rm = n % 6, m % 6
    if rm in _UNIT and (rn in _UNIT or rn in _EVEN):
        return [(F((m - 1) * (m - 2) * (n - 1) * (n - 2), 36), _P1),
                (F((n - 1) * (m - 1) * (n + m - 4), 6), _P3)]
    if rm in _UNIT and rn in (0, 3):
        return [(F((m - 1) * (m - 2) * n * (n - 3), 36), _P1),
                (F((m - 1) * (m - 2), 6), _P2),
                (F((m - 1) * (m * n + n * n - 5 * n - m - 2), 6), _P3),
                (F(m - 1), _P4)]
    if rn in _EVEN and rm == 3:
        return [(F(m * (m - 3) * (n - 1) * (n - 2), 36), _P1),
                (F((n - 1) * (n - 2), 6), _P2),
                (F((n - 1) * (m * n + m * m - n - 5 * m - 2), 6), _P3),
                (F(n - 1), _P4)]
    return None


def x3tilde_irr(n: int, m: int) -> MotivePoly:
    """Irreducible GL_3 character variety, by residues of (n, m) mod 6."""
    _coprime(n, m)
    terms = _x3_branch(n, m)
    if terms is None:
        terms = _x3_branch(m, n)
    if terms is None:
        raise NoBranch(f"no formula for residues ({n % 6}, {m % 6}) mod 6")
    return _combo(terms)


def total_motive(r: int, n: int, m: int) -> MotivePoly:
    """Whole SL_r character variety, assembled from the partition strata."""
    _coprime(n, m)
    if r == 1:
        return ONE
    if r == 2:
        return m_irr(2, n, m) + Q
    if r == 3:
        return m_irr(3, n, m) + (Q - 1) * x2bar_irr(n, m) + q_power(2)
    if r == 4:
        return (m_irr(4, n, m) + x3tilde_irr(n, m) + stratum_22(n, m)
                + Q * (Q - 1) * x2bar_irr(n, m) + q_power(3))
    raise UnsupportedRank(f"rank {r} outside 1..4")
