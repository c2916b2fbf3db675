"""Reference values used by the verification suites and tests.

Everything here is transcribed data, never computed; the pipeline is
compared against it, not built from it.
"""

from __future__ import annotations

from fractions import Fraction

from .counting import multinomial
from .eigcfg import EigenConfig, Partition
from .qpoly import ONE, MotivePoly, Q, poly

cfg = EigenConfig

# rank 2, the single admissible configuration
RANK2 = {
    "config": cfg((1, 1), (1, 1)),
    "R_kappa": poly(1, 2, 1, 0, 0),
    "R_red": poly(4, 2, -2, 0),
    "R_irr": poly(1, -2, -1, 2, 0),
    "M_irr": poly(1, -2),
}

# rank 3: R_red, R_kappa, R_irr (when listed) and M_irr per configuration
RANK3 = {
    cfg((1, 1, 1), (1, 1, 1)): {
        "R_red": poly(18, 18, -9, -9, 6, 21, 3, -12, 0, 0, 0),
        "R_kappa": poly(1, 4, 8, 10, 8, 4, 1, 0, 0, 0, 0, 0, 0),
        "R_irr": poly(1, 4, -10, -8, 17, 13, -5, -21, -3, 12, 0, 0, 0),
        "M_irr": poly(1, 4, -9, -3, 12),
    },
    cfg((1, 1, 1), (2, 1)): {
        "R_red": poly(6, 3, 3, 3, 3, 3, -3, 0, 0, 0),
        "R_kappa": poly(1, 3, 5, 5, 3, 1, 0, 0, 0, 0, 0),
        "R_irr": poly(1, -3, 2, 2, 0, -2, -3, 3, 0, 0, 0),
        "M_irr": poly(1, -3, 3),
    },
    cfg((2, 1), (1, 1, 1)): {
        "R_red": poly(6, 3, 3, 3, 3, 3, -3, 0, 0, 0),
        "R_kappa": poly(1, 3, 5, 5, 3, 1, 0, 0, 0, 0, 0),
        "R_irr": poly(1, -3, 2, 2, 0, -2, -3, 3, 0, 0, 0),
        "M_irr": poly(1, -3, 3),
    },
}

_L = Q - 1  # q - 1
# per-type rows (M_tau, G_tau, irreducible factor, multiplicity), as a multiset
RANK3_ROWS = {
    cfg((1, 1, 1), (1, 1, 1)): [
        (ONE, _L ** 2, Q - 2, 9),
        (Q * Q - 1, _L ** 2, Q - 2, 9),
        (Q * Q - 1, _L ** 2, Q - 2, 9),
        (ONE, _L ** 3, ONE, 6),
        (Q * Q - 1, _L ** 3, ONE, 18),
        (_L ** 2, _L ** 3, ONE, 18),
        (Q * _L ** 2, _L ** 3, ONE, 36),
    ],
    cfg((1, 1, 1), (2, 1)): [
        (ONE, _L ** 2, Q - 2, 3),
        (_L, _L ** 2, Q - 2, 3),
        (_L, _L ** 2, Q - 2, 3),
        (ONE, _L ** 3, ONE, 3),
        (Q * Q - 1, _L ** 3, ONE, 3),
        (_L, _L ** 3, ONE, 6),
        (_L ** 2, _L ** 3, ONE, 3),
        (_L ** 2, _L ** 3, ONE, 6),
    ],
    cfg((2, 1), (1, 1, 1)): [
        (ONE, _L ** 2, Q - 2, 3),
        (Q * Q - Q, Q * _L ** 2, Q - 2, 3),
        (Q * Q - Q, Q * _L ** 2, Q - 2, 3),
        (ONE, _L ** 3, ONE, 3),
        (Q * Q - 1, _L ** 3, ONE, 3),
        (Q * Q - Q, Q * _L ** 3, ONE, 6),
        (_L ** 2, _L ** 3, ONE, 3),
        (Q * _L ** 2, Q * _L ** 3, ONE, 6),
    ],
}

_P31 = poly(1, -4, 5, -1, -3, 3, -5, 7, -2, 1, 0, -6, 4, 0, 0, 0, 0, 0, 0)
_P22 = poly(1, 4, -12, -4, 24, -11, -3, -7, -6, 25, -3, 11, -19, -18, 18, 0, 0, 0, 0, 0, 0)
_P211 = poly(1, 5, 6, -40, -13, 57, 51, -35, -74, -32, 25, 93, 38, -30, -82, -18, 48,
             0, 0, 0, 0, 0, 0)
_P1111 = poly(1, 6, 19, 10, -125, -68, 106, 260, 129, -344, -277, -88, 265, 406, 8, -182,
              -270, 0, 144, 0, 0, 0, 0, 0, 0)
_P22_211 = poly(1, -3, 4, -2, -3, 3, -3, 7, -2, 0, -1, -5, 4, 0, 0, 0, 0, 0, 0)
_P211_211 = poly(1, 2, -11, 4, 18, -15, -5, -8, 5, 24, -1, 4, -24, -11, 17, 0, 0, 0, 0, 0, 0)

# rank 4: [R_kappa^irr] for the ten admissible configurations
RANK4_R_IRR = {
    cfg((3, 1), (1, 1, 1, 1)): _P31,
    cfg((2, 2), (1, 1, 1, 1)): _P22,
    cfg((2, 1, 1), (1, 1, 1, 1)): _P211,
    cfg((1, 1, 1, 1), (3, 1)): _P31,
    cfg((1, 1, 1, 1), (2, 2)): _P22,
    cfg((1, 1, 1, 1), (2, 1, 1)): _P211,
    cfg((1, 1, 1, 1), (1, 1, 1, 1)): _P1111,
    cfg((2, 2), (2, 1, 1)): _P22_211,
    cfg((2, 1, 1), (2, 2)): _P22_211,
    cfg((2, 1, 1), (2, 1, 1)): _P211_211,
}

# closed-form rank-4 result: partition pair -> polynomial multiplying the pair count
_D, _S, _T, _H = (Partition.parse(s) for s in ("1^4", "2^1,1^2", "2^2", "3^1,1^1"))
RANK4_CLOSED_TERMS = [
    ((_D, _D), poly(1, 6, 20, 17, -98, -26, 38, 126, 0, -144)),
    ((_D, _S), poly(1, 5, 7, -34, 0, 34, 18, -48)),
    ((_D, _T), poly(1, 4, -11, 1, 18, -18)),
    ((_D, _H), poly(1, -4, 6, -4)),
    ((_S, _T), poly(1, -3, 5, -4)),
    ((_S, _S), poly(1, 2, -10, 7, 11, -17)),
]


def rank4_closed(n: int, m: int) -> MotivePoly:
    """Reference rank-4 closed form with multinomial counts substituted."""
    acc: list[Fraction] = []

    def add(c: Fraction, p: MotivePoly):
        for k, x in enumerate(p.coeffs):
            while len(acc) <= k:
                acc.append(Fraction(0))
            acc[k] += c * x

    for (p1, p2), body in RANK4_CLOSED_TERMS:
        c = multinomial(n, p1.counts) * multinomial(m, p2.counts)
        if p1 != p2:
            c += multinomial(n, p2.counts) * multinomial(m, p1.counts)
        add(Fraction(4 * c, n * m), body)
    return MotivePoly.from_rational(acc)


def rank3_closed(n: int, m: int) -> MotivePoly:
    """Reference rank-3 closed form."""
    a = Fraction((n - 1) * (n - 2) * (m - 1) * (m - 2), 12)
    b = Fraction((n - 1) * (m - 1) * (n + m - 4), 2)
    return MotivePoly.from_rational(
        [a * x for x in poly(1, 4, -9, -3, 12).coeffs]
    ) + MotivePoly.from_rational([b * x for x in poly(1, -3, 3).coeffs])


CLI_RANK3_4_5 = poly(6, 24, -24, -108, 162)


def stratum_22_display(n: int, m: int) -> MotivePoly:
    """Expanded {2^2} display as printed, for (odd, odd) or (even, odd).

    Raises :class:`NonExactDivision` when the printed rational combination
    is not integral.
    """
    if n % 2 == 1 and m % 2 == 0:
        n, m = m, n
    terms = [
        (Fraction((m - 1) ** 2 * (n - 1) ** 2, 32), poly(1, -3, 0, 4)),
        (Fraction((m - 1) * (n - 1), 8), poly(1, 1, -4, 2)),
    ]
    if n % 2 == 0:
        terms += [
            (Fraction((m - 1) ** 2, 8), poly(1, -1, -1, 1)),
            (Fraction(m - 1, 4), poly(1, 1, -3, 1)),
            (Fraction((n - 1) * (m - 1) ** 2, 8), poly(1, -2, -1, 2)),
        ]
    acc = [Fraction(0)] * 4
    for c, p in terms:
        for k, x in enumerate(p.coeffs):
            acc[k] += c * x
    return MotivePoly.from_rational(acc)
