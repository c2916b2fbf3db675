"""Virtual classes as integer polynomials in the Lefschetz motive ``q``.

Every class this package handles lies in the subring of the Grothendieck
ring generated by ``q = [A^1]``, so a class is stored as a dense list of
Python integers (arbitrary precision), lowest degree first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonExactDivision

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class MotivePoly:
    """Integer polynomial in ``q``; ``coeffs[k]`` multiplies ``q**k``.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c: int) -> MotivePoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> MotivePoly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_rational(cls, coeffs: Sequence[Scalar]) -> MotivePoly:
        """Build from possibly fractional coefficients that must be integers."""
        out = []
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c.denominator != 1:
                raise NonExactDivision(f"coefficient of q^{k} is {c}, not an integer")
            out.append(c.numerator)
        return cls(tuple(out))

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring structure -------------------------------------------------
    @staticmethod
    def _coerce(other) -> MotivePoly:
        if isinstance(other, MotivePoly):
            return other
        if isinstance(other, int):
            return MotivePoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return MotivePoly(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return MotivePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return MotivePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return MotivePoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, den: MotivePoly) -> tuple[MotivePoly, MotivePoly]:
        """Long division over the rationals, integer-valued or raising.

        Raises :class:`NonExactDivision` when a quotient coefficient is not
        an integer; callers wanting the remainder only use this for monic
        or unit-leading divisors.
        """
        den = self._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero motive")
        rem = list(self.coeffs)
        dd, lead = den.degree, den.coeffs[-1]
        if len(rem) - 1 < dd:
            return MotivePoly(), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            qk, r = divmod(c, lead)
            if r:
                raise NonExactDivision(f"leading coefficient {lead} does not divide {c}")
            quot[k - dd] = qk
            for j, b in enumerate(den.coeffs):
                rem[k - dd + j] -= qk * b
        return MotivePoly(tuple(quot)), MotivePoly(tuple(rem))

    def exact_div(self, den) -> MotivePoly:
        den = self._coerce(den)
        quot, rem = self.divmod(den)
        if rem:
            raise NonExactDivision(f"({self}) / ({den}) leaves remainder {rem}")
        return quot

    # -- evaluation and substitution ------------------------------------
    def eval_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x: int) -> int:
        return self.eval_at(x)

    def adams(self, k: int) -> MotivePoly:
        """Substitute ``q -> q**k``."""
        if k < 1:
            raise ValueError("Adams operations are indexed by k >= 1")
        out = [0] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return MotivePoly(tuple(out))

    # -- rendering ------------------------------------------------------
    def _terms(self, power_fmt) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "q" if k == 1 else power_fmt(k)
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self._terms(lambda k: f"q^{k}")

    def __repr__(self) -> str:
        return f"MotivePoly({str(self)!r})"

    def to_latex(self) -> str:
        return self._terms(lambda k: f"q^{{{k}}}")

    def to_dict(self) -> dict:
        return {"variable": "q", "coefficients": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> MotivePoly:
        if obj.get("variable", "q") != "q":
            raise ValueError(f"unexpected variable {obj.get('variable')!r}")
        return cls(tuple(int(c) for c in obj["coefficients"]))

    @classmethod
    def from_json(cls, text: str) -> MotivePoly:
        return cls.from_dict(json.loads(text))


ZERO = MotivePoly()
ONE = MotivePoly((1,))
Q = MotivePoly((0, 1))


def poly(*coeffs_high_to_low: int) -> MotivePoly:
    """Shorthand taking coefficients highest degree first, as usually printed."""
    return MotivePoly(tuple(reversed(coeffs_high_to_low)))


def exact_div(num: MotivePoly, den: MotivePoly) -> MotivePoly:
    return num.exact_div(den)


def eval_at(p: MotivePoly, x: int) -> int:
    return p.eval_at(x)


def adams(p: MotivePoly, k: int) -> MotivePoly:
    return p.adams(k)


def q_power(k: int) -> MotivePoly:
    return MotivePoly.monomial(k)


def gl_motive(r: int) -> MotivePoly:
    """``[GL_r] = prod_{i<r} (q^r - q^i)``; ``[GL_0] = 1``."""
    out = ONE
    for i in range(r):
        out = out * (q_power(r) - q_power(i))
    return out


def sl_motive(r: int) -> MotivePoly:
    if r == 0:
        return ONE
    return gl_motive(r).exact_div(Q - 1)


def group_motive(kind: str, r: int) -> MotivePoly:
    """Motive of ``GL_r``, ``SL_r``, ``PGL_r`` or affine ``r``-space."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    kind = kind.upper()
    if kind == "GL":
        return gl_motive(r)
    if kind in ("SL", "PGL"):
        return sl_motive(r)
    if kind == "AFFINE":
        return q_power(r)
    raise ValueError(f"unknown group kind {kind!r}")
