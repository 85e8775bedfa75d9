"""Exact arithmetic in the quadratic field Q(sqrt(N)).

Elements are stored as a pair of rationals (a, b) meaning a + b*sqrt(rad).
If the radicand is a perfect square, b*sqrt(rad) is folded into the
rational part at construction, so pure rationals always have rad == 1.
Two elements are compatible if they share the radicand or one of them is
purely rational.
"""

from __future__ import annotations

import math
from fractions import Fraction


class RadicandMismatch(ValueError):
    """Raised when combining elements from different quadratic fields."""


class FieldZeroDivision(ZeroDivisionError):
    """Raised on inversion of zero."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class FieldElem:
    """An element a + b*sqrt(rad) with exact rational a, b."""

    __slots__ = ("a", "b", "rad")

    def __init__(self, a, b=0, rad=1):
        a = _as_fraction(a)
        b = _as_fraction(b)
        if rad < 1:
            raise ValueError("radicand must be a positive integer")
        if b:
            root = math.isqrt(rad)
            if root * root == rad:
                a += b * root
                b = Fraction(0)
                rad = 1
        else:
            b = Fraction(0)
            rad = 1
        self.a = a
        self.b = b
        self.rad = rad

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def coerce(x, rad=1) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        return FieldElem(_as_fraction(x))

    def _joint_rad(self, other: "FieldElem") -> int:
        if self.rad == other.rad:
            return self.rad
        if self.rad == 1:
            return other.rad
        if other.rad == 1:
            return self.rad
        raise RadicandMismatch(
            f"cannot mix sqrt({self.rad}) with sqrt({other.rad})"
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = FieldElem.coerce(other)
        rad = self._joint_rad(other)
        return FieldElem(self.a + other.a, self.b + other.b, rad)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.a, -self.b, self.rad)

    def __sub__(self, other):
        return self + (-FieldElem.coerce(other))

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        other = FieldElem.coerce(other)
        rad = self._joint_rad(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return FieldElem(a1 * a2 + b1 * b2 * rad, a1 * b2 + b1 * a2, rad)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self:
            raise FieldZeroDivision("inverse of zero")
        # Conjugate trick; the norm a^2 - b^2*rad is nonzero for any
        # nonzero element since rad is never a square when b != 0.
        norm = self.a * self.a - self.b * self.b * self.rad
        return FieldElem(self.a / norm, -self.b / norm, self.rad)

    def __truediv__(self, other):
        return self * FieldElem.coerce(other).inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldElem(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "FieldElem":
        """Complex conjugation; the identity on this real field."""
        return self

    # -- comparisons / hashing --------------------------------------------

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElem(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if self.b and other.b and self.rad != other.rad:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.rad))

    # -- conversions -------------------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.rad)

    def is_rational(self) -> bool:
        return not self.b

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        parts = []
        if self.a:
            parts.append(str(self.a))
        rpart = "r" if abs(self.b) == 1 else f"{abs(self.b)} r"
        if self.b < 0:
            parts.append(f"- {rpart}" if parts else f"-{rpart}")
        else:
            parts.append(f"+ {rpart}" if parts else rpart)
        return " ".join(parts)


def sqrt_elem(n: int) -> FieldElem:
    """sqrt(n) as an exact field element (rational if n is a square)."""
    if n < 1:
        raise ValueError("radicand must be positive")
    return FieldElem(0, 1, n)


def inv_sqrt_elem(n: int) -> FieldElem:
    """1/sqrt(n) exactly: sqrt(n)/n."""
    return FieldElem(0, Fraction(1, n), n)


ZERO = FieldElem(0)
ONE = FieldElem(1)


def parse_field_elem(text: str, rad: int = 1) -> FieldElem:
    """Parse the coefficient literal grammar, e.g. ``-1/3 + 1/3 r``.

    ``r`` denotes sqrt(rad).  Round-trips with str().
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty coefficient literal")
    # split on +/- signs that are not part of the first character
    terms = []
    start = 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > start:
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    a = Fraction(0)
    b = Fraction(0)
    for term in terms:
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign = -1
            term = term[1:]
        if term.endswith("r"):
            num = term[:-1].rstrip("*")
            frac = Fraction(num) if num else Fraction(1)
            b += sign * frac
        else:
            a += sign * Fraction(term)
    return FieldElem(a, b, rad)
