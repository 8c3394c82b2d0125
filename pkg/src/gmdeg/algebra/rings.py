"""Coefficient rings: the rationals and prime fields.

Rationals are :class:`fractions.Fraction`.  Prime-field elements are stored
inside polynomials as plain ints in ``[0, p)``; :class:`FpElement` is the
user-facing scalar type.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


class IncompatibleRings(ValueError):
    def __init__(self, msg: str = "incompatible rings"):
        super().__init__(msg)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class _Rationals:
    """The field Q.  Singleton, exposed as :data:`QQ`."""

    characteristic = 0

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return "QQ"

    def coerce(self, c) -> Fraction:
        if isinstance(c, FpElement):
            raise IncompatibleRings()
        return Fraction(c)

    def inv(self, c: Fraction) -> Fraction:
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c)

    def parse(self, token: str) -> Fraction:
        return Fraction(token)

    def format(self, c: Fraction) -> str:
        return str(c)


QQ = _Rationals()


@dataclass(frozen=True)
class GF:
    """The prime field F_p (p odd prime)."""

    p: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime, got {self.p}")

    characteristic = property(lambda self: self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def coerce(self, c) -> int:
        if isinstance(c, FpElement):
            if c.p != self.p:
                raise IncompatibleRings()
            return c.value
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c: int) -> int:
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def __call__(self, value) -> "FpElement":
        return FpElement(self.coerce(value), self.p)

    def parse(self, token: str) -> int:
        return self.coerce(Fraction(token))

    def format(self, c: int) -> str:
        return str(c)


@dataclass(frozen=True)
class FpElement:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other) -> int:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise IncompatibleRings()
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * FpElement(o, self.p).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"
