"""Elements of the p-adic rationals Z[1/p] kept in reduced form num/p^exp."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SolenoidError, check_prime, same_prime


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(x: Fraction, p: int) -> int:
    x = Fraction(x)
    return valuation(x.numerator, p) - valuation(x.denominator, p)


@dataclass(frozen=True)
class PAdicRational:
    """``num / p**exp`` with ``exp`` minimal.

    Zero is stored as ``0 / p**0``. When ``exp > 0`` the numerator is prime to p;
    integers (``exp == 0``) may have numerators divisible by p.
    """

    p: int
    num: int
    exp: int = 0

    def __post_init__(self):
        check_prime(self.p)
        if self.exp < 0:
            raise SolenoidError("exponent must be a natural number")
        num, exp = self.num, self.exp
        if num == 0:
            exp = 0
        while exp > 0 and num % self.p == 0:
            num //= self.p
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_fraction(cls, p: int, value) -> PAdicRational:
        value = Fraction(value)
        den = value.denominator
        exp = 0
        while den % p == 0:
            den //= p
            exp += 1
        if den != 1:
            raise SolenoidError(f"{value} is not in Z[1/{p}]: denominator not a power of {p}")
        return cls(p, value.numerator, exp)

    @classmethod
    def parse(cls, p: int, text) -> PAdicRational:
        return cls.from_fraction(p, Fraction(text))

    # q/p^k notation used throughout the formulas
    @property
    def q(self) -> int:
        return self.num

    @property
    def k(self) -> int:
        return self.exp

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.p**self.exp)

    def is_zero(self) -> bool:
        return self.num == 0

    def _coerce(self, other) -> PAdicRational:
        if isinstance(other, PAdicRational):
            same_prime(self.p, other.p)
            return other
        if isinstance(other, (int, Fraction)):
            return PAdicRational.from_fraction(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdicRational.from_fraction(self.p, self.to_fraction() + other.to_fraction())

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdicRational.from_fraction(self.p, self.to_fraction() - other.to_fraction())

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdicRational.from_fraction(self.p, self.to_fraction() * other.to_fraction())

    __rmul__ = __mul__

    def __neg__(self) -> PAdicRational:
        return PAdicRational(self.p, -self.num, self.exp)

    def __str__(self) -> str:
        return str(self.to_fraction())


def padic_norm(r: PAdicRational) -> Fraction:
    """|r|_p = p^(-v_p(r)), with |0|_p = 0."""
    if r.is_zero():
        return Fraction(0)
    return Fraction(1, r.p) ** rational_valuation(r.to_fraction(), r.p)
