"""Rational p-adic integers and numbers as eventually periodic digit words.

A word ``(pre, per)`` stands for the digit stream ``pre + per + per + ...``
(least significant first). Every rational whose reduced denominator is prime
to p has exactly one such canonical word and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import SolenoidError, check_prime, same_prime
from .rational import PAdicRational, rational_valuation


def _minimal_period(per: tuple[int, ...]) -> tuple[int, ...]:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            return per[:d]
    return per


def canonical_word(pre, per) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pre, per = tuple(pre), tuple(per)
    if not per:
        raise SolenoidError("periodic part of a digit word must be nonempty")
    per = _minimal_period(per)
    while pre and pre[-1] == per[-1]:
        per = (pre[-1],) + per[:-1]
        pre = pre[:-1]
    return pre, per


@lru_cache(maxsize=4096)
def _truncation(p: int, pre: tuple[int, ...], per: tuple[int, ...], k: int) -> int:
    total = 0
    weight = 1
    m, d = len(pre), len(per)
    for j in range(k):
        total += (pre[j] if j < m else per[(j - m) % d]) * weight
        weight *= p
    return total


def _run_automaton(p, a: PAdicInt, b: PAdicInt, step):
    """Digitwise combination with a carry; ``step(x, y, carry) -> (digit, carry)``.

    The state (position in the common period, carry) is finite, so the output
    stream is eventually periodic and the cycle is read off directly.
    """
    m = max(len(a.pre), len(b.pre))
    period = len(a.per) * len(b.per) // gcd(len(a.per), len(b.per))
    digits = []
    carry = 0
    for j in range(m):
        d, carry = step(a.digit(j), b.digit(j), carry)
        digits.append(d)
    seen: dict[tuple[int, int], int] = {}
    j = m
    while True:
        state = ((j - m) % period, carry)
        if state in seen:
            start = seen[state]
            return PAdicInt(p, digits[:start], digits[start:])
        seen[state] = len(digits)
        d, carry = step(a.digit(j), b.digit(j), carry)
        digits.append(d)
        j += 1


@dataclass(frozen=True)
class PAdicInt:
    """Element of Z_p with digits ``pre`` followed by ``per`` repeated forever."""

    p: int
    pre: tuple[int, ...] = ()
    per: tuple[int, ...] = (0,)

    def __post_init__(self):
        check_prime(self.p)
        for d in tuple(self.pre) + tuple(self.per):
            if not isinstance(d, int) or not 0 <= d < self.p:
                raise SolenoidError(f"digit {d!r} outside 0..{self.p - 1}")
        pre, per = canonical_word(self.pre, self.per)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def zero(cls, p: int) -> PAdicInt:
        return cls(p)

    @classmethod
    def from_int(cls, p: int, n: int) -> PAdicInt:
        return cls.from_fraction(p, Fraction(n))

    @classmethod
    def from_fraction(cls, p: int, value) -> PAdicInt:
        """Expand a rational with denominator prime to p."""
        check_prime(p)
        value = Fraction(value)
        a, b = value.numerator, value.denominator
        if b % p == 0:
            raise SolenoidError(f"{value} is not a p-adic integer for p={p}")
        binv = pow(b, -1, p)
        digits: list[int] = []
        seen: dict[int, int] = {}
        while a not in seen:
            seen[a] = len(digits)
            d = (a * binv) % p
            digits.append(d)
            a = (a - d * b) // p
        start = seen[a]
        return cls(p, tuple(digits[:start]), tuple(digits[start:]))

    def digit(self, j: int) -> int:
        m = len(self.pre)
        return self.pre[j] if j < m else self.per[(j - m) % len(self.per)]

    def digits(self, n: int) -> list[int]:
        return [self.digit(j) for j in range(n)]

    def truncation(self, k: int) -> int:
        """J_k: the integer in [0, p^k) congruent to this element mod p^k."""
        return _truncation(self.p, self.pre, self.per, k)

    def to_fraction(self) -> Fraction:
        p, m, d = self.p, len(self.pre), len(self.per)
        head = self.truncation(m)
        cycle = _truncation(p, self.per, self.per, d)
        return head + Fraction(p**m * cycle, 1 - p**d)

    def is_integer(self) -> bool:
        """True when the element lies in Z (tail all 0 or all p-1)."""
        return self.per in ((0,), (self.p - 1,))

    def is_zero(self) -> bool:
        return not self.pre and self.per == (0,)

    # digitwise arithmetic

    def _coerce(self, other) -> PAdicInt:
        if isinstance(other, PAdicInt):
            same_prime(self.p, other.p)
            return other
        if isinstance(other, int):
            return PAdicInt.from_int(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p

        def step(x, y, c):
            s = x + y + c
            return s % p, s // p

        return _run_automaton(p, self, other, step)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p

        def step(x, y, borrow):
            s = x - y - borrow
            return s % p, 1 if s < 0 else 0

        return _run_automaton(p, self, other, step)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> PAdicInt:
        return PAdicInt.zero(self.p) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdicInt.from_fraction(self.p, self.to_fraction() * other.to_fraction())

    __rmul__ = __mul__

    def __str__(self) -> str:
        pre = "".join(map(str, self.pre))
        per = "".join(map(str, self.per))
        return f"{pre}({per})^inf [p={self.p}]"


@dataclass(frozen=True)
class PAdicNumber:
    """``p**valuation * unit`` with a unit whose first digit is nonzero (or the value 0)."""

    unit: PAdicInt
    valuation: int = 0

    def __post_init__(self):
        unit, v = self.unit, self.valuation
        if unit.is_zero():
            v = 0
        else:
            # absorb leading zero digits into the valuation
            shift = 0
            while unit.digit(shift) == 0:
                shift += 1
            if shift:
                unit = PAdicInt.from_fraction(unit.p, unit.to_fraction() / unit.p**shift)
                v += shift
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "valuation", v)

    @property
    def p(self) -> int:
        return self.unit.p

    @classmethod
    def from_fraction(cls, p: int, value) -> PAdicNumber:
        value = Fraction(value)
        if value == 0:
            return cls(PAdicInt.zero(p), 0)
        v = rational_valuation(value, p)
        return cls(PAdicInt.from_fraction(p, value / Fraction(p) ** v), v)

    @classmethod
    def from_int(cls, p: int, n: int) -> PAdicNumber:
        return cls.from_fraction(p, n)

    @classmethod
    def from_padic_int(cls, x: PAdicInt) -> PAdicNumber:
        return cls(x, 0)

    @classmethod
    def from_rational(cls, r: PAdicRational) -> PAdicNumber:
        return cls.from_fraction(r.p, r.to_fraction())

    def to_fraction(self) -> Fraction:
        return self.unit.to_fraction() * Fraction(self.p) ** self.valuation

    def is_zero(self) -> bool:
        return self.unit.is_zero()

    def is_integral(self) -> bool:
        return self.valuation >= 0

    def to_padic_int(self) -> PAdicInt:
        if self.valuation < 0:
            raise SolenoidError("negative valuation: not a p-adic integer")
        return PAdicInt.from_fraction(self.p, self.to_fraction())

    def frac(self) -> Fraction:
        """{x}_p: the sum of the negative-power terms of the expansion."""
        if self.valuation >= 0:
            return Fraction(0)
        n = -self.valuation
        return Fraction(self.unit.truncation(n), self.p**n)

    def _coerce(self, other):
        if isinstance(other, PAdicNumber):
            same_prime(self.p, other.p)
            return other.to_fraction()
        if isinstance(other, PAdicRational):
            same_prime(self.p, other.p)
            return other.to_fraction()
        if isinstance(other, PAdicInt):
            same_prime(self.p, other.p)
            return other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicNumber.from_fraction(self.p, self.to_fraction() + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicNumber.from_fraction(self.p, self.to_fraction() - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicNumber.from_fraction(self.p, o - self.to_fraction())

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicNumber.from_fraction(self.p, self.to_fraction() * o)

    __rmul__ = __mul__

    def __neg__(self) -> PAdicNumber:
        return PAdicNumber.from_fraction(self.p, -self.to_fraction())

    def __str__(self) -> str:
        return f"p^{self.valuation} * {self.unit}"


def frac_p(x: PAdicNumber, q: PAdicRational) -> Fraction:
    """Fractional part {x*q}_p as an exact rational in [0, 1).

    For ``q = a/p^k`` only the unit digits below ``p^(k - v)`` matter, ``v``
    being the valuation of ``x``.
    """
    same_prime(x.p, q.p)
    if x.is_zero() or q.is_zero():
        return Fraction(0)
    n = q.exp - x.valuation
    if n <= 0:
        return Fraction(0)
    modulus = x.p**n
    return Fraction((q.num * x.unit.truncation(n)) % modulus, modulus)


def padic_invert(x: PAdicNumber) -> PAdicNumber:
    if x.is_zero():
        raise ZeroDivisionError("0 has no inverse in Q_p")
    return PAdicNumber.from_fraction(x.p, 1 / x.to_fraction())
