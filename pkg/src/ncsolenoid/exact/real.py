"""Exact reals in Q[s, 1/s] for one opaque irrational symbol s, and their classes mod 1.

A symbol is treated as transcendental: distinct powers of it are linearly
independent over Q, so equality is coefficientwise. Its optional decimal
approximant is used only to decide signs and floors, never for equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import SolenoidError, SymbolMismatch, UndecidableSign

Rational = int | Fraction


@dataclass(frozen=True)
class Symbol:
    name: str
    approx: Fraction | None = field(default=None, compare=False)
    radius: Fraction | None = field(default=None, compare=False)

    @classmethod
    def from_decimal(cls, name: str, approx: str | None = None) -> Symbol:
        """``approx`` is a decimal string; its last digit sets the error radius."""
        if approx is None:
            return cls(name)
        text = str(approx).strip()
        mantissa = text.lower().split("e")[0]
        decimals = len(mantissa.split(".")[1]) if "." in mantissa else 0
        value = Fraction(text)
        radius = Fraction(1, 10**decimals)
        if "e" in text.lower():
            radius *= Fraction(10) ** int(text.lower().split("e")[1])
        return cls(name, value, radius)

    def interval(self) -> tuple[Fraction, Fraction]:
        if self.approx is None:
            raise UndecidableSign(f"symbol {self.name!r} has no approximant")
        return self.approx - self.radius, self.approx + self.radius


def merge_symbols(a: Symbol | None, b: Symbol | None) -> Symbol | None:
    if a is None:
        return b
    if b is None:
        return a
    if a != b:
        raise SymbolMismatch(f"cannot mix irrational symbols {a.name!r} and {b.name!r}")
    return a if a.approx is not None else b


def _power_interval(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    if k == 0:
        return Fraction(1), Fraction(1)
    if k < 0:
        if lo <= 0 <= hi:
            raise UndecidableSign("approximant interval of the symbol contains 0")
        lo, hi = 1 / hi, 1 / lo
        k = -k
    ends = [lo**k, hi**k]
    if k % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(ends)
    return min(ends), max(ends)


@dataclass(frozen=True)
class Real:
    """Exact value ``sum(c * s**e for e, c in terms)``; rational when ``symbol`` is None."""

    terms: tuple[tuple[int, Fraction], ...] = ()
    symbol: Symbol | None = None

    def __post_init__(self):
        acc: dict[int, Fraction] = {}
        for e, c in self.terms:
            if type(c) is not Fraction:
                c = Fraction(c)
            e = int(e)
            acc[e] = acc[e] + c if e in acc else c
        terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        symbol = self.symbol
        if all(e == 0 for e, _ in terms):
            symbol = None
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "symbol", symbol)

    @classmethod
    def of(cls, value) -> Real:
        if isinstance(value, Real):
            return value
        if isinstance(value, Phase):
            return value.real
        return cls(((0, Fraction(value)),))

    @classmethod
    def sym(cls, symbol: Symbol, coeff: Rational = 1, power: int = 1) -> Real:
        return cls(((power, Fraction(coeff)),), symbol)

    @property
    def is_rational(self) -> bool:
        return self.symbol is None

    def coeff(self, power: int) -> Fraction:
        for e, c in self.terms:
            if e == power:
                return c
        return Fraction(0)

    @property
    def const(self) -> Fraction:
        return self.coeff(0)

    @property
    def rational(self) -> Fraction:
        if self.symbol is not None:
            raise SolenoidError("value is not rational")
        return self.const

    def nonconst(self) -> Real:
        return Real(tuple((e, c) for e, c in self.terms if e != 0), self.symbol)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Real):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Real.of(other)
        return Real(self.terms + other.terms, merge_symbols(self.symbol, other.symbol))

    __radd__ = __add__

    def __neg__(self) -> Real:
        return Real(tuple((e, -c) for e, c in self.terms), self.symbol)

    def __sub__(self, other):
        if not isinstance(other, (Real, int, Fraction)):
            return NotImplemented
        return self + (-Real.of(other))

    def __rsub__(self, other):
        return Real.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, Real):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            c = Fraction(other)
            return Real(tuple((e, v * c) for e, v in self.terms), self.symbol)
        symbol = merge_symbols(self.symbol, other.symbol)
        return Real(tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms), symbol)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, Real):
            return NotImplemented
        if not other.terms:
            raise ZeroDivisionError("division by zero")
        if not other.is_monomial():
            raise SolenoidError("only division by a monomial c*s^k keeps the value in Q[s, 1/s]")
        (e, c), = other.terms
        inv = Real(((-e, 1 / c),), other.symbol)
        return self * inv

    def __rtruediv__(self, other):
        return Real.of(other) / self

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Real.of(other)
        if not isinstance(other, Real):
            return NotImplemented
        return self.terms == other.terms and self.symbol == other.symbol

    def __hash__(self):
        if self.symbol is None:
            return hash(self.const)
        return hash((self.terms, self.symbol))

    # order, through the approximant

    def interval(self) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        if self.symbol is not None:
            slo, shi = self.symbol.interval()
        for e, c in self.terms:
            if e == 0:
                a = b = c
            else:
                plo, phi = _power_interval(slo, shi, e)
                a, b = sorted((c * plo, c * phi))
            lo += a
            hi += b
        return lo, hi

    def sign(self) -> int:
        if self.symbol is None:
            c = self.const
            return (c > 0) - (c < 0)
        lo, hi = self.interval()
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        raise UndecidableSign(f"sign of {self} undecided by the approximant of {self.symbol.name!r}")

    def floor(self) -> int:
        if self.symbol is None:
            return math.floor(self.const)
        lo, hi = self.interval()
        f = math.floor(lo)
        if hi < f + 1:
            return f
        raise UndecidableSign(f"floor of {self} undecided by the approximant of {self.symbol.name!r}")

    def frac(self) -> Real:
        return self - self.floor()

    def approx(self) -> float | None:
        if self.symbol is None:
            return float(self.const)
        if self.symbol.approx is None:
            return None
        return float(sum(c * self.symbol.approx**e for e, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        name = self.symbol.name if self.symbol else ""
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"{c}*{name}^{e}")
        return " + ".join(parts)


def _reduce_mod1(real: Real) -> Real:
    c = real.const
    return real - (c.numerator // c.denominator)


@dataclass(frozen=True, init=False)
class Phase:
    """Class of a Real modulo 1; the constant term of the representative lies in [0, 1)."""

    real: Real

    def __init__(self, value=0):
        object.__setattr__(self, "real", _reduce_mod1(Real.of(value)))

    @classmethod
    def of(cls, value) -> Phase:
        return value if isinstance(value, Phase) else cls(value)

    @property
    def q0(self) -> Fraction:
        return self.real.const

    @property
    def q1(self) -> Fraction:
        return self.real.coeff(1)

    @property
    def symbol(self) -> Symbol | None:
        return self.real.symbol

    def higher_terms(self) -> dict[int, Fraction]:
        return {e: c for e, c in self.real.terms if e not in (0, 1)}

    def is_zero(self) -> bool:
        return not self.real.terms

    def __add__(self, other):
        if not isinstance(other, (Phase, Real, int, Fraction)):
            return NotImplemented
        return Phase(self.real + Real.of(other))

    __radd__ = __add__

    def __neg__(self) -> Phase:
        return Phase(-self.real)

    def __sub__(self, other):
        if not isinstance(other, (Phase, Real, int, Fraction)):
            return NotImplemented
        return Phase(self.real - Real.of(other))

    def __rsub__(self, other):
        return Phase(Real.of(other) - self.real)

    def __mul__(self, n):
        """Integer multiples are intrinsic; rational ones act on the canonical representative."""
        if not isinstance(n, (int, Fraction)):
            return NotImplemented
        return Phase(self.real * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.real} (mod 1)"


def phase_add(a: Phase, b: Phase) -> Phase:
    return Phase.of(a) + Phase.of(b)


def phase_scale(a: Phase, n: Rational) -> Phase:
    return Phase.of(a) * n


def phase_sum(items: Iterable[Phase]) -> Phase:
    total = Phase(0)
    for item in items:
        total = total + item
    return total
