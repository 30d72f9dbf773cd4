"""The parameter group Xi_p of multipliers of Z[1/p]^2.

An element is a sequence ``alpha_n = (alpha_0 + J_n) / p^n`` in [0, 1) where
``J_n`` is the truncation of a p-adic integer ``J`` whose digits are the
carries ``b_n = p*alpha_{n+1} - alpha_n``. We store ``(p, alpha_0, J)`` with
``J`` an eventually periodic digit word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exact import (
    PAdicInt,
    Phase,
    Real,
    SolenoidError,
    UndecidableSign,
    check_prime,
    rational_valuation,
)
from .exact.errors import same_prime


@dataclass(frozen=True)
class Periodic:
    period: int


@dataclass(frozen=True)
class Aperiodic:
    pass


@dataclass(frozen=True)
class XiSequence:
    p: int
    alpha0: Real
    digits: PAdicInt

    def __post_init__(self):
        check_prime(self.p)
        alpha0 = Real.of(self.alpha0)
        object.__setattr__(self, "alpha0", alpha0)
        if isinstance(self.digits, PAdicInt):
            same_prime(self.p, self.digits.p)
        else:
            pre, per = self.digits
            object.__setattr__(self, "digits", PAdicInt(self.p, tuple(pre), tuple(per)))
        if alpha0.is_rational:
            if not 0 <= alpha0.const < 1:
                raise SolenoidError(f"alpha_0 = {alpha0.const} must lie in [0, 1)")
        else:
            try:
                lo, hi = alpha0.interval()
            except UndecidableSign:
                return
            if hi < 0 or lo >= 1:
                raise SolenoidError(f"alpha_0 = {alpha0} lies outside [0, 1) by its approximant")

    @classmethod
    def rational(cls, p: int, alpha0, pre=(), per=(0,)) -> XiSequence:
        return cls(p, Real.of(Fraction(alpha0)), PAdicInt(p, tuple(pre), tuple(per)))

    @property
    def is_symbolic(self) -> bool:
        return not self.alpha0.is_rational

    @property
    def pre(self) -> tuple[int, ...]:
        return self.digits.pre

    @property
    def per(self) -> tuple[int, ...]:
        return self.digits.per

    def digit(self, n: int) -> int:
        return self.digits.digit(n)

    def real_at(self, n: int) -> Real:
        """The actual real number alpha_n in [0, 1)."""
        return (self.alpha0 + self.digits.truncation(n)) / self.p**n

    def value_at(self, n: int) -> Phase:
        return Phase(self.real_at(n))

    def values(self, count: int) -> list[Real]:
        return [self.real_at(n) for n in range(count)]

    def shift(self, k: int) -> XiSequence:
        """The tail (alpha_k, alpha_{k+1}, ...)."""
        pre = self.pre[k:]
        start = max(k, len(self.pre))
        per = tuple(self.digit(start + j) for j in range(len(self.per)))
        return XiSequence(self.p, self.real_at(k), PAdicInt(self.p, pre, per))

    def __str__(self) -> str:
        return f"Xi_{self.p}(alpha0={self.alpha0}, digits={self.digits})"


def value_at(alpha: XiSequence, n: int) -> Phase:
    return alpha.value_at(n)


def from_extension(p: int, J: PAdicInt, alpha0) -> XiSequence:
    """The sequence ((alpha0 + J_k) / p^k)_k."""
    return XiSequence(p, Real.of(alpha0), J)


def to_padic(alpha: XiSequence) -> PAdicInt:
    """J with J_k = p^k alpha_k - alpha_0."""
    return alpha.digits


def normalized(p: int, J: PAdicInt, offset) -> XiSequence:
    """The element of Xi_p congruent mod 1, termwise, to ((offset + J_k) / p^k)_k.

    ``offset`` may lie outside [0, 1): its integer part is moved into J, which
    leaves every term unchanged mod 1.
    """
    offset = Real.of(offset)
    whole = offset.floor()
    return XiSequence(p, offset - whole, J + whole)


def from_values(p: int, values: Sequence, tail: str = "repeat", period: int | None = None) -> XiSequence:
    """Recover an element of Xi_p from a finite prefix of its values.

    ``tail`` fixes how the sequence continues past the prefix:

    * ``"repeat"``: the last value repeats an earlier one and the values cycle;
    * ``"zero"``: every later carry digit is 0;
    * ``"period"``: the last ``period`` recovered digits repeat forever.
    """
    check_prime(p)
    vals = [Real.of(Fraction(v) if isinstance(v, (int, str)) else v) for v in values]
    if not vals:
        raise SolenoidError("from_values needs at least one value")
    for v in vals:
        if v.sign() < 0 or (v - 1).sign() >= 0:
            raise SolenoidError(f"value {v} is not in [0, 1)")
    digits = []
    for n in range(len(vals) - 1):
        d = vals[n + 1] * p - vals[n]
        if not d.is_rational or d.const.denominator != 1 or not 0 <= d.const < p:
            raise SolenoidError(
                f"p*alpha_{n + 1} - alpha_{n} = {d} is not a digit in 0..{p - 1}: not an element of Xi_{p}"
            )
        digits.append(int(d.const))
    if tail == "zero":
        J = PAdicInt(p, tuple(digits), (0,))
    elif tail == "repeat":
        last = vals[-1]
        if last not in vals[:-1]:
            raise SolenoidError("tail rule 'repeat' needs the last value to repeat an earlier one")
        start = vals.index(last)
        J = PAdicInt(p, tuple(digits[:start]), tuple(digits[start:]))
    elif tail == "period":
        if period is None or not 0 < period <= len(digits):
            raise SolenoidError("tail rule 'period' needs 0 < period <= number of recovered digits")
        J = PAdicInt(p, tuple(digits[:-period]), tuple(digits[-period:]))
    else:
        raise SolenoidError(f"unknown tail rule {tail!r}")
    return XiSequence(p, vals[0], J)


def detect_periodicity(alpha: XiSequence) -> Periodic | Aperiodic:
    """Periodic iff the value sequence has finite range.

    Going backwards, alpha_n = p*alpha_{n+1} - b_n is forced, so a finite range
    means purely periodic values and a purely periodic digit word; with the
    canonical word this reduces to alpha_pre == alpha_{pre+per}.
    """
    if alpha.is_symbolic:
        return Aperiodic()
    m, d = len(alpha.pre), len(alpha.per)
    if alpha.real_at(m) == alpha.real_at(m + d):
        return Periodic(d)
    return Aperiodic()


def order_condition(alpha: XiSequence) -> int | None:
    """Least k >= 1 with (p^k - 1) * alpha_0 integral, or None."""
    if alpha.is_symbolic:
        return None
    b = alpha.alpha0.const.denominator
    if gcd(b, alpha.p) != 1:
        return None
    if b == 1:
        return 1
    k, power = 1, alpha.p % b
    while power != 1:
        power = power * alpha.p % b
        k += 1
    return k


def periodicity_report(alpha: XiSequence) -> dict:
    """Finite-range periodicity next to the bare order condition on alpha_0.

    The two disagree when alpha_0 satisfies the order condition but the digit
    word is not the one that closes the cycle (e.g. alpha_0 = 0 with digits
    1, 0, 0, ...); finite range is the deciding criterion.
    """
    verdict = detect_periodicity(alpha)
    k = order_condition(alpha)
    periodic = isinstance(verdict, Periodic)
    return {
        "periodic": periodic,
        "period": verdict.period if periodic else None,
        "order_condition_k": k,
        "order_condition_agrees": periodic == (k is not None),
    }


def padic_offset_valuation(alpha: XiSequence) -> int | None:
    """v_p(alpha_0 + J) in Q_p, None when alpha_0 + J = 0 (the periodic case)."""
    if alpha.is_symbolic:
        raise SolenoidError("valuation of a symbolic offset is undefined")
    total = alpha.alpha0.const + alpha.digits.to_fraction()
    if total == 0:
        return None
    return rational_valuation(total, alpha.p)


def reflect(alpha: XiSequence) -> XiSequence:
    """((1 - alpha_k) mod 1)_k, the inverse of alpha in Xi_p."""
    p = alpha.p
    if alpha.alpha0.is_rational and alpha.alpha0.const == 0:
        return XiSequence(p, Real.of(0), -alpha.digits)
    # all terms are nonzero, so 1 - alpha_k is already in (0, 1); carries
    # become p - 1 - b_k, i.e. J -> -1 - J
    return XiSequence(p, 1 - alpha.alpha0, -alpha.digits - 1)
