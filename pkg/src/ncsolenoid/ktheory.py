"""K-theory of noncommutative solenoids.

K_0 is the extension Q_J of Z[1/p] by Z built from the Schur multiplier xi_J,
with J the p-adic integer of carry digits of alpha; the trace sends
(z, q/p^k) to z + q*alpha_k. K_1 is Z[1/p]^2.

Trace range. tau(K_0) = {z + y*alpha_k}. For rational alpha_0 let s be the
part of its denominator prime to p.

* Periodic alpha: p*alpha_{k+1} = alpha_k + b_k makes den(alpha_k) divide
  den(alpha_{k+1}); periodicity forces them all equal to s, and 1, alpha_0
  generate (1/s)Z.
* Aperiodic alpha: alpha_k = (a + s*p^e*J_k) / (s*p^(e+k)) with a prime to s,
  so every alpha_k lies in (1/s)Z[1/p] with numerator prime to s. Finite range
  fails, so the p-part of den(alpha_k) is unbounded; Z + Z*c/(s*p^f) with
  gcd(c, s*p) = 1 already contains 1/(s*p^f), giving all of (1/s)Z[1/p].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import PAdicInt, PAdicRational, Real, SymbolMismatch
from .exact.errors import same_prime
from .xi import Aperiodic, XiSequence, detect_periodicity


def xi_J(J: PAdicInt, r1: PAdicRational, r2: PAdicRational) -> int:
    """Integer-valued symmetric Schur multiplier attached to J, on reduced forms."""
    same_prime(J.p, r1.p)
    same_prime(J.p, r2.p)
    k1, k2 = r1.k, r2.k
    if k2 > k1:
        value = -r1.to_fraction() * (J.truncation(k2) - J.truncation(k1))
    elif k1 > k2:
        value = -r2.to_fraction() * (J.truncation(k1) - J.truncation(k2))
    else:
        r = r1 + r2
        value = r.to_fraction() * (J.truncation(k1) - J.truncation(r.k))
    if value.denominator != 1:
        raise AssertionError(f"xi_J({r1}, {r2}) = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class K0Element:
    z: int
    r: PAdicRational

    @classmethod
    def of(cls, p: int, z: int, r) -> K0Element:
        if not isinstance(r, PAdicRational):
            r = PAdicRational.from_fraction(p, Fraction(r))
        return cls(int(z), r)

    def __str__(self) -> str:
        return f"({self.z}, {self.r})"


def k0_zero(p: int) -> K0Element:
    return K0Element(0, PAdicRational(p, 0))


def k0_add(J: PAdicInt, a: K0Element, b: K0Element) -> K0Element:
    """(z1, r1) [+] (z2, r2) = (z1 + z2 + xi_J(r1, r2), r1 + r2)."""
    same_prime(a.r.p, b.r.p)
    return K0Element(a.z + b.z + xi_J(J, a.r, b.r), a.r + b.r)


def k0_neg(J: PAdicInt, a: K0Element) -> K0Element:
    return K0Element(-a.z - xi_J(J, a.r, -a.r), -a.r)


def k0_trace(alpha: XiSequence, a: K0Element) -> Real:
    """tau(z, q/p^k) = z + q*alpha_k."""
    same_prime(alpha.p, a.r.p)
    if a.r.is_zero():
        return Real.of(a.z)
    return alpha.real_at(a.r.k) * a.r.q + a.z


@dataclass(frozen=True)
class K1Descriptor:
    p: int

    def __str__(self) -> str:
        return f"Z[1/{self.p}]^2"


def k1_descriptor(alpha: XiSequence) -> K1Descriptor:
    return K1Descriptor(alpha.p)


@dataclass(frozen=True)
class RangeDescriptor:
    """Range of the trace on K_0.

    ``kind`` is ``"lattice"`` for (1/s)Z, ``"localized"`` for (1/s)Z[1/p] and
    ``"symbolic"`` when alpha_0 is irrational (then ``alpha`` is kept and
    membership is decided against it).
    """

    kind: str
    p: int
    s: int | None = None
    alpha: XiSequence | None = None

    def __str__(self) -> str:
        scale = "" if self.s == 1 else f"(1/{self.s})"
        if self.kind == "lattice":
            return f"{scale}Z"
        if self.kind == "localized":
            return f"{scale}Z[1/{self.p}]"
        return f"Z + sum_k Z*alpha_k (alpha_0 = {self.alpha.alpha0})"


def _prime_to_p_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def trace_range(alpha: XiSequence) -> RangeDescriptor:
    if alpha.is_symbolic:
        return RangeDescriptor("symbolic", alpha.p, alpha=alpha)
    s = _prime_to_p_part(alpha.alpha0.const.denominator, alpha.p)
    if isinstance(detect_periodicity(alpha), Aperiodic):
        return RangeDescriptor("localized", alpha.p, s)
    return RangeDescriptor("lattice", alpha.p, s)


def _in_localization(x: Fraction, p: int) -> bool:
    return _prime_to_p_part(Fraction(x).denominator, p) == 1


def range_contains(R: RangeDescriptor, gamma) -> bool:
    """Decide gamma in tau(K_0) exactly."""
    gamma = Real.of(gamma)
    if R.kind in ("lattice", "localized"):
        if not gamma.is_rational:
            return False
        scaled = gamma.const * R.s
        if R.kind == "lattice":
            return scaled.denominator == 1
        return _in_localization(scaled, R.p)
    return _symbolic_contains(R.alpha, gamma)


def _symbolic_contains(alpha: XiSequence, gamma: Real) -> bool:
    """gamma = z + y*alpha_k forces gamma's symbolic part to be t * (symbolic part
    of alpha_0) with t = y/p^k in Z[1/p]; for t = u/p^m reduced, every k >= m
    gives the same constant mod Z, so k = m decides."""
    if gamma.symbol is not None and gamma.symbol != alpha.alpha0.symbol:
        raise SymbolMismatch(f"query uses symbol {gamma.symbol.name!r}, range uses {alpha.alpha0.symbol.name!r}")
    base = alpha.alpha0.nonconst()
    target = gamma.nonconst()
    if not target:
        return gamma.const.denominator == 1
    powers = {e for e, _ in base.terms}
    if {e for e, _ in target.terms} != powers:
        return False
    ratios = {target.coeff(e) / base.coeff(e) for e in powers}
    if len(ratios) != 1:
        return False
    (t,) = ratios
    if not _in_localization(t, alpha.p):
        return False
    tr = PAdicRational.from_fraction(alpha.p, t)
    z = gamma.const - t * (alpha.alpha0.const + alpha.digits.truncation(tr.k))
    return z.denominator == 1


def schur_cohomologous(J: PAdicInt, K: PAdicInt) -> bool:
    """xi_J ~ xi_K iff J - K is an integer: the borrow-subtracted word ends in
    all 0 (nonnegative) or all p-1 (negative)."""
    same_prime(J.p, K.p)
    return (J - K).is_integer()


def schur_integer_difference(J: PAdicInt, K: PAdicInt) -> int | None:
    """J - K as an integer when it is one."""
    diff = J - K
    if not diff.is_integer():
        return None
    value = diff.to_fraction()
    assert value.denominator == 1
    return int(value)


def range_generators(alpha: XiSequence, depth: int) -> list[Real]:
    """1, alpha_0, ..., alpha_depth: generators of tau(K_0) up to level depth."""
    return [Real.of(1)] + [alpha.real_at(k) for k in range(depth + 1)]
