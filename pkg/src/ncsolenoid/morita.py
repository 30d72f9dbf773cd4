"""Heisenberg multiplier on (Q_p x R)^2 and the Morita partners it produces.

An element of M x M^ (M = Q_p x R) is a pair of :class:`MPoint`. Both the
embedded lattice D = iota_{x,theta}(Z[1/p]^2) and its annihilator D^perp are
instances of one shape::

    L(a, b, c, d): (r1, r2) -> [(a*r1, b*r1), (c*r2, d*r2)]

with a, c in Q_p and b, d real. D is L(x, theta, 1, 1) and

    perp L(a, b, c, d) = L(1/c, -1/d, 1/a, -1/b),

since rho between the two is -r1*t2 + {r1*t2}_p and -t1*r2 + {t1*r2}_p, both
0 mod 1 on Z[1/p]. Applying perp twice returns L exactly.

Multiplier of a lattice. On L, eta(L(r1, r2), L(r3, r4)) = w*r1*r4 + {y*r1*r4}_p
with w = b*d and y = a*c. For r1*r4 = j/p^n and integer j, {j*y/p^n}_p = j*{y/p^n}_p
mod 1, so the solenoid parameter is alpha_n = lam * (w/p^n + {y/p^n}_p), lam = -1
for the conjugate multiplier. Split y = f + u with f = {y}_p in Z[1/p] and u in
Z_p; then {y/p^n}_p = (f + u_n)/p^n mod 1 with u_n the n-digit truncation, so

    alpha_n = (lam*(w + f) + (lam*u)_n) / p^n  (mod 1),

an element of Xi_p with carry word lam*u and offset lam*(w + f) (its integer
part folded into the word). For x = 1 the perp parameter is
1 - (theta + 1)/(p^n * theta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    PAdicInt,
    PAdicNumber,
    PAdicRational,
    Phase,
    Real,
    SolenoidError,
    frac_p,
    padic_invert,
)
from .exact.errors import same_prime
from .ktheory import RangeDescriptor, range_contains, trace_range
from .solenoid import SolenoidPoint
from .xi import XiSequence, normalized


@dataclass(frozen=True)
class MPoint:
    """A point (q, t) of Q_p x R."""

    q: PAdicNumber
    t: Real

    @classmethod
    def zero(cls, p: int) -> MPoint:
        return cls(PAdicNumber.from_int(p, 0), Real.of(0))

    def __add__(self, other: MPoint) -> MPoint:
        return MPoint(self.q + other.q, self.t + other.t)

    def __neg__(self) -> MPoint:
        return MPoint(-self.q, -self.t)


HPoint = tuple[MPoint, MPoint]


def hadd(a: HPoint, b: HPoint) -> HPoint:
    return a[0] + b[0], a[1] + b[1]


def eta(a: HPoint, b: HPoint) -> Phase:
    """eta(((q1,r1),(q2,r2)), ((q3,r3),(q4,r4))) = r1*r4 + {q1*q4}_p (mod 1)."""
    (m1, _), (_, m4) = a, b
    return Phase(m1.t * m4.t + (m1.q * m4.q).frac())


def rho(a: HPoint, b: HPoint) -> Phase:
    return eta(a, b) - eta(b, a)


def _as_real(value) -> Real:
    return Real.of(value)


def _as_padic(p: int, value) -> PAdicNumber:
    if isinstance(value, PAdicNumber):
        same_prime(p, value.p)
        return value
    if isinstance(value, PAdicInt):
        return PAdicNumber.from_padic_int(value)
    if isinstance(value, PAdicRational):
        return PAdicNumber.from_rational(value)
    return PAdicNumber.from_fraction(p, Fraction(value))


@dataclass(frozen=True)
class Lattice:
    """L(a, b, c, d); see the module docstring."""

    a: PAdicNumber
    b: Real
    c: PAdicNumber
    d: Real

    @property
    def p(self) -> int:
        return self.a.p

    def __post_init__(self):
        same_prime(self.a.p, self.c.p)
        if self.a.is_zero() or self.c.is_zero() or not self.b or not self.d:
            raise SolenoidError("lattice coefficients must be nonzero")

    def point(self, r1: PAdicRational, r2: PAdicRational) -> HPoint:
        same_prime(self.p, r1.p)
        same_prime(self.p, r2.p)
        f1, f2 = r1.to_fraction(), r2.to_fraction()
        return MPoint(self.a * f1, self.b * f1), MPoint(self.c * f2, self.d * f2)

    def perp(self) -> Lattice:
        return Lattice(padic_invert(self.c), -1 / self.d, padic_invert(self.a), -1 / self.b)


@dataclass(frozen=True)
class LatticeSpec:
    """D_{x,theta} = iota_{x,theta}(Z[1/p]^2)."""

    x: PAdicNumber
    theta: Real

    def __post_init__(self):
        if self.x.is_zero():
            raise SolenoidError("x must be a nonzero p-adic number")
        if not self.theta:
            raise SolenoidError("theta must be nonzero")

    @classmethod
    def of(cls, p: int, x, theta) -> LatticeSpec:
        return cls(_as_padic(p, x), _as_real(theta))

    @property
    def p(self) -> int:
        return self.x.p

    def lattice(self) -> Lattice:
        one = PAdicNumber.from_int(self.p, 1)
        return Lattice(self.x, self.theta, one, Real.of(1))


@dataclass(frozen=True)
class PerpSpec:
    """D_{x,theta}^perp = {[(t1, -t1), (x^-1 t2, -t2/theta)]}."""

    x_inv: PAdicNumber
    theta: Real

    def __post_init__(self):
        if self.x_inv.is_zero() or not self.theta:
            raise SolenoidError("x^-1 and theta must be nonzero")

    @property
    def p(self) -> int:
        return self.x_inv.p

    def lattice(self) -> Lattice:
        one = PAdicNumber.from_int(self.p, 1)
        return Lattice(one, Real.of(-1), self.x_inv, -1 / self.theta)


def iota(spec: LatticeSpec, r1: PAdicRational, r2: PAdicRational) -> HPoint:
    """[(x*r1, theta*r1), (r2, r2)]."""
    return spec.lattice().point(r1, r2)


def perp_element(spec: LatticeSpec | PerpSpec, t1: PAdicRational, t2: PAdicRational) -> HPoint:
    """[(t1, -t1), (x^-1*t2, -t2/theta)] for a LatticeSpec; for a PerpSpec the
    annihilator is D_{x,theta} again."""
    return perp(spec).lattice().point(t1, t2)


def perp(spec: LatticeSpec | PerpSpec) -> PerpSpec | LatticeSpec:
    if isinstance(spec, LatticeSpec):
        return PerpSpec(padic_invert(spec.x), spec.theta)
    return LatticeSpec(padic_invert(spec.x_inv), spec.theta)


def lattice_alpha(L: Lattice, conjugate: bool = False) -> XiSequence:
    """Parameter of C*(L, eta), or of C*(L, conj(eta)) when ``conjugate``."""
    p = L.p
    lam = -1 if conjugate else 1
    y = L.a * L.c
    f = y.frac()
    u = (y - f).to_padic_int()
    w = L.b * L.d
    return normalized(p, u if lam == 1 else -u, (w + f) * lam)


def induced_alpha(spec: LatticeSpec) -> XiSequence:
    """alpha_n = (theta + x_n)/p^n mod 1; needs x in Z_p."""
    if not spec.x.is_integral():
        raise SolenoidError(f"x has valuation {spec.x.valuation} < 0: not a p-adic integer")
    return lattice_alpha(spec.lattice())


def perp_beta(spec: LatticeSpec) -> XiSequence:
    """beta_n = -1/(theta*p^n) - {x^-1/p^n}_p mod 1, the parameter of C*(D^perp, conj(eta))."""
    return lattice_alpha(perp(spec).lattice(), conjugate=True)


def spec_from_alpha(alpha: XiSequence) -> LatticeSpec:
    """(x, theta) = (carry digits of alpha, alpha_0); requires alpha_0 != 0."""
    return LatticeSpec(PAdicNumber.from_padic_int(alpha.digits), alpha.alpha0)


@dataclass(frozen=True)
class ScalingReport:
    candidates: tuple[Real, ...]
    matches: tuple[Real, ...]
    theta_direction_holds: bool
    method: str
    depth: int | None = None

    @property
    def relation_found(self) -> bool:
        return bool(self.matches)


def _rational_ranges_scale(c: Fraction, ra: RangeDescriptor, rb: RangeDescriptor) -> bool:
    """c*(1/s_a)G = (1/s_b)G' iff G = G' and c*s_b/s_a is a unit of G."""
    if ra.kind != rb.kind:
        return False
    ratio = c * rb.s / ra.s
    if ra.kind == "lattice":
        return abs(ratio) == 1
    ratio = abs(ratio)
    p = ra.p
    while ratio.numerator % p == 0:
        ratio /= p
    while ratio.denominator % p == 0:
        ratio *= p
    return ratio == 1


def _generators(R: RangeDescriptor, depth: int) -> list[Real]:
    if R.kind == "lattice":
        return [Real.of(Fraction(1, R.s))]
    if R.kind == "localized":
        return [Real.of(Fraction(1, R.s * R.p**k)) for k in range(depth + 1)]
    return [Real.of(1)] + [R.alpha.real_at(k) for k in range(depth + 1)]


def _inverse(c: Real) -> Real | None:
    try:
        return 1 / c
    except SolenoidError:
        return None


def _contains_all(R: RangeDescriptor, values) -> bool:
    return all(range_contains(R, v) for v in values)


def trace_scaling_check(alpha: XiSequence, beta: XiSequence, theta, depth: int = 8) -> ScalingReport:
    """Which c in {theta, 1/theta, -theta, -1/theta} give c*range(alpha) = range(beta).

    Rational ranges are compared exactly. When either range involves an
    irrational symbol, equality is tested by generator inclusion in both
    directions up to ``depth``.
    """
    same_prime(alpha.p, beta.p)
    theta = Real.of(theta)
    if not theta:
        raise SolenoidError("theta must be nonzero")
    inv = _inverse(theta)
    candidates = [theta, -theta] + ([inv, -inv] if inv is not None else [])
    ra, rb = trace_range(alpha), trace_range(beta)
    exact = ra.kind != "symbolic" and rb.kind != "symbolic"
    matches = []
    for c in candidates:
        if exact:
            ok = c.is_rational and _rational_ranges_scale(c.const, ra, rb)
        else:
            c_inv = _inverse(c)
            ok = c_inv is not None and _contains_all(
                rb, [g * c for g in _generators(ra, depth)]
            ) and _contains_all(ra, [h * c_inv for h in _generators(rb, depth)])
        if ok:
            matches.append(c)
    return ScalingReport(
        tuple(candidates),
        tuple(matches),
        theta in matches,
        "exact" if exact else "generators",
        None if exact else depth,
    )


def zeta_canonical(gamma: PAdicNumber, j: int) -> Fraction:
    """{gamma/p^j}_p, the exponent of zeta_j(gamma)."""
    return frac_p(gamma, PAdicRational(gamma.p, 1, j))


def zeta_digit_formula(gamma: PAdicNumber, j: int) -> Fraction:
    """sum_{m=k}^{j} a_m / p^(j-m+k) mod 1 with gamma = sum_{m>=k} a_m p^m.

    This literal digit form agrees with :func:`zeta_canonical` when k = 0 and
    generally not otherwise.
    """
    if gamma.is_zero():
        return Fraction(0)
    p, k = gamma.p, gamma.valuation
    total = sum(
        (Fraction(gamma.unit.digit(m - k), Fraction(p) ** (j - m + k)) for m in range(k, j + 1)), Fraction(0)
    )
    return total - (total.numerator // total.denominator)


def winding_pi(gamma: PAdicNumber, t, depth: int) -> SolenoidPoint:
    """Pi(gamma, t) = zeta(gamma) * omega(t), coordinates 0..depth."""
    t = Real.of(t)
    p = gamma.p
    return SolenoidPoint(
        p, tuple(Phase(t / p**j + zeta_canonical(gamma, j)) for j in range(depth + 1))
    )
