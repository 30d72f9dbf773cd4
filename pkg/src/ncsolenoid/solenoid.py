"""Invariants of the twisted group algebra of Z[1/p]^2 with multiplier Psi_alpha.

Group elements are pairs of :class:`PAdicRational`; all multiplier values are
returned additively as :class:`Phase` (the exponent of ``exp(2*pi*i*...)``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exact import PAdicRational, Phase, Real, SolenoidError
from .exact.errors import same_prime
from .xi import Aperiodic, XiSequence, detect_periodicity

Pair = tuple[PAdicRational, PAdicRational]


def _check_pair(alpha: XiSequence, g: Pair) -> None:
    for r in g:
        same_prime(alpha.p, r.p)


def psi(alpha: XiSequence, g1: Pair, g2: Pair) -> Phase:
    """Psi_alpha(g1, g2) = alpha_{k1+k4} * q1 * q4 (mod 1) on reduced forms."""
    _check_pair(alpha, g1)
    _check_pair(alpha, g2)
    r1, r4 = g1[0], g2[1]
    if r1.is_zero() or r4.is_zero():
        return Phase(0)
    return alpha.value_at(r1.k + r4.k) * (r1.q * r4.q)


def antisymmetrized(alpha: XiSequence, g: Pair, h: Pair) -> Phase:
    """psi(g, h) - psi(h, g); zero for all h exactly when g is in the symmetrizer."""
    return psi(alpha, g, h) - psi(alpha, h, g)


@dataclass(frozen=True)
class Trivial:
    def __str__(self) -> str:
        return "{0}"


@dataclass(frozen=True)
class Full:
    """The symmetrizer b * Z[1/p]^2."""

    b: int

    def describe(self, p: int) -> str:
        return f"{self.b}·Z[1/{p}]^2"


class TraceCount(enum.Enum):
    UNIQUE = "unique"
    NON_UNIQUE = "non-unique"


def _generators(p: int, k: int) -> list[Pair]:
    e = PAdicRational(p, 1, k)
    z = PAdicRational(p, 0)
    return [(e, z), (z, e)]


def symmetrizer(alpha: XiSequence) -> Trivial | Full:
    """Trivial for aperiodic alpha, otherwise b * Z[1/p]^2 with b the lcm of the
    denominators of one period of values.

    The candidate b is certified on the generators (1/p^k, 0), (0, 1/p^k) for
    k up to pre + 2*per: (b/p^k, 0) and (0, b/p^k) must commute with every
    generator, and no proper divisor of b may.
    """
    verdict = detect_periodicity(alpha)
    if isinstance(verdict, Aperiodic):
        return Trivial()
    b = lcm(*(alpha.real_at(n).const.denominator for n in range(verdict.period)))
    depth = len(alpha.pre) + 2 * len(alpha.per)
    if not _commutes_with_generators(alpha, b, depth):
        raise AssertionError(f"symmetrizer candidate b={b} failed certification")
    # commuting multiples form a group, so checking b/l for primes l | b covers every proper divisor
    for ell in _prime_factors(b):
        if _commutes_with_generators(alpha, b // ell, depth):
            raise AssertionError(f"symmetrizer candidate b={b} is not minimal (b/{ell} works)")
    return Full(b)


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _commutes_with_generators(alpha: XiSequence, b: int, depth: int) -> bool:
    p = alpha.p
    z = PAdicRational(p, 0)
    for k in range(depth + 1):
        gb = PAdicRational(p, b, k)
        for g in ((gb, z), (z, gb)):
            for k2 in range(depth + 1):
                for h in _generators(p, k2):
                    if not antisymmetrized(alpha, g, h).is_zero():
                        return False
    return True


def is_simple(alpha: XiSequence) -> bool:
    return isinstance(detect_periodicity(alpha), Aperiodic)


def trace_count(alpha: XiSequence) -> TraceCount:
    return TraceCount.UNIQUE if is_simple(alpha) else TraceCount.NON_UNIQUE


@dataclass(frozen=True)
class SolenoidPoint:
    """Truncation (phi_0, ..., phi_depth) of a point of the p-solenoid, z_n = exp(2 pi i phi_n)."""

    p: int
    phases: tuple[Phase, ...]

    def __post_init__(self):
        phases = tuple(Phase.of(f) for f in self.phases)
        if not phases:
            raise SolenoidError("a solenoid point needs at least phi_0")
        object.__setattr__(self, "phases", phases)
        for n in range(len(phases) - 1):
            if phases[n + 1] * self.p != phases[n]:
                raise SolenoidError(f"p*phi_{n + 1} != phi_{n} (mod 1): not a point of the solenoid")

    @property
    def depth(self) -> int:
        return len(self.phases) - 1

    @classmethod
    def identity(cls, p: int, depth: int) -> SolenoidPoint:
        return cls(p, (Phase(0),) * (depth + 1))

    @classmethod
    def from_top(cls, p: int, top, depth: int) -> SolenoidPoint:
        """The point whose deepest coordinate is ``top``; shallower ones are p-th powers."""
        phases = [Phase.of(top)]
        for _ in range(depth):
            phases.append(phases[-1] * p)
        return cls(p, tuple(reversed(phases)))


def dual_action(alpha: XiSequence, r: PAdicRational, z: SolenoidPoint) -> SolenoidPoint:
    """theta^alpha_r (z): phi_n -> phi_n + q * alpha_{k+n} for r = q/p^k."""
    same_prime(alpha.p, r.p)
    same_prime(alpha.p, z.p)
    if r.is_zero():
        return z
    return SolenoidPoint(
        z.p, tuple(phi + alpha.value_at(r.k + n) * r.q for n, phi in enumerate(z.phases))
    )


def pair(r: PAdicRational, z: SolenoidPoint) -> Phase:
    """<q/p^k, z> = q * phi_k."""
    same_prime(r.p, z.p)
    if r.is_zero():
        return Phase(0)
    if r.k > z.depth:
        raise SolenoidError(f"pairing with q/p^{r.k} needs depth >= {r.k}, point has depth {z.depth}")
    return z.phases[r.k] * r.q


@dataclass(frozen=True)
class StageDescriptor:
    """Stage A_{alpha_{2n}} of the inductive limit of rotation algebras."""

    n: int
    theta: Phase
    embedding_exponent: int
    generator_images: dict

    def __hash__(self):
        return hash((self.n, self.theta, self.embedding_exponent))


def limit_stage(alpha: XiSequence, n: int) -> StageDescriptor:
    p = alpha.p
    images = {
        "connecting": {"U": f"U^{p}", "V": f"V^{p}"},
        "into_limit": {"U": f"W(1/{p}^{n}, 0)", "V": f"W(0, 1/{p}^{n})"},
    }
    return StageDescriptor(n, alpha.value_at(2 * n), p, images)


@dataclass(frozen=True)
class ModuleDescriptor:
    """A projective module recorded by its K_0 class (z, r) and trace value."""

    k0_class: tuple[int, PAdicRational]
    trace: Real


def projective_module(alpha: XiSequence, z: int, q: int, N: int) -> ModuleDescriptor:
    """Descriptor of a projective module with trace gamma = z + q * alpha_N.

    Requires irrational alpha_0 and gamma > 0 (decided on the approximant).
    The class is (z', q/p^N) with the p-power cancelled out of q/p^N; z'
    absorbs the integer shift so that tau(class) = gamma holds exactly.
    """
    if not alpha.is_symbolic:
        raise SolenoidError("projective_module requires an irrational alpha_0")
    gamma = alpha.real_at(N) * q + z
    if gamma.sign() <= 0:
        raise SolenoidError(f"trace gamma = {gamma} is not positive")
    r = PAdicRational(alpha.p, q, N)
    J = alpha.digits
    # q*alpha_N = r.q * (alpha_k + (J_N - J_k)/p^k) with k = r.k
    shift = Fraction(r.q * (J.truncation(N) - J.truncation(r.k)), alpha.p**r.k)
    assert shift.denominator == 1
    return ModuleDescriptor((z + int(shift), r), gamma)


def group_elements(p: int, values: Sequence) -> Pair:
    """Convenience: build a pair of PAdicRationals from two rationals."""
    a, b = values
    return PAdicRational.from_fraction(p, Fraction(a)), PAdicRational.from_fraction(p, Fraction(b))
