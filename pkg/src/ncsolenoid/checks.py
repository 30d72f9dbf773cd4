"""Seeded random samplers and identity suites shared by the CLI and the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import PAdicInt, PAdicRational, Real, Symbol
from .ktheory import K0Element, k0_add, k0_neg, k0_trace, k0_zero, xi_J
from .solenoid import psi
from .xi import XiSequence

DEFAULT_SAMPLES = 1000
DEFAULT_MAX_EXP = 6
SAMPLE_SYMBOL = Symbol.from_decimal("theta", "0.41421356237309504880")


def random_rational(rng: random.Random, p: int, max_exp: int = DEFAULT_MAX_EXP, bound: int = 10**4) -> PAdicRational:
    return PAdicRational(p, rng.randint(-bound, bound), rng.randint(0, max_exp))


def random_pair(rng: random.Random, p: int, max_exp: int = DEFAULT_MAX_EXP):
    return random_rational(rng, p, max_exp), random_rational(rng, p, max_exp)


def random_word(rng: random.Random, p: int, max_pre: int = 4, max_per: int = 4) -> PAdicInt:
    pre = tuple(rng.randrange(p) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randrange(p) for _ in range(rng.randint(1, max_per)))
    return PAdicInt(p, pre, per)


def random_alpha0(rng: random.Random, symbolic: bool = False, max_den: int = 200):
    m = rng.randint(1, max_den)
    j = rng.randrange(m)
    if symbolic:
        # theta in (0, 1), so (j + theta)/m lies in (j/m, (j+1)/m)
        return (Real.sym(SAMPLE_SYMBOL) + j) / m
    return Real.of(Fraction(j, m))


def random_xi(rng: random.Random, p: int, symbolic: bool = False) -> XiSequence:
    return XiSequence(p, random_alpha0(rng, symbolic), random_word(rng, p))


def _padd(g, h):
    return g[0] + h[0], g[1] + h[1]


def psi_cocycle_suite(p: int, samples: int = DEFAULT_SAMPLES, seed: int = 0, symbolic: bool = False,
                      max_exp: int = DEFAULT_MAX_EXP) -> dict:
    """psi(g,h) + psi(g+h,k) = psi(h,k) + psi(g,h+k) on random triples, each with a fresh alpha."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        alpha = random_xi(rng, p, symbolic)
        g, h, k = (random_pair(rng, p, max_exp) for _ in range(3))
        lhs = psi(alpha, g, h) + psi(alpha, _padd(g, h), k)
        rhs = psi(alpha, h, k) + psi(alpha, g, _padd(h, k))
        failures += lhs != rhs
    return {"p": p, "symbolic": symbolic, "checked": samples, "failures": failures}


def xi_suite(p: int, samples: int = DEFAULT_SAMPLES, seed: int = 0, max_exp: int = DEFAULT_MAX_EXP) -> dict:
    """xi_J integer-valued (enforced inside xi_J), symmetric, and an additive 2-cocycle."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        J = random_word(rng, p)
        a, b, c = (random_rational(rng, p, max_exp) for _ in range(3))
        ok = xi_J(J, a, b) == xi_J(J, b, a)
        ok &= xi_J(J, a, b) + xi_J(J, a + b, c) == xi_J(J, b, c) + xi_J(J, a, b + c)
        failures += not ok
    return {"p": p, "checked": samples, "failures": failures}


def random_k0(rng: random.Random, p: int, max_exp: int = DEFAULT_MAX_EXP) -> K0Element:
    return K0Element(rng.randint(-1000, 1000), random_rational(rng, p, max_exp))


def k0_suite(p: int, samples: int = DEFAULT_SAMPLES, seed: int = 0, symbolic: bool = False) -> dict:
    """Group axioms of the extension, negation, and additivity of the trace."""
    rng = random.Random(seed)
    axiom_failures = trace_failures = 0
    for _ in range(samples):
        alpha = random_xi(rng, p, symbolic)
        J = alpha.digits
        a, b, c = (random_k0(rng, p) for _ in range(3))
        zero = k0_zero(p)
        ok = k0_add(J, k0_add(J, a, b), c) == k0_add(J, a, k0_add(J, b, c))
        ok &= k0_add(J, a, b) == k0_add(J, b, a)
        ok &= k0_add(J, a, zero) == a
        ok &= k0_add(J, a, k0_neg(J, a)) == zero
        axiom_failures += not ok
        trace_failures += k0_trace(alpha, k0_add(J, a, b)) != k0_trace(alpha, a) + k0_trace(alpha, b)
    return {
        "p": p,
        "checked": samples,
        "axiom_failures": axiom_failures,
        "trace_failures": trace_failures,
    }
