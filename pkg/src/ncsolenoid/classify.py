"""*-isomorphism of noncommutative solenoids (prime p).

Two algebras are isomorphic iff the primes agree and some tail of alpha equals
some tail of beta or of its reflection. Tails are compared exactly: values at
the offsets plus the carry digits from there on.

The offset search is complete, not a bounded scan:

* if tails agree at (m, n) they agree at (m+t, n+t) for every t, and once both
  indices are past the preperiods they also agree at (m-L, n-L), L the lcm of
  the periods; so along a fixed diagonal m - n = d it suffices to test one
  window of L offsets;
* rational aperiodic: v_p(alpha_m) = v_p(alpha_0 + J) - m for large m, which
  pins the only possible diagonal;
* irrational: the symbolic part of alpha_m is (symbolic part of alpha_0)/p^m,
  which again pins the diagonal;
* periodic: values are purely periodic, so offsets below the periods suffice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exact import rational_valuation
from .xi import Periodic, XiSequence, detect_periodicity, padic_offset_valuation, reflect


@dataclass(frozen=True)
class Isomorphic:
    offset_a: int
    offset_b: int
    reflected: bool


@dataclass(frozen=True)
class NotIsomorphic:
    reason: str


@dataclass(frozen=True)
class Unknown:
    reason: str


IsoVerdict = Isomorphic | NotIsomorphic | Unknown


def _period_lcm(a: XiSequence, b: XiSequence) -> int:
    return lcm(len(a.per), len(b.per))


def tails_agree(a: XiSequence, b: XiSequence, m: int, n: int) -> bool:
    if a.real_at(m) != b.real_at(n):
        return False
    span = max(len(a.pre), len(b.pre)) + _period_lcm(a, b)
    return all(a.digit(m + j) == b.digit(n + j) for j in range(span))


def _minimize(a: XiSequence, b: XiSequence, m: int, n: int) -> tuple[int, int]:
    # alpha_{m-1} = p*alpha_m - b_{m-1}, so equal earlier values extend the match
    while m > 0 and n > 0 and a.real_at(m - 1) == b.real_at(n - 1):
        m, n = m - 1, n - 1
    return m, n


def _diagonal(a: XiSequence, b: XiSequence) -> int | None:
    """The only possible m - n for a tail match, or None when none can exist."""
    if a.is_symbolic:
        sa, sb = a.alpha0.nonconst(), b.alpha0.nonconst()
        powers = {e for e, _ in sa.terms}
        if powers != {e for e, _ in sb.terms}:
            return None
        ratios = {sb.coeff(e) / sa.coeff(e) for e in powers}
        if len(ratios) != 1:
            return None
        (ratio,) = ratios
        # sb/p^n = sa/p^m  <=>  ratio = p^(n-m)
        if ratio <= 0:
            return None
        e = rational_valuation(ratio, a.p)
        if ratio != Fraction(a.p) ** e:
            return None
        return -e
    va, vb = padic_offset_valuation(a), padic_offset_valuation(b)
    return va - vb


def _search(a: XiSequence, b: XiSequence) -> tuple[int, int] | None:
    periodic_a = isinstance(detect_periodicity(a), Periodic)
    periodic_b = isinstance(detect_periodicity(b), Periodic)
    if periodic_a != periodic_b:
        return None
    if periodic_a:
        for m in range(len(a.per)):
            for n in range(len(b.per)):
                if tails_agree(a, b, m, n):
                    return _minimize(a, b, m, n)
        return None
    d = _diagonal(a, b)
    if d is None:
        return None
    start = max(len(a.pre), len(b.pre) + d, d, 0)
    for m in range(start, start + _period_lcm(a, b)):
        if tails_agree(a, b, m, m - d):
            return _minimize(a, b, m, m - d)
    return None


def isomorphic(alpha: XiSequence, beta: XiSequence) -> IsoVerdict:
    if alpha.p != beta.p:
        return NotIsomorphic(f"prime mismatch: {alpha.p} vs {beta.p}")
    if alpha.is_symbolic != beta.is_symbolic:
        return NotIsomorphic("one sequence has rational entries, the other irrational ones")
    if alpha.is_symbolic and alpha.alpha0.symbol != beta.alpha0.symbol:
        return Unknown(
            f"distinct irrational symbols {alpha.alpha0.symbol.name!r} and {beta.alpha0.symbol.name!r}"
        )
    for reflected, target in ((False, beta), (True, reflect(beta))):
        found = _search(alpha, target)
        if found is not None:
            return Isomorphic(found[0], found[1], reflected)
    return NotIsomorphic("no common tail with beta or its reflection")


def verify_witness(alpha: XiSequence, beta: XiSequence, verdict: Isomorphic, depth: int | None = None) -> bool:
    """Compare values alpha_{m+j} and beta'_{n+j} directly for j < depth."""
    target = reflect(beta) if verdict.reflected else beta
    if depth is None:
        depth = max(len(alpha.pre), len(beta.pre)) + 2 * _period_lcm(alpha, beta) + 2
    return all(
        alpha.real_at(verdict.offset_a + j) == target.real_at(verdict.offset_b + j) for j in range(depth)
    )
