import random
from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import THETA, p_and, xi_sequences
from ncsolenoid.classify import Isomorphic, NotIsomorphic, Unknown, isomorphic, tails_agree, verify_witness
from ncsolenoid.exact import PAdicInt, Real, Symbol
from ncsolenoid.checks import random_xi
from ncsolenoid.xi import XiSequence, reflect


def brute_force_iso(alpha: XiSequence, beta: XiSequence, bound: int = 14, window: int = 40) -> bool:
    """Oracle: some offsets m, n <= bound with alpha_{m+j} = beta'_{n+j} for all j < window."""
    for target in (beta, reflect(beta)):
        a = [alpha.real_at(i) for i in range(bound + window)]
        b = [target.real_at(i) for i in range(bound + window)]
        for m in range(bound + 1):
            for n in range(bound + 1):
                if a[m:m + window] == b[n:n + window]:
                    return True
    return False


def test_examples(ex5, ex7):
    a = XiSequence.rational(2, Fraction(1, 3))
    assert isomorphic(a, a) == Isomorphic(0, 0, False)
    assert isinstance(isomorphic(ex5, ex7), NotIsomorphic)
    assert "prime" in isomorphic(ex5, ex7).reason
    b = XiSequence.rational(2, Fraction(1, 6))
    assert isomorphic(a, b) == Isomorphic(1, 0, False)
    assert isomorphic(a, reflect(a)) == Isomorphic(0, 0, True)
    for m in range(12):
        assert a.real_at(1 + m) == b.real_at(m)


def test_distinct_symbols_are_unknown():
    a = XiSequence(2, Real.sym(THETA), PAdicInt(2))
    b = XiSequence(2, Real.sym(Symbol.from_decimal("phi", "0.618")), PAdicInt(2))
    assert isinstance(isomorphic(a, b), Unknown)


def test_rational_and_irrational_never_match():
    a = XiSequence(3, Real.sym(THETA), PAdicInt(3))
    assert isinstance(isomorphic(a, XiSequence.rational(3, Fraction(1, 2))), NotIsomorphic)


def test_periodic_against_aperiodic(ex5):
    assert isinstance(isomorphic(ex5, XiSequence.rational(5, Fraction(1, 62))), NotIsomorphic)


@given(p_and(xi_sequences), st.integers(0, 9))
def test_shift_isomorphism(case, k):
    _, alpha = case
    verdict = isomorphic(alpha, alpha.shift(k))
    assert isinstance(verdict, Isomorphic)
    assert verify_witness(alpha, alpha.shift(k), verdict)


@given(p_and(xi_sequences))
def test_reflection_branch(case):
    _, alpha = case
    verdict = isomorphic(alpha, reflect(alpha))
    assert isinstance(verdict, Isomorphic)
    assert verify_witness(alpha, reflect(alpha), verdict)
    if alpha.alpha0 != Real.of(0):
        assert isomorphic(alpha, reflect(reflect(alpha))) == Isomorphic(0, 0, False)


@given(p_and(lambda p: st.tuples(xi_sequences(p), xi_sequences(p))))
def test_symmetry(case):
    _, (a, b) = case
    forward, backward = isomorphic(a, b), isomorphic(b, a)
    assert type(forward) is type(backward)
    if isinstance(forward, Isomorphic):
        assert forward.reflected == backward.reflected
        swapped = Isomorphic(forward.offset_b, forward.offset_a, forward.reflected)
        assert verify_witness(b, a, swapped)
        assert verify_witness(a, b, forward)


def test_agrees_with_brute_force_tail_search():
    rng = random.Random(7)
    for i in range(120):
        p = rng.choice((2, 3, 5))
        base = random_xi(rng, p, symbolic=i % 4 == 0)
        kind = i % 3
        if kind == 0:
            a, b = base.shift(rng.randint(0, 5)), base.shift(rng.randint(0, 5))
        elif kind == 1:
            a, b = base.shift(rng.randint(0, 5)), reflect(base.shift(rng.randint(0, 5)))
        else:
            a, b = base, random_xi(rng, p, symbolic=i % 4 == 0)
        verdict = isomorphic(a, b)
        assert isinstance(verdict, Isomorphic) == brute_force_iso(a, b), (a, b, verdict)
        if isinstance(verdict, Isomorphic):
            assert verify_witness(a, b, verdict, depth=40)


def test_tails_need_digits_as_well_as_values():
    # alpha_0 = beta_0 = 0 but the carry digits differ
    a = XiSequence.rational(2, 0, (1,), (0,))
    b = XiSequence.rational(2, 0)
    assert not tails_agree(a, b, 0, 0)
    assert isinstance(isomorphic(a, b), NotIsomorphic)


def test_symbolic_shift_with_rescaled_symbol():
    sigma = Real.sym(THETA)
    a = XiSequence(3, sigma / 2, PAdicInt(3, (1,), (2, 0)))
    verdict = isomorphic(a.shift(4), a)
    assert verdict == Isomorphic(0, 4, False)
