from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from ncsolenoid.exact import PAdicInt, PAdicRational, Real, Symbol
from ncsolenoid.xi import XiSequence

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7)
THETA = Symbol.from_decimal("theta", "0.41421356237309504880")

primes = st.sampled_from(PRIMES)


def digit_words(p, max_pre=4, max_per=4):
    digit = st.integers(0, p - 1)
    return st.builds(
        lambda pre, per: PAdicInt(p, tuple(pre), tuple(per)),
        st.lists(digit, max_size=max_pre),
        st.lists(digit, min_size=1, max_size=max_per),
    )


def rationals_in(p, max_exp=6, bound=10**4):
    return st.builds(lambda n, e: PAdicRational(p, n, e), st.integers(-bound, bound), st.integers(0, max_exp))


def rational_alpha0():
    return st.integers(1, 300).flatmap(lambda m: st.integers(0, m - 1).map(lambda j: Fraction(j, m)))


def symbolic_alpha0():
    return st.integers(1, 50).flatmap(
        lambda m: st.integers(0, m - 1).map(lambda j: (Real.sym(THETA) + j) / m)
    )


def xi_sequences(p, symbolic=None):
    if symbolic is None:
        a0 = st.one_of(rational_alpha0().map(Real.of), symbolic_alpha0())
    elif symbolic:
        a0 = symbolic_alpha0()
    else:
        a0 = rational_alpha0().map(Real.of)
    return st.builds(lambda a, J: XiSequence(p, a, J), a0, digit_words(p))


def p_and(strategy_of_p):
    """(p, value) with value drawn from strategy_of_p(p)."""
    return primes.flatmap(lambda p: strategy_of_p(p).map(lambda v: (p, v)))


@pytest.fixture
def ex7():
    return XiSequence.rational(7, Fraction(2, 7))


@pytest.fixture
def ex5():
    return XiSequence.rational(5, Fraction(1, 62), (), (2, 0, 0))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
