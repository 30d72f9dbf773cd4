import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import THETA, digit_words, p_and, rationals_in
from ncsolenoid.checks import random_rational
from ncsolenoid.exact import PAdicInt, PAdicNumber, PAdicRational, Phase, Real, SolenoidError
from ncsolenoid.ktheory import trace_range
from ncsolenoid.morita import (
    LatticeSpec,
    MPoint,
    PerpSpec,
    eta,
    hadd,
    induced_alpha,
    iota,
    perp,
    perp_beta,
    perp_element,
    rho,
    spec_from_alpha,
    trace_scaling_check,
    winding_pi,
    zeta_canonical,
    zeta_digit_formula,
)
from ncsolenoid.solenoid import SolenoidPoint, psi
from ncsolenoid.xi import XiSequence


def frac_p_oracle(y: Fraction, p: int) -> Fraction:
    den, k = y.denominator, 0
    while den % p == 0:
        den //= p
        k += 1
    return Fraction(y.numerator * pow(den, -1, p**k) % p**k, p**k) if k else Fraction(0)


def R(p, x):
    return PAdicRational.from_fraction(p, Fraction(x))


def rational_thetas():
    return st.fractions(min_value=-5, max_value=5, max_denominator=50).filter(bool)


def nonzero_padics(p):
    return st.tuples(st.integers(-500, 500).filter(bool), st.integers(1, 60), st.integers(-2, 2)).filter(
        lambda t: t[1] % p
    ).map(lambda t: PAdicNumber.from_fraction(p, Fraction(t[0], t[1]) * Fraction(p) ** t[2]))


def hpoints(p):
    mp = st.builds(
        lambda q, t: MPoint(PAdicNumber.from_fraction(p, q), Real.of(t)),
        st.fractions(max_denominator=40),
        st.fractions(max_denominator=40),
    )
    return st.tuples(mp, mp)


# eta and rho


def test_eta_examples():
    spec = LatticeSpec.of(2, 1, Real.sym(THETA))
    a, b = iota(spec, R(2, "1/2"), R(2, 0)), iota(spec, R(2, 0), R(2, "1/2"))
    assert eta(a, b) == Phase((Real.sym(THETA) + 1) / 4)
    zero = MPoint.zero(2)
    assert eta(a, (a[0], zero)).is_zero()
    assert rho(a, a).is_zero()


@given(p_and(lambda p: st.tuples(hpoints(p), hpoints(p), hpoints(p))))
def test_eta_is_a_bicharacter(case):
    _, (a, a2, b) = case
    assert eta(hadd(a, a2), b) == eta(a, b) + eta(a2, b)
    assert eta(b, hadd(a, a2)) == eta(b, a) + eta(b, a2)
    assert rho(a, a).is_zero()


def test_eta_matches_definition_on_rationals():
    rng = random.Random(3)
    for _ in range(200):
        p = rng.choice((2, 3, 5, 7))
        q1, q4 = (Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(2))
        r1, r4 = (Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(2))
        a = (MPoint(PAdicNumber.from_fraction(p, q1), Real.of(r1)), MPoint.zero(p))
        b = (MPoint.zero(p), MPoint(PAdicNumber.from_fraction(p, q4), Real.of(r4)))
        assert eta(a, b) == Phase(r1 * r4 + frac_p_oracle(q1 * q4, p))


# iota and the induced parameter


def test_iota_examples():
    spec = LatticeSpec.of(3, 1, Real.sym(THETA))
    zero = iota(spec, R(3, 0), R(3, 0))
    assert zero == (MPoint.zero(3), MPoint.zero(3))
    m, n = iota(spec, R(3, "1/3"), R(3, 0))
    assert m.q.to_fraction() == Fraction(1, 3) and m.t == Real.sym(THETA) / 3
    assert n == MPoint.zero(3)


@given(p_and(lambda p: st.tuples(nonzero_padics(p), rational_thetas(), rationals_in(p), rationals_in(p), rationals_in(p), rationals_in(p))))
def test_iota_is_additive(case):
    p, (x, theta, r1, r2, s1, s2) = case
    spec = LatticeSpec(x, Real.of(theta))
    assert iota(spec, r1 + s1, r2 + s2) == hadd(iota(spec, r1, r2), iota(spec, s1, s2))


def test_induced_alpha_examples():
    sigma = Real.sym(THETA)
    for p in (2, 3, 5):
        alpha = induced_alpha(LatticeSpec.of(p, 1, sigma))
        for n in range(8):
            assert alpha.value_at(n) == Phase((sigma + 1) / p**n)
    ex = induced_alpha(LatticeSpec.of(5, Fraction(-1, 62), Fraction(1, 62)))
    assert ex == XiSequence.rational(5, Fraction(1, 62), (), (2, 0, 0))
    assert [ex.real_at(n).const for n in range(7)] == [Fraction(v, 62) for v in (1, 25, 5, 1, 25, 5, 1)]
    with pytest.raises(SolenoidError):
        LatticeSpec.of(5, 0, Fraction(1, 2))
    with pytest.raises(SolenoidError):
        induced_alpha(LatticeSpec.of(5, Fraction(1, 5), Fraction(1, 2)))


@given(p_and(lambda p: st.tuples(digit_words(p).filter(lambda w: not w.is_zero()), rational_thetas())))
def test_induced_alpha_round_trip(case):
    p, (J, theta) = case
    alpha = induced_alpha(LatticeSpec(PAdicNumber.from_padic_int(J), Real.of(theta)))
    for n in range(8):
        assert alpha.value_at(n) == Phase((theta + J.truncation(n)) / Fraction(p) ** n)
    if alpha.alpha0 and not alpha.digits.is_zero():
        again = induced_alpha(spec_from_alpha(alpha))
        assert again == alpha


def test_heisenberg_consistency_sample():
    rng = random.Random(5)
    for _ in range(30):
        p = rng.choice((2, 3, 5))
        J = PAdicInt(p, (rng.randrange(1, p),), (rng.randrange(p), rng.randrange(p)))
        alpha = XiSequence(p, Real.of(Fraction(rng.randint(1, 40), 41)), J)
        spec = spec_from_alpha(alpha)
        for _ in range(20):
            g = (random_rational(rng, p), random_rational(rng, p))
            h = (random_rational(rng, p), random_rational(rng, p))
            assert eta(iota(spec, *g), iota(spec, *h)) == psi(alpha, g, h)


# perp


def test_perp_spec_and_double_perp():
    spec = LatticeSpec.of(5, Fraction(-1, 62), Real.sym(THETA))
    ps = perp(spec)
    assert isinstance(ps, PerpSpec) and ps.x_inv.to_fraction() == -62
    back = perp(ps)
    assert back == spec
    rng = random.Random(1)
    for _ in range(50):
        r = (random_rational(rng, 5, 3), random_rational(rng, 5, 3))
        s = (random_rational(rng, 5, 3), random_rational(rng, 5, 3))
        assert eta(iota(back, *r), iota(back, *s)) == eta(iota(spec, *r), iota(spec, *s))


def test_perp_element_literal_form():
    spec = LatticeSpec.of(3, 2, Fraction(5, 7))
    (m, n) = perp_element(spec, R(3, "1/3"), R(3, "4/9"))
    assert (m.q.to_fraction(), m.t) == (Fraction(1, 3), Real.of(Fraction(-1, 3)))
    assert (n.q.to_fraction(), n.t) == (Fraction(2, 9), Real.of(Fraction(-4, 9) / Fraction(5, 7)))


@settings(max_examples=30)
@given(p_and(lambda p: st.tuples(nonzero_padics(p), rational_thetas())))
def test_rho_vanishes_on_perp(case):
    p, (x, theta) = case
    spec = LatticeSpec(x, Real.of(theta))
    gens = [R(p, 0)] + [PAdicRational(p, 1, k) for k in range(3)]
    for r1 in gens:
        for r2 in gens:
            d = iota(spec, r1, r2)
            for t1 in gens:
                for t2 in gens:
                    assert rho(d, perp_element(spec, t1, t2)).is_zero()


def test_perp_is_not_trivially_everything():
    """A point off D^perp pairs nontrivially with D: rho detects it."""
    spec = LatticeSpec.of(3, 1, Fraction(1, 2))
    off = (MPoint(PAdicNumber.from_fraction(3, Fraction(1, 3)), Real.of(0)), MPoint.zero(3))
    assert not rho(iota(spec, R(3, 0), R(3, 1)), off).is_zero()


def test_perp_beta_examples():
    beta = perp_beta(LatticeSpec.of(2, 1, Fraction(-2, 3)))
    assert [beta.real_at(n).const for n in range(10)] == [Fraction(1, 2 ** (n + 1)) for n in range(10)]
    alpha = induced_alpha(LatticeSpec.of(2, 1, Fraction(-2, 3)))
    assert [alpha.real_at(n).const for n in range(6)] == [Fraction(1, 3 * 2**n) for n in range(6)]


@given(p_and(lambda p: rational_thetas()))
def test_perp_beta_closed_form_for_x_one(case):
    p, theta = case
    beta = perp_beta(LatticeSpec.of(p, 1, theta))
    for n in range(11):
        assert beta.value_at(n) == Phase(1 - (theta + 1) / (p**n * theta))


@given(p_and(lambda p: st.tuples(nonzero_padics(p), rational_thetas())))
def test_perp_beta_general_formula(case):
    p, (x, theta) = case
    beta = perp_beta(LatticeSpec(x, Real.of(theta)))
    xinv = 1 / x.to_fraction()
    for n in range(8):
        expected = -1 / (theta * p**n) - frac_p_oracle(xinv / p**n, p)
        assert beta.value_at(n) == Phase(expected)
        assert 0 <= beta.digit(n) < p


@given(p_and(lambda p: st.tuples(nonzero_padics(p), rational_thetas(), st.data())))
def test_conjugate_multiplier_on_perp_is_psi_beta(case):
    p, (x, theta, data) = case
    spec = LatticeSpec(x, Real.of(theta))
    beta = perp_beta(spec)
    g = (data.draw(rationals_in(p, 4)), data.draw(rationals_in(p, 4)))
    h = (data.draw(rationals_in(p, 4)), data.draw(rationals_in(p, 4)))
    assert -eta(perp_element(spec, *g), perp_element(spec, *h)) == psi(beta, g, h)


def test_symbolic_perp_beta():
    sigma = Real.sym(THETA)
    beta = perp_beta(LatticeSpec.of(3, 1, sigma))
    for n in range(6):
        assert beta.value_at(n) == Phase(1 - (sigma + 1) / sigma / 3**n)


# trace scaling


def test_scaling_worked_case():
    spec = LatticeSpec.of(2, 1, Fraction(-2, 3))
    alpha, beta = induced_alpha(spec), perp_beta(spec)
    assert str(trace_range(alpha)) == "(1/3)Z[1/2]" and str(trace_range(beta)) == "Z[1/2]"
    report = trace_scaling_check(alpha, beta, Fraction(-2, 3))
    assert set(report.matches) == {Real.of(Fraction(3, 2)), Real.of(Fraction(-3, 2))}
    assert not report.theta_direction_holds and report.method == "exact"


def test_scaling_degenerate_and_disjoint():
    alpha = XiSequence.rational(2, Fraction(1, 3))
    report = trace_scaling_check(alpha, alpha, -1)
    assert set(report.matches) == {Real.of(1), Real.of(-1)}
    other = XiSequence.rational(2, Fraction(1, 7))
    assert not trace_scaling_check(alpha, other, Fraction(-2, 3)).relation_found


def test_scaling_symbolic():
    sigma = Real.sym(THETA)
    spec = LatticeSpec.of(2, 1, sigma)
    report = trace_scaling_check(induced_alpha(spec), perp_beta(spec), sigma)
    assert report.method == "generators"
    assert set(report.matches) == {1 / sigma, -1 / sigma}
    assert not report.theta_direction_holds


@given(p_and(lambda p: st.tuples(digit_words(p), rational_thetas())))
def test_scaling_relation_found_for_x_one_partners(case):
    p, (_, theta) = case
    spec = LatticeSpec.of(p, 1, theta)
    report = trace_scaling_check(induced_alpha(spec), perp_beta(spec), theta)
    assert report.relation_found


# winding line


def test_winding_examples():
    assert winding_pi(PAdicNumber.from_int(3, 0), 0, 5) == SolenoidPoint.identity(3, 5)
    point = winding_pi(PAdicNumber.from_int(2, 1), 0, 2)
    assert point.phases == (Phase(0), Phase(Fraction(1, 2)), Phase(Fraction(1, 4)))


@given(p_and(lambda p: st.tuples(rationals_in(p), st.integers(0, 12))))
def test_winding_kernel(case):
    p, (r, depth) = case
    f = r.to_fraction()
    assert winding_pi(PAdicNumber.from_fraction(p, f), -f, depth) == SolenoidPoint.identity(p, depth)


@given(p_and(lambda p: st.tuples(nonzero_padics(p), rationals_in(p), st.fractions(max_denominator=30))))
def test_winding_kernel_invariance(case):
    p, (gamma, r, t) = case
    f = r.to_fraction()
    assert winding_pi(gamma + f, Real.of(t) - f, 8) == winding_pi(gamma, t, 8)


@given(p_and(lambda p: st.tuples(st.integers(-10**4, 10**4), st.integers(1, 100), st.integers(0, 8))))
def test_zeta_digit_formula_agrees_for_units(case):
    p, (a, b, j) = case
    if a % p == 0 or b % p == 0:
        return
    gamma = PAdicNumber.from_fraction(p, Fraction(a, b))
    assert zeta_digit_formula(gamma, j) == zeta_canonical(gamma, j)


def test_zeta_digit_formula_differs_off_units():
    gamma = PAdicNumber.from_fraction(2, Fraction(1, 2))
    assert zeta_canonical(gamma, 1) == Fraction(1, 4)
    assert zeta_digit_formula(gamma, 1) != zeta_canonical(gamma, 1)
