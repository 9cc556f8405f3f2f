import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from krkit.qnum import (ONE, ZERO, LaurentPoly, QRat, bar, in_A, in_one_plus_qA, in_qA,
                        order_cmp, qbinom, qfactorial, qint, qrat, qs_pow, render, val0)

q = sympy.symbols("q")

coeffs = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4)
polys = coeffs.map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rats = st.builds(lambda a, b: QRat(a, b), polys, nonzero_polys)


def to_sympy(x: QRat):
    def lp(p):
        return sum(sympy.Rational(c) * q ** e for e, c in p.items())
    return lp(x.num) / lp(x.den)


def gauss_oracle(m, n):
    """Non-symmetric Gaussian binomial from sympy products, recentred."""
    top = sympy.prod([1 - q ** (2 * (m - k)) for k in range(n)])
    bot = sympy.prod([1 - q ** (2 * (k + 1)) for k in range(n)])
    return sympy.expand(sympy.cancel(top / bot) * q ** (-n * (m - n)))


def test_qint_values():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert render(qint(3)) == "q^2 + 1 + q^-2"
    assert qint(-2) == -qint(2)
    assert qint(2, 2) == qs_pow(2) + qs_pow(-2)


def test_qbinom_matches_sympy_oracle():
    for m in range(0, 7):
        for n in range(0, m + 1):
            got = to_sympy(qbinom(m, n))
            assert sympy.simplify(got - gauss_oracle(m, n)) == 0, (m, n)


def test_qbinom_negative_top_and_bottom():
    assert qbinom(3, -1) == ZERO
    assert qbinom(2, 3) == ZERO
    # [-1, n] = (-1)^n
    for n in range(5):
        assert qbinom(-1, n) == qrat((-1) ** n)


@given(st.integers(-6, 8), st.integers(1, 5), st.integers(1, 3))
def test_pascal_rule(m, n, p):
    lhs = qbinom(m, n, p)
    rhs = qs_pow(p * n) * qbinom(m - 1, n, p) + qs_pow(-p * (m - n)) * qbinom(m - 1, n - 1, p)
    assert lhs == rhs


@given(st.integers(0, 9), st.integers(0, 9))
def test_binomial_symmetry_and_bar(m, n):
    assume(n <= m)
    assert qbinom(m, n) == qbinom(m, m - n)
    assert bar(qbinom(m, n)) == qbinom(m, n)


def test_factorial_relation():
    for m in range(6):
        for n in range(m + 1):
            assert qbinom(m, n) * qfactorial(n) * qfactorial(m - n) == qfactorial(m)


@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if not b.is_zero():
        assert (a / b) * b == a


@given(rats)
def test_sympy_roundtrip(a):
    b = qs_pow(1) + qrat(2)
    assert sympy.simplify(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(rats, rats, rats)
def test_order_is_total_and_compatible(a, b, c):
    assert order_cmp(a, b) == -order_cmp(b, a)
    if order_cmp(a, b) <= 0 and order_cmp(b, c) <= 0:
        assert order_cmp(a, c) <= 0
    assert order_cmp(a + c, b + c) == order_cmp(a, b)


def test_order_examples():
    # q_s is a positive infinitesimal
    assert order_cmp(qs_pow(1), ZERO) == 1
    assert order_cmp(qs_pow(1), qrat(1) / 1000) == -1
    assert order_cmp(qs_pow(-1), qrat(1000)) == 1
    assert order_cmp(-qs_pow(2), ZERO) == -1


def test_ring_A_membership():
    assert in_A(ONE / (ONE + qs_pow(1)))
    assert not in_A(qs_pow(-1))
    assert in_qA(qs_pow(3), 3) and not in_qA(qs_pow(2), 3)
    assert in_one_plus_qA(ONE + qs_pow(2))
    assert not in_one_plus_qA(qrat(2))
    assert val0(ZERO) == float("inf")


def test_render_with_denominator():
    assert render(qs_pow(2), 2) == "q"
    assert render(qs_pow(1), 2) == "q_s"
    assert render(ONE / (ONE + qs_pow(2))) == "(1)/(q^2 + 1)"


def test_small_arithmetic_examples():
    qs = qs_pow(1)
    assert (qs + ONE) * (qs - ONE) == qs_pow(2) - ONE
    assert ONE / qs == qs_pow(-1)
    assert (qs_pow(2) - qs_pow(-2)) / (qs - qs_pow(-1)) == qint(2)
    assert val0(ONE / (ONE + qs)) == 0 and val0(qs_pow(-1)) == -1
    assert val0(qint(2)) == -1
    assert order_cmp(qs_pow(-1), qrat(5)) == 1
    assert bar(qs) == qs_pow(-1)
    assert qbinom(-1, 1) == -ONE
