"""Exact arithmetic in Q(q_s), where q_s = q^(1/D).

Elements are kept as a Laurent numerator over a polynomial denominator with
nonzero constant term, so the valuation at q_s = 0 and the leading series
coefficient can be read off directly.  ``LaurentPoly`` is the ring
Q[q_s, q_s^-1]; ``QRat`` is its fraction field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

Number = Union[int, Fraction]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Finite sum of c_k q_s^k with rational c_k."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Dict[int, Number] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    c[int(k)] = _clean(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> "LaurentPoly":
        return cls._raw({exp: _clean(coeff)} if coeff else {})

    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        return cls.monomial(0, c)

    def items(self) -> List[Tuple[int, Number]]:
        return sorted(self._c.items())

    def coeff(self, k: int) -> Number:
        return self._c.get(k, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def low(self) -> int:
        return min(self._c)

    @property
    def high(self) -> int:
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = _clean(s)
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        c: Dict[int, Number] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                c[a + b] = c.get(a + b, 0) + x * y
        return LaurentPoly({k: v for k, v in c.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def substitute_power(self, m: int) -> "LaurentPoly":
        """Replace q_s by q_s^m."""
        return LaurentPoly._raw({e * m: v for e, v in self._c.items()})

    def evaluate(self, x):
        return sum(v * x**e for e, v in self._c.items())

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._c.items()))})"

    def __str__(self):
        return render_laurent(self, 1)


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return None


# dense polynomial helpers (ascending coefficient lists, no trailing zeros)

def _to_dense(p: LaurentPoly, low: int) -> List[Fraction]:
    n = p.high - low + 1
    out = [Fraction(0)] * n
    for e, v in p._c.items():
        out[e - low] = Fraction(v)
    return out


def _trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_dense(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    lead = b[-1]
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        quot[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(quot), _trim(a[: len(b) - 1])


def _gcd_dense(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _from_dense(a: Iterable[Fraction], low: int = 0) -> LaurentPoly:
    return LaurentPoly({low + i: c for i, c in enumerate(a) if c})


def laurent_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient a/b, which must be a Laurent polynomial."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly()
    if b.is_monomial():
        (e, v), = b._c.items()
        return LaurentPoly({k - e: Fraction(c) / v for k, c in a._c.items()})
    quot, rem = _divmod_dense(_to_dense(a, a.low), _to_dense(b, b.low))
    if rem:
        raise ArithmeticError("inexact Laurent division")
    return _from_dense(quot, a.low - b.low)


class QRat:
    """Element of Q(q_s): ``num/den`` with den(0) = 1 and gcd(num, den) = 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if num is None or den is None:
            raise TypeError("QRat expects Laurent polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.const(1)
            return
        if den.is_monomial():
            (e, v), = den._c.items()
            self.num = LaurentPoly({k - e: Fraction(c) / v for k, c in num._c.items()})
            self.den = LaurentPoly.const(1)
            return
        lo = den.low
        nd = _to_dense(num, num.low)
        dd = _to_dense(den, lo)
        g = _gcd_dense(nd, dd)
        if len(g) > 1:
            nd, _ = _divmod_dense(nd, g)
            dd, _ = _divmod_dense(dd, g)
        c0 = dd[0]
        shift = num.low - lo
        self.num = _from_dense([c / c0 for c in nd], shift)
        self.den = _from_dense([c / c0 for c in dd], 0)

    @classmethod
    def _laurent(cls, p: LaurentPoly) -> "QRat":
        obj = cls.__new__(cls)
        obj.num = p
        obj.den = _ONE_POLY
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if isinstance(x, LaurentPoly):
            return cls._laurent(x)
        if isinstance(x, (int, Fraction)):
            return cls._laurent(LaurentPoly.const(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to QRat")

    def is_laurent(self) -> bool:
        return self.den == _ONE_POLY

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        obj = QRat.__new__(QRat)
        obj.num, obj.den, obj._hash = -self.num, self.den, None
        return obj

    def __add__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.is_laurent():
                return QRat._laurent(self.num + other.num)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.is_laurent() and other.is_laurent():
            return QRat._laurent(self.num * other.num)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q_s)")
        if self.is_laurent() and other.is_laurent() and other.num.is_monomial():
            return QRat._laurent(laurent_exact_div(self.num, other.num))
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_laurent():
            return QRat._laurent(self.num**n)
        return QRat(self.num**n, self.den**n)

    def bar(self) -> "QRat":
        return QRat(self.num.bar(), self.den.bar())

    def substitute_power(self, m: int) -> "QRat":
        return QRat(self.num.substitute_power(m), self.den.substitute_power(m))

    def __repr__(self):
        return f"QRat({render(self, 1)!r})"

    def __str__(self):
        return render(self, 1)


_ONE_POLY = LaurentPoly.const(1)
ZERO = QRat._laurent(LaurentPoly())
ONE = QRat._laurent(LaurentPoly.const(1))


def qs_pow(k: int, coeff: Number = 1) -> QRat:
    """The element coeff * q_s^k."""
    return QRat._laurent(LaurentPoly.monomial(k, coeff))


def qrat(x) -> QRat:
    return QRat.coerce(x)


# valuation and order

def val0(x) -> float | int:
    """Order of vanishing at q_s = 0 (infinity for zero)."""
    x = QRat.coerce(x)
    if x.is_zero():
        return float("inf")
    return x.num.low


def leading_coeff(x) -> Number:
    """Lowest-order coefficient of the expansion at q_s = 0."""
    x = QRat.coerce(x)
    if x.is_zero():
        return 0
    return x.num.coeff(x.num.low)


def in_A(x) -> bool:
    """Membership in the local ring of rational functions regular at 0."""
    return val0(x) >= 0


def in_qA(x, shift: int = 1) -> bool:
    """Membership in q_s^shift A."""
    return val0(x) >= shift


def in_one_plus_qA(x) -> bool:
    return val0(QRat.coerce(x) - ONE) >= 1


def sign(x) -> int:
    c = leading_coeff(x)
    return (c > 0) - (c < 0)


def order_cmp(f, g) -> int:
    """Compare in the ordered field where q_s is a positive infinitesimal."""
    return sign(QRat.coerce(f) - QRat.coerce(g))


def bar(x) -> QRat:
    return QRat.coerce(x).bar()


# quantum integers and binomials

@lru_cache(maxsize=None)
def qint(n: int, node_power: int = 1) -> QRat:
    """[n] at q_i = q_s^node_power."""
    if n < 0:
        return -qint(-n, node_power)
    return QRat._laurent(
        LaurentPoly({node_power * (n - 1 - 2 * k): 1 for k in range(n)})
    )


@lru_cache(maxsize=None)
def qfactorial(n: int, node_power: int = 1) -> QRat:
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k, node_power)
    return out


@lru_cache(maxsize=None)
def qbinom(m: int, n: int, node_power: int = 1) -> QRat:
    """Symmetric Gaussian binomial [m, n] via the falling product formula.

    Valid for every integer m; zero when n < 0.
    """
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    top = LaurentPoly.const(1)
    for k in range(n):
        top = top * qint(m - k, node_power).num
    return QRat._laurent(laurent_exact_div(top, qfactorial(n, node_power).num))


# rendering

def _fmt_coeff(c: Number) -> str:
    return str(c)


def render_laurent(p: LaurentPoly, D: int = 1) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.items(), key=lambda t: -t[0]):
        if e == 0:
            body = None
        elif e % D == 0:
            k = e // D
            body = "q" if k == 1 else f"q^{k}"
        else:
            body = "q_s" if e == 1 else f"q_s^{e}"
        if body is None:
            term = _fmt_coeff(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{_fmt_coeff(abs(c))}*{body}"
        neg = c < 0
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


def render(x, D: int = 1) -> str:
    """Human-readable form using powers of q where D divides the exponent."""
    x = QRat.coerce(x)
    if x.is_laurent():
        return render_laurent(x.num, D)
    return f"({render_laurent(x.num, D)})/({render_laurent(x.den, D)})"
