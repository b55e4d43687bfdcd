"""Exact scalars: rationals, Laurent polynomials in t = q^(1/M), and their fractions.

Every operator entry in this package is a QScalar: a reduced fraction of
Laurent polynomials in one symbol t over Q.  The lattice divisor M fixes the
meaning of t, so that q = t^M and fractional q-powers such as q^(m^2/4) have
integer t-exponents once M is a multiple of 4*lcm(d_i).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Union

Rational = Fraction

ScalarLike = Union[int, Fraction, "QScalar"]


class LaurentPoly:
    """Laurent polynomial in t with Fraction coefficients, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    @staticmethod
    def constant(c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({0: c} if c else {})

    @staticmethod
    def monomial(exp: int, c=1) -> "LaurentPoly":
        return LaurentPoly({exp: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: x * c for e, x in self.coeffs.items()} if c else {}
        return res

    def shift(self, k: int) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def rescale_exponents(self, factor: int) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e * factor: c for e, c in self.coeffs.items()}
        return res

    def evaluate_at_one(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def divmod_poly(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division for true polynomials (min_exp >= 0)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.coeffs)
        quot: dict[int, Fraction] = {}
        dmax = other.max_exp()
        dlead = other.coeffs[dmax]
        while rem and max(rem) >= dmax:
            e = max(rem)
            f = rem[e] / dlead
            quot[e - dmax] = f
            for de, dc in other.coeffs.items():
                k = e - dmax + de
                s = rem.get(k, Fraction(0)) - f * dc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        q = LaurentPoly.__new__(LaurentPoly)
        q.coeffs = quot
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = rem
        return q, r

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts)

    __repr__ = __str__


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two true polynomials over Q."""
    while not b.is_zero():
        _, r = a.divmod_poly(b)
        a, b = b, r
    if a.is_zero():
        return a
    lead = a.coeffs[a.max_exp()]
    return a.scale(1 / lead)


def _strip_t_power(p: LaurentPoly) -> tuple[int, LaurentPoly]:
    """Write p = t^a * p0 with p0 a polynomial, p0(0) != 0 (p nonzero)."""
    a = p.min_exp()
    return a, p.shift(-a)


class QScalar:
    """Element of the fraction field Q(t), t = q^(1/M), in canonical reduced form.

    Canonical form: value = t^shift * num / den where num, den are coprime
    polynomials with nonzero constant term and den is monic.  Equal values
    therefore have identical stored representations.
    """

    __slots__ = ("shift", "num", "den", "m")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, m: int = 1):
        if den.is_zero():
            raise ZeroDivisionError("QScalar with zero denominator")
        if m < 1:
            raise ValueError("lattice divisor must be positive")
        if num.is_zero():
            self.shift = 0
            self.num = LaurentPoly()
            self.den = LaurentPoly.constant(1)
            self.m = m
            return
        a_n, n0 = _strip_t_power(num)
        a_d, d0 = _strip_t_power(den)
        if d0.max_exp() > 0:
            g = _poly_gcd(n0, d0)
            if g.max_exp() > 0:
                n0, _ = n0.divmod_poly(g)
                d0, _ = d0.divmod_poly(g)
        lead = d0.coeffs[d0.max_exp()]
        self.shift = a_n - a_d
        self.num = n0.scale(1 / lead)
        self.den = d0.scale(1 / lead)
        self.m = m

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(c, m: int = 1) -> "QScalar":
        return QScalar(LaurentPoly.constant(c), LaurentPoly.constant(1), m)

    @staticmethod
    def zero(m: int = 1) -> "QScalar":
        return QScalar.from_rational(0, m)

    @staticmethod
    def one(m: int = 1) -> "QScalar":
        return QScalar.from_rational(1, m)

    @staticmethod
    def t_power(exp: int, m: int = 1, coeff=1) -> "QScalar":
        return QScalar(LaurentPoly.monomial(exp, coeff), LaurentPoly.constant(1), m)

    @staticmethod
    def q_power(exp, m: int = 1, coeff=1) -> "QScalar":
        """coeff * q^exp for rational exp, provided exp*M is an integer."""
        e = Fraction(exp) * m
        if e.denominator != 1:
            raise ValueError(f"q^{exp} does not lie on the exponent lattice 1/{m}")
        return QScalar.t_power(int(e), m, coeff)

    @staticmethod
    def from_laurent(p: LaurentPoly, m: int = 1) -> "QScalar":
        return QScalar(p, LaurentPoly.constant(1), m)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return (
            self.shift == 0
            and self.num.coeffs == {0: Fraction(1)}
            and self.den.coeffs == {0: Fraction(1)}
        )

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QScalar.from_rational(other, self.m)
        if not isinstance(other, QScalar):
            return NotImplemented
        a, b = _align(self, other)
        return a.shift == b.shift and a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_zero():
            return hash(0)
        if self.den.coeffs == {0: Fraction(1)} and self.num.coeffs.keys() == {0} and self.shift == 0:
            return hash(self.num.coeffs[0])
        g = gcd(*(list(self.num.coeffs) + list(self.den.coeffs) + [self.shift, self.m])) or 1
        # hash must agree across lattice refinements of the same value
        return hash(
            (
                self.shift // g if self.shift else 0,
                frozenset((e // g, c) for e, c in self.num.coeffs.items()),
                frozenset((e // g, c) for e, c in self.den.coeffs.items()),
            )
        )

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: ScalarLike) -> "QScalar":
        if isinstance(other, QScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return QScalar.from_rational(other, self.m)
        raise TypeError(f"cannot coerce {type(other).__name__} to QScalar")

    def __add__(self, other: ScalarLike) -> "QScalar":
        a, b = _align(self, self._coerce(other))
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        sh = min(a.shift, b.shift)
        na = a.num.shift(a.shift - sh)
        nb = b.num.shift(b.shift - sh)
        res = QScalar(na * b.den + nb * a.den, a.den * b.den, a.m)
        if not res.is_zero():
            res.shift += sh
        return res

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        res = QScalar.__new__(QScalar)
        res.shift = self.shift
        res.num = -self.num
        res.den = self.den
        res.m = self.m
        return res

    def __sub__(self, other: ScalarLike) -> "QScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: ScalarLike) -> "QScalar":
        return self._coerce(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "QScalar":
        a, b = _align(self, self._coerce(other))
        res = QScalar(a.num * b.num, a.den * b.den, a.m)
        if not res.is_zero():
            res.shift += a.shift + b.shift
        return res

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "QScalar":
        b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("QScalar division by zero")
        a, b = _align(self, b)
        res = QScalar(a.num * b.den, a.den * b.num)
        res.m = a.m
        if not res.is_zero():
            res.shift += a.shift - b.shift
        return res

    def __rtruediv__(self, other: ScalarLike) -> "QScalar":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "QScalar":
        if k < 0:
            return QScalar.one(self.m) / self ** (-k)
        out = QScalar.one(self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- specialization ----------------------------------------------

    def specialize_at_one(self) -> Fraction:
        """Value at t = 1; the reduced form guarantees any common (t-1) factor
        is already cancelled, so a vanishing denominator is a genuine pole."""
        d1 = self.den.evaluate_at_one()
        if d1 == 0:
            raise PoleError("pole at t = 1")
        return self.num.evaluate_at_one() / d1

    # -- misc ---------------------------------------------------------

    def rescale_lattice(self, new_m: int) -> "QScalar":
        """Re-express on a finer lattice; new_m must be a multiple of m."""
        if new_m == self.m:
            return self
        if new_m % self.m:
            raise ValueError(f"lattice {new_m} does not refine {self.m}")
        f = new_m // self.m
        res = QScalar.__new__(QScalar)
        res.shift = self.shift * f
        res.num = self.num.rescale_exponents(f)
        res.den = self.den.rescale_exponents(f)
        res.m = new_m
        return res

    def as_q_exponent_map(self) -> dict[Fraction, Fraction]:
        """For Laurent-polynomial values: map q-exponent -> coefficient."""
        if self.den.coeffs != {0: Fraction(1)}:
            raise ValueError("value is not a Laurent polynomial in t")
        return {
            Fraction(e + self.shift, self.m): c for e, c in self.num.coeffs.items()
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        num = self.num.shift(self.shift)
        if self.den.coeffs == {0: Fraction(1)}:
            try:
                terms = sorted(self.as_q_exponent_map().items())
                return " + ".join(
                    (f"{c}" if e == 0 else (f"{c}*q^{e}" if c != 1 else f"q^{e}"))
                    for e, c in terms
                )
            except ValueError:
                return str(num)
        return f"({num}) / ({self.den})"

    __repr__ = __str__


class PoleError(ArithmeticError):
    pass


def _align(a: QScalar, b: QScalar) -> tuple[QScalar, QScalar]:
    if a.m == b.m:
        return a, b
    m = lcm(a.m, b.m)
    return a.rescale_lattice(m), b.rescale_lattice(m)


# -- q-combinatorics ----------------------------------------------------


def q_integer(n: int, qi: QScalar) -> QScalar:
    """[n] = (qi^n - qi^-n) / (qi - qi^-1), an exact Laurent polynomial."""
    if n == 0:
        return QScalar.zero(qi.m)
    if n < 0:
        return -q_integer(-n, qi)
    out = QScalar.zero(qi.m)
    for k in range(n):
        out = out + qi ** (n - 1 - 2 * k)
    return out


def q_factorial(n: int, qi: QScalar) -> QScalar:
    out = QScalar.one(qi.m)
    for k in range(2, n + 1):
        out = out * q_integer(k, qi)
    return out


def field_arithmetic(a: QScalar, b: QScalar, operator: str) -> QScalar:
    """Dispatch form of the four field operations (used by fixtures/CLI)."""
    if operator == "add":
        return a + b
    if operator == "sub":
        return a - b
    if operator == "mul":
        return a * b
    if operator == "div":
        return a / b
    raise ValueError(f"unknown operator {operator!r}")
