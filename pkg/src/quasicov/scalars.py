"""Exact scalar arithmetic: rationals and cyclotomic numbers.

Rationals are ``fractions.Fraction``: arbitrary precision, always in lowest
terms with a positive denominator, so equality is structural.

A cyclotomic number of order m is an element of Q(zeta_m), stored as a
coefficient vector in the power basis 1, z, ..., z^(phi(m)-1) of
Q[z]/(Phi_m(z)).  Reducing modulo the m-th cyclotomic polynomial Phi_m
(rather than z^m - 1) keeps the quotient a field: every nonzero element is
invertible, and the class of z has multiplicative order exactly m.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(m: int) -> int:
    """Euler's totient function."""
    if m < 1:
        raise ValueError(f"euler_phi requires m >= 1, got {m}")
    result = m
    k = m
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_divmod(num, den):
    """Quotient and remainder in Q[z]; coefficient lists are ascending."""
    num = _trim([Fraction(c) for c in num])
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [_ZERO] * max(0, len(num) - deg_d)
    rem = num
    while rem and len(rem) - 1 >= deg_d:
        shift = len(rem) - 1 - deg_d
        c = rem[-1] / lead
        quot[shift] = c
        for i, dc in enumerate(den):
            rem[shift + i] -= c * dc
        _trim(rem)
    return quot, rem


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending; monic of degree phi(m).

    Computed by exact division: z^m - 1 = prod over divisors d of m of Phi_d.
    """
    if m < 1:
        raise ValueError(f"cyclotomic polynomial needs m >= 1, got {m}")
    poly = [Fraction(-1)] + [_ZERO] * (m - 1) + [_ONE]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem
    result = tuple(int(c) for c in poly)
    assert all(Fraction(c) == p for c, p in zip(result, poly))
    return result


def _ext_gcd(a, b):
    """Extended Euclid in Q[z]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    u0, u1 = [_ONE], []
    v0, v1 = [], [_ONE]
    while _trim(list(r1)):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _trim([x - y for x, y in _zip_pad(u0, _poly_mul(q, u1))])
        v0, v1 = v1, _trim([x - y for x, y in _zip_pad(v0, _poly_mul(q, v1))])
    return r0, u0, v0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return zip(a, b)


class Cyclotomic:
    """An element of Q(zeta_m) in canonical reduced form.

    ``coeffs`` always has length exactly phi(m), so representations are
    unique and equality is structural.  Instances are immutable; arithmetic
    returns new objects.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {order}")
        phi = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            _, cs = _poly_divmod(cs, cyclotomic_polynomial(order))
        cs = cs + [_ZERO] * (phi - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls(order, (1,))

    @classmethod
    def from_rational(cls, order: int, value) -> "Cyclotomic":
        return cls(order, (Fraction(value),))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        """The class of z^power, i.e. zeta_m to the given power."""
        k = power % order
        return cls(order, (0,) * k + (1,))

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.order, _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        g, u, _ = _ext_gcd(list(self.coeffs), list(cyclotomic_polynomial(self.order)))
        # Phi_m is irreducible over Q, so the gcd is a nonzero constant.
        assert len(_trim(list(g))) == 1
        scale = g[0]
        return Cyclotomic(self.order, [c / scale for c in u])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            if self.order == other.order:
                return self.coeffs == other.coeffs
            return (
                self.is_rational()
                and other.is_rational()
                and self.coeffs[0] == other.coeffs[0]
            )
        return NotImplemented

    def __hash__(self):
        # Rational-valued elements hash like their Fraction so that equal
        # values hash equally across orders and against plain rationals.
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self})"

    def __str__(self):
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    _TERM = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?(?:(?P<z>z)(?:\^(?P<exp>\d+))?)?$")

    @classmethod
    def parse(cls, order: int, text: str) -> "Cyclotomic":
        """Parse the format produced by ``str``, e.g. ``-1-z`` or ``1/2+z^2``."""
        s = text.strip().replace(" ", "")
        if s in ("", "0"):
            return cls.zero(order)
        chunks = []
        start = 0
        for i in range(1, len(s)):
            if s[i] in "+-":
                chunks.append(s[start:i])
                start = i
        chunks.append(s[start:])
        acc: dict[int, Fraction] = {}
        for chunk in chunks:
            sign = 1
            if chunk[0] == "+":
                chunk = chunk[1:]
            elif chunk[0] == "-":
                sign = -1
                chunk = chunk[1:]
            match = cls._TERM.match(chunk)
            if not match or (match.group("coef") is None and match.group("z") is None):
                raise ValueError(f"cannot parse cyclotomic term {chunk!r} in {text!r}")
            coef = Fraction(match.group("coef")) if match.group("coef") else _ONE
            if match.group("z"):
                exp = int(match.group("exp")) if match.group("exp") else 1
            else:
                exp = 0
            acc[exp] = acc.get(exp, _ZERO) + sign * coef
        top = max(acc)
        return cls(order, [acc.get(i, _ZERO) for i in range(top + 1)])


def root_of_unity_power(m: int, k: int) -> Cyclotomic:
    """The canonical class of z^(k mod m) in Q(zeta_m)."""
    return Cyclotomic.zeta(m, k)
