"""Univariate polynomials in ``q`` over Z and Q.

Coefficients are stored in ascending degree order with no trailing zeros,
so two polynomials are equal exactly when their coefficient tuples are.
Python ints carry the arbitrary-precision integer coefficients and
:class:`fractions.Fraction` the rational ones.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

Number = Union[int, Fraction]


class ZeroDivisorError(ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


def _to_int(c) -> int:
    if isinstance(c, int):
        return c
    f = Fraction(c)
    if f.denominator != 1:
        raise ValueError(f"non-integral coefficient {c}")
    return f.numerator


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class _Poly:
    __slots__ = ("coeffs",)

    _coerce = staticmethod(_to_int)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(self._coerce(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple):
        # coeffs already trimmed and of the right type
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls._raw((cls._coerce(1),))

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and all(c == 0 for c in self.coeffs[:-1])

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)([other])
        if isinstance(other, PolyZ) and isinstance(self, PolyQ):
            return other.to_q()
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return self._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self._raw(())
        if len(b) == 1:
            c = b[0]
            return self._raw(tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return self._raw(tuple(c * y for y in b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # product of nonzero leading coefficients is nonzero: no trim needed
        return self._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return self._raw((self._coerce(0),) * k + self.coeffs)

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)


class PolyZ(_Poly):
    """Polynomial in ``q`` with integer coefficients."""

    __slots__ = ()
    _coerce = staticmethod(_to_int)

    def to_q(self) -> "PolyQ":
        return PolyQ._raw(tuple(Fraction(c) for c in self.coeffs))

    def content(self) -> int:
        """gcd of the coefficients, sign taken from the leading coefficient."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        if self.coeffs and self.coeffs[-1] < 0:
            g = -g
        return g

    def exact_div(self, other: "PolyZ") -> "PolyZ":
        """Exact division in Z[q]; raises ArithmeticError if not exact."""
        if not other.coeffs:
            raise ZeroDivisorError("division by the zero polynomial")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lb = b[-1]
        if len(a) < len(b):
            if a:
                raise ArithmeticError("inexact polynomial division")
            return PolyZ._raw(())
        quot = [0] * (len(a) - db)
        for k in range(len(a) - 1, db - 1, -1):
            c = a[k]
            if not c:
                continue
            qk, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            quot[k - db] = qk
            for j in range(db + 1):
                a[k - db + j] -= qk * b[j]
        if any(a):
            raise ArithmeticError("inexact polynomial division")
        return PolyZ._raw(_trim(quot))

    def valuation_at_one(self) -> int:
        """Largest ``k`` with ``(q-1)**k`` dividing ``self`` (synthetic division)."""
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        return valuation(self, PolyZ([-1, 1]))


class PolyQ(_Poly):
    """Polynomial in ``q`` with rational coefficients."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)

    def monic(self) -> "PolyQ":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return PolyQ._raw(tuple(c / lc for c in self.coeffs))

    def to_z(self) -> PolyZ:
        """Convert to Z[q]; raises ValueError on a non-integral coefficient."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return PolyZ._raw(tuple(out))

    def primitive_z(self) -> PolyZ:
        """Scale by a nonzero rational to a primitive Z[q] polynomial with positive lc."""
        if not self.coeffs:
            return PolyZ.zero()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        p = PolyZ._raw(tuple(ints))
        g = p.content()
        return PolyZ._raw(tuple(c // g for c in ints))


def as_q(p) -> PolyQ:
    if isinstance(p, PolyQ):
        return p
    if isinstance(p, PolyZ):
        return p.to_q()
    return PolyQ(p)


def poly_add(a: PolyZ, b: PolyZ) -> PolyZ:
    return a + b


def poly_mul(a: PolyZ, b: PolyZ) -> PolyZ:
    return a * b


def poly_eval(p: _Poly, x: Number):
    return p.eval(x)


def polyq_divmod(a, b) -> Tuple[PolyQ, PolyQ]:
    """Euclidean division in Q[q]: ``a = quot*b + rem`` with ``deg rem < deg b``."""
    a, b = as_q(a), as_q(b)
    if not b.coeffs:
        raise ZeroDivisorError("division by the zero polynomial")
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lb = bc[-1]
    if len(rem) <= db:
        return PolyQ.zero(), a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        qk = c / lb
        quot[k - db] = qk
        for j in range(db + 1):
            rem[k - db + j] -= qk * bc[j]
    return PolyQ(quot), PolyQ(rem[:db])


def polyq_gcd(a, b) -> PolyQ:
    """Monic gcd in Q[q]."""
    a, b = as_q(a), as_q(b)
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcd of two zero polynomials is undefined")
    while b.coeffs:
        a, b = b, polyq_divmod(a, b)[1]
    return a.monic()


def divides(d, p) -> bool:
    """True if ``d`` divides ``p`` in Q[q]."""
    if not as_q(d).coeffs:
        return not as_q(p).coeffs
    return not polyq_divmod(p, d)[1].coeffs


def valuation(p: PolyZ, at: PolyZ) -> int:
    """Exact multiplicity of the degree-one factor ``at`` in ``p``."""
    if at.degree != 1:
        raise ValueError("valuation is defined here only for degree-one factors")
    if not p.coeffs:
        raise ValueError("valuation of the zero polynomial")
    k = 0
    cur = p.to_q()
    atq = at.to_q()
    while True:
        quot, rem = polyq_divmod(cur, atq)
        if rem.coeffs:
            return k
        k += 1
        cur = quot


# --- text format -----------------------------------------------------------

Q = PolyZ([0, 1])
ONE = PolyZ([1])
ZERO = PolyZ([])


def qpow(k: int) -> PolyZ:
    return PolyZ._raw((0,) * k + (1,))


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    return str(c)


def render(p: _Poly, var: str = "q") -> str:
    """Render as ``c0 + c1*q + c2*q^2``; unit coefficients are dropped."""
    if not p.coeffs:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        parts.append((neg, body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<v1>[a-z])(?:\s*\^\s*(?P<e1>\d+))?)?
        | (?P<v2>[a-z])(?:\s*\^\s*(?P<e2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, var: str = "q", cls=PolyZ):
    """Parse the :func:`render` grammar back into a polynomial."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    pos = 0
    terms = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = m.group(1)
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        first = False
        v = m.group("v1") or m.group("v2")
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            exp = 0
            if m.group("v1"):
                exp = int(m.group("e1") or 1)
        else:
            coef = Fraction(1)
            exp = int(m.group("e2") or 1)
        if sign == "-":
            coef = -coef
        terms[exp] = terms.get(exp, 0) + coef
        pos = m.end()
    top = max(terms)
    coeffs = [terms.get(k, 0) for k in range(top + 1)]
    if cls is PolyZ:
        if any(Fraction(c).denominator != 1 for c in coeffs):
            raise ValueError(f"non-integral coefficient in {text!r}")
        return PolyZ(int(c) for c in coeffs)
    return cls(coeffs)


def poly_from_json(obj: Sequence) -> PolyZ:
    return PolyZ(int(c) for c in obj)


def poly_to_json(p: _Poly) -> list:
    return [c if isinstance(c, int) else _fmt_coeff(c) for c in p.coeffs]
