"""Exact scalars: rationals (the base field D) and rational quaternions (the algebra A).

Rationals are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator.  Quaternions keep their four coefficients as
integer numerators over one shared positive denominator; that is only a
storage detail, the public coefficients ``w, x, y, z`` are ``Fraction``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Protocol, TypeVar, Union

from .errors import ParseError

Rational = Fraction

S = TypeVar("S", bound="DivisionAlgebraElement")


class DivisionAlgebraElement(Protocol):
    """What the matrix and geometry layers need from a scalar.

    An associative division algebra over a central commutative ring D in which
    2 is invertible (the skew-symmetric maps divide by 2).  Elements must be
    immutable and hashable, compare structurally, and support ``+ - *``,
    unary minus and :meth:`inverse` for nonzero elements.  ``zero``/``one``
    and ``d_basis`` are classmethods; ``d_basis`` spans A over D and is what
    extensional map-equality evaluates on.
    """

    def __add__(self: S, other: S) -> S: ...
    def __sub__(self: S, other: S) -> S: ...
    def __mul__(self: S, other: S) -> S: ...
    def __neg__(self: S) -> S: ...
    def inverse(self: S) -> S: ...
    def is_zero(self) -> bool: ...

    @classmethod
    def zero(cls: type[S]) -> S: ...

    @classmethod
    def one(cls: type[S]) -> S: ...

    @classmethod
    def d_basis(cls: type[S]) -> tuple[S, ...]: ...


Coefficient = Union[int, Fraction]


class Quaternion:
    """Quaternion ``w + x i + y j + z k`` with rational coefficients.

    Multiplication is the Hamilton product and is not commutative::

        >>> Quaternion(0, 1) * Quaternion(0, 0, 1)
        Quaternion('k')
        >>> Quaternion(0, 0, 1) * Quaternion(0, 1)
        Quaternion('-k')
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, w: Coefficient = 0, x: Coefficient = 0,
                 y: Coefficient = 0, z: Coefficient = 0):
        fs = [Fraction(c) for c in (w, x, y, z)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        self._num = tuple(f.numerator * (den // f.denominator) for f in fs)
        self._den = den
        self._hash = None

    @classmethod
    def _make(cls, a: int, b: int, c: int, d: int, den: int) -> "Quaternion":
        # den > 0 is the caller's responsibility
        g = gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        q = object.__new__(cls)
        q._num = (a, b, c, d)
        q._den = den
        q._hash = None
        return q

    @classmethod
    def zero(cls) -> "Quaternion":
        return _ZERO

    @classmethod
    def one(cls) -> "Quaternion":
        return _ONE

    @classmethod
    def d_basis(cls) -> tuple["Quaternion", ...]:
        return _D_BASIS

    @property
    def w(self) -> Fraction:
        return Fraction(self._num[0], self._den)

    @property
    def x(self) -> Fraction:
        return Fraction(self._num[1], self._den)

    @property
    def y(self) -> Fraction:
        return Fraction(self._num[2], self._den)

    @property
    def z(self) -> Fraction:
        return Fraction(self._num[3], self._den)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        """True for elements of the central subfield (no imaginary part)."""
        return not (self._num[1] or self._num[2] or self._num[3])

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            else:
                return NotImplemented
        a1, b1, c1, d1 = self._num
        a2, b2, c2, d2 = other._num
        n1, n2 = self._den, other._den
        if n1 == n2:
            return Quaternion._make(a1 + a2, b1 + b2, c1 + c2, d1 + d2, n1)
        return Quaternion._make(a1 * n2 + a2 * n1, b1 * n2 + b2 * n1,
                                c1 * n2 + c2 * n1, d1 * n2 + d2 * n1, n1 * n2)

    __radd__ = __add__

    def __neg__(self):
        a, b, c, d = self._num
        q = object.__new__(Quaternion)
        q._num = (-a, -b, -c, -d)
        q._den = self._den
        q._hash = None
        return q

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not Quaternion:
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            elif not isinstance(other, Quaternion):
                return NotImplemented
        a1, b1, c1, d1 = self._num
        a2, b2, c2, d2 = other._num
        a = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2
        b = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2
        c = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2
        d = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2
        den = self._den * other._den
        if den != 1:
            g = gcd(a, b, c, d, den)
            if g != 1:
                a //= g
                b //= g
                c //= g
                d //= g
                den //= g
        q = object.__new__(Quaternion)
        q._num = (a, b, c, d)
        q._den = den
        q._hash = None
        return q

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(other) * self
        return NotImplemented

    def conj(self) -> "Quaternion":
        a, b, c, d = self._num
        return Quaternion._make(a, -b, -c, -d, self._den)

    def norm2(self) -> Fraction:
        a, b, c, d = self._num
        return Fraction(a * a + b * b + c * c + d * d, self._den * self._den)

    def inverse(self) -> "Quaternion":
        """Two-sided inverse ``conj(q) / norm2(q)``."""
        a, b, c, d = self._num
        n = a * a + b * b + c * c + d * d
        if n == 0:
            raise ZeroDivisionError("quaternion inverse of zero")
        # (conj(num)/den) / (n/den^2) = conj(num) * den / n
        den = self._den
        return Quaternion._make(a * den, -b * den, -c * den, -d * den, n)

    def __truediv__(self, other):
        # right division: self * other^-1
        if isinstance(other, (int, Fraction)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self == Quaternion(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) so q == r implies equal hashes
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return any(self._num)

    def __str__(self):
        return format_quaternion(self)

    def __repr__(self):
        return f"Quaternion({format_quaternion(self)!r})"

    def __reduce__(self):
        return (parse_quaternion, (format_quaternion(self),))


_ZERO = Quaternion()
_ONE = Quaternion(1)
_D_BASIS = (Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1))


def quat_add(p: Quaternion, q: Quaternion) -> Quaternion:
    return p + q


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def quat_inv(q: Quaternion) -> Quaternion:
    return q.inverse()


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def quat_norm2(q: Quaternion) -> Fraction:
    return q.norm2()


def d_basis() -> list[Quaternion]:
    """The canonical D-basis ``(1, i, j, k)`` of the quaternions."""
    return list(_D_BASIS)


def as_quaternion(value) -> Quaternion:
    """Coerce ints, Fractions and text to :class:`Quaternion`."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, str):
        return parse_quaternion(value)
    if isinstance(value, (int, Fraction)):
        return Quaternion(value)
    raise TypeError(f"cannot interpret {value!r} as a quaternion")


# -- text format ------------------------------------------------------------

_UNITS = ("", "i", "j", "k")
_TERM = re.compile(r"(\d+(?:/\d+)?)?([ijk])?")


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_quaternion(q: Quaternion) -> str:
    """Render as ``w+xi+yj+zk``, omitting zero terms; ``0`` for zero."""
    parts = []
    for c, unit in zip(q.coefficients, _UNITS):
        if c == 0:
            continue
        if unit and abs(c) == 1:
            body = unit
        else:
            body = _format_coeff(abs(c)) + unit
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_quaternion(text: str, base_offset: int = 0) -> Quaternion:
    """Parse ``w+xi+yj+zk`` text; each unit may appear at most once.

    Coefficients are integers or ``p/q``; ``1/2i`` means one half times i.
    Raises :class:`ParseError` carrying the offending offset.
    """
    coeffs = [Fraction(0)] * 4
    seen = set()
    pos = 0
    n = len(text)

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty quaternion", base_offset + pos, text)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", base_offset + pos, text)
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            found = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected a term, found {found}", base_offset + pos, text)
        num, unit = m.group(1), m.group(2)
        if num is not None:
            p_str, _, q_str = num.partition("/")
            if q_str and int(q_str) == 0:
                raise ParseError("zero denominator", base_offset + pos, text)
            value = Fraction(int(p_str), int(q_str) if q_str else 1)
        else:
            value = Fraction(1)
        idx = _UNITS.index(unit or "")
        if idx in seen:
            raise ParseError(f"repeated {'real' if idx == 0 else unit} term", base_offset + pos, text)
        seen.add(idx)
        coeffs[idx] = sign * value
        pos = skip_ws(m.end())
        first = False
    return Quaternion(*coeffs)
