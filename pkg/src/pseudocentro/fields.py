"""Exact scalars: the rationals, prime fields, and their Gaussian extensions.

Three field descriptors are provided:

* ``QQ`` -- the rational numbers, elements are :class:`fractions.Fraction`.
* ``PrimeField(p)`` -- integers modulo an odd prime, elements are :class:`Fp`.
* ``GaussianField(base)`` -- ``base[i]`` with ``i*i = -1``, elements are
  :class:`Gaussian`.  Only constructible when ``-1`` is not a square in
  ``base``, since otherwise ``base[i]`` is not a field.

All elements are immutable; every operation returns a new value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from .errors import FieldError, ParseError

__all__ = [
    "QQ",
    "RationalField",
    "PrimeField",
    "Fp",
    "GaussianField",
    "Gaussian",
    "gaussian_conjugate",
    "gaussian_norm",
    "minus_one_is_square",
    "parse_field",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_GAUSS_RE = re.compile(
    r"^(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=[+-]))?(?P<sign>[+-]?)(?P<im>\d+(?:/\d+)?)?i$"
)


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"malformed scalar {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def _split_gaussian(text: str) -> tuple[Fraction, Fraction]:
    m = _GAUSS_RE.match(text)
    if not m:
        raise ParseError(f"malformed Gaussian scalar {text!r}")
    re_part = _parse_rational(m["re"]) if m["re"] else Fraction(0)
    im_part = _parse_rational(m["im"]) if m["im"] else Fraction(1)
    if m["sign"] == "-":
        im_part = -im_part
    return re_part, im_part


class RationalField:
    """The field Q; elements are plain ``Fraction`` objects."""

    name = "Q"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (Fp, Gaussian)):
            raise FieldError(f"cannot coerce {value!r} into Q")
        if isinstance(value, float):
            raise FieldError("floating point values are not accepted")
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, value) -> bool:
        return isinstance(value, Fraction)

    def minus_one_is_square(self) -> bool:
        return False

    def parse(self, text: str) -> Fraction:
        return _parse_rational(text.strip())

    def format(self, value: Fraction) -> str:
        return str(value)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField:
    """Integers modulo an odd prime ``p``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or not isprime(p):
            raise FieldError(f"modulus must be an odd prime, got {p!r}")
        self.p = p

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> Fp:
        if isinstance(value, Fp):
            if value.p != self.p:
                raise FieldError(f"element of F_{value.p} used in F_{self.p}")
            return value
        if isinstance(value, int):
            return Fp(value % self.p, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            num = value.numerator % self.p
            return Fp(num * pow(value.denominator, -1, self.p) % self.p, self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into F_{self.p}")

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def contains(self, value) -> bool:
        return isinstance(value, Fp) and value.p == self.p

    def minus_one_is_square(self) -> bool:
        return self.p % 4 == 1

    def parse(self, text: str) -> Fp:
        return self(_parse_rational(text.strip()))

    def format(self, value: Fp) -> str:
        return str(value.value)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class Fp:
    """An element of the prime field of order ``p``, stored as ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp elements are immutable")

    def _other(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Fp:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class GaussianField:
    """The quadratic extension ``base[i]``, ``i**2 = -1``."""

    def __init__(self, base):
        if isinstance(base, GaussianField):
            raise FieldError("cannot adjoin i twice")
        if base.minus_one_is_square():
            raise FieldError(f"-1 is a square in {base.name}; adjoining i does not give a field")
        self.base = base

    @property
    def name(self) -> str:
        return f"{self.base.name}[i]"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def __call__(self, value) -> Gaussian:
        if isinstance(value, Gaussian):
            return Gaussian(self.base(value.re), self.base(value.im))
        if isinstance(value, str):
            return self.parse(value)
        return Gaussian(self.base(value), self.base.zero)

    @property
    def zero(self) -> Gaussian:
        return Gaussian(self.base.zero, self.base.zero)

    @property
    def one(self) -> Gaussian:
        return Gaussian(self.base.one, self.base.zero)

    @property
    def i(self) -> Gaussian:
        return Gaussian(self.base.zero, self.base.one)

    def contains(self, value) -> bool:
        return (
            isinstance(value, Gaussian)
            and self.base.contains(value.re)
            and self.base.contains(value.im)
        )

    def minus_one_is_square(self) -> bool:
        return True

    def parse(self, text: str) -> Gaussian:
        text = text.strip()
        if text.endswith("i"):
            re_part, im_part = _split_gaussian(text)
            return Gaussian(self.base(re_part), self.base(im_part))
        return Gaussian(self.base.parse(text), self.base.zero)

    def format(self, value: Gaussian) -> str:
        re_s = self.base.format(value.re)
        im_s = self.base.format(value.im)
        if im_s.startswith("-"):
            return f"{re_s}{im_s}i"
        return f"{re_s}+{im_s}i"

    def __repr__(self):
        return f"GaussianField({self.base!r})"

    def __eq__(self, other):
        return isinstance(other, GaussianField) and other.base == self.base

    def __hash__(self):
        return hash(("gauss", self.base))


@dataclass(frozen=True)
class Gaussian:
    """``re + i*im`` with ``re``, ``im`` in a base field where -1 is not a square."""

    re: object
    im: object

    def _split(self, other):
        if isinstance(other, Gaussian):
            return other.re, other.im
        if isinstance(other, (int, Fraction, Fp)):
            return other, 0
        return None

    def __add__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return Gaussian(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return Gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> Gaussian:
        return Gaussian(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self) -> Gaussian:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Gaussian(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        if isinstance(other, Gaussian):
            return self * other.inverse()
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return Gaussian(self.re / other, self.im / other)

    def __rtruediv__(self, other):
        return Gaussian(other, 0 * self.re) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        result = Gaussian(self.re * 0 + 1, self.im * 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return self.re == o[0] and self.im == o[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re != 0 or self.im != 0)

    def __repr__(self):
        return f"Gaussian({self.re!r}, {self.im!r})"

    def __str__(self):
        im = str(self.im)
        return f"{self.re}{im}i" if im.startswith("-") else f"{self.re}+{im}i"


def gaussian_conjugate(g: Gaussian) -> Gaussian:
    return g.conjugate()


def gaussian_norm(g: Gaussian):
    """``re**2 + im**2``, which equals ``g * conj(g)`` and lies in the base field."""
    return g.norm()


def minus_one_is_square(field) -> bool:
    return field.minus_one_is_square()


def parse_field(text: str):
    """Parse a field descriptor: ``Q`` or ``Fp:<p>``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad modulus in field descriptor {text!r}") from None
        return PrimeField(p)
    raise ParseError(f"unknown field descriptor {text!r}; expected Q or Fp:<p>")
