"""
Exact rational functions in one indeterminate.

A Scalar is a pair (num, den) of integer polynomials kept in lowest terms: the
polynomial gcd is 1, the two contents are coprime and den has a positive leading
coefficient. Equality and hashing are therefore structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

import flint

_ZERO = flint.fmpz_poly([])
_ONE = flint.fmpz_poly([1])

ScalarLike = Union["Scalar", int, Fraction]


def _poly(coeffs: Sequence[int]) -> flint.fmpz_poly:
    return flint.fmpz_poly([int(c) for c in coeffs])


class Scalar:
    """An element of Q(x) in canonical form."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num: flint.fmpz_poly, den: flint.fmpz_poly = _ONE, *, reduced: bool = False):
        if not reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                num, den = _ZERO, _ONE
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den
        self._key = None

    # construction

    @classmethod
    def from_coeffs(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> Scalar:
        return cls(_poly(num), _poly(den))

    @classmethod
    def from_fraction(cls, value: int | Fraction) -> Scalar:
        value = Fraction(value)
        return cls(flint.fmpz_poly([value.numerator]), flint.fmpz_poly([value.denominator]))

    @classmethod
    def gen(cls) -> Scalar:
        """The indeterminate x itself."""
        return cls(flint.fmpz_poly([0, 1]), _ONE, reduced=True)

    @classmethod
    def coerce(cls, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_fraction(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    # inspection

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if self._key is None:
            self._key = (tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs()))
        return self._key

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self.num[0]), int(self.den[0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(self.key())

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # arithmetic

    def __neg__(self) -> Scalar:
        return Scalar(-self.num, self.den, reduced=True)

    def __add__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, _ONE, reduced=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Scalar(self.num**exponent, self.den**exponent, reduced=True)

    # substitution

    def substitute(self, image: ScalarLike) -> Scalar:
        """Replace the indeterminate by `image` (a Scalar or a rational number)."""
        image = Scalar.coerce(image)
        den = _horner(self.den, image)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator of {self} vanishes at {image}")
        return _horner(self.num, image) / den

    def __call__(self, value: ScalarLike) -> Scalar:
        return self.substitute(value)

    # formatting

    def to_json(self) -> dict[str, list[int]]:
        num, den = self.key()
        return {"num": list(num) or [0], "den": list(den)}

    @classmethod
    def from_json(cls, data: dict) -> Scalar:
        return cls.from_coeffs(data["num"], data.get("den", [1]))

    def format(self, var: str = "x") -> str:
        num = _format_poly(self.num, var)
        if self.den.is_one():
            return num
        den = _format_poly(self.den, var)
        if self.num.length() > 1:
            num = f"({num})"
        if self.den.length() > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Scalar({self.format()})"


def _coerce(value: object) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.from_fraction(value)
    return None


def _horner(poly: flint.fmpz_poly, image: Scalar) -> Scalar:
    acc = ZERO
    for c in reversed(poly.coeffs()):
        acc = acc * image + int(c)
    return acc


def _format_poly(poly: flint.fmpz_poly, var: str) -> str:
    coeffs = [int(c) for c in poly.coeffs()]
    if not coeffs:
        return "0"
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = Scalar(_ZERO, _ONE, reduced=True)
ONE = Scalar(_ONE, _ONE, reduced=True)


def arith(kind: str, a: ScalarLike, b: ScalarLike) -> Scalar:
    """Apply one of add, sub, mul, div to two scalars."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def substitute(s: ScalarLike, image: ScalarLike) -> Scalar:
    return Scalar.coerce(s).substitute(image)


def x_power(k: int) -> Scalar:
    """x**k for any integer k."""
    if k >= 0:
        return Scalar(flint.fmpz_poly([0] * k + [1]), _ONE, reduced=True)
    return Scalar(_ONE, flint.fmpz_poly([0] * (-k) + [1]), reduced=True)


def parse_scalar(text: str) -> Scalar:
    """Parse things like "t", "q", "-2", "3/4", "int:5"; a bare letter is the indeterminate."""
    text = text.strip()
    if text.startswith("int:"):
        text = text[4:]
    if text.isalpha():
        return Scalar.gen()
    return Scalar.from_fraction(Fraction(text))
