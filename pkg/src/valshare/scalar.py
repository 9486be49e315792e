"""Exact/float scalar type.

A Scalar is a complex number in one of two modes:

* exact -- a Gaussian rational, stored as two `fractions.Fraction` values.
  Arithmetic between exact scalars stays exact (including division).
* float -- a complex double, stored as two Python floats.

Mixing modes demotes the result to float; the result's mode field is the
flag the rest of the toolkit uses to decide whether a claim counts as exact.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Real = Union[int, float, Fraction]

_RATIONAL_RE = _re.compile(r"^[+-]?\d+(/\d+)?$")


def _is_exact_part(x) -> bool:
    return isinstance(x, (int, Fraction))


@dataclass(frozen=True, slots=True)
class Scalar:
    re: Real
    im: Real
    exact: bool

    # -- constructors --------------------------------------------------

    @staticmethod
    def exact_value(re: Real = 0, im: Real = 0) -> "Scalar":
        if not (_is_exact_part(re) and _is_exact_part(im)):
            raise TypeError("exact Scalar needs int or Fraction parts")
        return Scalar(Fraction(re), Fraction(im), True)

    @staticmethod
    def float_value(re: float = 0.0, im: float = 0.0) -> "Scalar":
        return Scalar(float(re), float(im), False)

    @staticmethod
    def of(value) -> "Scalar":
        """Coerce ints/Fractions to exact, floats/complex to float mode."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar.exact_value(value)
        if isinstance(value, float):
            return Scalar.float_value(value)
        if isinstance(value, complex):
            return Scalar.float_value(value.real, value.imag)
        if isinstance(value, str):
            return Scalar.parse(value)
        raise TypeError(f"cannot make a Scalar from {value!r}")

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse one real part: 'p/q' or integer -> exact, decimal -> float."""
        text = text.strip()
        if _RATIONAL_RE.match(text):
            return Scalar.exact_value(Fraction(text))
        return Scalar.float_value(float(text))

    @staticmethod
    def parse_pair(re_text: str, im_text: str) -> "Scalar":
        """Parse a {"re": ..., "im": ...} pair; exact iff both parts are rational."""
        a, b = Scalar.parse(re_text), Scalar.parse(im_text)
        if a.exact and b.exact:
            return Scalar(a.re, b.re, True)
        return Scalar.float_value(float(a.re), float(b.re))

    # -- predicates and views ------------------------------------------

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.exact:
            return self.re == 0 and self.im == 0
        return abs(self.re) <= tol and abs(self.im) <= tol

    @property
    def as_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(self.as_complex)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        return Scalar.of(other)

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        if self.exact and o.exact:
            return Scalar(self.re + o.re, self.im + o.im, True)
        a, b = self.as_complex, o.as_complex
        return Scalar.float_value((a + b).real, (a + b).imag)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im, self.exact)

    def __sub__(self, other) -> "Scalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        if self.exact and o.exact:
            return Scalar(
                self.re * o.re - self.im * o.im,
                self.re * o.im + self.im * o.re,
                True,
            )
        p = self.as_complex * o.as_complex
        return Scalar.float_value(p.real, p.imag)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        o = self._coerce(other)
        if self.exact and o.exact:
            n = o.re * o.re + o.im * o.im
            if n == 0:
                raise ZeroDivisionError("division by exact zero Scalar")
            return Scalar(
                (self.re * o.re + self.im * o.im) / n,
                (self.im * o.re - self.re * o.im) / n,
                True,
            )
        q = self.as_complex / o.as_complex
        return Scalar.float_value(q.real, q.imag)

    def __rtruediv__(self, other) -> "Scalar":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int) or k < 0:
            raise ValueError("Scalar powers are nonnegative integers")
        out = ONE if self.exact else Scalar.float_value(1.0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.exact)

    # -- comparison ------------------------------------------------------

    def equals(self, other, tol: float = 0.0) -> bool:
        """Exact equality when both exact and tol == 0, else component tolerance."""
        o = self._coerce(other)
        if self.exact and o.exact and tol == 0.0:
            return self.re == o.re and self.im == o.im
        return (
            abs(float(self.re) - float(o.re)) <= tol
            and abs(float(self.im) - float(o.im)) <= tol
        )

    # -- formatting -------------------------------------------------------

    def part_str(self, part: str) -> str:
        v = self.re if part == "re" else self.im
        if self.exact:
            return str(v)
        return repr(float(v))

    def __str__(self) -> str:
        if self.im == 0:
            return self.part_str("re")
        return f"({self.part_str('re')}{'+' if float(self.im) >= 0 else ''}{self.part_str('im')}i)"


ZERO = Scalar.exact_value(0)
ONE = Scalar.exact_value(1)
I = Scalar.exact_value(0, 1)


def rational(p, q=1) -> Scalar:
    """Shorthand for the exact rational p/q."""
    return Scalar.exact_value(Fraction(p, q))
