"""Exact Laurent-polynomial algebra in t = e^(base*z).

A commensurable exponential sum (all frequencies integer multiples of one
base) becomes a Laurent polynomial sum_d c_d t^d.  Identities between such
sums reduce to exact coefficient arithmetic, which is how the toolkit turns
"this combination of f and f' is constant" into a decidable check.

d/dz acts as base * t * d/dt, so differentiation maps the degree-d
coefficient c to d*base*c at the same degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import (
    BaseMismatch,
    DivisionByZeroPolynomial,
    IncommensurableFrequencies,
    NonIntegerRatio,
)
from .expsum import ExpSum, es_normalize
from .scalar import ONE, Scalar

#: relative coefficient threshold for float-mode zero tests
ZERO_TOL = 1e-12

#: tolerance for recognizing rational frequency ratios from float inputs
_RATIO_TOL = 1e-9
_RATIO_MAX_DEN = 10**6


@dataclass(frozen=True)
class LaurentPoly:
    base: Scalar
    coeffs: tuple[tuple[int, Scalar], ...]  # sorted by degree, no exact zeros

    @property
    def exact(self) -> bool:
        return self.base.exact and all(c.exact for _, c in self.coeffs)

    @cached_property
    def _dict(self) -> dict[int, Scalar]:
        return dict(self.coeffs)

    def coeff(self, degree: int) -> Scalar:
        return self._dict.get(degree, Scalar.exact_value(0))

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{d}" for d, c in self.coeffs)


def _make(base: Scalar, items: Iterable[tuple[int, Scalar]]) -> LaurentPoly:
    acc: dict[int, Scalar] = {}
    for d, c in items:
        acc[d] = acc[d] + c if d in acc else c
    cleaned = tuple(sorted((d, c) for d, c in acc.items() if not c.is_zero()))
    return LaurentPoly(base, cleaned)


def lp_from_coeffs(base, coeffs: Mapping[int, object]) -> LaurentPoly:
    return _make(Scalar.of(base), ((int(d), Scalar.of(c)) for d, c in coeffs.items()))


def _canonical_sign(sigma: Scalar) -> Scalar:
    """Prefer the generator with (Re, Im) lexicographically positive."""
    if float(sigma.re) < 0 or (sigma.re == 0 and float(sigma.im) < 0):
        return -sigma
    return sigma


def _as_fraction(s: Scalar) -> Optional[Fraction]:
    """Exact real-rational view of a ratio Scalar, or None."""
    if s.exact:
        return Fraction(s.re) if s.im == 0 else None
    if abs(float(s.im)) > _RATIO_TOL * max(1.0, abs(float(s.re))):
        return None
    approx = Fraction(float(s.re)).limit_denominator(_RATIO_MAX_DEN)
    if abs(float(approx) - float(s.re)) > _RATIO_TOL * max(1.0, abs(float(s.re))):
        return None
    return approx


def infer_base(freqs: Iterable[Scalar]) -> Scalar:
    """Coarsest base dividing every frequency.

    All frequencies must be real-rational multiples of one complex unit
    (the first nonzero frequency); the base is gcd(p_j)/lcm(q_j) times that
    unit, sign-normalized.
    """
    nonzero = [f for f in freqs if not f.is_zero()]
    if not nonzero:
        return ONE
    unit = nonzero[0]
    ratios: list[Fraction] = []
    for f in nonzero:
        r = _as_fraction(f / unit)
        if r is None:
            raise IncommensurableFrequencies(
                f"frequency {f} is not a real-rational multiple of {unit}"
            )
        ratios.append(r)
    g = 0
    l = 1
    for r in ratios:
        g = math.gcd(g, r.numerator)
        l = l * r.denominator // math.gcd(l, r.denominator)
    return _canonical_sign(unit * Scalar.exact_value(Fraction(g, l)))


def _degree_of(freq: Scalar, base: Scalar) -> int:
    r = _as_fraction(freq / base)
    if r is None or r.denominator != 1:
        raise NonIntegerRatio(f"frequency {freq} is not an integer multiple of base {base}")
    return int(r)


def lp_from_expsum(f: ExpSum, base: Optional[Scalar] = None) -> LaurentPoly:
    """Represent a commensurable ExpSum as a Laurent polynomial.

    With no base given, infers the coarsest one.  A supplied base must
    divide every frequency exactly (NonIntegerRatio otherwise).
    """
    if base is None:
        base = infer_base(f.frequencies())
    else:
        base = Scalar.of(base)
        if base.is_zero():
            raise NonIntegerRatio("base must be nonzero")
    return _make(base, ((_degree_of(freq, base), c) for c, freq in f.terms))


def lp_to_expsum(p: LaurentPoly) -> ExpSum:
    return es_normalize((c, p.base * Scalar.exact_value(d)) for d, c in p.coeffs)


def lp_evaluate(p: LaurentPoly, z: complex) -> complex:
    from .expsum import es_evaluate

    return es_evaluate(lp_to_expsum(p), z)


def _check_bases(p: LaurentPoly, q: LaurentPoly) -> None:
    same = p.base.equals(q.base) if (p.base.exact and q.base.exact) else p.base.equals(q.base, 1e-12)
    if not same:
        raise BaseMismatch(f"bases differ: {p.base} vs {q.base}")


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_bases(p, q)
    return _make(p.base, list(p.coeffs) + list(q.coeffs))


def lp_neg(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(p.base, tuple((d, -c) for d, c in p.coeffs))


def lp_sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return lp_add(p, lp_neg(q))


def lp_scale(c, p: LaurentPoly) -> LaurentPoly:
    c = Scalar.of(c)
    return _make(p.base, ((d, c * v) for d, v in p.coeffs))


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_bases(p, q)
    return _make(
        p.base,
        ((dp + dq, cp * cq) for dp, cp in p.coeffs for dq, cq in q.coeffs),
    )


def lp_pow(p: LaurentPoly, k: int) -> LaurentPoly:
    if not isinstance(k, int) or k < 0:
        raise ValueError("lp_pow exponent must be a nonnegative integer")
    out = _make(p.base, [(0, ONE)])
    base = p
    while k:
        if k & 1:
            out = lp_mul(out, base)
        base = lp_mul(base, base)
        k >>= 1
    return out


def lp_derivative_z(p: LaurentPoly) -> LaurentPoly:
    """d/dz = base * t * d/dt: coefficient at degree d maps to d*base*c."""
    return _make(
        p.base,
        ((d, c * p.base * Scalar.exact_value(d)) for d, c in p.coeffs),
    )


def _zero_threshold(p: LaurentPoly, tol: float) -> float:
    if not p.coeffs:
        return 0.0
    return tol * max(1.0, max(abs(c) for _, c in p.coeffs))


def lp_is_zero(p: LaurentPoly, tol: float = ZERO_TOL) -> bool:
    if p.exact:
        return not p.coeffs
    thr = _zero_threshold(p, tol)
    return all(abs(c) <= thr for _, c in p.coeffs)


def lp_is_constant(p: LaurentPoly, tol: float = ZERO_TOL) -> Optional[Scalar]:
    """The constant value iff only the degree-0 coefficient survives.

    Float mode prunes coefficients with magnitude <= tol * max(1, max |c|)
    first; a result obtained that way is necessarily float-mode, which is
    the caller-visible flag that the verdict is tolerance-based.
    """
    if p.exact:
        degs = p.degrees()
        if not degs:
            return Scalar.exact_value(0)
        if degs == (0,):
            return p.coeff(0)
        return None
    thr = _zero_threshold(p, tol)
    surviving = [(d, c) for d, c in p.coeffs if abs(c) > thr]
    if not surviving:
        return Scalar.float_value(0.0)
    if len(surviving) == 1 and surviving[0][0] == 0:
        c = surviving[0][1]
        return Scalar.float_value(float(c.re), float(c.im))
    return None


def lp_div_exact(num: LaurentPoly, den: LaurentPoly, tol: float = ZERO_TOL) -> tuple[LaurentPoly, bool]:
    """Divide in the Laurent ring: (quotient, True) iff num = quotient * den.

    Otherwise returns the partial long-division quotient and False.  Since
    powers of t are units, divisibility reduces to ordinary polynomial
    division after shifting both operands to start at degree zero.
    """
    _check_bases(num, den)
    if not den.coeffs:
        raise DivisionByZeroPolynomial("division by the zero Laurent polynomial")
    if not num.coeffs:
        return LaurentPoly(num.base, ()), True

    n_min, n_max = num.coeffs[0][0], num.coeffs[-1][0]
    d_min, d_max = den.coeffs[0][0], den.coeffs[-1][0]
    # dense ascending coefficient arrays of the shifted polynomials
    n_arr = [num.coeff(d) for d in range(n_min, n_max + 1)]
    d_arr = [den.coeff(d) for d in range(d_min, d_max + 1)]

    exact_arith = num.exact and den.exact
    quot: dict[int, Scalar] = {}
    rem = list(n_arr)
    lead = d_arr[-1]
    deg_d = len(d_arr) - 1
    while len(rem) - 1 >= deg_d and any(not c.is_zero() for c in rem):
        k = len(rem) - 1 - deg_d  # current quotient degree (shifted)
        q = rem[-1] / lead
        if not q.is_zero():
            quot[k] = q
            for i, dc in enumerate(d_arr):
                rem[k + i] = rem[k + i] - q * dc
        rem.pop()
    shift = n_min - d_min
    q_poly = _make(num.base, ((k + shift, c) for k, c in quot.items()))

    if exact_arith:
        divides = all(c.is_zero() for c in rem)
    else:
        scale = max(1.0, max(abs(c) for c in n_arr))
        divides = all(abs(c) <= tol * scale for c in rem)
    return q_poly, divides
