"""Canonical finite exponential sums  f(z) = sum_k c_k * e^(freq_k * z).

Terms are kept in canonical form: frequencies pairwise distinct, no zero
coefficients, sorted lexicographically by (Re freq, Im freq).  Two exact
sums are equal iff their canonical term tuples are equal; float-mode sums
are compared termwise within tolerance via `es_close`.

All operations are pure; ExpSum values are immutable and safe to share
across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import EvaluationRangeError
from .scalar import Scalar, ZERO, ONE

#: default absolute tolerance (per component) for float-mode frequency merging
FREQ_MERGE_TOL = 1e-12

#: Re(freq*z) beyond this overflows |e^{freq z}| in double precision
_EXP_OVERFLOW = 709.0


def _freq_key(freq: Scalar):
    return (freq.re, freq.im)


@dataclass(frozen=True)
class ExpSum:
    terms: tuple[tuple[Scalar, Scalar], ...] = ()

    @property
    def exact(self) -> bool:
        return all(c.exact and f.exact for c, f in self.terms)

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def is_zero(self) -> bool:
        return not self.terms

    def frequencies(self) -> tuple[Scalar, ...]:
        return tuple(f for _, f in self.terms)

    # numpy views, cached per instance (read-only use)
    @cached_property
    def _coeff_arr(self) -> np.ndarray:
        return np.array([c.as_complex for c, _ in self.terms], dtype=complex)

    @cached_property
    def _freq_arr(self) -> np.ndarray:
        return np.array([f.as_complex for _, f in self.terms], dtype=complex)

    # -- operator sugar over the module-level operations -----------------

    def __add__(self, other: "ExpSum") -> "ExpSum":
        return es_add(self, other)

    def __sub__(self, other: "ExpSum") -> "ExpSum":
        return es_add(self, es_scale(Scalar.exact_value(-1), other))

    def __mul__(self, other):
        if isinstance(other, ExpSum):
            return es_mul(self, other)
        return es_scale(Scalar.of(other), self)

    __rmul__ = __mul__

    def __neg__(self) -> "ExpSum":
        return es_scale(Scalar.exact_value(-1), self)

    def __pow__(self, k: int) -> "ExpSum":
        if not isinstance(k, int) or k < 0:
            raise ValueError("ExpSum powers are nonnegative integers")
        out = constant(ONE)
        base = self
        while k:
            if k & 1:
                out = es_mul(out, base)
            base = es_mul(base, base)
            k >>= 1
        return out

    def differentiate(self) -> "ExpSum":
        return es_differentiate(self)

    def evaluate(self, z: complex) -> complex:
        return es_evaluate(self, z)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e^({f}z)" for c, f in self.terms)


def es_normalize(
    terms: Iterable[tuple[Scalar, Scalar]], freq_tol: float = FREQ_MERGE_TOL
) -> ExpSum:
    """Merge duplicate frequencies, drop zero coefficients, sort canonically.

    Exact frequencies merge on exact equality; once any float-mode part is
    involved, frequencies within `freq_tol` (absolute, per component) merge.
    """
    items = sorted(
        ((Scalar.of(c), Scalar.of(f)) for c, f in terms),
        key=lambda cf: _freq_key(cf[1]),
    )
    merged: list[tuple[Scalar, Scalar]] = []
    for coeff, freq in items:
        if merged:
            pc, pf = merged[-1]
            same = pf.equals(freq) if (pf.exact and freq.exact) else pf.equals(freq, freq_tol)
            if same:
                merged[-1] = (pc + coeff, pf)
                continue
        merged.append((coeff, freq))
    cleaned = tuple((c, f) for c, f in merged if not c.is_zero())
    return ExpSum(cleaned)


def from_terms(terms: Sequence[tuple]) -> ExpSum:
    """Build a canonical ExpSum from (coeff, freq) pairs of coercible values."""
    return es_normalize((Scalar.of(c), Scalar.of(f)) for c, f in terms)


def constant(c) -> ExpSum:
    return from_terms([(Scalar.of(c), ZERO)])


def exp_term(coeff, freq) -> ExpSum:
    return from_terms([(coeff, freq)])


def es_add(f: ExpSum, g: ExpSum) -> ExpSum:
    return es_normalize(f.terms + g.terms)


def es_scale(c: Scalar, f: ExpSum) -> ExpSum:
    c = Scalar.of(c)
    return es_normalize((c * coeff, freq) for coeff, freq in f.terms)


def es_mul(f: ExpSum, g: ExpSum) -> ExpSum:
    prods = [
        (cf * cg, ff + fg) for cf, ff in f.terms for cg, fg in g.terms
    ]
    return es_normalize(prods)


def es_differentiate(f: ExpSum) -> ExpSum:
    """d/dz: each term (c, freq) maps to (c*freq, freq); constants vanish."""
    return es_normalize((c * freq, freq) for c, freq in f.terms)


def es_evaluate(f: ExpSum, z: complex) -> complex:
    """Evaluate at a point.  Always float, even for exact sums.

    Terms are accumulated with compensated summation on the real and
    imaginary parts.  Overflow of any |e^{freq z}| raises
    EvaluationRangeError carrying the offending frequency.
    """
    z = complex(z)
    res: list[float] = []
    ims: list[float] = []
    for c, freq in f.terms:
        w = freq.as_complex * z
        if w.real > _EXP_OVERFLOW:
            raise EvaluationRangeError(freq.as_complex, z)
        term = c.as_complex * cmath.exp(w)
        res.append(term.real)
        ims.append(term.imag)
    return complex(math.fsum(res), math.fsum(ims))


def es_evaluate_many(f: ExpSum, zs: np.ndarray) -> np.ndarray:
    """Vectorized evaluation; overflow yields inf entries (no exception)."""
    zs = np.asarray(zs, dtype=complex)
    if not f.terms:
        return np.zeros_like(zs)
    with np.errstate(over="ignore", invalid="ignore"):
        ez = np.exp(np.multiply.outer(f._freq_arr, zs))
        return np.tensordot(f._coeff_arr, ez, axes=(0, 0))


def es_log_abs_many(f: ExpSum, zs: np.ndarray) -> np.ndarray:
    """log|f(z)| computed stably via max-shift; -inf where f(z) = 0.

    Safe far beyond the overflow range of direct evaluation, which the
    growth functionals need for radii in the hundreds or thousands.
    """
    zs = np.asarray(zs, dtype=complex)
    if not f.terms:
        return np.full(zs.shape, -np.inf)
    expo = np.multiply.outer(f._freq_arr, zs)  # (k, n)
    logmag = expo.real + np.log(np.abs(f._coeff_arr))[:, None]
    shift = logmag.max(axis=0)
    with np.errstate(under="ignore"):
        scaled = f._coeff_arr[:, None] * np.exp(expo - shift[None, :])
    total = np.abs(scaled.sum(axis=0))
    with np.errstate(divide="ignore"):
        return shift + np.log(total)


def es_ratio_many(num: ExpSum, den: ExpSum, zs: np.ndarray) -> np.ndarray:
    """num(z)/den(z) with a common max-shift so huge |e^{freq z}| cancel.

    Used for argument-principle integrands f'/(f-a) on contours where the
    raw values overflow.  Points where den vanishes produce inf entries.
    """
    if not den.terms:
        raise ZeroDivisionError("ratio against the zero function")
    zs = np.asarray(zs, dtype=complex)
    all_freqs = np.concatenate([num._freq_arr, den._freq_arr])
    shift = np.multiply.outer(all_freqs, zs).real.max(axis=0)

    def _shifted(g: ExpSum) -> np.ndarray:
        if not g.terms:
            return np.zeros_like(zs)
        expo = np.multiply.outer(g._freq_arr, zs) - shift[None, :]
        with np.errstate(under="ignore"):
            return np.tensordot(g._coeff_arr, np.exp(expo), axes=(0, 0))

    n, d = _shifted(num), _shifted(den)
    with np.errstate(divide="ignore", invalid="ignore"):
        return n / d


def es_close(f: ExpSum, g: ExpSum, tol: float = 1e-9) -> bool:
    """Termwise comparison: same length, frequencies and coefficients within tol."""
    if len(f.terms) != len(g.terms):
        return False
    for (cf, ff), (cg, fg) in zip(f.terms, g.terms):
        if not (ff.equals(fg, tol) and cf.equals(cg, tol)):
            return False
    return True
