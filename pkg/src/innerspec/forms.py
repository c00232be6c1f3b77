"""Finite representations of meromorphic Herglotz functions.

A meromorphic Herglotz function (real on the real line, positive imaginary
part above it) with discrete simple poles admits three interchangeable
finite representations once it is truncated to a window of pole/zero pairs:

* :class:`HerglotzProductForm` -- a product over interlacing pole/zero
  pairs, anchored by the value at 0,
* :class:`HerglotzSumForm` -- a linear term plus the Schwarz integral of a
  discrete measure,
* :class:`PoleExpansionForm` -- a constant plus a sum of simple-pole terms.

This module stores, validates, evaluates and converts between the three,
and provides the Cayley transform linking Herglotz functions to inner
functions of the upper half-plane.  All types are immutable after
construction and every operation is a pure function of its inputs, so
evaluation over grids may be parallelized freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError

__all__ = [
    "InterlacingPairs",
    "HerglotzProductForm",
    "ClarkMeasure",
    "HerglotzSumForm",
    "PoleExpansionForm",
    "ProductLimit",
    "eval_product",
    "eval_sum",
    "eval_pole_expansion",
    "cayley_inner",
    "cayley_herglotz",
    "limit_at_infinity",
    "product_to_expansion",
    "l_from_L",
    "L_from_l",
    "short_interval_sum",
    "short_interval_sum_l2",
    "window_indices",
]

TWO_SIDED = "two-sided"
BOUNDED_BELOW = "bounded-below"
_MODES = (TWO_SIDED, BOUNDED_BELOW)


def _locked(values, dtype=float) -> np.ndarray:
    """Copy ``values`` into a read-only 1-d array."""
    arr = np.array(values, dtype=dtype, copy=True).reshape(-1)
    arr.setflags(write=False)
    return arr


def window_indices(spectrum: np.ndarray, mode: str) -> np.ndarray:
    """Index window for a stored spectrum.

    Bounded-below windows count 1..N.  Two-sided windows anchor index 0 at
    the first nonnegative entry; when every entry is negative the indices
    run -N..-1.  Indexing is metadata only and never affects a computed
    value.
    """
    if mode not in _MODES:
        raise DomainError(f"unknown indexing mode {mode!r}")
    n = len(spectrum)
    if mode == BOUNDED_BELOW:
        return np.arange(1, n + 1)
    k0 = int(np.searchsorted(spectrum, 0.0, side="left"))
    return np.arange(n) - k0


@dataclass(frozen=True, eq=False)
class InterlacingPairs:
    """Finite window of two interlacing point sequences.

    ``a`` holds the poles and ``b`` the zeros of a truncated Herglotz
    function, interleaved as a_n < b_n < a_{n+1}.  A pair may straddle 0,
    but no individual entry may equal 0 (the product representation has to
    be evaluable at the origin).
    """

    indexing: str
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if self.indexing not in _MODES:
            raise DomainError(f"unknown indexing mode {self.indexing!r}")
        a = _locked(self.a)
        b = _locked(self.b)
        if a.shape != b.shape:
            raise DomainError("pole and zero sequences must have equal length")
        if np.any(a == 0.0) or np.any(b == 0.0):
            raise DomainError("entries at 0 are not allowed (the value at 0 anchors the product)")
        if np.any(b <= a):
            k = int(np.argmax(b <= a))
            raise DomainError(f"interlacing violated at position {k}: need a < b, got ({a[k]}, {b[k]})")
        if a.size > 1 and np.any(a[1:] <= b[:-1]):
            k = int(np.argmax(a[1:] <= b[:-1]))
            raise DomainError(
                f"interlacing violated between positions {k} and {k + 1}: "
                f"need b_n < a_(n+1), got ({b[k]}, {a[k + 1]})"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_arrays(cls, a, b, indexing: str = TWO_SIDED) -> "InterlacingPairs":
        return cls(indexing, np.asarray(a, dtype=float), np.asarray(b, dtype=float))

    def __len__(self) -> int:
        return int(self.a.size)

    @property
    def indices(self) -> np.ndarray:
        return window_indices(self.a, self.indexing)

    def interval_lengths(self) -> np.ndarray:
        return self.b - self.a

    def interval_distances(self) -> np.ndarray:
        """Distance from 0 to each open interval (a_n, b_n)."""
        return np.where(self.a > 0.0, self.a, np.where(self.b < 0.0, -self.b, 0.0))

    def entries(self) -> list[tuple[int, float, float]]:
        return [
            (int(n), float(x), float(y))
            for n, x, y in zip(self.indices, self.a, self.b)
        ]


@dataclass(frozen=True, eq=False)
class HerglotzProductForm:
    """m(z) = c * prod_n (z/b_n - 1) / (z/a_n - 1), with c = m(0) > 0."""

    c: float
    pairs: InterlacingPairs

    def __post_init__(self):
        c = float(self.c)
        if not (math.isfinite(c) and c > 0.0):
            raise DomainError(f"anchor value m(0) must be a positive finite real, got {c}")
        object.__setattr__(self, "c", c)
        straddle = (self.pairs.a < 0.0) & (self.pairs.b > 0.0)
        if np.any(straddle):
            k = int(np.argmax(straddle))
            raise DomainError(
                f"pair at position {k} straddles 0; a positive anchor value is then "
                "impossible -- shift the spectral parameter first"
            )

    def eval(self, z) -> complex:
        return eval_product(self, z)


@dataclass(frozen=True, eq=False)
class ClarkMeasure:
    """Discrete Poisson-finite measure: atoms plus a mass at infinity.

    The mass at infinity equals pi times the linear coefficient of the
    Herglotz function the measure represents.
    """

    support: np.ndarray
    masses: np.ndarray
    mass_at_infinity: float = 0.0

    def __post_init__(self):
        support = _locked(self.support)
        masses = _locked(self.masses)
        if support.shape != masses.shape:
            raise DomainError("support and masses must have equal length")
        if support.size > 1 and np.any(np.diff(support) <= 0.0):
            raise DomainError("support must be strictly increasing")
        if np.any(masses <= 0.0):
            raise DomainError("all point masses must be strictly positive")
        m_inf = float(self.mass_at_infinity)
        if not (math.isfinite(m_inf) and m_inf >= 0.0):
            raise DomainError(f"mass at infinity must be a nonnegative real, got {m_inf}")
        if not math.isfinite(float(np.sum(masses / (1.0 + support**2)))):
            raise DomainError("Poisson sum of the measure is not finite")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "mass_at_infinity", m_inf)

    @classmethod
    def empty(cls) -> "ClarkMeasure":
        return cls(np.empty(0), np.empty(0), 0.0)

    def poisson_sum(self) -> float:
        return float(np.sum(self.masses / (1.0 + self.support**2)))

    def __len__(self) -> int:
        return int(self.support.size)


@dataclass(frozen=True, eq=False)
class HerglotzSumForm:
    """m(z) = slope*z + offset + i * (Schwarz integral of the measure)."""

    slope_at_infinity: float
    offset: float
    measure: ClarkMeasure

    def __post_init__(self):
        slope = float(self.slope_at_infinity)
        offset = float(self.offset)
        if not (math.isfinite(slope) and slope >= 0.0):
            raise DomainError(f"slope at infinity must be nonnegative, got {slope}")
        if not math.isfinite(offset):
            raise DomainError("offset must be finite")
        object.__setattr__(self, "slope_at_infinity", slope)
        object.__setattr__(self, "offset", offset)

    def clark_measure(self) -> ClarkMeasure:
        """The stored atoms with the mass at infinity implied by the slope."""
        return ClarkMeasure(
            self.measure.support, self.measure.masses, math.pi * self.slope_at_infinity
        )

    def eval(self, z) -> complex:
        return eval_sum(self, z)


@dataclass(frozen=True, eq=False)
class PoleExpansionForm:
    """m(z) = L + (1/pi) * sum_k masses_k / (poles_k - z)."""

    L: float
    poles: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        L = float(self.L)
        if not math.isfinite(L):
            raise DomainError("limit value L must be finite")
        poles = _locked(self.poles)
        masses = _locked(self.masses)
        if poles.shape != masses.shape:
            raise DomainError("poles and masses must have equal length")
        if poles.size > 1 and np.any(np.diff(poles) <= 0.0):
            raise DomainError("poles must be strictly increasing")
        if np.any(masses <= 0.0):
            raise DomainError("all masses must be strictly positive")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "masses", masses)

    def eval(self, z) -> complex:
        return eval_pole_expansion(self, z)


class ProductLimit(NamedTuple):
    """Limit along the upward imaginary axis and the bare pole/zero ratio product."""

    limit: float
    ratio_product: float


def _check_not_on(points: np.ndarray, z: complex, what: str):
    if points.size and z.imag == 0.0:
        hit = np.nonzero(points == z.real)[0]
        if hit.size:
            raise DomainError(f"evaluation at {what} (position {int(hit[0])}, value {z.real})")


def eval_product(form: HerglotzProductForm, z) -> complex:
    """Evaluate the product form at ``z`` (``z`` must not be a pole).

    Factors are computed as a_n (z - b_n) / (b_n (z - a_n)) and multiplied
    in order of increasing |a_n| to keep partial products near 1.
    """
    a, b = form.pairs.a, form.pairs.b
    zc = complex(z)
    if a.size == 0:
        return complex(form.c)
    _check_not_on(a, zc, "a pole of the product form")
    factors = (a * (zc - b)) / (b * (zc - a))
    order = np.argsort(np.abs(a), kind="stable")
    return complex(form.c * np.prod(factors[order]))


def eval_sum(form: HerglotzSumForm, z) -> complex:
    """Evaluate the (linear + Schwarz integral) form at ``z``."""
    zc = complex(z)
    t, mu = form.measure.support, form.measure.masses
    _check_not_on(t, zc, "a support point of the measure")
    acc = form.slope_at_infinity * zc + form.offset
    if t.size:
        acc += np.sum(mu * (1.0 / (t - zc) - t / (1.0 + t**2))) / math.pi
    return complex(acc)


def eval_pole_expansion(form: PoleExpansionForm, z) -> complex:
    """Evaluate the pole expansion at ``z`` (``z`` must not be a pole)."""
    zc = complex(z)
    _check_not_on(form.poles, zc, "a pole of the expansion")
    acc = complex(form.L)
    if form.poles.size:
        acc += np.sum(form.masses / (form.poles - zc)) / math.pi
    return complex(acc)


def cayley_inner(m_value) -> complex:
    """Map a Herglotz value to the inner-function side: (m - i) / (m + i)."""
    w = complex(m_value)
    if w == -1j:
        raise DomainError("Cayley transform is undefined at -i")
    return (w - 1j) / (w + 1j)


def cayley_herglotz(theta_value) -> complex:
    """Inverse Cayley map: i (1 + theta) / (1 - theta)."""
    t = complex(theta_value)
    if t == 1:
        raise DomainError("inverse Cayley transform is undefined at 1")
    return 1j * (1 + t) / (1 - t)


def limit_at_infinity(form: HerglotzProductForm) -> ProductLimit:
    """Limit of the product form along the upward imaginary axis.

    Returns both L = c * prod a_n/b_n and the bare product p = prod a_n/b_n.
    A finite truncation always converges.
    """
    a, b = form.pairs.a, form.pairs.b
    if a.size == 0:
        return ProductLimit(float(form.c), 1.0)
    order = np.argsort(np.abs(a), kind="stable")
    p = float(np.prod((a / b)[order]))
    return ProductLimit(float(form.c) * p, p)


def clark_masses_of_product(form: HerglotzProductForm) -> np.ndarray:
    """Point masses mu(a_k) = -pi * Res(m, a_k) via explicit partial products.

    The residue at a_k of the product form is
    c * a_k * (a_k - b_k) / b_k * prod_{n != k} (a_k/b_n - 1) / (a_k/a_n - 1),
    so every mass comes out strictly positive for valid interlacing data.
    """
    a, b = form.pairs.a, form.pairs.b
    n = a.size
    if n == 0:
        return np.empty(0)
    num = a[:, None] / b[None, :] - 1.0
    den = a[:, None] / a[None, :] - 1.0
    np.fill_diagonal(den, 1.0)
    ratios = num / den
    head = np.diag(ratios).copy()  # the k-th numerator factor (a_k/b_k - 1)
    np.fill_diagonal(ratios, 1.0)
    partial = np.prod(ratios, axis=1)
    # mu_k = -pi * Res = pi * c * a_k * (b_k - a_k) / b_k * partial
    mu = math.pi * form.c * (-a * head) * partial
    if np.any(mu <= 0.0) or not np.all(np.isfinite(mu)):
        raise DomainError("residue computation produced nonpositive masses; data are not interlacing")
    return mu


def product_to_expansion(form: HerglotzProductForm) -> PoleExpansionForm:
    """Convert a product form to its pole expansion.

    Off the poles the two representations evaluate identically; an empty
    product converts to the constant expansion {L = c}.
    """
    if len(form.pairs) == 0:
        return PoleExpansionForm(form.c, np.empty(0), np.empty(0))
    mu = clark_masses_of_product(form)
    return PoleExpansionForm(limit_at_infinity(form).limit, form.pairs.a, mu)


def l_from_L(L: float) -> complex:
    """Inner-function limit along the imaginary axis from the Herglotz one."""
    Lf = float(L)
    if not math.isfinite(Lf):
        raise DomainError("L must be a finite real")
    return (Lf - 1j) / (Lf + 1j)


def L_from_l(l) -> float:
    """Herglotz limit along the imaginary axis from the inner-function one.

    Requires |l| = 1 and l != 1; l = 1 signals a point mass at infinity, a
    case the finite reconstructions do not cover.
    """
    t = complex(l)
    if t == 1:
        raise DomainError("l = 1 signals a mass at infinity; L is not finite")
    if abs(abs(t) - 1.0) > 1e-9:
        raise DomainError(f"l must be unimodular, got |l| = {abs(t)}")
    val = 1j * (1 + t) / (1 - t)
    if abs(val.imag) > 1e-9 * (1.0 + abs(val)):
        raise DomainError(f"l does not map to a real limit (got {val})")
    return float(val.real)


def short_interval_sum(pairs: InterlacingPairs) -> float:
    """Partial sum of |I_n| / (1 + dist(0, I_n)) over the stored window.

    Diagnostic only: finiteness of the full series is not decidable from a
    truncation.
    """
    if len(pairs) == 0:
        return 0.0
    return float(np.sum(pairs.interval_lengths() / (1.0 + pairs.interval_distances())))


def short_interval_sum_l2(pairs: InterlacingPairs) -> float:
    """Partial sum of the squared variant |I_n|^2 / (1 + dist(0, I_n)^2)."""
    if len(pairs) == 0:
        return 0.0
    return float(
        np.sum(pairs.interval_lengths() ** 2 / (1.0 + pairs.interval_distances() ** 2))
    )
