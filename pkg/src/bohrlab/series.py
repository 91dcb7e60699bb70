"""Truncated complex power-series arithmetic.

A series is a finite coefficient prefix c_0..c_N with an explicit
(inclusive) truncation order N.  Everything downstream -- the modular
function, covering maps, majorant sums -- is built on these prefixes, so
truncation error is always attributable to a known order.

All values are immutable after construction; operations return new series.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonzeroInnerConstant, ZeroConstantTerm


@dataclass(frozen=True)
class EvalPoint:
    """A point of the unit disk with its modulus cached."""

    z: complex
    r: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        if self.r is None:
            object.__setattr__(self, "r", abs(self.z))
        else:
            if not np.isclose(self.r, abs(self.z), rtol=4e-16, atol=5e-324):
                raise ValueError("cached modulus disagrees with |z|")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficient prefix c_0..c_N of an analytic function.

    ``coeffs`` always has exactly ``order + 1`` entries and every entry is
    finite.  ``label`` is a free-form provenance string.
    """

    coeffs: np.ndarray
    label: str = ""

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n]) if 0 <= n <= self.order else 0j

    @staticmethod
    def constant(c, order: int = 0, label: str = "") -> "TruncatedSeries":
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = c
        return TruncatedSeries(coeffs, label)

    @staticmethod
    def identity(order: int = 1) -> "TruncatedSeries":
        coeffs = np.zeros(order + 1, dtype=complex)
        if order >= 1:
            coeffs[1] = 1.0
        return TruncatedSeries(coeffs, "z")

    def truncated(self, order: int) -> "TruncatedSeries":
        """Prefix of this series at the given order (zero-padded if longer)."""
        coeffs = np.zeros(order + 1, dtype=complex)
        k = min(order, self.order) + 1
        coeffs[:k] = self.coeffs[:k]
        return TruncatedSeries(coeffs, self.label)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "TruncatedSeries":
        other = _coerce(other)
        n = max(self.order, other.order)
        coeffs = np.zeros(n + 1, dtype=complex)
        coeffs[: self.order + 1] += self.coeffs
        coeffs[: other.order + 1] += other.coeffs
        return TruncatedSeries(coeffs)

    def __radd__(self, other) -> "TruncatedSeries":
        return self.__add__(other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.coeffs, self.label)

    def __sub__(self, other) -> "TruncatedSeries":
        return self.__add__(-_coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return _coerce(other).__sub__(self)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs * complex(c))

    def __mul__(self, other) -> "TruncatedSeries":
        if np.isscalar(other):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.__mul__(other)

    def mul(self, other, order: int | None = None) -> "TruncatedSeries":
        """Cauchy product truncated at ``order`` (full product by default)."""
        other = _coerce(other)
        full = self.order + other.order
        if order is None:
            order = full
        if order > full:
            raise ValueError("requested order exceeds the exact product order")
        coeffs = np.convolve(self.coeffs, other.coeffs)[: order + 1]
        return TruncatedSeries(coeffs)

    def compose(self, inner: "TruncatedSeries", order: int) -> "TruncatedSeries":
        """Coefficients of self(inner(z)) up to ``order``.

        The inner series must vanish exactly at 0: only then does a degree-N
        prefix of the inner series determine the composite exactly to
        degree N.
        """
        if inner[0] != 0:
            raise NonzeroInnerConstant(
                "inner series has constant term %r" % inner[0]
            )
        inner = inner.truncated(order)
        # Horner on the outer coefficients.  Since the inner series has
        # valuation >= 1, outer degrees beyond `order` cannot reach back.
        acc = np.zeros(order + 1, dtype=complex)
        top = min(self.order, order)
        acc[0] = self[top]
        for k in range(top - 1, -1, -1):
            acc = np.convolve(acc, inner.coeffs)[: order + 1]
            if acc.size < order + 1:
                acc = np.pad(acc, (0, order + 1 - acc.size))
            acc[0] += self[k]
        return TruncatedSeries(acc)

    def reciprocal(self, order: int) -> "TruncatedSeries":
        """Series g with self * g = 1 + O(z^{order+1})."""
        c0 = self[0]
        if c0 == 0:
            raise ZeroConstantTerm("cannot invert a series vanishing at 0")
        f = self.truncated(order).coeffs
        g = np.zeros(order + 1, dtype=complex)
        g[0] = 1.0 / c0
        for n in range(1, order + 1):
            g[n] = -np.dot(f[1 : n + 1], g[n - 1 :: -1]) / c0
        return TruncatedSeries(g)

    # -- calculus -----------------------------------------------------------

    def differentiate(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries(np.zeros(1, dtype=complex))
        n = np.arange(1, self.order + 1)
        return TruncatedSeries(self.coeffs[1:] * n)

    def integrate(self) -> "TruncatedSeries":
        """Antiderivative with constant term 0."""
        n = np.arange(1, self.order + 2)
        coeffs = np.concatenate([[0.0], self.coeffs / n])
        return TruncatedSeries(coeffs)

    # -- evaluation ---------------------------------------------------------

    def eval(self, z):
        """Horner evaluation of the truncated polynomial.

        Accepts a complex scalar, an :class:`EvalPoint`, or an ndarray of
        points.  No tail estimate is applied here.
        """
        if isinstance(z, EvalPoint):
            z = z.z
        z = np.asarray(z, dtype=complex)
        acc = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for k in range(self.order - 1, -1, -1):
            acc = acc * z + self.coeffs[k]
        return complex(acc) if acc.ndim == 0 else acc

    def __call__(self, z):
        return self.eval(z)


def _coerce(x) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if np.isscalar(x):
        return TruncatedSeries.constant(x)
    raise TypeError("cannot interpret %r as a series" % (x,))


def exp_series(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Exponential of a series prefix.

    Uses the recurrence n e_n = sum_{k=1..n} k f_k e_{n-k}; a nonzero
    constant term is shifted out and restored as an overall factor
    exp(f_0).
    """
    f = f.truncated(order)
    e = np.zeros(order + 1, dtype=complex)
    e[0] = 1.0
    kf = f.coeffs * np.arange(order + 1)
    for n in range(1, order + 1):
        e[n] = np.dot(kf[1 : n + 1], e[n - 1 :: -1]) / n
    return TruncatedSeries(e * np.exp(f[0]))


def geometric_series(order: int) -> TruncatedSeries:
    """Prefix of 1/(1-z)."""
    return TruncatedSeries(np.ones(order + 1, dtype=complex), "1/(1-z)")
