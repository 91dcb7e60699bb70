"""Seeded construction of Schwarz functions, large-function specs and
polynomials for the verification sweeps.

Every randomized constructor is a pure function of (seed, parameters); the
recipes serialize to a canonical text form so any counterexample found by a
sweep can be replayed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DegenerateSpec, DomainError
from .modular import CoveringParameter, j_eval, q_deriv, q_eval, q_series
from .series import TruncatedSeries


def _fmt(x) -> str:
    if isinstance(x, complex):
        return "%.17g%+.17gj" % (x.real, x.imag)
    return "%.17g" % x


@dataclass(frozen=True)
class Factor:
    """One zero-fixing disk self-map in a composition recipe.

    Kinds: identity ``z``; rotation ``e^{i theta} z``; power ``z^k``;
    contraction ``s z``; blaschke ``z (z + c) / (1 + conj(c) z)`` (a degree-2
    Blaschke product).  All of them fix the origin and map the disk into
    itself, so any composition is automatically a Schwarz function.
    """

    kind: str
    param: complex = 0j

    def __post_init__(self):
        if self.kind == "rotation":
            object.__setattr__(self, "param", complex(self.param.real, 0.0))
        elif self.kind == "power":
            k = int(self.param.real)
            if k < 2:
                raise DomainError("power factor needs exponent >= 2")
            object.__setattr__(self, "param", complex(k, 0.0))
        elif self.kind == "contraction":
            s = self.param.real
            if not 0 < s <= 1:
                raise DomainError("contraction needs 0 < s <= 1")
            object.__setattr__(self, "param", complex(s, 0.0))
        elif self.kind == "blaschke":
            if abs(self.param) >= 1:
                raise DomainError("blaschke parameter needs |c| < 1")
        elif self.kind != "identity":
            raise DomainError("unknown factor kind %r" % self.kind)

    @property
    def is_inner(self) -> bool:
        # Every kind except a strict contraction is a finite Blaschke
        # product, hence a proper surjection of the disk onto itself.
        return self.kind != "contraction" or self.param.real == 1.0

    def eval(self, z):
        if self.kind == "identity":
            return z
        if self.kind == "rotation":
            return np.exp(1j * self.param.real) * z
        if self.kind == "power":
            return z ** int(self.param.real)
        if self.kind == "contraction":
            return self.param.real * z
        c = self.param
        return z * (z + c) / (1.0 + np.conj(c) * z)

    def deriv(self, z):
        if self.kind == "identity":
            return np.ones_like(np.asarray(z, dtype=complex))
        if self.kind == "rotation":
            return np.full_like(np.asarray(z, dtype=complex),
                                np.exp(1j * self.param.real))
        if self.kind == "power":
            k = int(self.param.real)
            return k * z ** (k - 1)
        if self.kind == "contraction":
            return np.full_like(np.asarray(z, dtype=complex),
                                self.param.real)
        c = self.param
        mob = (z + c) / (1.0 + np.conj(c) * z)
        mob_d = (1.0 - abs(c) ** 2) / (1.0 + np.conj(c) * z) ** 2
        return mob + z * mob_d

    def series(self, order: int) -> TruncatedSeries:
        coeffs = np.zeros(order + 1, dtype=complex)
        if self.kind == "identity":
            coeffs[1] = 1.0
        elif self.kind == "rotation":
            coeffs[1] = np.exp(1j * self.param.real)
        elif self.kind == "power":
            k = int(self.param.real)
            if k <= order:
                coeffs[k] = 1.0
        elif self.kind == "contraction":
            coeffs[1] = self.param.real
        else:
            c = self.param
            num = np.zeros(order + 1, dtype=complex)
            num[1] = c
            if order >= 2:
                num[2] = 1.0
            denom = np.zeros(order + 1, dtype=complex)
            denom[0] = 1.0
            if order >= 1:
                denom[1] = np.conj(c)
            inv = TruncatedSeries(denom).reciprocal(order)
            return TruncatedSeries(num).mul(inv, order)
        return TruncatedSeries(coeffs)

    def text(self) -> str:
        if self.kind == "identity":
            return "identity"
        if self.kind == "blaschke":
            return "blaschke(%s)" % _fmt(self.param)
        if self.kind == "power":
            return "power(%d)" % int(self.param.real)
        return "%s(%s)" % (self.kind, _fmt(self.param.real))


@dataclass(frozen=True)
class SchwarzFunction:
    """Composition of zero-fixing disk self-maps, applied first-to-last."""

    factors: tuple[Factor, ...]
    seed: int = 0

    def __post_init__(self):
        if not self.factors:
            raise DomainError("recipe needs at least one factor")

    @property
    def is_inner(self) -> bool:
        return all(f.is_inner for f in self.factors)

    def modulus_bound(self) -> float:
        """Product of contraction ratios: a global bound on |phi|."""
        b = 1.0
        for f in self.factors:
            if f.kind == "contraction":
                b *= f.param.real
        return b

    def eval(self, z):
        for f in self.factors:
            z = f.eval(z)
        return z

    def deriv(self, z):
        z = np.asarray(z, dtype=complex)
        d = np.ones_like(z)
        for f in self.factors:
            d = d * f.deriv(z)
            z = f.eval(z)
        return d

    def series(self, order: int) -> TruncatedSeries:
        s = self.factors[0].series(order)
        for f in self.factors[1:]:
            s = f.series(order).compose(s, order)
        return s

    def text(self) -> str:
        return " . ".join(f.text() for f in self.factors)


def identity_schwarz() -> SchwarzFunction:
    return SchwarzFunction((Factor("identity"),))


def random_schwarz(
    seed: int, depth: int, inner_only: bool = False
) -> SchwarzFunction:
    """Draw a recipe of `depth` factors; deterministic per seed.

    Contraction ratios are kept in [0.3, 0.7] so that composites used in
    boundary-sampling sweeps stay a fixed distance inside the disk.
    """
    if not 1 <= depth <= 8:
        raise DomainError("depth must be in [1, 8]")
    rng = np.random.default_rng(seed)
    kinds = ["identity", "rotation", "power", "blaschke"]
    if not inner_only:
        kinds.append("contraction")
    factors = []
    for _ in range(depth):
        kind = kinds[rng.integers(len(kinds))]
        if kind == "rotation":
            f = Factor("rotation", complex(2 * math.pi * rng.random()))
        elif kind == "power":
            f = Factor("power", complex(int(rng.integers(2, 4))))
        elif kind == "contraction":
            f = Factor("contraction", complex(rng.uniform(0.3, 0.7)))
        elif kind == "blaschke":
            rad = 0.8 * math.sqrt(rng.random())
            ang = 2 * math.pi * rng.random()
            f = Factor("blaschke", rad * np.exp(1j * ang))
        else:
            f = Factor("identity")
        factors.append(f)
    return SchwarzFunction(tuple(factors), seed)


@dataclass(frozen=True)
class LargeFunctionSpec:
    """Constructive description of an analytic F omitting two values.

    F(z) = a + (b - a) Q_alpha(phi(z)) for a covering parameter alpha and a
    Schwarz function phi.  With phi inner the image is exactly the plane
    minus {a, b}.
    """

    a: complex
    b: complex
    alpha: CoveringParameter
    phi: SchwarzFunction
    order: int
    series: TruncatedSeries = field(repr=False)

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateSpec("omitted points must be distinct")

    @property
    def f0(self) -> complex:
        return self.a + (self.b - self.a) * j_eval(math.exp(-self.alpha.alpha))

    def eval(self, z):
        return self.a + (self.b - self.a) * q_eval(self.alpha.alpha,
                                                   self.phi.eval(z))

    def deriv(self, z):
        w = self.phi.eval(z)
        return (self.b - self.a) * q_deriv(self.alpha.alpha, w) \
            * self.phi.deriv(z)

    def translated(self, c: complex) -> "LargeFunctionSpec":
        return LargeFunctionSpec(
            self.a + c, self.b + c, self.alpha, self.phi, self.order,
            self.series + TruncatedSeries.constant(c),
        )

    def scaled(self, c: complex) -> "LargeFunctionSpec":
        if c == 0:
            raise DegenerateSpec("scale factor must be nonzero")
        return LargeFunctionSpec(
            self.a * c, self.b * c, self.alpha, self.phi, self.order,
            self.series.scale(c),
        )

    def text(self) -> str:
        return "a=%s b=%s alpha=%s order=%d phi=[%s]" % (
            _fmt(self.a), _fmt(self.b), _fmt(self.alpha.alpha),
            self.order, self.phi.text(),
        )


def make_large_function(a, b, alpha, phi: SchwarzFunction,
                        order: int) -> LargeFunctionSpec:
    """Assemble the spec and its truncated series."""
    a, b = complex(a), complex(b)
    if a == b:
        raise DegenerateSpec("omitted points must be distinct")
    if not isinstance(alpha, CoveringParameter):
        alpha = CoveringParameter(float(alpha))
    qs = q_series(alpha, order)
    f_series = a + (b - a) * qs.compose(phi.series(order), order)
    return LargeFunctionSpec(a, b, alpha, phi, order, f_series)


def random_large_function(
    seed: int, order: int = 64, inner_only: bool | None = None
) -> LargeFunctionSpec:
    """Draw a spec with well-separated omitted points.

    alpha is kept in [0.8, pi] so circle-sampled evaluation of the cover
    stays cheap; the artifact itself accepts any alpha > 0.
    """
    rng = np.random.default_rng(seed)
    if inner_only is None:
        inner_only = bool(rng.random() < 0.5)
    while True:
        a = complex(*rng.uniform(-1.5, 1.5, 2))
        b = complex(*rng.uniform(-1.5, 1.5, 2))
        if abs(a - b) >= 0.3:
            break
    alpha = rng.uniform(0.8, math.pi)
    phi = random_schwarz(int(rng.integers(2**32)), int(rng.integers(1, 5)),
                         inner_only=inner_only)
    return make_large_function(a, b, alpha, phi, order)


def random_polynomial(seed: int, degree: int,
                      coeff_bound: float = 1.0) -> TruncatedSeries:
    """Polynomial with coefficients uniform in a disk; deterministic."""
    if degree > 16:
        raise DomainError("degree is capped at 16")
    rng = np.random.default_rng(seed)
    rad = coeff_bound * np.sqrt(rng.random(degree + 1))
    ang = 2 * np.pi * rng.random(degree + 1)
    return TruncatedSeries(rad * np.exp(1j * ang), "random polynomial")


def random_mobius_bounded(seed: int, order: int = 64) -> TruncatedSeries:
    """Series of (c + z e^{i t}) / (1 + conj(c) z e^{i t}): modulus < 1."""
    rng = np.random.default_rng(seed)
    rad = 0.9 * math.sqrt(rng.random())
    c = rad * np.exp(2j * np.pi * rng.random())
    t = np.exp(2j * np.pi * rng.random())
    num = np.zeros(order + 1, dtype=complex)
    num[0], num[1] = c, t
    den = np.zeros(order + 1, dtype=complex)
    den[0], den[1] = 1.0, np.conj(c) * t
    return TruncatedSeries(num).mul(
        TruncatedSeries(den).reciprocal(order), order
    )
