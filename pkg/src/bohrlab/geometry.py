"""Hyperbolic density of covering maps and boundary-distance estimation.

A covering parameterization G of a hyperbolic domain induces the density
lambda(G(z)) = 1 / (|G'(z)| (1 - |z|^2)); together with the distance to the
domain boundary it satisfies lambda(w) d(w, boundary) <= 1, which is the
right-hand-side machinery of the main inequality check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, SingularDerivative
from .generators import LargeFunctionSpec
from .modular import q_deriv, q_eval


@dataclass(frozen=True)
class Cover:
    """A covering map given by pointwise value and derivative evaluators,
    plus the distance from an image point to the domain boundary."""

    value: Callable
    deriv: Callable
    boundary_dist: Callable
    label: str = ""


def disk_identity_cover() -> Cover:
    return Cover(lambda z: z, lambda z: np.ones_like(np.asarray(z, complex)),
                 lambda w: 1.0 - abs(w), "identity on the disk")


def q_cover(alpha) -> Cover:
    """Q_alpha as a cover of the twice-punctured plane C \\ {0, 1}."""
    return Cover(lambda z: q_eval(alpha, z), lambda z: q_deriv(alpha, z),
                 lambda w: min(abs(w), abs(w - 1.0)), "Q cover")


def spec_cover(spec: LargeFunctionSpec) -> Cover:
    """A large-function spec viewed as a parameterization of its image."""
    return Cover(spec.eval, spec.deriv,
                 lambda w: min(abs(w - spec.a), abs(w - spec.b)),
                 spec.text())


def hyperbolic_density(cover: Cover, z) -> float:
    """1 / (|G'(z)| (1 - |z|^2)) at a point of the disk."""
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("density is defined for |z| < 1")
    d = abs(complex(cover.deriv(z)))
    if d < 1e-300:
        raise SingularDerivative("covering derivative vanished at %r" % z)
    return 1.0 / (d * (1.0 - abs(z) ** 2))


@dataclass(frozen=True)
class DistanceEstimate:
    """One-sided distance estimate: true distance in [value - error, value]."""

    value: float
    error: float
    method: str

    def __post_init__(self):
        if self.value < 0 or self.error < 0:
            raise ValueError("distance and error must be nonnegative")


def boundary_distance(
    spec: LargeFunctionSpec,
    nodes: int = 4096,
    levels: range = range(4, 15),
) -> DistanceEstimate:
    """Distance from F(0) to the boundary of the image of F.

    When the inner Schwarz factor is a finite Blaschke product the image is
    the whole plane minus the two omitted points and the distance is exact.
    Otherwise the image boundary is sampled through circles |z| = 1 - 2^-k;
    the reported error is the spread over the last three refinement levels.
    The sampled minimum can only undershoot the true distance (the image of
    the near-boundary circle contains the image boundary in the limit), so
    a passing inequality check is conservative.
    """
    f0 = spec.f0
    omitted = min(abs(f0 - spec.a), abs(f0 - spec.b))
    if spec.phi.is_inner:
        return DistanceEstimate(omitted, 0.0, "omitted-points-exact")
    theta = 2 * np.pi * np.arange(nodes) / nodes
    ring = np.exp(1j * theta)
    # Per-level minima: only the finest circle approximates the image
    # boundary (coarser circles are interior curves and would undershoot).
    history = []
    for k in levels:
        r = 1.0 - 2.0 ** (-k)
        vals = spec.eval(r * ring)
        history.append(float(np.abs(vals - f0).min()))
    value = min(omitted, history[-1])
    spread = max(history[-3:]) - min(history[-3:])
    return DistanceEstimate(value, spread, "circle-sampling")


def density_distance_products(cover: Cover, points) -> np.ndarray:
    """lambda(G(z)) * d(G(z), boundary) for each sample point."""
    out = []
    for z in np.atleast_1d(np.asarray(points, dtype=complex)):
        lam = hyperbolic_density(cover, z)
        w = complex(cover.value(complex(z)))
        out.append(lam * cover.boundary_dist(w))
    return np.array(out)


def density_distance_check(
    cover: Cover, points, tol: float = 1e-6
) -> dict:
    """Assert lambda * distance <= 1 at every sample point."""
    products = density_distance_products(cover, points)
    worst = float(products.max(initial=0.0))
    return {
        "check": "density-distance",
        "lhs": worst,
        "rhs": 1.0,
        "slack": tol,
        "pass": bool(worst <= 1.0 + tol),
        "points": int(products.size),
    }


def delta_diagnostic(spec: LargeFunctionSpec, radius: float = 0.9,
                     nodes: int = 512) -> float:
    """Coarse estimate of dist(0, boundary of the image of z (F-a)/(b-a)).

    Diagnostic only; sampled on a single interior circle.
    """
    a_near, b_far = spec.a, spec.b
    f0 = spec.f0
    if abs(f0 - spec.b) < abs(f0 - spec.a):
        a_near, b_far = spec.b, spec.a
    theta = 2 * np.pi * np.arange(nodes) / nodes
    z = radius * np.exp(1j * theta)
    h = z * (spec.eval(z) - a_near) / (b_far - a_near)
    return float(np.abs(h).min())
