"""Bohr-type bound for harmonic maps f = h + conj(g).

The analytic part h omits two values; the co-analytic part is produced from
a dilatation mu through g' = mu h', g(0) = 0.  The verified estimate is

    M(h - h(0))(r) + M(g)(r) <= (1 + sup_{|z|<=r} |mu|) d(h(0), boundary)

for r up to e^{-pi}.  The sup-of-mu reading is used for the right-hand side
(a pointwise |mu(z)| does not give a single number); |mu(r)| on the positive
axis is logged alongside.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .bohr import BASE_SLACK, InequalityCheck, bohr_operator, cauchy_tail_bound
from .errors import HypothesisViolation
from .generators import LargeFunctionSpec
from .geometry import boundary_distance
from .modular import E_PI
from .series import TruncatedSeries


@dataclass(frozen=True)
class HarmonicPair:
    """h + conj(g) with g integrated from the dilatation."""

    spec: LargeFunctionSpec
    h: TruncatedSeries
    g: TruncatedSeries
    mu: TruncatedSeries

    def __post_init__(self):
        if self.g[0] != 0:
            raise ValueError("g must vanish at 0")


def build_pair(spec: LargeFunctionSpec, mu: TruncatedSeries,
               order: int | None = None) -> HarmonicPair:
    """g = integral of mu h' with g(0) = 0."""
    if order is None:
        order = spec.order
    h = spec.series.truncated(order)
    gprime = mu.mul(h.differentiate(), order - 1)
    return HarmonicPair(spec, h, gprime.integrate(), mu)


def _sup_on_circle(f: TruncatedSeries, r: float, nodes: int = 1024) -> float:
    theta = 2 * np.pi * np.arange(nodes) / nodes
    return float(np.abs(f.eval(r * np.exp(1j * theta))).max())


def _g_tail_bound(pair: HarmonicPair, r: float, rho: float = 0.3) -> float:
    """Tail of M(g) past the stored order.

    mu is an exact polynomial, so tail error in g comes from the tail of h:
    |(mu h')_m| <= sup|mu| sum_{j<=m} (j+1) M_rho / rho^{j+1}, integrated
    termwise.  The resulting majorant decays like (r/rho)^n and the finite
    sum below overshoots the true tail.
    """
    order = pair.g.order
    theta = 2 * np.pi * np.arange(1024) / 1024
    m_rho = float(np.abs(pair.spec.eval(rho * np.exp(1j * theta))).max())
    m_rho *= 1.01
    sup_mu = _sup_on_circle(pair.mu, 0.999)
    n = np.arange(order + 1, order + 200)
    terms = (n + 1.0) ** 2 / (1.0 - rho) * m_rho * (r / rho) ** n
    return float(sup_mu * terms.sum())


def harmonic_bohr_check(pair: HarmonicPair, r: float = E_PI
                        ) -> InequalityCheck:
    """Verify the (1 + sup|mu|) boundary-distance bound."""
    if r > E_PI * (1.0 + 1e-12):
        raise HypothesisViolation("the bound is asserted for r <= e^-pi")
    h, g = pair.h, pair.g
    a0 = h[0]
    mh = bohr_operator(h, r, from_degree=1)
    mg = bohr_operator(g, r, from_degree=1)
    tail_h = cauchy_tail_bound(pair.spec.eval, 0.3, h.order, r) if r > 0 \
        else 0.0
    tail_g = _g_tail_bound(pair, r) if r > 0 else 0.0
    sup_mu = _sup_on_circle(pair.mu, r) if r > 0 else abs(pair.mu[0])
    dist = boundary_distance(pair.spec)
    lhs = mh + mg + tail_h + tail_g
    rhs = (1.0 + sup_mu) * dist.value
    slack = (1.0 + sup_mu) * dist.error + BASE_SLACK
    return InequalityCheck(
        "harmonic-bohr", lhs, rhs, slack, bool(lhs <= rhs + slack),
        {
            "analytic_majorant": mh,
            "coanalytic_majorant": mg,
            "sup_mu": sup_mu,
            "mu_on_axis": abs(complex(pair.mu.eval(r))),
            "with_a0": mh + mg + abs(a0),
            "distance": dist.value,
        },
    )


def mg_integral_identity_check(pair: HarmonicPair, r: float,
                               tol: float = 1e-9) -> InequalityCheck:
    """M(g)(r) equals the integral of M(g') from 0 to r.

    Termwise: integrating |g_n| n t^{n-1} reproduces |g_n| r^n.  Also checks
    M(g) <= M(h) - |a_0| whenever sup|mu| <= 1.
    """
    g = pair.g
    gp_mags = np.abs(g.differentiate().coeffs)

    def m_gprime(t):
        return float(np.dot(gp_mags, t ** np.arange(gp_mags.size)))

    integral, quad_err = integrate.quad(m_gprime, 0.0, r,
                                        epsabs=1e-12, limit=200)
    direct = bohr_operator(g, r, from_degree=1)
    gap = abs(integral - direct)
    passed = gap <= tol + quad_err
    extra = {"integral": integral, "direct": direct, "quad_error": quad_err}
    sup_mu = _sup_on_circle(pair.mu, 0.999)
    if sup_mu <= 1.0 + 1e-12:
        mh_shifted = bohr_operator(pair.h, r, from_degree=1)
        extra["domination_margin"] = mh_shifted - direct
        passed = passed and direct <= mh_shifted + BASE_SLACK
    return InequalityCheck("mg-integral-identity", gap, 0.0, tol,
                           bool(passed), extra)
