"""Numeric kernels: gamma-family special functions, gamma-weighted
quadrature on the half line, and bracketed root finding.

Everything downstream of the fitted model reduces to integrals of the
form E[g(W)] with W ~ Gamma(k, 1), so the quadrature routine here is
the single place where prediction accuracy is controlled.
"""

from dataclasses import dataclass

import numpy as np
from scipy import optimize, special

from .errors import NumericError

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "QuadratureResult",
    "log_gamma",
    "gamma_cdf",
    "gamma_quantile",
    "fixed_order_expectation",
    "expectation_semi_infinite",
    "find_root_bracketed",
]


@dataclass(frozen=True)
class Tolerances:
    """Convergence policy for the escalating quadrature loop.

    Successive estimates must agree to ``rel`` in relative terms or
    ``abs`` absolutely, whichever is looser at the current magnitude.
    """

    rel: float = 1e-8
    abs: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()

# Escalation ladder for expectation_semi_infinite. Generalized
# Gauss-Laguerre converges geometrically for the smooth integrands
# produced by the forecast module, so a short ladder suffices.
_ORDERS = (16, 32, 64, 128, 256, 384)


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive quadrature run.

    Attributes
    ----------
    value : float
        The converged estimate.
    error_estimate : float
        Absolute difference between the last two estimates.
    evaluations : int
        Total number of integrand evaluations across all orders tried.
    converged : bool
        Whether the tolerance test was met before the ladder ran out.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def log_gamma(a):
    """Natural log of the gamma function for a > 0."""
    a_arr = np.atleast_1d(np.asarray(a, dtype=float))
    if np.any(a_arr <= 0):
        raise ValueError("log_gamma requires a > 0, got %r" % (a,))
    out = special.gammaln(a_arr)
    return float(out[0]) if np.ndim(a) == 0 else out


def gamma_cdf(k, x):
    """Lower regularized incomplete gamma P(k, x), the CDF of Gamma(k, 1).

    Parameters
    ----------
    k : float
        Shape parameter, k > 0.
    x : float or array_like
        Evaluation point(s), x >= 0.
    """
    if k <= 0:
        raise ValueError("shape must be positive, got %g" % k)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 0):
        raise ValueError("gamma_cdf requires x >= 0")
    out = special.gammainc(k, x_arr)
    return float(out[0]) if np.ndim(x) == 0 else out


def gamma_quantile(k, p):
    """Inverse of ``gamma_cdf`` in its second argument.

    Accepts p in [0, 1); p = 0 maps to 0.
    """
    if k <= 0:
        raise ValueError("shape must be positive, got %g" % k)
    p_arr = np.atleast_1d(np.asarray(p, dtype=float))
    if np.any((p_arr < 0) | (p_arr >= 1)):
        raise ValueError("gamma_quantile requires 0 <= p < 1")
    out = special.gammaincinv(k, p_arr)
    return float(out[0]) if np.ndim(p) == 0 else out


def _eval_vectorized(integrand, nodes):
    vals = np.asarray(integrand(nodes), dtype=float)
    if vals.shape != nodes.shape:
        # Scalar-only integrand; fall back to a point loop.
        vals = np.array([float(integrand(w)) for w in nodes])
    return vals


def fixed_order_expectation(integrand, shape, order):
    """E[g(W)] for W ~ Gamma(shape, 1) by one generalized Gauss-Laguerre rule.

    The weight w^(shape-1) e^(-w) is absorbed by the rule, so the rule of
    order n is exact whenever g is a polynomial of degree <= 2n - 1. The
    node weights are normalized by Gamma(shape) to make the rule an
    expectation rather than a bare integral.
    """
    if shape <= 0:
        raise ValueError("shape must be positive, got %g" % shape)
    nodes, weights = special.roots_genlaguerre(order, shape - 1.0)
    vals = _eval_vectorized(integrand, nodes)
    return float(np.sum(weights * vals)) / np.exp(log_gamma(shape))


def expectation_semi_infinite(integrand, shape, tolerances=DEFAULT_TOLERANCES):
    """E[g(W)] for W ~ Gamma(shape, 1), with automatic order escalation.

    Runs ``fixed_order_expectation`` on an increasing ladder of orders
    and stops when two successive estimates agree to ``tolerances``.

    Parameters
    ----------
    integrand : callable
        g, evaluated on an ndarray of nodes (scalar-only callables are
        accepted but slower).
    shape : float
        Gamma shape parameter k > 0.
    tolerances : Tolerances, optional

    Returns
    -------
    QuadratureResult

    Raises
    ------
    NumericError
        If the ladder is exhausted without meeting the tolerance. The
        exception carries the last two estimates.
    """
    previous = None
    evaluations = 0
    for order in _ORDERS:
        estimate = fixed_order_expectation(integrand, shape, order)
        evaluations += order
        if previous is not None:
            gap = abs(estimate - previous)
            if gap <= max(tolerances.rel * abs(estimate), tolerances.abs):
                return QuadratureResult(
                    value=estimate,
                    error_estimate=gap,
                    evaluations=evaluations,
                    converged=True,
                )
        previous = estimate
    raise NumericError(
        "gamma-weighted quadrature did not converge (last gap %.3e)" % abs(estimate - previous),
        last_estimate=estimate,
        previous_estimate=previous,
    )


def find_root_bracketed(func, lo, hi, rtol=1e-12):
    """Root of a continuous scalar function on a sign-changing bracket.

    Thin safeguarded wrapper around Brent's method; the returned root
    always lies inside [lo, hi].
    """
    if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
        raise ValueError("bracket must be finite with lo < hi, got [%r, %r]" % (lo, hi))
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0.0:
        return float(lo)
    if f_hi == 0.0:
        return float(hi)
    if np.sign(f_lo) == np.sign(f_hi):
        raise ValueError(
            "bracket does not straddle a root: f(%g)=%g, f(%g)=%g" % (lo, f_lo, hi, f_hi)
        )
    return float(optimize.brentq(func, lo, hi, rtol=rtol))
