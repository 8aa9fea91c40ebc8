"""Power-law event-rate model.

The cumulative rate is Lambda(t) = beta * t**alpha and the local rate
is its derivative lambda(t) = alpha * beta * t**(alpha - 1). Successive
defect positions along a line are modelled as the arrival times of a
non-homogeneous Poisson process with this rate, which is equivalent to
treating them as upper record values of an i.i.d. sequence whose hazard
integrates to Lambda.

Note on units: beta is not a plain rate. Its dimension is
events / (length ** alpha), so fitted beta values are comparable only
between models sharing the same alpha.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PowerLawRate",
    "intensity_at",
    "cumulative_intensity",
    "inverse_cumulative_intensity",
    "survival",
    "event_density",
    "log_likelihood",
]


@dataclass(frozen=True)
class PowerLawRate:
    """Parameter pair (alpha, beta), both strictly positive.

    alpha > 1 means defects arrive increasingly often with distance
    (deterioration), alpha < 1 the reverse, alpha = 1 a plain Poisson
    process of rate beta.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > 0):
            raise ValueError("alpha must be a positive finite number, got %r" % (self.alpha,))
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise ValueError("beta must be a positive finite number, got %r" % (self.beta,))


def _power(t, p):
    """t ** p on a nonnegative float array via exp(p * log t).

    The t == 0 entries are handled explicitly: 0**0 = 1 and 0**p = 0 for
    p > 0. Callers must rule out t == 0 with p < 0 beforehand.
    """
    if p == 0:
        return np.ones_like(t)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(p * np.log(t[pos]))
    return out


def _positions(t, name="t"):
    arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(~np.isfinite(arr)) or np.any(arr < 0):
        raise ValueError("%s must be finite and nonnegative" % name)
    return arr


def _unwrap(out, t):
    return float(out[0]) if np.ndim(t) == 0 else out


def intensity_at(rate, t):
    """Local event rate lambda(t) = alpha * beta * t**(alpha - 1).

    Parameters
    ----------
    rate : PowerLawRate
    t : float or array_like
        Nonnegative position(s). t = 0 is rejected when alpha < 1
        because the rate diverges there.
    """
    t_arr = _positions(t)
    if rate.alpha < 1 and np.any(t_arr == 0):
        raise ValueError("intensity diverges at t = 0 for alpha < 1")
    out = rate.alpha * rate.beta * _power(t_arr, rate.alpha - 1.0)
    return _unwrap(out, t)


def cumulative_intensity(rate, t):
    """Expected event count on [0, t], Lambda(t) = beta * t**alpha."""
    t_arr = _positions(t)
    out = rate.beta * _power(t_arr, rate.alpha)
    return _unwrap(out, t)


def inverse_cumulative_intensity(rate, w):
    """Position at which the expected count reaches w.

    Solves Lambda(t) = w in closed form, t = (w / beta)**(1 / alpha).
    Inverse of ``cumulative_intensity`` on w >= 0.
    """
    w_arr = _positions(w, name="w")
    out = _power(w_arr / rate.beta, 1.0 / rate.alpha)
    return _unwrap(out, w)


def survival(rate, t):
    """P(no event in [0, t]) = exp(-Lambda(t)).

    Under the record-value reading this is one minus the underlying
    i.i.d. distribution function.
    """
    t_arr = _positions(t)
    out = np.exp(-rate.beta * _power(t_arr, rate.alpha))
    return _unwrap(out, t)


def event_density(rate, t):
    """Density of the first event position, lambda(t) * exp(-Lambda(t)).

    Same domain rules as ``intensity_at``: t = 0 is rejected when
    alpha < 1.
    """
    t_arr = _positions(t)
    if rate.alpha < 1 and np.any(t_arr == 0):
        raise ValueError("density diverges at t = 0 for alpha < 1")
    lam = rate.alpha * rate.beta * _power(t_arr, rate.alpha - 1.0)
    out = lam * np.exp(-rate.beta * _power(t_arr, rate.alpha))
    return _unwrap(out, t)


def log_likelihood(rate, records):
    """Exact log-likelihood of an ordered record prefix.

    For records r_1 < ... < r_m the joint density gives

        m * log(alpha * beta) + (alpha - 1) * sum(log r_i) - Lambda(r_m).

    Parameters
    ----------
    rate : PowerLawRate
    records : RecordSequence or array_like
        The observed positions; every value must be positive.
    """
    pos = np.asarray(getattr(records, "positions", records), dtype=float)
    if pos.size == 0:
        raise ValueError("log_likelihood needs at least one record")
    if np.any(pos <= 0):
        raise ValueError("record positions must be strictly positive")
    r_m = float(np.max(pos))
    return float(
        pos.size * np.log(rate.alpha * rate.beta)
        + (rate.alpha - 1.0) * np.sum(np.log(pos))
        - rate.beta * np.exp(rate.alpha * np.log(r_m))
    )
