"""Maximum-likelihood fitting of the power-law rate from record data."""

from dataclasses import dataclass

import numpy as np

from .errors import DataValidationError, InsufficientDataError
from .model import PowerLawRate, log_likelihood

__all__ = ["RecordSequence", "FittedModel", "fit_mle", "sequential_fits"]


@dataclass(frozen=True)
class RecordSequence:
    """A strictly increasing sequence of positive defect positions.

    Positions are stored as a plain tuple of floats. Validation happens
    at construction so downstream code can assume a clean sequence.
    """

    positions: tuple
    label: str = ""

    def __post_init__(self):
        pos = tuple(float(x) for x in self.positions)
        object.__setattr__(self, "positions", pos)
        if len(pos) == 0:
            raise DataValidationError("record sequence is empty", code="empty")
        bad = [i for i, x in enumerate(pos) if not np.isfinite(x) or x <= 0]
        if bad:
            raise DataValidationError(
                "positions must be positive and finite; offending indices %s" % bad,
                code="nonpositive",
                row=bad[0] + 1,
            )
        nondec = [i for i in range(1, len(pos)) if pos[i] <= pos[i - 1]]
        if nondec:
            raise DataValidationError(
                "positions must be strictly increasing; "
                "violations at indices %s (0-based, comparing with the previous entry)" % nondec,
                code="not-increasing",
                row=nondec[0] + 1,
            )

    def __len__(self):
        return len(self.positions)

    def as_array(self):
        return np.asarray(self.positions, dtype=float)

    def prefix(self, m):
        """First m records as a new sequence."""
        if not 1 <= m <= len(self.positions):
            raise ValueError("prefix length must be in [1, %d], got %d" % (len(self.positions), m))
        return RecordSequence(self.positions[:m], label=self.label)


@dataclass(frozen=True)
class FittedModel:
    """MLE fit of a record prefix: the rate plus fit bookkeeping."""

    rate: PowerLawRate
    m: int
    r_m: float
    log_likelihood: float

    @property
    def alpha(self):
        return self.rate.alpha

    @property
    def beta(self):
        return self.rate.beta


def fit_mle(records):
    """Closed-form maximum-likelihood fit.

    alpha_hat = m / sum_{i<m} log(r_m / r_i), beta_hat = m / r_m**alpha_hat.
    The denominator form avoids the cancellation in
    m*log(r_m) - sum(log r_i) when the positions span several decades.
    beta_hat makes the fitted cumulative rate hit m exactly at r_m.

    Parameters
    ----------
    records : RecordSequence

    Returns
    -------
    FittedModel

    Raises
    ------
    InsufficientDataError
        With fewer than two records the likelihood has no interior
        maximum.
    """
    pos = records.as_array()
    m = pos.size
    if m < 2:
        raise InsufficientDataError("fit needs at least 2 records, got %d" % m)
    denom = float(np.sum(np.log(pos[-1] / pos[:-1])))
    alpha = m / denom
    beta = m / np.exp(alpha * np.log(pos[-1]))
    rate = PowerLawRate(alpha, float(beta))
    return FittedModel(
        rate=rate,
        m=m,
        r_m=float(pos[-1]),
        log_likelihood=log_likelihood(rate, pos),
    )


def sequential_fits(records):
    """Fits of every prefix r_1..r_k for k = 2 .. m, in order.

    Useful for watching parameter stabilization as the survey extends;
    fits are independent, nothing is warm-started.
    """
    m = len(records)
    if m < 2:
        raise InsufficientDataError("sequential fits need at least 2 records, got %d" % m)
    return [fit_mle(records.prefix(k)) for k in range(2, m + 1)]
