"""Public-sentiment measures and Monte Carlo summaries.

Six canonical measures aggregate a (negative, neutral, positive)
probability vector into one number. :func:`summarize` evaluates a measure
over a batch of posterior draws and reports the mean, median, an
equal-tailed credible interval, a histogram and the sample skewness.

Applications that need a different aggregation can pass a
:class:`CustomMeasure` anywhere a :class:`MeasureKind` is accepted.
"""

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .core import ProbVector, category_index, marginal_beta
from .errors import SummaryUnavailableError, UnsupportedDimensionError, ValidationError
from .special import beta_ppf

__all__ = [
    "MeasureKind",
    "CustomMeasure",
    "MeasureSummary",
    "AnalyticInterval",
    "DEFAULT_CI_MASS",
    "DEFAULT_BINS",
    "measure_kind",
    "evaluate",
    "evaluate_array",
    "summarize",
    "credible_interval_beta",
    "analytic_interval",
]

DEFAULT_CI_MASS = 0.95
DEFAULT_BINS = 50

NEG, NEU, POS = 0, 1, 2


class MeasureKind(enum.Enum):
    """The canonical measures with their (lower, upper) value bounds."""

    NET_SENTIMENT = ("net", -1.0, 1.0)
    SCALED_NET_SENTIMENT = ("scaled", 0.0, 100.0)
    POSITIVE_SENTIMENT_PROBABILITY = ("psp", 0.0, 1.0)
    NEGATIVE_SENTIMENT_PROBABILITY = ("nsp", 0.0, 1.0)
    POSITIVE_TO_POLARITY_RATIO = ("p2pol", 0.0, 1.0)
    POSITIVE_TO_NEGATIVE_RATIO = ("p2n", 0.0, math.inf)

    def __init__(self, code, lower, upper):
        self.code = code
        self.lower = lower
        self.upper = upper

    @property
    def name_camel(self):
        return "".join(part.capitalize() for part in self.name.split("_"))

    @property
    def heavy_tailed(self):
        # mean of theta3/theta1 is infinite whenever alpha1 <= 1
        return self is MeasureKind.POSITIVE_TO_NEGATIVE_RATIO

    @property
    def marginal_index(self):
        """Category whose marginal this measure is, or None."""
        if self is MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY:
            return NEG
        if self is MeasureKind.POSITIVE_SENTIMENT_PROBABILITY:
            return POS
        return None

    def evaluate_array(self, theta):
        t1, t3 = theta[:, NEG], theta[:, POS]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self is MeasureKind.NET_SENTIMENT:
                return t3 - t1
            if self is MeasureKind.SCALED_NET_SENTIMENT:
                return 100.0 * ((t3 - t1) / 2.0 + 0.5)
            if self is MeasureKind.POSITIVE_SENTIMENT_PROBABILITY:
                return t3.copy()
            if self is MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY:
                return t1.copy()
            if self is MeasureKind.POSITIVE_TO_POLARITY_RATIO:
                polar = t1 + t3
                return np.where(polar > 0.0, t3 / polar, np.nan)
            return np.where(t1 > 0.0, t3 / t1, np.inf)


_ALIASES = {}
for _kind in MeasureKind:
    for _alias in (_kind.code, _kind.name, _kind.name_camel):
        _ALIASES[_alias.lower()] = _kind
_ALIASES.update(
    {
        "scaled-net": MeasureKind.SCALED_NET_SENTIMENT,
        "scaled_net": MeasureKind.SCALED_NET_SENTIMENT,
        "polarity": MeasureKind.POSITIVE_TO_POLARITY_RATIO,
    }
)


def measure_kind(name):
    """Look up a measure by short code (``nsp``), enum name or CamelCase name."""
    if isinstance(name, MeasureKind):
        return name
    try:
        return _ALIASES[str(name).strip().lower()]
    except KeyError:
        codes = ", ".join(k.code for k in MeasureKind)
        raise ValidationError(f"unknown measure {name!r}; choose from {codes}") from None


@dataclass(frozen=True)
class CustomMeasure:
    """An application-defined measure.

    ``func`` maps an ``(n, 3)`` array of probability vectors to ``n``
    values; non-finite outputs are treated like the canonical measures'
    undefined values.
    """

    name: str
    func: Callable
    lower: float = -math.inf
    upper: float = math.inf
    heavy_tailed: bool = False

    @property
    def code(self):
        return self.name

    @property
    def marginal_index(self):
        return None

    def evaluate_array(self, theta):
        return np.asarray(self.func(theta), dtype=float)


def _theta_matrix(points):
    theta = np.asarray(points, dtype=float)
    if theta.ndim == 1:
        theta = theta[None, :]
    if theta.shape[1] != 3:
        raise UnsupportedDimensionError(
            f"sentiment measures need K=3 (negative, neutral, positive), got K={theta.shape[1]}"
        )
    return theta


def evaluate(kind, point):
    """Value of a measure at a single probability vector.

    Undefined values come back as ``nan`` (polarity ratio with no polar
    mass) or ``inf`` (positive-to-negative ratio with zero negative mass).
    """
    if isinstance(point, ProbVector):
        point = point.theta
    return float(evaluate_array(kind, _theta_matrix(point))[0])


def evaluate_array(kind, theta):
    """Vectorized :func:`evaluate` over the rows of an ``(n, 3)`` array."""
    kind = measure_kind(kind) if isinstance(kind, str) else kind
    return kind.evaluate_array(_theta_matrix(theta))


@dataclass(frozen=True)
class MeasureSummary:
    """Summary of one measure over one batch of draws.

    ``histogram`` is a tuple of ``(bin_lower, bin_upper, count)``; for
    unbounded measures the final bin is an overflow bin reaching to
    ``inf``. ``unstable_mean`` marks means that should not be reported as
    a headline figure.
    """

    kind: object
    mean: float
    median: float
    ci_low: float
    ci_high: float
    ci_mass: float
    histogram: tuple
    skewness: float
    unstable_mean: bool
    n_samples: int
    n_finite: int

    def as_dict(self):
        return {
            "measure": self.kind.code,
            "mean": self.mean,
            "median": self.median,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "ci_mass": self.ci_mass,
            "skewness": self.skewness,
            "unstable_mean": self.unstable_mean,
            "n_samples": self.n_samples,
            "n_finite": self.n_finite,
            "histogram": [list(b) for b in self.histogram],
        }


def _skewness(x):
    if np.ptp(x) == 0.0:
        return 0.0
    centered = x - x.mean()
    m2 = np.mean(centered**2)
    return float(np.mean(centered**3) / m2**1.5)


def _histogram(values, lower, upper, bins):
    lo = lower if math.isfinite(lower) else float(np.quantile(values, 0.01))
    hi = upper if math.isfinite(upper) else float(np.quantile(values, 0.99))
    if hi <= lo:
        hi = lo + 1.0
    inside = values[(values >= lo) & (values <= hi)]
    counts, edges = np.histogram(inside, bins=bins, range=(lo, hi))
    table = [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(bins)]
    if not math.isfinite(lower):
        table.insert(0, (-math.inf, lo, int(np.count_nonzero(values < lo))))
    if not math.isfinite(upper):
        table.append((hi, math.inf, int(np.count_nonzero(values > hi))))
    return tuple(table)


def summarize(kind, batch, ci_mass=DEFAULT_CI_MASS, bins=DEFAULT_BINS):
    """Summarize a measure over a batch of probability vectors.

    ``batch`` is a :class:`~pubsent.sampler.SampleBatch` or an ``(n, 3)``
    array. The credible interval takes the empirical quantiles at
    ``(1 - ci_mass) / 2`` and ``1 - (1 - ci_mass) / 2`` with linear
    interpolation between order statistics. Mean, quantiles, histogram and
    skewness use the finite values only; any non-finite value, or a
    heavy-tailed measure, sets ``unstable_mean``.
    """
    kind = measure_kind(kind) if isinstance(kind, str) else kind
    if not 0.0 < ci_mass < 1.0:
        raise ValidationError(f"ci_mass must lie strictly between 0 and 1, got {ci_mass}")
    bins = int(bins)
    if bins < 1:
        raise ValidationError(f"bins must be positive, got {bins}")
    theta = getattr(batch, "draws", batch)
    values = evaluate_array(kind, theta)
    if values.size == 0:
        raise ValidationError("cannot summarize an empty batch")
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        raise SummaryUnavailableError(f"{kind.code}: no finite values among {values.size} draws")
    # clamp rounding spill (e.g. 100.00000000000001) back into the declared range
    if math.isfinite(kind.lower) or math.isfinite(kind.upper):
        finite = np.clip(finite, kind.lower, kind.upper)
    tail = (1.0 - ci_mass) / 2.0
    lo, med, hi = np.quantile(finite, [tail, 0.5, 1.0 - tail])
    return MeasureSummary(
        kind=kind,
        mean=float(np.mean(finite)),
        median=float(med),
        ci_low=float(lo),
        ci_high=float(hi),
        ci_mass=float(ci_mass),
        histogram=_histogram(finite, kind.lower, kind.upper, bins),
        skewness=_skewness(finite),
        unstable_mean=bool(finite.size < values.size or kind.heavy_tailed),
        n_samples=int(values.size),
        n_finite=int(finite.size),
    )


def credible_interval_beta(params, index, ci_mass=DEFAULT_CI_MASS):
    """Equal-tailed interval for one component from its exact Beta marginal."""
    if not 0.0 < ci_mass < 1.0:
        raise ValidationError(f"ci_mass must lie strictly between 0 and 1, got {ci_mass}")
    a, b = marginal_beta(params, index)
    tail = (1.0 - ci_mass) / 2.0
    return beta_ppf(tail, a, b), beta_ppf(1.0 - tail, a, b)


class AnalyticInterval(NamedTuple):
    mean: float
    ci_low: float
    ci_high: float


def analytic_interval(params, index, ci_mass=DEFAULT_CI_MASS):
    """Closed-form mean and Beta-quantile interval for one component."""
    i = category_index(params, index)
    a, b = marginal_beta(params, i)
    lo, hi = credible_interval_beta(params, i, ci_mass)
    return AnalyticInterval(a / (a + b), lo, hi)
