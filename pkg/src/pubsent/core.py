"""Dirichlet prior, multinomial likelihood and their conjugate update.

All densities are evaluated in log space; count totals in the hundreds
overflow Gamma in linear space.
"""

import math
import operator
from dataclasses import dataclass, field

from .errors import DimensionError, ValidationError
from .special import log_gamma, log_multivariate_beta

__all__ = [
    "DEFAULT_LABELS",
    "ALPHA_FLOOR",
    "SIMPLEX_TOL",
    "DirichletParams",
    "SentimentCounts",
    "ProbVector",
    "posterior_update",
    "log_density",
    "log_likelihood",
    "log_evidence",
    "mean",
    "marginal_beta",
    "category_index",
]

DEFAULT_LABELS = ("negative", "neutral", "positive")
ALPHA_FLOOR = 1e-12
SIMPLEX_TOL = 1e-12


def _default_labels(k):
    if k == 3:
        return DEFAULT_LABELS
    return tuple(f"category_{i + 1}" for i in range(k))


@dataclass(frozen=True)
class DirichletParams:
    """Shape parameters of a Dirichlet distribution over K categories.

    Parameters
    ----------
    alpha : sequence of float
        Shape parameters, each at least ``ALPHA_FLOOR``.
    labels : sequence of str, optional
        Category names. Defaults to ``("negative", "neutral", "positive")``
        when K is 3.
    """

    alpha: tuple
    labels: tuple = field(default=None)

    def __post_init__(self):
        try:
            alpha = tuple(float(a) for a in self.alpha)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"shape parameters must be real numbers: {exc}") from None
        if len(alpha) < 2:
            raise ValidationError(f"need at least 2 categories, got {len(alpha)}")
        for a in alpha:
            if not math.isfinite(a) or a < ALPHA_FLOOR:
                raise ValidationError(f"shape parameters must be finite and > 0, got {a!r}")
        labels = _default_labels(len(alpha)) if self.labels is None else tuple(self.labels)
        if len(labels) != len(alpha):
            raise ValidationError(f"{len(labels)} labels for {len(alpha)} categories")
        if len(set(labels)) != len(labels):
            raise ValidationError(f"category labels must be unique: {labels}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "labels", labels)

    @property
    def k(self):
        return len(self.alpha)

    @property
    def concentration(self):
        """Sum of the shape parameters."""
        return math.fsum(self.alpha)

    def __str__(self):
        return "Dir(" + ", ".join(_fmt_shape(a) for a in self.alpha) + ")"


def _fmt_shape(a):
    return str(int(a)) if a.is_integer() and abs(a) < 2**53 else repr(a)


@dataclass(frozen=True)
class SentimentCounts:
    """Observed category counts for one sample window."""

    counts: tuple

    def __post_init__(self):
        counts = []
        for c in self.counts:
            if isinstance(c, bool):
                raise ValidationError("counts must be integers, got a boolean")
            if isinstance(c, float):
                if not c.is_integer():
                    raise ValidationError(f"counts must be integers, got {c!r}")
                c = int(c)
            try:
                c = operator.index(c)
            except TypeError:
                raise ValidationError(f"counts must be integers, got {c!r}") from None
            if c < 0:
                raise ValidationError(f"counts must be non-negative, got {c}")
            counts.append(c)
        if not counts:
            raise ValidationError("counts must not be empty")
        object.__setattr__(self, "counts", tuple(counts))

    @property
    def k(self):
        return len(self.counts)

    @property
    def n(self):
        return sum(self.counts)

    def __add__(self, other):
        if not isinstance(other, SentimentCounts):
            return NotImplemented
        _check_dims(self.k, other.k)
        return SentimentCounts(tuple(a + b for a, b in zip(self.counts, other.counts)))


@dataclass(frozen=True)
class ProbVector:
    """A point on the probability simplex."""

    theta: tuple

    def __post_init__(self):
        try:
            theta = tuple(float(t) for t in self.theta)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"probabilities must be real numbers: {exc}") from None
        if len(theta) < 2:
            raise ValidationError("a probability vector needs at least 2 components")
        if any(not (0.0 <= t <= 1.0) for t in theta):
            raise ValidationError(f"probabilities must lie in [0, 1]: {theta}")
        if abs(math.fsum(theta) - 1.0) > SIMPLEX_TOL:
            raise ValidationError(f"probabilities must sum to 1, got {math.fsum(theta)!r}")
        object.__setattr__(self, "theta", theta)

    @property
    def k(self):
        return len(self.theta)


def _check_dims(k1, k2):
    if k1 != k2:
        raise DimensionError(f"dimension mismatch: {k1} vs {k2} categories")


def _as_point(point):
    return point if isinstance(point, ProbVector) else ProbVector(tuple(point))


def category_index(params, index):
    """Resolve a category given as an integer position or a label."""
    if isinstance(index, str):
        try:
            return params.labels.index(index)
        except ValueError:
            raise ValidationError(f"unknown category {index!r}; have {params.labels}") from None
    i = operator.index(index)
    if not 0 <= i < params.k:
        raise ValidationError(f"category index {i} out of range for K={params.k}")
    return i


def posterior_update(prior, obs):
    """Conjugate update: Dir(alpha) with counts x gives Dir(alpha + x)."""
    _check_dims(prior.k, obs.k)
    return DirichletParams(
        tuple(a + x for a, x in zip(prior.alpha, obs.counts)), prior.labels
    )


def log_density(params, point):
    """Log of the Dirichlet density at ``point``.

    On the simplex boundary the density is 0 or unbounded. A zero
    coordinate with shape > 1 gives ``-inf``; with shape < 1 gives
    ``+inf``; when both occur at once the value is undefined and ``nan``
    is returned. Zero coordinates with shape exactly 1 contribute nothing.
    """
    point = _as_point(point)
    _check_dims(params.k, point.k)
    to_zero = to_inf = False
    acc = []
    for a, t in zip(params.alpha, point.theta):
        if t == 0.0:
            if a > 1.0:
                to_zero = True
            elif a < 1.0:
                to_inf = True
            continue
        acc.append((a - 1.0) * math.log(t))
    if to_zero and to_inf:
        return math.nan
    if to_zero:
        return -math.inf
    if to_inf:
        return math.inf
    return math.fsum(acc) - log_multivariate_beta(params.alpha)


def _log_multinomial_coef(counts):
    return log_gamma(sum(counts) + 1) - math.fsum(log_gamma(x + 1) for x in counts)


def log_likelihood(obs, point):
    """Multinomial log-probability of the counts given category probabilities."""
    point = _as_point(point)
    _check_dims(obs.k, point.k)
    acc = []
    for x, t in zip(obs.counts, point.theta):
        if x == 0:
            continue
        if t == 0.0:
            return -math.inf
        acc.append(x * math.log(t))
    return _log_multinomial_coef(obs.counts) + math.fsum(acc)


def log_evidence(prior, obs):
    """Log marginal probability of the counts under the prior.

    This is the Dirichlet-multinomial mass function, the normalizer that
    turns likelihood times prior into the posterior density.
    """
    _check_dims(prior.k, obs.k)
    post = tuple(a + x for a, x in zip(prior.alpha, obs.counts))
    return (
        _log_multinomial_coef(obs.counts)
        + log_multivariate_beta(post)
        - log_multivariate_beta(prior.alpha)
    )


def mean(params):
    a0 = params.concentration
    return ProbVector(tuple(a / a0 for a in params.alpha))


def marginal_beta(params, index):
    """Beta parameters of one component's marginal, ``(alpha_i, alpha_0 - alpha_i)``."""
    i = category_index(params, index)
    a = params.alpha[i]
    rest = math.fsum(params.alpha[:i] + params.alpha[i + 1:])
    return a, rest
