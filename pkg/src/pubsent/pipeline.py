"""Per-bucket posterior updating, sampling and summarizing over time."""

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import DirichletParams, SentimentCounts, posterior_update
from .errors import InputError, ValidationError
from .measures import (
    DEFAULT_BINS,
    DEFAULT_CI_MASS,
    MeasureKind,
    analytic_interval,
    measure_kind,
    summarize,
)
from .rng import GOLDEN_GAMMA, MASK64, mix64
from .sampler import DEFAULT_DRAWS, draw

__all__ = [
    "PriorMode",
    "PriorPolicy",
    "BucketObservation",
    "BucketResult",
    "bucket_seed",
    "run",
]


class PriorMode(enum.Enum):
    INDEPENDENT = "independent"
    SEQUENTIAL = "sequential"


@dataclass(frozen=True)
class PriorPolicy:
    """How each bucket's prior is chosen.

    INDEPENDENT gives every bucket ``base_prior``. SEQUENTIAL gives the
    first bucket ``base_prior`` and every later bucket the previous
    bucket's posterior.
    """

    mode: PriorMode = PriorMode.INDEPENDENT
    base_prior: DirichletParams = field(default_factory=lambda: DirichletParams((1, 1, 1)))

    def __post_init__(self):
        object.__setattr__(self, "mode", PriorMode(self.mode))
        if not isinstance(self.base_prior, DirichletParams):
            raise ValidationError("base_prior must be DirichletParams")


@dataclass(frozen=True)
class BucketObservation:
    """Counts observed in one time bucket (a ``datetime.date`` or a label)."""

    bucket_id: object
    counts: SentimentCounts

    def __post_init__(self):
        if not isinstance(self.counts, SentimentCounts):
            object.__setattr__(self, "counts", SentimentCounts(tuple(self.counts)))


@dataclass(frozen=True)
class BucketResult:
    """Everything computed for one bucket.

    ``analytic`` holds the closed-form Beta cross-check for the measures
    that are single-component marginals.
    """

    bucket_id: object
    prior: DirichletParams
    counts: SentimentCounts
    posterior: DirichletParams
    summaries: dict
    analytic: dict
    seed: int


def bucket_seed(seed, ordinal):
    """Seed for the bucket at 0-based ``ordinal``, mixed from the run seed."""
    return mix64((int(seed) + (int(ordinal) + 1) * GOLDEN_GAMMA) & MASK64)


def _check_order(observations):
    for i in range(1, len(observations)):
        prev, cur = observations[i - 1].bucket_id, observations[i].bucket_id
        try:
            ordered = prev < cur
        except TypeError:
            raise InputError(
                f"bucket ids {prev!r} and {cur!r} are not mutually comparable"
            ) from None
        if not ordered:
            what = "duplicate" if prev == cur else "unsorted"
            raise InputError(f"{what} bucket id {cur!r} after {prev!r}")


def _summarize_bucket(ordinal, obs, prior, kinds, n_draws, seed, ci_mass, bins):
    posterior = posterior_update(prior, obs.counts)
    s = bucket_seed(seed, ordinal)
    batch = draw(posterior, n_draws, s)
    summaries = {k: summarize(k, batch, ci_mass, bins) for k in kinds}
    analytic = {
        k: analytic_interval(posterior, k.marginal_index, ci_mass)
        for k in kinds
        if k.marginal_index is not None
    }
    return BucketResult(obs.bucket_id, prior, obs.counts, posterior, summaries, analytic, s)


def run(
    observations,
    policy=None,
    kinds=(MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY,),
    n_draws=DEFAULT_DRAWS,
    seed=0,
    ci_mass=DEFAULT_CI_MASS,
    bins=DEFAULT_BINS,
    max_workers=None,
):
    """Run the update/sample/summarize loop over time buckets.

    Parameters
    ----------
    observations : sequence of BucketObservation
        Non-empty and strictly increasing in ``bucket_id``.
    policy : PriorPolicy, optional
        Defaults to independent buckets with a ``Dir(1, 1, 1)`` prior.
    kinds : iterable of MeasureKind or str
        Measures to summarize per bucket.
    max_workers : int, optional
        Thread count for independent mode. Results keep input order
        whatever the value; sequential mode always runs serially.

    Returns
    -------
    list of BucketResult
    """
    observations = list(observations)
    if not observations:
        raise InputError("no buckets to process")
    _check_order(observations)
    policy = policy or PriorPolicy()
    kinds = tuple(measure_kind(k) if isinstance(k, str) else k for k in kinds)
    base = policy.base_prior
    for obs in observations:
        if obs.counts.k != base.k:
            raise ValidationError(
                f"bucket {obs.bucket_id!r} has {obs.counts.k} categories, prior has {base.k}"
            )
    args = (kinds, n_draws, seed, ci_mass, bins)

    if policy.mode is PriorMode.SEQUENTIAL:
        results = []
        prior = base
        for i, obs in enumerate(observations):
            res = _summarize_bucket(i, obs, prior, *args)
            results.append(res)
            prior = res.posterior
        return results

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = [
                pool.submit(_summarize_bucket, i, obs, base, *args)
                for i, obs in enumerate(observations)
            ]
            return [f.result() for f in futures]
    return [_summarize_bucket(i, obs, base, *args) for i, obs in enumerate(observations)]
