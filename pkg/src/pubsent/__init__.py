"""Bayesian public-sentiment modeling.

Prior belief about (negative, neutral, positive) sentiment probabilities
is a Dirichlet distribution; observed counts update it to a Dirichlet
posterior, which is sampled and summarized through a chosen measure.
"""

__version__ = "0.1.0"

from .core import (
    DirichletParams,
    ProbVector,
    SentimentCounts,
    log_density,
    log_evidence,
    log_likelihood,
    marginal_beta,
    mean,
    posterior_update,
)
from .errors import (
    DimensionError,
    EmptyInputError,
    InputError,
    PubsentError,
    SummaryUnavailableError,
    UnsupportedDimensionError,
    ValidationError,
)
from .measures import (
    CustomMeasure,
    MeasureKind,
    MeasureSummary,
    credible_interval_beta,
    evaluate,
    summarize,
)
from .pipeline import BucketObservation, BucketResult, PriorMode, PriorPolicy, run
from .sampler import SampleBatch, component_samples, draw
