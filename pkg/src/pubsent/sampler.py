"""Seeded Monte Carlo draws from a Dirichlet distribution.

Each draw normalizes K independent unit-scale gamma variates. Gamma
variates come from the Marsaglia-Tsang squeeze method; shapes below one
use the boost G(a) = G(a + 1) * U**(1/a). Variates are kept in log space
until the final normalization so very small shapes cannot underflow a
component to exactly zero.
"""

from dataclasses import dataclass

import numpy as np

from .core import DirichletParams, ProbVector, category_index
from .errors import ValidationError
from .rng import MASK64, Xoshiro256

__all__ = [
    "DEFAULT_DRAWS",
    "SampleBatch",
    "draw",
    "component_samples",
    "log_gamma_variates",
]

DEFAULT_DRAWS = 1000


def _log_gamma_ge1(rng, shape, count):
    d = shape - 1.0 / 3.0
    c = 1.0 / np.sqrt(9.0 * d)
    out = np.empty(count)
    filled = 0
    while filled < count:
        need = count - filled
        m = need + need // 16 + 16
        x = rng.normal(m)
        u = rng.uniform(m)
        v = 1.0 + c * x
        v = v * v * v
        ok = v > 0.0
        with np.errstate(invalid="ignore", divide="ignore"):
            log_v = np.log(v)
            x2 = x * x
            accept = ok & (
                (u < 1.0 - 0.0331 * x2 * x2)
                | (np.log(u) < 0.5 * x2 + d * (1.0 - v + log_v))
            )
        got = np.log(d) + log_v[accept]
        take = min(need, got.size)
        out[filled:filled + take] = got[:take]
        filled += take
    return out


def log_gamma_variates(rng, shape, count):
    """Logs of ``count`` Gamma(shape, 1) variates drawn from ``rng``."""
    shape = float(shape)
    if shape >= 1.0:
        return _log_gamma_ge1(rng, shape, count)
    boosted = _log_gamma_ge1(rng, shape + 1.0, count)
    return boosted + np.log(rng.uniform(count)) / shape


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """An ordered batch of Dirichlet draws.

    ``draws`` is a read-only ``(n_draws, K)`` array whose rows lie on the
    probability simplex.
    """

    draws: np.ndarray
    source_params: DirichletParams
    seed: int

    @property
    def n_draws(self):
        return self.draws.shape[0]

    def __len__(self):
        return self.n_draws

    def __getitem__(self, i):
        return ProbVector(tuple(self.draws[i]))

    def __iter__(self):
        for row in self.draws:
            yield ProbVector(tuple(row))


def draw(params, n_draws=DEFAULT_DRAWS, seed=0):
    """Draw ``n_draws`` probability vectors from ``Dir(params.alpha)``.

    The result depends only on ``(params, n_draws, seed)``: a fresh
    generator is built from ``seed`` and component ``i`` consumes the
    stream after component ``i - 1``.
    """
    n_draws = int(n_draws)
    if n_draws < 1:
        raise ValidationError(f"n_draws must be at least 1, got {n_draws}")
    seed = int(seed)
    if not 0 <= seed <= MASK64:
        raise ValidationError(f"seed must be an unsigned 64-bit integer, got {seed}")
    rng = Xoshiro256(seed)
    log_g = np.column_stack([log_gamma_variates(rng, a, n_draws) for a in params.alpha])
    log_g -= log_g.max(axis=1, keepdims=True)
    g = np.exp(log_g)
    theta = g / g.sum(axis=1, keepdims=True)
    theta.setflags(write=False)
    return SampleBatch(theta, params, seed)


def component_samples(batch, index):
    """Values of one category's probability across the batch, in draw order."""
    i = category_index(batch.source_params, index)
    return batch.draws[:, i].copy()
