# Conjugate updating by hand
# ==========================
#
# A Dirichlet prior over (negative, neutral, positive) plus a day's counts
# gives a Dirichlet posterior whose shapes are just prior + counts. This
# script walks through one day, then checks the update against Bayes' rule
# at a few points on the simplex.

# %%
import math

import numpy as np

from pubsent import (
    DirichletParams,
    SentimentCounts,
    log_density,
    log_evidence,
    log_likelihood,
    mean,
    posterior_update,
)

prior = DirichletParams((1, 1, 1))          # flat over the simplex
day = SentimentCounts((2, 41, 6))           # first day of the storm
post = posterior_update(prior, day)
print("prior    ", prior)
print("counts   ", day.counts, "n =", day.n)
print("posterior", post)
print("posterior mean", np.round(mean(post).theta, 4))

# %%
# The evidence p(x) is the normalizer that makes
#   posterior = likelihood * prior / evidence
# hold pointwise. Pick a few points and compare both sides in log space.
logz = log_evidence(prior, day)
print(f"\nlog evidence {logz:.6f}  (evidence {math.exp(logz):.3e})")
for theta in [(0.05, 0.85, 0.10), (0.2, 0.6, 0.2), (1 / 3, 1 / 3, 1 / 3)]:
    lhs = log_density(post, theta)
    rhs = log_likelihood(day, theta) + log_density(prior, theta) - logz
    print(f"theta={tuple(round(t, 3) for t in theta)!s:<24} lhs={lhs:10.5f} rhs={rhs:10.5f}")

# %%
# A week of updates, two ways. Independent mode restarts from the flat
# prior every day; sequential mode carries yesterday's posterior forward.
week = [(2, 41, 6), (7, 185, 18), (15, 177, 17), (31, 339, 41)]
carried = prior
print()
for x in week:
    fresh = posterior_update(prior, SentimentCounts(x))
    carried = posterior_update(carried, SentimentCounts(x))
    print(f"{str(x):<16} independent {str(fresh):<22} sequential {carried}")
