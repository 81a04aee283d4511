import datetime

import numpy as np
import pytest

from oracles import HARVEY_DAYS
from pubsent import (
    BucketObservation,
    DirichletParams,
    InputError,
    MeasureKind,
    PriorMode,
    PriorPolicy,
    SentimentCounts,
    ValidationError,
    credible_interval_beta,
    posterior_update,
    run,
)
from pubsent.datasets import harvey_daily_counts
from pubsent.pipeline import bucket_seed

NSP = MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY


def _obs(rows=HARVEY_DAYS):
    return [BucketObservation(datetime.date.fromisoformat(d), SentimentCounts(x)) for d, x, _ in rows]


def test_bundled_dataset_matches_table():
    assert [(o.bucket_id.isoformat(), o.counts.counts) for o in harvey_daily_counts()] == [
        (d, x) for d, x, _ in HARVEY_DAYS
    ]


def test_independent_reproduces_daily_posteriors():
    results = run(_obs(), n_draws=200)
    assert [r.posterior.alpha for r in results] == [tuple(float(v) for v in p) for _, _, p in HARVEY_DAYS]
    assert all(r.prior == DirichletParams((1, 1, 1)) for r in results)


def test_sequential_two_days():
    results = run(_obs(HARVEY_DAYS[:2]), PriorPolicy(PriorMode.SEQUENTIAL, DirichletParams((1, 1, 1))), n_draws=100)
    assert results[1].prior.alpha == (3.0, 42.0, 7.0)
    assert results[1].posterior.alpha == (10.0, 227.0, 25.0)


def test_sequential_telescopes():
    base = DirichletParams((0.5, 2.0, 1.5))
    obs = _obs()
    results = run(obs, PriorPolicy("sequential", base), n_draws=50)
    total = SentimentCounts((0, 0, 0))
    for o in obs:
        total = total + o.counts
    assert results[-1].posterior == posterior_update(base, total)
    for prev, cur in zip(results, results[1:]):
        assert cur.prior == prev.posterior


def test_single_empty_bucket():
    results = run([BucketObservation("only", SentimentCounts((0, 0, 0)))], n_draws=50)
    assert results[0].posterior == DirichletParams((1, 1, 1))


def test_posterior_structural_invariant():
    for r in run(_obs(), PriorPolicy("sequential"), n_draws=50):
        assert r.posterior == posterior_update(r.prior, r.counts)


def test_determinism():
    a = run(_obs(), kinds=list(MeasureKind), n_draws=300, seed=7)
    b = run(_obs(), kinds=list(MeasureKind), n_draws=300, seed=7)
    assert a == b
    c = run(_obs(), kinds=list(MeasureKind), n_draws=300, seed=8)
    assert [r.summaries for r in a] != [r.summaries for r in c]


def test_parallel_matches_serial():
    serial = run(_obs(), n_draws=500, seed=3)
    parallel = run(_obs(), n_draws=500, seed=3, max_workers=4)
    assert serial == parallel


def test_bucket_seeds_distinct():
    seeds = [bucket_seed(0, i) for i in range(1000)]
    assert len(set(seeds)) == 1000
    assert all(0 <= s < 2**64 for s in seeds)
    assert bucket_seed(0, 0) != bucket_seed(1, 0)


def test_independent_locality_under_permutation():
    obs = _obs()
    labeled = [BucketObservation(f"b{i:02d}", o.counts) for i, o in enumerate(obs)]
    perm = np.random.default_rng(0).permutation(len(obs))
    relabeled = sorted(
        (BucketObservation(f"b{j:02d}", labeled[i].counts) for j, i in enumerate(perm)),
        key=lambda o: o.bucket_id,
    )
    base = {r.counts: r.posterior for r in run(labeled, n_draws=50)}
    for r in run(relabeled, n_draws=50):
        assert r.posterior == base[r.counts]


def test_analytic_cross_check_attached():
    results = run(_obs(), kinds=[NSP, MeasureKind.NET_SENTIMENT], n_draws=10_000)
    for r in results:
        assert set(r.analytic) == {NSP}
        a = r.analytic[NSP]
        assert abs(r.summaries[NSP].mean - a.mean) <= 0.005
        assert (a.ci_low, a.ci_high) == credible_interval_beta(r.posterior, 0)


def test_string_kinds_accepted():
    r = run(_obs(HARVEY_DAYS[:1]), kinds=["nsp", "p2n"], n_draws=100)[0]
    assert set(r.summaries) == {NSP, MeasureKind.POSITIVE_TO_NEGATIVE_RATIO}


@pytest.mark.parametrize(
    "ids",
    [["b", "a"], ["a", "a"]],
    ids=["unsorted", "duplicate"],
)
def test_order_errors(ids):
    obs = [BucketObservation(i, SentimentCounts((1, 1, 1))) for i in ids]
    with pytest.raises(InputError):
        run(obs)


def test_mixed_id_types_rejected():
    obs = [
        BucketObservation(datetime.date(2017, 8, 24), SentimentCounts((1, 1, 1))),
        BucketObservation("later", SentimentCounts((1, 1, 1))),
    ]
    with pytest.raises(InputError):
        run(obs)


def test_empty_observations():
    with pytest.raises(InputError):
        run([])


def test_dimension_mismatch():
    with pytest.raises(ValidationError):
        run([BucketObservation("a", SentimentCounts((1, 1)))])


def test_relative_ci_width_smallest_on_peak_days():
    # Supplementary: relative (width / mean) NSP interval width singles out
    # the three busiest days. The absolute-width version is in the acceptance suite.
    rel = {}
    for d, _, post in HARVEY_DAYS:
        p = DirichletParams(post)
        lo, hi = credible_interval_beta(p, 0)
        rel[d] = (hi - lo) / (post[0] / sum(post))
    assert set(sorted(rel, key=rel.get)[:3]) == {"2017-08-27", "2017-08-28", "2017-08-29"}
