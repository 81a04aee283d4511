# Daily negative sentiment during a hurricane
# ===========================================
#
# Fourteen days of classified tweet counts ship with the package. Each day
# gets a flat prior, a posterior, and 1,000 posterior draws summarized as
# the probability of negative sentiment with a 95% credible interval.

# %%
from pathlib import Path

from pubsent import run
from pubsent.datasets import harvey_daily_counts
from pubsent.svg import interval_chart

obs = harvey_daily_counts()
results = run(obs, kinds=["nsp"], n_draws=1000, seed=0)

# %%
print(f"{'day':<12}{'n':>6}  {'posterior':<20}{'mean':>8}{'2.5%':>8}{'97.5%':>8}{'width':>8}")
for r in results:
    s = next(iter(r.summaries.values()))
    print(
        f"{r.bucket_id.isoformat():<12}{r.counts.n:>6}  {str(r.posterior):<20}"
        f"{s.mean:8.4f}{s.ci_low:8.4f}{s.ci_high:8.4f}{s.ci_high - s.ci_low:8.4f}"
    )

# %%
# Busy days have tighter intervals relative to their level. Absolute width
# also depends on the level itself, so quiet days with a low negative share
# can be narrow too.
peak = max(results, key=lambda r: next(iter(r.summaries.values())).mean)
print("\nhighest negative share:", peak.bucket_id, str(peak.posterior))

s = [next(iter(r.summaries.values())) for r in results]
svg = interval_chart(
    [r.bucket_id.strftime("%b %d") for r in results],
    [x.mean for x in s],
    [x.ci_low for x in s],
    [x.ci_high for x in s],
    title="Negative sentiment probability: mean and 95% interval",
    y_label="P(negative)",
)
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
(out / "daily_nsp.svg").write_text(svg, encoding="utf-8")
print("wrote", out / "daily_nsp.svg")
