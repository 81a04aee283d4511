# From raw text to a posterior
# ============================
#
# The lexicon classifier is deliberately small. It exists so a stream of
# texts can be turned into daily counts and pushed through the same
# pipeline without any outside tooling.

# %%
from pubsent import run
from pubsent.ingest import LabeledRecord, aggregate_records, classify, default_lexicon, score

texts = [
    ("2017-08-26", "Water rising fast, we are trapped on the roof"),
    ("2017-08-26", "Shelter at the convention center is open"),
    ("2017-08-26", "Praying for everyone in Houston"),
    ("2017-08-27", "Thank you volunteers, amazing rescue work :)"),
    ("2017-08-27", "Power outage again, so scared"),
    ("2017-08-27", "Road closures listed below"),
    ("2017-08-27", "Flooded house, lost everything :("),
]

lex = default_lexicon()
for day, text in texts:
    print(f"{day}  {score(text, lex):+d}  {classify(text, lex):<8}  {text}")

# %%
records = [LabeledRecord(day, classify(text, lex)) for day, text in texts]
obs = aggregate_records(records)
for o in obs:
    print(o.bucket_id, o.counts.counts)

# %%
# With this few texts the flat prior still matters a lot, and the intervals
# are wide.
for r in run(obs, kinds=["nsp", "net"], n_draws=5000, seed=1):
    nsp, net = r.summaries.values()
    print(
        f"{r.bucket_id}  {r.posterior}  nsp {nsp.mean:.3f} [{nsp.ci_low:.3f}, {nsp.ci_high:.3f}]"
        f"  net {net.mean:+.3f}"
    )
