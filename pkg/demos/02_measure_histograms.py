# Shapes of the sentiment measures
# ================================
#
# Draw from Dir(4, 15, 3) and look at how each measure distributes. The
# probabilities of a single category lean right, the net score is close to
# symmetric, and the positive-to-negative ratio has a long upper tail.
# SVG histograms land in demos/output/.

# %%
from pathlib import Path

from pubsent import DirichletParams, MeasureKind, draw, summarize
from pubsent.svg import histogram_chart

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

params = DirichletParams((4, 15, 3))
batch = draw(params, n_draws=100_000, seed=0)

# %%
print(f"{'measure':<32}{'mean':>9}{'median':>9}{'2.5%':>9}{'97.5%':>9}{'skew':>8}  note")
for kind in MeasureKind:
    s = summarize(kind, batch, bins=40)
    note = "mean unstable" if s.unstable_mean else ""
    print(
        f"{kind.name_camel:<32}{s.mean:9.4f}{s.median:9.4f}{s.ci_low:9.4f}{s.ci_high:9.4f}"
        f"{s.skewness:8.3f}  {note}"
    )
    svg = histogram_chart(s.histogram, title=f"{kind.name_camel} under {params}", x_label=kind.code)
    (out / f"hist_{kind.code}.svg").write_text(svg, encoding="utf-8")

# %%
# The ratio's tail: its mean is dominated by a handful of draws where
# the negative share is tiny, which is why it is flagged above.
ratio = summarize("p2n", batch)
over = ratio.histogram[-1]
print(f"\np2n: {over[2]} of {ratio.n_samples} draws exceed {over[0]:.2f}")
print("wrote", sorted(p.name for p in out.glob("hist_*.svg")))
