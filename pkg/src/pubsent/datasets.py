"""Bundled example data."""

from importlib import resources

from .ingest import parse_counts_table


def harvey_daily_counts():
    """Daily (negative, neutral, positive) tweet counts, Houston, 2017-08-24 to 2017-09-06.

    Per-day totals of classified tweets during Hurricane Harvey. Only the
    totals ship with the package, not the tweets themselves.
    """
    text = resources.files("pubsent").joinpath("data/harvey_daily_counts.csv").read_text("utf-8")
    return parse_counts_table(text, "csv")
