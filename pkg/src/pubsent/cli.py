"""Command-line interface.

Exit status: 0 on success, 1 on I/O failure, 2 on invalid input.
"""

import argparse
import json
import math
import os
import sys
import tempfile

from . import __version__
from .core import DirichletParams, SentimentCounts, log_evidence, posterior_update
from .errors import PubsentError
from .ingest import (
    LabeledRecord,
    aggregate_records,
    classify,
    default_lexicon,
    load_lexicon,
    parse_counts_table,
    parse_records,
    serialize_counts_table,
)
from .measures import DEFAULT_BINS, DEFAULT_CI_MASS, MeasureKind, measure_kind, summarize
from .pipeline import PriorMode, PriorPolicy, run
from .sampler import DEFAULT_DRAWS, draw
from .svg import histogram_chart, interval_chart

EXIT_OK, EXIT_IO, EXIT_INVALID = 0, 1, 2


class CliError(PubsentError):
    pass


def _floats(text):
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if any(not math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"numbers must be finite, got {text!r}")
    return vals


def _ints(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _measures(text):
    try:
        return tuple(measure_kind(v) for v in text.split(","))
    except PubsentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _measure(text):
    try:
        return measure_kind(text)
    except PubsentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _num(x):
    """Shortest round-trip text for a float; plain text for ints and bools."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def _infer_format(path, explicit):
    if explicit:
        return explicit
    return "jsonl" if str(path).lower().endswith((".jsonl", ".ndjson")) else "csv"


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_outputs(outputs):
    """Write ``{path: text}`` atomically; on failure remove anything written."""
    done = []
    try:
        for path, text in outputs.items():
            if path == "-":
                sys.stdout.write(text)
                continue
            directory = os.path.dirname(os.path.abspath(path))
            fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pubsent-", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
            done.append(path)
    except BaseException:
        for path in done:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise


def cmd_update(args):
    prior = DirichletParams(args.prior)
    counts = SentimentCounts(args.counts)
    print(posterior_update(prior, counts))
    return EXIT_OK


def cmd_evidence(args):
    prior = DirichletParams(args.prior)
    counts = SentimentCounts(args.counts)
    value = log_evidence(prior, counts)
    print(f"log_evidence {_num(value)}")
    print(f"evidence {_num(math.exp(value))}")
    return EXIT_OK


def report_rows(results, kinds):
    """Flatten pipeline results into report rows (ordered dicts)."""
    rows = []
    for res in results:
        row = {"bucket": str(getattr(res.bucket_id, "isoformat", lambda: res.bucket_id)())}
        for name, vals in (
            ("prior", res.prior.alpha),
            ("count", res.counts.counts),
            ("posterior", res.posterior.alpha),
        ):
            for label, v in zip(res.prior.labels, vals):
                row[f"{name}_{label}"] = v
        for k in kinds:
            s = res.summaries[k]
            row[f"{k.code}_mean"] = s.mean
            row[f"{k.code}_median"] = s.median
            row[f"{k.code}_ci_low"] = s.ci_low
            row[f"{k.code}_ci_high"] = s.ci_high
            row[f"{k.code}_unstable"] = s.unstable_mean
            if k in res.analytic:
                a = res.analytic[k]
                row[f"{k.code}_analytic_mean"] = a.mean
                row[f"{k.code}_analytic_ci_low"] = a.ci_low
                row[f"{k.code}_analytic_ci_high"] = a.ci_high
        rows.append(row)
    return rows


def render_csv(rows):
    header = list(rows[0])
    lines = [",".join(header)]
    lines += [",".join(_num(r[h]) if h != "bucket" else r[h] for h in header) for r in rows]
    return "".join(line + "\n" for line in lines)


def render_json(rows, config):
    return json.dumps({"config": config, "rows": rows}, indent=2) + "\n"


def cmd_run(args):
    fmt = _infer_format(args.input, args.input_format)
    text = _read_text(args.input)
    if args.records:
        observations = aggregate_records(parse_records(text, fmt))
    else:
        observations = parse_counts_table(text, fmt)
    prior = DirichletParams(args.prior)
    kinds = args.measures
    results = run(
        observations,
        PriorPolicy(PriorMode(args.mode), prior),
        kinds=kinds,
        n_draws=args.draws,
        seed=args.seed,
        ci_mass=args.ci,
        bins=args.bins,
        max_workers=args.workers,
    )
    rows = report_rows(results, kinds)
    config = {
        "prior": list(prior.alpha),
        "mode": args.mode,
        "measures": [k.code for k in kinds],
        "draws": args.draws,
        "seed": args.seed,
        "ci_mass": args.ci,
        "bins": args.bins,
    }
    report = render_csv(rows) if args.output_format == "csv" else render_json(rows, config)
    outputs = {args.output: report}
    if args.svg:
        k = kinds[0]
        labels = [r["bucket"] for r in rows]
        outputs[args.svg] = interval_chart(
            labels,
            [r[f"{k.code}_mean"] for r in rows],
            [r[f"{k.code}_ci_low"] for r in rows],
            [r[f"{k.code}_ci_high"] for r in rows],
            title=f"{k.name_camel}: mean and {args.ci:.0%} credible interval",
            y_label=k.code,
        )
    _write_outputs(outputs)
    return EXIT_OK


def cmd_hist(args):
    params = DirichletParams(args.params)
    kind = args.measure
    batch = draw(params, args.draws, args.seed)
    s = summarize(kind, batch, args.ci, args.bins)
    lines = [f"# {kind.name_camel} under {params}, {args.draws} draws, seed {args.seed}"]
    lines.append(f"{'bin_lower':>12} {'bin_upper':>12} {'count':>8}")
    for lo, hi, c in s.histogram:
        lines.append(f"{lo:12.4f} {hi:12.4f} {c:8d}")
    lines.append(
        f"mean={s.mean:.4f} median={s.median:.4f} "
        f"ci{s.ci_mass:.0%}=[{s.ci_low:.4f}, {s.ci_high:.4f}] "
        f"skewness={s.skewness:.4f} unstable_mean={_num(s.unstable_mean)}"
    )
    outputs = {"-": "\n".join(lines) + "\n"}
    if args.svg:
        outputs[args.svg] = histogram_chart(
            s.histogram, title=f"{kind.name_camel} under {params}", x_label=kind.code
        )
    _write_outputs(outputs)
    return EXIT_OK


def cmd_classify(args):
    lexicon = load_lexicon(_read_text(args.lexicon)) if args.lexicon else default_lexicon()
    text = _read_text(args.input)
    if args.input_format == "text":
        if args.aggregate:
            raise CliError("--aggregate needs jsonl input with a bucket per text")
        out = "".join(classify(line, lexicon) + "\n" for line in text.splitlines())
        _write_outputs({args.output: out})
        return EXIT_OK
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            bucket, body = obj["bucket"], obj["text"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CliError(f"line {lineno}: expected {{\"bucket\": ..., \"text\": ...}}: {exc}") from None
        records.append(LabeledRecord(str(bucket), classify(str(body), lexicon)))
    if args.aggregate:
        out = serialize_counts_table(aggregate_records(records))
    else:
        out = "bucket,label\n" + "".join(f"{r.bucket_id},{r.label}\n" for r in records)
    _write_outputs({args.output: out})
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="pubsent",
        description="Bayesian public-sentiment modeling with Dirichlet posteriors.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    up = sub.add_parser("update", help="conjugate posterior for a prior and counts")
    up.add_argument("--prior", type=_floats, default=(1.0, 1.0, 1.0))
    up.add_argument("--counts", type=_ints, required=True)
    up.set_defaults(func=cmd_update)

    ev = sub.add_parser("evidence", help="marginal probability of counts under a prior")
    ev.add_argument("--prior", type=_floats, default=(1.0, 1.0, 1.0))
    ev.add_argument("--counts", type=_ints, required=True)
    ev.set_defaults(func=cmd_evidence)

    rn = sub.add_parser("run", help="per-bucket posteriors and measure summaries")
    rn.add_argument("input", help="count table (or labeled records with --records); '-' for stdin")
    rn.add_argument("--input-format", choices=("csv", "jsonl"))
    rn.add_argument("--records", action="store_true", help="input holds bucket,label[,weight] records")
    rn.add_argument("--prior", type=_floats, default=(1.0, 1.0, 1.0))
    rn.add_argument("--mode", choices=[m.value for m in PriorMode], default="independent")
    rn.add_argument(
        "--measures",
        type=_measures,
        default=(MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY,),
        help="comma-separated: " + ",".join(k.code for k in MeasureKind),
    )
    rn.add_argument("--draws", type=int, default=DEFAULT_DRAWS)
    rn.add_argument("--seed", type=int, default=0)
    rn.add_argument("--ci", type=float, default=DEFAULT_CI_MASS)
    rn.add_argument("--bins", type=int, default=DEFAULT_BINS)
    rn.add_argument("--output-format", choices=("csv", "json"), default="csv")
    rn.add_argument("-o", "--output", default="-")
    rn.add_argument("--svg", help="write a mean/credible-interval chart here")
    rn.add_argument("--workers", type=int, default=None)
    rn.set_defaults(func=cmd_run)

    hi = sub.add_parser("hist", help="histogram of one measure under a Dirichlet")
    hi.add_argument("--params", type=_floats, required=True)
    hi.add_argument("--measure", type=_measure, default=MeasureKind.NEGATIVE_SENTIMENT_PROBABILITY)
    hi.add_argument("--draws", type=int, default=DEFAULT_DRAWS)
    hi.add_argument("--seed", type=int, default=0)
    hi.add_argument("--ci", type=float, default=DEFAULT_CI_MASS)
    hi.add_argument("--bins", type=int, default=DEFAULT_BINS)
    hi.add_argument("--svg")
    hi.set_defaults(func=cmd_hist)

    cl = sub.add_parser("classify", help="label texts with the lexicon classifier")
    cl.add_argument("input", nargs="?", default="-")
    cl.add_argument("--lexicon", help="lexicon file (term<TAB>score); default: bundled toy lexicon")
    cl.add_argument("--input-format", choices=("text", "jsonl"), default="text")
    cl.add_argument("--aggregate", action="store_true", help="emit a per-bucket count table")
    cl.add_argument("-o", "--output", default="-")
    cl.set_defaults(func=cmd_classify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except PubsentError as exc:
        print(f"pubsent: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"pubsent: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
