"""Reading sentiment data into per-bucket counts.

Three routes lead to :class:`~pubsent.pipeline.BucketObservation` lists:

* count tables (CSV or JSONL) already aggregated per bucket,
* labeled records, one per post, summed by :func:`aggregate_records`,
* raw text labeled by the lexicon classifier :func:`classify`.

Bucket ids are ISO-8601 calendar dates when every id in a file parses as
one, otherwise they are kept as opaque strings.
"""

import datetime
import io
import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources

from .core import DEFAULT_LABELS, SentimentCounts
from .errors import EmptyInputError, InputError, ValidationError
from .pipeline import BucketObservation

__all__ = [
    "COUNTS_HEADER",
    "RECORDS_HEADER",
    "LabeledRecord",
    "Lexicon",
    "parse_counts_table",
    "serialize_counts_table",
    "parse_records",
    "aggregate_records",
    "load_lexicon",
    "default_lexicon",
    "tokenize",
    "score",
    "classify",
]

COUNTS_HEADER = ("bucket",) + DEFAULT_LABELS
RECORDS_HEADER = ("bucket", "label", "weight")
_INT_RE = re.compile(r"[+-]?\d+\Z")
_WORD_RE = re.compile(r"[^\W_]+")


def _lines(source):
    if isinstance(source, str):
        source = io.StringIO(source)
    for lineno, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        if lineno == 1:
            line = line.lstrip("\ufeff")
        yield lineno, line


def _check_format(fmt):
    fmt = str(fmt).lower()
    if fmt not in ("csv", "jsonl"):
        raise ValidationError(f"unknown table format {fmt!r}; use csv or jsonl")
    return fmt


def _parse_int(text, what, lineno):
    if isinstance(text, bool):
        raise InputError(f"{what} must be an integer, got {text!r}", lineno)
    if isinstance(text, int):
        return text
    if isinstance(text, str) and _INT_RE.match(text.strip()):
        return int(text.strip())
    raise InputError(f"{what} must be an integer, got {text!r}", lineno)


def _convert_ids(raw_ids):
    """Parse all ids as ISO dates, or none of them."""
    try:
        return [datetime.date.fromisoformat(r) for r in raw_ids]
    except ValueError:
        return list(raw_ids)


def _format_id(bucket_id):
    if isinstance(bucket_id, datetime.date):
        return bucket_id.isoformat()
    return str(bucket_id)


def _csv_rows(source, header, min_fields=None):
    """Yield (lineno, fields) for data rows after checking the header."""
    min_fields = len(header) if min_fields is None else min_fields
    seen_header = False
    for lineno, line in _lines(source):
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split(",")]
        if not seen_header:
            got = tuple(f.lower() for f in fields)
            if got != header[: len(got)] or len(got) < min_fields:
                raise InputError(
                    f"expected header {','.join(header[:min_fields])!r}, got {line!r}", lineno
                )
            ncols = len(got)
            seen_header = True
            continue
        if len(fields) != ncols:
            raise InputError(f"expected {ncols} fields, got {len(fields)}", lineno)
        yield lineno, dict(zip(header, fields))
    if not seen_header:
        raise EmptyInputError("input is empty (no header)")


def _jsonl_rows(source):
    for lineno, line in _lines(source):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise InputError("each line must be a JSON object", lineno)
        yield lineno, obj


def _bucket_field(row, lineno):
    if "bucket" not in row:
        raise InputError("missing 'bucket'", lineno)
    raw = row["bucket"]
    if not isinstance(raw, str):
        raise InputError(f"bucket must be a string, got {raw!r}", lineno)
    if not raw.strip():
        raise InputError("empty bucket id", lineno)
    return raw.strip()


def parse_counts_table(source, fmt="csv"):
    """Parse a per-bucket count table.

    ``source`` is a text stream or a string. CSV input starts with the
    header ``bucket,negative,neutral,positive``; JSONL input has one object
    per line with those keys. Rows come back sorted by bucket.

    Raises
    ------
    InputError
        Malformed rows, negative counts or duplicate buckets, with the
        1-based line number.
    EmptyInputError
        No data rows.
    """
    fmt = _check_format(fmt)
    rows = _csv_rows(source, COUNTS_HEADER) if fmt == "csv" else _jsonl_rows(source)
    raw_ids, counts, linenos = [], [], []
    for lineno, row in rows:
        bucket = _bucket_field(row, lineno)
        vals = []
        for label in DEFAULT_LABELS:
            if label not in row:
                raise InputError(f"missing {label!r}", lineno)
            v = _parse_int(row[label], label, lineno)
            if v < 0:
                raise InputError(f"negative count {v} for {label!r}", lineno)
            vals.append(v)
        raw_ids.append(bucket)
        counts.append(SentimentCounts(tuple(vals)))
        linenos.append(lineno)
    if not raw_ids:
        raise EmptyInputError("no data rows")
    ids = _convert_ids(raw_ids)
    seen = {}
    for bucket_id, lineno in zip(ids, linenos):
        if bucket_id in seen:
            raise InputError(
                f"duplicate bucket {_format_id(bucket_id)!r} (first on line {seen[bucket_id]})",
                lineno,
            )
        seen[bucket_id] = lineno
    obs = [BucketObservation(b, c) for b, c in zip(ids, counts)]
    return sorted(obs, key=lambda o: o.bucket_id)


def serialize_counts_table(observations, fmt="csv"):
    """Render observations in the canonical count-table form (LF endings)."""
    fmt = _check_format(fmt)
    out = []
    if fmt == "csv":
        out.append(",".join(COUNTS_HEADER))
        for o in observations:
            out.append(",".join([_format_id(o.bucket_id)] + [str(c) for c in o.counts.counts]))
    else:
        for o in observations:
            row = {"bucket": _format_id(o.bucket_id)}
            row.update(zip(DEFAULT_LABELS, o.counts.counts))
            out.append(json.dumps(row))
    return "".join(line + "\n" for line in out)


@dataclass(frozen=True)
class LabeledRecord:
    bucket_id: object
    label: str
    weight: int = 1

    def __post_init__(self):
        label = str(self.label).strip().lower()
        if label not in DEFAULT_LABELS:
            raise ValidationError(f"label must be one of {DEFAULT_LABELS}, got {self.label!r}")
        if isinstance(self.weight, bool) or not isinstance(self.weight, int) or self.weight < 1:
            raise ValidationError(f"weight must be a positive integer, got {self.weight!r}")
        object.__setattr__(self, "label", label)


def parse_records(source, fmt="csv"):
    """Parse labeled records (``bucket,label[,weight]``) from CSV or JSONL."""
    fmt = _check_format(fmt)
    if fmt == "csv":
        rows = _csv_rows(source, RECORDS_HEADER, min_fields=2)
    else:
        rows = _jsonl_rows(source)
    parsed = []
    for lineno, row in rows:
        bucket = _bucket_field(row, lineno)
        label = row.get("label")
        if not isinstance(label, str) or label.strip().lower() not in DEFAULT_LABELS:
            raise InputError(f"label must be one of {DEFAULT_LABELS}, got {label!r}", lineno)
        weight = row.get("weight", 1)
        weight = 1 if weight in ("", None) else _parse_int(weight, "weight", lineno)
        if weight < 1:
            raise InputError(f"weight must be positive, got {weight}", lineno)
        parsed.append((bucket, label, weight))
    ids = _convert_ids([p[0] for p in parsed])
    return [LabeledRecord(b, lab, w) for b, (_, lab, w) in zip(ids, parsed)]


def aggregate_records(records):
    """Sum weighted labels per bucket; buckets come back sorted."""
    totals = defaultdict(lambda: [0, 0, 0])
    for rec in records:
        totals[rec.bucket_id][DEFAULT_LABELS.index(rec.label)] += rec.weight
    try:
        keys = sorted(totals)
    except TypeError:
        raise InputError("bucket ids mix dates and labels; they cannot be ordered") from None
    return [BucketObservation(k, SentimentCounts(tuple(totals[k]))) for k in keys]


@dataclass(frozen=True)
class Lexicon:
    """Signed sentiment scores for words and emoticons.

    Terms are single lowercase word tokens. Emoticons are matched as
    literal, case-sensitive substrings of whitespace-separated chunks.
    """

    term_scores: dict = field(default_factory=dict)
    emoticon_scores: dict = field(default_factory=dict)

    def __post_init__(self):
        for term, s in self.term_scores.items():
            if not term or term != term.lower() or _WORD_RE.fullmatch(term) is None:
                raise ValidationError(f"lexicon term must be one lowercase word, got {term!r}")
            _check_score(s, term)
        for emo, s in self.emoticon_scores.items():
            if not emo or any(ch.isspace() for ch in emo):
                raise ValidationError(f"emoticon must be non-empty without spaces, got {emo!r}")
            _check_score(s, emo)
        # longest first so ":-))" wins over ":-)"
        order = tuple(sorted(self.emoticon_scores, key=lambda e: (-len(e), e)))
        object.__setattr__(self, "_emoticon_order", order)


def _check_score(s, key):
    if isinstance(s, bool) or not isinstance(s, int):
        raise ValidationError(f"score for {key!r} must be an integer, got {s!r}")


def load_lexicon(source):
    """Read a lexicon file.

    Lines are ``term<TAB>score``; ``#`` starts a comment line; entries
    after a ``[emoticons]`` line are emoticons (``[terms]`` switches back).
    """
    terms, emoticons = {}, {}
    target = terms
    for lineno, line in _lines(source):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.lower() == "[emoticons]":
            target = emoticons
            continue
        if stripped.lower() == "[terms]":
            target = terms
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise InputError("expected 'entry<TAB>score'", lineno)
        key = parts[0].strip()
        if target is terms:
            key = key.lower()
        score_val = _parse_int(parts[1], "score", lineno)
        if key in target:
            raise InputError(f"duplicate lexicon entry {key!r}", lineno)
        target[key] = score_val
    try:
        return Lexicon(terms, emoticons)
    except ValidationError as exc:
        raise InputError(str(exc)) from None


_DEFAULT_LEXICON = None


def default_lexicon():
    """The small illustrative lexicon bundled with the package.

    It has a few dozen hand-picked entries and is meant for demos and
    tests, not for serious sentiment analysis.
    """
    global _DEFAULT_LEXICON
    if _DEFAULT_LEXICON is None:
        text = resources.files("pubsent").joinpath("data/toy_lexicon.tsv").read_text("utf-8")
        _DEFAULT_LEXICON = load_lexicon(text)
    return _DEFAULT_LEXICON


def tokenize(text, lexicon):
    """Split ``text`` into (emoticons, words).

    Emoticons known to the lexicon are pulled out of each
    whitespace-separated chunk first; the rest is split on anything that
    is not a letter or digit and lowercased.
    """
    found, words = [], []
    for chunk in text.split():
        for emo in lexicon._emoticon_order:
            while emo in chunk:
                found.append(emo)
                chunk = chunk.replace(emo, " ", 1)
        words.extend(w.lower() for w in _WORD_RE.findall(chunk))
    return found, words


def score(text, lexicon=None):
    lexicon = lexicon or default_lexicon()
    emoticons, words = tokenize(text, lexicon)
    return sum(lexicon.term_scores.get(w, 0) for w in words) + sum(
        lexicon.emoticon_scores[e] for e in emoticons
    )


def classify(text, lexicon=None):
    """Label text as negative, neutral or positive by the sign of its score.

    A score of exactly zero (including empty text) is neutral.
    """
    s = score(text, lexicon)
    if s > 0:
        return "positive"
    if s < 0:
        return "negative"
    return "neutral"
