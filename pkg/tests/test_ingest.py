import datetime
import io
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import HARVEY_DAYS, HARVEY_CSV
from pubsent import EmptyInputError, InputError, SentimentCounts, ValidationError
from pubsent.ingest import (
    LabeledRecord,
    Lexicon,
    aggregate_records,
    classify,
    default_lexicon,
    load_lexicon,
    parse_counts_table,
    parse_records,
    score,
    serialize_counts_table,
    tokenize,
)

D1 = datetime.date(2017, 8, 24)


class TestCountsTable:
    def test_single_row(self):
        (obs,) = parse_counts_table("bucket,negative,neutral,positive\n2017-08-24,2,41,6\n")
        assert obs.bucket_id == D1
        assert obs.counts == SentimentCounts((2, 41, 6))

    def test_daily_fixture(self):
        obs = parse_counts_table(io.StringIO(HARVEY_CSV))
        assert [o.counts.counts for o in obs] == [x for _, x, _ in HARVEY_DAYS]
        assert len(obs) == 14

    def test_crlf_bom_blank_lines(self):
        text = "\ufeffbucket,negative,neutral,positive\r\n\r\n2017-08-25,7,185,18\r\n2017-08-24,2,41,6\r\n"
        obs = parse_counts_table(text)
        assert [o.bucket_id.day for o in obs] == [24, 25]

    def test_sorted_output(self):
        lines = HARVEY_CSV.splitlines()
        shuffled = [lines[0]] + random.Random(1).sample(lines[1:], len(lines) - 1)
        obs = parse_counts_table("\n".join(shuffled))
        assert serialize_counts_table(obs) == HARVEY_CSV

    def test_empty_after_header(self):
        with pytest.raises(EmptyInputError):
            parse_counts_table("bucket,negative,neutral,positive\n")
        with pytest.raises(EmptyInputError):
            parse_counts_table("")

    def test_negative_count_names_line(self):
        with pytest.raises(InputError) as err:
            parse_counts_table("bucket,negative,neutral,positive\n2017-08-24,-1,0,0\n")
        assert err.value.line == 2
        assert "line 2" in str(err.value)
        assert isinstance(err.value, ValidationError)

    @pytest.mark.parametrize(
        "row",
        ["2017-08-24,1,2", "2017-08-24,1,2,3,4", "2017-08-24,a,2,3", "2017-08-24,1.5,2,3", ",1,2,3"],
    )
    def test_malformed_rows(self, row):
        text = "bucket,negative,neutral,positive\n2017-08-23,0,0,0\n" + row + "\n"
        with pytest.raises(InputError) as err:
            parse_counts_table(text)
        assert err.value.line == 3

    def test_bad_header(self):
        with pytest.raises(InputError) as err:
            parse_counts_table("date,neg,neu,pos\n2017-08-24,1,2,3\n")
        assert err.value.line == 1

    def test_duplicate_bucket(self):
        text = "bucket,negative,neutral,positive\n2017-08-24,1,2,3\n2017-08-25,1,1,1\n2017-08-24,0,0,0\n"
        with pytest.raises(InputError) as err:
            parse_counts_table(text)
        assert err.value.line == 4

    def test_opaque_labels_all_or_nothing(self):
        text = "bucket,negative,neutral,positive\n2017-08-24,1,2,3\nweek-2,1,1,1\n"
        obs = parse_counts_table(text)
        assert [o.bucket_id for o in obs] == ["2017-08-24", "week-2"]

    def test_jsonl(self):
        text = "\n".join(
            json.dumps({"bucket": d, "negative": x[0], "neutral": x[1], "positive": x[2]})
            for d, x, _ in HARVEY_DAYS
        )
        obs = parse_counts_table(text, "jsonl")
        assert obs == parse_counts_table(HARVEY_CSV, "csv")

    @pytest.mark.parametrize(
        "line",
        [
            "{not json",
            "[1, 2, 3]",
            '{"bucket": "a", "negative": 1, "neutral": 2}',
            '{"bucket": "a", "negative": -1, "neutral": 2, "positive": 0}',
            '{"bucket": "a", "negative": 1.5, "neutral": 2, "positive": 0}',
            '{"bucket": "a", "negative": true, "neutral": 2, "positive": 0}',
            '{"bucket": 5, "negative": 1, "neutral": 2, "positive": 0}',
        ],
    )
    def test_jsonl_errors(self, line):
        good = '{"bucket": "0", "negative": 1, "neutral": 2, "positive": 0}'
        with pytest.raises(InputError) as err:
            parse_counts_table(good + "\n" + line + "\n", "jsonl")
        assert err.value.line == 2

    def test_unknown_format(self):
        with pytest.raises(ValidationError):
            parse_counts_table(HARVEY_CSV, "xml")

    def test_jsonl_round_trip(self):
        obs = parse_counts_table(HARVEY_CSV)
        text = serialize_counts_table(obs, "jsonl")
        assert serialize_counts_table(parse_counts_table(text, "jsonl"), "jsonl") == text

    @given(
        st.dictionaries(
            st.dates(datetime.date(2000, 1, 1), datetime.date(2030, 1, 1)),
            st.tuples(*[st.integers(0, 10**6)] * 3),
            min_size=1,
            max_size=30,
        )
    )
    def test_round_trip(self, rows):
        canonical = "bucket,negative,neutral,positive\n" + "".join(
            f"{d.isoformat()},{a},{b},{c}\n" for d, (a, b, c) in sorted(rows.items())
        )
        assert serialize_counts_table(parse_counts_table(canonical)) == canonical


class TestRecords:
    def test_aggregate_simple(self):
        recs = [LabeledRecord("d1", "negative"), LabeledRecord("d1", "negative"), LabeledRecord("d1", "positive")]
        (obs,) = aggregate_records(recs)
        assert obs.bucket_id == "d1" and obs.counts.counts == (2, 0, 1)

    def test_aggregate_empty(self):
        assert aggregate_records([]) == []

    def test_weights(self):
        recs = [LabeledRecord("a", "neutral", 5), LabeledRecord("b", "POSITIVE"), LabeledRecord("a", "neutral")]
        obs = aggregate_records(recs)
        assert [(o.bucket_id, o.counts.counts) for o in obs] == [("a", (0, 6, 0)), ("b", (0, 0, 1))]

    @pytest.mark.parametrize("kwargs", [{"label": "angry"}, {"label": "neutral", "weight": 0}, {"label": "neutral", "weight": 1.5}])
    def test_invalid_record(self, kwargs):
        with pytest.raises(ValidationError):
            LabeledRecord("a", **kwargs)

    def test_synthetic_daily_records(self):
        recs = [
            LabeledRecord(datetime.date.fromisoformat(d), label)
            for d, x, _ in HARVEY_DAYS
            for label, n in zip(("negative", "neutral", "positive"), x)
            for _ in range(n)
        ]
        assert len(recs) == sum(sum(x) for _, x, _ in HARVEY_DAYS)
        random.Random(5).shuffle(recs)
        obs = aggregate_records(recs)
        assert obs == parse_counts_table(HARVEY_CSV)

    def test_order_independent(self):
        recs = [LabeledRecord(f"d{i % 4}", ("negative", "neutral", "positive")[i % 3], 1 + i % 2) for i in range(60)]
        base = aggregate_records(recs)
        for seed in range(5):
            shuffled = recs[:]
            random.Random(seed).shuffle(shuffled)
            assert aggregate_records(shuffled) == base

    def test_parse_records_csv(self):
        text = "bucket,label,weight\n2017-08-24,Negative,2\n2017-08-24,neutral,\n2017-08-25,positive,1\n"
        recs = parse_records(text)
        assert recs == [
            LabeledRecord(D1, "negative", 2),
            LabeledRecord(D1, "neutral", 1),
            LabeledRecord(datetime.date(2017, 8, 25), "positive", 1),
        ]

    def test_parse_records_without_weight(self):
        recs = parse_records("bucket,label\nx,neutral\n")
        assert recs == [LabeledRecord("x", "neutral")]

    def test_parse_records_jsonl(self):
        text = '{"bucket": "2017-08-24", "label": "negative"}\n{"bucket": "2017-08-24", "label": "positive", "weight": 3}\n'
        (obs,) = aggregate_records(parse_records(text, "jsonl"))
        assert obs.counts.counts == (1, 0, 3)

    @pytest.mark.parametrize("row", ["x,happy", "x,neutral,0", "x,neutral,-2", "x"])
    def test_parse_records_errors(self, row):
        with pytest.raises(InputError) as err:
            parse_records("bucket,label,weight\n" + row + "\n")
        assert err.value.line == 2


LEX = Lexicon({"good": 2, "terrible": -3, "amazing": 3}, {":)": 1, ":(": -1, ":-))": 2})


class TestClassify:
    def test_spec_examples(self):
        assert classify("good day", Lexicon({"good": 2})) == "positive"
        assert classify("", LEX) == "neutral"
        assert classify("terrible flood but amazing rescue", Lexicon({"terrible": -3, "amazing": 3})) == "neutral"

    def test_case_and_punctuation(self):
        assert classify("GOOD!!!", LEX) == "positive"
        assert classify("so...terrible.", LEX) == "negative"

    def test_emoticons(self):
        assert tokenize("ok:) fine :(", LEX) == ([":)", ":("], ["ok", "fine"])
        assert score("rain :-))", LEX) == 2
        assert classify("flood :(", LEX) == "negative"

    def test_unknown_tokens_score_zero(self):
        assert score("zxq qqq", LEX) == 0

    @given(st.text())
    def test_total_and_deterministic(self, text):
        a = classify(text, LEX)
        assert a in ("negative", "neutral", "positive")
        assert classify(text, LEX) == a
        assert classify(text) == classify(text)

    def test_default_lexicon(self):
        lex = default_lexicon()
        assert 30 <= len(lex.term_scores) <= 60
        assert lex.emoticon_scores
        assert classify("So thankful for the volunteers :)") == "positive"
        assert classify("Streets flooded, we are trapped") == "negative"
        assert classify("Water level update at 5pm") == "neutral"


class TestLexiconFile:
    def test_load(self):
        text = "# comment\ngood\t2\nBAD\t-2\n\n[emoticons]\n:)\t1\n[terms]\nok\t0\n"
        lex = load_lexicon(text)
        assert lex.term_scores == {"good": 2, "bad": -2, "ok": 0}
        assert lex.emoticon_scores == {":)": 1}

    @pytest.mark.parametrize(
        "text,line",
        [("good\t2\ngood\t1\n", 2), ("good 2\n", 1), ("good\tx\n", 1), ("[emoticons]\n:)\t1\n:)\t2\n", 3)],
    )
    def test_errors(self, text, line):
        with pytest.raises(InputError) as err:
            load_lexicon(text)
        assert err.value.line == line

    @pytest.mark.parametrize("terms", [{"": 1}, {"Good": 1}, {"two words": 1}, {"x": 1.5}])
    def test_invalid_terms(self, terms):
        with pytest.raises(ValidationError):
            Lexicon(terms)
