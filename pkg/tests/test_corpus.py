import dataclasses
import json
from pathlib import Path

import pytest

from spinent import BUILTIN_CORPUS, CorpusEntry, corpus_verify, load_corpus
from spinent.corpus import dump_corpus

DATA = Path(__file__).parent / "data"


def test_builtin_corpus_passes():
    verdicts = corpus_verify(BUILTIN_CORPUS)
    assert len(verdicts) == 11
    assert all(v.passed for v in verdicts), [v for v in verdicts if not v.passed]


def test_regression_corpus_passes():
    entries = load_corpus(DATA / "regression_corpus.jsonl")
    assert len(entries) == 12
    verdicts = corpus_verify(entries)
    assert all(v.passed for v in verdicts)
    assert [v.entry for v in verdicts] == entries


def test_wrong_expectation_fails_only_that_row():
    entries = list(BUILTIN_CORPUS)
    entries[2] = dataclasses.replace(entries[2], expected_E=0.51)
    verdicts = corpus_verify(entries)
    assert [v.passed for v in verdicts] == [i != 2 for i in range(len(entries))]
    assert verdicts[2].diff == pytest.approx(0.01, abs=1e-9)


def test_empty_corpus():
    assert corpus_verify([]) == []


def test_bad_rows_are_failures_not_errors():
    verdicts = corpus_verify([CorpusEntry("|0>", 0.0), CorpusEntry("1/2|0", 0.0)])
    assert [v.passed for v in verdicts] == [False, False]
    assert "UnsupportedStateError" in verdicts[0].error
    assert "StateParseError" in verdicts[1].error


def test_grid_method_on_builtin():
    verdicts = corpus_verify(BUILTIN_CORPUS, method="grid", tolerance=1e-6)
    assert all(v.passed for v in verdicts)


def test_load_dump_round_trip(tmp_path):
    p = tmp_path / "c.jsonl"
    dump_corpus(BUILTIN_CORPUS, p)
    assert load_corpus(p) == list(BUILTIN_CORPUS)


def test_load_rejects_bad_lines(tmp_path):
    p = tmp_path / "c.jsonl"
    p.write_text(json.dumps({"expr": "|00>"}) + "\n")
    with pytest.raises(ValueError, match=":1:"):
        load_corpus(p)


def test_entry_requires_finite_expectation():
    with pytest.raises(ValueError):
        CorpusEntry("|00>", float("nan"))
