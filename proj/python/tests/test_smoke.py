from fractions import Fraction

import pytest

import seqrecover


def test_distances():
    assert seqrecover.distance("edit", "0110", "010") == 1
    assert seqrecover.distance("dtw", "010110", "010") == 1
    assert seqrecover.distance("dtw", "0110", "1/2") == 2
    assert seqrecover.distance("dtw2", "0110", "1/2") == Fraction(1)
    assert seqrecover.distance("frechet", "0110", "0,1/3,1,0") == Fraction(1, 3)
    assert seqrecover.distance("frechet", "0110", "0,0,1,1,0") == 0
    assert seqrecover.dtw_via_mss("010110", "010") == 1


def test_witness_pair_agrees_on_short_queries():
    for q in ["0", "01", "0110", "101", "01010", "0011100"]:
        assert seqrecover.distance("dtw", "010110", q) == seqrecover.distance("dtw", "011010", q)


def test_normalize_and_errors():
    assert seqrecover.normalize("0, 1/2 ,1") == "0,1/2,1"
    with pytest.raises(seqrecover.ParseError):
        seqrecover.normalize("0,2/4")
    with pytest.raises(seqrecover.UnsupportedAlphabet):
        seqrecover.distance("edit", "01", "0,1/2")
    with pytest.raises(seqrecover.Error):
        seqrecover.recover("no.such.strategy", "01", 4)
    with pytest.raises(ValueError):
        seqrecover.recover("dtw.adaptive.half", "", 4)


def test_recover_every_strategy():
    ids = [s["id"] for s in seqrecover.strategies()]
    assert len(ids) == 13
    for sid in ids:
        report = seqrecover.recover(sid, "0110", 5)
        assert report["ok"], report
        assert report["hidden"] == "0110"


def test_recover_transcript():
    report = seqrecover.recover("dtw.nonadaptive.twoextra", "1101", 6, transcript=True)
    assert report["recovered"] == "1101"
    assert report["queries_used"] == 8
    assert len(report["transcript"]["queries"]) == 8


def test_table_and_verify():
    rows = {r["strategy"]: r for r in seqrecover.table(4)}
    assert rows["dtw.nonadaptive.fourquery"]["max_queries"] == 4
    assert all(r["failures"] == 0 for r in rows.values())
    assert "witness" in seqrecover.suite_ids()
    reports = seqrecover.verify("runs-window", c=1, max_query_len=10)
    assert reports and all(r["result"] for r in reports)
    assert seqrecover.query_cap(10) == 28
