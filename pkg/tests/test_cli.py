import csv
import io
import json
import subprocess
import sys
import time

import jsonschema
import pytest

from goodint.cli import ENVELOPE_SCHEMA, SCAN_COLUMNS, run


def _json(argv):
    code, out = run(argv)
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE_SCHEMA)
    return code, doc


def test_classify_single():
    code, doc = _json(["classify", "--a", "2", "--b", "1", "--l", "3"])
    assert code == 0
    assert doc["results"]["class"] == "oddly-good"
    assert doc["results"]["witness"] == 1
    assert doc["command"] == "classify" and doc["schema_version"] == "1"


def test_classify_range_csv():
    code, out = run(["classify", "--a", "2", "--b", "1", "--from", "1", "--to", "20", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 20
    assert list(rows[0]) == ["l", "class", "witness", "ord", "v2ord"]
    assert rows[4] == {"l": "5", "class": "evenly-good", "witness": "2", "ord": "4", "v2ord": "2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--a", "2", "--b", "4", "--l", "3"],
        ["classify", "--a", "2", "--b", "1"],
        ["classify", "--a", "2", "--b", "1", "--from", "5", "--to", "2"],
        ["group", "--factors", "2,x"],
        ["fixedset", "--q", "3", "--group", "3"],
        ["hullavg", "--p", "3", "--nu", "1", "--k", "0", "--group", "3"],
        ["hullavg", "--p", "4", "--nu", "1", "--k", "0", "--group", "3"],
        ["verify", "--suite", "huge"],
        ["nonsense"],
    ],
)
def test_usage_and_domain_errors_exit_2(argv):
    code, _ = run(argv)
    assert code == 2


def test_group_orders():
    _, doc = _json(["group", "--factors", "2,4", "orders"])
    assert doc["results"]["orders"] == {"1": 1, "2": 3, "4": 4}
    _, doc = _json(["group", "--factors", "1", "orders"])
    assert doc["results"]["orders"] == {"1": 1}
    code, out = run(["group", "--factors", "2,4,3", "orders", "--format", "csv"])
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 6


def test_group_orders_rows_follow_divisors_of_exponent():
    _, doc = _json(["group", "--factors", "2,4,3", "orders"])
    assert list(doc["results"]["orders"]) == ["1", "2", "3", "4", "6", "12"]
    assert sum(doc["results"]["orders"].values()) == 24


def test_group_classes():
    code, doc = _json(["group", "--factors", "7", "classes", "--q", "2"])
    assert code == 0
    text = json.dumps(doc["results"])
    assert "II" in text


def test_fixedset():
    code, doc = _json(["fixedset", "--q", "2", "--group", "3", "--inner", "E", "--method", "all"])
    assert code == 0 and doc["results"]["size"] == 3 and doc["results"]["agree"]
    code, doc = _json(["fixedset", "--q", "2", "--group", "5", "--inner", "H", "--method", "all"])
    assert code == 0 and doc["results"]["size"] == 1


def test_fixedset_mismatch_exits_3(monkeypatch):
    from goodint import cli

    monkeypatch.setitem(cli._FIXED_METHODS, ("E", "closed"), lambda g, q: -1)
    code, doc = _json(["fixedset", "--q", "2", "--group", "3", "--method", "all"])
    assert code == 3
    assert not doc["results"]["agree"]


def test_hullavg():
    code, doc = _json(["hullavg", "--p", "2", "--nu", "1", "--k", "1", "--group", "3", "--inner", "E", "--verify"])
    assert code == 0
    assert doc["results"]["average"] == {"fraction": "1/1", "decimal": "1"}
    assert doc["results"]["verified"] is True
    _, doc = _json(["hullavg", "--p", "2", "--nu", "1", "--k", "0", "--group", "5", "--inner", "E"])
    assert doc["results"]["average"]["fraction"] == "0/1"
    assert doc["results"]["is_zero"] is True
    _, doc = _json(["hullavg", "--p", "2", "--nu", "1", "--k", "0", "--group", "7"])
    assert doc["results"]["average"] == {"fraction": "3/2", "decimal": "1.5"}


def test_hullavg_verify_mismatch_exits_3(monkeypatch):
    from fractions import Fraction

    from goodint import hull

    monkeypatch.setattr(hull, "avg_hull_bruteforce", lambda *a, **k: Fraction(99))
    code, _ = run(["hullavg", "--p", "2", "--nu", "1", "--k", "1", "--group", "3", "--verify"])
    assert code == 3


def test_hullscan_csv():
    code, out = run(["hullscan", "--p", "2", "--nu", "1", "--k", "0,1", "--groups", "3;5", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == SCAN_COLUMNS
    assert [(r["group"], r["k"], r["average"]) for r in rows] == [
        ("3", "0", "0/1"),
        ("3", "1", "1/1"),
        ("5", "0", "0/1"),
        ("5", "1", "5/3"),
    ]


def test_hullscan_inline_errors_and_max_order():
    code, doc = _json(["hullscan", "--p", "3", "--nu", "1", "--k", "0", "--groups", "3;4", "--inner", "both"])
    assert code == 0
    errors = [r["error"] for r in doc["results"]]
    assert errors[0] and errors[1] and errors[2] is None and errors[3] is None
    _, doc = _json(["hullscan", "--p", "2", "--nu", "1", "--k", "0", "--max-order", "9"])
    assert [r["group"] for r in doc["results"]] == ["1", "3", "5", "7", "9", "3,3"]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--a", "3", "--b", "1", "--from", "1", "--to", "50"],
        ["hullscan", "--p", "2", "--nu", "1", "--k", "0,1", "--max-order", "15", "--inner", "both"],
        ["group", "--factors", "3,5", "classes", "--q", "2"],
        ["fixedset", "--q", "7", "--group", "2,4,3", "--method", "all", "--inner", "H"],
    ],
)
def test_output_is_byte_identical(argv):
    assert run(argv) == run(argv)


def test_max_enum_override(monkeypatch):
    monkeypatch.setenv("GOODINT_MAX_ENUM", "5")
    code, _ = run(["fixedset", "--q", "2", "--group", "7", "--method", "direct"])
    assert code == 2
    code, doc = _json(["fixedset", "--q", "2", "--group", "7", "--method", "closed"])
    assert code == 0 and doc["results"]["size"] == 1


def test_verify_small_passes_quickly():
    start = time.perf_counter()
    code, doc = _json(["verify", "--suite", "small"])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert doc["results"]["passed"]
    assert all(c["passed"] for c in doc["results"]["checks"])
    assert elapsed < 60


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "goodint", "classify", "--a", "2", "--b", "1", "--l", "7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["class"] == "bad"
