import json
import math

import pytest

import lcscount


def test_textbook_pair():
    a, b = "ABCBDAB", "BDCABA"
    assert lcscount.lcs_length(a, b) == 4
    assert lcscount.count_distinct(a, b) == (4, 3)
    assert lcscount.count_distinct(a, b, algorithm="full") == (4, 3)
    assert lcscount.count_embeddings(a, b) == lcscount.oracle_embeddings(a, b)


def test_counts_are_exact_python_ints():
    length, count = lcscount.count_embeddings("a" * 40, "a" * 80)
    assert length == 40
    assert count == math.comb(80, 40)
    assert count > 2**64


def test_input_kinds():
    assert lcscount.count_embeddings(b"aab", b"ab") == (2, 2)
    assert lcscount.count_embeddings(["x", "y"], ["y", "x"]) == (1, 2)
    assert lcscount.count_distinct((1, 2, 3), [3, 2, 1]) == (1, 3)
    assert lcscount.count_distinct("", "") == (0, 1)


def test_summarize():
    s = lcscount.summarize("ab", "ba", distinct=False)
    assert s == {"lcs_length": 1, "distinct_count": None, "embedding_count": 2}


def test_oracle_guard_and_bad_algorithm():
    with pytest.raises(ValueError):
        lcscount.oracle_distinct("a" * 19, "a")
    with pytest.raises(ValueError):
        lcscount.count_distinct("a", "a", algorithm="cubic")


def test_cli_roundtrip():
    code, out, err = lcscount.run_cli(
        ["--mode", "all", "--format", "json", "--text", "ab", "--text", "ba"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["distinct_lcs_count"] == "2"
    assert doc["embedding_count"] == "2"

    code, out, _ = lcscount.run_cli(["--file", "-", "--text", "ba", "--mode", "distinct"], stdin="ab")
    assert (code, out) == (0, "distinct: 2\n")
    assert lcscount.run_cli(["--text", "only-one"])[0] == 1
