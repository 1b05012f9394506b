import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from assortativity.errors import AllZero, MissingThreshold, ParseError
from assortativity.ingest import ingest_csv
from assortativity.matrix import MatchingMatrix

DATA = Path(__file__).parent / "data"


def write(tmp_path, text, name="couples.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_one_row_per_cell(tmp_path):
    path = write(tmp_path, "man_type,woman_type\nH,H\nH,L\nL,H\nL,L\n")
    assert ingest_csv(path) == MatchingMatrix(1, 1, 1, 1)


def test_weights_accumulate(tmp_path):
    path = write(tmp_path, "man_type,woman_type,weight\nH,H,1\nH,L,1\nL,H,3\nL,L,2\n")
    assert ingest_csv(path) == MatchingMatrix(1, 1, 3, 2)


def test_weighted_fixture_is_exact():
    m = ingest_csv(DATA / "couples_weighted.csv")
    assert m == MatchingMatrix(1, 1, 3, 2)


def test_decimal_weights_are_exact(tmp_path):
    rows = "\n".join(["H,H,0.1"] * 10)
    path = write(tmp_path, "man_type,woman_type,weight\n" + rows + "\nL,L,1e-3\n")
    m = ingest_csv(path)
    assert m.a == 1 and m.d == F(1, 1000)


def test_numeric_types_need_threshold(tmp_path):
    path = write(tmp_path, "man_type,woman_type\n50000,20000\n10000,90000\n")
    with pytest.raises(MissingThreshold):
        ingest_csv(path)
    assert ingest_csv(path, threshold="30000") == MatchingMatrix(0, 1, 1, 0)


def test_threshold_is_strict(tmp_path):
    path = write(tmp_path, "man_type,woman_type\n30000,30000.01\n")
    assert ingest_csv(path, threshold=30000) == MatchingMatrix(0, 0, 1, 0)


def test_parse_errors_carry_line_numbers(tmp_path):
    path = write(tmp_path, "man_type,woman_type,weight\nH,H,1\nH,X,1\n")
    with pytest.raises(ParseError, match="line 3"):
        ingest_csv(path)
    path = write(tmp_path, "man_type,woman_type,weight\nH,H,-1\n")
    with pytest.raises(ParseError, match="line 2"):
        ingest_csv(path)
    path = write(tmp_path, "man,woman\nH,H\n")
    with pytest.raises(ParseError, match="header"):
        ingest_csv(path)


def test_all_zero(tmp_path):
    with pytest.raises(AllZero):
        ingest_csv(write(tmp_path, "man_type,woman_type\n"))
    with pytest.raises(AllZero):
        ingest_csv(write(tmp_path, "man_type,woman_type,weight\nH,H,0\n"))


def test_row_order_does_not_matter(tmp_path):
    lines = (DATA / "couples_weighted.csv").read_text().splitlines()
    header, rows = lines[0], lines[1:]
    expected = ingest_csv(DATA / "couples_weighted.csv")
    rng = random.Random(0)
    for i in range(5):
        rng.shuffle(rows)
        assert ingest_csv(write(tmp_path, "\n".join([header] + rows) + "\n", f"p{i}.csv")) == expected
