import io

import numpy as np
import pytest

from regqa import (DataMatrix, InputDataError, column, ingest_csv, normalize,
                   write_csv)


def test_ingest_basic():
    m = ingest_csv(io.StringIO("a,b\n1,2\n3,4\n5,6"))
    assert m.n_rows == 3 and m.n_cols == 2
    assert m.column_names == ("a", "b")
    assert np.array_equal(m.values, [[1, 2], [3, 4], [5, 6]])
    assert m.dropped_rows == 0


def test_ingest_single_row_rejected():
    with pytest.raises(InputDataError, match="fewer than 2"):
        ingest_csv(io.StringIO("a,b\n1,2"))


def test_ingest_drops_bad_rows_and_counts():
    m = ingest_csv(io.StringIO("a,b\n1,2\nx,3\n4,5\n6,7"))
    assert m.n_rows == 3
    assert m.dropped_rows == 1


def test_ingest_error_names_first_bad_cell():
    with pytest.raises(InputDataError) as exc:
        ingest_csv(io.StringIO("a,b\n1,oops\n2,3"))
    msg = str(exc.value)
    assert "row 1" in msg and "'b'" in msg and "oops" in msg


def test_ingest_empty_and_duplicates():
    with pytest.raises(InputDataError, match="empty"):
        ingest_csv(io.StringIO(""))
    with pytest.raises(InputDataError, match="duplicate"):
        ingest_csv(io.StringIO("a,a\n1,2\n3,4"))


def test_ingest_entirely_missing_column():
    with pytest.raises(InputDataError, match="entirely missing"):
        ingest_csv(io.StringIO("a,b\n1,\n2,\n3,"))


def test_ingest_rejects_nan_inf_cells():
    m = ingest_csv(io.StringIO("a,b\n1,2\nnan,3\ninf,4\n5,6"))
    assert m.n_rows == 2
    assert m.dropped_rows == 2


def test_ingest_no_header_and_bytes():
    m = ingest_csv(b"1,2\n3,4", header=False)
    assert m.column_names == ("x1", "x2")
    assert m.n_rows == 2


def test_ingest_ignore_columns():
    m = ingest_csv(io.StringIO("a,y,b\n1,9,2\n3,9,4"), ignore_columns=("y",))
    assert m.column_names == ("a", "b")
    with pytest.raises(InputDataError, match="not present"):
        ingest_csv(io.StringIO("a,b\n1,2\n3,4"), ignore_columns=("z",))


def test_ingest_custom_delimiter():
    m = ingest_csv(io.StringIO("a;b\n1;2\n3;4"), delimiter=";")
    assert m.n_cols == 2


def test_matrix_validation():
    with pytest.raises(InputDataError):
        DataMatrix(np.array([[1.0, np.nan], [2.0, 3.0]]), ("a", "b"))
    with pytest.raises(InputDataError):
        DataMatrix(np.array([[1.0, 2.0]]), ("a", "b"))
    with pytest.raises(InputDataError):
        DataMatrix(np.array([[1.0, 2.0], [3.0, 4.0]]), ("a", "a"))


def test_matrix_values_are_read_only():
    m = DataMatrix([[1, 2], [3, 4]], ("a", "b"))
    with pytest.raises(ValueError):
        m.values[0, 0] = 9.0


def test_normalize_affine_map():
    m = DataMatrix([[2, 7], [4, 7], [6, 7]], ("a", "b"))
    nv = normalize(m)
    assert np.allclose(nv.values[:, 0], [0, 0.5, 1])
    assert np.all(nv.values[:, 1] == 0.5)
    assert nv.constant_columns == frozenset({1})


def test_normalize_two_point_column():
    nv = normalize(DataMatrix([[0], [1]], ("a",)))
    assert np.array_equal(nv.values[:, 0], [0, 1])
    assert not nv.constant_columns


def test_normalize_idempotent():
    rng = np.random.default_rng(3)
    m = DataMatrix(rng.normal(size=(40, 3)) * 7 + 2, ("a", "b", "c"))
    once = normalize(m)
    twice = normalize(DataMatrix(once.values, m.column_names))
    assert np.all(np.abs(once.values - twice.values) <= 1e-12)


def test_normalize_preserves_order():
    rng = np.random.default_rng(4)
    col = rng.normal(size=50)
    nv = normalize(DataMatrix(np.column_stack([col, col * 0 + 1.5, -col]),
                              ("a", "b", "c")))
    order = np.argsort(col)
    assert np.all(np.diff(nv.values[order, 0]) >= 0)
    assert np.all(np.diff(nv.values[order, 2]) <= 0)


def test_column_is_one_based():
    m = DataMatrix([[1, 2], [3, 4], [5, 6]], ("a", "b"))
    assert np.array_equal(column(m, 2), [2, 4, 6])
    assert np.array_equal(column(m, m.n_cols), [2, 4, 6])
    with pytest.raises(IndexError):
        column(m, 0)
    with pytest.raises(IndexError):
        column(m, 3)


def test_csv_roundtrip_is_exact(tmp_path):
    rng = np.random.default_rng(11)
    m = DataMatrix(rng.normal(size=(25, 3)) * 1e3, ("a", "b", "c"))
    path = tmp_path / "m.csv"
    write_csv(m, path)
    back = ingest_csv(path)
    assert back.column_names == m.column_names
    rel = np.abs(back.values - m.values) / np.maximum(np.abs(m.values), 1e-300)
    assert rel.max() <= 1e-9
