import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tripartite_ppt import matrixio, states
from tripartite_ppt.matrixio import MatrixFormatError

any_float = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, (2, 8, 8), elements=any_float), st.none() | st.text(max_size=20))
def test_round_trip_bit_exact(parts, label):
    m = parts[0] + 1j * parts[1]
    back = matrixio.loads(matrixio.dumps(m, label))
    assert back.label == label and back.basis == "ABC"
    assert back.matrix.tobytes() == m.tobytes()


def test_round_trip_keeps_negative_zero():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = complex(-0.0, -0.0)
    back = matrixio.loads(matrixio.dumps(m)).matrix
    assert np.signbit(back[0, 0].real) and np.signbit(back[0, 0].imag)


def test_document_layout():
    text = matrixio.dumps(states.ghz(), "ghz")
    doc = json.loads(text)
    assert list(doc) == ["basis", "dim", "entries", "label"]
    assert doc["basis"] == "ABC" and doc["dim"] == 8
    assert doc["entries"][0][7][0] == pytest.approx(0.5, abs=1e-15)
    # one line per matrix row
    assert len(text.splitlines()) == 8 + 7


def test_four_by_four_basis():
    doc = json.loads(matrixio.dumps(np.eye(4) / 4))
    assert doc["basis"] == "XY" and "label" not in doc


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"dim": 8, "basis": "ABC"}',
        '{"dim": 5, "basis": "ABC", "entries": []}',
        '{"dim": 4, "basis": "ABC", "entries": []}',
        '{"dim": 4, "basis": "XY", "entries": [[[1, 0]]]}',
        '{"dim": true, "basis": "XY", "entries": []}',
        '{"dim": 4, "basis": "XY", "entries": [[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],["x",0]]]}',
        '{"dim": 4, "basis": "XY", "entries": [[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[NaN,0]]]}',
        '{"dim": 4, "basis": "XY", "label": 3, "entries": [[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]}',
    ],
)
def test_malformed_documents(text):
    with pytest.raises(MatrixFormatError):
        matrixio.loads(text)


def test_dumps_rejects_nan_and_bad_shape():
    m = np.eye(4)
    m[1, 1] = np.nan
    with pytest.raises(ValueError):
        matrixio.dumps(m)
    with pytest.raises(MatrixFormatError):
        matrixio.dumps(np.eye(3))


def test_read_write_file(tmp_path):
    path = tmp_path / "w.json"
    rho = states.werner_embedded(0.3)
    matrixio.write(str(path), rho, "w")
    f = matrixio.read(str(path))
    np.testing.assert_array_equal(f.matrix, rho)
    with pytest.raises(MatrixFormatError):
        matrixio.read(str(tmp_path / "missing.json"))
