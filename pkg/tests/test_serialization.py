import json

import numpy as np
import pytest

from gen import random_realization

from realcomp import DimensionMismatch, Realization
from realcomp.serialization import (DocumentError, decode_matrix, dumps, encode_matrix, load,
                                    loads, realization_from_dict, realization_to_dict, save)


def test_round_trip_is_bit_exact(tmp_path):
    rng = np.random.default_rng(61)
    for n, p, m in [(0, 1, 1), (3, 2, 4), (1, 3, 1)]:
        R = random_realization(rng, n, p, m) if n else Realization.constant(rng.normal(size=(p, m)))
        R = Realization(R.A / 3, R.B * np.pi, R.C, R.D) if n else R
        path = tmp_path / "r.json"
        save(R, path, name="x", notes="y")
        S = load(path)
        assert S.shape == R.shape
        assert all(np.array_equal(getattr(R, k), getattr(S, k)) for k in "ABCD")


def test_dumps_layout():
    text = dumps(Realization([[-1.0]], [[1.0]], [[1.0]], [[0.0]]), name="rc")
    doc = json.loads(text)
    assert doc["name"] == "rc" and doc["A"] == [[[-1.0, 0.0]]]
    assert '"A": [\n  [[-1.0, 0.0]]\n ]' in text


def test_bare_reals_and_empty_blocks():
    doc = {"n": 0, "p": 1, "m": 2, "A": [], "B": [], "C": [[]], "D": [[1, [2.0, -1.0]]]}
    R = realization_from_dict(doc)
    assert R.n == 0 and np.array_equal(R.D, [[1, 2 - 1j]])
    assert encode_matrix(np.zeros((0, 3))) == []
    assert decode_matrix([], (0, 3)).shape == (0, 3)


def test_bad_documents():
    good = realization_to_dict(Realization([[-1.0]], [[1.0]], [[1.0]], [[0.0]]))
    cases = [
        "not json",
        "[1, 2]",
        json.dumps({k: v for k, v in good.items() if k != "D"}),
        json.dumps({**good, "n": -1}),
        json.dumps({**good, "n": True}),
        json.dumps({**good, "A": [[[1.0, 0.0, 2.0]]]}),
        json.dumps({**good, "A": [[True]]}),
        json.dumps({**good, "A": [["x"]]}),
        json.dumps({**good, "A": [[1e400]]}),
    ]
    for text in cases:
        with pytest.raises(DocumentError):
            loads(text)
    with pytest.raises(DimensionMismatch):
        loads(json.dumps({**good, "A": [[1.0, 2.0]]}))
    with pytest.raises(DocumentError):
        encode_matrix([[np.inf]])
