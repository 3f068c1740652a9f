"""Parity tests between the compiled SNF kernel and the pure-Python one."""

import random

import pytest

from wes6 import _snf_py, backend
from wes6.matrices import IntMatrix, snf

compiled = pytest.mark.skipif(
    not backend.HAVE_COMPILED, reason="compiled kernel not built"
)


def random_entries(rng, rows, cols, bound):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_backend_constant_consistent():
    assert backend.BACKEND in ("compiled", "pure-python")
    assert (backend.BACKEND == "compiled") == backend.HAVE_COMPILED


@compiled
def test_bit_identical_small_matrices():
    from wes6 import _snf_cy

    rng = random.Random(99)
    for _ in range(300):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        entries = random_entries(rng, rows, cols, 9)
        assert _snf_cy.snf_triple(entries, rows, cols) == _snf_py.snf_triple(
            entries, rows, cols
        )


@compiled
def test_compiled_raises_on_overflow():
    from wes6 import _snf_cy

    big = 2**62
    entries = [[big, big - 1], [big - 3, big - 7]]
    with pytest.raises(OverflowError):
        _snf_cy.snf_triple(entries, 2, 2)


@compiled
def test_dispatcher_falls_back_on_overflow():
    big = 2**62
    entries = [[big, big - 1], [big - 3, big - 7]]
    assert backend.snf_triple(entries, 2, 2) == _snf_py.snf_triple(entries, 2, 2)


def test_snf_exact_above_int64():
    # products above 2^63 must come out exact regardless of the backend
    n = 2**70 + 1
    res = snf(IntMatrix.from_rows([[n, 0], [0, n + 1]]))
    assert res.diagonal == (1, n * (n + 1))
    assert res.U @ IntMatrix.from_rows([[n, 0], [0, n + 1]]) @ res.V == res.D
