import random

import pytest
import sympy

from qosp.linalg import NOT_SCALAR, EchelonSpan, ExactMatrix, nullspace
from qosp.scalars import root_field


def random_matrix(F, d, rng, density=0.6):
    return ExactMatrix(F, [[rng.randint(-3, 3) * F.generator ** rng.randint(0, 3) if rng.random() < density else 0 for _ in range(d)] for _ in range(d)])


def test_inverse_round_trip():
    F = root_field(3)
    rng = random.Random(5)
    for _ in range(10):
        M = random_matrix(F, 4, rng, density=0.9)
        if M.is_invertible():
            assert M * M.inverse() == ExactMatrix.identity(F, 4)
            assert M**-2 * M**2 == ExactMatrix.identity(F, 4)


def test_rank_matches_sympy_on_rationals():
    F = root_field(4)
    rng = random.Random(9)
    for _ in range(20):
        rows = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(5)]
        rows[4] = [a + b for a, b in zip(rows[0], rows[1])]
        assert ExactMatrix(F, rows).rank() == sympy.Matrix(rows).rank()


def test_singular_inverse_raises():
    F = root_field(3)
    with pytest.raises(ZeroDivisionError):
        ExactMatrix(F, [[1, 2], [2, 4]]).inverse()


def test_scalar_value():
    F = root_field(3)
    assert ExactMatrix.identity(F, 3).scale(F.q).scalar_value() == F.q
    assert ExactMatrix.diag(F, [1, 2]).scalar_value() is NOT_SCALAR


def test_nullspace_solutions():
    F = root_field(5)
    rng = random.Random(2)
    for _ in range(10):
        eqs = [{j: F(rng.randint(-2, 2)) * F.generator**j for j in range(6) if rng.random() < 0.5} for _ in range(3)]
        basis = nullspace(eqs, 6, F)
        for v in basis:
            for eq in eqs:
                assert sum((c * v[j] for j, c in eq.items()), F.zero) == 0
        span = EchelonSpan()
        for eq in eqs:
            span.add(eq)
        assert len(basis) == 6 - span.dim


def test_echelon_span_membership():
    F = root_field(3)
    span = EchelonSpan()
    assert span.add({0: F.one, 1: F.q})
    assert not span.add({0: F(2), 1: F.q * 2})
    assert span.contains({0: F(-1), 1: -F.q})
    assert not span.contains({1: F.one})
