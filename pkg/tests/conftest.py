import numpy as np
import pytest

from quadpencil import QuadraticPencil


@pytest.fixture
def diag_pencil():
    """Two uncoupled modes: one overdamped (roots -3 +- sqrt7), one not."""
    return QuadraticPencil.from_matrices(np.diag([2.0, 8.0]), np.diag([6.0, 2.0]))


@pytest.fixture
def undamped_pencil():
    return QuadraticPencil.from_matrices(np.diag([2.0, 8.0]), np.zeros((2, 2)))


@pytest.fixture
def critical_1x1():
    """Double root at -1 sitting exactly at the p-minus supremum."""
    return QuadraticPencil.from_matrices([[1.0]], [[2.0]])


@pytest.fixture
def overdamped_1x1():
    return QuadraticPencil.from_matrices([[2.0]], [[6.0]])
