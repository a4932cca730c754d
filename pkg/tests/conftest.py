import numpy as np
import pytest

from clbc_config import EXAMPLE_MATRIX_FILE
from clbc_engine import clbc_run
from gf2_core import BinaryWord, GF2Matrix
from matrix_io import load_matrix

EXAMPLE_N = 10


def word(*coordinates, n=EXAMPLE_N):
    """e_i + e_j + ... as a BinaryWord."""
    return BinaryWord.from_support(n, coordinates)


def random_matrix(rng, n_range=(4, 14)):
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    r = int(rng.integers(1, n + 1))
    return GF2Matrix(rng.integers(0, 2, size=(r, n)))


def random_matrices(count, seed, n_range=(4, 14)):
    rng = np.random.default_rng(seed)
    return [random_matrix(rng, n_range) for _ in range(count)]


@pytest.fixture(scope="session")
def example_matrix():
    return load_matrix(EXAMPLE_MATRIX_FILE)


@pytest.fixture(scope="session")
def example_result(example_matrix):
    return clbc_run(example_matrix)


@pytest.fixture
def even_matrix():
    return GF2Matrix([[1, 1]])


@pytest.fixture
def repetition_matrix():
    return GF2Matrix([[1, 1, 0], [1, 0, 1]])


@pytest.fixture
def hamming_matrix():
    return GF2Matrix([
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ])
