import random
from fractions import Fraction

import pytest

from zetalab import Matrix, SuperRealization


def random_fraction(rng, num_range=3, dens=(1, 2)):
    return Fraction(rng.randint(-num_range, num_range), rng.choice(dens))


def random_matrix(rng, n, num_range=3, dens=(1, 2)):
    return Matrix(n, n, [random_fraction(rng, num_range, dens) for _ in range(n * n)])


def random_invertible_matrix(rng, n, num_range=3, dens=(1, 2)):
    if n == 0:
        return Matrix(0, 0, [])
    while True:
        m = random_matrix(rng, n, num_range, dens)
        if m.det() != 0:
            return m


def random_int_matrix(rng, rows, cols, bound=4):
    return Matrix(rows, cols, [rng.randint(-bound, bound) for _ in range(rows * cols)])


def random_unimodular(rng, n, ops=None):
    """Product of elementary integer row operations; |det| = 1."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(ops if ops is not None else 2 * n + 2):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    if rng.random() < 0.5 and n > 1:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    return Matrix.from_rows(rows)


def random_invertible_realization(rng, max_dim=4):
    """Realization with both graded pieces invertible; dims may be zero."""
    m = rng.randint(0, max_dim)
    k = rng.randint(0, max_dim)
    return SuperRealization(
        random_invertible_matrix(rng, m), random_invertible_matrix(rng, k)
    )


@pytest.fixture(scope="session")
def rng():
    return random.Random(20260826)
