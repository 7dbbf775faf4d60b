import random

import pytest

from polyeig import GF, QQ, Poly, PolyMatrix


@pytest.fixture
def rng():
    return random.Random(20260823)


def random_matrix(rng, m, n, d, field, coeff_range=(-3, 3)):
    """Random m x n matrix of degree exactly d."""
    while True:
        rows = []
        for _ in range(m):
            row = []
            for _ in range(n):
                if field.is_rational:
                    coeffs = [rng.randint(*coeff_range) for _ in range(d + 1)]
                else:
                    coeffs = [rng.randrange(field.p) for _ in range(d + 1)]
                row.append(Poly.make(coeffs, field))
            rows.append(row)
        P = PolyMatrix.make(rows, field)
        if not P.is_zero and max(e.degree for r in P.entries for e in r) == d:
            return P


FIELDS = [QQ, GF(2), GF(3)]
