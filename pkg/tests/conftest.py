import random

import pytest

from polardeg.fields import GF, QQ, DEFAULT_PRIME
from polardeg.parse import parse_poly
from polardeg.poly import MultiPoly


@pytest.fixture(scope="session")
def Fp():
    return GF(DEFAULT_PRIME)


def qq(text: str, nvars: int = 3) -> MultiPoly:
    return parse_poly(text, nvars, QQ)


def gfp(text: str, nvars: int = 3, prime: int = DEFAULT_PRIME) -> MultiPoly:
    return parse_poly(text, nvars, GF(prime))


def random_poly(field, nvars, max_degree, n_terms, rng: random.Random) -> MultiPoly:
    """Small random polynomial with exact coefficients, possibly zero."""
    items = []
    for _ in range(n_terms):
        exp = [0] * nvars
        for _ in range(rng.randrange(max_degree + 1)):
            exp[rng.randrange(nvars)] += 1
        items.append((tuple(exp), field.from_int(rng.randrange(-9, 10))))
    return MultiPoly.from_terms(field, nvars, items)
