import random

import pytest

from qosp.pbw import AlgebraElement
from qosp.scalars import generic_field, root_field


def random_scalar(field, rng, spread=3):
    """A small random nonzero-ish scalar: integer combination of low powers of s (or z)."""
    base = field.q_half if not field.is_root else field.generator
    x = field.zero
    for j in range(rng.randint(1, 3)):
        x = x + base ** rng.randint(-2, 2) * rng.randint(-spread, spread)
    return x if x else field.one


def random_element(field, rng, max_ab=3, max_c=2, max_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = (rng.randint(0, max_ab), rng.randint(0, max_ab), rng.randint(-max_c, max_c))
        terms[mono] = random_scalar(field, rng)
    return AlgebraElement(field, terms)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=["generic", 5], ids=["generic", "l5"])
def field(request):
    return generic_field() if request.param == "generic" else root_field(request.param)
